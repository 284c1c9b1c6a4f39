#include "hdesc/hilbert.hpp"

#include <set>

namespace hdesc {

namespace {

// strip p from q, returning (valuation, unit part as a ratio of p-units)
long split_rat(const Rat& q, const Int& p, Int& unum, Int& uden) {
    unum = q.get_num();
    uden = q.get_den();
    long v = split_valuation(unum, p) - split_valuation(uden, p);
    return v;
}

int nonresidue_bit(const Int& num, const Int& den, const Int& p) {
    // 0 if num/den is a QR mod p, 1 otherwise
    int l = legendre(num, p) * legendre(den, p);
    return l == 1 ? 0 : 1;
}

}  // namespace

int hilbert_symbol(const Rat& x, const Rat& y, const Place& v) {
    if (x == 0 || y == 0) throw std::invalid_argument("hilbert_symbol with zero argument");
    if (v.infinite) return (x < 0 && y < 0) ? 1 : 0;
    const Int& p = v.p;
    Int un, ud, wn, wd;
    long a = split_rat(x, p, un, ud);
    long b = split_rat(y, p, wn, wd);
    if (p != 2) {
        int eps = mod(p, 4) == 3 ? 1 : 0;  // (p-1)/2 mod 2
        int bit = (a & 1) && (b & 1) ? eps : 0;
        if (b & 1) bit ^= nonresidue_bit(un, ud, p);
        if (a & 1) bit ^= nonresidue_bit(wn, wd, p);
        return bit;
    }
    // p = 2: (x,y)_2 = eps(u)eps(w) + a*omega(w) + b*omega(u)  mod 2
    auto eps2 = [](const Int& n, const Int& d) {
        Int u = mod(n * invmod(d, Int(8)), Int(8));
        return (u == 3 || u == 7) ? 1 : 0;  // (u-1)/2 mod 2
    };
    auto omega2 = [](const Int& n, const Int& d) {
        Int u = mod(n * invmod(d, Int(8)), Int(8));
        return (u == 3 || u == 5) ? 1 : 0;  // (u^2-1)/8 mod 2
    };
    int bit = eps2(un, ud) & eps2(wn, wd);
    if (a & 1) bit ^= omega2(wn, wd);
    if (b & 1) bit ^= omega2(un, ud);
    return bit;
}

int hilbert_symbol(const Int& x, const Int& y, const Place& v) {
    return hilbert_symbol(Rat(x), Rat(y), v);
}

std::vector<Place> hilbert_support(const Rat& x, const Rat& y, const std::vector<Int>& hints) {
    std::set<Int> ps{Int(2)};
    for (const Rat& q : {x, y}) {
        for (const Int& n : {Int(q.get_num()), Int(q.get_den())}) {
            if (abs(n) == 1) continue;
            for (auto& [p, e] : factor(n, hints).factors) ps.insert(p);
        }
    }
    std::vector<Place> out;
    for (const Int& p : ps) out.push_back(Place::prime(p));
    out.push_back(Place::real());
    return out;
}

bool is_local_square(const Rat& x, const Place& v) {
    if (x == 0) throw std::invalid_argument("is_local_square(0)");
    if (v.infinite) return x > 0;
    const Int& p = v.p;
    Int un, ud;
    long a = split_rat(x, p, un, ud);
    if (a & 1) return false;
    if (p == 2) {
        Int u = mod(un * invmod(ud, Int(8)), Int(8));
        return u == 1;
    }
    return nonresidue_bit(un, ud, p) == 0;
}

}  // namespace hdesc
