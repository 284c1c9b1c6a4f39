#include "hdesc/intutil.hpp"

#include <stdexcept>

namespace hdesc {

std::optional<Rat> rat_sqrt(const Rat& q) {
    if (q < 0) return std::nullopt;
    if (!is_square(q.get_num()) || !is_square(q.get_den())) return std::nullopt;
    Rat r(isqrt(q.get_num()), isqrt(q.get_den()));
    r.canonicalize();
    return r;
}

long valuation(const Int& n, const Int& p) {
    if (n == 0) throw std::invalid_argument("valuation of 0");
    Int m = n;
    return split_valuation(m, p);
}

long split_valuation(Int& n, const Int& p) {
    if (n == 0) throw std::invalid_argument("valuation of 0");
    long v = 0;
    Int q, r;
    for (;;) {
        mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), n.get_mpz_t(), p.get_mpz_t());
        if (r != 0) break;
        n = q;
        ++v;
    }
    return v;
}

long valuation(const Rat& q, const Int& p) {
    return valuation(q.get_num(), p) - valuation(q.get_den(), p);
}

int legendre(const Int& a, const Int& p) {
    return mpz_legendre(a.get_mpz_t(), p.get_mpz_t());
}

std::optional<Int> sqrt_mod_prime(const Int& a0, const Int& p) {
    Int a = mod(a0, p);
    if (a == 0) return Int(0);
    if (legendre(a, p) != 1) return std::nullopt;
    if (mod(p, 4) == 3) return powmod(a, (p + 1) / 4, p);
    // Tonelli-Shanks
    Int q = p - 1;
    unsigned long s = 0;
    while (mpz_even_p(q.get_mpz_t())) { q /= 2; ++s; }
    Int z = 2;
    while (legendre(z, p) != -1) ++z;
    Int m(s), c = powmod(z, q, p), t = powmod(a, q, p), r = powmod(a, (q + 1) / 2, p);
    while (t != 1) {
        Int tt = t;
        unsigned long i = 0;
        while (tt != 1) { tt = mod(tt * tt, p); ++i; }
        Int b = c;
        for (Int j = 0; j < m - Int(i) - 1; ++j) b = mod(b * b, p);
        m = Int(i);
        c = mod(b * b, p);
        t = mod(t * c, p);
        r = mod(r * b, p);
    }
    return r;
}

std::optional<Int> sqrt_mod_prime_power(const Int& a, const Int& p, unsigned k) {
    auto r0 = sqrt_mod_prime(a, p);
    if (!r0) return std::nullopt;
    Int r = *r0;
    if (mod(a, p) == 0) return std::nullopt;  // unit part only
    Int pk = p;
    for (unsigned i = 1; i < k; ++i) {
        // Hensel: r <- r - (r^2-a)/(2r) mod p^{i+1}
        Int pnext = pk * p;
        Int num = mod(r * r - a, pnext);
        Int den = invmod(mod(2 * r, pnext), pnext);
        r = mod(r - num * den, pnext);
        pk = pnext;
    }
    return r;
}

std::optional<Int> sqrt_mod_2power(const Int& a, unsigned k) {
    if (mpz_even_p(a.get_mpz_t())) return std::nullopt;
    Int two_k = ipow(Int(2), k);
    if (k == 1) return Int(1);
    if (k == 2) return mod(a, 4) == 1 ? std::optional<Int>(Int(1)) : std::nullopt;
    if (mod(a, 8) != 1) return std::nullopt;
    Int r = 1, pk = 8;
    for (unsigned i = 3; i < k; ++i) {
        Int pnext = pk * 2;
        if (mod(r * r - a, pnext) != 0) r += pk / 2;
        pk = pnext;
    }
    return mod(r, two_k);
}

std::string to_string(const Int& n) { return n.get_str(); }
std::string to_string(const Rat& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

}  // namespace hdesc
