#include "hdesc/curves.hpp"

#include <algorithm>

namespace hdesc {

Rat EllipticCurve2T::j_invariant() const {
    Int C4 = c4(), C6 = c6();
    Rat j = Rat(C4 * C4 * C4, (C4 * C4 * C4 - C6 * C6) / 1728);
    j.canonicalize();
    return j;
}

EllipticCurve2T integral_model(const Rat& a, const Rat& b) {
    Int u = lcm(a.get_den(), b.get_den());
    // want u^2 a, u^4 b integral; u = lcm of denominators is enough
    return EllipticCurve2T(Int(a.get_num() * (u * u) / a.get_den()),
                           Int(b.get_num() * (u * u * u * u) / b.get_den()));
}

EllipticCurve2T two_isogenous_curve(const EllipticCurve2T& E) {
    return EllipticCurve2T(-2 * E.a, E.a * E.a - 4 * E.b);
}

int rational_two_torsion_count(const EllipticCurve2T& E) {
    Int d = E.a * E.a - 4 * E.b;
    return is_square(d) && d != 0 ? 3 : 1;
}

std::vector<Rat> two_torsion_x(const EllipticCurve2T& E) {
    std::vector<Rat> xs{Rat(0)};
    Int d = E.a * E.a - 4 * E.b;
    if (d != 0 && is_square(d)) {
        Int r = isqrt(d);
        xs.push_back(Rat(-E.a + r, 2));
        xs.push_back(Rat(-E.a - r, 2));
        for (auto& x : xs) x.canonicalize();
    }
    return xs;
}

EllipticCurve2T shift_two_torsion_to_origin(const EllipticCurve2T& E, const Int& x0) {
    // y^2 = (x+x0)((x+x0)^2 + a(x+x0) + b) = x(x^2 + (a+3x0)x + (3x0^2+2ax0+b))
    Int c = x0 * (x0 * x0 + E.a * x0 + E.b);
    if (c != 0) throw std::invalid_argument("x0 is not a 2-torsion x-coordinate");
    return EllipticCurve2T(E.a + 3 * x0, 3 * x0 * x0 + 2 * E.a * x0 + E.b);
}

int rank_bound_from_dims(int dimS, int dimSprime) {
    return std::max(0, dimS + dimSprime - 2);
}

bool CurvePoint::operator==(const CurvePoint& o) const {
    if (infinity != o.infinity) return false;
    return infinity || (x == o.x && y == o.y);
}

bool on_curve(const EllipticCurve2T& E, const CurvePoint& P) {
    if (P.infinity) return true;
    return P.y * P.y == P.x * (P.x * P.x + Rat(E.a) * P.x + Rat(E.b));
}

CurvePoint ec_negate(const CurvePoint& P) {
    if (P.infinity) return P;
    return CurvePoint::affine(P.x, -P.y);
}

CurvePoint ec_add(const EllipticCurve2T& E, const CurvePoint& P, const CurvePoint& Q) {
    if (P.infinity) return Q;
    if (Q.infinity) return P;
    Rat a(E.a), b(E.b);
    if (P.x == Q.x) {
        if (P.y != Q.y || P.y == 0) return CurvePoint::zero();
        // doubling on y^2 = x^3 + a x^2 + b x
        Rat lam = (3 * P.x * P.x + 2 * a * P.x + b) / (2 * P.y);
        Rat x3 = lam * lam - a - 2 * P.x;
        Rat y3 = lam * (P.x - x3) - P.y;
        return CurvePoint::affine(x3, y3);
    }
    Rat lam = (Q.y - P.y) / (Q.x - P.x);
    Rat x3 = lam * lam - a - P.x - Q.x;
    Rat y3 = lam * (P.x - x3) - P.y;
    return CurvePoint::affine(x3, y3);
}

CurvePoint ec_mul(const EllipticCurve2T& E, long n, const CurvePoint& P) {
    CurvePoint R = CurvePoint::zero(), B = P;
    bool negate = n < 0;
    unsigned long k = negate ? -(unsigned long)n : (unsigned long)n;
    while (k) {
        if (k & 1) R = ec_add(E, R, B);
        B = ec_add(E, B, B);
        k >>= 1;
    }
    return negate ? ec_negate(R) : R;
}

std::optional<int> ec_order_up_to_12(const EllipticCurve2T& E, const CurvePoint& P) {
    CurvePoint R = P;
    for (int n = 1; n <= 12; ++n) {
        if (R.infinity) return n;
        R = ec_add(E, R, P);
    }
    return std::nullopt;
}

std::pair<TwoGroupStructure, TwoGroupStructure> sha_structure(
    const std::vector<int>& shDims, const std::vector<int>& shPrimeDims) {
    auto at = [](const std::vector<int>& v, size_t m) {  // 1-based, 0 beyond end
        return m >= 1 && m <= v.size() ? v[m - 1] : 0;
    };
    for (auto* v : {&shDims, &shPrimeDims}) {
        for (size_t i = 1; i < v->size(); ++i)
            if ((*v)[i] > (*v)[i - 1])
                throw InconsistentDims("sha dimension sequence not weakly decreasing");
        for (int d : *v)
            if (d < 0) throw InconsistentDims("negative sha dimension");
    }
    size_t len = std::max(shDims.size(), shPrimeDims.size()) + 2;
    auto build = [&](const std::vector<int>& own, const std::vector<int>& other) {
        // |Sha[2^n]| = 2^{o_n}, o_n = sum_{j<=n} own_{2j-1} + other_{2j}
        std::vector<int> inc;  // o_n - o_{n-1}
        for (size_t n = 1; n <= len; ++n) inc.push_back(at(own, 2 * n - 1) + at(other, 2 * n));
        for (size_t i = 1; i < inc.size(); ++i)
            if (inc[i] > inc[i - 1])
                throw InconsistentDims("no abelian group realizes these orders");
        TwoGroupStructure g;
        for (size_t k = 1; k <= inc.size(); ++k) {
            int next = k < inc.size() ? inc[k] : 0;
            for (int c = 0; c < inc[k - 1] - next; ++c) g.push_back(int(k));
        }
        std::sort(g.begin(), g.end());
        return g;
    };
    return {build(shDims, shPrimeDims), build(shPrimeDims, shDims)};
}

std::string group_structure_str(const TwoGroupStructure& g) {
    if (g.empty()) return "trivial";
    std::string out;
    int i = 0;
    while (i < (int)g.size()) {
        int j = i;
        while (j < (int)g.size() && g[j] == g[i]) ++j;
        Int order = ipow(Int(2), g[i]);
        out += "(Z/" + order.get_str() + "Z)";
        if (j - i > 1) out += "^" + std::to_string(j - i);
        i = j;
        if (i < (int)g.size()) out += " x ";
    }
    return out;
}

}  // namespace hdesc
