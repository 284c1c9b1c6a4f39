#pragma once

// Elliptic curves y^2 = x(x^2 + ax + b) with the marked 2-torsion point
// T = (0,0): the 2-isogenous curve, torsion bookkeeping, rank bounds from
// filtration dimensions, and 2-primary Sha structure.

#include "hdesc/factor.hpp"
#include "hdesc/intutil.hpp"

#include <optional>
#include <stdexcept>
#include <vector>

namespace hdesc {

struct EllipticCurve2T {
    Int a, b;  // y^2 = x(x^2 + ax + b)

    EllipticCurve2T(const Int& a_, const Int& b_) : a(a_), b(b_) {
        if (2 * b * (a * a - 4 * b) == 0)
            throw std::invalid_argument("singular model: 2b(a^2-4b) = 0");
    }

    Int disc_factor() const { return 2 * b * (a * a - 4 * b); }
    // c4/c6 of the model, for j-invariant comparisons
    Int c4() const { return 16 * (a * a - 3 * b); }
    Int c6() const { return -32 * a * (2 * a * a - 9 * b); }
    Rat j_invariant() const;
    bool operator==(const EllipticCurve2T& o) const { return a == o.a && b == o.b; }
};

// clears denominators of a rational model via (x,y) -> (u^2 x, u^3 y)
EllipticCurve2T integral_model(const Rat& a, const Rat& b);

EllipticCurve2T two_isogenous_curve(const EllipticCurve2T& E);

struct IsogenyPair {
    EllipticCurve2T E;       // domain of phi
    EllipticCurve2T Eprime;  // codomain, model (-2a, a^2-4b)
    explicit IsogenyPair(const EllipticCurve2T& e) : E(e), Eprime(two_isogenous_curve(e)) {}
};

// number of nontrivial rational 2-torsion points (1 or 3)
int rational_two_torsion_count(const EllipticCurve2T& E);

// x-coordinates of the nontrivial rational 2-torsion points
std::vector<Rat> two_torsion_x(const EllipticCurve2T& E);

// shift x -> x + x0 moving the 2-torsion point (x0, 0) to the origin;
// input must be integral 2-torsion x
EllipticCurve2T shift_two_torsion_to_origin(const EllipticCurve2T& E, const Int& x0);

// Lemma-2.2-style bound with dim E(K)[phi] = dim E'(K)[phihat] = 1:
// dimS + dimSprime - 2, clamped at 0.
int rank_bound_from_dims(int dimS, int dimSprime);

// Affine/projective points on y^2 = x(x^2+ax+b)
struct CurvePoint {
    bool infinity = true;
    Rat x, y;
    static CurvePoint zero() { return CurvePoint{}; }
    static CurvePoint affine(const Rat& x, const Rat& y) { return CurvePoint{false, x, y}; }
    bool operator==(const CurvePoint& o) const;
};

bool on_curve(const EllipticCurve2T& E, const CurvePoint& P);
CurvePoint ec_add(const EllipticCurve2T& E, const CurvePoint& P, const CurvePoint& Q);
CurvePoint ec_negate(const CurvePoint& P);
CurvePoint ec_mul(const EllipticCurve2T& E, long n, const CurvePoint& P);
// order if <= 12, otherwise nullopt (point of infinite order by Mazur)
std::optional<int> ec_order_up_to_12(const EllipticCurve2T& E, const CurvePoint& P);

struct InconsistentDims : std::runtime_error {
    InconsistentDims(const std::string& w) : std::runtime_error(w) {}
};

// multiset of cyclic factors Z/2^k Z given as exponents k (ascending)
using TwoGroupStructure = std::vector<int>;

// Remark-2.4 reconstruction: from dim Sh_m and dim Sh'_m sequences
// (index m = 1,2,..., implicitly 0 beyond the end) to the 2-primary
// group structures of Sha(E) and Sha(E').
std::pair<TwoGroupStructure, TwoGroupStructure> sha_structure(
    const std::vector<int>& shDims, const std::vector<int>& shPrimeDims);

std::string group_structure_str(const TwoGroupStructure& g);

}  // namespace hdesc
