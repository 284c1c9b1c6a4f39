#pragma once

// Place-local machinery: solubility of torsors over Q_v, local points with
// certified square classes, local connecting-map images, bad primes.

#include "hdesc/curves.hpp"
#include "hdesc/f2.hpp"
#include "hdesc/forms.hpp"
#include "hdesc/padic.hpp"

#include <optional>
#include <variant>

namespace hdesc {

// A torsor we can test locally: a conic, a double cover y^2 = g(x,z)
// (g a binary quartic), or a quadric intersection.
struct DoubleCover {
    BinForm quartic;  // integral
};
using Torsor = std::variant<Mat3, DoubleCover, QuadricIntersection>;

std::vector<Int> bad_primes(const EllipticCurve2T& E, const std::vector<Int>& hints = {});

bool is_locally_soluble(const Torsor& t, const Place& v);

// Solubility of y^2 = g(x,z) over Q_p / R.
bool quartic_soluble_at(const BinForm& g, const Place& v);

// local point on y^2 = g(x,z): (x, z, y) with y^2 = g(x,z) exactly at the
// chosen rational (x, z), plus the avoid-form value's square class.
struct QuarticLocalPoint {
    Rat x, z;          // exact rational coordinates of the base point
    PadicApprox y;     // p-adic square root (finite places)
    bool at_infinity = false;
    bool y_positive = true;  // branch at the real place
};

// find (x:z) with g(x,z) a nonzero v-adic square and avoid(x,z) != 0 with a
// stable square class; seed controls the deterministic sampling order.
std::optional<QuarticLocalPoint> find_quartic_point(const BinForm& g, const Place& v,
                                                    const BinForm& avoid, long prec,
                                                    uint64_t seed);

// Image of the local connecting map for the model (A, B): the set of
// square classes d in Q_v^x/(Q_v^x)^2 whose torsor
//   y^2 = d^3 s^4 + A d^2 s^2 t^2 + B d t^4   (integral model of (cov1))
// is v-soluble. Returned as explicit class representatives.
std::vector<SquareClass> local_image(const Int& A, const Int& B, const Place& v);

// all square class representatives of Q_v^x/(Q_v^x)^2
std::vector<SquareClass> local_class_reps(const Place& v);

// F2 span helpers on local classes: is c in the subgroup generated by gens
// inside Q_v^x/(Q_v^x)^2?
bool local_class_in_span(const SquareClass& c, const std::vector<SquareClass>& gens,
                         const Place& v);

// square class of a nonzero rational in Q_v (small canonical rep)
SquareClass local_square_class(const Rat& x, const Place& v);

}  // namespace hdesc
