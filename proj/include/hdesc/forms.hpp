#pragma once

// Genus-one model algebra: binary quartics and their invariants, quadric
// intersections in P^3, coordinate changes, 2-uple embedding bookkeeping,
// and best-effort lattice reduction of models.

#include "hdesc/curves.hpp"
#include "hdesc/lll.hpp"
#include "hdesc/poly.hpp"

#include <array>
#include <stdexcept>

namespace hdesc {

struct DegenerateQuartic : std::runtime_error {
    DegenerateQuartic(const std::string& w) : std::runtime_error(w) {}
};
struct SingularQuartic : std::runtime_error {
    SingularQuartic(const std::string& w) : std::runtime_error(w) {}
};
struct DimensionMismatch : std::runtime_error {
    DimensionMismatch(const std::string& w) : std::runtime_error(w) {}
};

// ---------- binary quartic invariants ----------
Rat quartic_I(const BinForm& g);
Rat quartic_J(const BinForm& g);
Rat quartic_disc(const BinForm& g);  // (4 I^3 - J^2)/27

struct ShortWeierstrass {
    Rat A, B;  // y^2 = x^3 + A x + B
    Rat j_invariant() const;
};

// Jacobian via the classical invariants: y^2 = x^3 - 27 I x - 27 J.
ShortWeierstrass jacobian_of_quartic(const BinForm& g);

Rat j_invariant(const EllipticCurve2T& E);

// ---------- quadric intersections ----------
struct QuadricIntersection {
    Mat4 A, B;
    bool operator==(const QuadricIntersection& o) const { return A == o.A && B == o.B; }
};

// det(x A + y B) as a binary quartic in (x, y)
BinForm associated_quartic(const QuadricIntersection& C);
bool qi_nonsingular(const QuadricIntersection& C);

// scale both forms to primitive integral with deterministic sign
Mat4 quad_normalize(const Mat4& m);
QuadricIntersection qi_normalize(const QuadricIntersection& C);

// ---------- linear changes of coordinates ----------
struct LinearChange {
    QMatrix m;    // new -> old coordinates
    QMatrix inv;  // old -> new
    size_t n() const { return m.rows; }

    static LinearChange identity(size_t n);
    static LinearChange from_matrix(const QMatrix& m);  // throws if singular
    LinearChange compose(const LinearChange& inner) const;  // this after inner
    LinearChange inverse() const;
};

// pullback: result(x) = form(M x)
Mat4 transform(const Mat4& q, const LinearChange& ch);
QuadricIntersection transform(const QuadricIntersection& C, const LinearChange& ch);
// binary form under (x,z) -> (p x + q z, r x + s z)
BinForm transform(const BinForm& f, const Rat& p, const Rat& q, const Rat& r, const Rat& s);
std::array<Rat, 4> map_point_new_to_old(const LinearChange& ch, const std::array<Rat, 4>& x);
std::array<Rat, 4> map_point_old_to_new(const LinearChange& ch, const std::array<Rat, 4>& x);

// 8 quadrics on P^3 that, together with C's equations, span all quadrics
std::vector<Mat4> two_uple_basis(const QuadricIntersection& C);

// ---------- best-effort reduction ----------
std::pair<QuadricIntersection, LinearChange> reduce_model(const QuadricIntersection& C);
// returns reduced quartic and the GL2 change (p,q,r,s) with new = old(px+qz, rx+sz)
struct GL2Change {
    Rat p, q, r, s;
};
std::pair<BinForm, GL2Change> reduce_model(const BinForm& quartic);

Int coeff_height(const Mat4& m);
Int coeff_height(const QuadricIntersection& C);
Int coeff_height(const BinForm& f);

// primitive integral point utilities
std::array<Rat, 4> primitive_point(const std::array<Rat, 4>& x);
std::array<Rat, 3> primitive_point3(const std::array<Rat, 3>& x);

// ---------- 3x3 symmetric forms (conics) ----------
using Mat3 = std::array<std::array<Rat, 3>, 3>;
Mat3 mat3_zero();
Rat mat3_det(const Mat3& m);
Mat3 mat3_adjugate(const Mat3& m);
Rat conic_eval(const Mat3& m, const std::array<Rat, 3>& x);
int mat3_rank(const Mat3& m);
Mat3 mat3_normalize(const Mat3& m);

}  // namespace hdesc
