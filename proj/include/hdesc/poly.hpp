#pragma once

// Small exact polynomial toolbox: univariate polynomials over Q (gcd,
// Sturm sequences, rational roots), dense binary forms, and coefficient
// bases for quadrics/quartics in four variables.

#include "hdesc/intutil.hpp"

#include <array>
#include <functional>
#include <optional>
#include <vector>

namespace hdesc {

// ---------- univariate over Q, coeffs[i] = coefficient of x^i ----------
using Poly1 = std::vector<Rat>;

Poly1 p1_trim(Poly1 p);
int p1_deg(const Poly1& p);  // -1 for zero
Poly1 p1_add(const Poly1& a, const Poly1& b);
Poly1 p1_sub(const Poly1& a, const Poly1& b);
Poly1 p1_mul(const Poly1& a, const Poly1& b);
Poly1 p1_scale(const Poly1& a, const Rat& c);
Rat p1_eval(const Poly1& p, const Rat& x);
Poly1 p1_deriv(const Poly1& p);
// pseudo-division based remainder sequence gcd (monic result)
Poly1 p1_gcd(const Poly1& a, const Poly1& b);
Poly1 p1_divexact(const Poly1& a, const Poly1& b);
std::pair<Poly1, Poly1> p1_divmod(const Poly1& a, const Poly1& b);

// number of distinct real roots in (lo, hi]; lo/hi may be +-infinity via flags
int sturm_count(const Poly1& p, const std::optional<Rat>& lo, const std::optional<Rat>& hi);
bool has_real_root(const Poly1& p);
// some rational x with p(x) > 0, if the polynomial takes positive values
std::optional<Rat> find_positive_value(const Poly1& p);
// all rational roots (exact)
std::vector<Rat> rational_roots(const Poly1& p);

// ---------- binary forms, coeffs[i] = coefficient of x^(d-i) z^i ----------
struct BinForm {
    std::vector<Rat> c;  // size d+1

    BinForm() = default;
    explicit BinForm(std::vector<Rat> coeffs) : c(std::move(coeffs)) {}
    int deg() const { return int(c.size()) - 1; }
    Rat eval(const Rat& x, const Rat& z) const;
    bool is_zero() const;
    Poly1 dehomogenize() const;  // in x at z=1 (index i = coeff of x^i)

    // substitution (x,z) -> (p x + q z, r x + s z)
    BinForm subst(const Rat& p, const Rat& q, const Rat& r, const Rat& s) const;
    BinForm operator*(const BinForm& o) const;
    BinForm operator+(const BinForm& o) const;
    BinForm operator-(const BinForm& o) const;
    BinForm scaled(const Rat& k) const;
};

// content-reduced integral version with positive leading nonzero coeff
BinForm normalize_integral(const BinForm& f);
Rat binqf_disc(const BinForm& q);          // b^2 - 4ac for quadratic
Rat resultant_bin(const BinForm& a, const BinForm& b);

// ---------- quadrics and quartics in 4 variables ----------
// Symmetric 4x4 rational matrix M; the form is x^T M x.
using Mat4 = std::array<std::array<Rat, 4>, 4>;

Mat4 mat4_zero();
Mat4 mat4_add(const Mat4& a, const Mat4& b);
Mat4 mat4_scale(const Mat4& a, const Rat& c);
Rat mat4_det(const Mat4& m);
Mat4 mat4_adjugate(const Mat4& m);
Rat quad_eval(const Mat4& m, const std::array<Rat, 4>& x);
int mat4_rank(const Mat4& m);
std::vector<std::array<Rat, 4>> mat4_kernel(const Mat4& m);

// ordered monomial basis of quadrics in x0..x3:
// x0^2, x0x1, x0x2, x0x3, x1^2, x1x2, x1x3, x2^2, x2x3, x3^2
constexpr int kQuadMonomials = 10;
std::array<std::pair<int, int>, kQuadMonomials> quad_monomials();
std::vector<Rat> quad_to_vec(const Mat4& m);    // coefficient vector, length 10
Mat4 vec_to_quad(const std::vector<Rat>& v);

// ordered monomial basis of quartics in 4 variables (35 exponent tuples,
// lexicographic by exponents of x0,x1,x2 descending)
constexpr int kQuarticMonomials = 35;
const std::vector<std::array<int, 4>>& quartic_monomials();
// product of two quadrics as a quartic coefficient vector (length 35)
std::vector<Rat> quad_mul_to_quartic(const Mat4& a, const Mat4& b);
// evaluation of a quartic vector
Rat quartic_eval(const std::vector<Rat>& q, const std::array<Rat, 4>& x);

// compose: quadratic form q applied to 4 quadrics r[i] -> quartic in the new
// variables. r[i] are quadrics in 4 variables (Mat4), result length 35.
std::vector<Rat> quad_of_quadrics(const Mat4& q, const std::array<Mat4, 4>& r);

// generic exact linear algebra over Q (row-major dense)
struct QMatrix {
    size_t rows = 0, cols = 0;
    std::vector<Rat> a;
    QMatrix() = default;
    QMatrix(size_t r, size_t c) : rows(r), cols(c), a(r * c, Rat(0)) {}
    Rat& at(size_t i, size_t j) { return a[i * cols + j]; }
    const Rat& at(size_t i, size_t j) const { return a[i * cols + j]; }
};
// solves M x = rhs (least structure: returns one solution), nullopt if none
std::optional<std::vector<Rat>> qmat_solve(QMatrix m, std::vector<Rat> rhs);
std::vector<std::vector<Rat>> qmat_kernel(QMatrix m);
size_t qmat_rank(QMatrix m);

}  // namespace hdesc
