#pragma once

// Finite-precision p-adic numbers: value = p^val * (unit + O(p^prec)).
// Relative precision is tracked through every operation; consumers that
// need square classes check it explicitly instead of trusting stale digits.

#include "hdesc/intutil.hpp"
#include "hdesc/place.hpp"
#include "hdesc/squareclass.hpp"

#include <stdexcept>

namespace hdesc {

struct PrecisionExhausted : std::runtime_error {
    PrecisionExhausted(const std::string& what) : std::runtime_error(what) {}
};

class PadicApprox {
public:
    // exact zero to O(p^abs_prec)
    static PadicApprox zero(const Int& p, long abs_prec);
    static PadicApprox from_rat(const Rat& x, const Int& p, long prec);
    static PadicApprox from_int(const Int& x, const Int& p, long prec);

    const Int& prime() const { return p_; }
    bool is_zero() const { return zero_; }
    long val() const;          // throws on zero
    long rel_prec() const { return prec_; }
    const Int& unit() const;   // unit part mod p^prec

    PadicApprox operator+(const PadicApprox& o) const;
    PadicApprox operator-(const PadicApprox& o) const;
    PadicApprox operator*(const PadicApprox& o) const;
    PadicApprox operator/(const PadicApprox& o) const;
    PadicApprox neg() const;

    bool is_square() const;            // needs enough precision, else throws
    SquareClass square_class() const;  // canonical small representative
    PadicApprox sqrt() const;          // throws if not a square

    // value mod p^k as an integer in [0, p^k) (requires val >= 0 and enough precision)
    Int lift_mod(unsigned k) const;

    Rat lift_rat() const;  // p^val * unit as an exact rational (for diagnostics)

private:
    PadicApprox(const Int& p, bool zero, long val, Int unit, long prec);
    void normalize();

    Int p_;
    bool zero_ = true;
    long val_ = 0;    // for zero: value is O(p^val_)
    Int unit_ = 0;    // in [1, p^prec), coprime to p
    long prec_ = 0;   // relative precision (absolute for zero)
};

}  // namespace hdesc
