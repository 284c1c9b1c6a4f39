#include "hdesc/padic.hpp"

namespace hdesc {

PadicApprox::PadicApprox(const Int& p, bool zero, long val, Int unit, long prec)
    : p_(p), zero_(zero), val_(val), unit_(std::move(unit)), prec_(prec) {
    normalize();
}

void PadicApprox::normalize() {
    if (zero_) { unit_ = 0; return; }
    if (prec_ <= 0) throw PrecisionExhausted("p-adic value with no correct digits");
    Int pk = ipow(p_, (unsigned long)prec_);
    unit_ = mod(unit_, pk);
    if (unit_ == 0) { zero_ = true, val_ = val_ + prec_, unit_ = 0; return; }
    long shift = split_valuation(unit_, p_);
    if (shift) {
        val_ += shift;
        prec_ -= shift;
        if (prec_ <= 0) { zero_ = true; val_ = val_ + prec_; unit_ = 0; return; }
        unit_ = mod(unit_, ipow(p_, (unsigned long)prec_));
    }
}

PadicApprox PadicApprox::zero(const Int& p, long abs_prec) {
    return PadicApprox(p, true, abs_prec, 0, 0);
}

PadicApprox PadicApprox::from_int(const Int& x, const Int& p, long prec) {
    if (x == 0) return zero(p, prec);
    Int u = x;
    long v = split_valuation(u, p);
    return PadicApprox(p, false, v, u, prec);
}

PadicApprox PadicApprox::from_rat(const Rat& x, const Int& p, long prec) {
    if (x == 0) return zero(p, prec);
    Int n = x.get_num(), d = x.get_den();
    long v = split_valuation(n, p) - split_valuation(d, p);
    Int pk = ipow(p, (unsigned long)prec);
    Int u = mod(n * invmod(mod(d, pk), pk), pk);
    return PadicApprox(p, false, v, u, prec);
}

long PadicApprox::val() const {
    if (zero_) throw std::logic_error("valuation of (approximate) zero");
    return val_;
}

const Int& PadicApprox::unit() const {
    if (zero_) throw std::logic_error("unit part of zero");
    return unit_;
}

PadicApprox PadicApprox::neg() const {
    if (zero_) return *this;
    return PadicApprox(p_, false, val_, ipow(p_, (unsigned long)prec_) - unit_, prec_);
}

PadicApprox PadicApprox::operator+(const PadicApprox& o) const {
    if (p_ != o.p_) throw std::invalid_argument("p-adic prime mismatch");
    if (zero_ && o.zero_) return zero(p_, std::min(val_, o.val_));
    if (zero_) {
        // o + O(p^val_)
        long ap = std::min(o.val_ + o.prec_, val_);
        long np = ap - o.val_;
        if (np <= 0) return zero(p_, val_);
        return PadicApprox(p_, false, o.val_, o.unit_, np);
    }
    if (o.zero_) return o + *this;
    long v = std::min(val_, o.val_);
    long abs_prec = std::min(val_ + prec_, o.val_ + o.prec_);
    long np = abs_prec - v;
    if (np <= 0) return zero(p_, abs_prec);
    Int pk = ipow(p_, (unsigned long)np);
    Int s = mod(ipow(p_, (unsigned long)(val_ - v)) * unit_ +
                    ipow(p_, (unsigned long)(o.val_ - v)) * o.unit_,
                pk);
    if (s == 0) return zero(p_, abs_prec);
    return PadicApprox(p_, false, v, s, np);
}

PadicApprox PadicApprox::operator-(const PadicApprox& o) const { return *this + o.neg(); }

PadicApprox PadicApprox::operator*(const PadicApprox& o) const {
    if (p_ != o.p_) throw std::invalid_argument("p-adic prime mismatch");
    if (zero_ || o.zero_) {
        long ap;
        if (zero_ && o.zero_) ap = val_ + o.val_;
        else if (zero_) ap = val_ + o.val_;
        else ap = val_ + o.val_;
        return zero(p_, ap);
    }
    long np = std::min(prec_, o.prec_);
    return PadicApprox(p_, false, val_ + o.val_, unit_ * o.unit_, np);
}

PadicApprox PadicApprox::operator/(const PadicApprox& o) const {
    if (o.zero_) throw std::domain_error("p-adic division by zero");
    if (zero_) return zero(p_, val_ - o.val_);
    long np = std::min(prec_, o.prec_);
    Int pk = ipow(p_, (unsigned long)np);
    Int u = mod(unit_ * invmod(mod(o.unit_, pk), pk), pk);
    return PadicApprox(p_, false, val_ - o.val_, u, np);
}

bool PadicApprox::is_square() const {
    if (zero_) throw PrecisionExhausted("square test on approximate zero");
    long need = p_ == 2 ? 3 : 1;
    if (prec_ < need) throw PrecisionExhausted("square test below required precision");
    if (val_ & 1) return false;
    if (p_ == 2) return mod(unit_, Int(8)) == 1;
    return legendre(unit_, p_) == 1;
}

SquareClass PadicApprox::square_class() const {
    if (zero_) throw PrecisionExhausted("square class of approximate zero");
    long need = p_ == 2 ? 3 : 1;
    if (prec_ < need) throw PrecisionExhausted("square class below required precision");
    Int c = (val_ & 1) ? p_ : Int(1);
    if (p_ == 2) {
        Int u = mod(unit_, Int(8));
        if (u == 3) c *= -1;
        else if (u == 5) c *= 5;  // representative of the class of 5
        else if (u == 7) c *= -5;
    } else {
        if (legendre(unit_, p_) == -1) {
            // smallest positive non-residue as representative
            Int u = 2;
            while (legendre(u, p_) != -1) ++u;
            c *= u;
        }
    }
    return SquareClass(c);
}

PadicApprox PadicApprox::sqrt() const {
    if (zero_) throw PrecisionExhausted("sqrt of approximate zero");
    if (!is_square()) throw std::domain_error("p-adic sqrt of a non-square");
    long v2 = val_ / 2;
    if (p_ == 2) {
        long np = prec_ - 3;
        if (np <= 0) throw PrecisionExhausted("sqrt at 2 below precision");
        auto r = sqrt_mod_2power(unit_, (unsigned)prec_);
        return PadicApprox(p_, false, v2, *r, np);
    }
    auto r = sqrt_mod_prime_power(unit_, p_, (unsigned)prec_);
    return PadicApprox(p_, false, v2, *r, prec_);
}

Int PadicApprox::lift_mod(unsigned k) const {
    Int pk = ipow(p_, k);
    if (zero_) {
        if (val_ < (long)k) throw PrecisionExhausted("lift of zero below requested modulus");
        return 0;
    }
    if (val_ < 0) throw std::domain_error("lift of p-adic with negative valuation");
    if (val_ + prec_ < (long)k) throw PrecisionExhausted("lift below requested modulus");
    return mod(ipow(p_, (unsigned long)val_) * unit_, pk);
}

Rat PadicApprox::lift_rat() const {
    if (zero_) return Rat(0);
    Rat r(unit_);
    if (val_ >= 0) r *= Rat(ipow(p_, (unsigned long)val_));
    else r /= Rat(ipow(p_, (unsigned long)(-val_)));
    return r;
}

}  // namespace hdesc
