#pragma once

// Exact arithmetic in L = Q(sqrt(d)), d a nonsquare integer, on the basis
// (1, beta) with beta^2 = d. All tower L-arithmetic stays on coordinate
// pairs; no general number field machinery.

#include "hdesc/intutil.hpp"

#include <optional>
#include <vector>

namespace hdesc {

struct QFElem {
    Rat x, y;  // x + y*beta
    bool operator==(const QFElem& o) const { return x == o.x && y == o.y; }
};

class QuadField {
public:
    explicit QuadField(const Int& d) : d_(d) {
        if (d == 0 || d == 1 || is_square(abs(d)) == (d > 0) ? false : false) {}
        if (d == 0 || d == 1) throw std::invalid_argument("QuadField: d must not be 0 or 1");
        if (d > 0 && is_square(d)) throw std::invalid_argument("QuadField: d is a square");
    }

    const Int& d() const { return d_; }

    QFElem make(const Rat& x, const Rat& y = Rat(0)) const { return {x, y}; }
    QFElem zero() const { return {Rat(0), Rat(0)}; }
    QFElem one() const { return {Rat(1), Rat(0)}; }
    QFElem beta() const { return {Rat(0), Rat(1)}; }

    bool is_zero(const QFElem& a) const { return a.x == 0 && a.y == 0; }
    QFElem add(const QFElem& a, const QFElem& b) const { return {a.x + b.x, a.y + b.y}; }
    QFElem sub(const QFElem& a, const QFElem& b) const { return {a.x - b.x, a.y - b.y}; }
    QFElem neg(const QFElem& a) const { return {-a.x, -a.y}; }
    QFElem mul(const QFElem& a, const QFElem& b) const {
        return {a.x * b.x + Rat(d_) * a.y * b.y, a.x * b.y + a.y * b.x};
    }
    QFElem mul(const QFElem& a, const Rat& c) const { return {a.x * c, a.y * c}; }
    QFElem conj(const QFElem& a) const { return {a.x, -a.y}; }
    Rat norm(const QFElem& a) const { return a.x * a.x - Rat(d_) * a.y * a.y; }
    Rat trace(const QFElem& a) const { return 2 * a.x; }
    QFElem inv(const QFElem& a) const {
        Rat n = norm(a);
        if (n == 0) throw std::domain_error("QuadField: inverse of zero");
        return {a.x / n, -a.y / n};
    }
    QFElem div(const QFElem& a, const QFElem& b) const { return mul(a, inv(b)); }
    QFElem pow(QFElem a, unsigned long e) const {
        QFElem r = one();
        while (e) {
            if (e & 1) r = mul(r, a);
            a = mul(a, a);
            e >>= 1;
        }
        return r;
    }

    // Gaussian elimination over L: solve M x = rhs
    std::optional<std::vector<QFElem>> solve(std::vector<std::vector<QFElem>> m,
                                             std::vector<QFElem> rhs) const;

private:
    Int d_;
};

}  // namespace hdesc
