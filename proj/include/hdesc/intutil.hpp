#pragma once

// Arbitrary-precision integer/rational helpers on top of GMP.

#include <gmpxx.h>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace hdesc {

using Int = mpz_class;
using Rat = mpq_class;

inline Int gcd(const Int& a, const Int& b) {
    Int g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

inline Int lcm(const Int& a, const Int& b) {
    Int l;
    mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return l;
}

inline Int ipow(const Int& a, unsigned long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), a.get_mpz_t(), e);
    return r;
}

inline bool is_square(const Int& a) {
    return a >= 0 && mpz_perfect_square_p(a.get_mpz_t());
}

inline Int isqrt(const Int& a) {
    Int r;
    mpz_sqrt(r.get_mpz_t(), a.get_mpz_t());
    return r;
}

// Exact square root of a rational, if it is one.
std::optional<Rat> rat_sqrt(const Rat& q);

// v_p(n) for n != 0, and divides n by p^v in place when requested.
long valuation(const Int& n, const Int& p);
long split_valuation(Int& n, const Int& p);  // strips p-part, returns exponent

// v_p of a rational (may be negative).
long valuation(const Rat& q, const Int& p);

inline Int mod(const Int& a, const Int& m) {
    Int r;
    mpz_mod(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
    return r;
}

inline Int invmod(const Int& a, const Int& m) {
    Int r;
    if (!mpz_invert(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t()))
        throw std::invalid_argument("invmod: not invertible");
    return r;
}

inline Int powmod(const Int& b, const Int& e, const Int& m) {
    Int r;
    mpz_powm(r.get_mpz_t(), b.get_mpz_t(), e.get_mpz_t(), m.get_mpz_t());
    return r;
}

// Legendre symbol (a|p) for odd prime p, a coprime to p; 0 if p | a.
int legendre(const Int& a, const Int& p);

// Square root of a modulo odd prime p (Tonelli-Shanks), if it exists.
std::optional<Int> sqrt_mod_prime(const Int& a, const Int& p);

// Square root of a modulo p^k (p odd prime, a a unit square mod p^k).
std::optional<Int> sqrt_mod_prime_power(const Int& a, const Int& p, unsigned k);

// Square root of odd a modulo 2^k (requires a = 1 mod 8 when k >= 3).
std::optional<Int> sqrt_mod_2power(const Int& a, unsigned k);

// Rational rounded to nearest integer.
inline Int round_rat(const Rat& q) {
    Int num = q.get_num(), den = q.get_den();
    Int twice = 2 * num + den;  // floor((num + den/2)/den)
    Int r;
    mpz_fdiv_q(r.get_mpz_t(), twice.get_mpz_t(), (2 * den).get_mpz_t());
    return r;
}

std::string to_string(const Int& n);
std::string to_string(const Rat& q);

}  // namespace hdesc
