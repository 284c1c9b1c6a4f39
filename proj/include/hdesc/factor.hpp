#pragma once

// Integer factorization: trial division, Brent's rho with a configurable
// budget, and explicit prime hints for the large inputs descent runs on.

#include "hdesc/intutil.hpp"

#include <stdexcept>
#include <utility>
#include <vector>

namespace hdesc {

struct FactorizationFailure : std::runtime_error {
    Int cofactor;
    explicit FactorizationFailure(const Int& c)
        : std::runtime_error("factorization failed on cofactor " + c.get_str()), cofactor(c) {}
};

struct Factorization {
    int sign = 1;                            // +1 or -1
    std::vector<std::pair<Int, int>> factors;  // primes ascending, exponents >= 1

    Int value() const;
    bool has_prime(const Int& p) const;
    int exponent(const Int& p) const;
    std::vector<Int> primes() const;
    // square-free part: sign * product of primes with odd exponent
    Int squarefree() const;
};

bool is_prime(const Int& n);

struct FactorConfig {
    unsigned long trial_bound = 1000000;   // trial division limit
    unsigned long rho_iterations = 20000000;  // total Brent iterations before giving up
    std::vector<Int> hints;                // known prime divisors
};

Factorization factor(const Int& n, const FactorConfig& cfg = {});
Factorization factor(const Int& n, const std::vector<Int>& hints);

}  // namespace hdesc
