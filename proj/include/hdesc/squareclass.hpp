#pragma once

// Square classes: elements of Q^x / (Q^x)^2 represented by square-free
// integers with sign. The canonical form makes equality, hashing and
// F2-vector encoding over a prime support exact.

#include "hdesc/factor.hpp"
#include "hdesc/intutil.hpp"

#include <vector>

namespace hdesc {

struct SquareClass {
    Int rep = 1;  // square-free, nonzero

    SquareClass() = default;
    explicit SquareClass(const Int& r) : rep(r) {}

    bool is_one() const { return rep == 1; }
    bool operator==(const SquareClass& o) const { return rep == o.rep; }
    bool operator<(const SquareClass& o) const { return rep < o.rep; }
    SquareClass operator*(const SquareClass& o) const;
};

// square-free part r of x: r square-free and x/r a rational square.
SquareClass squarefree_part(const Rat& x, const std::vector<Int>& hints = {});
SquareClass squarefree_part(const Int& x, const std::vector<Int>& hints = {});
SquareClass squarefree_part_from(const Factorization& f);

// primes dividing the representative (no sign)
std::vector<Int> support(const SquareClass& c);

}  // namespace hdesc
