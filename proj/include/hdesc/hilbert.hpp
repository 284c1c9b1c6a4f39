#pragma once

// Quadratic Hilbert norm residue symbol over Q_v, written additively:
// hilbert_symbol(x,y,v) = 0 iff z^2 = x u^2 + y w^2 has a nonzero
// solution over the completion at v.

#include "hdesc/intutil.hpp"
#include "hdesc/place.hpp"
#include "hdesc/squareclass.hpp"

#include <vector>

namespace hdesc {

int hilbert_symbol(const Rat& x, const Rat& y, const Place& v);
int hilbert_symbol(const Int& x, const Int& y, const Place& v);

// Places where (x,y)_v could be nonzero: oo, 2 and odd primes dividing x or y.
std::vector<Place> hilbert_support(const Rat& x, const Rat& y,
                                   const std::vector<Int>& hints = {});

// Is x a square in Q_v^x?
bool is_local_square(const Rat& x, const Place& v);

}  // namespace hdesc
