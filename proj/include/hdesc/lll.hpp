#pragma once

// Exact LLL over Q for the small lattices descent work needs (dims <= 8).

#include "hdesc/poly.hpp"

#include <vector>

namespace hdesc {

// Gram matrix must be symmetric positive definite. Returns unimodular U
// (columns = reduced basis in terms of the old one), so U^T G U is reduced.
std::vector<std::vector<Int>> lll_reduce_gram(const QMatrix& G, long delta_num = 99,
                                              long delta_den = 100);

}  // namespace hdesc
