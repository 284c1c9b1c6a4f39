#pragma once

// Exact linear algebra over F2, plus subgroups of Q^x/(Q^x)^2 encoded as
// F2 spans of square classes over an explicit {-1, 2, p, ...} support.

#include "hdesc/squareclass.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace hdesc {

using F2Vec = std::vector<uint8_t>;  // 0/1 entries

class F2Matrix {
public:
    F2Matrix() = default;
    F2Matrix(size_t rows, size_t cols) : rows_(rows), cols_(cols), bits_(rows * cols, 0) {}

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }
    uint8_t get(size_t i, size_t j) const { return bits_[i * cols_ + j]; }
    void set(size_t i, size_t j, int v) { bits_[i * cols_ + j] = uint8_t(v & 1); }

    F2Vec row(size_t i) const;
    void set_row(size_t i, const F2Vec& r);
    F2Matrix transpose() const;

    size_t rank() const;
    // solve M x = rhs; empty optional means no solution
    std::optional<F2Vec> solve(const F2Vec& rhs) const;
    // basis of the right kernel {x : M x = 0}
    std::vector<F2Vec> kernel() const;
    // basis of the left kernel {y : y M = 0}
    std::vector<F2Vec> left_kernel() const { return transpose().kernel(); }

    bool operator==(const F2Matrix& o) const = default;

private:
    size_t rows_ = 0, cols_ = 0;
    std::vector<uint8_t> bits_;
};

F2Vec f2_add(const F2Vec& a, const F2Vec& b);
bool f2_is_zero(const F2Vec& v);

// Ordered support basis {-1, 2, p1, p2, ...} for encoding square classes.
class SupportBasis {
public:
    SupportBasis() { entries_.push_back(Int(-1)); }
    explicit SupportBasis(const std::vector<Int>& primes);

    void extend(const SquareClass& c);  // grow to cover c's support
    size_t size() const { return entries_.size(); }
    const std::vector<Int>& entries() const { return entries_; }

    F2Vec encode(const SquareClass& c) const;  // throws if support not covered
    bool covers(const SquareClass& c) const;
    SquareClass decode(const F2Vec& v) const;

private:
    std::vector<Int> entries_;  // -1 first, then primes ascending
};

// Subgroup of Q^x/(Q^x)^2 spanned by square classes; kept in reduced
// echelon form over its own support so bases are canonical.
class F2Subspace {
public:
    F2Subspace() = default;
    explicit F2Subspace(const std::vector<SquareClass>& gens);

    void add_generator(const SquareClass& c);
    bool contains(const SquareClass& c) const;
    bool contains(const F2Subspace& other) const;
    size_t dim() const { return basis_.size(); }
    const std::vector<SquareClass>& basis() const { return basis_; }

    F2Subspace intersect(const F2Subspace& other) const;
    bool operator==(const F2Subspace& o) const;

    // all 2^dim elements (small groups only)
    std::vector<SquareClass> elements() const;

private:
    void reduce();
    std::vector<SquareClass> basis_;
};

}  // namespace hdesc
