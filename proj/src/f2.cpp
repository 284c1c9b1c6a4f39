#include "hdesc/f2.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace hdesc {

F2Vec F2Matrix::row(size_t i) const {
    return F2Vec(bits_.begin() + i * cols_, bits_.begin() + (i + 1) * cols_);
}

void F2Matrix::set_row(size_t i, const F2Vec& r) {
    std::copy(r.begin(), r.end(), bits_.begin() + i * cols_);
}

F2Matrix F2Matrix::transpose() const {
    F2Matrix t(cols_, rows_);
    for (size_t i = 0; i < rows_; ++i)
        for (size_t j = 0; j < cols_; ++j) t.set(j, i, get(i, j));
    return t;
}

namespace {

// Gaussian elimination; returns pivot column per reduced row.
std::vector<size_t> echelonize(std::vector<F2Vec>& m, size_t cols) {
    std::vector<size_t> pivots;
    size_t r = 0;
    for (size_t c = 0; c < cols && r < m.size(); ++c) {
        size_t sel = m.size();
        for (size_t i = r; i < m.size(); ++i)
            if (m[i][c]) { sel = i; break; }
        if (sel == m.size()) continue;
        std::swap(m[r], m[sel]);
        for (size_t i = 0; i < m.size(); ++i)
            if (i != r && m[i][c]) m[i] = f2_add(m[i], m[r]);
        pivots.push_back(c);
        ++r;
    }
    m.resize(r);
    return pivots;
}

}  // namespace

F2Vec f2_add(const F2Vec& a, const F2Vec& b) {
    F2Vec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] ^ b[i];
    return r;
}

bool f2_is_zero(const F2Vec& v) {
    return std::all_of(v.begin(), v.end(), [](uint8_t b) { return b == 0; });
}

size_t F2Matrix::rank() const {
    std::vector<F2Vec> m;
    m.reserve(rows_);
    for (size_t i = 0; i < rows_; ++i) m.push_back(row(i));
    return echelonize(m, cols_).size();
}

std::optional<F2Vec> F2Matrix::solve(const F2Vec& rhs) const {
    if (rhs.size() != rows_) throw std::invalid_argument("f2 solve: dimension mismatch");
    std::vector<F2Vec> m;
    m.reserve(rows_);
    for (size_t i = 0; i < rows_; ++i) {
        F2Vec r = row(i);
        r.push_back(rhs[i]);
        m.push_back(std::move(r));
    }
    auto pivots = echelonize(m, cols_ + 1);
    F2Vec x(cols_, 0);
    for (size_t i = 0; i < pivots.size(); ++i) {
        if (pivots[i] == cols_) return std::nullopt;  // row (0...0 | 1)
        x[pivots[i]] = m[i][cols_];
    }
    return x;
}

std::vector<F2Vec> F2Matrix::kernel() const {
    std::vector<F2Vec> m;
    m.reserve(rows_);
    for (size_t i = 0; i < rows_; ++i) m.push_back(row(i));
    auto pivots = echelonize(m, cols_);
    std::vector<uint8_t> is_pivot(cols_, 0);
    for (size_t c : pivots) is_pivot[c] = 1;
    std::vector<F2Vec> ker;
    for (size_t c = 0; c < cols_; ++c) {
        if (is_pivot[c]) continue;
        F2Vec v(cols_, 0);
        v[c] = 1;
        for (size_t i = 0; i < pivots.size(); ++i)
            if (m[i][c]) v[pivots[i]] = 1;
        ker.push_back(std::move(v));
    }
    return ker;
}

SupportBasis::SupportBasis(const std::vector<Int>& primes) {
    entries_.push_back(Int(-1));
    std::set<Int> ps(primes.begin(), primes.end());
    for (const Int& p : ps) entries_.push_back(p);
}

void SupportBasis::extend(const SquareClass& c) {
    for (const Int& p : support(c))
        if (std::find(entries_.begin(), entries_.end(), p) == entries_.end()) entries_.push_back(p);
    std::sort(entries_.begin() + 1, entries_.end());
}

bool SupportBasis::covers(const SquareClass& c) const {
    for (const Int& p : support(c))
        if (std::find(entries_.begin(), entries_.end(), p) == entries_.end()) return false;
    return true;
}

F2Vec SupportBasis::encode(const SquareClass& c) const {
    F2Vec v(entries_.size(), 0);
    v[0] = c.rep < 0 ? 1 : 0;
    Int n = abs(c.rep);
    for (size_t i = 1; i < entries_.size(); ++i) {
        if (mod(n, entries_[i]) == 0) {
            v[i] = 1;
            n /= entries_[i];
        }
    }
    if (n != 1) throw std::invalid_argument("square class " + c.rep.get_str() + " outside support");
    return v;
}

SquareClass SupportBasis::decode(const F2Vec& v) const {
    Int r = 1;
    for (size_t i = 0; i < v.size(); ++i)
        if (v[i]) r *= entries_[i];
    return SquareClass(r);
}

F2Subspace::F2Subspace(const std::vector<SquareClass>& gens) {
    basis_ = gens;
    reduce();
}

void F2Subspace::add_generator(const SquareClass& c) {
    basis_.push_back(c);
    reduce();
}

void F2Subspace::reduce() {
    SupportBasis sb;
    std::vector<SquareClass> gens;
    for (auto& c : basis_) {
        if (c.is_one()) continue;
        sb.extend(c);
        gens.push_back(c);
    }
    std::vector<F2Vec> m;
    for (auto& c : gens) m.push_back(sb.encode(c));
    echelonize(m, sb.size());
    basis_.clear();
    for (auto& v : m) basis_.push_back(sb.decode(v));
    std::sort(basis_.begin(), basis_.end(), [](const SquareClass& a, const SquareClass& b) {
        Int aa = abs(a.rep), ab = abs(b.rep);
        return aa != ab ? aa < ab : a.rep < b.rep;
    });
}

bool F2Subspace::contains(const SquareClass& c) const {
    if (c.is_one()) return true;
    SupportBasis sb;
    for (auto& b : basis_) sb.extend(b);
    if (!sb.covers(c)) return false;
    sb.extend(c);
    F2Matrix m(sb.size(), basis_.size());
    for (size_t j = 0; j < basis_.size(); ++j) {
        F2Vec col = sb.encode(basis_[j]);
        for (size_t i = 0; i < sb.size(); ++i) m.set(i, j, col[i]);
    }
    return m.solve(sb.encode(c)).has_value();
}

bool F2Subspace::contains(const F2Subspace& other) const {
    for (auto& c : other.basis_)
        if (!contains(c)) return false;
    return true;
}

bool F2Subspace::operator==(const F2Subspace& o) const {
    return dim() == o.dim() && contains(o);
}

F2Subspace F2Subspace::intersect(const F2Subspace& other) const {
    // kernel method over the joint support
    SupportBasis sb;
    for (auto& b : basis_) sb.extend(b);
    for (auto& b : other.basis_) sb.extend(b);
    size_t n1 = basis_.size(), n2 = other.basis_.size();
    F2Matrix m(sb.size(), n1 + n2);
    for (size_t j = 0; j < n1; ++j) {
        F2Vec col = sb.encode(basis_[j]);
        for (size_t i = 0; i < sb.size(); ++i) m.set(i, j, col[i]);
    }
    for (size_t j = 0; j < n2; ++j) {
        F2Vec col = sb.encode(other.basis_[j]);
        for (size_t i = 0; i < sb.size(); ++i) m.set(i, n1 + j, col[i]);
    }
    std::vector<SquareClass> gens;
    for (auto& k : m.kernel()) {
        SquareClass c(Int(1));
        for (size_t j = 0; j < n1; ++j)
            if (k[j]) c = c * basis_[j];
        gens.push_back(c);
    }
    return F2Subspace(gens);
}

std::vector<SquareClass> F2Subspace::elements() const {
    std::vector<SquareClass> out{SquareClass(Int(1))};
    for (auto& b : basis_) {
        size_t n = out.size();
        for (size_t i = 0; i < n; ++i) out.push_back(out[i] * b);
    }
    return out;
}

}  // namespace hdesc
