#include "hdesc/poly.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace hdesc {

Poly1 p1_trim(Poly1 p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
    return p;
}

int p1_deg(const Poly1& p) {
    for (int i = int(p.size()) - 1; i >= 0; --i)
        if (p[i] != 0) return i;
    return -1;
}

Poly1 p1_add(const Poly1& a, const Poly1& b) {
    Poly1 r(std::max(a.size(), b.size()), Rat(0));
    for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (size_t i = 0; i < b.size(); ++i) r[i] += b[i];
    return p1_trim(r);
}

Poly1 p1_sub(const Poly1& a, const Poly1& b) { return p1_add(a, p1_scale(b, Rat(-1))); }

Poly1 p1_mul(const Poly1& a, const Poly1& b) {
    if (p1_deg(a) < 0 || p1_deg(b) < 0) return {};
    Poly1 r(a.size() + b.size() - 1, Rat(0));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    return p1_trim(r);
}

Poly1 p1_scale(const Poly1& a, const Rat& c) {
    Poly1 r = a;
    for (auto& x : r) x *= c;
    return p1_trim(r);
}

Rat p1_eval(const Poly1& p, const Rat& x) {
    Rat r(0);
    for (int i = int(p.size()) - 1; i >= 0; --i) r = r * x + p[i];
    return r;
}

Poly1 p1_deriv(const Poly1& p) {
    Poly1 r;
    for (size_t i = 1; i < p.size(); ++i) r.push_back(p[i] * Rat(long(i)));
    return p1_trim(r);
}

std::pair<Poly1, Poly1> p1_divmod(const Poly1& a0, const Poly1& b0) {
    Poly1 a = p1_trim(a0), b = p1_trim(b0);
    if (p1_deg(b) < 0) throw std::domain_error("poly division by zero");
    Poly1 q(std::max<int>(0, p1_deg(a) - p1_deg(b) + 1), Rat(0));
    while (p1_deg(a) >= p1_deg(b)) {
        int d = p1_deg(a) - p1_deg(b);
        Rat c = a[p1_deg(a)] / b[p1_deg(b)];
        q[d] += c;
        Poly1 shifted(d, Rat(0));
        shifted.insert(shifted.end(), b.begin(), b.end());
        a = p1_sub(a, p1_scale(shifted, c));
    }
    return {p1_trim(q), a};
}

Poly1 p1_divexact(const Poly1& a, const Poly1& b) {
    auto [q, r] = p1_divmod(a, b);
    if (p1_deg(r) >= 0) throw std::domain_error("inexact poly division");
    return q;
}

Poly1 p1_gcd(const Poly1& a0, const Poly1& b0) {
    Poly1 a = p1_trim(a0), b = p1_trim(b0);
    while (p1_deg(b) >= 0) {
        auto [q, r] = p1_divmod(a, b);
        a = b;
        b = r;
    }
    if (p1_deg(a) >= 0) a = p1_scale(a, Rat(1) / a[p1_deg(a)]);
    return a;
}

namespace {

int sign_of(const Rat& x) { return x > 0 ? 1 : (x < 0 ? -1 : 0); }

int sign_at_inf(const Poly1& p, int dir) {  // dir=+1: +oo, -1: -oo
    int d = p1_deg(p);
    if (d < 0) return 0;
    int s = sign_of(p[d]);
    if (dir < 0 && (d & 1)) s = -s;
    return s;
}

std::vector<Poly1> sturm_chain(const Poly1& p) {
    std::vector<Poly1> chain;
    Poly1 f = p1_trim(p);
    if (p1_deg(f) < 0) return chain;
    // square-free part
    Poly1 g = p1_gcd(f, p1_deriv(f));
    if (p1_deg(g) > 0) f = p1_divexact(f, g);
    chain.push_back(f);
    if (p1_deg(f) == 0) return chain;
    chain.push_back(p1_deriv(f));
    while (p1_deg(chain.back()) > 0) {
        auto [q, r] = p1_divmod(chain[chain.size() - 2], chain.back());
        if (p1_deg(r) < 0) break;
        chain.push_back(p1_scale(r, Rat(-1)));
    }
    return chain;
}

int sign_changes(const std::vector<Poly1>& chain, const std::optional<Rat>& x, int infdir) {
    int changes = 0, prev = 0;
    for (const auto& f : chain) {
        int s = x ? sign_of(p1_eval(f, *x)) : sign_at_inf(f, infdir);
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++changes;
        prev = s;
    }
    return changes;
}

}  // namespace

int sturm_count(const Poly1& p, const std::optional<Rat>& lo, const std::optional<Rat>& hi) {
    auto chain = sturm_chain(p);
    if (chain.empty() || p1_deg(chain[0]) <= 0) return 0;
    return sign_changes(chain, lo, -1) - sign_changes(chain, hi, +1);
}

bool has_real_root(const Poly1& p) { return sturm_count(p, std::nullopt, std::nullopt) > 0; }

std::optional<Rat> find_positive_value(const Poly1& p) {
    if (p1_deg(p) < 0) return std::nullopt;
    if (sign_at_inf(p, +1) > 0) {
        Rat x(1);
        while (p1_eval(p, x) <= 0) x *= 2;
        return x;
    }
    if (sign_at_inf(p, -1) > 0) {
        Rat x(-1);
        while (p1_eval(p, x) <= 0) x *= 2;
        return x;
    }
    if (p1_eval(p, Rat(0)) > 0) return Rat(0);
    // leading coefficient < 0 at both ends: positive values only between roots.
    // Bisect around roots of the derivative using Sturm isolation.
    Poly1 d = p1_deriv(p);
    // crude: sample rationals m/2^k over root bound
    Rat bound(1);
    for (const Rat& c : p) {
        Rat t = abs(c.get_num()) * Rat(1, 1);
        Rat lead = abs(p[p1_deg(p)]);
        t = abs(c) / lead;
        if (t > bound) bound = t;
    }
    bound = bound + 1;
    for (int k = 0; k <= 14; ++k) {
        Int den = ipow(Int(2), k);
        Int lim = bound.get_num() * den / bound.get_den() + 1;
        for (Int num = -lim; num <= lim; ++num) {
            Rat x(num, den);
            x.canonicalize();
            if (p1_eval(p, x) > 0) return x;
        }
        if (k >= 3 && sturm_count(p, std::nullopt, std::nullopt) == 0) break;
    }
    return std::nullopt;
}

std::vector<Rat> rational_roots(const Poly1& p0) {
    std::vector<Rat> roots;
    Poly1 p = p1_trim(p0);
    if (p1_deg(p) <= 0) return roots;
    // clear denominators
    Int den(1);
    for (auto& c : p) den = lcm(den, c.get_den());
    std::vector<Int> ip;
    for (auto& c : p) ip.push_back(Int(c.get_num() * den / c.get_den()));
    // strip x^k
    size_t k = 0;
    while (k < ip.size() && ip[k] == 0) ++k;
    if (k > 0) roots.push_back(Rat(0));
    if (k >= ip.size() - 1) return roots;
    Int a0 = ip[k], an = ip.back();
    auto divisors = [](const Int& n) {
        std::vector<Int> ds;
        auto f = factor(abs(n));
        ds.push_back(1);
        for (auto& [q, e] : f.factors) {
            size_t m = ds.size();
            Int pw = 1;
            for (int i = 0; i < e; ++i) {
                pw *= q;
                for (size_t j = 0; j < m; ++j) ds.push_back(ds[j] * pw);
            }
        }
        return ds;
    };
    for (const Int& r : divisors(a0))
        for (const Int& s : divisors(an)) {
            if (gcd(r, s) != 1) continue;
            for (int sg : {1, -1}) {
                Rat x(sg * r, s);
                x.canonicalize();
                if (p1_eval(p, x) == 0) roots.push_back(x);
            }
        }
    std::sort(roots.begin(), roots.end());
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
    return roots;
}

Rat BinForm::eval(const Rat& x, const Rat& z) const {
    int d = deg();
    std::vector<Rat> zpow(d + 1);
    zpow[0] = 1;
    for (int i = 1; i <= d; ++i) zpow[i] = zpow[i - 1] * z;
    Rat r(0);
    for (int j = 0; j <= d; ++j) {  // c[j] multiplies x^(d-j) z^j
        Rat term = c[j];
        for (int t = 0; t < d - j; ++t) term *= x;
        term *= zpow[j];
        r += term;
    }
    return r;
}

bool BinForm::is_zero() const {
    return std::all_of(c.begin(), c.end(), [](const Rat& x) { return x == 0; });
}

Poly1 BinForm::dehomogenize() const {
    Poly1 p(c.size());
    int d = deg();
    for (int j = 0; j <= d; ++j) p[d - j] = c[j];
    return p1_trim(p);
}

BinForm BinForm::subst(const Rat& p, const Rat& q, const Rat& r, const Rat& s) const {
    int d = deg();
    // (x,z) -> (p x + q z, r x + s z)
    std::vector<Rat> out(d + 1, Rat(0));
    // expand via polynomial multiplication in (x,z)
    // term c[j] (px+qz)^{d-j} (rx+sz)^j
    auto binpow = [](const Rat& u, const Rat& v, int n) {
        // coefficients of (u x + v z)^n
        std::vector<Rat> b(n + 1, Rat(0));
        std::vector<Int> binom(n + 1);
        binom[0] = 1;
        for (int i = 1; i <= n; ++i) binom[i] = binom[i - 1] * (n - i + 1) / i;
        for (int i = 0; i <= n; ++i) {
            Rat t(binom[i]);
            for (int a = 0; a < n - i; ++a) t *= u;
            for (int a = 0; a < i; ++a) t *= v;
            b[i] = t;
        }
        return b;
    };
    for (int j = 0; j <= d; ++j) {
        if (c[j] == 0) continue;
        auto f1 = binpow(p, q, d - j);
        auto f2 = binpow(r, s, j);
        for (size_t u = 0; u < f1.size(); ++u)
            for (size_t v = 0; v < f2.size(); ++v) out[u + v] += c[j] * f1[u] * f2[v];
    }
    return BinForm(out);
}

BinForm BinForm::operator*(const BinForm& o) const {
    std::vector<Rat> out(c.size() + o.c.size() - 1, Rat(0));
    for (size_t i = 0; i < c.size(); ++i)
        for (size_t j = 0; j < o.c.size(); ++j) out[i + j] += c[i] * o.c[j];
    return BinForm(out);
}

BinForm BinForm::operator+(const BinForm& o) const {
    std::vector<Rat> out(std::max(c.size(), o.c.size()), Rat(0));
    // align by degree: only sensible for equal degrees
    if (c.size() != o.c.size()) throw std::invalid_argument("binform degree mismatch in +");
    for (size_t i = 0; i < c.size(); ++i) out[i] = c[i] + o.c[i];
    return BinForm(out);
}

BinForm BinForm::operator-(const BinForm& o) const { return *this + o.scaled(Rat(-1)); }

BinForm BinForm::scaled(const Rat& k) const {
    BinForm f = *this;
    for (auto& x : f.c) x *= k;
    return f;
}

BinForm normalize_integral(const BinForm& f) {
    Int den(1);
    for (auto& x : f.c) den = lcm(den, x.get_den());
    Int g(0);
    for (auto& x : f.c) g = gcd(g, Int(x.get_num() * den / x.get_den()));
    if (g == 0) return f;
    BinForm out = f;
    Rat scale(den, g);
    for (auto& x : out.c) x *= scale;
    for (auto& x : out.c)
        if (x != 0) { if (x < 0) out = out.scaled(Rat(-1)); break; }
    return out;
}

Rat binqf_disc(const BinForm& q) {
    if (q.deg() != 2) throw std::invalid_argument("disc: not a binary quadratic");
    return q.c[1] * q.c[1] - 4 * q.c[0] * q.c[2];
}

Rat resultant_bin(const BinForm& a, const BinForm& b) {
    // Sylvester determinant of dehomogenized forms, degree-aware
    int m = a.deg(), n = b.deg();
    size_t N = m + n;
    QMatrix s(N, N);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j <= m; ++j) s.at(i, i + j) = a.c[j];
    for (int i = 0; i < m; ++i)
        for (int j = 0; j <= n; ++j) s.at(n + i, i + j) = b.c[j];
    // determinant by fraction-free elimination
    Rat det(1);
    for (size_t col = 0, row = 0; col < N && row < N; ++col, ++row) {
        size_t piv = row;
        while (piv < N && s.at(piv, col) == 0) ++piv;
        if (piv == N) return Rat(0);
        if (piv != row) {
            for (size_t j = 0; j < N; ++j) std::swap(s.at(piv, j), s.at(row, j));
            det = -det;
        }
        det *= s.at(row, col);
        Rat inv = Rat(1) / s.at(row, col);
        for (size_t i = row + 1; i < N; ++i) {
            Rat f = s.at(i, col) * inv;
            if (f == 0) continue;
            for (size_t j = col; j < N; ++j) s.at(i, j) -= f * s.at(row, j);
        }
    }
    return det;
}

Mat4 mat4_zero() {
    Mat4 m;
    for (auto& r : m) r.fill(Rat(0));
    return m;
}

Mat4 mat4_add(const Mat4& a, const Mat4& b) {
    Mat4 m = mat4_zero();
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) m[i][j] = a[i][j] + b[i][j];
    return m;
}

Mat4 mat4_scale(const Mat4& a, const Rat& c) {
    Mat4 m = a;
    for (auto& r : m)
        for (auto& x : r) x *= c;
    return m;
}

Rat mat4_det(const Mat4& m0) {
    Mat4 m = m0;
    Rat det(1);
    for (int col = 0; col < 4; ++col) {
        int piv = -1;
        for (int i = col; i < 4; ++i)
            if (m[i][col] != 0) { piv = i; break; }
        if (piv < 0) return Rat(0);
        if (piv != col) { std::swap(m[piv], m[col]); det = -det; }
        det *= m[col][col];
        for (int i = col + 1; i < 4; ++i) {
            if (m[i][col] == 0) continue;
            Rat f = m[i][col] / m[col][col];
            for (int j = col; j < 4; ++j) m[i][j] -= f * m[col][j];
        }
    }
    return det;
}

Mat4 mat4_adjugate(const Mat4& m) {
    // cofactor transpose via 3x3 determinants
    auto det3 = [&](int r0, int r1, int r2, int c0, int c1, int c2) {
        return m[r0][c0] * (m[r1][c1] * m[r2][c2] - m[r1][c2] * m[r2][c1]) -
               m[r0][c1] * (m[r1][c0] * m[r2][c2] - m[r1][c2] * m[r2][c0]) +
               m[r0][c2] * (m[r1][c0] * m[r2][c1] - m[r1][c1] * m[r2][c0]);
    };
    Mat4 adj = mat4_zero();
    int idx[4][3] = {{1, 2, 3}, {0, 2, 3}, {0, 1, 3}, {0, 1, 2}};
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            Rat c = det3(idx[i][0], idx[i][1], idx[i][2], idx[j][0], idx[j][1], idx[j][2]);
            if ((i + j) & 1) c = -c;
            adj[j][i] = c;
        }
    return adj;
}

Rat quad_eval(const Mat4& m, const std::array<Rat, 4>& x) {
    Rat r(0);
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) r += m[i][j] * x[i] * x[j];
    return r;
}

int mat4_rank(const Mat4& m0) {
    Mat4 m = m0;
    int rank = 0;
    int row = 0;
    for (int col = 0; col < 4 && row < 4; ++col) {
        int piv = -1;
        for (int i = row; i < 4; ++i)
            if (m[i][col] != 0) { piv = i; break; }
        if (piv < 0) continue;
        std::swap(m[piv], m[row]);
        for (int i = 0; i < 4; ++i) {
            if (i == row || m[i][col] == 0) continue;
            Rat f = m[i][col] / m[row][col];
            for (int j = 0; j < 4; ++j) m[i][j] -= f * m[row][j];
        }
        ++rank;
        ++row;
    }
    return rank;
}

std::vector<std::array<Rat, 4>> mat4_kernel(const Mat4& m) {
    QMatrix q(4, 4);
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) q.at(i, j) = m[i][j];
    auto k = qmat_kernel(q);
    std::vector<std::array<Rat, 4>> out;
    for (auto& v : k) out.push_back({v[0], v[1], v[2], v[3]});
    return out;
}

std::array<std::pair<int, int>, kQuadMonomials> quad_monomials() {
    return {{{0, 0}, {0, 1}, {0, 2}, {0, 3}, {1, 1}, {1, 2}, {1, 3}, {2, 2}, {2, 3}, {3, 3}}};
}

std::vector<Rat> quad_to_vec(const Mat4& m) {
    std::vector<Rat> v(kQuadMonomials);
    auto mons = quad_monomials();
    for (int k = 0; k < kQuadMonomials; ++k) {
        auto [i, j] = mons[k];
        v[k] = i == j ? m[i][j] : m[i][j] + m[j][i];
    }
    return v;
}

Mat4 vec_to_quad(const std::vector<Rat>& v) {
    Mat4 m = mat4_zero();
    auto mons = quad_monomials();
    for (int k = 0; k < kQuadMonomials; ++k) {
        auto [i, j] = mons[k];
        if (i == j) m[i][j] = v[k];
        else m[i][j] = m[j][i] = v[k] / 2;
    }
    return m;
}

const std::vector<std::array<int, 4>>& quartic_monomials() {
    static std::vector<std::array<int, 4>> mons = [] {
        std::vector<std::array<int, 4>> out;
        for (int a = 4; a >= 0; --a)
            for (int b = 4 - a; b >= 0; --b)
                for (int c = 4 - a - b; c >= 0; --c) out.push_back({a, b, c, 4 - a - b - c});
        return out;
    }();
    return mons;
}

namespace {

int quartic_index(const std::array<int, 4>& e) {
    const auto& mons = quartic_monomials();
    for (size_t i = 0; i < mons.size(); ++i)
        if (mons[i] == e) return int(i);
    throw std::logic_error("bad quartic exponent");
}

}  // namespace

std::vector<Rat> quad_mul_to_quartic(const Mat4& a, const Mat4& b) {
    // coefficient dictionaries
    std::vector<Rat> out(kQuarticMonomials, Rat(0));
    auto mons = quad_monomials();
    auto va = quad_to_vec(a), vb = quad_to_vec(b);
    for (int s = 0; s < kQuadMonomials; ++s) {
        if (va[s] == 0) continue;
        for (int t = 0; t < kQuadMonomials; ++t) {
            if (vb[t] == 0) continue;
            std::array<int, 4> e{0, 0, 0, 0};
            e[mons[s].first]++;
            e[mons[s].second]++;
            e[mons[t].first]++;
            e[mons[t].second]++;
            out[quartic_index(e)] += va[s] * vb[t];
        }
    }
    return out;
}

Rat quartic_eval(const std::vector<Rat>& q, const std::array<Rat, 4>& x) {
    const auto& mons = quartic_monomials();
    Rat r(0);
    for (int k = 0; k < kQuarticMonomials; ++k) {
        if (q[k] == 0) continue;
        Rat t = q[k];
        for (int i = 0; i < 4; ++i)
            for (int e = 0; e < mons[k][i]; ++e) t *= x[i];
        r += t;
    }
    return r;
}

std::vector<Rat> quad_of_quadrics(const Mat4& q, const std::array<Mat4, 4>& r) {
    std::vector<Rat> out(kQuarticMonomials, Rat(0));
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            if (q[i][j] == 0) continue;
            auto prod = quad_mul_to_quartic(r[i], r[j]);
            for (int k = 0; k < kQuarticMonomials; ++k) out[k] += q[i][j] * prod[k];
        }
    return out;
}

std::optional<std::vector<Rat>> qmat_solve(QMatrix m, std::vector<Rat> rhs) {
    size_t R = m.rows, C = m.cols;
    std::vector<size_t> pivcol;
    size_t row = 0;
    for (size_t col = 0; col < C && row < R; ++col) {
        size_t piv = row;
        while (piv < R && m.at(piv, col) == 0) ++piv;
        if (piv == R) continue;
        if (piv != row) {
            for (size_t j = 0; j < C; ++j) std::swap(m.at(piv, j), m.at(row, j));
            std::swap(rhs[piv], rhs[row]);
        }
        Rat inv = Rat(1) / m.at(row, col);
        for (size_t j = col; j < C; ++j) m.at(row, j) *= inv;
        rhs[row] *= inv;
        for (size_t i = 0; i < R; ++i) {
            if (i == row || m.at(i, col) == 0) continue;
            Rat f = m.at(i, col);
            for (size_t j = col; j < C; ++j) m.at(i, j) -= f * m.at(row, j);
            rhs[i] -= f * rhs[row];
        }
        pivcol.push_back(col);
        ++row;
    }
    for (size_t i = row; i < R; ++i)
        if (rhs[i] != 0) return std::nullopt;
    std::vector<Rat> x(C, Rat(0));
    for (size_t i = 0; i < pivcol.size(); ++i) x[pivcol[i]] = rhs[i];
    return x;
}

std::vector<std::vector<Rat>> qmat_kernel(QMatrix m) {
    size_t R = m.rows, C = m.cols;
    std::vector<size_t> pivcol;
    size_t row = 0;
    for (size_t col = 0; col < C && row < R; ++col) {
        size_t piv = row;
        while (piv < R && m.at(piv, col) == 0) ++piv;
        if (piv == R) continue;
        if (piv != row)
            for (size_t j = 0; j < C; ++j) std::swap(m.at(piv, j), m.at(row, j));
        Rat inv = Rat(1) / m.at(row, col);
        for (size_t j = col; j < C; ++j) m.at(row, j) *= inv;
        for (size_t i = 0; i < R; ++i) {
            if (i == row || m.at(i, col) == 0) continue;
            Rat f = m.at(i, col);
            for (size_t j = col; j < C; ++j) m.at(i, j) -= f * m.at(row, j);
        }
        pivcol.push_back(col);
        ++row;
    }
    std::vector<uint8_t> is_piv(C, 0);
    for (size_t c : pivcol) is_piv[c] = 1;
    std::vector<std::vector<Rat>> ker;
    for (size_t c = 0; c < C; ++c) {
        if (is_piv[c]) continue;
        std::vector<Rat> v(C, Rat(0));
        v[c] = 1;
        for (size_t i = 0; i < pivcol.size(); ++i) v[pivcol[i]] = -m.at(i, c);
        ker.push_back(std::move(v));
    }
    return ker;
}

size_t qmat_rank(QMatrix m) {
    size_t R = m.rows, C = m.cols, rank = 0, row = 0;
    for (size_t col = 0; col < C && row < R; ++col) {
        size_t piv = row;
        while (piv < R && m.at(piv, col) == 0) ++piv;
        if (piv == R) continue;
        if (piv != row)
            for (size_t j = 0; j < C; ++j) std::swap(m.at(piv, j), m.at(row, j));
        for (size_t i = row + 1; i < R; ++i) {
            if (m.at(i, col) == 0) continue;
            Rat f = m.at(i, col) / m.at(row, col);
            for (size_t j = col; j < C; ++j) m.at(i, j) -= f * m.at(row, j);
        }
        ++rank;
        ++row;
    }
    return rank;
}

}  // namespace hdesc
