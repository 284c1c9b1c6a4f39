#include "hdesc/forms.hpp"

#include <algorithm>

namespace hdesc {

Rat quartic_I(const BinForm& g) {
    if (g.deg() != 4) throw std::invalid_argument("quartic_I: degree != 4");
    const Rat &a = g.c[0], &b = g.c[1], &c = g.c[2], &d = g.c[3], &e = g.c[4];
    return 12 * a * e - 3 * b * d + c * c;
}

Rat quartic_J(const BinForm& g) {
    if (g.deg() != 4) throw std::invalid_argument("quartic_J: degree != 4");
    const Rat &a = g.c[0], &b = g.c[1], &c = g.c[2], &d = g.c[3], &e = g.c[4];
    return 72 * a * c * e + 9 * b * c * d - 27 * a * d * d - 27 * e * b * b - 2 * c * c * c;
}

Rat quartic_disc(const BinForm& g) {
    Rat I = quartic_I(g), J = quartic_J(g);
    return (4 * I * I * I - J * J) / 27;
}

Rat ShortWeierstrass::j_invariant() const {
    Rat denom = 4 * A * A * A + 27 * B * B;
    if (denom == 0) throw SingularQuartic("singular Weierstrass model");
    return Rat(1728) * 4 * A * A * A / denom;
}

ShortWeierstrass jacobian_of_quartic(const BinForm& g) {
    if (g.is_zero()) throw DegenerateQuartic("zero quartic");
    if (quartic_disc(g) == 0) throw SingularQuartic("quartic has a repeated root");
    Rat I = quartic_I(g), J = quartic_J(g);
    return ShortWeierstrass{-27 * I, -27 * J};
}

Rat j_invariant(const EllipticCurve2T& E) { return E.j_invariant(); }

BinForm associated_quartic(const QuadricIntersection& C) {
    // det(xA + yB): expand over the 24 permutations
    static const int perms[24][4] = {
        {0, 1, 2, 3}, {0, 1, 3, 2}, {0, 2, 1, 3}, {0, 2, 3, 1}, {0, 3, 1, 2}, {0, 3, 2, 1},
        {1, 0, 2, 3}, {1, 0, 3, 2}, {1, 2, 0, 3}, {1, 2, 3, 0}, {1, 3, 0, 2}, {1, 3, 2, 0},
        {2, 0, 1, 3}, {2, 0, 3, 1}, {2, 1, 0, 3}, {2, 1, 3, 0}, {2, 3, 0, 1}, {2, 3, 1, 0},
        {3, 0, 1, 2}, {3, 0, 2, 1}, {3, 1, 0, 2}, {3, 1, 2, 0}, {3, 2, 0, 1}, {3, 2, 1, 0}};
    static const int sign[24] = {1, -1, -1, 1,  1, -1, -1, 1, 1,  -1, -1, 1,
                                 1, -1, -1, 1,  1, -1, -1, 1, 1,  -1, -1, 1};
    std::vector<Rat> out(5, Rat(0));
    for (int t = 0; t < 24; ++t) {
        // product over i of (A[i][p(i)] x + B[i][p(i)] y)
        std::vector<Rat> prod{Rat(1)};  // binary poly coefficients, deg index = power of y
        for (int i = 0; i < 4; ++i) {
            const Rat &ax = C.A[i][perms[t][i]], &by = C.B[i][perms[t][i]];
            std::vector<Rat> next(prod.size() + 1, Rat(0));
            for (size_t k = 0; k < prod.size(); ++k) {
                next[k] += prod[k] * ax;
                next[k + 1] += prod[k] * by;
            }
            prod = std::move(next);
        }
        for (int k = 0; k < 5; ++k) out[k] += Rat(sign[t]) * prod[k];
    }
    return BinForm(out);  // coefficient of x^(4-k) y^k
}

bool qi_nonsingular(const QuadricIntersection& C) {
    // distinct roots of det(xA+yB) in P^1; the I/J discriminant covers the
    // root at infinity correctly for binary forms of formal degree 4
    BinForm q = associated_quartic(C);
    return !q.is_zero() && quartic_disc(q) != 0;
}

Mat4 quad_normalize(const Mat4& m) {
    // scale so all entries of the *coefficient vector* are integral and primitive
    auto v = quad_to_vec(m);
    Int den(1);
    for (auto& x : v) den = lcm(den, x.get_den());
    Int g(0);
    for (auto& x : v) g = gcd(g, Int(x.get_num() * den / x.get_den()));
    if (g == 0) return m;
    Rat scale(den, g);
    for (auto& x : v)
        if (x != 0) { if (x < 0) scale = -scale; break; }
    return mat4_scale(m, scale);
}

QuadricIntersection qi_normalize(const QuadricIntersection& C) {
    return {quad_normalize(C.A), quad_normalize(C.B)};
}

LinearChange LinearChange::identity(size_t n) {
    QMatrix m(n, n);
    for (size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return LinearChange{m, m};
}

LinearChange LinearChange::from_matrix(const QMatrix& m) {
    size_t n = m.rows;
    if (m.cols != n) throw DimensionMismatch("LinearChange: not square");
    // invert by solving against identity
    QMatrix inv(n, n);
    for (size_t c = 0; c < n; ++c) {
        std::vector<Rat> rhs(n, Rat(0));
        rhs[c] = 1;
        auto x = qmat_solve(m, rhs);
        if (!x) throw DimensionMismatch("LinearChange: singular matrix");
        for (size_t r = 0; r < n; ++r) inv.at(r, c) = (*x)[r];
    }
    return LinearChange{m, inv};
}

LinearChange LinearChange::compose(const LinearChange& inner) const {
    if (n() != inner.n()) throw DimensionMismatch("compose: size mismatch");
    size_t N = n();
    QMatrix prod(N, N);
    for (size_t i = 0; i < N; ++i)
        for (size_t j = 0; j < N; ++j) {
            Rat s(0);
            for (size_t k = 0; k < N; ++k) s += m.at(i, k) * inner.m.at(k, j);
            prod.at(i, j) = s;
        }
    return from_matrix(prod);
}

LinearChange LinearChange::inverse() const { return LinearChange{inv, m}; }

Mat4 transform(const Mat4& q, const LinearChange& ch) {
    if (ch.n() != 4) throw DimensionMismatch("transform: change must be 4x4");
    Mat4 out = mat4_zero();
    // out = M^T q M
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            Rat s(0);
            for (int k = 0; k < 4; ++k)
                for (int l = 0; l < 4; ++l) s += ch.m.at(k, i) * q[k][l] * ch.m.at(l, j);
            out[i][j] = s;
        }
    return out;
}

QuadricIntersection transform(const QuadricIntersection& C, const LinearChange& ch) {
    return {transform(C.A, ch), transform(C.B, ch)};
}

BinForm transform(const BinForm& f, const Rat& p, const Rat& q, const Rat& r, const Rat& s) {
    return f.subst(p, q, r, s);
}

std::array<Rat, 4> map_point_new_to_old(const LinearChange& ch, const std::array<Rat, 4>& x) {
    std::array<Rat, 4> out{Rat(0), Rat(0), Rat(0), Rat(0)};
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) out[i] += ch.m.at(i, j) * x[j];
    return out;
}

std::array<Rat, 4> map_point_old_to_new(const LinearChange& ch, const std::array<Rat, 4>& x) {
    std::array<Rat, 4> out{Rat(0), Rat(0), Rat(0), Rat(0)};
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) out[i] += ch.inv.at(i, j) * x[j];
    return out;
}

std::vector<Mat4> two_uple_basis(const QuadricIntersection& C) {
    // greedily complete span{A, B} by monomial quadrics
    std::vector<std::vector<Rat>> rows{quad_to_vec(C.A), quad_to_vec(C.B)};
    auto rank_of = [&](const std::vector<std::vector<Rat>>& rs) {
        QMatrix m(rs.size(), kQuadMonomials);
        for (size_t i = 0; i < rs.size(); ++i)
            for (int j = 0; j < kQuadMonomials; ++j) m.at(i, j) = rs[i][j];
        return qmat_rank(m);
    };
    std::vector<Mat4> out;
    auto mons = quad_monomials();
    for (int k = 0; k < kQuadMonomials && out.size() < 8; ++k) {
        std::vector<Rat> v(kQuadMonomials, Rat(0));
        v[k] = 1;
        rows.push_back(v);
        if (rank_of(rows) == rows.size()) {
            out.push_back(vec_to_quad(v));
        } else {
            rows.pop_back();
        }
    }
    if (out.size() != 8) throw DimensionMismatch("two_uple_basis: ideal not 2-dimensional");
    return out;
}

Int coeff_height(const Mat4& m) {
    Int h(0);
    for (auto& x : quad_to_vec(m)) {
        Int a = abs(x.get_num()), d = x.get_den();
        h = std::max({h, a, d});
    }
    return h;
}

Int coeff_height(const QuadricIntersection& C) {
    return std::max(coeff_height(C.A), coeff_height(C.B));
}

Int coeff_height(const BinForm& f) {
    Int h(0);
    for (auto& x : f.c) h = std::max({h, abs(x.get_num()), Int(x.get_den())});
    return h;
}

std::pair<QuadricIntersection, LinearChange> reduce_model(const QuadricIntersection& C0) {
    QuadricIntersection C = qi_normalize(C0);
    LinearChange total = LinearChange::identity(4);
    for (int pass = 0; pass < 12; ++pass) {
        Int before = coeff_height(C);
        // LLL on the positive definite Gram A^2 + B^2
        QMatrix G(4, 4);
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) {
                Rat s(0);
                for (int k = 0; k < 4; ++k) s += C.A[i][k] * C.A[k][j] + C.B[i][k] * C.B[k][j];
                G.at(i, j) = s;
            }
        bool pd = true;
        for (int i = 0; i < 4; ++i)
            if (G.at(i, i) <= 0) pd = false;
        if (pd) {
            auto U = lll_reduce_gram(G);
            QMatrix M(4, 4);
            for (int i = 0; i < 4; ++i)
                for (int j = 0; j < 4; ++j) M.at(i, j) = Rat(U[j][i]);  // columns = new basis
            LinearChange ch = LinearChange::from_matrix(M);
            QuadricIntersection Cnew = qi_normalize(transform(C, ch));
            if (coeff_height(Cnew) < coeff_height(C)) {
                C = Cnew;
                total = total.compose(ch);
            }
        }
        // pencil moves: B <- B + kA or A <- A + kB for small k
        bool improved = false;
        for (int k : {1, -1, 2, -2}) {
            QuadricIntersection C1{C.A, quad_normalize(mat4_add(C.B, mat4_scale(C.A, Rat(k))))};
            if (coeff_height(C1) < coeff_height(C)) { C = C1; improved = true; break; }
            QuadricIntersection C2{quad_normalize(mat4_add(C.A, mat4_scale(C.B, Rat(k)))), C.B};
            if (coeff_height(C2) < coeff_height(C)) { C = C2; improved = true; break; }
        }
        if (!improved && coeff_height(C) >= before) break;
    }
    return {C, total};
}

std::pair<BinForm, GL2Change> reduce_model(const BinForm& q0) {
    BinForm q = normalize_integral(q0);
    GL2Change total{Rat(1), Rat(0), Rat(0), Rat(1)};
    auto apply = [&](const Rat& p, const Rat& qq, const Rat& r, const Rat& s) {
        q = normalize_integral(q.subst(p, qq, r, s));
        // compose on the right: new substitution happens first
        GL2Change t{total.p * p + total.q * r, total.p * qq + total.q * s,
                    total.r * p + total.s * r, total.r * qq + total.s * s};
        total = t;
    };
    for (int pass = 0; pass < 64; ++pass) {
        Int before = coeff_height(q);
        // center the x-side: shift by round(-b/(4a))
        if (q.c[0] != 0) {
            Int k = round_rat(-q.c[1] / (4 * q.c[0]));
            if (k != 0) {
                BinForm cand = normalize_integral(q.subst(Rat(1), Rat(k), Rat(0), Rat(1)));
                if (coeff_height(cand) < before) { apply(Rat(1), Rat(k), Rat(0), Rat(1)); continue; }
            }
        }
        if (q.c[4] != 0) {
            Int k = round_rat(-q.c[3] / (4 * q.c[4]));
            if (k != 0) {
                BinForm cand = normalize_integral(q.subst(Rat(1), Rat(0), Rat(k), Rat(1)));
                if (coeff_height(cand) < before) { apply(Rat(1), Rat(0), Rat(k), Rat(1)); continue; }
            }
        }
        bool improved = false;
        for (auto [p, qq, r, s] : std::vector<std::array<long, 4>>{
                 {1, 1, 0, 1}, {1, -1, 0, 1}, {1, 0, 1, 1}, {1, 0, -1, 1}, {0, 1, -1, 0}}) {
            BinForm cand = normalize_integral(q.subst(Rat(p), Rat(qq), Rat(r), Rat(s)));
            if (coeff_height(cand) < before) {
                apply(Rat(p), Rat(qq), Rat(r), Rat(s));
                improved = true;
                break;
            }
        }
        if (!improved) break;
    }
    return {q, total};
}

std::array<Rat, 4> primitive_point(const std::array<Rat, 4>& x) {
    Int den(1);
    for (auto& c : x) den = lcm(den, c.get_den());
    std::array<Int, 4> v;
    Int g(0);
    for (int i = 0; i < 4; ++i) {
        v[i] = x[i].get_num() * den / x[i].get_den();
        g = gcd(g, v[i]);
    }
    if (g == 0) return x;
    int lead_sign = 1;
    for (int i = 0; i < 4; ++i)
        if (v[i] != 0) { lead_sign = v[i] < 0 ? -1 : 1; break; }
    std::array<Rat, 4> out;
    for (int i = 0; i < 4; ++i) out[i] = Rat(v[i] * lead_sign / g);
    return out;
}

std::array<Rat, 3> primitive_point3(const std::array<Rat, 3>& x) {
    Int den(1);
    for (auto& c : x) den = lcm(den, c.get_den());
    std::array<Int, 3> v;
    Int g(0);
    for (int i = 0; i < 3; ++i) {
        v[i] = x[i].get_num() * den / x[i].get_den();
        g = gcd(g, v[i]);
    }
    if (g == 0) return x;
    int lead_sign = 1;
    for (int i = 0; i < 3; ++i)
        if (v[i] != 0) { lead_sign = v[i] < 0 ? -1 : 1; break; }
    std::array<Rat, 3> out;
    for (int i = 0; i < 3; ++i) out[i] = Rat(v[i] * lead_sign / g);
    return out;
}

Mat3 mat3_zero() {
    Mat3 m;
    for (auto& r : m) r.fill(Rat(0));
    return m;
}

Rat mat3_det(const Mat3& m) {
    return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
           m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
           m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

Mat3 mat3_adjugate(const Mat3& m) {
    Mat3 a = mat3_zero();
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            int r0 = (i + 1) % 3, r1 = (i + 2) % 3, c0 = (j + 1) % 3, c1 = (j + 2) % 3;
            a[j][i] = m[r0][c0] * m[r1][c1] - m[r0][c1] * m[r1][c0];
        }
    return a;
}

Rat conic_eval(const Mat3& m, const std::array<Rat, 3>& x) {
    Rat r(0);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) r += m[i][j] * x[i] * x[j];
    return r;
}

int mat3_rank(const Mat3& m) {
    QMatrix q(3, 3);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) q.at(i, j) = m[i][j];
    return int(qmat_rank(q));
}

Mat3 mat3_normalize(const Mat3& m) {
    std::vector<Rat> v;
    for (int i = 0; i < 3; ++i)
        for (int j = i; j < 3; ++j) v.push_back(i == j ? m[i][j] : 2 * m[i][j]);
    Int den(1);
    for (auto& x : v) den = lcm(den, x.get_den());
    Int g(0);
    for (auto& x : v) g = gcd(g, Int(x.get_num() * den / x.get_den()));
    if (g == 0) return m;
    Rat scale(den, g);
    for (auto& x : v)
        if (x != 0) { if (x < 0) scale = -scale; break; }
    Mat3 out = m;
    for (auto& r : out)
        for (auto& x : r) x *= scale;
    return out;
}

}  // namespace hdesc
