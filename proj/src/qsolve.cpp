#include "hdesc/qsolve.hpp"

#include <algorithm>
#include <functional>
#include <map>

namespace hdesc {

namespace {

// n = s * u^2 with s square-free. Uses hints, then expects a perfect-square
// cofactor (the structural case in descent), then falls back to rho.
std::pair<Int, Int> squarefree_split(const Int& n0, const std::vector<Int>& hints) {
    if (n0 == 0) throw std::invalid_argument("squarefree_split(0)");
    Int n = abs(n0), s = n0 < 0 ? -1 : 1, u = 1;
    for (const Int& p : hints) {
        if (p <= 1 || n == 1) continue;
        if (mod(n, p) != 0) continue;
        long v = split_valuation(n, p);
        if (v & 1) s *= p;
        for (long i = 0; i < v / 2; ++i) u *= p;
    }
    // small trial division
    for (unsigned long p : {2ul, 3ul, 5ul, 7ul, 11ul, 13ul, 17ul, 19ul, 23ul, 29ul, 31ul}) {
        if (n == 1) break;
        if (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
            Int pp(p);
            long v = split_valuation(n, pp);
            if (v & 1) s *= pp;
            for (long i = 0; i < v / 2; ++i) u *= pp;
        }
    }
    if (n == 1) return {s, u};
    if (is_square(n)) return {s, u * isqrt(n)};
    if (is_prime(n)) return {s * n, u};
    auto f = factor(n);  // general fallback
    for (auto& [p, e] : f.factors) {
        if (e & 1) s *= p;
        for (int i = 0; i < e / 2; ++i) u *= ipow(p, 1);
    }
    return {s, u};
}

struct DiagResult {
    std::vector<Rat> d;  // diagonal entries
    QMatrix change;      // columns = new basis in old coords; change^T q change = diag
};

DiagResult diagonalize(QMatrix q) {
    size_t n = q.rows;
    QMatrix M(n, n);
    for (size_t i = 0; i < n; ++i) M.at(i, i) = 1;
    auto addcol = [&](size_t dst, size_t src, const Rat& c) {
        // basis e_dst += c e_src : q' = (col op on both sides)
        for (size_t k = 0; k < n; ++k) q.at(k, dst) += c * q.at(k, src);
        for (size_t k = 0; k < n; ++k) q.at(dst, k) += c * q.at(src, k);
        for (size_t k = 0; k < n; ++k) M.at(k, dst) += c * M.at(k, src);
    };
    auto swapcol = [&](size_t i, size_t j) {
        for (size_t k = 0; k < n; ++k) std::swap(q.at(k, i), q.at(k, j));
        for (size_t k = 0; k < n; ++k) std::swap(q.at(i, k), q.at(j, k));
        for (size_t k = 0; k < n; ++k) std::swap(M.at(k, i), M.at(k, j));
    };
    for (size_t i = 0; i < n; ++i) {
        if (q.at(i, i) == 0) {
            size_t j = i + 1;
            for (; j < n; ++j)
                if (q.at(j, j) != 0) { swapcol(i, j); break; }
            if (q.at(i, i) == 0) {
                for (j = i + 1; j < n; ++j)
                    if (q.at(i, j) != 0) { addcol(i, j, Rat(1)); break; }
            }
        }
        if (q.at(i, i) == 0) continue;  // row/col identically zero: rank deficit
        for (size_t j = i + 1; j < n; ++j) {
            if (q.at(i, j) == 0) continue;
            addcol(j, i, -q.at(i, j) / q.at(i, i));
        }
    }
    DiagResult out;
    out.change = M;
    for (size_t i = 0; i < n; ++i) out.d.push_back(q.at(i, i));
    return out;
}

// small brute-force point search on a diagonal-free symmetric form
template <size_t N, class Eval>
std::optional<std::array<Rat, N>> tiny_search(const Eval& ev, int bound) {
    std::array<long, N> v{};
    std::function<std::optional<std::array<Rat, N>>(size_t)> rec =
        [&](size_t i) -> std::optional<std::array<Rat, N>> {
        if (i == N) {
            bool allz = true;
            for (auto x : v) allz &= (x == 0);
            if (allz) return std::nullopt;
            std::array<Rat, N> p;
            for (size_t k = 0; k < N; ++k) p[k] = Rat(v[k]);
            if (ev(p) == 0) return p;
            return std::nullopt;
        }
        for (long t = 0; t <= bound; ++t)
            for (int sg : {1, -1}) {
                if (t == 0 && sg < 0) continue;
                v[i] = sg * t;
                if (auto r = rec(i + 1)) return r;
            }
        return std::nullopt;
    };
    return rec(0);
}

// ---- Legendre descent core -------------------------------------------------

struct FInt {  // integer together with its factorization
    Int n;
    std::vector<Int> primes;  // prime support of n
};

FInt make_fint(const Int& n, const std::vector<Int>& hints) {
    FInt f;
    f.n = n;
    if (abs(n) > 1)
        for (auto& [p, e] : factor(n, hints).factors) f.primes.push_back(p);
    return f;
}

// all CRT square roots of A mod |B| (B square-free), capped in count
std::vector<Int> sqrt_classes_mod(const Int& A, const FInt& B, size_t cap) {
    Int Babs = abs(B.n);
    std::vector<Int> roots{Int(0)};
    Int m(1);
    for (const Int& p : B.primes) {
        std::vector<Int> proots;
        if (p == 2) {
            proots.push_back(mod(A, Int(2)));
        } else {
            Int a = mod(A, p);
            if (a == 0) proots.push_back(Int(0));
            else {
                auto r = sqrt_mod_prime(a, p);
                if (!r) return {};  // locally insoluble; caller prechecks
                proots.push_back(*r);
                if (*r != 0) proots.push_back(p - *r);
            }
        }
        std::vector<Int> next;
        for (const Int& r0 : roots) {
            for (const Int& rp : proots) {
                // CRT: x = r0 mod m, x = rp mod p
                Int g, u, v;
                mpz_gcdext(g.get_mpz_t(), u.get_mpz_t(), v.get_mpz_t(), m.get_mpz_t(),
                           p.get_mpz_t());
                Int x = mod(r0 + m * mod(u * (rp - r0), p), m * p);
                next.push_back(x);
                if (next.size() >= cap) break;
            }
            if (next.size() >= cap) break;
        }
        roots = std::move(next);
        m *= p;
    }
    return roots;
}

std::array<Int, 3> primitive3(std::array<Int, 3> v) {
    Int g = gcd(gcd(v[0], v[1]), v[2]);
    if (g > 1)
        for (auto& x : v) x /= g;
    return v;
}

// A x^2 + B y^2 = z^2, A and B square-free; solvability assumed.
std::optional<std::array<Int, 3>> solve_AB(const FInt& A, const FInt& B, int depth) {
    if (depth > 400) return std::nullopt;
    if (A.n == 1) return std::array<Int, 3>{1, 0, 1};
    if (B.n == 1) return std::array<Int, 3>{0, 1, 1};
    if (abs(A.n) > abs(B.n)) {
        auto r = solve_AB(B, A, depth + 1);
        if (!r) return std::nullopt;
        return std::array<Int, 3>{(*r)[1], (*r)[0], (*r)[2]};
    }
    if (B.n == -1) return std::nullopt;  // A in {1,-1} handled; -1,-1 insoluble
    if (abs(B.n) <= 60 && abs(A.n) <= 60) {
        long a = A.n.get_si(), b = B.n.get_si();
        for (long z = 0; z <= 80; ++z)
            for (long x = 0; x <= 80; ++x)
                for (long y = 0; y <= 80; ++y) {
                    if (!x && !y) continue;
                    if (a * x * x + b * y * y == z * z)
                        return primitive3({Int(x), Int(y), Int(z)});
                }
        return std::nullopt;
    }

    Int Babs = abs(B.n);
    auto base_roots = sqrt_classes_mod(A.n, B, 1u << 10);
    if (base_roots.empty()) return std::nullopt;

    // candidate t = (w^2 - A)/B, preferring prime/smooth/square values
    struct Cand {
        Int w, t, s, u;  // t = s u^2
    };
    std::optional<Cand> best;
    auto consider = [&](const Int& w) {
        Int num = w * w - A.n;
        if (mod(num, B.n) != 0) return;
        Int t = num / B.n;
        if (t == 0) { best = Cand{w, t, Int(0), Int(1)}; return; }
        // cheap structure detection only
        Int n = abs(t), s = t < 0 ? -1 : 1, u = 1;
        for (unsigned long p = 2; p < 1000; p = (p == 2 ? 3 : p + 2)) {
            if (n == 1) break;
            if (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
                Int pp(p);
                long v = split_valuation(n, pp);
                if (v & 1) s *= pp;
                for (long i = 0; i < v / 2; ++i) u *= pp;
            }
        }
        if (n != 1) {
            if (is_square(n)) u *= isqrt(n);
            else if (is_prime(n)) s *= n;
            else return;  // would need a real factorization; skip
        }
        if (abs(s) >= abs(B.n)) return;  // no descent
        if (!best || abs(s) < abs(best->s)) best = Cand{w, t, s, u};
    };
    for (long K : {2l, 8l, 48l, 256l}) {
        for (const Int& r : base_roots) {
            Int w0 = r;
            if (w0 > Babs / 2) w0 -= Babs;  // centered representative
            for (long k = -K; k <= K; ++k) consider(w0 + k * Babs);
        }
        if (best && abs(best->s) * 16 < Babs) break;  // good enough descent
        if (best && K >= 48) break;
    }
    if (!best) {
        // fall back to honest factorization of the centered candidate
        Int w0 = base_roots[0];
        if (w0 > Babs / 2) w0 -= Babs;
        Int t = (w0 * w0 - A.n) / B.n;
        if (t == 0) best = Cand{w0, t, Int(0), Int(1)};
        else {
            auto [s, u] = squarefree_split(t, {});
            best = Cand{w0, t, s, u};
        }
    }
    const Cand& c = *best;
    if (c.t == 0) {
        // A = w^2
        return primitive3({Int(1), Int(0), c.w});
    }
    FInt S = make_fint(c.s, B.primes);
    auto sub = solve_AB(A, S, depth + 1);
    if (!sub) return std::nullopt;
    auto [x1, y1, z1] = *sub;
    // from w^2 - A = B s u^2 and A x1^2 + s y1^2 = z1^2:
    Int x = c.w * x1 + z1;
    Int y = c.s * c.u * y1;
    Int z = c.w * z1 + A.n * x1;
    if (x == 0 && y == 0 && z == 0) return std::nullopt;
    return primitive3({x, y, z});
}

}  // namespace

std::optional<std::array<Int, 3>> solve_legendre_pair(const Int& A, const Int& B,
                                                      const std::vector<Int>& hints) {
    return solve_AB(make_fint(A, hints), make_fint(B, hints), 0);
}

ConicResult solve_conic(const Mat3& q0, const std::vector<Int>& hints) {
    Mat3 q = mat3_normalize(q0);
    if (mat3_rank(q) != 3) throw DegenerateForm("solve_conic: rank != 3");
    ConicResult res;

    if (auto tp = tiny_search<3>([&](const std::array<Rat, 3>& p) { return conic_eval(q, p); }, 5)) {
        res.point = primitive_point3(*tp);
        return res;
    }

    QMatrix qm(3, 3);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) qm.at(i, j) = q[i][j];
    auto dg = diagonalize(qm);

    // scale diagonal entries to square-free integers, absorbing squares in coords
    std::array<Int, 3> s;
    std::array<Rat, 3> coord_scale;  // new coord x_i corresponds to old x_i / scale
    for (int i = 0; i < 3; ++i) {
        Rat d = dg.d[i];
        if (d == 0) throw DegenerateForm("solve_conic: degenerate after diagonalization");
        Int nd = d.get_num() * d.get_den();  // same class
        auto [sf, u] = squarefree_split(nd, hints);
        s[i] = sf;
        // d * x^2 = sf * (x * u * den/..)^2 : precise scale = sqrt(d/sf)
        Rat ratio = d / Rat(sf);
        auto r = rat_sqrt(ratio);
        if (!r) throw std::logic_error("solve_conic: internal square mismatch");
        coord_scale[i] = *r;
    }

    // all signs equal -> insoluble at the real place
    if ((s[0] > 0 && s[1] > 0 && s[2] > 0) || (s[0] < 0 && s[1] < 0 && s[2] < 0)) {
        res.obstruction = LocalObstruction{Place::real(), Rat(-s[0] * s[2]), Rat(-s[1] * s[2])};
        return res;
    }
    // local solvability at finite bad places
    std::vector<Int> bad{Int(2)};
    for (int i = 0; i < 3; ++i)
        for (auto& p : make_fint(s[i], hints).primes)
            if (std::find(bad.begin(), bad.end(), p) == bad.end()) bad.push_back(p);
    for (const Int& p : bad) {
        if (hilbert_symbol(Rat(-s[0] * s[2]), Rat(-s[1] * s[2]), Place::prime(p)) != 0) {
            res.obstruction = LocalObstruction{Place::prime(p), Rat(-s[0] * s[2]), Rat(-s[1] * s[2])};
            return res;
        }
    }

    // s0 x^2 + s1 y^2 + s2 z^2 = 0  <=>  (-s0 s2) x^2 + (-s1 s2) y^2 = (s2 z)^2
    auto [A, ua] = squarefree_split(-s[0] * s[2], bad);
    auto [B, ub] = squarefree_split(-s[1] * s[2], bad);
    auto sol = solve_AB(make_fint(A, bad), make_fint(B, bad), 0);
    if (!sol) throw std::logic_error("solve_conic: descent failed on locally soluble form");
    auto [X, Y, Z] = *sol;
    // A' (ua y0)^2 + B' (ub y1)^2 = (s2 y2)^2 against A' X^2 + B' Y^2 = Z^2
    std::array<Rat, 3> pd{Rat(X) / Rat(ua), Rat(Y) / Rat(ub), Rat(Z) / Rat(s[2])};
    // undo square-free coordinate scaling and diagonalization
    std::array<Rat, 3> pdiag;
    for (int i = 0; i < 3; ++i) pdiag[i] = pd[i] / coord_scale[i];
    std::array<Rat, 3> pt{Rat(0), Rat(0), Rat(0)};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) pt[i] += dg.change.at(i, j) * pdiag[j];
    auto P = primitive_point3(pt);
    if (conic_eval(q, P) != 0) throw std::logic_error("solve_conic: point verification failed");
    res.point = P;
    return res;
}

ConicParametrisation parametrize_conic(const Mat3& q, const std::array<Rat, 3>& point0) {
    auto P = primitive_point3(point0);
    if (conic_eval(q, P) != 0) throw PointNotOnConic("parametrize_conic: q(P) != 0");
    std::array<Int, 3> p;
    for (int i = 0; i < 3; ++i) p[i] = P[i].get_num();

    // unimodular U with first column P
    // complete (p0,p1,p2) to a basis of Z^3
    Int g01, a, b;
    mpz_gcdext(g01.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t(), p[0].get_mpz_t(), p[1].get_mpz_t());
    Int g, c, d;
    mpz_gcdext(g.get_mpz_t(), c.get_mpz_t(), d.get_mpz_t(), g01.get_mpz_t(), p[2].get_mpz_t());
    // rows trick: standard completion
    QMatrix U(3, 3);
    // column 0 = P
    for (int i = 0; i < 3; ++i) U.at(i, 0) = Rat(p[i]);
    // column 1 kills the (p0,p1) gcd direction
    U.at(0, 1) = Rat(-b);
    U.at(1, 1) = Rat(a);
    U.at(2, 1) = Rat(0);
    // column 2
    if (g01 == 0) {
        U.at(0, 1) = 1; U.at(1, 1) = 0; U.at(2, 1) = 0;
        U.at(0, 2) = 0; U.at(1, 2) = 1; U.at(2, 2) = 0;
    } else {
        U.at(0, 2) = Rat(-d * p[0] / g01);
        U.at(1, 2) = Rat(-d * p[1] / g01);
        U.at(2, 2) = Rat(c);
    }
    LinearChange ch = LinearChange::from_matrix(U);  // throws if not invertible

    // q' = U^T q U with q'(e0) = 0
    Mat3 qp = mat3_zero();
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            Rat v(0);
            for (int k = 0; k < 3; ++k)
                for (int l = 0; l < 3; ++l) v += U.at(k, i) * q[k][l] * U.at(l, j);
            qp[i][j] = v;
        }
    Rat b1 = qp[0][1], b2 = qp[0][2];
    Rat c1 = qp[1][1], c2 = 2 * qp[1][2], c3 = qp[2][2];
    // line parametrisation through (1:0:0): (x:y:z) = (-C(l,m) : 2B(l,m) l : 2B(l,m) m)
    BinForm Cf({c1, c2, c3});
    BinForm Bf({2 * b1, 2 * b2});  // degree 1
    BinForm F0({-Cf.c[0], -Cf.c[1], -Cf.c[2]});
    BinForm G0({Bf.c[0], Bf.c[1], Rat(0)});  // 2B(l,m)*l
    BinForm H0({Rat(0), Bf.c[0], Bf.c[1]});  // 2B(l,m)*m
    // base point at B(l,m) = 0: (l:m) = (b2 : -b1); recenter so (1:0) -> P
    Rat al = b2, am = -b1;
    // unimodular-ish completion over Q: second column (u,v) with al*v - am*u != 0
    Rat u(0), v(1);
    if (am == 0) { u = 0; v = 1; }
    else if (al == 0) { u = 1; v = 0; }
    else { u = 0; v = 1; }
    if (al * v - am * u == 0) { u = 1; v = 0; }
    auto recenter = [&](const BinForm& f) { return f.subst(al, u, am, v); };
    BinForm F1 = recenter(F0), G1 = recenter(G0), H1 = recenter(H0);
    // back to original coordinates
    ConicParametrisation out;
    out.conic = q;
    std::array<BinForm, 3> fs{F1, G1, H1};
    std::array<BinForm, 3> res;
    for (int i = 0; i < 3; ++i) {
        std::vector<Rat> cf(3, Rat(0));
        res[i] = BinForm(cf);
    }
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            for (int k = 0; k < 3; ++k) res[i].c[k] += U.at(i, j) * fs[j].c[k];
    // joint content normalization
    Int den(1);
    for (auto& f : res)
        for (auto& x : f.c) den = lcm(den, x.get_den());
    Int gg(0);
    for (auto& f : res)
        for (auto& x : f.c) gg = gcd(gg, Int(x.get_num() * den / x.get_den()));
    Rat scale = gg == 0 ? Rat(1) : Rat(den, gg);
    for (auto& f : res)
        for (auto& x : f.c) x *= scale;
    out.F = res[0];
    out.G = res[1];
    out.H = res[2];
    return out;
}

QuadricSurfaceResult solve_quadric_surface(const Mat4& q0, const std::vector<Int>& hints) {
    Mat4 q = quad_normalize(q0);
    QuadricSurfaceResult res;
    if (mat4_rank(q) != 4) throw DegenerateForm("solve_quadric_surface: rank != 4");

    if (auto tp = tiny_search<4>([&](const std::array<Rat, 4>& p) { return quad_eval(q, p); }, 3)) {
        res.point = primitive_point(*tp);
        return res;
    }

    QMatrix qm(4, 4);
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) qm.at(i, j) = q[i][j];
    auto dg = diagonalize(qm);
    std::array<Int, 4> s;
    std::array<Rat, 4> coord_scale;
    for (int i = 0; i < 4; ++i) {
        Rat d = dg.d[i];
        if (d == 0) throw DegenerateForm("solve_quadric_surface: degenerate diagonal");
        auto [sf, u] = squarefree_split(d.get_num() * d.get_den(), hints);
        s[i] = sf;
        auto r = rat_sqrt(d / Rat(sf));
        coord_scale[i] = *r;
    }

    bool pos = false, neg = false;
    for (auto& x : s) (x > 0 ? pos : neg) = true;
    if (!pos || !neg) {
        res.obstruction = LocalObstruction{Place::real(), Rat(s[0]), Rat(s[1])};
        return res;
    }

    std::vector<Int> bad{Int(2)};
    for (int i = 0; i < 4; ++i)
        for (auto& p : make_fint(s[i], hints).primes)
            if (std::find(bad.begin(), bad.end(), p) == bad.end()) bad.push_back(p);

    // local solvability: exists class t represented by <s0,s1> and by <-s2,-s3>
    auto local_classes = [](const Int& p) {
        std::vector<Rat> cl;
        if (p == 2) {
            for (long u : {1, -1, 5, -5}) { cl.push_back(Rat(u)); cl.push_back(Rat(2 * u)); }
        } else {
            Int u = 2;
            while (legendre(u, p) != -1) ++u;
            cl = {Rat(1), Rat(u), Rat(p), Rat(u * p)};
        }
        return cl;
    };
    for (const Int& p : bad) {
        Place v = Place::prime(p);
        bool ok = false;
        for (const Rat& t : local_classes(p)) {
            if (hilbert_symbol(Rat(s[0]) * t, Rat(s[1]) * t, v) == 0 &&
                hilbert_symbol(Rat(-s[2]) * t, Rat(-s[3]) * t, v) == 0) {
                ok = true;
                break;
            }
        }
        if (!ok) {
            res.obstruction = LocalObstruction{v, Rat(s[0] * s[1]), Rat(s[2] * s[3])};
            return res;
        }
    }

    // global t over the bad support: linear conditions
    // (t, -s0 s1)_v = (s0, s1)_v  and  (t, -s2 s3)_v = (-s2, -s3)_v for bad v + oo
    std::vector<Int> basis{Int(-1)};
    for (auto& p : bad) basis.push_back(p);
    std::vector<Place> places;
    for (auto& p : bad) places.push_back(Place::prime(p));
    places.push_back(Place::real());

    auto build_solve = [&](const std::vector<Int>& tbasis,
                           const std::vector<uint8_t>& forced) -> std::optional<Int> {
        size_t nb = tbasis.size();
        std::vector<F2Vec> rows;
        F2Vec rhs;
        auto add_cond = [&](const Rat& m, const Place& v, int target) {
            F2Vec row(nb, 0);
            for (size_t j = 0; j < nb; ++j)
                row[j] = uint8_t(hilbert_symbol(Rat(tbasis[j]), m, v));
            rows.push_back(row);
            rhs.push_back(uint8_t(target));
        };
        std::vector<Place> pl = places;
        for (size_t j = 0; j < nb; ++j)
            if (tbasis[j] > 2 &&
                std::find(bad.begin(), bad.end(), tbasis[j]) == bad.end())
                pl.push_back(Place::prime(tbasis[j]));
        for (const Place& v : pl) {
            add_cond(Rat(-s[0] * s[1]), v, hilbert_symbol(Rat(s[0]), Rat(s[1]), v));
            add_cond(Rat(-s[2] * s[3]), v, hilbert_symbol(Rat(-s[2]), Rat(-s[3]), v));
        }
        // forced bits (auxiliary prime must appear)
        for (size_t j = 0; j < nb; ++j)
            if (j < forced.size() && forced[j]) {
                F2Vec row(nb, 0);
                row[j] = 1;
                rows.push_back(row);
                rhs.push_back(1);
            }
        F2Matrix M(rows.size(), nb);
        for (size_t i = 0; i < rows.size(); ++i) M.set_row(i, rows[i]);
        auto sol = M.solve(rhs);
        if (!sol) return std::nullopt;
        Int t(1);
        for (size_t j = 0; j < nb; ++j)
            if ((*sol)[j]) t *= tbasis[j];
        return t;
    };

    std::optional<Int> t = build_solve(basis, {});
    if (!t) {
        // auxiliary prime extension
        for (Int qp = 3; qp < 5000 && !t; qp = qp + 2) {
            if (!is_prime(qp)) continue;
            if (std::find(bad.begin(), bad.end(), qp) != bad.end()) continue;
            auto b2 = basis;
            b2.push_back(qp);
            std::vector<uint8_t> forced(b2.size(), 0);
            forced.back() = 1;
            t = build_solve(b2, forced);
        }
        if (!t) throw std::logic_error("solve_quadric_surface: no common value found");
    }

    // two ternary solves: <s0, s1, -t> and <s2, s3, t>
    auto mk3 = [](const Int& a, const Int& b, const Int& c) {
        Mat3 m = mat3_zero();
        m[0][0] = Rat(a);
        m[1][1] = Rat(b);
        m[2][2] = Rat(c);
        return m;
    };
    std::vector<Int> h2 = bad;
    for (auto& p : make_fint(*t, bad).primes)
        if (std::find(h2.begin(), h2.end(), p) == h2.end()) h2.push_back(p);
    auto c1 = solve_conic(mk3(s[0], s[1], -*t), h2);
    auto c2 = solve_conic(mk3(s[2], s[3], *t), h2);
    if (!c1.point || !c2.point)
        throw std::logic_error("solve_quadric_surface: ternary subproblem unexpectedly insoluble");
    auto [u1, u2, w1] = *c1.point;
    auto [u3, u4, w2] = *c2.point;
    std::array<Rat, 4> pd;
    if (w1 == 0) pd = {u1, u2, Rat(0), Rat(0)};
    else if (w2 == 0) pd = {Rat(0), Rat(0), u3, u4};
    else pd = {u1 * w2, u2 * w2, u3 * w1, u4 * w1};

    std::array<Rat, 4> pdiag;
    for (int i = 0; i < 4; ++i) pdiag[i] = pd[i] / coord_scale[i];
    std::array<Rat, 4> pt{Rat(0), Rat(0), Rat(0), Rat(0)};
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) pt[i] += dg.change.at(i, j) * pdiag[j];
    auto P = primitive_point(pt);
    if (quad_eval(q, P) != 0)
        throw std::logic_error("solve_quadric_surface: point verification failed");
    res.point = P;
    return res;
}

std::optional<std::pair<Rat, Rat>> solve_norm_equation(const Int& d, const Rat& n,
                                                       const std::vector<Int>& hints) {
    SquareClass nc = squarefree_part(n, hints);
    Mat3 m = mat3_zero();
    m[0][0] = 1;
    m[1][1] = Rat(-d);
    m[2][2] = Rat(-nc.rep);
    auto r = solve_conic(m, hints);
    if (!r.point) return std::nullopt;
    auto [X, Y, Z] = *r.point;
    if (Z == 0) return std::nullopt;  // d would be a square
    Rat x = X / Z, y = Y / Z;
    // x^2 - d y^2 = nc.rep; rescale to norm exactly n
    auto sc = rat_sqrt(n / Rat(nc.rep));
    if (!sc) throw std::logic_error("solve_norm_equation: class mismatch");
    return std::make_pair(x * *sc, y * *sc);
}

}  // namespace hdesc
