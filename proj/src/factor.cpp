#include "hdesc/factor.hpp"

#include <algorithm>
#include <map>

namespace hdesc {

Int Factorization::value() const {
    Int v = sign;
    for (auto& [p, e] : factors) v *= ipow(p, e);
    return v;
}

bool Factorization::has_prime(const Int& p) const { return exponent(p) > 0; }

int Factorization::exponent(const Int& p) const {
    for (auto& [q, e] : factors)
        if (q == p) return e;
    return 0;
}

std::vector<Int> Factorization::primes() const {
    std::vector<Int> out;
    out.reserve(factors.size());
    for (auto& [p, e] : factors) out.push_back(p);
    return out;
}

Int Factorization::squarefree() const {
    Int v = sign;
    for (auto& [p, e] : factors)
        if (e & 1) v *= p;
    return v;
}

bool is_prime(const Int& n) {
    if (n < 2) return false;
    return mpz_probab_prime_p(n.get_mpz_t(), 30) != 0;
}

namespace {

const std::vector<unsigned long>& small_primes(unsigned long bound) {
    static std::vector<unsigned long> primes;
    static unsigned long sieved = 0;
    if (bound > sieved) {
        primes.clear();
        std::vector<bool> comp(bound + 1, false);
        for (unsigned long i = 2; i <= bound; ++i) {
            if (!comp[i]) {
                primes.push_back(i);
                for (unsigned long j = 2 * i; j <= bound; j += i) comp[j] = true;
            }
        }
        sieved = bound;
    }
    return primes;
}

// Brent's cycle variant of Pollard rho. Returns a nontrivial factor or 0.
Int brent_rho(const Int& n, unsigned long max_iter, unsigned long seed) {
    if (mpz_even_p(n.get_mpz_t())) return Int(2);
    gmp_randstate_t st;
    gmp_randinit_mt(st);
    gmp_randseed_ui(st, seed);
    Int result = 0;
    for (int attempt = 0; attempt < 64 && result == 0; ++attempt) {
        Int y, c, m = 128;
        mpz_urandomm(y.get_mpz_t(), st, n.get_mpz_t());
        mpz_urandomm(c.get_mpz_t(), st, n.get_mpz_t());
        if (c == 0) c = 1;
        Int g = 1, r = 1, q = 1, x, ys;
        unsigned long iter = 0;
        while (g == 1 && iter < max_iter) {
            x = y;
            for (Int i = 0; i < r; ++i) y = mod(y * y + c, n);
            Int k = 0;
            while (k < r && g == 1) {
                ys = y;
                Int lim = m < r - k ? m : r - k;
                if (lim < 1) lim = 1;
                for (Int i = 0; i < lim; ++i) {
                    y = mod(y * y + c, n);
                    q = mod(q * abs(x - y), n);
                }
                g = gcd(q, n);
                k += m;
                iter += mpz_get_ui(lim.get_mpz_t());
            }
            r *= 2;
        }
        if (g == n) {
            // backtrack
            g = 1;
            while (g == 1) {
                ys = mod(ys * ys + c, n);
                g = gcd(abs(x - ys), n);
            }
        }
        if (g != n && g > 1) result = g;
    }
    gmp_randclear(st);
    return result;
}

void factor_into(Int n, const FactorConfig& cfg, std::map<Int, int>& out, unsigned long& budget) {
    if (n == 1) return;
    if (is_prime(n)) { out[n]++; return; }
    if (is_square(n)) {
        Int r = isqrt(n);
        factor_into(r, cfg, out, budget);
        factor_into(r, cfg, out, budget);
        return;
    }
    if (budget == 0) throw FactorizationFailure(n);
    Int g = brent_rho(n, budget, 0x9e3779b9ul + mpz_get_ui(n.get_mpz_t()));
    if (g == 0 || g == 1 || g == n) throw FactorizationFailure(n);
    unsigned long spent = std::min<unsigned long>(budget, 1000);
    budget -= spent;
    factor_into(g, cfg, out, budget);
    factor_into(n / g, cfg, out, budget);
}

}  // namespace

namespace {
std::map<Int, Factorization>& factor_cache() {
    static std::map<Int, Factorization> cache;
    return cache;
}
}  // namespace

Factorization factor(const Int& n0, const FactorConfig& cfg) {
    if (n0 == 0) throw std::invalid_argument("factor(0)");
    {
        auto it = factor_cache().find(n0);
        if (it != factor_cache().end()) return it->second;
    }
    Factorization f;
    Int n = n0;
    if (n < 0) { f.sign = -1; n = -n; }
    std::map<Int, int> acc;
    for (const Int& h : cfg.hints) {
        if (h <= 1 || !is_prime(h)) continue;
        long v = 0;
        if (mod(n, h) == 0) v = split_valuation(n, h);
        if (v) acc[h] += int(v);
    }
    if (n > 1) {
        for (unsigned long p : small_primes(cfg.trial_bound)) {
            if (Int(p) * p > n) break;
            if (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
                Int pp(p);
                acc[pp] += int(split_valuation(n, pp));
            }
            if (n == 1) break;
        }
    }
    if (n > 1) {
        unsigned long budget = cfg.rho_iterations;
        factor_into(n, cfg, acc, budget);
    }
    for (auto& [p, e] : acc) f.factors.emplace_back(p, e);
    if (factor_cache().size() < 200000) factor_cache()[n0] = f;
    return f;
}

Factorization factor(const Int& n, const std::vector<Int>& hints) {
    FactorConfig cfg;
    cfg.hints = hints;
    return factor(n, cfg);
}

}  // namespace hdesc
