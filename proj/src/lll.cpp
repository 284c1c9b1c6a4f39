#include "hdesc/lll.hpp"

#include <stdexcept>

namespace hdesc {

std::vector<std::vector<Int>> lll_reduce_gram(const QMatrix& G, long delta_num, long delta_den) {
    size_t n = G.rows;
    if (G.cols != n) throw std::invalid_argument("lll: Gram not square");
    // basis vectors tracked as integer columns of U
    std::vector<std::vector<Int>> U(n, std::vector<Int>(n, 0));
    for (size_t i = 0; i < n; ++i) U[i][i] = 1;

    auto ip = [&](const std::vector<Int>& a, const std::vector<Int>& b) {
        Rat s(0);
        for (size_t i = 0; i < n; ++i)
            for (size_t j = 0; j < n; ++j)
                if (a[i] != 0 && b[j] != 0) s += G.at(i, j) * Rat(a[i] * b[j]);
        return s;
    };

    Rat delta(delta_num, delta_den);
    std::vector<std::vector<Rat>> mu(n, std::vector<Rat>(n, Rat(0)));
    std::vector<Rat> Bstar(n, Rat(0));

    auto gram_schmidt = [&]() {
        for (size_t i = 0; i < n; ++i) {
            Bstar[i] = ip(U[i], U[i]);
            for (size_t j = 0; j < i; ++j) {
                Rat m = ip(U[i], U[j]);
                for (size_t k = 0; k < j; ++k) m -= mu[i][k] * mu[j][k] * Bstar[k];
                mu[i][j] = Bstar[j] == 0 ? Rat(0) : m / Bstar[j];
                Bstar[i] -= mu[i][j] * mu[i][j] * Bstar[j];
            }
        }
    };

    gram_schmidt();
    size_t k = 1;
    size_t guard = 0;
    while (k < n) {
        if (++guard > 10000) break;  // safety for near-degenerate Grams
        for (size_t j = k; j-- > 0;) {
            Int q = round_rat(mu[k][j]);
            if (q != 0) {
                for (size_t t = 0; t < n; ++t) U[k][t] -= q * U[j][t];
                gram_schmidt();
            }
        }
        if (Bstar[k] >= (delta - mu[k][k - 1] * mu[k][k - 1]) * Bstar[k - 1]) {
            ++k;
        } else {
            std::swap(U[k], U[k - 1]);
            gram_schmidt();
            k = k > 1 ? k - 1 : 1;
        }
    }
    // return as columns: Ucols[i][j] = coefficient of old basis j in new vector i
    return U;
}

}  // namespace hdesc
