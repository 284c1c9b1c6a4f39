#include "hdesc/quadfield.hpp"

namespace hdesc {

std::optional<std::vector<QFElem>> QuadField::solve(std::vector<std::vector<QFElem>> m,
                                                    std::vector<QFElem> rhs) const {
    size_t R = m.size();
    size_t C = R ? m[0].size() : 0;
    std::vector<size_t> pivcol;
    size_t row = 0;
    for (size_t col = 0; col < C && row < R; ++col) {
        size_t piv = row;
        while (piv < R && is_zero(m[piv][col])) ++piv;
        if (piv == R) continue;
        std::swap(m[piv], m[row]);
        std::swap(rhs[piv], rhs[row]);
        QFElem iv = inv(m[row][col]);
        for (size_t j = col; j < C; ++j) m[row][j] = mul(m[row][j], iv);
        rhs[row] = mul(rhs[row], iv);
        for (size_t i = 0; i < R; ++i) {
            if (i == row || is_zero(m[i][col])) continue;
            QFElem f = m[i][col];
            for (size_t j = col; j < C; ++j) m[i][j] = sub(m[i][j], mul(f, m[row][j]));
            rhs[i] = sub(rhs[i], mul(f, rhs[row]));
        }
        pivcol.push_back(col);
        ++row;
    }
    for (size_t i = row; i < R; ++i)
        if (!is_zero(rhs[i])) return std::nullopt;
    std::vector<QFElem> x(C, zero());
    for (size_t i = 0; i < pivcol.size(); ++i) x[pivcol[i]] = rhs[i];
    return x;
}

}  // namespace hdesc
