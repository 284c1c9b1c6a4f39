#include "hdesc/squareclass.hpp"

namespace hdesc {

SquareClass SquareClass::operator*(const SquareClass& o) const {
    Int prod = rep * o.rep;
    Int g = gcd(rep, o.rep);
    // prod / g^2 is square-free since rep and o.rep are
    return SquareClass(prod / (g * g));
}

SquareClass squarefree_part_from(const Factorization& f) {
    return SquareClass(f.squarefree());
}

SquareClass squarefree_part(const Int& x, const std::vector<Int>& hints) {
    if (x == 0) throw std::invalid_argument("squarefree_part(0)");
    if (x == 1) return SquareClass(Int(1));
    if (x == -1) return SquareClass(Int(-1));
    return squarefree_part_from(factor(x, hints));
}

SquareClass squarefree_part(const Rat& x, const std::vector<Int>& hints) {
    // x and num*den differ by den^2
    return squarefree_part(Int(x.get_num() * x.get_den()), hints);
}

std::vector<Int> support(const SquareClass& c) {
    std::vector<Int> out;
    Int n = abs(c.rep);
    if (n == 1) return out;
    auto f = factor(n);
    for (auto& [p, e] : f.factors) out.push_back(p);
    return out;
}

}  // namespace hdesc
