#pragma once

// Global solving of rational quadratic forms of rank 3 and 4, and conic
// parametrisation. Descent needs the determinant's factorization (hints
// threaded); intermediate descent coefficients are chosen prime so no
// further factoring is required.

#include "hdesc/forms.hpp"
#include "hdesc/hilbert.hpp"

#include <optional>

namespace hdesc {

struct DegenerateForm : std::runtime_error {
    DegenerateForm(const std::string& w) : std::runtime_error(w) {}
};
struct PointNotOnConic : std::runtime_error {
    PointNotOnConic(const std::string& w) : std::runtime_error(w) {}
};

// local obstruction certificate: the place and the Hilbert symbol data
// that re-verifies insolubility
struct LocalObstruction {
    Place v;
    Rat sym_x, sym_y;  // hilbert_symbol(sym_x, sym_y, v) = 1
};

struct ConicResult {
    std::optional<std::array<Rat, 3>> point;  // primitive integral
    std::optional<LocalObstruction> obstruction;
};

ConicResult solve_conic(const Mat3& q, const std::vector<Int>& hints = {});

struct QuadricSurfaceResult {
    std::optional<std::array<Rat, 4>> point;
    std::optional<LocalObstruction> obstruction;
};

QuadricSurfaceResult solve_quadric_surface(const Mat4& q, const std::vector<Int>& hints = {});

struct ConicParametrisation {
    BinForm F, G, H;  // binary quadratics: (l:m) -> (F:G:H) on the conic
    Mat3 conic;
};

// point must lie on the conic; the point is the image of (l:m) = (1:0)
ConicParametrisation parametrize_conic(const Mat3& q, const std::array<Rat, 3>& point);

// solve x^2 - d y^2 = n z^2 (norm equation for Q(sqrt(d)) up to squares);
// i.e. find an element of norm n modulo squares. Empty if insoluble.
std::optional<std::pair<Rat, Rat>> solve_norm_equation(const Int& d, const Rat& n,
                                                       const std::vector<Int>& hints = {});

// internal: solve A x^2 + B y^2 = z^2 for square-free A, B (exposed for tests)
std::optional<std::array<Int, 3>> solve_legendre_pair(const Int& A, const Int& B,
                                                      const std::vector<Int>& hints = {});

}  // namespace hdesc
