#include "mcbvp/grid.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace mcbvp {

CglGrid::CglGrid(int n) : n_(n) {
    if (n < 1)
        throw std::invalid_argument("CglGrid: N must be at least 1, got " + std::to_string(n));
    nodes_.assign(static_cast<std::size_t>(n) + 1, 0.0);
    // Fill symmetrically so that nodes_[j] == -nodes_[n-j] holds exactly and
    // the endpoints are exactly +-1; cos alone does not guarantee either.
    nodes_[0] = 1.0;
    nodes_[static_cast<std::size_t>(n)] = -1.0;
    for (int j = 1; 2 * j < n; ++j) {
        const double c = std::cos(std::numbers::pi * j / n);
        nodes_[static_cast<std::size_t>(j)] = c;
        nodes_[static_cast<std::size_t>(n - j)] = -c;
    }
    if (n % 2 == 0 && n >= 2) nodes_[static_cast<std::size_t>(n / 2)] = 0.0;
}

CglGrid cgl_grid(int n) { return CglGrid(n); }

AffineMap::AffineMap(double a, double b) : a_(a), b_(b) {
    if (!std::isfinite(a) || !std::isfinite(b) || !(a < b))
        throw std::invalid_argument("AffineMap: interval endpoints must be finite with a < b");
}

AffineMap affine_map(double a, double b) { return AffineMap(a, b); }

}  // namespace mcbvp
