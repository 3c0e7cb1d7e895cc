#pragma once

#include <vector>

namespace mcbvp {

/// Chebyshev-Gauss-Lobatto collocation nodes z_j = cos(pi j / N), j = 0..N.
/// Nodes run from +1 down to -1; the endpoints are exact and the set is
/// symmetric about 0 by construction.
class CglGrid {
public:
    explicit CglGrid(int n);

    int n() const noexcept { return n_; }
    const std::vector<double>& nodes() const noexcept { return nodes_; }
    double node(int j) const { return nodes_[static_cast<std::size_t>(j)]; }

private:
    int n_;
    std::vector<double> nodes_;
};

CglGrid cgl_grid(int n);

/// Affine change of variable carrying a native interval [a,b] onto the
/// reference interval [-1,1]. The m-th derivative picks up a factor
/// scale()^m = (2/(b-a))^m under the map.
class AffineMap {
public:
    AffineMap(double a, double b);

    double a() const noexcept { return a_; }
    double b() const noexcept { return b_; }

    double to_reference(double x) const { return (2.0 * x - a_ - b_) / (b_ - a_); }
    double from_reference(double z) const { return 0.5 * ((b_ - a_) * z + a_ + b_); }
    double scale() const { return 2.0 / (b_ - a_); }
    bool is_identity() const { return a_ == -1.0 && b_ == 1.0; }

private:
    double a_;
    double b_;
};

AffineMap affine_map(double a, double b);

}  // namespace mcbvp
