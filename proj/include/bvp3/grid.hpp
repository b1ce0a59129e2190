#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <stdexcept>
#include <vector>

namespace bvp3 {

/// Uniform partition of [0,1] into n subintervals with nodes t_i = i*h.
///
/// Nodes are always computed as i*h so that node values at equal indices
/// compare exactly, which the kernel branch selection relies on.
class Grid {
public:
    explicit Grid(int n) : n_(n), h_(1.0 / n) {
        if (n < 1) throw std::invalid_argument("Grid: n must be >= 1");
    }

    int n() const noexcept { return n_; }
    int size() const noexcept { return n_ + 1; }
    double h() const noexcept { return h_; }
    double node(int i) const noexcept { return i * h_; }
    bool is_even() const noexcept { return n_ % 2 == 0; }

    friend bool operator==(const Grid& a, const Grid& b) noexcept { return a.n_ == b.n_; }
    friend bool operator!=(const Grid& a, const Grid& b) noexcept { return a.n_ != b.n_; }

private:
    int n_;
    double h_;
};

/// Real values attached to the nodes of a Grid.
class GridFunction {
public:
    explicit GridFunction(Grid grid, double fill = 0.0)
        : grid_(grid), values_(static_cast<std::size_t>(grid.size()), fill) {}

    /// Pointwise sampling of f at the grid nodes.
    static GridFunction sample(Grid grid, const std::function<double(double)>& f) {
        GridFunction g(grid);
        for (int i = 0; i < grid.size(); ++i) g[i] = f(grid.node(i));
        return g;
    }

    const Grid& grid() const noexcept { return grid_; }
    int size() const noexcept { return grid_.size(); }

    double operator[](int i) const { return values_[static_cast<std::size_t>(i)]; }
    double& operator[](int i) { return values_[static_cast<std::size_t>(i)]; }

    std::span<const double> values() const noexcept { return values_; }
    std::span<double> values() noexcept { return values_; }

private:
    Grid grid_;
    std::vector<double> values_;
};

} // namespace bvp3
