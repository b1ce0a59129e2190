#include "bvp3/quadrature.hpp"

#include <stdexcept>

namespace bvp3 {

namespace {

void check_row_kernel(Kernel k) {
    if (k == Kernel::G2) {
        throw std::invalid_argument(
            "quadrature row: raw G2 jumps across the diagonal; use G2Star");
    }
}

void check_index(int i, const Grid& g) {
    if (i < 0 || i > g.n()) throw std::out_of_range("quadrature row: node index out of range");
}

double weighted_sum(Kernel k, int i, const GridFunction& phi,
                    const std::vector<double>& w, Summation summation) {
    const Grid& g = phi.grid();
    const double h = g.h();
    const int n = g.n();
    if (summation == Summation::Compensated) {
        double sum = 0.0, c = 0.0;
        for (int j = 0; j <= n; ++j) {
            const double term = h * w[static_cast<std::size_t>(j)] * row_kernel_value(k, i, j, g) * phi[j];
            const double y = term - c;
            const double t = sum + y;
            c = (t - sum) - y;
            sum = t;
        }
        return sum;
    }
    double sum = 0.0;
    for (int j = 0; j <= n; ++j) {
        sum += h * w[static_cast<std::size_t>(j)] * row_kernel_value(k, i, j, g) * phi[j];
    }
    return sum;
}

} // namespace

double row_kernel_value(Kernel k, int i, int j, const Grid& grid) {
    if (k == Kernel::G2Star && i == j && (i == 0 || i == grid.n())) {
        // no interior jump to average across in the end rows
        return i == 0 ? grid.node(j) - 1.0 : grid.node(j);
    }
    return eval_kernel(k, grid.node(i), grid.node(j));
}

std::vector<double> trap_weights(int n) {
    if (n < 1) throw std::invalid_argument("trap_weights: n must be >= 1");
    std::vector<double> w(static_cast<std::size_t>(n) + 1, 1.0);
    w.front() = 0.5;
    w.back() = 0.5;
    return w;
}

std::vector<double> simpson_weights(int n) {
    if (n < 2 || n % 2 != 0) throw std::invalid_argument("simpson_weights: n must be even and >= 2");
    std::vector<double> w(static_cast<std::size_t>(n) + 1);
    for (int j = 0; j <= n; ++j) w[static_cast<std::size_t>(j)] = (j % 2 != 0) ? 4.0 / 3.0 : 2.0 / 3.0;
    w.front() = 1.0 / 3.0;
    w.back() = 1.0 / 3.0;
    return w;
}

double trap_row(Kernel k, int i, const GridFunction& phi, Summation summation) {
    check_row_kernel(k);
    check_index(i, phi.grid());
    return weighted_sum(k, i, phi, trap_weights(phi.grid().n()), summation);
}

double simpson_mod_row(Kernel k, int i, const GridFunction& phi, Summation summation) {
    check_row_kernel(k);
    const Grid& g = phi.grid();
    if (!g.is_even()) throw std::invalid_argument("simpson_mod_row: grid size must be even");
    check_index(i, g);

    double sum = weighted_sum(k, i, phi, simpson_weights(g.n()), summation);
    if (i % 2 != 0) {
        const double h = g.h();
        sum += h / 6.0 *
               (row_kernel_value(k, i, i - 1, g) * phi[i - 1] -
                2.0 * row_kernel_value(k, i, i, g) * phi[i] +
                row_kernel_value(k, i, i + 1, g) * phi[i + 1]);
    }
    return sum;
}

GridFunction kernel_sweep(Kernel k, const GridFunction& phi, QuadratureMethod method,
                          Summation summation) {
    check_row_kernel(k);
    const Grid& g = phi.grid();
    if (method == QuadratureMethod::ModifiedSimpson && !g.is_even()) {
        throw std::invalid_argument("kernel_sweep: modified Simpson needs an even grid");
    }

    // weights shared across rows; rows are otherwise independent
    const std::vector<double> w =
        method == QuadratureMethod::Trapezium ? trap_weights(g.n()) : simpson_weights(g.n());

    GridFunction out(g);
    for (int i = 0; i <= g.n(); ++i) {
        double sum = weighted_sum(k, i, phi, w, summation);
        if (method == QuadratureMethod::ModifiedSimpson && i % 2 != 0) {
            const double h = g.h();
            sum += h / 6.0 *
                   (row_kernel_value(k, i, i - 1, g) * phi[i - 1] -
                    2.0 * row_kernel_value(k, i, i, g) * phi[i] +
                    row_kernel_value(k, i, i + 1, g) * phi[i + 1]);
        }
        out[i] = sum;
    }
    return out;
}

} // namespace bvp3
