#include "bvp3/solver.hpp"

#include <cmath>
#include <string>
#include <utility>

namespace bvp3 {

NonFiniteIterate::NonFiniteIterate(int node, int iteration)
    : std::runtime_error("rhs produced a non-finite value at node " + std::to_string(node) +
                         ", iteration " + std::to_string(iteration)),
      node_(node),
      iteration_(iteration) {}

HomogenizedProblem homogenize(const Problem& p) {
    const Quadratic shift{p.c1, p.c2, 0.5 * (p.c3 - p.c2)};
    Problem shifted = p;
    shifted.c1 = shifted.c2 = shifted.c3 = 0.0;
    shifted.rhs = [rhs = p.rhs, shift](double t, double x, double y, double z) {
        return rhs(t, x + shift.value(t), y + shift.deriv(t), z + shift.second());
    };
    shifted.exact = nullptr; // exact belongs to the original variables
    return {std::move(shifted), shift};
}

GridFunction initial_phi(const Problem& homogeneous, const Grid& grid) {
    GridFunction phi(grid);
    for (int i = 0; i <= grid.n(); ++i) {
        phi[i] = homogeneous.rhs(grid.node(i), 0.0, 0.0, 0.0);
        if (!std::isfinite(phi[i])) throw NonFiniteIterate(i, 0);
    }
    return phi;
}

namespace {

GridFunction update_phi(const Problem& homogeneous, const GridFunction& u, const GridFunction& y,
                        const GridFunction& z, int iteration) {
    const Grid& g = u.grid();
    GridFunction next(g);
    for (int i = 0; i <= g.n(); ++i) {
        next[i] = homogeneous.rhs(g.node(i), u[i], y[i], z[i]);
        if (!std::isfinite(next[i])) throw NonFiniteIterate(i, iteration);
    }
    return next;
}

} // namespace

IterateResult iterate_once(const Problem& homogeneous, const GridFunction& phi,
                           QuadratureMethod method, Summation summation) {
    GridFunction u = kernel_sweep(Kernel::G0, phi, method, summation);
    GridFunction y = kernel_sweep(Kernel::G1, phi, method, summation);
    GridFunction z = kernel_sweep(Kernel::G2Star, phi, method, summation);
    GridFunction next = update_phi(homogeneous, u, y, z, 1);
    return {std::move(u), std::move(y), std::move(z), std::move(next)};
}

SolveResult solve(const Problem& p, const SolverConfig& cfg) {
    if (cfg.n < 1) throw std::invalid_argument("solve: n must be >= 1");
    if (!(cfg.tol > 0.0)) throw std::invalid_argument("solve: tol must be positive");
    if (cfg.max_iter < 1) throw std::invalid_argument("solve: max_iter must be >= 1");
    const Grid grid(cfg.n);
    if (cfg.method == QuadratureMethod::ModifiedSimpson && !grid.is_even()) {
        throw std::invalid_argument("solve: modified Simpson needs even n");
    }

    const HomogenizedProblem hp = homogenize(p);

    GridFunction phi = initial_phi(hp.problem, grid);
    SolveResult r{GridFunction(grid), GridFunction(grid), GridFunction(grid), phi, 0, {}, false,
                  false};

    for (int k = 1; k <= cfg.max_iter; ++k) {
        r.u = kernel_sweep(Kernel::G0, phi, cfg.method, cfg.summation);
        r.y = kernel_sweep(Kernel::G1, phi, cfg.method, cfg.summation);
        r.z = kernel_sweep(Kernel::G2Star, phi, cfg.method, cfg.summation);
        GridFunction next = update_phi(hp.problem, r.u, r.y, r.z, k);

        const double res = max_norm_diff(next, phi);
        r.residuals.push_back(res);
        r.iterations = k;
        phi = std::move(next);

        if (res <= cfg.tol) {
            r.converged = true;
            break;
        }
        // the iteration is only guaranteed to contract for q < 1; bail out
        // once the residual has grown six decades past the first one
        if (res > 1e6 * r.residuals.front()) {
            r.diverged = true;
            break;
        }
    }

    r.phi = std::move(phi); // u''' needs no shift: P2''' is identically zero
    for (int i = 0; i <= grid.n(); ++i) {
        const double t = grid.node(i);
        r.u[i] += hp.shift.value(t);
        r.y[i] += hp.shift.deriv(t);
        r.z[i] += hp.shift.second();
    }
    return r;
}

double max_norm_diff(const GridFunction& a, const GridFunction& b) {
    if (a.grid() != b.grid()) throw std::invalid_argument("max_norm_diff: grid mismatch");
    double m = 0.0;
    for (int i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
    return m;
}

} // namespace bvp3
