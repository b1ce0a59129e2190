#pragma once

#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "bvp3/grid.hpp"
#include "bvp3/quadrature.hpp"

namespace bvp3 {

/// Right-hand side f(t, u, u', u'').
using Rhs = std::function<double(double, double, double, double)>;

/// Constants of the contraction hypothesis: a bound M on |f| over the
/// induced box, and Lipschitz constants of f in u, u', u''.
struct ProblemConstants {
    double m_bound;
    double l0, l1, l2;
};

/// u''' = f(t, u, u', u'') on [0,1] with u(0)=c1, u'(0)=c2, u'(1)=c3.
struct Problem {
    Rhs rhs;
    double c1 = 0.0;
    double c2 = 0.0;
    double c3 = 0.0;
    std::function<double(double)> exact; // optional, for error studies
    std::optional<ProblemConstants> constants;
};

/// a0 + a1*t + a2*t^2
struct Quadratic {
    double a0 = 0.0, a1 = 0.0, a2 = 0.0;
    double value(double t) const noexcept { return a0 + t * (a1 + t * a2); }
    double deriv(double t) const noexcept { return a1 + 2.0 * a2 * t; }
    double second() const noexcept { return 2.0 * a2; }
};

struct HomogenizedProblem {
    Problem problem;  // c1 = c2 = c3 = 0, rhs shifted
    Quadratic shift;  // P2 with P2(0)=c1, P2'(0)=c2, P2'(1)=c3
};

/// Reduce general boundary values to the zero-boundary problem by the
/// substitution u = v + P2.
HomogenizedProblem homogenize(const Problem& p);

struct SolverConfig {
    int n = 64;
    double tol = 1e-10;
    int max_iter = 100;
    QuadratureMethod method = QuadratureMethod::ModifiedSimpson;
    Summation summation = Summation::Sequential;
};

struct SolveResult {
    GridFunction u, y, z, phi;     // u, u', u'', u''' at the nodes
    int iterations = 0;            // number of phi updates performed
    std::vector<double> residuals; // max-norm phi differences, one per update
    bool converged = false;
    bool diverged = false;         // residual blow-up guard tripped
};

/// The rhs returned a non-finite value: the iterate left the domain where
/// f is defined.  Carries the node index and the iteration number (0 for
/// the initial sweep).
class NonFiniteIterate : public std::runtime_error {
public:
    NonFiniteIterate(int node, int iteration);
    int node() const noexcept { return node_; }
    int iteration() const noexcept { return iteration_; }

private:
    int node_;
    int iteration_;
};

/// Phi_0(t_i) = f(t_i, 0, 0, 0).  The problem must be homogeneous.
GridFunction initial_phi(const Problem& homogeneous, const Grid& grid);

struct IterateResult {
    GridFunction u, y, z, phi_next;
};

/// One step of the discrete fixed-point map for a homogeneous problem:
/// integrate phi through the three kernel rows, then update
/// phi_next(t_i) = f(t_i, u_i, y_i, z_i).
IterateResult iterate_once(const Problem& homogeneous, const GridFunction& phi,
                           QuadratureMethod method,
                           Summation summation = Summation::Sequential);

/// Run the full iteration: homogenize, start from initial_phi, stop when
/// the max-norm phi difference drops to cfg.tol or max_iter is reached,
/// then add P2 and its derivatives back onto u, y, z.
///
/// The reported u, y, z are the ones computed in the final update sweep
/// (they correspond to the phi before the last update); phi is the final
/// iterate.  A non-converged result is returned, not thrown.
SolveResult solve(const Problem& p, const SolverConfig& cfg);

/// max_i |a_i - b_i| over a shared grid.
double max_norm_diff(const GridFunction& a, const GridFunction& b);

} // namespace bvp3
