#pragma once

#include <vector>

#include "bvp3/green.hpp"
#include "bvp3/grid.hpp"

namespace bvp3 {

enum class QuadratureMethod { Trapezium, ModifiedSimpson };

/// Row sums run j = 0..N in fixed order so results are bit-reproducible.
/// Compensated (Kahan) accumulation is available as an opt-in.
enum class Summation { Sequential, Compensated };

/// Trapezium weights: 1/2 at both ends, 1 inside.
std::vector<double> trap_weights(int n);

/// Composite Simpson weights: 1/3 at the ends, 4/3 at odd, 2/3 at even
/// interior indices.  n must be even.
std::vector<double> simpson_weights(int n);

/// Kernel value the row rules use at (t_i, t_j).  Equals
/// eval_kernel(k, t_i, t_j) except on the G2Star diagonal of the two end
/// rows: the jump average is only meaningful at an interior jump, so row
/// i = 0 takes the one-sided value s - 1 and row i = n takes s.
double row_kernel_value(Kernel k, int i, int j, const Grid& grid);

/// Trapezium row: sum_j h rho_j K(t_i, t_j) phi_j.
/// The kernel must be G0, G1 or G2Star; raw G2 has a jump the rule cannot
/// see and is rejected.
double trap_row(Kernel k, int i, const GridFunction& phi,
                Summation summation = Summation::Sequential);

/// Modified Simpson row.  For even i this is the plain composite Simpson
/// sum; for odd i the diagonal crosses a panel interior, and the term
///   h/6 * (K(t_i,t_{i-1}) phi_{i-1} - 2 K(t_i,t_i) phi_i + K(t_i,t_{i+1}) phi_{i+1})
/// is added, which turns the panel containing the diagonal into two
/// trapezium strips.  Requires an even-n grid.
double simpson_mod_row(Kernel k, int i, const GridFunction& phi,
                       Summation summation = Summation::Sequential);

/// Full sweep over i of the selected row rule.
GridFunction kernel_sweep(Kernel k, const GridFunction& phi, QuadratureMethod method,
                          Summation summation = Summation::Sequential);

} // namespace bvp3
