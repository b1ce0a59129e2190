#pragma once

namespace bvp3 {

/// The kernels of the integral representation of u''' = phi on [0,1]
/// with u(0) = u'(0) = u'(1) = 0.
///
/// G0 reproduces u, G1 reproduces u', G2 reproduces u''.  G2 jumps across
/// the diagonal s = t; G2Star is G2 with the diagonal value replaced by the
/// mean of the one-sided limits, which is what the quadrature rows need.
enum class Kernel { G0, G1, G2, G2Star };

/// Maxima over t of the row integrals int_0^1 |K(t,s)| ds.
struct KernelBounds {
    double m0; // 1/12, kernel G0
    double m1; // 1/8,  kernel G1
    double m2; // 1/2,  kernel G2
};

/// Pointwise kernel evaluation.  Branches are selected on s <= t; at s = t,
/// G0 and G1 are continuous, G2 returns the lower branch (value s), and
/// G2Star returns the jump average s - 1/2.
/// Throws std::domain_error if t or s lies outside [0,1].
double eval_kernel(Kernel k, double t, double s);

KernelBounds kernel_bounds() noexcept;

/// Closed form of int_0^1 K(t,s) ds for K in {G0, G1, G2}.
/// G2Star has no analytic role of its own; requesting it is a domain error.
double analytic_row_integral(Kernel k, double t);

} // namespace bvp3
