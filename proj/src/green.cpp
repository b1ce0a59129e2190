#include "bvp3/green.hpp"

#include <stdexcept>

namespace bvp3 {

namespace {

void check_unit_interval(double t, double s) {
    if (!(t >= 0.0 && t <= 1.0)) throw std::domain_error("eval_kernel: t outside [0,1]");
    if (!(s >= 0.0 && s <= 1.0)) throw std::domain_error("eval_kernel: s outside [0,1]");
}

} // namespace

double eval_kernel(Kernel k, double t, double s) {
    check_unit_interval(t, s);
    switch (k) {
    case Kernel::G0:
        // continuous across s = t; both branches give t^2 (t-1) / 2 there
        return s <= t ? 0.5 * s * (t * t - 2.0 * t + s) : 0.5 * t * t * (s - 1.0);
    case Kernel::G1:
        return s <= t ? s * (t - 1.0) : t * (s - 1.0);
    case Kernel::G2:
        // lower-branch value at the diagonal by convention
        return s <= t ? s : s - 1.0;
    case Kernel::G2Star:
        if (s < t) return s;
        if (s > t) return s - 1.0;
        return s - 0.5; // mean of the one-sided limits s and s-1
    }
    throw std::domain_error("eval_kernel: bad kernel tag");
}

KernelBounds kernel_bounds() noexcept {
    return {1.0 / 12.0, 1.0 / 8.0, 1.0 / 2.0};
}

double analytic_row_integral(Kernel k, double t) {
    if (!(t >= 0.0 && t <= 1.0)) throw std::domain_error("analytic_row_integral: t outside [0,1]");
    switch (k) {
    case Kernel::G0:
        return t * t * t / 6.0 - t * t / 4.0;
    case Kernel::G1:
        return 0.5 * t * (t - 1.0);
    case Kernel::G2:
        return t - 0.5;
    case Kernel::G2Star:
        break;
    }
    throw std::domain_error("analytic_row_integral: jump-averaged kernel has no analytic row");
}

} // namespace bvp3
