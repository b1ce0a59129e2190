#include <cmath>
#include <stdexcept>

#include <doctest.h>

#include "bvp3/green.hpp"

using namespace bvp3;

TEST_SUITE("green") {

TEST_CASE("pointwise kernel values") {
    // lower branch of G0: s/2 (t^2 - 2t + s)
    CHECK(eval_kernel(Kernel::G0, 0.5, 0.25) == doctest::Approx(-0.0625).epsilon(1e-15));
    // upper branch of G1 vanishes at s = 1
    for (int i = 0; i <= 10; ++i) {
        CHECK(eval_kernel(Kernel::G1, i / 10.0, 1.0) == 0.0);
    }
    CHECK(eval_kernel(Kernel::G2Star, 0.5, 0.5) == 0.0);
    CHECK(eval_kernel(Kernel::G2, 0.75, 0.25) == 0.25);
    // G2 keeps the lower-branch value on the diagonal, G2Star the average
    CHECK(eval_kernel(Kernel::G2, 0.25, 0.25) == 0.25);
    CHECK(eval_kernel(Kernel::G2Star, 0.25, 0.25) == doctest::Approx(-0.25).epsilon(1e-15));
}

TEST_CASE("domain checks") {
    CHECK_THROWS_AS(eval_kernel(Kernel::G0, -0.1, 0.5), std::domain_error);
    CHECK_THROWS_AS(eval_kernel(Kernel::G0, 0.5, 1.5), std::domain_error);
    CHECK_THROWS_AS(eval_kernel(Kernel::G1, 2.0, 0.0), std::domain_error);
    const double nan = std::nan("");
    CHECK_THROWS_AS(eval_kernel(Kernel::G0, nan, 0.5), std::domain_error);
}

TEST_CASE("bound constants are the exact ratios") {
    const KernelBounds b = kernel_bounds();
    CHECK(b.m0 == 1.0 / 12.0);
    CHECK(b.m1 == 1.0 / 8.0);
    CHECK(b.m2 == 1.0 / 2.0);
}

TEST_CASE("analytic row integrals") {
    CHECK(analytic_row_integral(Kernel::G0, 1.0) == doctest::Approx(-1.0 / 12.0).epsilon(1e-15));
    CHECK(std::abs(analytic_row_integral(Kernel::G0, 1.0)) ==
          doctest::Approx(kernel_bounds().m0).epsilon(1e-15));
    CHECK(analytic_row_integral(Kernel::G2, 0.5) == 0.0);
    CHECK(analytic_row_integral(Kernel::G0, 0.0) == 0.0);
    CHECK(analytic_row_integral(Kernel::G1, 0.5) == doctest::Approx(-0.125).epsilon(1e-15));
    CHECK_THROWS_AS(analytic_row_integral(Kernel::G2Star, 0.5), std::domain_error);
    CHECK_THROWS_AS(analytic_row_integral(Kernel::G0, -1e-9), std::domain_error);
}

TEST_CASE("branches agree at the diagonal for G0 and G1") {
    for (int i = 0; i <= 1000; ++i) {
        const double t = i / 1000.0;
        // evaluate the two closed-form branches directly
        const double g0_lower = 0.5 * t * (t * t - 2.0 * t + t);
        const double g0_upper = 0.5 * t * t * (t - 1.0);
        CHECK(g0_lower == doctest::Approx(g0_upper).epsilon(1e-15));
        const double g1_lower = t * (t - 1.0);
        const double g1_upper = t * (t - 1.0);
        CHECK(g1_lower == g1_upper);
        CHECK(eval_kernel(Kernel::G0, t, t) == doctest::Approx(g0_upper).epsilon(1e-15));
        CHECK(eval_kernel(Kernel::G1, t, t) == doctest::Approx(g1_lower).epsilon(1e-15));
    }
}

TEST_CASE("G2Star diagonal is the mean of the one-sided limits") {
    for (int i = 0; i <= 1000; ++i) {
        const double t = i / 1000.0;
        const double mean = 0.5 * (t + (t - 1.0));
        CHECK(eval_kernel(Kernel::G2Star, t, t) == doctest::Approx(mean).epsilon(1e-15));
    }
}

TEST_CASE("G0 and G1 are nonpositive on the square") {
    for (int i = 0; i <= 100; ++i) {
        for (int j = 0; j <= 100; ++j) {
            const double t = i / 100.0, s = j / 100.0;
            CHECK(eval_kernel(Kernel::G0, t, s) <= 0.0);
            CHECK(eval_kernel(Kernel::G1, t, s) <= 0.0);
        }
    }
}

TEST_CASE("row-integral maxima match the bound constants") {
    const KernelBounds b = kernel_bounds();
    double m0 = 0.0, m1 = 0.0, m2 = 0.0;
    for (int i = 0; i <= 1000; ++i) {
        const double t = i / 1000.0;
        m0 = std::max(m0, std::abs(analytic_row_integral(Kernel::G0, t)));
        m1 = std::max(m1, std::abs(analytic_row_integral(Kernel::G1, t)));
        m2 = std::max(m2, std::abs(analytic_row_integral(Kernel::G2, t)));
    }
    CHECK(m0 == doctest::Approx(b.m0).epsilon(1e-12));
    CHECK(m1 == doctest::Approx(b.m1).epsilon(1e-12));
    CHECK(m2 == doctest::Approx(b.m2).epsilon(1e-12));
}

} // TEST_SUITE
