#include "bvp3/examples.hpp"

#include <cmath>
#include <stdexcept>

namespace bvp3::examples {

namespace {

constexpr QuadratureMethod kTrap = QuadratureMethod::Trapezium;
constexpr QuadratureMethod kSimp = QuadratureMethod::ModifiedSimpson;

// u* = (x-1) sin x; the forcing g makes u* the exact solution of
// u''' = x^4 u - u^2 + g(x).  Derivatives of u*:
//   u*'  = sin x + (x-1) cos x
//   u*'' = 2 cos x - (x-1) sin x
//   u*''' = -3 sin x - (x-1) cos x
NamedExample make_example1() {
    Problem p;
    p.rhs = [](double x, double u, double, double) {
        const double g = -3.0 * std::sin(x) - (x - 1.0) * std::cos(x) -
                         std::pow(x, 4) * (x - 1.0) * std::sin(x) +
                         std::pow((x - 1.0) * std::sin(x), 2);
        return std::pow(x, 4) * u - u * u + g;
    };
    p.c1 = 0.0;
    p.c2 = -1.0;
    p.c3 = std::sin(1.0);
    p.exact = [](double x) { return (x - 1.0) * std::sin(x); };
    // |d f / d u| = |x^4 - 2u| <= 1 + 2 M/12 on the induced box, M = 7
    p.constants = ProblemConstants{7.0, 13.0 / 6.0, 0.0, 0.0};

    NamedExample ex{1, "manufactured trigonometric problem", std::move(p), {}};
    ex.tables = {
        {1e-10, kTrap,
         {{8, 7, 9.9235e-4}, {16, 7, 2.4732e-4}, {32, 7, 6.1782e-5}, {64, 7, 1.5443e-5},
          {128, 7, 3.8605e-6}, {256, 7, 9.6511e-7}, {512, 7, 2.4128e-7}, {1024, 7, 6.0319e-8}}},
        {1e-10, kSimp,
         {{8, 7, 9.7222e-4}, {16, 7, 1.3187e-4}, {32, 7, 1.6896e-5}, {64, 7, 2.1301e-6},
          {128, 7, 2.6774e-7}, {256, 7, 3.3544e-8}, {512, 7, 4.1977e-9}, {1024, 7, 5.2483e-10}}},
    };
    return ex;
}

// u* = x^2 (3/2 - x); rhs is linear in u'' only, so the discrete fixed
// point is the constant -6 exactly.
NamedExample make_example2() {
    Problem p;
    p.rhs = [](double x, double, double, double upp) {
        return -x * upp - 6.0 * x * x + 3.0 * x - 6.0;
    };
    p.exact = [](double x) { return x * x * (1.5 - x); };
    p.constants = ProblemConstants{9.0, 0.0, 0.0, 1.0};

    NamedExample ex{2, "cubic polynomial problem", std::move(p), {}};
    ex.tables = {
        {1e-4, kTrap,
         {{8, 6, 0.0078}, {16, 6, 0.0020}, {32, 6, 4.8837e-4}, {64, 6, 1.2216e-4},
          {128, 6, 3.0604e-5}, {256, 6, 7.7157e-6}, {512, 6, 1.9937e-6}, {1024, 6, 5.6316e-7}}},
        {1e-4, kSimp,
         {{8, 6, 9.7662e-4}, {16, 6, 1.2215e-4}, {32, 6, 1.5345e-5}, {64, 6, 1.9936e-6},
          {128, 6, 3.2471e-7}, {256, 6, 1.1612e-7}, {512, 6, 9.0051e-8}, {1024, 6, 8.6794e-8}}},
        {1e-10, kTrap,
         {{8, 11, 0.0078}, {16, 11, 0.0020}, {32, 11, 4.8828e-4}, {64, 11, 1.2207e-4},
          {128, 11, 3.0518e-5}, {256, 11, 7.6294e-6}}},
    };
    return ex;
}

// u* = e^x
NamedExample make_example3() {
    Problem p;
    p.rhs = [](double x, double u, double up, double) {
        return u * u + up - std::exp(2.0 * x);
    };
    p.c1 = 1.0;
    p.c2 = 1.0;
    p.c3 = std::exp(1.0);
    p.exact = [](double x) { return std::exp(x); };
    // |d f / d u| = 2|u| <= 2 M/12, |d f / d u'| = 1, M = 10
    p.constants = ProblemConstants{10.0, 5.0 / 3.0, 1.0, 0.0};

    NamedExample ex{3, "exponential problem", std::move(p), {}};
    ex.tables = {
        {1e-6, kTrap,
         {{16, 11, 5.3866e-4}, {32, 11, 1.3460e-4}, {64, 11, 3.3627e-5},
          {128, 11, 8.3853e-6}, {256, 11, 2.0750e-6}, {512, 11, 4.9743e-7}}},
        {1e-6, kSimp,
         {{16, 11, 5.0053e-5}, {32, 11, 1.2241e-5}, {64, 11, 3.0231e-6},
          {128, 11, 7.3348e-7}, {256, 11, 1.6199e-7}, {512, 11, 1.9180e-8}}},
    };
    return ex;
}

// fully nonlinear problem without a closed-form solution
NamedExample make_example4() {
    Problem p;
    p.rhs = [](double, double u, double up, double upp) {
        return -std::exp(u) - std::exp(up) - 0.1 * upp * upp;
    };
    // on the box of M = 3: |d/du| <= e^{1/4}, |d/du'| <= e^{3/8}, |d/du''| <= 0.3
    p.constants = ProblemConstants{3.0, std::exp(0.25), std::exp(0.375), 0.3};

    NamedExample ex{4, "fully nonlinear exponential problem", std::move(p), {}};
    ex.tables = {
        {1e-10, kSimp,
         {{8, 15, std::nullopt}, {16, 15, std::nullopt}, {32, 15, std::nullopt},
          {64, 15, std::nullopt}}},
    };
    return ex;
}

} // namespace

const NamedExample& get_example(int id) {
    static const NamedExample e1 = make_example1();
    static const NamedExample e2 = make_example2();
    static const NamedExample e3 = make_example3();
    static const NamedExample e4 = make_example4();
    switch (id) {
    case 1: return e1;
    case 2: return e2;
    case 3: return e3;
    case 4: return e4;
    default: throw std::out_of_range("get_example: id must be 1..4");
    }
}

} // namespace bvp3::examples
