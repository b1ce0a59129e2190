#include <cmath>
#include <random>

#include <doctest.h>

#include "bvp3/analysis.hpp"
#include "bvp3/examples.hpp"
#include "bvp3/problem_file.hpp"

using namespace bvp3;

namespace {

// independent closed forms of the exact solutions and their derivatives
struct ExactFamily {
    double (*u)(double);
    double (*u1)(double);
    double (*u2)(double);
    double (*u3)(double);
};

const ExactFamily kFamilies[3] = {
    {[](double x) { return (x - 1.0) * std::sin(x); },
     [](double x) { return std::sin(x) + (x - 1.0) * std::cos(x); },
     [](double x) { return 2.0 * std::cos(x) - (x - 1.0) * std::sin(x); },
     [](double x) { return -3.0 * std::sin(x) - (x - 1.0) * std::cos(x); }},
    {[](double x) { return x * x * (1.5 - x); },
     [](double x) { return 3.0 * x - 3.0 * x * x; },
     [](double x) { return 3.0 - 6.0 * x; },
     [](double) { return -6.0; }},
    {[](double x) { return std::exp(x); },
     [](double x) { return std::exp(x); },
     [](double x) { return std::exp(x); },
     [](double x) { return std::exp(x); }},
};

} // namespace

TEST_SUITE("examples") {

TEST_CASE("ids and bad lookups") {
    for (int id = 1; id <= 4; ++id) CHECK(examples::get_example(id).id == id);
    CHECK_THROWS_AS(examples::get_example(0), std::out_of_range);
    CHECK_THROWS_AS(examples::get_example(5), std::out_of_range);
}

TEST_CASE("exact solution spot values") {
    CHECK(examples::get_example(2).problem.exact(1.0) == 0.5);
    CHECK(examples::get_example(3).problem.exact(0.0) == 1.0);
    CHECK_FALSE(examples::get_example(4).problem.exact);
}

// substituting the exact solution into the rhs must reproduce u'''
TEST_CASE("residual identity for the three solvable benchmarks") {
    std::mt19937 rng(42);
    std::uniform_real_distribution<double> dist(0.0, 1.0);
    for (int id = 1; id <= 3; ++id) {
        const Problem& p = examples::get_example(id).problem;
        const ExactFamily& fam = kFamilies[id - 1];
        for (int s = 0; s < 1000; ++s) {
            const double x = dist(rng);
            const double r = p.rhs(x, fam.u(x), fam.u1(x), fam.u2(x)) - fam.u3(x);
            CHECK(std::abs(r) <= 1e-12);
        }
    }
}

TEST_CASE("boundary identities") {
    for (int id = 1; id <= 3; ++id) {
        const Problem& p = examples::get_example(id).problem;
        const ExactFamily& fam = kFamilies[id - 1];
        CHECK(std::abs(fam.u(0.0) - p.c1) <= 1e-15);
        CHECK(std::abs(fam.u1(0.0) - p.c2) <= 1e-15);
        CHECK(std::abs(fam.u1(1.0) - p.c3) <= 1e-15);
    }
}

TEST_CASE("shipped problem files agree with the native closures") {
    std::mt19937 rng(1234);
    std::uniform_real_distribution<double> t_dist(0.0, 1.0);
    std::uniform_real_distribution<double> v_dist(-3.0, 3.0);
    for (int id = 1; id <= 4; ++id) {
        const Problem native = examples::get_example(id).problem;
        const Problem parsed = read_problem_file(std::string(BVP3_PROBLEMS_DIR) + "/ex" +
                                                 std::to_string(id) + ".prob");
        CHECK(parsed.c1 == native.c1);
        CHECK(parsed.c2 == native.c2);
        CHECK(parsed.c3 == native.c3);
        for (int s = 0; s < 1000; ++s) {
            const double t = t_dist(rng), u = v_dist(rng), up = v_dist(rng), upp = v_dist(rng);
            const double a = native.rhs(t, u, up, upp);
            const double b = parsed.rhs(t, u, up, upp);
            CHECK(std::abs(a - b) <= 1e-15 * std::max({std::abs(a), std::abs(b), 1.0}));
        }
        if (native.exact) {
            REQUIRE(parsed.exact);
            for (int s = 0; s < 200; ++s) {
                const double t = t_dist(rng);
                const double a = native.exact(t), b = parsed.exact(t);
                CHECK(std::abs(a - b) <= 1e-15 * std::max({std::abs(a), std::abs(b), 1.0}));
            }
        }
    }
}

TEST_CASE("fully nonlinear benchmark satisfies the hypothesis with M = 3") {
    const Problem& p = examples::get_example(4).problem;
    const ConstantEstimates est = estimate_constants(p, 3.0, 21);
    CHECK(est.sup_f <= 3.0 + 1e-9);
    CHECK(est.sup_f >= 2.5); // the corner value e^{1/4} + e^{3/8} + 0.225
    const UniquenessReport rep = uniqueness_report(3.0, est.l0, est.l1, est.l2);
    CHECK(rep.satisfied);
    CHECK(rep.q < 0.6);
}

TEST_CASE("declared constants satisfy the hypothesis for all four") {
    for (int id = 1; id <= 4; ++id) {
        const Problem& p = examples::get_example(id).problem;
        REQUIRE(p.constants.has_value());
        const auto& c = *p.constants;
        CHECK(uniqueness_report(c.m_bound, c.l0, c.l1, c.l2).satisfied);
    }
}

TEST_CASE("reference tables are shipped for the golden runs") {
    CHECK(examples::get_example(1).tables.size() == 2);
    CHECK(examples::get_example(1).tables[0].rows.size() == 8);
    CHECK(examples::get_example(2).tables.size() == 3);
    CHECK(examples::get_example(3).tables.size() == 2);
    CHECK(examples::get_example(4).tables.size() == 1);
    for (const auto& row : examples::get_example(4).tables[0].rows) {
        CHECK(row.iterations == 15);
        CHECK_FALSE(row.error.has_value());
    }
}

} // TEST_SUITE
