#include <stdexcept>
#include <vector>

#include <doctest.h>

#include "bvp3/svg.hpp"

using namespace bvp3;

TEST_SUITE("svg") {

TEST_CASE("well-formed document with axes, ticks and the curve") {
    std::vector<double> t, u;
    for (int i = 0; i <= 16; ++i) {
        t.push_back(i / 16.0);
        u.push_back(t.back() * (1.0 - t.back()));
    }
    const std::string svg = render_solution_svg(t, u);
    CHECK(svg.rfind("<?xml", 0) == 0);
    CHECK(svg.find("<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\"") != std::string::npos);
    CHECK(svg.find("viewBox=\"0 0 640 400\"") != std::string::npos);
    CHECK(svg.find("<polyline") != std::string::npos);
    CHECK(svg.find("0.25") != std::string::npos); // tick label
    CHECK(svg.find("</svg>") != std::string::npos);
    // every opened text/line element closes
    std::size_t opens = 0, pos = 0;
    while ((pos = svg.find("<text", pos)) != std::string::npos) { ++opens; pos += 5; }
    std::size_t closes = 0;
    pos = 0;
    while ((pos = svg.find("</text>", pos)) != std::string::npos) { ++closes; pos += 7; }
    CHECK(opens == closes);
    CHECK(opens >= 7); // five t ticks plus the two value labels
}

TEST_CASE("flat data still produces a visible band") {
    std::vector<double> t{0.0, 0.5, 1.0}, u{0.0, 0.0, 0.0};
    const std::string svg = render_solution_svg(t, u);
    CHECK(svg.find("<polyline") != std::string::npos);
    CHECK(svg.find("-0.5") != std::string::npos);
    CHECK(svg.find("0.5") != std::string::npos);
}

TEST_CASE("input validation") {
    std::vector<double> t{0.0, 1.0}, u{0.0};
    CHECK_THROWS_AS(render_solution_svg(t, u), std::invalid_argument);
    std::vector<double> single{0.5};
    CHECK_THROWS_AS(render_solution_svg(single, single), std::invalid_argument);
}

} // TEST_SUITE
