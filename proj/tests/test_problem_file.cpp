#include <cmath>

#include <doctest.h>

#include "bvp3/problem_file.hpp"

using namespace bvp3;

TEST_SUITE("problemfile") {

TEST_CASE("minimal file") {
    const ProblemFileData d = parse_problem_text("f = \"t\"\nc1 = 0\nc2 = 0\nc3 = 0\n");
    CHECK(d.f == "t");
    CHECK_FALSE(d.exact.has_value());
    CHECK_FALSE(d.m_bound.has_value());
    const Problem p = make_problem(d);
    CHECK(p.rhs(0.25, 0, 0, 0) == 0.25);
    CHECK_FALSE(p.exact);
    CHECK_FALSE(p.constants.has_value());
}

TEST_CASE("comments, blank lines and inline comments") {
    const std::string text =
        "# full line comment\n"
        "\n"
        "f = \"u + 1\"  # trailing comment\n"
        "c1 = 1.5\n"
        "c2 = -2e-3\n"
        "c3 = 0.25\n";
    const ProblemFileData d = parse_problem_text(text);
    CHECK(d.c1 == 1.5);
    CHECK(d.c2 == -2e-3);
    CHECK(d.c3 == 0.25);
}

TEST_CASE("exact evaluates through the compiled problem") {
    const std::string text =
        "f = \"t\"\nc1 = 0\nc2 = -1\nc3 = 0.8414709848078965\n"
        "exact = \"(t-1)*sin(t)\"\n";
    const Problem p = make_problem(parse_problem_text(text));
    REQUIRE(p.exact);
    CHECK(p.exact(1.0) == 0.0);
    CHECK(p.exact(0.5) == doctest::Approx(-0.5 * std::sin(0.5)).epsilon(1e-15));
}

TEST_CASE("constants attach only when all four are present") {
    const std::string base = "f = \"t\"\nc1 = 0\nc2 = 0\nc3 = 0\nM = 2\n";
    CHECK_FALSE(make_problem(parse_problem_text(base)).constants.has_value());
    const Problem p = make_problem(parse_problem_text(base + "L0 = 1\nL1 = 0.5\nL2 = 0\n"));
    REQUIRE(p.constants.has_value());
    CHECK(p.constants->m_bound == 2.0);
    CHECK(p.constants->l1 == 0.5);
}

TEST_CASE("missing key") {
    try {
        parse_problem_text("f = \"t\"\nc1 = 0\nc2 = 0\n");
        FAIL("expected ProblemFileError");
    } catch (const ProblemFileError& e) {
        CHECK(e.kind() == ProblemFileError::Kind::MissingKey);
        CHECK(std::string(e.what()).find("c3") != std::string::npos);
    }
}

TEST_CASE("duplicate key with line number") {
    try {
        parse_problem_text("f = \"t\"\nc1 = 0\nc1 = 1\nc2 = 0\nc3 = 0\n");
        FAIL("expected ProblemFileError");
    } catch (const ProblemFileError& e) {
        CHECK(e.kind() == ProblemFileError::Kind::DuplicateKey);
        CHECK(e.line() == 3);
    }
}

TEST_CASE("unknown key is rejected") {
    try {
        parse_problem_text("f = \"t\"\nc1 = 0\nc2 = 0\nc3 = 0\ntol = 1\n");
        FAIL("expected ProblemFileError");
    } catch (const ProblemFileError& e) {
        CHECK(e.kind() == ProblemFileError::Kind::UnknownKey);
        CHECK(e.line() == 5);
    }
}

TEST_CASE("bad number and unquoted string") {
    try {
        parse_problem_text("f = \"t\"\nc1 = abc\nc2 = 0\nc3 = 0\n");
        FAIL("expected ProblemFileError");
    } catch (const ProblemFileError& e) {
        CHECK(e.kind() == ProblemFileError::Kind::BadValue);
        CHECK(e.line() == 2);
    }
    try {
        parse_problem_text("f = t\nc1 = 0\nc2 = 0\nc3 = 0\n");
        FAIL("expected ProblemFileError");
    } catch (const ProblemFileError& e) {
        CHECK(e.kind() == ProblemFileError::Kind::BadValue);
        CHECK(e.line() == 1);
    }
}

TEST_CASE("expression errors are reported with the file line") {
    try {
        parse_problem_text("c1 = 0\nc2 = 0\nc3 = 0\nf = \"2t\"\n");
        FAIL("expected ProblemFileError");
    } catch (const ProblemFileError& e) {
        CHECK(e.kind() == ProblemFileError::Kind::BadExpr);
        CHECK(e.line() == 4);
    }
}

TEST_CASE("exact must reference only t") {
    try {
        parse_problem_text("f = \"t\"\nc1 = 0\nc2 = 0\nc3 = 0\nexact = \"u + t\"\n");
        FAIL("expected ProblemFileError");
    } catch (const ProblemFileError& e) {
        CHECK(e.kind() == ProblemFileError::Kind::BadExpr);
        CHECK(e.line() == 5);
    }
}

TEST_CASE("syntax error without an equals sign") {
    try {
        parse_problem_text("f = \"t\"\nc1 0\nc2 = 0\nc3 = 0\n");
        FAIL("expected ProblemFileError");
    } catch (const ProblemFileError& e) {
        CHECK(e.kind() == ProblemFileError::Kind::Syntax);
        CHECK(e.line() == 2);
    }
}

TEST_CASE("read_problem_file reports missing files") {
    CHECK_THROWS_AS(read_problem_file("/nonexistent/path.prob"), ProblemFileError);
}

} // TEST_SUITE
