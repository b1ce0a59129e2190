#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bvp3/quadrature.hpp"
#include "bvp3/solver.hpp"

namespace bvp3::examples {

/// Reference convergence data kept for golden tests: the tolerance and
/// method it was produced with, and (n, iterations, error) per row.  Rows
/// without a recorded error (no exact solution) keep only the counts.
struct ReferenceTable {
    double tol;
    QuadratureMethod method;
    struct Row {
        int n;
        int iterations;
        std::optional<double> error;
    };
    std::vector<Row> rows;
};

struct NamedExample {
    int id;
    std::string title;
    Problem problem;
    std::vector<ReferenceTable> tables;
};

/// The four built-in benchmark problems.  1-3 carry exact solutions;
/// 4 does not.  Throws std::out_of_range for any other id.
const NamedExample& get_example(int id);

} // namespace bvp3::examples
