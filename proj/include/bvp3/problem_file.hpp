#pragma once

#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "bvp3/solver.hpp"

namespace bvp3 {

/// Raw contents of a problem file before expression compilation.
///
/// The format is line-oriented `key = value` with `#` comments.  String
/// values (f, exact) are double-quoted; numbers are plain.  Recognized
/// keys: f, c1, c2, c3, exact, M, L0, L1, L2.  Unknown keys are errors.
struct ProblemFileData {
    std::string f;
    double c1 = 0.0, c2 = 0.0, c3 = 0.0;
    std::optional<std::string> exact;
    std::optional<double> m_bound, l0, l1, l2;
};

class ProblemFileError : public std::runtime_error {
public:
    enum class Kind { Io, Syntax, UnknownKey, DuplicateKey, MissingKey, BadValue, BadExpr };

    ProblemFileError(Kind kind, int line, const std::string& message);
    Kind kind() const noexcept { return kind_; }
    /// 1-based line number; 0 when no line applies (I/O, missing key).
    int line() const noexcept { return line_; }

private:
    Kind kind_;
    int line_;
};

ProblemFileData parse_problem_text(std::string_view text);

/// Compile the parsed data into a Problem: f becomes the rhs closure,
/// exact (which may reference only t) the exact-solution closure, and the
/// constants are attached when all four of M, L0, L1, L2 are present.
Problem make_problem(const ProblemFileData& data);

Problem read_problem_file(const std::filesystem::path& path);

} // namespace bvp3
