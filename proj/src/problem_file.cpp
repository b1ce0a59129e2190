#include "bvp3/problem_file.hpp"

#include <charconv>
#include <fstream>
#include <memory>
#include <set>
#include <sstream>

#include "bvp3/expr.hpp"

namespace bvp3 {

ProblemFileError::ProblemFileError(Kind kind, int line, const std::string& message)
    : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + message : message),
      kind_(kind),
      line_(line) {}

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
    return s;
}

// strips a trailing # comment, except inside a quoted value
std::string_view strip_comment(std::string_view s) {
    bool quoted = false;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] == '"') quoted = !quoted;
        else if (s[i] == '#' && !quoted) return s.substr(0, i);
    }
    return s;
}

double parse_number(std::string_view v, int line, const std::string& key) {
    double out = 0.0;
    const char* first = v.data();
    const char* last = v.data() + v.size();
    const auto res = std::from_chars(first, last, out);
    if (res.ec != std::errc{} || res.ptr != last) {
        throw ProblemFileError(ProblemFileError::Kind::BadValue, line,
                               "value of '" + key + "' is not a number: '" + std::string(v) + "'");
    }
    return out;
}

std::string parse_quoted(std::string_view v, int line, const std::string& key) {
    if (v.size() < 2 || v.front() != '"' || v.back() != '"') {
        throw ProblemFileError(ProblemFileError::Kind::BadValue, line,
                               "value of '" + key + "' must be a double-quoted string");
    }
    return std::string(v.substr(1, v.size() - 2));
}

} // namespace

ProblemFileData parse_problem_text(std::string_view text) {
    ProblemFileData data;
    std::set<std::string> seen;
    std::optional<int> f_line, exact_line;

    int line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t nl = text.find('\n', pos);
        std::string_view line = text.substr(pos, nl == std::string_view::npos ? text.size() - pos : nl - pos);
        pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
        ++line_no;

        line = trim(strip_comment(line));
        if (line.empty()) continue;

        const std::size_t eq = line.find('=');
        if (eq == std::string_view::npos) {
            throw ProblemFileError(ProblemFileError::Kind::Syntax, line_no, "expected 'key = value'");
        }
        const std::string key{trim(line.substr(0, eq))};
        const std::string_view value = trim(line.substr(eq + 1));

        if (!seen.insert(key).second) {
            throw ProblemFileError(ProblemFileError::Kind::DuplicateKey, line_no,
                                   "duplicate key '" + key + "'");
        }

        if (key == "f") { data.f = parse_quoted(value, line_no, key); f_line = line_no; }
        else if (key == "c1") data.c1 = parse_number(value, line_no, key);
        else if (key == "c2") data.c2 = parse_number(value, line_no, key);
        else if (key == "c3") data.c3 = parse_number(value, line_no, key);
        else if (key == "exact") { data.exact = parse_quoted(value, line_no, key); exact_line = line_no; }
        else if (key == "M") data.m_bound = parse_number(value, line_no, key);
        else if (key == "L0") data.l0 = parse_number(value, line_no, key);
        else if (key == "L1") data.l1 = parse_number(value, line_no, key);
        else if (key == "L2") data.l2 = parse_number(value, line_no, key);
        else {
            throw ProblemFileError(ProblemFileError::Kind::UnknownKey, line_no,
                                   "unknown key '" + key + "'");
        }
    }

    for (const char* required : {"f", "c1", "c2", "c3"}) {
        if (!seen.count(required)) {
            throw ProblemFileError(ProblemFileError::Kind::MissingKey, 0,
                                   "missing required key '" + std::string(required) + "'");
        }
    }

    // compile now so errors carry the file line
    try {
        (void)expr::parse(data.f);
    } catch (const expr::ExprError& e) {
        throw ProblemFileError(ProblemFileError::Kind::BadExpr, f_line.value_or(0),
                               std::string("in f: ") + e.what());
    }
    if (data.exact) {
        try {
            if (!expr::parse(*data.exact).depends_only_on_t()) {
                throw ProblemFileError(ProblemFileError::Kind::BadExpr, exact_line.value_or(0),
                                       "exact may reference only t");
            }
        } catch (const expr::ExprError& e) {
            throw ProblemFileError(ProblemFileError::Kind::BadExpr, exact_line.value_or(0),
                                   std::string("in exact: ") + e.what());
        }
    }
    return data;
}

Problem make_problem(const ProblemFileData& data) {
    Problem p;
    auto f = std::make_shared<expr::Expr>(expr::parse(data.f));
    p.rhs = [f](double t, double u, double up, double upp) { return f->eval(t, u, up, upp); };
    p.c1 = data.c1;
    p.c2 = data.c2;
    p.c3 = data.c3;
    if (data.exact) {
        auto e = std::make_shared<expr::Expr>(expr::parse(*data.exact));
        p.exact = [e](double t) { return e->eval(t, 0.0, 0.0, 0.0); };
    }
    if (data.m_bound && data.l0 && data.l1 && data.l2) {
        p.constants = ProblemConstants{*data.m_bound, *data.l0, *data.l1, *data.l2};
    }
    return p;
}

Problem read_problem_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw ProblemFileError(ProblemFileError::Kind::Io, 0,
                               "cannot open '" + path.string() + "'");
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return make_problem(parse_problem_text(buf.str()));
}

} // namespace bvp3
