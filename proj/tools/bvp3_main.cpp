#include <cstdio>
#include <filesystem>
#include <fstream>
#include <future>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "bvp3/analysis.hpp"
#include "bvp3/problem_file.hpp"
#include "bvp3/solver.hpp"
#include "bvp3/svg.hpp"

namespace {

using namespace bvp3;

constexpr int kExitOk = 0;
constexpr int kExitInput = 1;
constexpr int kExitNotConverged = 2;
constexpr int kExitHypothesisFailed = 3;

std::string fmt(const char* format, double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, format, v);
    return buf;
}

QuadratureMethod parse_method(const std::string& name) {
    if (name == "trap") return QuadratureMethod::Trapezium;
    if (name == "simpson") return QuadratureMethod::ModifiedSimpson;
    throw CLI::ValidationError("--method", "must be 'trap' or 'simpson'");
}

struct LoadedProblem {
    Problem problem;
    ProblemFileData data;
};

std::optional<LoadedProblem> load_problem(const std::string& path) {
    try {
        std::ifstream in(path);
        if (!in) {
            std::cerr << "error: cannot open '" << path << "'\n";
            return std::nullopt;
        }
        std::ostringstream buf;
        buf << in.rdbuf();
        ProblemFileData data = parse_problem_text(buf.str());
        return LoadedProblem{make_problem(data), std::move(data)};
    } catch (const ProblemFileError& e) {
        std::cerr << "error: " << path << ": " << e.what() << "\n";
        return std::nullopt;
    }
}

void write_solution_csv(std::ostream& out, const SolveResult& r) {
    out << "t,u,y,z,phi\n";
    const Grid& g = r.u.grid();
    for (int i = 0; i <= g.n(); ++i) {
        out << fmt("%.17g", g.node(i)) << ',' << fmt("%.17g", r.u[i]) << ','
            << fmt("%.17g", r.y[i]) << ',' << fmt("%.17g", r.z[i]) << ','
            << fmt("%.17g", r.phi[i]) << '\n';
    }
}

int report_solve_outcome(const SolveResult& r) {
    std::cout << "iterations: " << r.iterations << "\n";
    std::cout << "converged: " << (r.converged ? "true" : "false") << "\n";
    if (r.diverged) std::cout << "diverged: true\n";
    if (!r.residuals.empty()) {
        std::cout << "final_residual: " << fmt("%.6e", r.residuals.back()) << "\n";
    }
    return r.converged ? kExitOk : kExitNotConverged;
}

int cmd_solve(const std::string& file, int n, double tol, int max_iter,
              const std::string& method, const std::string& out_path) {
    auto loaded = load_problem(file);
    if (!loaded) return kExitInput;

    SolverConfig cfg;
    cfg.n = n;
    cfg.tol = tol;
    cfg.max_iter = max_iter;
    cfg.method = parse_method(method);
    if (cfg.method == QuadratureMethod::ModifiedSimpson && n % 2 != 0) {
        std::cerr << "error: the simpson method needs an even --n (got " << n << ")\n";
        return kExitInput;
    }

    std::optional<SolveResult> r;
    try {
        r = solve(loaded->problem, cfg);
    } catch (const NonFiniteIterate& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitNotConverged;
    }

    if (!out_path.empty()) {
        std::ofstream out(out_path, std::ios::binary);
        if (!out) {
            std::cerr << "error: cannot write '" << out_path << "'\n";
            return kExitInput;
        }
        write_solution_csv(out, *r);
    }
    return report_solve_outcome(*r);
}

std::vector<int> parse_n_list(const std::string& text) {
    std::vector<int> ns;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            ns.push_back(std::stoi(item));
        } catch (const std::exception&) {
            throw CLI::ValidationError("--n-list", "expected comma-separated integers");
        }
    }
    if (ns.empty()) throw CLI::ValidationError("--n-list", "must not be empty");
    for (std::size_t i = 1; i < ns.size(); ++i) {
        if (ns[i] != 2 * ns[i - 1]) {
            throw CLI::ValidationError("--n-list", "values must double: 8,16,32,...");
        }
    }
    return ns;
}

struct StudyRow {
    int n = 0;
    std::optional<SolveResult> trap, simpson;
    std::optional<double> err_trap, err_simpson;
};

double error_against(const SolveResult& r, const std::function<double(double)>& exact) {
    const Grid& g = r.u.grid();
    double m = 0.0;
    for (int i = 0; i <= g.n(); ++i) m = std::max(m, std::abs(r.u[i] - exact(g.node(i))));
    return m;
}

double error_against_reference(const SolveResult& r, const SolveResult& ref) {
    const Grid& g = r.u.grid();
    const int stride = ref.u.grid().n() / g.n();
    double m = 0.0;
    for (int i = 0; i <= g.n(); ++i) m = std::max(m, std::abs(r.u[i] - ref.u[i * stride]));
    return m;
}

int cmd_study(const std::string& file, const std::string& n_list, double tol,
              const std::string& method, const std::string& format, const std::string& out_path) {
    auto loaded = load_problem(file);
    if (!loaded) return kExitInput;
    const std::vector<int> ns = parse_n_list(n_list);

    const bool with_trap = method == "both" || method == "trap";
    const bool with_simpson = method == "both" || method == "simpson";
    if (!with_trap && !with_simpson) {
        std::cerr << "error: --method must be 'trap', 'simpson' or 'both'\n";
        return kExitInput;
    }
    if (with_simpson) {
        for (int n : ns) {
            if (n % 2 != 0) {
                std::cerr << "error: the simpson method needs even grid sizes (got " << n << ")\n";
                return kExitInput;
            }
        }
    }

    // Problems without an exact solution are measured against a fine
    // reference solve; it is an oracle, not ground truth.
    std::function<double(double)> exact = loaded->problem.exact;
    std::optional<SolveResult> reference;
    if (!exact) {
        SolverConfig ref_cfg;
        ref_cfg.n = 4 * ns.back();
        ref_cfg.tol = tol / 100.0;
        ref_cfg.method = QuadratureMethod::ModifiedSimpson;
        reference = solve(loaded->problem, ref_cfg);
        std::cout << "note: no exact solution given; errors are measured against a reference "
                     "solve (simpson, n=" << ref_cfg.n << ", tol=" << fmt("%.3g", ref_cfg.tol)
                  << ")\n";
    }

    // solves for distinct n are independent; run them concurrently
    auto run_row = [&](int n) {
        StudyRow row;
        row.n = n;
        SolverConfig cfg;
        cfg.n = n;
        cfg.tol = tol;
        if (with_trap) {
            cfg.method = QuadratureMethod::Trapezium;
            row.trap = solve(loaded->problem, cfg);
            row.err_trap = exact ? error_against(*row.trap, exact)
                                 : error_against_reference(*row.trap, *reference);
        }
        if (with_simpson) {
            cfg.method = QuadratureMethod::ModifiedSimpson;
            row.simpson = solve(loaded->problem, cfg);
            row.err_simpson = exact ? error_against(*row.simpson, exact)
                                    : error_against_reference(*row.simpson, *reference);
        }
        return row;
    };

    std::vector<std::future<StudyRow>> futures;
    futures.reserve(ns.size());
    for (int n : ns) futures.push_back(std::async(std::launch::async, run_row, n));
    std::vector<StudyRow> rows;
    rows.reserve(ns.size());
    for (auto& f : futures) rows.push_back(f.get());

    auto orders_for = [&](bool simpson) {
        std::vector<StudyPoint> pts;
        for (const StudyRow& r : rows) {
            const auto& res = simpson ? r.simpson : r.trap;
            const auto& err = simpson ? r.err_simpson : r.err_trap;
            pts.push_back({r.n, res->iterations, *err});
        }
        return order_table(pts);
    };
    std::vector<ConvergenceRow> trap_rows, simpson_rows;
    if (with_trap) trap_rows = orders_for(false);
    if (with_simpson) simpson_rows = orders_for(true);

    std::ostringstream table;
    const bool csv = format == "csv";
    if (!csv && format != "markdown") {
        std::cerr << "error: --format must be 'csv' or 'markdown'\n";
        return kExitInput;
    }

    auto order_text = [&](const std::optional<double>& o, const char* f) {
        return o ? fmt(f, *o) : std::string();
    };

    if (csv) {
        table << "n";
        if (with_trap) table << ",k_trap,error_trap,order_trap";
        if (with_simpson) table << ",k_simpson,error_simpson,order_simpson";
        table << "\n";
        for (std::size_t i = 0; i < rows.size(); ++i) {
            table << rows[i].n;
            if (with_trap) {
                table << ',' << trap_rows[i].iterations << ',' << fmt("%.17g", trap_rows[i].error)
                      << ',' << order_text(trap_rows[i].order, "%.17g");
            }
            if (with_simpson) {
                table << ',' << simpson_rows[i].iterations << ','
                      << fmt("%.17g", simpson_rows[i].error) << ','
                      << order_text(simpson_rows[i].order, "%.17g");
            }
            table << '\n';
        }
    } else {
        table << "| N | K |";
        if (with_trap) table << " Error_trap | Order |";
        if (with_simpson) table << " Error_Simp | Order |";
        table << "\n|---|---|";
        if (with_trap) table << "---|---|";
        if (with_simpson) table << "---|---|";
        table << "\n";
        for (std::size_t i = 0; i < rows.size(); ++i) {
            const int kt = with_trap ? trap_rows[i].iterations : 0;
            const int ks = with_simpson ? simpson_rows[i].iterations : 0;
            std::string k_text = with_trap && with_simpson && kt != ks
                                     ? std::to_string(kt) + "/" + std::to_string(ks)
                                     : std::to_string(with_trap ? kt : ks);
            table << "| " << rows[i].n << " | " << k_text << " |";
            if (with_trap) {
                table << ' ' << fmt("%.4e", trap_rows[i].error) << " | "
                      << order_text(trap_rows[i].order, "%.4f") << " |";
            }
            if (with_simpson) {
                table << ' ' << fmt("%.4e", simpson_rows[i].error) << " | "
                      << order_text(simpson_rows[i].order, "%.4f") << " |";
            }
            table << '\n';
        }
    }

    if (!out_path.empty()) {
        std::ofstream out(out_path, std::ios::binary);
        if (!out) {
            std::cerr << "error: cannot write '" << out_path << "'\n";
            return kExitInput;
        }
        out << table.str();
    } else {
        std::cout << table.str();
    }
    return kExitOk;
}

int cmd_check(const std::string& file, int samples) {
    auto loaded = load_problem(file);
    if (!loaded) return kExitInput;
    const ProblemFileData& d = loaded->data;

    double m_bound = 0.0, l0 = 0.0, l1 = 0.0, l2 = 0.0;
    if (d.m_bound && d.l0 && d.l1 && d.l2 && samples == 0) {
        m_bound = *d.m_bound;
        l0 = *d.l0;
        l1 = *d.l1;
        l2 = *d.l2;
        std::cout << "constants: from problem file\n";
    } else if (samples > 0) {
        if (!d.m_bound) {
            std::cerr << "error: --samples needs M in the problem file to bound the domain\n";
            return kExitInput;
        }
        m_bound = *d.m_bound;
        const ConstantEstimates est = estimate_constants(loaded->problem, m_bound, samples);
        l0 = est.l0;
        l1 = est.l1;
        l2 = est.l2;
        std::cout << "constants: sampled on a " << samples << "^4 lattice (lower estimates; "
                     "prefer analytic values)\n";
        std::cout << "sup|f|: " << fmt("%.6g", est.sup_f) << "\n";
        if (est.sup_f > m_bound) {
            std::cout << "warning: sampled sup|f| exceeds M; the box assumption fails\n";
        }
    } else {
        std::cerr << "error: the hypothesis check needs all of M, L0, L1, L2 in the problem "
                     "file, or --samples to estimate the Lipschitz constants numerically "
                     "(which still requires M)\n";
        return kExitInput;
    }

    const UniquenessReport rep = uniqueness_report(m_bound, l0, l1, l2);
    std::cout << "M: " << fmt("%.6g", rep.m_bound) << "\n";
    std::cout << "L0: " << fmt("%.6g", rep.l0) << "  L1: " << fmt("%.6g", rep.l1)
              << "  L2: " << fmt("%.6g", rep.l2) << "\n";
    std::cout << "q: " << fmt("%.6g", rep.q) << "\n";
    std::cout << "domain box: |u| <= " << fmt("%.6g", rep.box_u) << ", |u'| <= "
              << fmt("%.6g", rep.box_y) << ", |u''| <= " << fmt("%.6g", rep.box_z) << "\n";
    std::cout << "hypothesis satisfied: " << (rep.satisfied ? "yes" : "no") << "\n";
    return rep.satisfied ? kExitOk : kExitHypothesisFailed;
}

int cmd_plot(const std::string& file, int n, double tol, const std::string& method,
             const std::string& svg_path) {
    auto loaded = load_problem(file);
    if (!loaded) return kExitInput;

    SolverConfig cfg;
    cfg.n = n;
    cfg.tol = tol;
    cfg.method = parse_method(method);
    if (cfg.method == QuadratureMethod::ModifiedSimpson && n % 2 != 0) {
        std::cerr << "error: the simpson method needs an even --n (got " << n << ")\n";
        return kExitInput;
    }

    std::optional<SolveResult> r;
    try {
        r = solve(loaded->problem, cfg);
    } catch (const NonFiniteIterate& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitNotConverged;
    }

    std::vector<double> ts(static_cast<std::size_t>(r->u.size()));
    for (int i = 0; i < r->u.size(); ++i) ts[static_cast<std::size_t>(i)] = r->u.grid().node(i);
    const std::string svg = render_solution_svg(ts, r->u.values());

    std::ofstream out(svg_path, std::ios::binary);
    if (!out) {
        std::cerr << "error: cannot write '" << svg_path << "'\n";
        return kExitInput;
    }
    out << svg;
    out.close();
    return report_solve_outcome(*r);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Solver for u''' = f(t, u, u', u'') on [0,1] with u(0), u'(0), u'(1) given"};
    app.require_subcommand(1);

    std::string file, method = "simpson", out_path, svg_path;
    int n = 64, max_iter = 100, samples = 0;
    double tol = 1e-10;

    CLI::App* solve_cmd = app.add_subcommand("solve", "solve a problem and write the node values");
    solve_cmd->add_option("file", file, "problem file")->required();
    solve_cmd->add_option("--n", n, "number of subintervals");
    solve_cmd->add_option("--tol", tol, "stopping tolerance");
    solve_cmd->add_option("--max-iter", max_iter, "iteration cap");
    solve_cmd->add_option("--method", method, "trap|simpson");
    solve_cmd->add_option("--out", out_path, "CSV output path");

    std::string n_list = "8,16,32,64,128,256,512,1024", study_method = "both",
                format = "markdown";
    CLI::App* study_cmd = app.add_subcommand("study", "grid-refinement convergence study");
    study_cmd->add_option("file", file, "problem file")->required();
    study_cmd->add_option("--n-list", n_list, "comma-separated doubling grid sizes");
    study_cmd->add_option("--tol", tol, "stopping tolerance");
    study_cmd->add_option("--method", study_method, "trap|simpson|both");
    study_cmd->add_option("--format", format, "csv|markdown");
    study_cmd->add_option("--out", out_path, "output path (default stdout)");

    CLI::App* check_cmd = app.add_subcommand("check", "check the contraction hypothesis");
    check_cmd->add_option("file", file, "problem file")->required();
    check_cmd->add_option("--samples", samples, "estimate constants on an S^4 lattice");

    CLI::App* plot_cmd = app.add_subcommand("plot", "solve and render an SVG of u");
    plot_cmd->add_option("file", file, "problem file")->required();
    plot_cmd->add_option("--n", n, "number of subintervals");
    plot_cmd->add_option("--tol", tol, "stopping tolerance");
    plot_cmd->add_option("--method", method, "trap|simpson");
    plot_cmd->add_option("--svg", svg_path, "SVG output path")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitInput;
    }

    try {
        if (*solve_cmd) return cmd_solve(file, n, tol, max_iter, method, out_path);
        if (*study_cmd) return cmd_study(file, n_list, tol, study_method, format, out_path);
        if (*check_cmd) return cmd_check(file, samples);
        if (*plot_cmd) return cmd_plot(file, n, tol, method, svg_path);
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    }
    return kExitInput;
}
