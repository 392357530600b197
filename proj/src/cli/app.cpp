#include "prab/cli/app.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "prab/cli/expr.hpp"
#include "prab/cli/problem_file.hpp"
#include "prab/cli/result_table.hpp"
#include "prab/const_coeff.hpp"
#include "prab/errors.hpp"
#include "prab/oracle.hpp"
#include "prab/psi.hpp"
#include "prab/solver.hpp"
#include "prab/special.hpp"
#include "prab/version.hpp"

namespace prab::cli {

namespace {

constexpr std::size_t kOracleFactor = 4;

struct Overrides {
    std::optional<std::size_t> grid;
    std::optional<double> tol;
    std::optional<std::size_t> max_iter;
    std::optional<std::string> route;
    bool force_const = false;
};

void apply(ProblemFile& pf, const Overrides& o) {
    if (o.grid) pf.cfg.n_points = *o.grid;
    if (o.tol) pf.cfg.picard_tol = *o.tol;
    if (o.max_iter) pf.cfg.max_iters = *o.max_iter;
    if (o.route) pf.route = parse_route(*o.route);
    if (o.force_const) pf.route = Route::const_coeff;
    pf.cfg.validate();
}

std::string hex64(std::uint64_t h) {
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

std::string problem_hash(const ProblemFile& pf) {
    std::ostringstream key;
    key << pf.text << "\n#effective n_points=" << pf.cfg.n_points
        << " picard_tol=" << format_number(pf.cfg.picard_tol)
        << " max_iters=" << pf.cfg.max_iters
        << " series_tol=" << format_number(pf.cfg.series_tol)
        << " route=" << route_name(pf.route);
    return "fnv1a64:" + hex64(fnv1a64(key.str()));
}

std::string escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        if (c == '"' || c == '\\') out += '\\';
        if (c == '\n') {
            out += "\\n";
            continue;
        }
        out += c;
    }
    return out;
}

struct RouteResult {
    Solution sol;
    GridFn residual;           // pointwise, on the t grid
    std::optional<GridFn> tau_v;  // psi problems: v on the tau grid
    std::optional<ProblemSpec> tau_problem;
    std::string route;
};

RouteResult run_route(const ProblemFile& pf, Route r) {
    if (pf.psi) {
        if (r == Route::const_coeff) throw ValidationError("const route is not available with [psi]");
        auto d = solve_ivp_wrt_detailed(pf.as_psi(), pf.cfg);
        GridFn res = pull_back(*pf.psi, residual_pointwise(d.tau_problem, d.tau_space, pf.cfg.series_tol));
        return {std::move(d.t_space), std::move(res), std::move(d.tau_space.v),
                std::move(d.tau_problem), "picard"};
    }
    if (r == Route::const_coeff) {
        Solution s = solve_const_ivp(pf.as_const(), pf.cfg);
        GridFn res = residual_pointwise(pf.spec, s, pf.cfg.series_tol);
        return {std::move(s), std::move(res), std::nullopt, std::nullopt, "const"};
    }
    Solution s = solve_ivp(pf.spec, pf.cfg);
    GridFn res = residual_pointwise(pf.spec, s, pf.cfg.series_tol);
    return {std::move(s), std::move(res), std::nullopt, std::nullopt, "picard"};
}

class Output {
public:
    Output(const std::string& path, std::ostream& fallback) {
        if (!path.empty()) {
            file_.open(path, std::ios::binary | std::ios::trunc);
            if (!file_) throw IoError("cannot open output file '" + path + "'");
        }
        os_ = path.empty() ? &fallback : &file_;
    }
    std::ostream& stream() { return *os_; }
    void finish(const std::string& path) {
        os_->flush();
        if (!*os_) throw IoError("failed writing '" + (path.empty() ? "stdout" : path) + "'");
    }

private:
    std::ofstream file_;
    std::ostream* os_;
};

int cmd_solve(const std::string& path, const Overrides& o, const std::string& out_path,
              const std::string& canonical_path, bool cross_check, std::ostream& out) {
    ProblemFile pf = parse_problem(path);
    apply(pf, o);
    const Route r = pf.resolved_route();
    RouteResult rr = run_route(pf, r);

    ResultTable table;
    table.header.emplace_back("tool", std::string("prabsolve ") + kVersion);
    table.header.emplace_back("problem_hash", problem_hash(pf));
    table.header.emplace_back("route", rr.route);
    if (pf.psi) table.header.emplace_back("psi", pf.psi_description);
    table.header.emplace_back("n_points", std::to_string(pf.cfg.n_points));
    table.header.emplace_back("iterations", std::to_string(rr.sol.iterations));
    table.header.emplace_back("final_update_norm", format_number(rr.sol.final_update_norm));
    table.header.emplace_back("residual_norm", format_number(rr.sol.residual_norm));
    if (cross_check) {
        if (!pf.const_eligible()) {
            throw ValidationError("--cross-check needs a constant-coefficient problem");
        }
        const Route other = r == Route::const_coeff ? Route::picard : Route::const_coeff;
        const RouteResult alt = run_route(pf, other);
        table.header.emplace_back("cross_check_route", alt.route);
        table.header.emplace_back("cross_check_max_divergence",
                                  format_number(sup_distance(rr.sol.v.values(), alt.sol.v.values())));
    }
    table.columns = {"v", "u", "residual_pointwise"};
    table.data = {rr.sol.v, rr.sol.u, rr.residual};
    Output o_main(out_path, out);
    table.write(o_main.stream());
    o_main.finish(out_path);

    if (!canonical_path.empty()) {
        ResultTable ct;
        ct.header.emplace_back("tool", std::string("prabsolve ") + kVersion);
        ct.header.emplace_back("problem_hash", problem_hash(pf));
        ct.header.emplace_back("route", rr.route);
        ct.header.emplace_back("canonical_set", std::to_string(rr.sol.canonical->size()));
        for (std::size_t j = 0; j < rr.sol.canonical->size(); ++j) {
            ct.columns.push_back("v_" + std::to_string(j));
            ct.data.push_back((*rr.sol.canonical)[j]);
        }
        Output o_can(canonical_path, out);
        ct.write(o_can.stream());
        o_can.finish(canonical_path);
    }
    return kExitOk;
}

int cmd_check(const std::string& path, const Overrides& o, double tol, const std::string& out_path,
              std::ostream& out) {
    ProblemFile pf = parse_problem(path);
    apply(pf, o);
    const Route r = pf.resolved_route();
    const RouteResult rr = run_route(pf, r);
    const GridFn& v = rr.tau_v ? *rr.tau_v : rr.sol.v;
    const ProblemSpec& target = rr.tau_problem ? *rr.tau_problem : pf.spec;

    OracleConfig oc;
    oc.n_points = kOracleFactor * (pf.cfg.n_points - 1) + 1;
    const Solution ref = volterra_direct(target, oc);
    const GridFn ref_v = ref.v.every(kOracleFactor);
    double max_div = 0.0;
    double l2 = 0.0;
    for (std::size_t k = 0; k < v.size(); ++k) {
        const double d = v[k] - ref_v[k];
        max_div = std::max(max_div, std::abs(d));
        l2 += d * d;
    }
    l2 = std::sqrt(l2 * v.h());
    const bool pass = max_div <= tol;

    Output os(out_path, out);
    auto& s = os.stream();
    s << "tool prabsolve " << kVersion << '\n'
      << "problem_hash " << problem_hash(pf) << '\n'
      << "route " << rr.route << '\n';
    if (pf.psi) s << "psi " << pf.psi_description << " (compared on the tau grid)\n";
    s << "n_points " << pf.cfg.n_points << '\n'
      << "oracle_points " << oc.n_points << '\n'
      << "iterations " << rr.sol.iterations << '\n'
      << "residual_norm " << format_number(rr.sol.residual_norm) << '\n'
      << "oracle_residual_norm " << format_number(ref.residual_norm) << '\n'
      << "max_divergence " << format_number(max_div) << '\n'
      << "l2_divergence " << format_number(l2) << '\n'
      << "tol " << format_number(tol) << '\n'
      << "result " << (pass ? "pass" : "fail") << '\n';
    os.finish(out_path);
    return pass ? kExitOk : kExitCheckFailed;
}

int cmd_ml(double alpha, double beta, double theta, double from, double to, std::size_t n,
           const std::string& out_path, std::ostream& out) {
    if (n < 1) throw ValidationError("--n must be at least 1");
    if (!(to >= from)) throw ValidationError("--to must not be below --from");
    const MLParams p{alpha, beta, theta};
    Output os(out_path, out);
    auto& s = os.stream();
    s << "# tool prabsolve " << kVersion << '\n'
      << "# function E^theta_{alpha,beta}(z) alpha=" << format_number(alpha)
      << " beta=" << format_number(beta) << " theta=" << format_number(theta) << '\n'
      << "z,value\n";
    for (std::size_t k = 0; k < n; ++k) {
        const double z = n == 1 ? from
                                : from + (to - from) * static_cast<double>(k) /
                                             static_cast<double>(n - 1);
        s << format_number(z) << ',' << format_number(ml3(p, z)) << '\n';
    }
    os.finish(out_path);
    return kExitOk;
}

}  // namespace

int exit_code_for(const std::exception& e) noexcept {
    if (dynamic_cast<const IoError*>(&e)) return kExitIo;
    if (dynamic_cast<const NonConvergence*>(&e) || dynamic_cast<const SingularDiagonal*>(&e)) {
        return kExitNonConvergence;
    }
    if (dynamic_cast<const Error*>(&e)) return kExitValidation;
    return kExitIo;
}

void report_error(std::ostream& err, const std::exception& e) {
    const auto* pe = dynamic_cast<const Error*>(&e);
    err << "error kind=" << (pe ? pe->kind() : "InternalError") << " code=" << exit_code_for(e)
        << " msg=\"" << escape(e.what()) << '"';
    if (const auto* parse = dynamic_cast<const ParseError*>(&e)) {
        err << " line=" << parse->line() << " column=" << parse->column();
    }
    err << '\n';
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Linear Prabhakar fractional IVP solver", "prabsolve"};
    app.set_version_flag("--version", std::string("prabsolve ") + kVersion);
    app.require_subcommand(1);

    Overrides o;
    std::string file;
    std::string out_path;
    std::string canonical_path;
    bool cross_check = false;
    double check_tol = 1e-4;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("file", file, "problem file")->required();
        sub->add_option("--grid", o.grid, "number of grid points");
        sub->add_option("--max-iter", o.max_iter, "Picard iteration cap");
        sub->add_option("--route", o.route, "picard | const | auto");
        sub->add_option("--out", out_path, "output path (default stdout)");
    };

    CLI::App* solve = app.add_subcommand("solve", "solve a problem file and write a CSV table");
    add_common(solve);
    solve->add_option("--tol", o.tol, "Picard update tolerance");
    solve->add_flag("--const", o.force_const, "use the constant-coefficient route");
    solve->add_option("--canonical", canonical_path, "write the canonical set to this CSV");
    solve->add_flag("--cross-check", cross_check, "also run the other route and report divergence");

    CLI::App* check = app.add_subcommand("check", "compare a route against the collocation oracle");
    add_common(check);
    check->add_option("--tol", check_tol, "pass threshold on the max divergence");
    check->add_flag("--const", o.force_const, "use the constant-coefficient route");

    double alpha = 1.0;
    double beta = 1.0;
    double theta = 1.0;
    double from = 0.0;
    double to = 1.0;
    std::size_t n = 11;
    CLI::App* ml = app.add_subcommand("ml", "tabulate a three-parameter Mittag-Leffler function");
    ml->add_option("--alpha", alpha, "alpha > 0")->required();
    ml->add_option("--beta", beta, "beta")->required();
    ml->add_option("--theta", theta, "theta (default 1)");
    ml->add_option("--from", from, "first argument");
    ml->add_option("--to", to, "last argument");
    ml->add_option("--n", n, "number of points");
    ml->add_option("--out", out_path, "output path (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitValidation;
    }

    try {
        if (solve->parsed()) return cmd_solve(file, o, out_path, canonical_path, cross_check, out);
        if (check->parsed()) return cmd_check(file, o, check_tol, out_path, out);
        if (ml->parsed()) return cmd_ml(alpha, beta, theta, from, to, n, out_path, out);
    } catch (const std::exception& e) {
        report_error(err, e);
        return exit_code_for(e);
    }
    return kExitValidation;
}

}  // namespace prab::cli
