#include "haarbvp/cli.hpp"

#include <charconv>
#include <cmath>
#include <iomanip>
#include <sstream>

#include "haarbvp/newton.hpp"
#include "haarbvp/qlm.hpp"
#include "haarbvp/refdata.hpp"

namespace haarbvp {

std::string format_double(double v, int precision) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general,
                                   precision);
    return std::string(buf, res.ptr);
}

namespace {

EmdenFowlerProblem example_problem(int id) {
    switch (id) {
        case 1: return {-1.0, -0.5, 1.5, BoundaryKind::Dirichlet};
        case 2: return {-1.0, -1.0, 2.0, BoundaryKind::Dirichlet};
        case 3: return {-1.0, -1.25, 2.25, BoundaryKind::Dirichlet};
        case 4: return {-1.0, -0.5, 1.5, BoundaryKind::Robin};
        default: throw ConfigError("example must be 1..4, got " + std::to_string(id));
    }
}

std::vector<double> eval_grid(const RunConfig& cfg) {
    if (cfg.points.empty()) return report_grid();
    for (double t : cfg.points)
        if (!(t >= 0.0 && t <= 1.0))
            throw ConfigError("evaluation points must lie in [0, 1]");
    return cfg.points;
}

void validate_common(const RunConfig& cfg) {
    if (cfg.method != "qlm" && cfg.method != "newton")
        throw ConfigError("method must be 'qlm' or 'newton', got '" + cfg.method + "'");
    if (cfg.format != "table" && cfg.format != "csv")
        throw ConfigError("format must be 'table' or 'csv', got '" + cfg.format + "'");
    if (cfg.J < 0 || cfg.J > ResolutionConfig::kMaxLevel)
        throw ConfigError("J must be in [0, " + std::to_string(ResolutionConfig::kMaxLevel) +
                          "], got " + std::to_string(cfg.J));
    if (cfg.iters && *cfg.iters < 1) throw ConfigError("iters must be >= 1");
    if (!(cfg.tol > 0.0)) throw ConfigError("tol must be positive");
    if (cfg.guess_space && *cfg.guess_space != "values" && *cfg.guess_space != "coefficients")
        throw ConfigError("guess space must be 'values' or 'coefficients'");
}

SolutionGrid run_solver(const RunConfig& cfg, const EmdenFowlerProblem& problem,
                        const std::vector<double>& points, int default_qlm_iters) {
    const ResolutionConfig config(cfg.J);
    if (cfg.method == "qlm") {
        if (problem.bc == BoundaryKind::Robin)
            throw ConfigError("the qlm method handles the Dirichlet case only");
        QlmSettings settings;
        settings.max_iter = cfg.iters.value_or(default_qlm_iters);
        settings.tol = cfg.tol;
        const std::string space = cfg.guess_space.value_or("values");
        const double g = cfg.guess.value_or(0.0);
        if (space == "values") {
            settings.init_guess.assign(config.n, g);
        } else {
            // Constant coefficient vector, mapped to its collocation values.
            const HaarSystem system = build_system(config);
            settings.init_guess.resize(config.n);
            for (int c = 0; c < config.n; ++c) {
                const double t = system.colloc[c];
                double acc = 1.0 - t;
                for (int i = 0; i < config.n; ++i)
                    acc += g * (system.P2(i, c) - t * system.p2_at_1[i]);
                settings.init_guess[c] = acc;
            }
        }
        return solve_qlm(problem, config, settings, points);
    }
    NewtonSettings settings;
    settings.max_iter = cfg.iters.value_or(50);
    settings.tol = cfg.tol;
    const std::string space = cfg.guess_space.value_or("coefficients");
    const double g = cfg.guess.value_or(1.0);
    if (space == "coefficients") {
        settings.init_coeffs.assign(config.n, g);
    } else {
        settings.init_coeffs = coeffs_from_value_guess(g, problem, build_system(config));
    }
    return solve_newton(problem, config, settings, points);
}

void emit_table(const SolutionGrid& sol, std::ostream& out) {
    out << std::setw(10) << "t" << std::setw(14) << "y" << '\n';
    for (size_t i = 0; i < sol.eval_points.size(); ++i)
        out << std::setw(10) << format_double(sol.eval_points[i], 6) << std::setw(14)
            << format_double(sol.y[i], 6) << '\n';
    out << "iterations: " << sol.iterations << '\n';
    out << "y'(0): " << format_double(sol.dy0, 6) << '\n';
}

void emit_csv(const SolutionGrid& sol, const EmdenFowlerProblem& problem, bool with_residual,
              std::ostream& out) {
    if (!with_residual) {
        out << "t,y\n";
        for (size_t i = 0; i < sol.eval_points.size(); ++i)
            out << format_double(sol.eval_points[i], 17) << ','
                << format_double(sol.y[i], 17) << '\n';
        return;
    }
    out << "t,y,R\n";
    double sup = 0.0;
    for (size_t i = 0; i < sol.eval_points.size(); ++i) {
        const double t = sol.eval_points[i];
        out << format_double(t, 17) << ',' << format_double(sol.y[i], 17) << ',';
        if (t > 0.0) {
            const PointValues p = evaluate_solution(sol.coefficients, sol.dy0, problem.bc, t);
            const double r = ode_residual(t, p.y, p.ypp, problem);
            if (std::abs(r) > sup) sup = std::abs(r);
            out << format_double(r, 17);
        }
        out << '\n';
    }
    out << "inf,," << format_double(sup, 17) << '\n';
}

void emit_comparison(const ComparisonReport& report, const ReferenceTable& ref,
                     const SolutionGrid& sol, std::ostream& out) {
    out << "comparison vs reference (example " << ref.example_id << ", " << ref.method;
    if (ref.J) out << ", J=" << *ref.J;
    out << ")\n";
    out << std::setw(10) << "t" << std::setw(14) << "computed" << std::setw(14) << "reference"
        << std::setw(12) << "|diff|" << '\n';
    for (size_t i = 0; i < ref.t.size(); ++i)
        out << std::setw(10) << format_double(ref.t[i], 6) << std::setw(14)
            << format_double(sol.y[i], 6) << std::setw(14) << ref.value_texts[i]
            << std::setw(12) << format_double(report.diffs[i], 3) << '\n';
    out << "max |diff| = " << format_double(report.max_diff, 3)
        << ", atol = " << format_double(report.atol, 3) << " -> "
        << (report.pass ? "PASS" : "FAIL") << '\n';
}

void warn_regime(const EmdenFowlerProblem& problem, std::ostream& err) {
    if (const auto msg = regime_warning(problem)) err << "warning: " << *msg << '\n';
}

}  // namespace

ResolvedProblem resolve_problem(const RunConfig& cfg) {
    const bool has_custom = cfg.sigma || cfg.gamma || cfg.beta || cfg.bc_name;
    if (cfg.example && has_custom)
        throw ConfigError("give either an example shortcut or explicit parameters, not both");
    if (cfg.example) return {example_problem(*cfg.example), cfg.example};
    if (!(cfg.sigma && cfg.gamma && cfg.beta && cfg.bc_name))
        throw ConfigError("custom problems need sigma, gamma, beta and bc");
    BoundaryKind bc;
    if (*cfg.bc_name == "dirichlet") bc = BoundaryKind::Dirichlet;
    else if (*cfg.bc_name == "robin") bc = BoundaryKind::Robin;
    else throw ConfigError("bc must be 'dirichlet' or 'robin', got '" + *cfg.bc_name + "'");
    return {{*cfg.sigma, *cfg.gamma, *cfg.beta, bc}, std::nullopt};
}

int cmd_solve(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    validate_common(cfg);
    const ResolvedProblem resolved = resolve_problem(cfg);
    const std::vector<double> points = eval_grid(cfg);
    if (cfg.check_reference && !resolved.example)
        throw ConfigError("reference comparison needs an example shortcut");
    warn_regime(resolved.problem, err);

    SolutionGrid sol;
    try {
        sol = run_solver(cfg, resolved.problem, points, 50);
    } catch (const ConfigError&) {
        throw;
    } catch (const Error& e) {
        err << "solver failure: " << e.what() << '\n';
        return kExitSolverFailure;
    }

    if (cfg.format == "csv") {
        emit_csv(sol, resolved.problem, cfg.residual, out);
    } else {
        emit_table(sol, out);
        if (cfg.residual) {
            out << "R_inf (evaluation grid): "
                << format_double(residual_sup_at(sol, resolved.problem, points), 6) << '\n';
            const HaarSystem system = build_system(ResolutionConfig(cfg.J));
            out << "R_inf (collocation): "
                << format_double(residual_norm(sol, resolved.problem, system), 6) << '\n';
        }
    }

    int code = kExitOk;
    if (cfg.check_reference) {
        const ReferenceData data = ReferenceData::load();
        const ReferenceTable ref = data.table(*resolved.example, cfg.method, cfg.J);
        const ComparisonReport report = compare(sol, ref, cfg.atol);
        emit_comparison(report, ref, sol, cfg.format == "csv" ? err : out);
        if (!report.pass) code = kExitComparisonFailure;
    }
    return code;
}

int cmd_convergence(const RunConfig& cfg, const std::vector<int>& levels, std::ostream& out,
                    std::ostream& err) {
    validate_common(cfg);
    if (levels.size() < 2) throw ConfigError("a refinement study needs at least 2 levels");
    for (int J : levels)
        if (J < 0 || J > ResolutionConfig::kMaxLevel)
            throw ConfigError("J must be in [0, " +
                              std::to_string(ResolutionConfig::kMaxLevel) + "], got " +
                              std::to_string(J));
    const ResolvedProblem resolved = resolve_problem(cfg);
    const std::vector<double> points = eval_grid(cfg);
    warn_regime(resolved.problem, err);

    out << "J,t,y,delta,R_inf\n";
    bool any_failed = false;
    std::vector<double> previous;
    for (int J : levels) {
        RunConfig level_cfg = cfg;
        level_cfg.J = J;
        SolutionGrid sol;
        try {
            sol = run_solver(level_cfg, resolved.problem, points, 50);
        } catch (const Error& e) {
            err << "level J=" << J << " failed: " << e.what() << '\n';
            any_failed = true;
            continue;
        }
        const std::string rinf =
            sol.residual_sup ? format_double(*sol.residual_sup, 17) : std::string();
        for (size_t i = 0; i < points.size(); ++i) {
            out << J << ',' << format_double(points[i], 17) << ','
                << format_double(sol.y[i], 17) << ',';
            if (!previous.empty()) out << format_double(std::abs(sol.y[i] - previous[i]), 17);
            out << ',' << rinf << '\n';
        }
        previous = sol.y;
    }
    return any_failed ? kExitSolverFailure : kExitOk;
}

int cmd_compare(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    validate_common(cfg);
    if (!cfg.example) throw ConfigError("compare needs an example shortcut");
    const ResolvedProblem resolved = resolve_problem(cfg);
    warn_regime(resolved.problem, err);

    const ReferenceData data = ReferenceData::load();
    const ReferenceTable ref = data.table(*cfg.example, cfg.method, cfg.J);

    // Published qlm columns follow the fixed three-pass protocol; newton
    // columns are converged solves.
    SolutionGrid sol;
    try {
        sol = run_solver(cfg, resolved.problem, ref.t, cfg.method == "qlm" ? 3 : 50);
    } catch (const ConfigError&) {
        throw;
    } catch (const Error& e) {
        err << "solver failure: " << e.what() << '\n';
        return kExitSolverFailure;
    }

    const ComparisonReport report = compare(sol, ref, cfg.atol);
    emit_comparison(report, ref, sol, out);
    return report.pass ? kExitOk : kExitComparisonFailure;
}

}  // namespace haarbvp
