#include "knudsen/cli.hpp"

#include "knudsen/boundary_solver.hpp"
#include "knudsen/errors.hpp"
#include "knudsen/layer_profiles.hpp"
#include "knudsen/verification.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <ostream>
#include <sstream>

namespace knudsen {

using nlohmann::json;

const std::vector<double>& table_chis() {
    static const std::vector<double> chis = {0.1, 0.3, 0.5, 0.6, 0.7, 0.9, 1.0};
    return chis;
}

namespace {

enum class Format { Text, Json };

struct RunConfig {
    int order = 0;
    double chi = 1.0;
    double kn = default_knudsen();
    double pr = 1.0;
    double flux = 1.0;
    double y_min = -1.0;
    double y_max = -1.0;
    int samples = 400;
    GridSpacing spacing = GridSpacing::Geometric;
    Format format = Format::Text;
    std::string output;
    std::string problem = "temperature";
    int k_max = 6;
    VerifyLevel level = VerifyLevel::Quick;
};

std::string num(double v, int digits = 17) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*g", digits, v);
    return buf;
}

// Fixed significant digits, trailing zeros kept.
std::string sig(double v, int digits) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%#.*g", digits, v);
    return buf;
}

json finite_or_null(double v) { return std::isfinite(v) ? json(v) : json(nullptr); }

json to_json(const Eigen::VectorXd& v) {
    json a = json::array();
    for (Eigen::Index i = 0; i < v.size(); ++i) {
        a.push_back(v(i));
    }
    return a;
}

void text_header(std::ostream& os, const std::string& command, const std::map<std::string, std::string>& params,
                 const std::vector<std::string>& columns) {
    os << "# knudsen " << command;
    for (const auto& [k, v] : params) {
        os << ' ' << k << '=' << v;
    }
    os << "\n#";
    for (const auto& c : columns) {
        os << ' ' << c;
    }
    os << '\n';
}

void text_row(std::ostream& os, const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
        os << (i ? " " : "") << cells[i];
    }
    os << '\n';
}

void text_vector(std::ostream& os, const std::string& name, const Eigen::VectorXd& v) {
    os << name;
    for (Eigen::Index i = 0; i < v.size(); ++i) {
        os << ' ' << num(v(i));
    }
    os << '\n';
}

std::map<std::string, std::string> base_params(const RunConfig& c) {
    return {{"M", std::to_string(c.order)}, {"chi", num(c.chi)}, {"Kn", num(c.kn)}, {"Pr", num(c.pr)},
            {"flux", num(c.flux)}};
}

json base_params_json(const RunConfig& c) {
    return {{"M", c.order}, {"chi", c.chi}, {"Kn", c.kn}, {"Pr", c.pr}, {"flux", c.flux}};
}

void emit_temperature(const RunConfig& c, std::ostream& os) {
    const TemperatureLayerSolution sol = temperature_solution(c.order, c.chi, c.kn, c.pr, c.flux, 0.0);
    const double zeta = jump_coefficient(sol);
    if (c.format == Format::Json) {
        json j = {{"command", "temperature-jump"},
                  {"parameters", base_params_json(c)},
                  {"zeta", zeta},
                  {"theta0", sol.theta0},
                  {"c0", sol.c0},
                  {"t0_wall", sol.t0_wall},
                  {"lambda", to_json(sol.lambda)},
                  {"r_tilde", to_json(sol.r_tilde)},
                  {"c_tilde", to_json(sol.c_tilde)}};
        os << j.dump(2) << '\n';
        return;
    }
    text_header(os, "temperature-jump", base_params(c), {"quantity", "value..."});
    text_row(os, {"zeta", num(zeta)});
    text_row(os, {"theta0", num(sol.theta0)});
    text_row(os, {"c0", num(sol.c0)});
    text_row(os, {"t0_wall", num(sol.t0_wall)});
    text_vector(os, "lambda", sol.lambda);
    text_vector(os, "r_tilde", sol.r_tilde);
    text_vector(os, "c_tilde", sol.c_tilde);
}

void emit_kramers(const RunConfig& c, std::ostream& os) {
    const VelocityLayerSolution sol = velocity_solution(c.order, c.chi, c.kn, c.pr, c.flux, 0.0);
    const double zeta_v = viscous_slip_coefficient(sol);
    if (c.format == Format::Json) {
        json j = {{"command", "kramers"},
                  {"parameters", base_params_json(c)},
                  {"slip_coefficient", zeta_v},
                  {"u1_0", sol.u1_0},
                  {"c0k", sol.c0k},
                  {"lambda", to_json(sol.lambda)},
                  {"amplitudes", to_json(sol.amplitudes)}};
        os << j.dump(2) << '\n';
        return;
    }
    text_header(os, "kramers", base_params(c), {"quantity", "value..."});
    text_row(os, {"slip_coefficient", num(zeta_v)});
    text_row(os, {"u1_0", num(sol.u1_0)});
    text_row(os, {"c0k", num(sol.c0k)});
    text_vector(os, "lambda", sol.lambda);
    text_vector(os, "amplitudes", sol.amplitudes);
}

void emit_table1(const RunConfig& c, std::ostream& os) {
    const std::vector<int> orders = {3, 5, 7, 9, 11, 13};
    const std::vector<double>& chis = table_chis();
    std::vector<std::vector<double>> zeta(chis.size(), std::vector<double>(orders.size()));
    for (std::size_t m = 0; m < orders.size(); ++m) {
        const TemperatureJumpModel model(orders[m]);
        for (std::size_t k = 0; k < chis.size(); ++k) {
            zeta[k][m] = jump_coefficient(model.solve(chis[k], c.kn, c.pr, 1.0, 0.0));
        }
    }
    if (c.format == Format::Json) {
        json rows = json::array();
        for (std::size_t k = 0; k < chis.size(); ++k) {
            rows.push_back({{"chi", chis[k]}, {"zeta", zeta[k]}});
        }
        json j = {{"command", "table1"},
                  {"parameters", {{"Kn", c.kn}, {"Pr", c.pr}, {"q2", 1.0}, {"theta_wall", 0.0}}},
                  {"orders", orders},
                  {"rows", rows}};
        os << j.dump(2) << '\n';
        return;
    }
    std::vector<std::string> cols = {"chi"};
    for (int m : orders) {
        cols.push_back("M=" + std::to_string(m));
    }
    text_header(os, "table1", {{"Kn", num(c.kn)}, {"Pr", num(c.pr)}, {"q2", "1"}, {"theta_wall", "0"}}, cols);
    for (std::size_t k = 0; k < chis.size(); ++k) {
        std::vector<std::string> cells = {num(chis[k], 3)};
        for (double z : zeta[k]) {
            cells.push_back(sig(z, 5));
        }
        text_row(os, cells);
    }
}

void emit_table2(const RunConfig& c, std::ostream& os) {
    if (c.k_max < 6 || c.k_max > 8) {
        throw InputError("--kmax must lie in [6, 8]");
    }
    const std::vector<double>& chis = table_chis();
    std::vector<std::vector<ConvergenceOrder>> rows;
    for (int k = 6; k <= c.k_max; ++k) {
        rows.push_back(convergence_orders(chis, k, c.kn));
    }
    if (c.format == Format::Json) {
        json out = json::array();
        for (std::size_t r = 0; r < rows.size(); ++r) {
            json betas = json::array();
            json zetas = json::array();
            for (const ConvergenceOrder& co : rows[r]) {
                betas.push_back(finite_or_null(co.beta));
                zetas.push_back(co.zetas);
            }
            out.push_back({{"k", 6 + static_cast<int>(r)}, {"orders", rows[r].front().orders}, {"beta", betas},
                           {"zetas", zetas}});
        }
        json j = {{"command", "table2"}, {"parameters", {{"Kn", c.kn}, {"Pr", 1.0}}}, {"chi", chis}, {"rows", out}};
        os << j.dump(2) << '\n';
        return;
    }
    std::vector<std::string> cols = {"k"};
    for (double chi : chis) {
        cols.push_back("chi=" + num(chi, 3));
    }
    text_header(os, "table2", {{"Kn", num(c.kn)}, {"Pr", "1"}}, cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        std::vector<std::string> cells = {std::to_string(6 + r)};
        for (const ConvergenceOrder& co : rows[r]) {
            cells.push_back(co.degenerate ? "nan" : sig(co.beta, 4));
        }
        text_row(os, cells);
    }
}

void emit_sweep(const RunConfig& c, std::ostream& os) {
    if (c.samples < 1) {
        throw InputError("--samples must be positive");
    }
    const TemperatureJumpModel model(c.order);
    std::vector<double> chi(static_cast<std::size_t>(c.samples));
    std::vector<double> zeta(chi.size());
    for (std::size_t i = 0; i < chi.size(); ++i) {
        chi[i] = static_cast<double>(i + 1) / c.samples;
        zeta[i] = jump_coefficient(model.solve(chi[i], c.kn, c.pr, 1.0, 0.0));
    }
    if (c.format == Format::Json) {
        std::vector<double> bz(chi.size());
        std::vector<double> cz(chi.size());
        for (std::size_t i = 0; i < chi.size(); ++i) {
            bz[i] = accommodation_factor(chi[i]) * zeta[i];
            cz[i] = chi[i] / (2.0 - chi[i]) * zeta[i];
        }
        json j = {{"command", "sweep-chi"},
                  {"parameters", {{"M", c.order}, {"Kn", c.kn}, {"Pr", c.pr}}},
                  {"chi", chi},
                  {"zeta", zeta},
                  {"b_zeta", bz},
                  {"chi_over_2_minus_chi_zeta", cz},
                  {"chi_zero_limit", chi_zero_limit()}};
        os << j.dump(2) << '\n';
        return;
    }
    text_header(os, "sweep-chi", {{"M", std::to_string(c.order)}, {"Kn", num(c.kn)}, {"Pr", num(c.pr)}},
                {"chi", "zeta", "b_zeta", "chi_over_2_minus_chi_zeta"});
    for (std::size_t i = 0; i < chi.size(); ++i) {
        text_row(os, {num(chi[i]), num(zeta[i]), num(accommodation_factor(chi[i]) * zeta[i]),
                      num(chi[i] / (2.0 - chi[i]) * zeta[i])});
    }
}

std::vector<double> profile_grid(const RunConfig& c, double default_max) {
    const double y_min = c.y_min >= 0.0 ? c.y_min : (c.spacing == GridSpacing::Geometric ? 1e-3 : 0.0);
    const double y_max = c.y_max >= 0.0 ? c.y_max : default_max;
    return make_grid(y_min, y_max, c.samples, c.spacing);
}

void emit_profile(const RunConfig& c, std::ostream& os) {
    json j;
    std::map<std::string, std::string> params = base_params(c);
    params["problem"] = c.problem;
    if (c.problem == "temperature") {
        const TemperatureLayerSolution sol = temperature_solution(c.order, c.chi, c.kn, c.pr, c.flux, 0.0);
        const std::vector<double> y = profile_grid(c, 60.0 * sol.lambda(0) * sol.kn);
        std::vector<double> defect, tilde, kappa;
        for (double yy : y) {
            defect.push_back(temperature_defect(sol, yy));
            tilde.push_back(normalized_temperature(sol, yy));
            kappa.push_back(effective_conductivity(sol, yy).ratio);
        }
        if (c.format == Format::Json) {
            json kj = json::array();
            for (double k : kappa) {
                kj.push_back(finite_or_null(k));
            }
            json p = base_params_json(c);
            p["problem"] = c.problem;
            j = {{"command", "profile"}, {"parameters", p},     {"zeta", jump_coefficient(sol)},
                 {"lambda", to_json(sol.lambda)}, {"c_tilde", to_json(sol.c_tilde)}, {"y", y},
                 {"theta_d", defect}, {"theta_tilde", tilde}, {"kappa_ratio", kj}};
            os << j.dump(2) << '\n';
            return;
        }
        text_header(os, "profile", params, {"y", "theta_d", "theta_tilde", "kappa_ratio"});
        for (std::size_t i = 0; i < y.size(); ++i) {
            text_row(os, {num(y[i]), num(defect[i]), num(tilde[i]), num(kappa[i])});
        }
    } else if (c.problem == "kramers") {
        const VelocityLayerSolution sol = velocity_solution(c.order, c.chi, c.kn, c.pr, c.flux, 0.0);
        const std::vector<double> y = profile_grid(c, 60.0 * sol.lambda(0) * sol.kn);
        std::vector<double> u;
        for (double yy : y) {
            u.push_back(sol.velocity(yy));
        }
        if (c.format == Format::Json) {
            json p = base_params_json(c);
            p["problem"] = c.problem;
            j = {{"command", "profile"}, {"parameters", p}, {"slip_coefficient", viscous_slip_coefficient(sol)},
                 {"lambda", to_json(sol.lambda)}, {"amplitudes", to_json(sol.amplitudes)}, {"y", y}, {"u1", u}};
            os << j.dump(2) << '\n';
            return;
        }
        text_header(os, "profile", params, {"y", "u1"});
        for (std::size_t i = 0; i < y.size(); ++i) {
            text_row(os, {num(y[i]), num(u[i])});
        }
    } else {
        throw InputError("--problem must be 'temperature' or 'kramers'");
    }
}

bool emit_verify(const RunConfig& c, std::ostream& os) {
    const std::vector<CheckResult> checks = run_verification(c.level);
    bool ok = true;
    for (const CheckResult& r : checks) {
        ok = ok && r.passed;
    }
    if (c.format == Format::Json) {
        json arr = json::array();
        for (const CheckResult& r : checks) {
            arr.push_back({{"name", r.name}, {"passed", r.passed}, {"max_residual", r.max_residual},
                           {"tolerance", r.tolerance}});
        }
        json j = {{"command", "verify"},
                  {"level", c.level == VerifyLevel::Full ? "full" : "quick"},
                  {"passed", ok},
                  {"checks", arr}};
        os << j.dump(2) << '\n';
        return ok;
    }
    text_header(os, "verify", {{"level", c.level == VerifyLevel::Full ? "full" : "quick"}},
                {"status", "max_residual", "tolerance", "check"});
    for (const CheckResult& r : checks) {
        text_row(os, {r.passed ? "PASS" : "FAIL", num(r.max_residual, 3), num(r.tolerance, 3), r.name});
    }
    return ok;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Knudsen-layer solutions of linearized hyperbolic moment equations", "knudsen"};
    app.require_subcommand(1);
    RunConfig cfg;
    std::string format = "text";
    std::string spacing = "geometric";
    std::string level = "quick";

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));
        sub->add_option("--output", cfg.output, "Write output to this file instead of stdout");
    };
    auto add_physics = [&](CLI::App* sub, const char* flux_help) {
        sub->add_option("--order", cfg.order, "Moment order M");
        sub->add_option("--chi", cfg.chi, "Accommodation coefficient in (0, 1]");
        sub->add_option("--kn", cfg.kn, "Knudsen number");
        sub->add_option("--pr", cfg.pr, "Prandtl number");
        sub->add_option("--flux", cfg.flux, flux_help);
        add_common(sub);
    };

    CLI::App* temp = app.add_subcommand("temperature-jump", "Jump coefficient and layer data");
    add_physics(temp, "Normal heat flux q2");
    CLI::App* kram = app.add_subcommand("kramers", "Kramers problem slip data");
    add_physics(kram, "Shear stress sigma12");
    CLI::App* t1 = app.add_subcommand("table1", "Jump coefficients for M = 3..13");
    t1->add_option("--kn", cfg.kn, "Knudsen number");
    t1->add_option("--pr", cfg.pr, "Prandtl number");
    add_common(t1);
    CLI::App* t2 = app.add_subcommand("table2", "Convergence orders beta_k, k = 6..kmax");
    t2->add_option("--kmax", cfg.k_max, "Largest k (6..8)");
    add_common(t2);
    CLI::App* sweep = app.add_subcommand("sweep-chi", "Jump coefficient over chi = i/samples");
    sweep->add_option("--order", cfg.order, "Moment order M");
    sweep->add_option("--kn", cfg.kn, "Knudsen number");
    sweep->add_option("--pr", cfg.pr, "Prandtl number");
    sweep->add_option("--samples", cfg.samples, "Number of chi values");
    add_common(sweep);
    CLI::App* prof = app.add_subcommand("profile", "Sampled layer profile");
    prof->add_option("--problem", cfg.problem, "temperature or kramers")
        ->check(CLI::IsMember({"temperature", "kramers"}));
    prof->add_option("--order", cfg.order, "Moment order M (default 13 or 8)");
    prof->add_option("--chi", cfg.chi, "Accommodation coefficient in (0, 1]");
    prof->add_option("--kn", cfg.kn, "Knudsen number");
    prof->add_option("--pr", cfg.pr, "Prandtl number");
    prof->add_option("--flux", cfg.flux, "q2 or sigma12");
    prof->add_option("--ymin", cfg.y_min, "First sample point");
    prof->add_option("--ymax", cfg.y_max, "Last sample point (default 60 lambda1 Kn)");
    prof->add_option("--samples", cfg.samples, "Number of sample points");
    prof->add_option("--spacing", spacing, "linear or geometric")->check(CLI::IsMember({"linear", "geometric"}));
    add_common(prof);
    CLI::App* ver = app.add_subcommand("verify", "Run the oracle suites");
    ver->add_option("--level", level, "quick or full")->check(CLI::IsMember({"quick", "full"}));
    add_common(ver);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        std::ostringstream help;
        const int code = app.exit(e, help, help);
        (code == 0 ? out : err) << help.str();
        return code == 0 ? kExitSuccess : kExitUsage;
    }

    cfg.format = format == "json" ? Format::Json : Format::Text;
    cfg.spacing = spacing == "linear" ? GridSpacing::Linear : GridSpacing::Geometric;
    cfg.level = level == "full" ? VerifyLevel::Full : VerifyLevel::Quick;
    if (temp->parsed() && temp->count("--order") == 0) {
        cfg.order = 13;
    }
    if (kram->parsed() && kram->count("--order") == 0) {
        cfg.order = 8;
    }
    if (prof->parsed() && prof->count("--order") == 0) {
        cfg.order = cfg.problem == "kramers" ? 8 : 13;
    }
    if (sweep->parsed() && sweep->count("--order") == 0) {
        cfg.order = 13;
    }
    if (sweep->parsed() && sweep->count("--samples") == 0) {
        cfg.samples = 100;
    }

    std::ostringstream buffer;
    int status = kExitSuccess;
    try {
        if (temp->parsed()) {
            emit_temperature(cfg, buffer);
        } else if (kram->parsed()) {
            emit_kramers(cfg, buffer);
        } else if (t1->parsed()) {
            emit_table1(cfg, buffer);
        } else if (t2->parsed()) {
            emit_table2(cfg, buffer);
        } else if (sweep->parsed()) {
            emit_sweep(cfg, buffer);
        } else if (prof->parsed()) {
            emit_profile(cfg, buffer);
        } else if (ver->parsed()) {
            status = emit_verify(cfg, buffer) ? kExitSuccess : kExitVerificationFailed;
        }
    } catch (const InputError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "numerical failure: " << e.what() << '\n';
        return kExitNumerical;
    }

    if (cfg.output.empty()) {
        out << buffer.str();
    } else {
        std::ofstream file(cfg.output);
        if (!file) {
            err << "error: cannot open output file '" << cfg.output << "'\n";
            return kExitUsage;
        }
        file << buffer.str();
        if (!file) {
            err << "error: failed writing output file '" << cfg.output << "'\n";
            return kExitUsage;
        }
    }
    return status;
}

} // namespace knudsen
