#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "diffinv/composite.hpp"
#include "diffinv/errors.hpp"
#include "diffinv/oracle.hpp"
#include "diffinv/physics.hpp"
#include "diffinv/tables.hpp"

namespace diffinv::cli {

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

constexpr const char* kFieldHeader = "T_days,H_minus_d_m,S_y,K_m_per_day";

std::string sig(double v, int digits) {
    if (std::isnan(v)) return "nan";
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*g", digits, v);
    return buf;
}

std::string fixed(double v, int decimals) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f", decimals, v);
    return buf;
}

std::string trim(std::string s) {
    const auto first = s.find_first_not_of(" \t\r\n");
    if (first == std::string::npos) return "";
    const auto last = s.find_last_not_of(" \t\r\n");
    return s.substr(first, last - first + 1);
}

double parse_double(const std::string& field, const std::string& where) {
    const std::string t = trim(field);
    double v = 0.0;
    const auto [p, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
    if (ec != std::errc() || p != t.data() + t.size()) throw DomainError(where + ": not a number: '" + t + "'");
    return v;
}

std::vector<std::string> split(const std::string& line, char sep) {
    std::vector<std::string> out;
    std::stringstream ss(line);
    std::string item;
    while (std::getline(ss, item, sep)) out.push_back(trim(item));
    if (!line.empty() && line.back() == sep) out.emplace_back();
    return out;
}

std::vector<tables::DrainageRecord> read_field_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot read " + path);
    std::string line;
    if (!std::getline(in, line) || trim(line) != kFieldHeader) {
        throw DomainError(path + ": header must be " + std::string(kFieldHeader));
    }
    std::vector<tables::DrainageRecord> rows;
    int lineno = 1;
    while (std::getline(in, line)) {
        ++lineno;
        if (trim(line).empty()) continue;
        const auto f = split(line, ',');
        const std::string where = path + ":" + std::to_string(lineno);
        if (f.size() != 4) throw DomainError(where + ": expected 4 fields");
        tables::DrainageRecord r;
        r.T = parse_double(f[0], where);
        r.H_minus_d = parse_double(f[1], where);
        r.S_y = parse_double(f[2], where);
        r.K = parse_double(f[3], where);
        rows.push_back(r);
    }
    if (rows.empty()) throw DomainError(path + ": no data rows");
    return rows;
}

// key=value lines; '#' starts a comment. Explicit flags win over file entries.
std::vector<std::string> merge_config(std::vector<std::string> args, const CLI::App& sub) {
    auto it = std::find_if(args.begin(), args.end(),
                           [](const std::string& a) { return a == "--config" || a.rfind("--config=", 0) == 0; });
    if (it == args.end()) return args;
    std::string path;
    if (*it == "--config") {
        if (std::next(it) == args.end()) throw UsageError("--config needs a path");
        path = *std::next(it);
        args.erase(it, std::next(it, 2));
    } else {
        path = it->substr(9);
        args.erase(it);
    }
    std::ifstream in(path);
    if (!in) throw UsageError("cannot read config " + path);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        line = trim(line.substr(0, line.find('#')));
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos) throw UsageError(path + ":" + std::to_string(lineno) + ": expected key=value");
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        const std::string flag = "--" + key;
        if (sub.get_option_no_throw(flag) == nullptr) {
            throw UsageError(path + ":" + std::to_string(lineno) + ": unknown key '" + key + "'");
        }
        const bool given = std::any_of(args.begin(), args.end(), [&](const std::string& a) {
            return a == flag || a.rfind(flag + "=", 0) == 0;
        });
        if (!given) {
            args.push_back(flag);
            args.push_back(value);
        }
    }
    return args;
}

struct Common {
    int digits = 6;
    double tol = 1e-12;
    std::string scheme = "perfect-match";

    contour::QuadratureSpec quad() const {
        contour::QuadratureSpec q;
        q.tol = tol;
        q.validate();
        return q;
    }
};

void add_common(CLI::App* sub, Common& c, bool with_scheme) {
    sub->add_option("--digits", c.digits, "Significant digits in the output")->check(CLI::Range(1, 17));
    sub->add_option("--tol", c.tol, "Absolute quadrature tolerance")->check(CLI::PositiveNumber);
    if (with_scheme) sub->add_option("--scheme", c.scheme, "Inversion scheme")->capture_default_str();
    sub->add_option("--config", "key=value file merged under explicit flags");
}

SchemeId scheme_of(const Common& c) {
    try {
        return parse_scheme(c.scheme);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
}

std::ostream& open_out(const std::string& path, std::ofstream& file, std::ostream& fallback) {
    if (path.empty() || path == "-") return fallback;
    file.open(path, std::ios::binary);
    if (!file) throw UsageError("cannot write " + path);
    return file;
}

struct DrainageFlags {
    double h0 = 0.0;
    double d = 0.0;
    std::optional<double> H, T, L, A, K, S_y;

    void add(CLI::App* sub, bool need_H) {
        sub->add_option("--h0", h0, "Initial water-table height above drain level, m")->required();
        sub->add_option("--d", d, "Drain-axis elevation above the impervious layer, m")->required();
        auto* oH = sub->add_option("--H", H, "Observed water-table height at the midpoint, m");
        if (need_H) oH->required();
        sub->add_option("--T", T, "Elapsed time, days");
        sub->add_option("--L", L, "Half drain spacing, m");
        auto* oA = sub->add_option("--A", A, "Diffusion coefficient, m^2/day");
        auto* oK = sub->add_option("--K", K, "Hydraulic conductivity, m/day");
        auto* oS = sub->add_option("--Sy", S_y, "Drainable porosity");
        oA->excludes(oK)->excludes(oS);
        oK->needs(oS);
        oS->needs(oK);
    }

    DrainageScenario scenario() const {
        DrainageScenario s;
        s.h0 = h0;
        s.d = d;
        s.H = H.value_or(0.0);
        s.T = T;
        s.L = L;
        if (A) {
            s.A = A;
        } else if (K && S_y) {
            s.A = diffusion_from_soil(*K, *S_y, d, h0);
        }
        return s;
    }
};

struct InfiltrationFlags {
    double theta0 = 0.0;
    double theta1 = 0.0;
    double L = 0.0;
    std::optional<double> Theta, T, D0;

    void add(CLI::App* sub) {
        sub->add_option("--theta0", theta0, "Initial moisture, cm^3/cm^3")->required();
        sub->add_option("--theta1", theta1, "Boundary moisture, cm^3/cm^3")->required();
        sub->add_option("--L", L, "Profile length, cm")->required();
        sub->add_option("--Theta", Theta, "Moisture measured at L/2, cm^3/cm^3");
        sub->add_option("--T", T, "Time, h");
        sub->add_option("--D0", D0, "Diffusivity, cm^2/h");
    }

    InfiltrationScenario scenario() const {
        InfiltrationScenario s;
        s.theta0 = theta0;
        s.theta1 = theta1;
        s.L = L;
        s.Theta = Theta;
        s.T = T;
        s.D0 = D0;
        return s;
    }
};

std::string column_header(std::string_view prefix) {
    std::string h;
    for (const auto id : tables::kColumns) {
        std::string n(scheme_name(id));
        std::replace(n.begin(), n.end(), '-', '_');
        h += "," + std::string(prefix) + n;
    }
    return h;
}

int run(const std::vector<std::string>& raw, std::ostream& out, std::ostream& err) {
    CLI::App app{"Parameter estimation for diffusion problems through the inverse of I(a) = c", "diffinv"};
    app.require_subcommand(1);
    app.set_version_flag("--version", "diffinv 0.1.0");

    Common common;

    // solve-a
    auto* solve = app.add_subcommand("solve-a", "Estimate a from c and report the reconstruction error");
    double c_value = 0.0;
    solve->add_option("--c", c_value, "Datum c in (0,1)")->required();
    add_common(solve, common, true);

    // forward
    auto* forward = app.add_subcommand("forward", "Evaluate the water table h(x,t) or the moisture theta(x,t)");
    std::string problem;
    double x = 0.0, t = 0.0;
    forward->add_option("--problem", problem, "drainage or infiltration")
        ->required()
        ->check(CLI::IsMember({"drainage", "infiltration"}));
    forward->add_option("--x", x, "Position")->required();
    forward->add_option("--t", t, "Time")->required();
    std::optional<double> f_h0, f_d, f_L, f_A, f_K, f_Sy, f_theta0, f_theta1, f_D0;
    forward->add_option("--h0", f_h0, "Drainage: initial height above drain level, m");
    forward->add_option("--d", f_d, "Drainage: drain-axis elevation, m");
    forward->add_option("--L", f_L, "Half spacing (m) or profile length (cm)");
    forward->add_option("--A", f_A, "Drainage: diffusion coefficient, m^2/day");
    forward->add_option("--K", f_K, "Drainage: hydraulic conductivity, m/day");
    forward->add_option("--Sy", f_Sy, "Drainage: drainable porosity");
    forward->add_option("--theta0", f_theta0, "Infiltration: initial moisture");
    forward->add_option("--theta1", f_theta1, "Infiltration: boundary moisture");
    forward->add_option("--D0", f_D0, "Infiltration: diffusivity, cm^2/h");
    add_common(forward, common, false);

    // inverse problems
    auto* spacing = app.add_subcommand("drain-spacing", "Drain spacing 2L from A, T and an observed height");
    DrainageFlags sp_flags;
    sp_flags.add(spacing, true);
    bool sp_closed = false;
    spacing->add_flag("--closed-form", sp_closed, "Use the Glover-Dumm closed form");
    add_common(spacing, common, true);

    auto* dtime = app.add_subcommand("drain-time", "Drainage time T from A, L and an observed height");
    DrainageFlags dt_flags;
    dt_flags.add(dtime, true);
    std::optional<double> dt_spacing;
    bool dt_closed = false;
    dtime->add_option("--spacing", dt_spacing, "Drain spacing 2L, m (alternative to --L)");
    dtime->add_flag("--closed-form", dt_closed, "Use the Glover-Dumm closed form");
    add_common(dtime, common, true);

    auto* diff = app.add_subcommand("diffusivity", "Diffusivity D0 from a moisture reading at L/2");
    InfiltrationFlags df_flags;
    df_flags.add(diff);
    bool df_closed = false;
    diff->add_flag("--closed-form", df_closed, "Use the first-order closed form");
    add_common(diff, common, true);

    // table
    auto* table = app.add_subcommand("table", "Reproduce a reference table as CSV");
    int table_id = 0;
    std::string data_path;
    double tb_h0 = tables::kFieldH0;
    std::optional<double> tb_d;
    std::vector<double> tb_spacings;
    table->add_option("--id", table_id, "1: Fourier thresholds, 2: spacing, 3: drain time, 4: diffusivity")
        ->required()
        ->check(CLI::Range(1, 4));
    table->add_option("--data", data_path, "Field CSV for tables 2 and 3 (" + std::string(kFieldHeader) + ")");
    table->add_option("--h0", tb_h0, "h0 for --data, m")->capture_default_str();
    table->add_option("--d", tb_d, "Drain-axis elevation for --data, m");
    table->add_option("--spacings", tb_spacings, "Spacings 2L for table 3 with --data")->delimiter(',');
    add_common(table, common, false);

    // error-curve
    auto* curve = app.add_subcommand("error-curve", "Relative error of a scheme over a uniform grid of c");
    int grid_n = 999;
    double grid_lo = 0.001, grid_hi = 0.999;
    std::string curve_out;
    curve->add_option("--grid", grid_n, "Number of grid points")->capture_default_str()->check(CLI::PositiveNumber);
    curve->add_option("--lo", grid_lo, "Smallest c")->capture_default_str();
    curve->add_option("--hi", grid_hi, "Largest c")->capture_default_str();
    curve->add_option("--out", curve_out, "Output CSV (default stdout)");
    add_common(curve, common, true);

    // simulate
    auto* sim = app.add_subcommand("simulate", "Synthetic moisture readings for random diffusivities");
    std::uint64_t seed = 0;
    int sim_n = 9;
    std::vector<double> times;
    std::string sim_out;
    sim->add_option("--seed", seed, "Generator seed")->required();
    sim->add_option("--n", sim_n, "Number of scenarios")->capture_default_str()->check(CLI::PositiveNumber);
    sim->add_option("--times", times, "Times in hours, cycled over the scenarios")->required()->delimiter(',');
    sim->add_option("--out", sim_out, "Output CSV (default stdout)");
    add_common(sim, common, false);

    std::vector<std::string> args = raw;
    if (!args.empty()) {
        if (auto* sub = app.get_subcommand_no_throw(args.front())) args = merge_config(std::move(args), *sub);
    }
    std::reverse(args.begin(), args.end());
    try {
        app.parse(args);
    } catch (const CLI::CallForHelp&) {
        out << (app.get_subcommands().empty() ? app.help() : app.get_subcommands().front()->help("diffinv"));
        return kExitOk;
    } catch (const CLI::CallForVersion&) {
        out << "diffinv 0.1.0\n";
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }

    const int dg = common.digits;
    const auto q = common.quad();

    if (solve->parsed()) {
        const SchemeId id = scheme_of(common);
        const double a = estimate_a(c_value, id, q);
        const auto rep = composite::relative_error(c_value, a);
        out << "scheme,c,a_estimate,c_reconstructed,re_percent\n";
        out << scheme_name(id) << ',' << sig(c_value, dg) << ',' << sig(a, dg) << ','
            << sig(rep.c_reconstructed, dg) << ',' << sig(rep.re_percent, dg) << '\n';
    } else if (forward->parsed()) {
        auto need = [](const std::optional<double>& v, const char* flag) {
            if (!v) throw UsageError(std::string(flag) + " is required for this problem");
            return *v;
        };
        if (problem == "drainage") {
            DrainageScenario s;
            s.h0 = need(f_h0, "--h0");
            s.d = need(f_d, "--d");
            s.L = need(f_L, "--L");
            if (f_A) {
                s.A = f_A;
            } else if (f_K && f_Sy) {
                s.A = diffusion_from_soil(*f_K, *f_Sy, s.d, s.h0);
            } else {
                throw UsageError("--A or both --K and --Sy are required");
            }
            out << "x,t,h\n" << sig(x, dg) << ',' << sig(t, dg) << ',' << sig(contour::eval_h(x, t, s, q), dg) << '\n';
        } else {
            InfiltrationScenario s;
            s.theta0 = need(f_theta0, "--theta0");
            s.theta1 = need(f_theta1, "--theta1");
            s.L = need(f_L, "--L");
            s.D0 = need(f_D0, "--D0");
            out << "x,t,theta\n"
                << sig(x, dg) << ',' << sig(t, dg) << ',' << sig(contour::eval_theta(x, t, s, q), dg) << '\n';
        }
    } else if (spacing->parsed()) {
        const auto s = sp_flags.scenario();
        const double c1 = physics::reduce_drainage(s);
        const double L = sp_closed ? physics::glover_dumm(physics::InverseProblem::DrainSpacing, s)
                                   : physics::solve_drain_spacing(s, scheme_of(common), q);
        out << "method,c1,L,spacing\n"
            << (sp_closed ? std::string("glover-dumm") : std::string(scheme_name(scheme_of(common)))) << ','
            << sig(c1, dg) << ',' << sig(L, dg) << ',' << sig(2.0 * L, dg) << '\n';
    } else if (dtime->parsed()) {
        auto s = dt_flags.scenario();
        if (dt_spacing) {
            if (s.L) throw UsageError("give either --L or --spacing");
            s.L = 0.5 * *dt_spacing;
        }
        const double c1 = physics::reduce_drainage(s);
        const double T = dt_closed ? physics::glover_dumm(physics::InverseProblem::DrainTime, s)
                                   : physics::solve_drain_time(s, scheme_of(common), q);
        out << "method,c1,T\n"
            << (dt_closed ? std::string("glover-dumm") : std::string(scheme_name(scheme_of(common)))) << ','
            << sig(c1, dg) << ',' << sig(T, dg) << '\n';
    } else if (diff->parsed()) {
        const auto s = df_flags.scenario();
        const double c2 = physics::reduce_infiltration(s);
        const double D0 = df_closed ? physics::glover_dumm(physics::InverseProblem::Diffusivity, s)
                                    : physics::solve_diffusivity(s, scheme_of(common), q);
        out << "method,c2,D0\n"
            << (df_closed ? std::string("closed-form") : std::string(scheme_name(scheme_of(common)))) << ','
            << sig(c2, dg) << ',' << sig(D0, dg) << '\n';
    } else if (table->parsed()) {
        std::vector<tables::DrainageRecord> records(tables::field_records().begin(), tables::field_records().end());
        std::vector<double> spacings(tables::field_spacings().begin(), tables::field_spacings().end());
        double h0 = tables::kFieldH0;
        if (!data_path.empty()) {
            if (table_id != 2 && table_id != 3) throw UsageError("--data applies to tables 2 and 3");
            if (!tb_d) throw UsageError("--data needs --d to derive A from the soil");
            records = read_field_csv(data_path);
            h0 = tb_h0;
            if (table_id == 3) {
                if (tb_spacings.size() != records.size()) {
                    throw UsageError("--spacings needs one value per data row");
                }
                spacings = tb_spacings;
            }
        } else if (!tb_spacings.empty() || tb_d) {
            throw UsageError("--d and --spacings apply only with --data");
        }
        switch (table_id) {
            case 1:
                out << "N,c_min,a_min\n";
                for (const auto& r : tables::threshold_table()) {
                    out << r.N << ',' << fixed(r.c_min, 3) << ',' << fixed(r.a_min, 3) << '\n';
                }
                break;
            case 2:
                out << "T_days,c1,spacing_true" << column_header("spacing_") << '\n';
                for (const auto& r : tables::spacing_table(records, h0, tb_d, q)) {
                    out << sig(r.T, 6) << ',' << fixed(r.c1, 5) << ',' << fixed(r.spacing_true, 4);
                    for (double v : r.spacing) out << ',' << fixed(v, 4);
                    out << '\n';
                }
                break;
            case 3:
                out << "spacing,T_true" << column_header("T_") << '\n';
                for (const auto& r : tables::time_table(records, spacings, h0, tb_d, q)) {
                    out << sig(r.spacing, 6) << ',' << fixed(r.T_true, 4);
                    for (double v : r.T) out << ',' << fixed(v, 4);
                    out << '\n';
                }
                break;
            default:
                out << "T_h,D0_true,Theta,c2" << column_header("D0_") << '\n';
                for (const auto& r : tables::diffusivity_table(tables::moisture_records(), q)) {
                    out << sig(r.T, 6) << ',' << fixed(r.D0_true, 5) << ',' << fixed(r.Theta, 6) << ','
                        << fixed(r.c2, 6);
                    for (double v : r.D0) out << ',' << fixed(v, 5);
                    out << '\n';
                }
                break;
        }
    } else if (curve->parsed()) {
        const SchemeId id = scheme_of(common);
        const auto grid = oracle::uniform_grid(grid_n, grid_lo, grid_hi);
        const auto reports = oracle::error_sweep(id, grid, q);
        std::ofstream file;
        std::ostream& o = open_out(curve_out, file, out);
        o << "c,a_estimate,c_reconstructed,re_percent\n";
        int failed = 0;
        for (const auto& r : reports) {
            if (!r.ok()) ++failed;
            o << sig(r.c_target, dg) << ',' << sig(r.a_estimate, dg) << ',' << sig(r.c_reconstructed, dg) << ','
              << sig(r.re_percent, dg) << '\n';
        }
        if (failed > 0) err << "warning: " << failed << " grid point(s) had no estimate (written as nan)\n";
    } else if (sim->parsed()) {
        const auto scenarios = physics::simulate_moisture(seed, sim_n, times, q);
        std::ofstream file;
        std::ostream& o = open_out(sim_out, file, out);
        o << "T_h,D0,theta0,theta1,L_cm,Theta\n";
        for (const auto& s : scenarios) {
            o << sig(*s.T, dg) << ',' << sig(*s.D0, dg) << ',' << sig(s.theta0, dg) << ',' << sig(s.theta1, dg)
              << ',' << sig(s.L, dg) << ',' << sig(*s.Theta, dg) << '\n';
        }
    }
    return kExitOk;
}

}  // namespace

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    try {
        return run(args, out, err);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const ToleranceError& e) {
        err << "tolerance error: " << e.what() << "\n";
        return kExitTolerance;
    } catch (const DomainError& e) {
        err << "domain error: " << e.what() << "\n";
        return kExitDomain;
    }
}

}  // namespace diffinv::cli
