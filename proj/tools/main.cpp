// platelab CLI: characteristic roots, decay verification runs, analytic
// bound oracles, and regime reports, all as CSV.
//
// exit codes: 0 = all checks passed, 1 = a check failed (or a norm
// computation did not converge), 2 = usage/config error.

#include <cmath>
#include <complex>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "platelab/csv.hpp"
#include "platelab/data.hpp"
#include "platelab/decay.hpp"
#include "platelab/oracles.hpp"
#include "platelab/profiles.hpp"
#include "platelab/quadrature.hpp"
#include "platelab/symbol.hpp"

namespace {

using namespace platelab;

struct OutStream {
    std::ofstream file;
    std::ostream* os = &std::cout;
    explicit OutStream(const std::string& path) {
        if (!path.empty()) {
            file.open(path);
            if (!file)
                throw std::invalid_argument("cannot open output file: " + path);
            os = &file;
        }
    }
    std::ostream& get() { return *os; }
};

const char* branch_label(Branch b) {
    switch (b) {
        case Branch::Overdamped: return "overdamped";
        case Branch::Critical: return "critical";
        case Branch::Oscillatory: default: return "oscillatory";
    }
}

double parse_double_strict(const std::string& s) {
    size_t pos = 0;
    double v;
    try {
        v = std::stod(s, &pos);
    } catch (const std::exception&) {
        throw std::invalid_argument("not a number: " + s);
    }
    if (pos != s.size()) throw std::invalid_argument("not a number: " + s);
    return v;
}

// "0.5" | "0.1,0.5,2" | "a:b:step"
std::vector<double> parse_r_spec(const std::string& spec) {
    std::vector<double> rs;
    if (spec.find(':') != std::string::npos) {
        auto c1 = spec.find(':');
        auto c2 = spec.find(':', c1 + 1);
        if (c2 == std::string::npos)
            throw std::invalid_argument("range must be lo:hi:step, got " + spec);
        double lo = parse_double_strict(spec.substr(0, c1));
        double hi = parse_double_strict(spec.substr(c1 + 1, c2 - c1 - 1));
        double step = parse_double_strict(spec.substr(c2 + 1));
        if (!(step > 0.0) || hi < lo)
            throw std::invalid_argument("range must be lo:hi:step with step > 0");
        for (double r = lo; r <= hi * (1.0 + 1e-12) + 1e-300; r += step)
            rs.push_back(r);
        return rs;
    }
    size_t start = 0;
    while (start <= spec.size()) {
        auto comma = spec.find(',', start);
        auto piece = spec.substr(
            start, comma == std::string::npos ? std::string::npos : comma - start);
        if (piece.empty())
            throw std::invalid_argument("malformed radius list: " + spec);
        rs.push_back(parse_double_strict(piece));
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    if (rs.empty()) throw std::invalid_argument("empty radius list");
    return rs;
}

// ---------------------------------------------------------------- roots --

struct RootsOpts {
    std::string r_spec = "0:2:0.05";
    bool constants = false;
    std::string out;
};

int cmd_roots(const RootsOpts& o) {
    OutStream out(o.out);
    std::ostream& os = out.get();
    if (o.constants) {
        const BranchConstants& bc = branch_constants();
        auto residual = [](double z, double target) {
            double a = 1.0 + z * z;
            return 4.0 * z * z * a * a - target;
        };
        os << "name,value,residual\n";
        CsvRow(os).col("zeta").col(bc.zeta).col(residual(bc.zeta, 1.0));
        CsvRow(os).col("delta").col(bc.delta).col(residual(bc.delta, 0.5));
        CsvRow(os).col("critical_band_tol").col(bc.critical_band_tol).col(0.0);
        return 0;
    }
    std::vector<double> rs = parse_r_spec(o.r_spec);
    os << "r,branch,discriminant,lambda1_re,lambda1_im,lambda2_re,lambda2_im\n";
    for (double r : rs) {
        ModeState m = characteristic_roots(r);
        CsvRow(os)
            .col(m.r)
            .col(branch_label(m.branch))
            .col(m.discriminant)
            .col(m.lambda1.real())
            .col(m.lambda1.imag())
            .col(m.lambda2.real())
            .col(m.lambda2.imag());
    }
    return 0;
}

// --------------------------------------------------------------- verify --

struct VerifyOpts {
    int n = 3;
    double l = 2.0;
    std::string data = "edge";
    std::string region = "full";
    double tol = 1e-8;
    double slope_tol = 0.15;
    double eta_floor = 0.05;
    double t_max = 0.0; // 0 -> regime default
    double max_evals = 5e7;
    std::string out;
};

void print_check(bool pass, const std::string& what) {
    std::cerr << (pass ? "PASS " : "FAIL ") << what << "\n";
}

int cmd_verify(const VerifyOpts& o) {
    Regime reg = classify_regime(o.n, o.l);
    if (!reg.valid) {
        std::cerr << "error: " << reg.reason << "\n";
        return 2;
    }
    DataPair pair = make_pair(o.data, o.n, o.l);
    long long budget = (long long)std::llround(o.max_evals);
    OutStream out(o.out);
    std::ostream& os = out.get();
    bool pass = true;

    std::cerr << "regime: " << band_name(reg.band) << "; profile "
              << profile_name(reg.profile) << "; predicted residual exponent "
              << reg.residual_exponent << ", solution exponent "
              << reg.solution_exponent << "\n"
              << "data: u1=" << pair.u1.label << " u0=" << pair.u0.label
              << " (n=" << o.n << ", l=" << o.l << ")\n";

    if (o.region == "full") {
        double tmax = o.t_max > 0.0
                          ? o.t_max
                          : (reg.profile == ProfileKind::WaveLike ? 1e3 : 1e4);
        std::vector<double> times = default_time_grid(tmax);
        DecaySeries res = residual_series(pair, reg.profile, Zone::Full, times,
                                          reg.residual_exponent, o.tol, budget);
        DecaySeries sol = solution_norm_series(pair, Zone::Full, times,
                                               reg.solution_exponent, o.tol,
                                               budget);
        write_series_csv(os, res, true);
        write_series_csv(os, sol, false);

        bool res_ok =
            res.fit.ok && res.fit.slope <= reg.residual_exponent + o.slope_tol;
        bool sol_ok = sol.fit.ok && std::abs(sol.fit.slope -
                                             reg.solution_exponent) <=
                                        o.slope_tol;
        char buf[160];
        std::snprintf(buf, sizeof buf,
                      "residual slope %.4f vs predicted %.4g (one-sided, tol "
                      "+%.2g, r2=%.4f)",
                      res.fit.slope, reg.residual_exponent, o.slope_tol,
                      res.fit.r2);
        print_check(res_ok, buf);
        std::snprintf(buf, sizeof buf,
                      "solution slope %.4f vs predicted %.4g (two-sided, tol "
                      "%.2g, r2=%.4f)",
                      sol.fit.slope, reg.solution_exponent, o.slope_tol,
                      sol.fit.r2);
        print_check(sol_ok, buf);
        pass = res_ok && sol_ok;
    } else if (o.region == "high") {
        double pred = -0.5 * (o.l + 3.0);
        std::vector<double> times =
            default_time_grid(o.t_max > 0.0 ? o.t_max : 1e3);
        DecaySeries res = residual_series(pair, ProfileKind::WaveLike,
                                          Zone::High, times, pred, o.tol,
                                          budget);
        write_series_csv(os, res, true);
        bool ok = res.fit.ok && res.fit.slope <= pred + o.slope_tol;
        char buf[160];
        std::snprintf(buf, sizeof buf,
                      "high-frequency residual slope %.4f vs predicted %.4g "
                      "(one-sided, tol +%.2g, r2=%.4f)",
                      res.fit.slope, pred, o.slope_tol, res.fit.r2);
        print_check(ok, buf);
        pass = ok;
    } else if (o.region == "low") {
        double pred = -0.25 * (o.n + 2.0);
        std::vector<double> times =
            default_time_grid(o.t_max > 0.0 ? o.t_max : 1e4);
        DecaySeries res = residual_series(pair, ProfileKind::HeatLike,
                                          Zone::Low, times, pred, o.tol,
                                          budget);
        write_series_csv(os, res, true);
        bool ok = res.fit.ok && res.fit.slope <= pred + o.slope_tol;
        char buf[160];
        std::snprintf(buf, sizeof buf,
                      "low-frequency residual slope %.4f vs predicted %.4g "
                      "(one-sided, tol +%.2g, r2=%.4f)",
                      res.fit.slope, pred, o.slope_tol, res.fit.r2);
        print_check(ok, buf);
        pass = ok;
    } else if (o.region == "mid") {
        MidRate m = mid_region_rate(pair, {}, 1e-10, budget);
        os << "t,norm,region,eta,eta_se,r2\n";
        for (size_t i = 0; i < m.times.size(); ++i)
            CsvRow(os)
                .col(m.times[i])
                .col(m.norms[i])
                .col("mid")
                .col(m.eta)
                .col(m.se)
                .col(m.r2);
        bool ok = m.eta >= o.eta_floor && m.se <= 0.05 * m.eta;
        char buf[160];
        std::snprintf(buf, sizeof buf,
                      "mid-region exponential rate eta=%.5f (se %.2f%%, floor "
                      "%.3g, r2=%.4f)",
                      m.eta, 100.0 * m.se / std::max(m.eta, 1e-300),
                      o.eta_floor, m.r2);
        print_check(ok, buf);
        pass = ok;
    } else {
        throw std::invalid_argument("region must be one of low|mid|high|full");
    }
    return pass ? 0 : 1;
}

// --------------------------------------------------------------- oracle --

struct OracleOpts {
    std::string lemma = "all";
    double l = -1.0;
    double t = 0.0;
    std::string out;
};

int cmd_oracle(const OracleOpts& o) {
    std::vector<OracleReport> rows;
    std::vector<double> ts = o.t > 0.0
                                 ? std::vector<double>{o.t}
                                 : std::vector<double>{1.0, 2.0, 5.0, 10.0,
                                                       20.0, 50.0};
    if (o.lemma == "all") {
        rows = run_oracle_suite();
    } else if (o.lemma == "4.4") {
        std::vector<double> ls =
            o.l >= 0.0 ? std::vector<double>{o.l}
                       : std::vector<double>{0.0, 1.0, 2.0, 4.0};
        for (double l : ls)
            for (OracleReport& r : envelope_sup_check(l, ts))
                rows.push_back(std::move(r));
    } else if (o.lemma == "4.6") {
        rows = sinc_sup_check(ts);
    } else if (o.lemma == "4.7") {
        rows = sinh_bound_check();
    } else if (o.lemma == "lowfreq") {
        rows = lowfreq_structure_check();
    } else if (o.lemma == "mode") {
        rows = mode_oracle_check();
    } else {
        throw std::invalid_argument(
            "unknown check id (use 4.4, 4.6, 4.7, lowfreq, mode, or all)");
    }

    OutStream out(o.out);
    std::ostream& os = out.get();
    os << "check,parameter,bound,measured,pass\n";
    int failures = 0;
    for (const OracleReport& r : rows) {
        CsvRow(os)
            .col(r.check)
            .col(r.parameter)
            .col(r.bound)
            .col(r.measured)
            .col(r.pass);
        if (!r.pass) ++failures;
    }
    std::cerr << rows.size() - failures << "/" << rows.size()
              << " oracle rows passed\n";
    return failures == 0 ? 0 : 1;
}

// --------------------------------------------------------------- report --

struct ReportOpts {
    int n = 0;
    double l = 0.0;
    std::string data = "edge";
    bool measure = false;
    double t_max = 0.0;
    double tol = 1e-8;
    double max_evals = 5e7;
    std::string out;
};

int cmd_report(const ReportOpts& o) {
    OutStream out(o.out);
    std::ostream& os = out.get();
    bool single = o.n > 0 && o.l > 0.0;
    if (o.measure && !single)
        throw std::invalid_argument("--measure needs explicit --n and --l");

    os << "n,l,band,profile,residual_exponent,solution_exponent,valid,reason";
    if (o.measure) os << ",measured_residual_slope,measured_solution_slope";
    os << "\n";

    auto emit = [&](int n, double l) {
        Regime r = classify_regime(n, l);
        CsvRow row(os);
        row.col(n).col(l);
        if (r.valid) {
            row.col(band_name(r.band))
                .col(profile_name(r.profile))
                .col(r.residual_exponent)
                .col(r.solution_exponent)
                .col(true)
                .col(r.reason);
        } else {
            row.col("none").col("none").col(0.0).col(0.0).col(false).col(
                r.reason);
        }
        if (o.measure && r.valid) {
            DataPair pair = make_pair(o.data, n, l);
            double tmax =
                o.t_max > 0.0
                    ? o.t_max
                    : (r.profile == ProfileKind::WaveLike ? 1e3 : 1e4);
            std::vector<double> times = default_time_grid(tmax);
            long long budget = (long long)std::llround(o.max_evals);
            DecaySeries res =
                residual_series(pair, r.profile, Zone::Full, times,
                                r.residual_exponent, o.tol, budget);
            DecaySeries sol =
                solution_norm_series(pair, Zone::Full, times,
                                     r.solution_exponent, o.tol, budget);
            row.col(res.fit.slope).col(sol.fit.slope);
        }
    };

    if (single) {
        emit(o.n, o.l);
    } else {
        for (int n = 1; n <= 20; ++n)
            for (double l = 2.0; l <= 12.0 + 1e-9; l += 0.5) emit(n, l);
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "platelab: numerical decay laboratory for the damped plate equation "
        "with rotational inertia"};
    app.require_subcommand(1);

    RootsOpts ro;
    CLI::App* roots = app.add_subcommand(
        "roots", "characteristic roots and branch constants (CSV)");
    roots->add_option("--r", ro.r_spec,
                      "radius: value, comma list, or lo:hi:step");
    roots->add_flag("--constants", ro.constants,
                    "emit the branch constants table instead");
    roots->add_option("--out", ro.out, "write CSV here instead of stdout");
    roots->set_config("--config");

    VerifyOpts vo;
    CLI::App* verify = app.add_subcommand(
        "verify", "measure decay slopes and check them against predictions");
    verify->add_option("--n", vo.n, "space dimension")->check(CLI::Range(1, 64));
    verify->add_option("--l", vo.l, "regularity index of the velocity data");
    verify->add_option("--data", vo.data,
                       "data pair label (gaussian[:a=..], edge[:sigma=..])");
    verify->add_option("--region", vo.region, "low|mid|high|full");
    verify->add_option("--tol", vo.tol, "base quadrature tolerance");
    verify->add_option("--slope-tol", vo.slope_tol, "slope check tolerance");
    verify->add_option("--eta-floor", vo.eta_floor,
                       "minimum mid-region exponential rate");
    verify->add_option("--t-max", vo.t_max, "largest time in the grid");
    verify->add_option("--max-evals", vo.max_evals,
                       "integrand evaluation budget per norm");
    verify->add_option("--out", vo.out, "write CSV here instead of stdout");
    verify->set_config("--config");

    OracleOpts oo;
    CLI::App* oracle = app.add_subcommand(
        "oracle", "analytic bound checks and the ODE cross-validation");
    oracle->add_option("--lemma", oo.lemma,
                       "check id: 4.4, 4.6, 4.7, lowfreq, mode, or all");
    oracle->add_option("--l", oo.l, "envelope exponent for check 4.4");
    oracle->add_option("--t", oo.t, "single time instead of the default grid");
    oracle->add_option("--out", oo.out, "write CSV here instead of stdout");
    oracle->set_config("--config");

    ReportOpts po;
    CLI::App* report = app.add_subcommand(
        "report", "regime table over the (n, l) plane, optionally measured");
    report->add_option("--n", po.n, "space dimension (omit to sweep)");
    report->add_option("--l", po.l, "regularity index (omit to sweep)");
    report->add_option("--data", po.data, "data pair label for --measure");
    report->add_flag("--measure", po.measure,
                     "run the decay series and append measured slopes");
    report->add_option("--t-max", po.t_max, "largest time in the grid");
    report->add_option("--tol", po.tol, "base quadrature tolerance");
    report->add_option("--max-evals", po.max_evals,
                       "integrand evaluation budget per norm");
    report->add_option("--out", po.out, "write CSV here instead of stdout");
    report->set_config("--config");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*roots) return cmd_roots(ro);
        if (*verify) return cmd_verify(vo);
        if (*oracle) return cmd_oracle(oo);
        if (*report) return cmd_report(po);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const QuadratureError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
