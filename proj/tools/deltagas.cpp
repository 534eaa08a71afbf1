// deltagas command line: solve, sweep, verify, factor, kernel, hankel.

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "deltagas/asymptotics.hpp"
#include "deltagas/error.hpp"
#include "deltagas/fredholm.hpp"
#include "deltagas/hankel.hpp"
#include "deltagas/parallel.hpp"
#include "deltagas/verification.hpp"
#include "deltagas/wiener_hopf.hpp"

using json = nlohmann::json;
using namespace deltagas;

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string num(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

json jnum(double v) { return std::isfinite(v) ? json(v) : json(nullptr); }

// CSV with a fixed header, or JSON objects keyed by the same header.
class Table {
public:
    explicit Table(std::vector<std::string> header) : header_(std::move(header)) {}

    void add(std::vector<json> row) { rows_.push_back(std::move(row)); }

    std::string csv() const {
        std::ostringstream os;
        for (std::size_t i = 0; i < header_.size(); ++i) os << (i ? "," : "") << header_[i];
        os << '\n';
        for (const auto& row : rows_) {
            for (std::size_t i = 0; i < row.size(); ++i) {
                if (i) os << ',';
                const json& v = row[i];
                if (v.is_string()) os << v.get<std::string>();
                else if (v.is_null()) os << "nan";
                else if (v.is_boolean()) os << (v.get<bool>() ? "true" : "false");
                else if (v.is_number_integer()) os << v.get<long long>();
                else os << num(v.get<double>());
            }
            os << '\n';
        }
        return os.str();
    }

    json objects() const {
        json arr = json::array();
        for (const auto& row : rows_) {
            json o = json::object();
            for (std::size_t i = 0; i < row.size(); ++i) o[header_[i]] = row[i];
            arr.push_back(o);
        }
        return arr;
    }

private:
    std::vector<std::string> header_;
    std::vector<std::vector<json>> rows_;
};

struct Common {
    std::string format = "csv";
    std::string out_path;
};

void emit(const Common& c, const std::string& text) {
    if (c.out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(c.out_path);
    if (!f) throw UsageError("cannot open output file " + c.out_path);
    f << text;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

Statistics parse_stat(const std::string& s) {
    if (s == "fermi") return Statistics::Fermi;
    if (s == "bose") return Statistics::Bose;
    throw UsageError("--stat must be fermi or bose");
}

// a:b:step, inclusive of b up to rounding
std::vector<double> parse_grid(const std::string& text) {
    std::vector<double> parts;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ':')) {
        try {
            std::size_t used = 0;
            parts.push_back(std::stod(item, &used));
            if (used != item.size()) throw std::invalid_argument(item);
        } catch (const std::exception&) {
            throw UsageError("bad grid '" + text + "', expected a:b:step");
        }
    }
    if (parts.size() != 3 || !(parts[2] > 0.0) || !(parts[0] <= parts[1]))
        throw UsageError("bad grid '" + text + "', expected a:b:step with a <= b and step > 0");
    std::vector<double> out;
    const long count = std::lround(std::floor((parts[1] - parts[0]) / parts[2] + 1e-9));
    for (long i = 0; i <= count; ++i) out.push_back(parts[0] + i * parts[2]);
    return out;
}

std::vector<double> log_space(double from, double to, int count) {
    if (!(from > 0.0) || !(to > 0.0) || count < 1) throw UsageError("log-spaced range needs positive ends and count >= 1");
    std::vector<double> out;
    if (count == 1) return {from};
    for (int i = 0; i < count; ++i) out.push_back(from * std::pow(to / from, double(i) / (count - 1)));
    return out;
}

const std::vector<std::string> kSolveHeader = {"stat", "kappa", "gamma", "r", "n", "m0", "m2", "Q", "epsilon", "epsilon_total"};

std::vector<json> solve_row(const NystromSolution& s, int n) {
    const bool fermi = s.stat == Statistics::Fermi;
    return {to_string(s.stat), s.params.kappa, s.params.gamma, s.params.r, n, s.m0, s.m2,
            fermi ? jnum(charge_Q(s)) : json(nullptr), energy(s), fermi ? jnum(energy_total(s)) : json(nullptr)};
}

NystromSolution solve_point(Statistics stat, const std::string& param, double value, int n, const SolveOptions& opt) {
    if (param == "gamma") return solve_for_gamma(stat, value, n, opt);
    if (param == "r") {
        if (!(value > 0.0)) throw UsageError("--r must be positive");
        return solve_love(stat, 2.0 / value, n, opt);
    }
    return solve_love(stat, value, n, opt);
}

std::string report_csv(const SuiteReport& rep) {
    Table t({"quantity", "x", "numeric", "series", "residual"});
    for (const auto& r : rep.rows) t.add({r.quantity, r.x, r.numeric, r.series, r.residual});
    std::string out = t.csv();
    if (rep.fit) out += "fit_order," + num(rep.fit->slope) + "," + num(rep.fit->stderr_slope) + "\n";
    return out;
}

json report_json(const SuiteReport& rep) {
    Table t({"quantity", "x", "numeric", "series", "residual"});
    for (const auto& r : rep.rows) t.add({r.quantity, r.x, r.numeric, r.series, r.residual});
    json j;
    j["suite"] = rep.suite;
    j["rows"] = t.objects();
    j["fit"] = rep.fit ? json{{"slope", rep.fit->slope}, {"stderr", rep.fit->stderr_slope}} : json(nullptr);
    j["pass"] = rep.pass;
    j["summary"] = rep.summary;
    return j;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Love / Lieb-Liniger / Gaudin integral equations and their asymptotics"};
    app.require_subcommand(1);
    Common common;
    auto add_common = [&common](CLI::App* sub) {
        sub->add_option("--format", common.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
        sub->add_option("--out", common.out_path, "write to this file instead of stdout");
    };

    // solve
    auto* solve = app.add_subcommand("solve", "solve one Love equation");
    std::string stat_name = "fermi";
    std::optional<double> kappa, gamma, rr;
    int n = 800;
    bool no_check = false;
    solve->add_option("--stat", stat_name, "fermi or bose");
    auto* ok = solve->add_option("--kappa", kappa, "coupling kappa");
    auto* og = solve->add_option("--gamma", gamma, "coupling gamma (solved for kappa)");
    auto* orr = solve->add_option("--r", rr, "r = 2/kappa");
    ok->excludes(og)->excludes(orr);
    og->excludes(orr);
    solve->add_option("--n", n, "grid size (node budget for small kappa)")->check(CLI::Range(8, 20000));
    solve->add_flag("--no-check", no_check, "skip the n-doubling convergence check");
    add_common(solve);

    // sweep
    auto* sweep = app.add_subcommand("sweep", "log-spaced parameter sweep");
    std::string sweep_param = "kappa";
    double from = 0.01, to = 1.0;
    int count = 9;
    sweep->add_option("--stat", stat_name, "fermi or bose");
    sweep->add_option("--param", sweep_param, "kappa, gamma or r")->check(CLI::IsMember({"kappa", "gamma", "r"}));
    sweep->add_option("--from", from, "first value");
    sweep->add_option("--to", to, "last value");
    sweep->add_option("--count", count, "number of values")->check(CLI::Range(1, 10000));
    sweep->add_option("--n", n, "grid size")->check(CLI::Range(8, 20000));
    sweep->add_flag("--no-check", no_check, "skip the n-doubling convergence check");
    add_common(sweep);

    // verify
    auto* verify = app.add_subcommand("verify", "residual tables and fitted orders");
    std::string suite = "all";
    std::vector<std::string> allowed = suite_names();
    allowed.push_back("all");
    verify->add_option("--suite", suite, "suite name or all")->check(CLI::IsMember(allowed));
    add_common(verify);

    // factor
    auto* fac = app.add_subcommand("factor", "symbol and Wiener-Hopf factors on a real grid");
    std::string xi_grid = "-10:10:0.5";
    fac->add_option("--xi-grid", xi_grid, "a:b:step");
    add_common(fac);

    // kernel
    auto* ker = app.add_subcommand("kernel", "tabulate k and s1");
    std::string x_grid = "1:50:1";
    ker->add_option("--x-grid", x_grid, "a:b:step, x > 0");
    add_common(ker);

    // hankel
    auto* han = app.add_subcommand("hankel", "truncated Neumann series for the zeroth moment");
    int order = 3;
    std::optional<double> hr, hk;
    auto* ohr = han->add_option("--r", hr, "r >= 5");
    auto* ohk = han->add_option("--kappa", hk, "kappa <= 0.4");
    ohr->excludes(ohk);
    han->add_option("--order", order, "highest Neumann order")->check(CLI::Range(0, 12));
    add_common(han);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    const bool as_json = common.format == "json";
    try {
        if (solve->parsed()) {
            const Statistics stat = parse_stat(stat_name);
            SolveOptions opt;
            opt.check_convergence = !no_check;
            std::string param;
            double value;
            if (kappa) { param = "kappa"; value = *kappa; }
            else if (gamma) { param = "gamma"; value = *gamma; }
            else if (rr) { param = "r"; value = *rr; }
            else throw UsageError("solve needs one of --kappa, --gamma, --r");
            const NystromSolution s = solve_point(stat, param, value, n, opt);
            Table t(kSolveHeader);
            t.add(solve_row(s, n));
            emit(common, as_json ? dump(t.objects()[0]) : t.csv());
            return 0;
        }
        if (sweep->parsed()) {
            const Statistics stat = parse_stat(stat_name);
            SolveOptions opt;
            opt.check_convergence = !no_check;
            const std::vector<double> values = log_space(from, to, count);
            const auto rows = parallel_map(values, [&](double v) { return solve_row(solve_point(stat, sweep_param, v, n, opt), n); });
            Table t(kSolveHeader);
            for (const auto& r : rows) t.add(r);
            emit(common, as_json ? dump(t.objects()) : t.csv());
            return 0;
        }
        if (verify->parsed()) {
            std::vector<SuiteReport> reports;
            if (suite == "all") {
                for (const auto& s : suite_names()) reports.push_back(run_suite(s));
            } else {
                reports.push_back(run_suite(suite));
            }
            bool pass = true;
            std::string text;
            json arr = json::array();
            for (const auto& rep : reports) {
                pass = pass && rep.pass;
                std::cerr << rep.suite << ": " << (rep.pass ? "pass" : "FAIL") << "  " << rep.summary << '\n';
                if (as_json) arr.push_back(report_json(rep));
                else text += (text.empty() ? "" : "\n") + report_csv(rep);
            }
            if (as_json) text = dump(reports.size() == 1 ? arr[0] : arr);
            emit(common, text);
            return pass ? 0 : 1;
        }
        if (fac->parsed()) {
            Table t({"xi", "sigma", "sigma_plus_re", "sigma_plus_im", "sigma_minus_re", "sigma_minus_im", "product_residual"});
            double worst = 0.0;
            for (double xi : parse_grid(xi_grid)) {
                const Complex p = factor(HalfPlane::upper, xi).value, m = factor(HalfPlane::lower, xi).value;
                const double res = std::abs(p * m - symbol(xi));
                worst = std::max(worst, res);
                t.add({xi, symbol(xi), p.real(), p.imag(), m.real(), m.imag(), res});
            }
            std::cerr << "max product residual " << num(worst) << '\n';
            emit(common, as_json ? dump(t.objects()) : t.csv());
            return 0;
        }
        if (ker->parsed()) {
            Table t({"x", "k", "x2_k", "s1", "x2_s1"});
            for (double x : parse_grid(x_grid)) {
                if (!(x > 0.0)) throw UsageError("kernel grid must be positive");
                const double k = hankel_kernel_k(x), s = s1_kernel(x);
                t.add({x, k, x * x * k, s, x * x * s});
            }
            emit(common, as_json ? dump(t.objects()) : t.csv());
            return 0;
        }
        if (han->parsed()) {
            double r;
            if (hr) r = *hr;
            else if (hk) {
                if (!(*hk > 0.0)) throw UsageError("--kappa must be positive");
                r = 2.0 / *hk;
            } else throw UsageError("hankel needs --r or --kappa");
            if (!(r >= 5.0)) throw UsageError("hankel needs r >= 5 (kappa <= 0.4)");
            const QuadratureGrid grid = half_line_grid(r);
            const NeumannResult full = neumann_solve(r, order, grid);
            Table t({"order", "r", "term", "h0", "fhat0", "Q"});
            double h0 = 0.0;
            t.add({0, r, 0.0, 0.0, r, r / (std::numbers::pi * r)});
            for (int j = 0; j < order; ++j) {
                h0 += full.per_order[j];
                const double fhat0 = r + 2.0 * h0;
                t.add({j + 1, r, full.per_order[j], h0, fhat0, fhat0 / (std::numbers::pi * r)});
            }
            emit(common, as_json ? dump(t.objects()) : t.csv());
            return 0;
        }
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        const bool usage = e.code() == ErrorCode::invalid_argument || e.code() == ErrorCode::invalid_interval;
        return usage ? 2 : 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 2;
}
