// Command-line front end: boundary data, membership verdicts, optical-scheme
// classification, parameter scans and numerical certification oracles.
//
// Exit codes: 0 success, 1 domain error, 2 usage error, 3 oracle disagreement.

#include <charconv>
#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "semidi/core_sets.hpp"
#include "semidi/oracle.hpp"
#include "semidi/schemes.hpp"

namespace {

constexpr const char* kToolVersion = "1.0.0";

// Shortest decimal rendering that round-trips to the same binary64 value.
std::string fmt_double(double v) {
    char buf[32];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

nlohmann::json verdict_json(const semidi::SetVerdict& v) {
    return {{"set", semidi::to_string(v.set)},
            {"member", v.member},
            {"margin", v.margin}};
}

nlohmann::json point_json(const semidi::SchemePoint& p) {
    return {{"scheme", semidi::to_string(p.params.scheme)},
            {"xi", p.params.xi},
            {"epsilon", p.params.epsilon},
            {"eta", p.params.eta},
            {"e1", p.e.e1()},
            {"e2", p.e.e2()},
            {"omega1", p.w.omega1()},
            {"omega2", p.w.omega2()}};
}

int cmd_boundary(const std::string& set_name, double w1, double w2,
                 int samples, const std::string& format) {
    const semidi::SetName set = semidi::set_from_string(set_name);
    const semidi::Thresholds w(w1, w2);
    const semidi::BoundaryCurve curve = semidi::boundary_curve(set, w, samples);
    if (format == "csv") {
        std::cout << "e1,e2\n";
        for (const auto& p : curve.points) {
            std::cout << fmt_double(p.e1()) << ',' << fmt_double(p.e2()) << '\n';
        }
    } else {
        nlohmann::json pts = nlohmann::json::array();
        for (const auto& p : curve.points) pts.push_back({p.e1(), p.e2()});
        nlohmann::json out = {{"kind", "boundary"},
                              {"payload",
                               {{"set", set_name},
                                {"omega1", w1},
                                {"omega2", w2},
                                {"degenerate", curve.degenerate},
                                {"points", pts}}},
                              {"meta", {{"tool_version", kToolVersion}}}};
        std::cout << out.dump() << '\n';
    }
    if (curve.degenerate) {
        std::cerr << "note: set is degenerate (measure-zero segment)\n";
    }
    return 0;
}

int cmd_check(double e1, double e2, double w1, double w2) {
    const semidi::Correlations e(e1, e2);
    const semidi::Thresholds w(w1, w2);
    nlohmann::json verdicts = nlohmann::json::array();
    for (semidi::SetName s : semidi::kAllSets) {
        verdicts.push_back(verdict_json(semidi::membership(s, e, w)));
    }
    nlohmann::json out = {{"kind", "verdict"},
                          {"payload",
                           {{"e1", e1},
                            {"e2", e2},
                            {"omega1", w1},
                            {"omega2", w2},
                            {"verdicts", verdicts}}},
                          {"meta", {{"tool_version", kToolVersion}}}};
    std::cout << out.dump() << '\n';
    return 0;
}

semidi::SchemePoint make_scheme_point(const std::string& name,
                                      std::optional<double> xi,
                                      std::optional<double> omega1,
                                      double epsilon, double eta,
                                      bool mean_photon) {
    const semidi::Scheme scheme = semidi::scheme_from_string(name);
    if (xi && omega1) {
        throw std::invalid_argument("--xi and --omega1 are mutually exclusive");
    }
    double amp = xi.value_or(0.0);
    if (omega1) {
        if (scheme != semidi::Scheme::OOK) {
            throw std::invalid_argument("--omega1 is only accepted for ook");
        }
        amp = semidi::ook_xi_from_omega1(*omega1);
    }
    switch (scheme) {
        case semidi::Scheme::BPSK: return semidi::bpsk_point(amp, mean_photon);
        case semidi::Scheme::ASK2:
            return semidi::ask2_point(amp, epsilon, mean_photon);
        case semidi::Scheme::OOK: return semidi::ook_point(amp, eta, mean_photon);
    }
    throw std::invalid_argument("bad scheme");
}

int cmd_scheme(const std::string& name, std::optional<double> xi,
               std::optional<double> omega1, double epsilon, double eta,
               bool mean_photon) {
    const semidi::SchemePoint p =
        make_scheme_point(name, xi, omega1, epsilon, eta, mean_photon);
    nlohmann::json verdicts = nlohmann::json::array();
    for (const auto& v : semidi::classify(p)) verdicts.push_back(verdict_json(v));
    nlohmann::json out = {{"kind", "verdict"},
                          {"payload",
                           {{"point", point_json(p)}, {"verdicts", verdicts}}},
                          {"meta", {{"tool_version", kToolVersion}}}};
    std::cout << out.dump() << '\n';
    return 0;
}

int cmd_scan(const std::string& name, const std::string& param_name,
             double from, double to, int steps, std::optional<double> xi,
             std::optional<double> omega1, double epsilon, double eta,
             bool mean_photon) {
    semidi::SchemeParams base;
    base.scheme = semidi::scheme_from_string(name);
    base.epsilon = epsilon;
    base.eta = eta;
    base.mean_photon = mean_photon;
    if (omega1) {
        if (base.scheme != semidi::Scheme::OOK) {
            throw std::invalid_argument("--omega1 is only accepted for ook");
        }
        base.xi = semidi::ook_xi_from_omega1(*omega1);
    } else {
        base.xi = xi.value_or(0.0);
    }
    const semidi::ScanParam param = semidi::scan_param_from_string(param_name);
    const semidi::ScanResult result = semidi::scan(base, param, from, to, steps);

    std::cout << "param,e1,e2,omega1,omega2";
    for (semidi::SetName s : semidi::kAllSets) {
        std::cout << ',' << semidi::to_string(s) << "-margin";
    }
    std::cout << '\n';
    for (const auto& row : result.rows) {
        std::cout << fmt_double(row.param) << ',' << fmt_double(row.point.e.e1())
                  << ',' << fmt_double(row.point.e.e2()) << ','
                  << fmt_double(row.point.w.omega1()) << ','
                  << fmt_double(row.point.w.omega2());
        for (const auto& v : row.verdicts) std::cout << ',' << fmt_double(v.margin);
        std::cout << '\n';
    }
    nlohmann::json flips = nlohmann::json::array();
    for (const auto& f : result.flips) {
        flips.push_back({{"set", semidi::to_string(f.set)},
                         {"param", f.param},
                         {"to_member", f.to_member}});
    }
    nlohmann::json out = {{"kind", "scan-flips"},
                          {"payload", {{"flips", flips}}},
                          {"meta", {{"tool_version", kToolVersion}}}};
    std::cout << out.dump() << '\n';
    return 0;
}

int cmd_oracle(const std::string& claim, double w1, double w2, long long trials,
               std::uint64_t seed, int dim, int x, int grid) {
    namespace so = semidi::oracle;
    so::OracleReport report;
    if (claim == "quantum-sample") {
        report = so::sample_quantum_points(semidi::Thresholds(w1, w2), trials,
                                           seed).report;
    } else if (claim == "hull") {
        report = so::hull_vs_boundary(semidi::Thresholds(w1, w2), trials, seed);
    } else if (claim == "overlap") {
        report = so::overlap_bound_check(w1, w2, dim, trials, seed);
    } else if (claim == "det-avg") {
        report = so::det_avg_oracle(x, semidi::Thresholds(w1, w2), grid, seed);
    } else if (claim == "concavity") {
        report = so::concavity_check(trials, seed);
    } else if (claim == "mixing") {
        report = so::mixing_closure_check(semidi::Thresholds(w1, w2), trials,
                                          seed);
    } else {
        std::cerr << "unknown claim: " << claim << '\n';
        return 2;
    }
    std::cout << so::to_json_string(report);
    return report.passed ? 0 : 3;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Correlation sets of the two-preparation semi-device-"
                 "independent scenario with mean-observable constraints"};
    app.require_subcommand(1);

    // boundary
    std::string set_name, format = "csv";
    double w1 = 0.0, w2 = 0.0;
    int samples = 256;
    auto* boundary = app.add_subcommand("boundary", "boundary curve of a set");
    boundary->add_option("--set", set_name)->required();
    boundary->add_option("--omega1", w1)->required();
    boundary->add_option("--omega2", w2)->required();
    boundary->add_option("--samples", samples);
    boundary->add_option("--format", format)
        ->check(CLI::IsMember({"csv", "json"}));

    // check
    double e1 = 0.0, e2 = 0.0;
    auto* check = app.add_subcommand("check", "membership verdicts for a point");
    check->add_option("--e1", e1)->required();
    check->add_option("--e2", e2)->required();
    check->add_option("--omega1", w1)->required();
    check->add_option("--omega2", w2)->required();

    // scheme
    std::string scheme_name;
    std::optional<double> xi_opt, omega1_opt;
    double epsilon = 0.0, eta = 1.0;
    bool mean_photon = false;
    auto* scheme = app.add_subcommand("scheme", "evaluate an optical scheme");
    scheme->add_option("--name", scheme_name)->required();
    scheme->add_option("--xi", xi_opt);
    scheme->add_option("--omega1", omega1_opt);
    scheme->add_option("--epsilon", epsilon);
    scheme->add_option("--eta", eta);
    scheme->add_flag("--mean-photon", mean_photon,
                     "use mean photon number as the threshold");

    // scan
    std::string param_name, scan_scheme;
    double from = 0.0, to = 0.0;
    int steps = 0;
    auto* scan = app.add_subcommand("scan", "sweep one scheme parameter");
    scan->add_option("--name", scan_scheme)->required();
    scan->add_option("--param", param_name)->required();
    scan->add_option("--from", from)->required();
    scan->add_option("--to", to)->required();
    scan->add_option("--steps", steps)->required();
    std::optional<double> scan_xi, scan_omega1;
    double scan_epsilon = 0.0, scan_eta = 1.0;
    bool scan_mean_photon = false;
    scan->add_option("--xi", scan_xi);
    scan->add_option("--omega1", scan_omega1);
    scan->add_option("--epsilon", scan_epsilon);
    scan->add_option("--eta", scan_eta);
    scan->add_flag("--mean-photon", scan_mean_photon);

    // oracle
    std::string claim;
    long long trials = 10000;
    std::uint64_t seed = 1;
    int dim = 2, x = 1, grid = 201;
    auto* oracle = app.add_subcommand("oracle", "run a certification oracle");
    oracle->add_option("--claim", claim)->required();
    oracle->add_option("--omega1", w1);
    oracle->add_option("--omega2", w2);
    oracle->add_option("--trials", trials);
    oracle->add_option("--seed", seed);
    oracle->add_option("--dim", dim);
    oracle->add_option("--x", x);
    oracle->add_option("--grid", grid);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (boundary->parsed()) return cmd_boundary(set_name, w1, w2, samples, format);
        if (check->parsed()) return cmd_check(e1, e2, w1, w2);
        if (scheme->parsed()) {
            return cmd_scheme(scheme_name, xi_opt, omega1_opt, epsilon, eta,
                              mean_photon);
        }
        if (scan->parsed()) {
            return cmd_scan(scan_scheme, param_name, from, to, steps, scan_xi,
                            scan_omega1, scan_epsilon, scan_eta, scan_mean_photon);
        }
        if (oracle->parsed()) {
            return cmd_oracle(claim, w1, w2, trials, seed, dim, x, grid);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 2;
}
