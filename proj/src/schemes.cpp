#include "semidi/schemes.hpp"

#include <cmath>
#include <stdexcept>

#include "semidi/core_sets.hpp"
#include "semidi/special_functions.hpp"

namespace semidi {

namespace {

const double kXiMaxBpsk = std::sqrt(std::log(2.0));

double threshold_from_amplitude(double a, bool mean_photon) {
    return mean_photon ? a * a : -std::expm1(-a * a);
}

SchemePoint eval(const SchemeParams& p) {
    switch (p.scheme) {
        case Scheme::BPSK: return bpsk_point(p.xi, p.mean_photon);
        case Scheme::ASK2: return ask2_point(p.xi, p.epsilon, p.mean_photon);
        case Scheme::OOK: return ook_point(p.xi, p.eta, p.mean_photon);
    }
    throw std::invalid_argument("bad scheme");
}

}  // namespace

const char* to_string(Scheme s) {
    switch (s) {
        case Scheme::BPSK: return "bpsk";
        case Scheme::ASK2: return "2ask";
        case Scheme::OOK: return "ook";
    }
    return "?";
}

Scheme scheme_from_string(const std::string& name) {
    if (name == "bpsk") return Scheme::BPSK;
    if (name == "2ask") return Scheme::ASK2;
    if (name == "ook") return Scheme::OOK;
    throw std::invalid_argument("unknown scheme: " + name);
}

const char* to_string(ScanParam p) {
    switch (p) {
        case ScanParam::Xi: return "xi";
        case ScanParam::Epsilon: return "epsilon";
        case ScanParam::Eta: return "eta";
    }
    return "?";
}

ScanParam scan_param_from_string(const std::string& name) {
    if (name == "xi") return ScanParam::Xi;
    if (name == "epsilon") return ScanParam::Epsilon;
    if (name == "eta") return ScanParam::Eta;
    throw std::invalid_argument("unknown scan parameter: " + name);
}

SchemePoint bpsk_point(double xi, bool mean_photon) {
    if (!(xi >= 0.0 && xi <= kXiMaxBpsk + 1e-12)) {
        throw std::invalid_argument(
            "bpsk_point: xi must lie in [0, sqrt(ln 2)]");
    }
    const double omega = threshold_from_amplitude(xi, mean_photon);
    const double e1 = erf_cody(std::sqrt(2.0) * xi);
    return SchemePoint{Correlations(e1, -e1), Thresholds(omega, omega),
                       SchemeParams{Scheme::BPSK, xi, 0.0, 1.0, mean_photon}};
}

SchemePoint ask2_point(double xi, double epsilon, bool mean_photon) {
    if (!(xi >= 0.0)) throw std::invalid_argument("ask2_point: xi must be >= 0");
    if (!(epsilon >= 0.0)) {
        throw std::invalid_argument("ask2_point: epsilon must be >= 0");
    }
    const double omega = threshold_from_amplitude(epsilon, mean_photon);
    if (!(omega <= 0.5 + 1e-12)) {
        throw std::invalid_argument(
            "ask2_point: epsilon too large, threshold exceeds 1/2");
    }
    const double ap = xi + epsilon;
    const double am = xi - epsilon;
    return SchemePoint{
        Correlations(1.0 - 2.0 * std::exp(-ap * ap),
                     1.0 - 2.0 * std::exp(-am * am)),
        Thresholds(omega, omega),
        SchemeParams{Scheme::ASK2, xi, epsilon, 1.0, mean_photon}};
}

SchemePoint ook_point(double xi, double eta, bool mean_photon) {
    if (!(xi >= 0.0)) throw std::invalid_argument("ook_point: xi must be >= 0");
    if (!(eta > 0.0 && eta <= 1.0)) {
        throw std::invalid_argument("ook_point: eta must lie in (0, 1]");
    }
    const double omega1 = threshold_from_amplitude(xi, mean_photon);
    if (!(omega1 <= 1.0)) {
        throw std::invalid_argument("ook_point: xi too large, omega1 exceeds 1");
    }
    return SchemePoint{
        Correlations(1.0 - 2.0 * std::exp(-xi * xi * eta), -1.0),
        Thresholds(omega1, 0.0),
        SchemeParams{Scheme::OOK, xi, 0.0, eta, mean_photon}};
}

double ook_xi_from_omega1(double omega1) {
    if (!(omega1 >= 0.0 && omega1 < 1.0)) {
        throw std::invalid_argument("ook: omega1 must lie in [0, 1)");
    }
    return std::sqrt(-std::log1p(-omega1));
}

std::array<SetVerdict, 7> classify(const SchemePoint& p) {
    std::array<SetVerdict, 7> out = {
        quantum_membership(p.e, p.w),
        classical_avg_membership(p.e, p.w),
        classical_peak_membership(p.e, p.w),
        det_avg_membership(p.e, 1, p.w),
        det_avg_membership(p.e, 2, p.w),
        det_peak_membership(p.e, 1, p.w),
        det_peak_membership(p.e, 2, p.w),
    };
    return out;
}

ScanResult scan(const SchemeParams& base, ScanParam param, double from,
                double to, int steps) {
    if (steps < 2) throw std::invalid_argument("scan: steps must be >= 2");
    if (!(to > from)) {
        throw std::invalid_argument("scan: need a nonempty parameter range");
    }
    const auto at = [&](double v) {
        SchemeParams p = base;
        switch (param) {
            case ScanParam::Xi: p.xi = v; break;
            case ScanParam::Epsilon: p.epsilon = v; break;
            case ScanParam::Eta: p.eta = v; break;
        }
        return eval(p);
    };

    ScanResult result;
    result.rows.reserve(steps);
    for (int i = 0; i < steps; ++i) {
        const double v = from + (to - from) * i / (steps - 1);
        SchemePoint pt = at(v);
        result.rows.push_back(ScanRow{v, pt, classify(pt)});
    }

    for (std::size_t s = 0; s < kAllSets.size(); ++s) {
        for (int i = 1; i < steps; ++i) {
            const bool before = result.rows[i - 1].verdicts[s].member;
            const bool after = result.rows[i].verdicts[s].member;
            if (before == after) continue;
            double lo = result.rows[i - 1].param;
            double hi = result.rows[i].param;
            while (hi - lo > 1e-6) {
                const double mid = 0.5 * (lo + hi);
                const bool m = classify(at(mid))[s].member == before;
                (m ? lo : hi) = mid;
            }
            result.flips.push_back(
                VerdictFlip{kAllSets[s], 0.5 * (lo + hi), after});
        }
    }
    return result;
}

}  // namespace semidi
