#ifndef SEMIDI_SCHEMES_HPP
#define SEMIDI_SCHEMES_HPP

#include <array>
#include <string>
#include <vector>

#include "semidi/types.hpp"

namespace semidi {

enum class Scheme { BPSK, ASK2, OOK };

const char* to_string(Scheme s);
Scheme scheme_from_string(const std::string& name);

struct SchemeParams {
    Scheme scheme = Scheme::BPSK;
    double xi = 0.0;       // coherent amplitude
    double epsilon = 0.0;  // 2ASK amplitude offset
    double eta = 1.0;      // OOK detector efficiency
    // Threshold convention: false = non-vacuum component 1 - exp(-a^2)
    // (the tighter choice), true = mean photon number a^2.
    bool mean_photon = false;
};

struct SchemePoint {
    Correlations e;
    Thresholds w;
    SchemeParams params;
};

// Homodyne sign readout of |+xi> / |-xi>:
//   E1 = erf(sqrt(2) xi), E2 = -E1, omega1 = omega2 = 1 - exp(-xi^2).
// Requires 0 <= xi <= sqrt(ln 2) so that each omega stays below 1/2.
SchemePoint bpsk_point(double xi, bool mean_photon = false);

// Click/no-click readout of |xi + eps> / |xi - eps>:
//   E_x = 1 - 2 exp(-(xi +/- eps)^2), omega1 = omega2 = 1 - exp(-eps^2).
SchemePoint ask2_point(double xi, double epsilon, bool mean_photon = false);

// Click/no-click readout of |xi> / vacuum, detector efficiency eta:
//   E1 = 1 - 2 exp(-xi^2 eta), E2 = -1, omega1 = 1 - exp(-xi^2), omega2 = 0.
SchemePoint ook_point(double xi, double eta = 1.0, bool mean_photon = false);

// Amplitude reproducing a given non-vacuum component: xi^2 = -ln(1 - omega1).
double ook_xi_from_omega1(double omega1);

// Verdicts for all seven sets at the point's own thresholds, in the fixed
// order quantum, classical-avg, classical-peak, det-avg-1, det-avg-2,
// det-peak-1, det-peak-2.
std::array<SetVerdict, 7> classify(const SchemePoint& p);

enum class ScanParam { Xi, Epsilon, Eta };

ScanParam scan_param_from_string(const std::string& name);
const char* to_string(ScanParam p);

struct ScanRow {
    double param;
    SchemePoint point;
    std::array<SetVerdict, 7> verdicts;
};

struct VerdictFlip {
    SetName set;
    double param;     // located by bisection to 1e-6
    bool to_member;   // verdict on the high-parameter side
};

struct ScanResult {
    std::vector<ScanRow> rows;
    std::vector<VerdictFlip> flips;
};

// Uniform sweep of one parameter; the remaining parameters are taken from
// `base`. Verdict flips between consecutive rows are refined by bisection.
ScanResult scan(const SchemeParams& base, ScanParam param, double from,
                double to, int steps);

}  // namespace semidi

#endif  // SEMIDI_SCHEMES_HPP
