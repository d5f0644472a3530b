#ifndef SEMIDI_TYPES_HPP
#define SEMIDI_TYPES_HPP

#include <array>
#include <cmath>
#include <stdexcept>
#include <string>

namespace semidi {

// Absolute slack tolerance applied to all membership margins.
inline constexpr double kMarginTolerance = 1e-12;

// Correlation pair (E1, E2): per-input expectations of the +/-1 outcome.
class Correlations {
public:
    Correlations(double e1, double e2) : e1_(e1), e2_(e2) {
        if (!(std::fabs(e1) <= 1.0 + 1e-12) || !(std::fabs(e2) <= 1.0 + 1e-12)) {
            throw std::invalid_argument(
                "Correlations: |e1| and |e2| must not exceed 1, got e1=" +
                std::to_string(e1) + " e2=" + std::to_string(e2));
        }
        // Clamp round-off spill from boundary constructions.
        e1_ = std::fmin(1.0, std::fmax(-1.0, e1_));
        e2_ = std::fmin(1.0, std::fmax(-1.0, e2_));
    }

    double e1() const { return e1_; }
    double e2() const { return e2_; }
    double e_plus() const { return e1_ + e2_; }
    double e_minus() const { return e1_ - e2_; }

private:
    double e1_;
    double e2_;
};

// Constraint pair (omega1, omega2) on the mean values of the trusted
// observable. Also used to carry exact expectations (H1, H2).
class Thresholds {
public:
    Thresholds(double omega1, double omega2) : omega1_(omega1), omega2_(omega2) {
        if (!(omega1 >= 0.0) || !(omega2 >= 0.0)) {
            throw std::invalid_argument("Thresholds: omegas must be nonnegative");
        }
        if (!(omega1 + omega2 <= 1.0 + 1e-12)) {
            throw std::invalid_argument(
                "Thresholds: omega1 + omega2 must not exceed 1, got " +
                std::to_string(omega1 + omega2));
        }
    }

    double omega1() const { return omega1_; }
    double omega2() const { return omega2_; }

private:
    double omega1_;
    double omega2_;
};

// Lower bound gamma on the modulus of the scalar product of the two states.
class OverlapBound {
public:
    explicit OverlapBound(double gamma) : gamma_(gamma) {
        if (!(gamma >= 0.0 && gamma <= 1.0)) {
            throw std::invalid_argument("OverlapBound: gamma must lie in [0,1]");
        }
    }

    double gamma() const { return gamma_; }

private:
    double gamma_;
};

enum class SetName {
    Quantum,
    ClassicalAvg,
    ClassicalPeak,
    DetAvg1,
    DetAvg2,
    DetPeak1,
    DetPeak2,
};

inline constexpr std::array<SetName, 7> kAllSets = {
    SetName::Quantum,      SetName::ClassicalAvg, SetName::ClassicalPeak,
    SetName::DetAvg1,      SetName::DetAvg2,      SetName::DetPeak1,
    SetName::DetPeak2,
};

const char* to_string(SetName set);
SetName set_from_string(const std::string& name);

// Membership decision with a signed margin: positive inside, negative
// outside, magnitude equal to the slack of the tightest defining inequality.
struct SetVerdict {
    SetName set;
    bool member;
    double margin;

    static SetVerdict from_margin(SetName set, double margin) {
        return SetVerdict{set, margin >= -kMarginTolerance, margin};
    }
};

// Explicit two-state-plus-measurement witness of a correlation point.
// States: |phi_x> = cos(theta_x)|0> -/+ sin(theta_x)|1> (opposite signs),
// measurement: (p0 - p1) I + p2 m.sigma with m at Bloch angle theta_m in the
// plane spanned by the two state Bloch vectors.
struct QubitRealization {
    double theta1;
    double theta2;
    double p0;
    double p1;
    double p2;
    double theta_m;

    double h1() const { return std::sin(theta1) * std::sin(theta1); }
    double h2() const { return std::sin(theta2) * std::sin(theta2); }

    // Correlations induced by this realization.
    Correlations correlations() const;
};

}  // namespace semidi

#endif  // SEMIDI_TYPES_HPP
