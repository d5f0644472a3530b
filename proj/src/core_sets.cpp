#include "semidi/core_sets.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <stdexcept>

namespace semidi {

namespace {

constexpr double kPi = std::numbers::pi;

void require_input_index(int x) {
    if (x != 1 && x != 2) {
        throw std::invalid_argument("input index x must be 1 or 2, got " +
                                    std::to_string(x));
    }
}

}  // namespace

const char* to_string(SetName set) {
    switch (set) {
        case SetName::Quantum: return "quantum";
        case SetName::ClassicalAvg: return "classical-avg";
        case SetName::ClassicalPeak: return "classical-peak";
        case SetName::DetAvg1: return "det-avg-1";
        case SetName::DetAvg2: return "det-avg-2";
        case SetName::DetPeak1: return "det-peak-1";
        case SetName::DetPeak2: return "det-peak-2";
    }
    return "?";
}

SetName set_from_string(const std::string& name) {
    for (SetName s : kAllSets) {
        if (name == to_string(s)) return s;
    }
    throw std::invalid_argument("unknown set name: " + name);
}

double g_value(const Correlations& e) {
    return 0.5 * (std::sqrt(1.0 + e.e1()) * std::sqrt(1.0 + e.e2()) +
                  std::sqrt(1.0 - e.e1()) * std::sqrt(1.0 - e.e2()));
}

double h_value(double h1, double h2) {
    if (!(h1 >= 0.0)) throw std::invalid_argument("h_value: h1 must be >= 0");
    if (!(h2 >= 0.0)) throw std::invalid_argument("h_value: h2 must be >= 0");
    if (!(h1 + h2 <= 1.0 + 1e-12)) {
        throw std::invalid_argument("h_value: h1 + h2 must not exceed 1, got " +
                                    std::to_string(h1 + h2));
    }
    return std::sqrt(1.0 - std::fmin(h1, 1.0)) * std::sqrt(1.0 - std::fmin(h2, 1.0)) -
           std::sqrt(h1) * std::sqrt(h2);
}

double h_clamped(double h1, double h2) {
    if (!(h1 >= 0.0)) throw std::invalid_argument("h_clamped: h1 must be >= 0");
    if (!(h2 >= 0.0)) throw std::invalid_argument("h_clamped: h2 must be >= 0");
    if (h1 > 1.0 || h2 > 1.0 || h1 + h2 > 1.0) return 0.0;
    return h_value(h1, h2);
}

OverlapBound overlap_lower_bound(const Thresholds& w) {
    return OverlapBound(std::fmax(0.0, h_value(w.omega1(), w.omega2())));
}

Correlations ellipse_point(const OverlapBound& gamma, double theta_m) {
    const double g = gamma.gamma();
    if (!(g > 0.0 && g < 1.0)) {
        throw std::domain_error(
            "ellipse_point: degenerate ellipse (gamma must be strictly inside "
            "(0,1); the gamma=1 segment and gamma=0 square limits need "
            "separate handling)");
    }
    const double e_plus = 2.0 * g * std::cos(theta_m);
    const double e_minus = 2.0 * std::sqrt(1.0 - g * g) * std::sin(theta_m);
    return Correlations(0.5 * (e_plus + e_minus), 0.5 * (e_plus - e_minus));
}

SetVerdict quantum_membership(const Correlations& e, const Thresholds& w) {
    const double margin = g_value(e) - h_value(w.omega1(), w.omega2());
    return SetVerdict::from_margin(SetName::Quantum, margin);
}

double tsirelson_max_eminus(const Thresholds& w) {
    return 2.0 * (std::sqrt(w.omega1()) * std::sqrt(1.0 - w.omega2()) +
                  std::sqrt(1.0 - w.omega1()) * std::sqrt(w.omega2()));
}

double guessing_probability(const Correlations& e) {
    return 0.5 * (1.0 + 0.5 * std::fabs(e.e_minus()));
}

SetVerdict classical_avg_membership(const Correlations& e, const Thresholds& w) {
    const double bound = 2.0 * (w.omega1() + w.omega2());
    const double margin = bound - std::fabs(e.e_minus());
    return SetVerdict::from_margin(SetName::ClassicalAvg, margin);
}

SetVerdict classical_peak_membership(const Correlations& e, const Thresholds& w) {
    const double theta = (w.omega1() + w.omega2() >= 1.0 - 1e-12) ? 1.0 : 0.0;
    const double margin = 2.0 * theta - std::fabs(e.e_minus());
    return SetVerdict::from_margin(SetName::ClassicalPeak, margin);
}

std::pair<double, double> det_avg_interval(double e_x, const Thresholds& w) {
    double lo = -1.0;
    double hi = 1.0;
    const double p_plus = 1.0 + e_x;   // 2 p, weight of the E_x = +1 branch
    const double p_minus = 1.0 - e_x;  // 2 (1 - p)
    if (p_plus > 0.0) {
        const double hc =
            h_clamped(2.0 * w.omega1() / p_plus, 2.0 * w.omega2() / p_plus);
        lo = p_plus * hc * hc - 1.0;
    }
    if (p_minus > 0.0) {
        const double hc =
            h_clamped(2.0 * w.omega1() / p_minus, 2.0 * w.omega2() / p_minus);
        hi = 1.0 - p_minus * hc * hc;
    }
    return {lo, hi};
}

SetVerdict det_avg_membership(const Correlations& e, int x, const Thresholds& w) {
    require_input_index(x);
    const double e_x = (x == 1) ? e.e1() : e.e2();
    const double e_xbar = (x == 1) ? e.e2() : e.e1();
    const auto [lo, hi] = det_avg_interval(e_x, w);
    const double margin = std::fmin(e_xbar - lo, hi - e_xbar);
    return SetVerdict::from_margin(x == 1 ? SetName::DetAvg1 : SetName::DetAvg2,
                                   margin);
}

SetVerdict det_peak_membership(const Correlations& e, int x, const Thresholds& w) {
    require_input_index(x);
    const double e_x = (x == 1) ? e.e1() : e.e2();
    const double e_xbar = (x == 1) ? e.e2() : e.e1();
    const double h = h_value(w.omega1(), w.omega2());
    const double h2 = h * h;
    const double margin = (1.0 - h2) - std::fabs(e_x * h2 - e_xbar);
    return SetVerdict::from_margin(
        x == 1 ? SetName::DetPeak1 : SetName::DetPeak2, margin);
}

SetVerdict membership(SetName set, const Correlations& e, const Thresholds& w) {
    switch (set) {
        case SetName::Quantum: return quantum_membership(e, w);
        case SetName::ClassicalAvg: return classical_avg_membership(e, w);
        case SetName::ClassicalPeak: return classical_peak_membership(e, w);
        case SetName::DetAvg1: return det_avg_membership(e, 1, w);
        case SetName::DetAvg2: return det_avg_membership(e, 2, w);
        case SetName::DetPeak1: return det_peak_membership(e, 1, w);
        case SetName::DetPeak2: return det_peak_membership(e, 2, w);
    }
    throw std::invalid_argument("membership: bad set");
}

namespace {

// One piece of a closed boundary chain, parametrized over t in [0,1).
// The end point of a piece coincides with the start of the next one.
struct ChainPiece {
    std::function<Correlations(double)> at;
    double length;  // polyline estimate, used to apportion sample points
};

ChainPiece line_piece(const Correlations& a, const Correlations& b) {
    const double len = std::hypot(b.e1() - a.e1(), b.e2() - a.e2());
    return ChainPiece{
        [a, b](double t) {
            return Correlations(a.e1() + t * (b.e1() - a.e1()),
                                a.e2() + t * (b.e2() - a.e2()));
        },
        len};
}

ChainPiece curve_piece(std::function<Correlations(double)> at) {
    double len = 0.0;
    Correlations prev = at(0.0);
    for (int i = 1; i <= 64; ++i) {
        Correlations cur = at(i / 64.0);
        len += std::hypot(cur.e1() - prev.e1(), cur.e2() - prev.e2());
        prev = cur;
    }
    return ChainPiece{std::move(at), len};
}

BoundaryCurve sample_chain(const std::vector<ChainPiece>& pieces, int n) {
    const int k = static_cast<int>(pieces.size());
    if (n < k) {
        throw std::invalid_argument("boundary_curve: need at least " +
                                    std::to_string(k) + " samples for this set");
    }
    // Every piece keeps its start point; extras go by largest remainder on
    // piece length.
    double total = 0.0;
    for (const auto& p : pieces) total += p.length;
    std::vector<int> counts(pieces.size(), 1);
    std::vector<std::pair<double, int>> remainders;
    int assigned = k;
    for (int i = 0; i < k; ++i) {
        const double share = (n - k) * pieces[i].length / total;
        counts[i] += static_cast<int>(std::floor(share));
        assigned += static_cast<int>(std::floor(share));
        remainders.push_back({share - std::floor(share), i});
    }
    std::sort(remainders.begin(), remainders.end(),
              [](const auto& a, const auto& b) { return a.first > b.first; });
    for (int j = 0; assigned < n; ++j, ++assigned) counts[remainders[j % k].second]++;

    BoundaryCurve out;
    out.points.reserve(n);
    for (int i = 0; i < k; ++i) {
        for (int j = 0; j < counts[i]; ++j) {
            out.points.push_back(pieces[i].at(static_cast<double>(j) / counts[i]));
        }
    }
    return out;
}

BoundaryCurve diagonal_segment() {
    BoundaryCurve out;
    out.points = {Correlations(1.0, 1.0), Correlations(-1.0, -1.0)};
    out.degenerate = true;
    return out;
}

std::vector<ChainPiece> box_chain() {
    const Correlations a(1, 1), b(-1, 1), c(-1, -1), d(1, -1);
    return {line_piece(a, b), line_piece(b, c), line_piece(c, d),
            line_piece(d, a)};
}

// Hexagon |E-| <= b, |E_x| <= 1, counterclockwise from (1, 1).
std::vector<ChainPiece> band_chain(double b) {
    const Correlations v0(1, 1), v1(1 - b, 1), v2(-1, b - 1), v3(-1, -1),
        v4(b - 1, -1), v5(1, 1 - b);
    return {line_piece(v0, v1), line_piece(v1, v2), line_piece(v2, v3),
            line_piece(v3, v4), line_piece(v4, v5), line_piece(v5, v0)};
}

std::vector<ChainPiece> quantum_chain(double gamma) {
    const double g2 = gamma * gamma;
    const double alpha = std::acos(gamma);
    const auto arc = [gamma](double t0, double t1) {
        return curve_piece([gamma, t0, t1](double t) {
            const double th = t0 + t * (t1 - t0);
            const double ep = 2.0 * gamma * std::cos(th);
            const double em = 2.0 * std::sqrt(1.0 - gamma * gamma) * std::sin(th);
            return Correlations(0.5 * (ep + em), 0.5 * (ep - em));
        });
    };
    const Correlations c11(1, 1), cm11(-1, -1);
    const Correlations top_in(2.0 * g2 - 1.0, 1.0), left_in(-1.0, 1.0 - 2.0 * g2);
    const Correlations bot_in(1.0 - 2.0 * g2, -1.0), right_in(1.0, 2.0 * g2 - 1.0);
    return {line_piece(c11, top_in),
            arc(-alpha, -(kPi - alpha)),   // upper-left arc
            line_piece(left_in, cm11),
            line_piece(cm11, bot_in),
            arc(kPi - alpha, alpha),       // lower-right arc
            line_piece(right_in, c11)};
}

std::vector<ChainPiece> det_avg_chain(int x, const Thresholds& w) {
    const double h0 = h_value(w.omega1(), w.omega2());
    const double h02 = h0 * h0;
    const auto hi_curve = [x, w](double t) {
        // E_x runs 1 -> -1
        const double ex = 1.0 - 2.0 * t;
        const double exbar = det_avg_interval(ex, w).second;
        return (x == 1) ? Correlations(ex, exbar) : Correlations(exbar, ex);
    };
    const auto lo_curve = [x, w](double t) {
        // E_x runs -1 -> 1
        const double ex = -1.0 + 2.0 * t;
        const double exbar = det_avg_interval(ex, w).first;
        return (x == 1) ? Correlations(ex, exbar) : Correlations(exbar, ex);
    };
    const Correlations c11(1, 1), cm11(-1, -1);
    if (x == 1) {
        const Correlations left_in(-1.0, 1.0 - 2.0 * h02);
        const Correlations right_in(1.0, 2.0 * h02 - 1.0);
        return {curve_piece(hi_curve), line_piece(left_in, cm11),
                curve_piece(lo_curve), line_piece(right_in, c11)};
    }
    const Correlations top_in(2.0 * h02 - 1.0, 1.0);
    const Correlations bot_in(1.0 - 2.0 * h02, -1.0);
    return {line_piece(c11, top_in), curve_piece(lo_curve),
            line_piece(cm11, bot_in), curve_piece(hi_curve)};
}

std::vector<ChainPiece> det_peak_chain(int x, const Thresholds& w) {
    const double h = h_value(w.omega1(), w.omega2());
    const double h2 = h * h;
    const Correlations c11(1, 1), cm11(-1, -1);
    if (x == 1) {
        const Correlations left_in(-1.0, 1.0 - 2.0 * h2);
        const Correlations right_in(1.0, 2.0 * h2 - 1.0);
        return {line_piece(c11, left_in), line_piece(left_in, cm11),
                line_piece(cm11, right_in), line_piece(right_in, c11)};
    }
    const Correlations top_in(2.0 * h2 - 1.0, 1.0);
    const Correlations bot_in(1.0 - 2.0 * h2, -1.0);
    return {line_piece(c11, top_in), line_piece(top_in, cm11),
            line_piece(cm11, bot_in), line_piece(bot_in, c11)};
}

}  // namespace

BoundaryCurve boundary_curve(SetName set, const Thresholds& w, int n) {
    if (n < 2) throw std::invalid_argument("boundary_curve: n must be >= 2");
    const double gamma = std::fmax(0.0, h_value(w.omega1(), w.omega2()));
    const bool saturated = w.omega1() + w.omega2() >= 1.0 - 1e-12;

    switch (set) {
        case SetName::Quantum:
            if (gamma >= 1.0 - 1e-12) return diagonal_segment();
            if (gamma <= 1e-12) return sample_chain(box_chain(), n);
            return sample_chain(quantum_chain(gamma), n);
        case SetName::ClassicalAvg: {
            const double b = 2.0 * (w.omega1() + w.omega2());
            if (b <= 1e-12) return diagonal_segment();
            if (b >= 2.0 - 1e-12) return sample_chain(box_chain(), n);
            return sample_chain(band_chain(b), n);
        }
        case SetName::ClassicalPeak:
            if (!saturated) return diagonal_segment();
            return sample_chain(box_chain(), n);
        case SetName::DetAvg1:
        case SetName::DetAvg2: {
            const int x = (set == SetName::DetAvg1) ? 1 : 2;
            if (gamma >= 1.0 - 1e-12) return diagonal_segment();
            if (gamma <= 1e-12) return sample_chain(box_chain(), n);
            return sample_chain(det_avg_chain(x, w), n);
        }
        case SetName::DetPeak1:
        case SetName::DetPeak2: {
            const int x = (set == SetName::DetPeak1) ? 1 : 2;
            if (gamma >= 1.0 - 1e-12) return diagonal_segment();
            if (gamma <= 1e-12) return sample_chain(box_chain(), n);
            return sample_chain(det_peak_chain(x, w), n);
        }
    }
    throw std::invalid_argument("boundary_curve: bad set");
}

Correlations QubitRealization::correlations() const {
    const double gamma = std::cos(theta1 + theta2);
    const double e_plus =
        2.0 * (p0 - p1) + 2.0 * p2 * gamma * std::cos(theta_m);
    const double e_minus =
        2.0 * p2 * std::sqrt(std::fmax(0.0, 1.0 - gamma * gamma)) *
        std::sin(theta_m);
    return Correlations(0.5 * (e_plus + e_minus), 0.5 * (e_plus - e_minus));
}

QubitRealization realize_point(const Correlations& e, const Thresholds& w) {
    const SetVerdict q = quantum_membership(e, w);
    if (!q.member) {
        throw std::domain_error(
            "realize_point: point outside the quantum set, g - h deficit = " +
            std::to_string(-q.margin));
    }
    QubitRealization r{};
    r.theta1 = std::asin(std::sqrt(w.omega1()));
    r.theta2 = std::asin(std::sqrt(w.omega2()));
    const double gamma = std::cos(r.theta1 + r.theta2);
    const double e_plus = e.e_plus();
    const double e_minus = e.e_minus();

    const auto finish_diagonal = [&]() {
        r.p2 = 0.0;
        r.theta_m = kPi / 2.0;  // canonical direction for the trivial mixture
        r.p0 = 0.5 * (1.0 + 0.5 * e_plus);
        r.p1 = 1.0 - r.p0;
        return r;
    };
    if (std::fabs(e_minus) <= 1e-15) return finish_diagonal();
    if (gamma >= 1.0 - 1e-15) {
        // Indistinguishable states force E1 = E2; membership already implies
        // |E-| ~ 0 here, up to the margin tolerance.
        return finish_diagonal();
    }

    const double sg = (e_minus >= 0.0) ? 1.0 : -1.0;
    const double semi_minor = 2.0 * std::sqrt(1.0 - gamma * gamma);
    // Weights as functions of t = |theta_m|: p2 follows from matching E-,
    // the remainder splits between (1,1) and (-1,-1) to match E+.
    const auto weights = [&](double t) {
        const double p2 = std::fabs(e_minus) / (semi_minor * std::sin(t));
        const double residual = e_plus - p2 * 2.0 * gamma * std::cos(sg * t);
        return std::pair<double, double>{p2, residual};
    };
    const auto excess = [&](double t) {
        const auto [p2, residual] = weights(t);
        return std::fmin(1.0 - p2, (1.0 - p2) - 0.5 * std::fabs(residual));
    };

    // Smallest p2 corresponds to the largest sin(t); scan for the feasible
    // t closest to pi/2, then bisect onto the feasibility boundary.
    double best_t = -1.0;
    if (excess(kPi / 2.0) >= 0.0) {
        best_t = kPi / 2.0;
    } else {
        const int grid = 4096;
        double feas = -1.0, infeas = -1.0;
        for (int i = 1; i < grid; ++i) {
            const double t = kPi * i / grid;
            if (excess(t) >= 0.0 &&
                (feas < 0.0 || std::sin(t) > std::sin(feas))) {
                feas = t;
                infeas = (t < kPi / 2.0) ? kPi * (i + 1) / grid
                                         : kPi * (i - 1) / grid;
            }
        }
        if (feas < 0.0) {
            // Margin-tolerance boundary point; fall back to the pure ellipse
            // extreme at t = pi/2 with weights clamped below.
            best_t = kPi / 2.0;
        } else {
            double lo = feas, hi = infeas;
            while (std::fabs(hi - lo) > 1e-10) {
                const double mid = 0.5 * (lo + hi);
                (excess(mid) >= 0.0 ? lo : hi) = mid;
            }
            best_t = lo;
        }
    }

    auto [p2, residual] = weights(best_t);
    p2 = std::fmin(1.0, p2);
    r.p2 = p2;
    r.theta_m = sg * best_t;
    r.p0 = std::fmax(0.0, 0.5 * ((1.0 - p2) + 0.5 * residual));
    r.p1 = std::fmax(0.0, 1.0 - r.p2 - r.p0);
    return r;
}

}  // namespace semidi
