#ifndef SEMIDI_CORE_SETS_HPP
#define SEMIDI_CORE_SETS_HPP

#include <utility>
#include <vector>

#include "semidi/types.hpp"

namespace semidi {

// g(E1, E2) = ( sqrt(1+E1)sqrt(1+E2) + sqrt(1-E1)sqrt(1-E2) ) / 2.
// Largest overlap compatible with the correlation pair; in [0, 1].
double g_value(const Correlations& e);

// h(H1, H2) = sqrt(1-H1)sqrt(1-H2) - sqrt(H1 H2).
// Tight lower bound on the scalar product of two states with expectations
// (H1, H2). Requires H1, H2 >= 0 and H1 + H2 <= 1.
double h_value(double h1, double h2);

// h extended outside the simplex: zero whenever h1 + h2 > 1 or either
// argument exceeds 1 (orthogonal states become feasible, so the overlap
// constraint is vacuous). Requires h1, h2 >= 0.
double h_clamped(double h1, double h2);

// gamma = h(omega1, omega2).
OverlapBound overlap_lower_bound(const Thresholds& w);

// Point on the ellipse (E+/2g)^2 + (E-/2 sqrt(1-g^2))^2 = 1:
//   E+ = 2 gamma cos(theta_m),  E- = 2 sqrt(1-gamma^2) sin(theta_m).
// Requires 0 < gamma < 1; the degenerate limits are the diagonal segment
// (gamma = 1) and the full square (gamma = 0).
Correlations ellipse_point(const OverlapBound& gamma, double theta_m);

// Quantum set Q: member iff g(E1, E2) >= h(omega1, omega2).
// The same verdict applies to the shared-randomness, max-average and
// max-peak variants (all four sets coincide).
SetVerdict quantum_membership(const Correlations& e, const Thresholds& w);

// Quantum maximum of |E1 - E2|:
//   2 ( sqrt(w1) sqrt(1-w2) + sqrt(1-w1) sqrt(w2) ).
double tsirelson_max_eminus(const Thresholds& w);

// Optimal probability of guessing the input from the outcome:
//   (1 + |E1 - E2| / 2) / 2.
double guessing_probability(const Correlations& e);

// Classical polytope under the max-average assumption:
// |E1 - E2| <= 2 (omega1 + omega2).
SetVerdict classical_avg_membership(const Correlations& e, const Thresholds& w);

// Classical set under the max-peak assumption: |E1 - E2| <= 2 Theta(w1 + w2)
// with Theta(z) = 0 for z < 1 and Theta(1) = 1 (measure-zero diagonal
// segment unless the budget is saturated).
SetVerdict classical_peak_membership(const Correlations& e, const Thresholds& w);

// Allowed interval [lo, hi] for E_xbar given E_x, for the set with
// deterministic input x under the max-average assumption:
//   lo = (1 + E_x) h_clamped(2w1/(1+E_x), 2w2/(1+E_x))^2 - 1
//   hi = 1 - (1 - E_x) h_clamped(2w1/(1-E_x), 2w2/(1-E_x))^2
// Vanishing-denominator branches are vacuous ([-1,1] endpoint).
std::pair<double, double> det_avg_interval(double e_x, const Thresholds& w);

// Deterministic-input set under the max-average assumption.
// x is the input whose outcome is predetermined, in {1, 2}.
SetVerdict det_avg_membership(const Correlations& e, int x, const Thresholds& w);

// Deterministic-input set under the max-peak assumption:
// |E_x h^2(w1, w2) - E_xbar| <= 1 - h^2(w1, w2).
SetVerdict det_peak_membership(const Correlations& e, int x, const Thresholds& w);

// Verdict for any named set at the given thresholds.
SetVerdict membership(SetName set, const Correlations& e, const Thresholds& w);

struct BoundaryCurve {
    std::vector<Correlations> points;  // closed chain, counterclockwise
    bool degenerate = false;           // measure-zero set (diagonal segment)
};

// Closed polygonal boundary chain of the named set, counterclockwise
// starting from the point with maximal E1, then maximal E2. Polytopes return
// their vertices with interpolation up to n points; curved sets sample their
// arcs. Degenerate sets return the two segment endpoints.
BoundaryCurve boundary_curve(SetName set, const Thresholds& w, int n);

// Explicit qubit realization of a point in the quantum set: theta_x =
// asin(sqrt(omega_x)), measurement weights found by decomposition over
// (1,1), (-1,-1) and one ellipse point. Throws if the point is outside Q.
QubitRealization realize_point(const Correlations& e, const Thresholds& w);

}  // namespace semidi

#endif  // SEMIDI_CORE_SETS_HPP
