#ifndef SEMIDI_ORACLE_HPP
#define SEMIDI_ORACLE_HPP

#include <array>
#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include "semidi/types.hpp"

namespace semidi::oracle {

// A concrete quantum realization drawn by the samplers: observable spectrum
// (ground eigenvalue 0, the rest >= 1), two unit state vectors in the
// eigenbasis of H, and a Hermitian measurement with operator norm <= 1.
struct SampledRealization {
    int dim = 2;
    std::vector<double> spectrum;
    std::vector<std::complex<double>> state1;
    std::vector<std::complex<double>> state2;
    std::vector<std::complex<double>> meas;  // dim x dim, row-major

    // Tr[M |state><state|], real part.
    double expectation(const std::vector<std::complex<double>>& state) const;
    double overlap() const;  // |<state1|state2>|
};

struct OracleReport {
    std::string claim;
    long long samples = 0;
    std::uint64_t seed = 0;
    double worst_violation = 0.0;  // most negative slack found
    double tolerance = 0.0;
    bool passed = false;
};

// {claim, samples, seed, worst_violation, tolerance, passed} as a JSON
// document (newline-terminated).
std::string to_json_string(const OracleReport& report);

struct QuantumSampleResult {
    std::vector<Correlations> points;
    OracleReport report;
};

// Draws n dimension-2 realizations with H = diag(0, 1), states with
// sin^2(theta_x) <= omega_x and a uniform relative phase, measurements from
// random mixture weights and a random Bloch direction. The report asserts
// every induced point passes quantum_membership at w (tolerance 1e-9).
QuantumSampleResult sample_quantum_points(const Thresholds& w, long long n,
                                          std::uint64_t seed);

// Empirical support function of the reachable set (random realizations plus
// coordinate-wise golden-section refinement, >= 360 directions) against the
// analytic boundary. Passes when the two-sided gap is <= 1e-2.
OracleReport hull_vs_boundary(const Thresholds& w, long long n,
                              std::uint64_t seed);

// Random spectra (lambda_0 = 0, lambda_i in [1,5]) and random unit vectors
// conditioned to hit Tr[H phi_x] = h_x exactly. Asserts the minimum overlap
// found is >= h(h1, h2) - 1e-9 and that the explicit two-level construction
// attains the bound within 1e-6.
OracleReport overlap_bound_check(double h1, double h2, int dim,
                                 long long trials, std::uint64_t seed);

// The six cost-annotated deterministic behaviors spanning the max-average
// classical polytope: correlations plus the H-budget their realization pays.
struct CostedBehavior {
    double e1, e2;
    double cost1, cost2;
};
inline constexpr std::array<CostedBehavior, 6> kClassicalAtoms = {{
    {1, 1, 0, 0},
    {-1, -1, 0, 0},
    {1, -1, 1, 0},
    {1, -1, 0, 1},
    {-1, 1, 1, 0},
    {-1, 1, 0, 1},
}};

struct ClassicalDecomposition {
    bool feasible = false;
    std::array<double, 6> weights = {};  // over kClassicalAtoms
};

// Linear feasibility: weights over the six atoms reproducing e with total
// H-cost within w. Agrees with classical_avg_membership by construction of
// the polytope; the agreement is what the tests certify.
ClassicalDecomposition classical_decomposition(const Correlations& e,
                                               const Thresholds& w);

// Brute force over the two-branch decomposition of the det-avg set on a
// grid (branch weight p and per-branch budget allocations). Asserts the
// analytic boundary matches within 2e-3 and never lies strictly inside the
// brute-force region by more than 1e-9.
OracleReport det_avg_oracle(int x, const Thresholds& w, int grid,
                            std::uint64_t seed);

// Midpoint concavity of f(x,y) = (sqrt(xy) + sqrt((1-x)(1-y)))^2 plus
// finite-difference Hessian conditions (trace <= 1e-6, det >= -1e-6).
OracleReport concavity_check(long long trials, std::uint64_t seed);

// Random finite mixtures with components on the quantum boundary at
// budgets averaging within w; asserts every mixture passes
// quantum_membership at w with margin >= -1e-9.
OracleReport mixing_closure_check(const Thresholds& w, long long trials,
                                  std::uint64_t seed);

}  // namespace semidi::oracle

#endif  // SEMIDI_ORACLE_HPP
