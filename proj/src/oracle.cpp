#include "semidi/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numbers>
#include <random>
#include <stdexcept>

#include <json.hpp>

#include "semidi/core_sets.hpp"

namespace semidi::oracle {

namespace {

constexpr double kPi = std::numbers::pi;

std::uint64_t splitmix64(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

// Per-sample generator: mt19937_64 seeded from a counter-based hash, so a
// parallel evaluation order cannot change any draw.
std::mt19937_64 sample_rng(std::uint64_t seed, std::uint64_t counter) {
    return std::mt19937_64(splitmix64(seed ^ splitmix64(counter)));
}

using cplx = std::complex<double>;

}  // namespace

double SampledRealization::expectation(const std::vector<cplx>& state) const {
    cplx acc = 0.0;
    for (int i = 0; i < dim; ++i) {
        for (int j = 0; j < dim; ++j) {
            acc += std::conj(state[i]) * meas[i * dim + j] * state[j];
        }
    }
    return acc.real();
}

double SampledRealization::overlap() const {
    cplx acc = 0.0;
    for (int i = 0; i < dim; ++i) acc += std::conj(state1[i]) * state2[i];
    return std::abs(acc);
}

std::string to_json_string(const OracleReport& r) {
    nlohmann::json j = {
        {"claim", r.claim},         {"samples", r.samples},
        {"seed", r.seed},           {"worst_violation", r.worst_violation},
        {"tolerance", r.tolerance}, {"passed", r.passed},
    };
    return j.dump() + "\n";
}

namespace {

// Random measurement (p0 - p1) I + p2 m.sigma as an explicit 2x2 matrix.
std::vector<cplx> random_qubit_measurement(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    std::normal_distribution<double> gauss(0.0, 1.0);
    double a = unif(rng), b = unif(rng);
    if (a > b) std::swap(a, b);
    const double p0 = a, p1 = b - a, p2 = 1.0 - b;
    double mx = gauss(rng), my = gauss(rng), mz = gauss(rng);
    const double norm = std::sqrt(mx * mx + my * my + mz * mz);
    mx /= norm; my /= norm; mz /= norm;
    const double c = p0 - p1;
    return {cplx(c + p2 * mz, 0.0), cplx(p2 * mx, -p2 * my),
            cplx(p2 * mx, p2 * my), cplx(c - p2 * mz, 0.0)};
}

std::vector<cplx> qubit_state(double theta, double phase) {
    return {cplx(std::cos(theta), 0.0),
            std::polar(std::sin(theta), phase)};
}

}  // namespace

QuantumSampleResult sample_quantum_points(const Thresholds& w, long long n,
                                          std::uint64_t seed) {
    QuantumSampleResult result;
    result.points.reserve(static_cast<std::size_t>(std::max<long long>(n, 0)));
    double worst = std::numeric_limits<double>::max();
    for (long long i = 0; i < n; ++i) {
        auto rng = sample_rng(seed, static_cast<std::uint64_t>(i));
        std::uniform_real_distribution<double> unif(0.0, 1.0);
        SampledRealization r;
        r.dim = 2;
        r.spectrum = {0.0, 1.0};
        r.state1 = qubit_state(std::asin(std::sqrt(unif(rng) * w.omega1())), 0.0);
        r.state2 = qubit_state(std::asin(std::sqrt(unif(rng) * w.omega2())),
                               2.0 * kPi * unif(rng));
        r.meas = random_qubit_measurement(rng);
        const Correlations e(r.expectation(r.state1), r.expectation(r.state2));
        worst = std::fmin(worst, quantum_membership(e, w).margin);
        result.points.push_back(e);
    }
    result.report.claim = "quantum-sample";
    result.report.samples = n;
    result.report.seed = seed;
    result.report.worst_violation = (n > 0) ? worst : 0.0;
    result.report.tolerance = 1e-9;
    result.report.passed = result.report.worst_violation >= -1e-9;
    return result;
}

namespace {

// Support of the reachable set in direction u for fixed states: the optimal
// measurement -I <= M <= I gives the trace norm of u1 |phi1><phi1| +
// u2 |phi2><phi2|, which for qubits depends on the states only through their
// overlap c = |<phi1|phi2>|^2.
double support_given_overlap2(double u1, double u2, double c) {
    const double det = u1 * u2 * (1.0 - c);
    const double tr = u1 + u2;
    if (det >= 0.0) return std::fabs(tr);
    return std::sqrt(tr * tr - 4.0 * det);
}

double overlap2_from_params(double s1, double s2, double delta) {
    const double t1 = std::asin(std::sqrt(s1));
    const double t2 = std::asin(std::sqrt(s2));
    const double a = std::cos(t1) * std::cos(t2);
    const double b = std::sin(t1) * std::sin(t2);
    return a * a + b * b + 2.0 * a * b * std::cos(delta);
}

double golden_min(const std::function<double(double)>& f, double lo, double hi,
                  int iters) {
    const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
    double a = lo, b = hi;
    double x1 = b - inv_phi * (b - a), x2 = a + inv_phi * (b - a);
    double f1 = f(x1), f2 = f(x2);
    for (int i = 0; i < iters; ++i) {
        if (f1 < f2) {
            b = x2; x2 = x1; f2 = f1;
            x1 = b - inv_phi * (b - a);
            f1 = f(x1);
        } else {
            a = x1; x1 = x2; f1 = f2;
            x2 = a + inv_phi * (b - a);
            f2 = f(x2);
        }
    }
    return (f1 < f2) ? x1 : x2;
}

}  // namespace

OracleReport hull_vs_boundary(const Thresholds& w, long long n,
                              std::uint64_t seed) {
    if (n < 1000) {
        throw std::invalid_argument("hull_vs_boundary: need n >= 1000 samples");
    }
    struct Params { double s1, s2, delta; };
    std::vector<Params> samples(static_cast<std::size_t>(n));
    std::vector<double> c2(static_cast<std::size_t>(n));
    for (long long i = 0; i < n; ++i) {
        auto rng = sample_rng(seed, static_cast<std::uint64_t>(i));
        std::uniform_real_distribution<double> unif(0.0, 1.0);
        const Params p{unif(rng) * w.omega1(), unif(rng) * w.omega2(),
                       2.0 * kPi * unif(rng)};
        samples[static_cast<std::size_t>(i)] = p;
        c2[static_cast<std::size_t>(i)] = overlap2_from_params(p.s1, p.s2, p.delta);
    }

    const BoundaryCurve analytic = boundary_curve(SetName::Quantum, w, 2048);
    const int directions = 360;
    double max_gap = 0.0;
    for (int d = 0; d < directions; ++d) {
        const double phi = 2.0 * kPi * d / directions;
        const double u1 = std::cos(phi), u2 = std::sin(phi);

        double best = -std::numeric_limits<double>::max();
        std::size_t best_idx = 0;
        for (std::size_t i = 0; i < c2.size(); ++i) {
            const double s = support_given_overlap2(u1, u2, c2[i]);
            if (s > best) { best = s; best_idx = i; }
        }
        // Coordinate-wise golden-section polish of the best sample.
        Params p = samples[best_idx];
        const auto value = [&](const Params& q) {
            return support_given_overlap2(u1, u2,
                                          overlap2_from_params(q.s1, q.s2, q.delta));
        };
        for (int pass = 0; pass < 3; ++pass) {
            p.s1 = golden_min([&](double v) { Params q = p; q.s1 = v; return -value(q); },
                              0.0, w.omega1(), 100);
            p.s2 = golden_min([&](double v) { Params q = p; q.s2 = v; return -value(q); },
                              0.0, w.omega2(), 100);
            p.delta = golden_min([&](double v) { Params q = p; q.delta = v; return -value(q); },
                                 0.0, 2.0 * kPi, 100);
        }
        best = std::fmax(best, value(p));

        double analytic_support = -std::numeric_limits<double>::max();
        for (const Correlations& pt : analytic.points) {
            analytic_support = std::fmax(analytic_support,
                                         u1 * pt.e1() + u2 * pt.e2());
        }
        max_gap = std::fmax(max_gap, std::fabs(best - analytic_support));
    }

    OracleReport report;
    report.claim = "hull-vs-boundary";
    report.samples = n;
    report.seed = seed;
    report.worst_violation = -max_gap;
    report.tolerance = 1e-2;
    report.passed = report.worst_violation >= -report.tolerance;
    return report;
}

OracleReport overlap_bound_check(double h1, double h2, int dim,
                                 long long trials, std::uint64_t seed) {
    if (!(h1 >= 0.0 && h2 >= 0.0 && h1 + h2 <= 1.0 + 1e-12)) {
        throw std::invalid_argument("overlap_bound_check: bad (h1, h2)");
    }
    if (dim < 2) throw std::invalid_argument("overlap_bound_check: dim >= 2");
    if (trials < 1) throw std::invalid_argument("overlap_bound_check: trials >= 1");

    const double bound = h_value(h1, h2);
    double min_overlap = std::numeric_limits<double>::max();

    // Explicit two-level construction attaining the bound.
    {
        SampledRealization r;
        r.dim = dim;
        r.state1.assign(static_cast<std::size_t>(dim), cplx(0.0, 0.0));
        r.state2.assign(static_cast<std::size_t>(dim), cplx(0.0, 0.0));
        const double t1 = std::asin(std::sqrt(h1));
        const double t2 = std::asin(std::sqrt(h2));
        r.state1[0] = std::cos(t1);
        r.state1[1] = std::sin(t1);
        r.state2[0] = std::cos(t2);
        r.state2[1] = -std::sin(t2);
        min_overlap = std::fmin(min_overlap, r.overlap());
    }

    const auto conditioned_state = [&](std::mt19937_64& rng, double target)
        -> std::vector<cplx> {
        std::normal_distribution<double> gauss(0.0, 1.0);
        std::uniform_real_distribution<double> unif(0.0, 1.0);
        std::vector<double> spectrum(static_cast<std::size_t>(dim));
        for (;;) {
            spectrum[0] = 0.0;
            double max_lambda = 0.0;
            for (int i = 1; i < dim; ++i) {
                spectrum[static_cast<std::size_t>(i)] = 1.0 + 4.0 * unif(rng);
                max_lambda = std::fmax(max_lambda, spectrum[static_cast<std::size_t>(i)]);
            }
            if (target > max_lambda) {
                throw std::invalid_argument(
                    "overlap_bound_check: target expectation above the spectrum");
            }
            // Random excited-subspace direction, then the ground-state weight
            // that hits the target expectation exactly.
            std::vector<cplx> v(static_cast<std::size_t>(dim), cplx(0, 0));
            double norm2 = 0.0;
            for (int i = 1; i < dim; ++i) {
                v[static_cast<std::size_t>(i)] = cplx(gauss(rng), gauss(rng));
                norm2 += std::norm(v[static_cast<std::size_t>(i)]);
            }
            double energy = 0.0;
            for (int i = 1; i < dim; ++i) {
                energy += spectrum[static_cast<std::size_t>(i)] *
                          std::norm(v[static_cast<std::size_t>(i)]) / norm2;
            }
            const double beta = target / energy;
            if (beta > 1.0) continue;  // infeasible draw, resample
            std::vector<cplx> state(static_cast<std::size_t>(dim));
            state[0] = std::sqrt(1.0 - beta);
            for (int i = 1; i < dim; ++i) {
                state[static_cast<std::size_t>(i)] =
                    std::sqrt(beta / norm2) * v[static_cast<std::size_t>(i)];
            }
            return state;
        }
    };

    for (long long t = 0; t < trials; ++t) {
        auto rng = sample_rng(seed, static_cast<std::uint64_t>(t));
        SampledRealization r;
        r.dim = dim;
        r.state1 = conditioned_state(rng, h1);
        r.state2 = conditioned_state(rng, h2);
        min_overlap = std::fmin(min_overlap, r.overlap());
    }

    OracleReport report;
    report.claim = "overlap-bound";
    report.samples = trials;
    report.seed = seed;
    report.worst_violation = min_overlap - bound;
    report.tolerance = 1e-9;
    // Soundness (never below the bound) plus tightness (bound attained).
    report.passed = report.worst_violation >= -1e-9 &&
                    report.worst_violation <= 1e-6;
    return report;
}

namespace {

// Phase-1 simplex for { A x = b, x >= 0 }: minimizes the sum of artificial
// variables with Bland's rule. Returns the feasible x, or nullopt.
bool lp_feasible(std::vector<std::vector<double>> a, std::vector<double> b,
                 std::vector<double>& x) {
    const std::size_t m = a.size();
    const std::size_t n = a.empty() ? 0 : a[0].size();
    for (std::size_t i = 0; i < m; ++i) {
        if (b[i] < 0.0) {
            b[i] = -b[i];
            for (auto& v : a[i]) v = -v;
        }
    }
    // Tableau: n structural + m artificial columns, plus rhs.
    const std::size_t cols = n + m;
    std::vector<std::vector<double>> tab(m + 1, std::vector<double>(cols + 1, 0.0));
    std::vector<std::size_t> basis(m);
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < n; ++j) tab[i][j] = a[i][j];
        tab[i][n + i] = 1.0;
        tab[i][cols] = b[i];
        basis[i] = n + i;
    }
    // Objective row: minimize sum of artificials => reduced costs.
    for (std::size_t j = 0; j <= cols; ++j) {
        double s = 0.0;
        for (std::size_t i = 0; i < m; ++i) s += tab[i][j];
        tab[m][j] = (j >= n && j < cols) ? s - 1.0 : s;
    }
    for (int guard = 0; guard < 10000; ++guard) {
        std::size_t pivot_col = cols;
        for (std::size_t j = 0; j < cols; ++j) {
            if (tab[m][j] > 1e-9) { pivot_col = j; break; }  // Bland
        }
        if (pivot_col == cols) break;
        std::size_t pivot_row = m;
        double best_ratio = std::numeric_limits<double>::max();
        for (std::size_t i = 0; i < m; ++i) {
            if (tab[i][pivot_col] > 1e-12) {
                const double ratio = tab[i][cols] / tab[i][pivot_col];
                if (ratio < best_ratio - 1e-12 ||
                    (ratio < best_ratio + 1e-12 && pivot_row < m &&
                     basis[i] < basis[pivot_row])) {
                    best_ratio = ratio;
                    pivot_row = i;
                }
            }
        }
        if (pivot_row == m) break;  // unbounded (cannot happen in phase 1)
        const double pv = tab[pivot_row][pivot_col];
        for (auto& v : tab[pivot_row]) v /= pv;
        for (std::size_t i = 0; i <= m; ++i) {
            if (i == pivot_row) continue;
            const double factor = tab[i][pivot_col];
            if (factor == 0.0) continue;
            for (std::size_t j = 0; j <= cols; ++j) {
                tab[i][j] -= factor * tab[pivot_row][j];
            }
        }
        basis[pivot_row] = pivot_col;
    }
    if (tab[m][cols] > 1e-9) return false;
    x.assign(n, 0.0);
    for (std::size_t i = 0; i < m; ++i) {
        if (basis[i] < n) x[basis[i]] = std::fmax(0.0, tab[i][cols]);
    }
    return true;
}

}  // namespace

ClassicalDecomposition classical_decomposition(const Correlations& e,
                                               const Thresholds& w) {
    // Variables: six atom weights + two cost slacks.
    // Rows: total weight 1, reproduce e1, reproduce e2, cost1 + s1 = w1,
    // cost2 + s2 = w2.
    std::vector<std::vector<double>> a(5, std::vector<double>(8, 0.0));
    std::vector<double> b = {1.0, e.e1(), e.e2(), w.omega1(), w.omega2()};
    for (std::size_t j = 0; j < kClassicalAtoms.size(); ++j) {
        a[0][j] = 1.0;
        a[1][j] = kClassicalAtoms[j].e1;
        a[2][j] = kClassicalAtoms[j].e2;
        a[3][j] = kClassicalAtoms[j].cost1;
        a[4][j] = kClassicalAtoms[j].cost2;
    }
    a[3][6] = 1.0;
    a[4][7] = 1.0;

    ClassicalDecomposition out;
    std::vector<double> x;
    if (lp_feasible(std::move(a), std::move(b), x)) {
        out.feasible = true;
        for (std::size_t j = 0; j < 6; ++j) out.weights[j] = x[j];
    }
    return out;
}

OracleReport det_avg_oracle(int x, const Thresholds& w, int grid,
                            std::uint64_t seed) {
    if (x != 1 && x != 2) throw std::invalid_argument("det_avg_oracle: x in {1,2}");
    if (grid < 50) throw std::invalid_argument("det_avg_oracle: grid >= 50");

    const double w1 = w.omega1(), w2 = w.omega2();
    double max_gap = 0.0;
    double max_soundness_violation = 0.0;

    for (int ip = 0; ip < grid; ++ip) {
        const double p = static_cast<double>(ip) / (grid - 1);
        const double ex = 2.0 * p - 1.0;
        // Brute extremes of E_xbar over per-branch budget allocations. The
        // '+' branch fixes E_x|+ = +1 (its E_xbar lies in [2h^2-1, 1]); the
        // '-' branch fixes E_x|- = -1 (E_xbar in [-1, 1-2h^2]).
        double brute_hi = -std::numeric_limits<double>::max();
        double brute_lo = std::numeric_limits<double>::max();
        for (int i1 = 0; i1 < grid; ++i1) {
            const double a1 = static_cast<double>(i1) / (grid - 1);
            for (int i2 = 0; i2 < grid; ++i2) {
                const double a2 = static_cast<double>(i2) / (grid - 1);
                double hp = 1.0, hm = 1.0;  // h on each branch, vacuous = 0
                if (p > 0.0) hp = h_clamped(a1 * w1 / p, a2 * w2 / p);
                if (p < 1.0) {
                    hm = h_clamped((1.0 - a1) * w1 / (1.0 - p),
                                   (1.0 - a2) * w2 / (1.0 - p));
                }
                const double hi = p * 1.0 + (1.0 - p) * (1.0 - 2.0 * hm * hm);
                const double lo = p * (2.0 * hp * hp - 1.0) - (1.0 - p);
                brute_hi = std::fmax(brute_hi, hi);
                brute_lo = std::fmin(brute_lo, lo);
            }
        }
        const auto [alo, ahi] = det_avg_interval(ex, w);
        max_soundness_violation =
            std::fmax(max_soundness_violation,
                      std::fmax(brute_hi - ahi, alo - brute_lo));
        max_gap = std::fmax(max_gap, std::fmax(std::fabs(ahi - brute_hi),
                                               std::fabs(alo - brute_lo)));
    }

    OracleReport report;
    report.claim = (x == 1) ? "det-avg-boundary-1" : "det-avg-boundary-2";
    report.samples = static_cast<long long>(grid) * grid * grid;
    report.seed = seed;
    report.worst_violation = -max_gap;
    report.tolerance = 2e-3;
    report.passed = max_gap <= 2e-3 && max_soundness_violation <= 1e-9;
    return report;
}

OracleReport concavity_check(long long trials, std::uint64_t seed) {
    if (trials < 1) throw std::invalid_argument("concavity_check: trials >= 1");
    const auto f = [](double x, double y) {
        const double s = std::sqrt(x * y) + std::sqrt((1.0 - x) * (1.0 - y));
        return s * s;
    };
    double worst = std::numeric_limits<double>::max();
    for (long long t = 0; t < trials; ++t) {
        auto rng = sample_rng(seed, static_cast<std::uint64_t>(t));
        std::uniform_real_distribution<double> unif(0.0, 1.0);
        // Midpoint concavity on a random pair.
        const double x1 = unif(rng), y1 = unif(rng);
        const double x2 = unif(rng), y2 = unif(rng);
        const double mid =
            f(0.5 * (x1 + x2), 0.5 * (y1 + y2)) - 0.5 * (f(x1, y1) + f(x2, y2));
        worst = std::fmin(worst, mid);
        // Finite-difference Hessian at a random interior point. The square
        // roots make the higher derivatives blow up towards the simplex
        // edges, so the step scales with the distance to the boundary and
        // the conditions are normalized by the Hessian's own magnitude
        // (the determinant vanishes identically on the diagonal x = y).
        std::uniform_real_distribution<double> interior(0.01, 0.99);
        const long double x = interior(rng), y = interior(rng);
        const long double dist = std::fmin(std::fmin(double(x), 1.0 - double(x)),
                                           std::fmin(double(y), 1.0 - double(y)));
        const long double step = 1e-4L * dist;
        const auto fl = [](long double u, long double v) {
            const long double s =
                sqrtl(u * v) + sqrtl((1.0L - u) * (1.0L - v));
            return s * s;
        };
        const double fxx = static_cast<double>(
            (fl(x + step, y) - 2.0L * fl(x, y) + fl(x - step, y)) /
            (step * step));
        const double fyy = static_cast<double>(
            (fl(x, y + step) - 2.0L * fl(x, y) + fl(x, y - step)) /
            (step * step));
        const double fxy = static_cast<double>(
            (fl(x + step, y + step) - fl(x + step, y - step) -
             fl(x - step, y + step) + fl(x - step, y - step)) /
            (4.0L * step * step));
        const double trace_scale = std::fmax(1.0, std::fabs(fxx) + std::fabs(fyy));
        worst = std::fmin(worst, -(fxx + fyy) / trace_scale);  // trace <= 0
        const double det_scale =
            std::fmax(1.0, std::fmax(std::fabs(fxx * fyy), fxy * fxy));
        worst = std::fmin(worst, (fxx * fyy - fxy * fxy) / det_scale);  // det >= 0
    }
    OracleReport report;
    report.claim = "concavity";
    report.samples = trials;
    report.seed = seed;
    report.worst_violation = worst;
    report.tolerance = 1e-6;
    report.passed = worst >= -1e-6;
    return report;
}

OracleReport mixing_closure_check(const Thresholds& w, long long trials,
                                  std::uint64_t seed) {
    if (trials < 1) throw std::invalid_argument("mixing_closure_check: trials >= 1");
    double worst = std::numeric_limits<double>::max();
    for (long long t = 0; t < trials; ++t) {
        auto rng = sample_rng(seed, static_cast<std::uint64_t>(t));
        std::uniform_real_distribution<double> unif(0.0, 1.0);
        const int k = 1 + static_cast<int>(unif(rng) * 4.0);
        std::vector<double> weight(static_cast<std::size_t>(k));
        double wsum = 0.0;
        for (auto& v : weight) { v = unif(rng) + 1e-6; wsum += v; }
        for (auto& v : weight) v /= wsum;

        std::vector<std::pair<double, double>> budgets(static_cast<std::size_t>(k));
        double avg1 = 0.0, avg2 = 0.0;
        for (int i = 0; i < k; ++i) {
            const double u1 = unif(rng);
            const double u2 = unif(rng) * (1.0 - u1);
            budgets[static_cast<std::size_t>(i)] = {u1, u2};
            avg1 += weight[static_cast<std::size_t>(i)] * u1;
            avg2 += weight[static_cast<std::size_t>(i)] * u2;
        }
        // Per-coordinate rescaling keeps the average within the thresholds
        // while every component budget stays inside the simplex.
        const double scale1 = (avg1 > 0.0) ? std::fmin(1.0, w.omega1() / avg1) : 0.0;
        const double scale2 = (avg2 > 0.0) ? std::fmin(1.0, w.omega2() / avg2) : 0.0;

        double e1 = 0.0, e2 = 0.0;
        for (int i = 0; i < k; ++i) {
            const double hh1 = budgets[static_cast<std::size_t>(i)].first * scale1;
            const double hh2 = budgets[static_cast<std::size_t>(i)].second * scale2;
            const double gamma = std::fmax(0.0, h_value(hh1, hh2));
            Correlations comp(0, 0);
            if (gamma >= 1.0 - 1e-12) {
                const double c = 2.0 * unif(rng) - 1.0;
                comp = Correlations(c, c);  // diagonal boundary, g = gamma = 1
            } else if (gamma <= 1e-12) {
                const double c = 2.0 * unif(rng) - 1.0;
                comp = Correlations(c, -c);  // anti-diagonal at gamma = 0
            } else {
                // Bold-arc parameter range: g(ellipse_point) = gamma there.
                const double alpha = std::acos(gamma);
                double theta = alpha + unif(rng) * (kPi - 2.0 * alpha);
                if (unif(rng) < 0.5) theta = -theta;
                comp = ellipse_point(OverlapBound(gamma), theta);
            }
            e1 += weight[static_cast<std::size_t>(i)] * comp.e1();
            e2 += weight[static_cast<std::size_t>(i)] * comp.e2();
        }
        worst = std::fmin(worst,
                          quantum_membership(Correlations(e1, e2), w).margin);
    }
    OracleReport report;
    report.claim = "mixing-closure";
    report.samples = trials;
    report.seed = seed;
    report.worst_violation = worst;
    report.tolerance = 1e-9;
    report.passed = worst >= -1e-9;
    return report;
}

}  // namespace semidi::oracle
