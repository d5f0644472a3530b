#include <cmath>
#include <numbers>
#include <random>

#include <doctest.h>

#include "semidi/core_sets.hpp"

using namespace semidi;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_CASE("g_value matches the closed form") {
    CHECK(g_value(Correlations(1, 1)) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(g_value(Correlations(1, -1)) == doctest::Approx(0.0).epsilon(1e-14));
    // Boundary point saturating h(0.15, 0.15) = 0.70.
    CHECK(g_value(Correlations(0.714143, -0.714143)) ==
          doctest::Approx(0.7).epsilon(1e-6));
}

TEST_CASE("correlations reject out-of-range values") {
    CHECK_THROWS_AS(Correlations(1.5, 0), std::invalid_argument);
    CHECK_THROWS_AS(Correlations(0, -2), std::invalid_argument);
}

TEST_CASE("h_value and its domain") {
    CHECK(h_value(0, 0) == doctest::Approx(1.0));
    CHECK(h_value(0.5, 0.5) == doctest::Approx(0.0).epsilon(1e-14));
    CHECK(h_value(0.15, 0.15) == doctest::Approx(0.70).epsilon(1e-12));
    CHECK_THROWS_AS(h_value(0.6, 0.6), std::invalid_argument);
    CHECK_THROWS_AS(h_value(-0.1, 0.2), std::invalid_argument);
}

TEST_CASE("h_clamped extends by zero outside the simplex") {
    CHECK(h_clamped(0.6, 0.6) == 0.0);
    CHECK(h_clamped(1.3, 0.0) == 0.0);
    CHECK(h_clamped(0.3, 0.3) == doctest::Approx(0.40).epsilon(1e-12));
    CHECK(h_clamped(0.0, 0.2) == doctest::Approx(std::sqrt(0.8)).epsilon(1e-12));
    CHECK_THROWS_AS(h_clamped(-0.1, 0.2), std::invalid_argument);
}

TEST_CASE("overlap_lower_bound") {
    CHECK(overlap_lower_bound(Thresholds(0, 0)).gamma() == doctest::Approx(1.0));
    CHECK(overlap_lower_bound(Thresholds(0.15, 0.15)).gamma() ==
          doctest::Approx(0.70));
    // Matches the on-off keying value h = sqrt(1 - 0.51).
    CHECK(overlap_lower_bound(Thresholds(0.51, 0)).gamma() ==
          doctest::Approx(0.70));
}

TEST_CASE("ellipse_point endpoints and degeneracy") {
    const Correlations top = ellipse_point(OverlapBound(0.82), 0.0);
    CHECK(top.e1() == doctest::Approx(0.82).epsilon(1e-14));
    CHECK(top.e2() == doctest::Approx(0.82).epsilon(1e-14));
    const Correlations side = ellipse_point(OverlapBound(0.70), kPi / 2);
    CHECK(side.e1() == doctest::Approx(std::sqrt(0.51)).epsilon(1e-12));
    CHECK(side.e2() == doctest::Approx(-std::sqrt(0.51)).epsilon(1e-12));
    CHECK_THROWS_AS(ellipse_point(OverlapBound(0.0), 0.3), std::domain_error);
    CHECK_THROWS_AS(ellipse_point(OverlapBound(1.0), 0.3), std::domain_error);
}

TEST_CASE("ellipse consistency and boundary saturation sweep") {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    for (int i = 0; i < 2000; ++i) {
        const double gamma = 0.05 + 0.9 * unif(rng);
        const double theta = 2.0 * kPi * unif(rng);
        const Correlations p = ellipse_point(OverlapBound(gamma), theta);
        const double a = p.e_plus() / (2.0 * gamma);
        const double b = p.e_minus() / (2.0 * std::sqrt(1.0 - gamma * gamma));
        CHECK(a * a + b * b == doctest::Approx(1.0).epsilon(1e-12));
        // Bold arcs (|theta| in [acos(gamma), pi - acos(gamma)]) saturate g.
        const double alpha = std::acos(gamma);
        const double t = std::fabs(std::remainder(theta, 2.0 * kPi));
        if (t > alpha + 1e-9 && t < kPi - alpha - 1e-9) {
            CHECK(g_value(p) == doctest::Approx(gamma).epsilon(1e-9));
        } else {
            CHECK(g_value(p) >= gamma - 1e-12);
        }
    }
}

TEST_CASE("quantum membership") {
    const Thresholds w(0.15, 0.15);
    // g(t, -t) = sqrt(1 - t^2), so t = sqrt(0.51) saturates h = 0.70.
    const double t = std::sqrt(0.51);
    const SetVerdict boundary = quantum_membership(Correlations(t, -t), w);
    CHECK(boundary.member);
    CHECK(std::fabs(boundary.margin) < 1e-12);
    CHECK_FALSE(quantum_membership(Correlations(0.9, -0.9), w).member);
    for (double c : {-1.0, -0.3, 0.0, 0.7, 1.0}) {
        CHECK(quantum_membership(Correlations(c, c), Thresholds(0, 0)).member);
    }
}

TEST_CASE("quantum margin monotone in the thresholds") {
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    for (int i = 0; i < 500; ++i) {
        const Correlations e(2.0 * unif(rng) - 1.0, 2.0 * unif(rng) - 1.0);
        const double w1 = 0.4 * unif(rng), w2 = 0.4 * unif(rng);
        const double base = quantum_membership(e, Thresholds(w1, w2)).margin;
        CHECK(quantum_membership(e, Thresholds(w1 + 0.05, w2)).margin >=
              base - 1e-12);
        CHECK(quantum_membership(e, Thresholds(w1, w2 + 0.05)).margin >=
              base - 1e-12);
    }
}

TEST_CASE("tsirelson analogue") {
    CHECK(tsirelson_max_eminus(Thresholds(0.15, 0.15)) ==
          doctest::Approx(1.4283).epsilon(2e-4));
    CHECK(tsirelson_max_eminus(Thresholds(0, 0)) == 0.0);
    CHECK(tsirelson_max_eminus(Thresholds(0.5, 0.5)) == doctest::Approx(2.0));
}

TEST_CASE("guessing probability") {
    CHECK(guessing_probability(Correlations(1, -1)) == doctest::Approx(1.0));
    CHECK(guessing_probability(Correlations(0.3, 0.3)) == doctest::Approx(0.5));
    CHECK(guessing_probability(Correlations(0.714143, -0.714143)) ==
          doctest::Approx(0.857).epsilon(1e-3));
}

TEST_CASE("classical average membership") {
    const Thresholds w(0.15, 0.15);
    const SetVerdict onb = classical_avg_membership(Correlations(0.3, -0.3), w);
    CHECK(onb.member);
    CHECK(onb.margin == doctest::Approx(0.0).epsilon(1e-14));
    CHECK(classical_avg_membership(Correlations(1, 1), Thresholds(0, 0)).member);
    // Ideal-detector on-off keying point sits on the boundary.
    const SetVerdict ook =
        classical_avg_membership(Correlations(0.02, -1), Thresholds(0.51, 0));
    CHECK(std::fabs(ook.margin) < 1e-12);
}

TEST_CASE("classical peak membership") {
    const Thresholds w(0.1, 0.1);
    CHECK(classical_peak_membership(Correlations(0.5, 0.5), w).member);
    CHECK_FALSE(classical_peak_membership(Correlations(0.5, 0.4999), w).member);
    CHECK(classical_peak_membership(Correlations(1, -1), Thresholds(0.5, 0.5))
              .member);
}

TEST_CASE("det-avg membership") {
    const Thresholds w(0.15, 0.15);
    const SetVerdict corner = det_avg_membership(Correlations(1, -0.02), 1, w);
    CHECK(corner.member);
    CHECK(std::fabs(corner.margin) < 1e-12);
    const SetVerdict mid = det_avg_membership(Correlations(0, -0.84), 1, w);
    CHECK(std::fabs(mid.margin) < 1e-12);
    CHECK_FALSE(
        det_avg_membership(Correlations(0.714143, -0.714143), 1, w).member);
    CHECK_THROWS_AS(det_avg_membership(Correlations(0, 0), 3, w),
                    std::invalid_argument);
}

TEST_CASE("det-peak membership") {
    const Thresholds w(0.15, 0.15);
    const SetVerdict corner = det_peak_membership(Correlations(1, -0.02), 1, w);
    CHECK(corner.member);
    CHECK(std::fabs(corner.margin) < 1e-12);
    CHECK(det_peak_membership(Correlations(0, 0), 1, w).member);
    // OOK at eta = 0.25 with omega1 = 0.51.
    CHECK_FALSE(det_peak_membership(Correlations(-0.6733200530681511, -1), 1,
                                    Thresholds(0.51, 0))
                    .member);
    CHECK_THROWS_AS(det_peak_membership(Correlations(0, 0), 0, w),
                    std::invalid_argument);
}

TEST_CASE("det-peak corner intervals") {
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    for (int i = 0; i < 200; ++i) {
        const double w1 = 0.5 * unif(rng), w2 = 0.5 * unif(rng);
        const Thresholds w(w1, w2);
        const double h2 = h_value(w1, w2) * h_value(w1, w2);
        // E_x = +1: allowed E_xbar interval exactly [2h^2 - 1, 1].
        CHECK(std::fabs(
                  det_peak_membership(Correlations(1, 2 * h2 - 1), 1, w).margin) <
              1e-12);
        CHECK(det_peak_membership(Correlations(1, 1), 1, w).member);
        CHECK_FALSE(
            det_peak_membership(Correlations(1, 2 * h2 - 1 - 1e-6), 1, w).member);
        // E_x = -1: interval [-1, 1 - 2h^2].
        CHECK(std::fabs(
                  det_peak_membership(Correlations(-1, 1 - 2 * h2), 1, w).margin) <
              1e-12);
        CHECK_FALSE(
            det_peak_membership(Correlations(-1, 1 - 2 * h2 + 1e-6), 1, w).member);
    }
}

TEST_CASE("verdict symmetries") {
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    for (int i = 0; i < 400; ++i) {
        const Correlations e(2.0 * unif(rng) - 1.0, 2.0 * unif(rng) - 1.0);
        const Correlations neg(-e.e1(), -e.e2());
        const Correlations swapped(e.e2(), e.e1());
        const double w1 = 0.5 * unif(rng), w2 = 0.5 * unif(rng);
        const Thresholds w(w1, w2);
        const Thresholds ws(w2, w1);
        for (SetName s : kAllSets) {
            // Global sign flip preserves every verdict.
            CHECK(membership(s, e, w).member == membership(s, neg, w).member);
        }
        // Input swap (with threshold swap) preserves quantum and classical.
        for (SetName s : {SetName::Quantum, SetName::ClassicalAvg,
                          SetName::ClassicalPeak}) {
            CHECK(membership(s, e, w).member == membership(s, swapped, ws).member);
        }
        // ... and exchanges the two det-x sets.
        CHECK(membership(SetName::DetAvg1, e, w).member ==
              membership(SetName::DetAvg2, swapped, ws).member);
        CHECK(membership(SetName::DetPeak1, e, w).member ==
              membership(SetName::DetPeak2, swapped, ws).member);
    }
}

TEST_CASE("set inclusion chain on a grid") {
    std::mt19937_64 rng(17);
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    for (int trial = 0; trial < 12; ++trial) {
        const double w1 = 0.5 * unif(rng), w2 = 0.5 * unif(rng);
        const Thresholds w(w1, w2);
        for (int i = 0; i <= 60; ++i) {
            for (int j = 0; j <= 60; ++j) {
                const Correlations e(-1.0 + 2.0 * i / 60, -1.0 + 2.0 * j / 60);
                const bool c_peak = classical_peak_membership(e, w).member;
                const bool c_avg = classical_avg_membership(e, w).member;
                const bool q = quantum_membership(e, w).member;
                for (int x : {1, 2}) {
                    const bool d_avg = det_avg_membership(e, x, w).member;
                    const bool d_peak = det_peak_membership(e, x, w).member;
                    if (c_peak) CHECK(c_avg);
                    if (c_avg) CHECK(d_avg);
                    if (c_peak) CHECK(d_peak);
                    if (d_peak) CHECK(d_avg);
                    if (d_avg) CHECK(q);
                }
            }
        }
    }
}

TEST_CASE("boundary curve: classical hexagon") {
    const BoundaryCurve hex =
        boundary_curve(SetName::ClassicalAvg, Thresholds(0.15, 0.15), 6);
    REQUIRE(hex.points.size() == 6);
    CHECK_FALSE(hex.degenerate);
    const double expected[6][2] = {{1, 1},   {0.4, 1},   {-1, -0.4},
                                   {-1, -1}, {-0.4, -1}, {1, 0.4}};
    for (int i = 0; i < 6; ++i) {
        CHECK(hex.points[i].e1() == doctest::Approx(expected[i][0]).epsilon(1e-12));
        CHECK(hex.points[i].e2() == doctest::Approx(expected[i][1]).epsilon(1e-12));
    }
}

TEST_CASE("boundary curve: quantum degenerate limits") {
    const BoundaryCurve seg =
        boundary_curve(SetName::Quantum, Thresholds(0, 0), 100);
    CHECK(seg.degenerate);
    REQUIRE(seg.points.size() == 2);
    const BoundaryCurve box =
        boundary_curve(SetName::Quantum, Thresholds(0.5, 0.5), 8);
    CHECK_FALSE(box.degenerate);
    double max_e1 = -2;
    for (const auto& p : box.points) max_e1 = std::fmax(max_e1, p.e1());
    CHECK(max_e1 == doctest::Approx(1.0));
}

TEST_CASE("boundary curve points lie on the set boundary") {
    const Thresholds w(0.15, 0.15);
    for (SetName s : kAllSets) {
        const BoundaryCurve curve = boundary_curve(s, w, 256);
        if (curve.degenerate) continue;
        for (const auto& p : curve.points) {
            const SetVerdict v = membership(s, p, w);
            CHECK(v.margin >= -1e-9);
            // Away from the |E_x| = 1 box edges, boundary points saturate
            // the set's defining inequality.
            const bool on_box_edge = std::fabs(p.e1()) >= 1.0 - 1e-9 ||
                                     std::fabs(p.e2()) >= 1.0 - 1e-9;
            if (!on_box_edge) CHECK(v.margin <= 1e-9);
        }
    }
}

TEST_CASE("quantum boundary meets the box at the four ellipse corners") {
    const Thresholds w(0.15, 0.15);
    const double gamma = h_value(0.15, 0.15);
    const double c = 2.0 * gamma * gamma - 1.0;
    const BoundaryCurve curve = boundary_curve(SetName::Quantum, w, 2048);
    for (const auto target : {std::pair{c, 1.0}, std::pair{-1.0, -c},
                              std::pair{-c, -1.0}, std::pair{1.0, c}}) {
        double best = 1e9;
        for (const auto& p : curve.points) {
            best = std::fmin(best, std::hypot(p.e1() - target.first,
                                              p.e2() - target.second));
        }
        CHECK(best < 5e-3);
    }
}

TEST_CASE("quantum boundary |E-| maximum matches the Tsirelson analogue") {
    const Thresholds w(0.15, 0.15);
    const BoundaryCurve curve = boundary_curve(SetName::Quantum, w, 720);
    double max_em = 0.0;
    for (const auto& p : curve.points) {
        max_em = std::fmax(max_em, std::fabs(p.e_minus()));
    }
    CHECK(max_em == doctest::Approx(tsirelson_max_eminus(w)).epsilon(1e-4));
}

TEST_CASE("realize_point canonical cases") {
    const Thresholds w(0.15, 0.15);
    const QubitRealization r1 = realize_point(Correlations(1, 1), w);
    CHECK(r1.p0 == doctest::Approx(1.0));
    CHECK(r1.p2 == doctest::Approx(0.0));
    CHECK(r1.theta_m == doctest::Approx(kPi / 2));

    const double t = std::sqrt(0.51);
    const QubitRealization r2 = realize_point(Correlations(t, -t), w);
    CHECK(r2.p2 == doctest::Approx(1.0).epsilon(1e-4));
    CHECK(r2.theta_m == doctest::Approx(kPi / 2).epsilon(1e-4));

    CHECK_THROWS_AS(realize_point(Correlations(0.9, -0.9), w), std::domain_error);
}

TEST_CASE("realize_point round trip") {
    std::mt19937_64 rng(23);
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    int done = 0;
    while (done < 500) {
        const double w1 = 0.5 * unif(rng), w2 = 0.5 * unif(rng);
        const Thresholds w(w1, w2);
        const Correlations e(2.0 * unif(rng) - 1.0, 2.0 * unif(rng) - 1.0);
        if (!quantum_membership(e, w).member) continue;
        ++done;
        const QubitRealization r = realize_point(e, w);
        CHECK(r.p0 >= 0.0);
        CHECK(r.p1 >= 0.0);
        CHECK(r.p2 >= 0.0);
        CHECK(r.p0 + r.p1 + r.p2 == doctest::Approx(1.0).epsilon(1e-12));
        CHECK(r.h1() == doctest::Approx(w1).epsilon(1e-12));
        CHECK(r.h2() == doctest::Approx(w2).epsilon(1e-12));
        const Correlations back = r.correlations();
        CHECK(back.e1() == doctest::Approx(e.e1()).epsilon(1e-9));
        CHECK(back.e2() == doctest::Approx(e.e2()).epsilon(1e-9));
    }
}
