#include <cmath>

#include <doctest.h>

#include "semidi/core_sets.hpp"
#include "semidi/schemes.hpp"
#include "semidi/special_functions.hpp"

using namespace semidi;

namespace {

// Reference erf via a long-double Maclaurin series (converges fast for
// |x| <= 6; beyond that erf is 1 to within double precision).
long double erf_series(long double x) {
    if (x < 0) return -erf_series(-x);
    if (x > 6.0L) return 1.0L;
    const long double two_over_sqrt_pi =
        1.1283791670955125738961589031215451716881L;
    long double term = x, sum = x;
    for (int n = 1; n < 400; ++n) {
        term *= -x * x / n;
        sum += term / (2 * n + 1);
        if (fabsl(term) < 1e-25L * fabsl(sum)) break;
    }
    return two_over_sqrt_pi * sum;
}

}  // namespace

TEST_CASE("erf matches a series reference to 1e-15 relative") {
    // The alternating Maclaurin series loses digits to cancellation beyond
    // |x| ~ 3, so use it on [-3, 3] and an independent library
    // implementation across the full range.
    for (int i = 0; i <= 1000; ++i) {
        const double x = -3.0 + 6.0 * i / 1000.0;
        const double ref = static_cast<double>(erf_series(x));
        const double got = erf_cody(x);
        const double scale = std::fmax(std::fabs(ref), 1e-300);
        CHECK(std::fabs(got - ref) / scale <= 1e-15);
    }
    for (int i = 0; i <= 1000; ++i) {
        const double x = -8.0 + 16.0 * i / 1000.0;
        const double ref = std::erf(x);
        const double scale = std::fmax(std::fabs(ref), 1e-300);
        CHECK(std::fabs(erf_cody(x) - ref) / scale <= 1e-15);
    }
    CHECK(erf_cody(0.0) == 0.0);
    CHECK(erf_cody(10.0) == 1.0);
    CHECK(erf_cody(-10.0) == -1.0);
}

TEST_CASE("erfc complements erf") {
    for (double x : {-3.0, -0.4, 0.0, 0.1, 0.46875, 1.0, 2.5, 4.0, 8.0}) {
        CHECK(erfc_cody(x) == doctest::Approx(1.0 - erf_cody(x)).epsilon(1e-13));
        CHECK(erfc_cody(x) + erfc_cody(-x) == doctest::Approx(2.0).epsilon(1e-14));
    }
    // Tail stays positive and finite far out.
    CHECK(erfc_cody(15.0) > 0.0);
    CHECK(erfc_cody(15.0) < 1e-90);
}

TEST_CASE("bpsk point values") {
    const SchemePoint pt = bpsk_point(0.5);
    CHECK(pt.e.e1() == doctest::Approx(0.682689492137086).epsilon(1e-14));
    CHECK(pt.e.e2() == doctest::Approx(-0.682689492137086).epsilon(1e-14));
    CHECK(pt.e.e_plus() == 0.0);  // exact antisymmetry
    CHECK(pt.w.omega1() == doctest::Approx(0.22119921692859512).epsilon(1e-14));
    CHECK(pt.w.omega1() == pt.w.omega2());
}

TEST_CASE("bpsk validates the amplitude range") {
    CHECK_THROWS_AS(bpsk_point(std::sqrt(std::log(2.0)) + 1e-6),
                    std::invalid_argument);
    CHECK_THROWS_AS(bpsk_point(-0.1), std::invalid_argument);
    CHECK(bpsk_point(std::sqrt(std::log(2.0))).w.omega1() ==
          doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("bpsk is monotone in the amplitude and always quantum") {
    double prev_e = -1.0, prev_w = -1.0;
    for (int i = 1; i <= 80; ++i) {
        const SchemePoint pt = bpsk_point(0.83 * i / 80.0);
        CHECK(pt.e.e1() > prev_e);
        CHECK(pt.w.omega1() > prev_w);
        prev_e = pt.e.e1();
        prev_w = pt.w.omega1();
        CHECK(quantum_membership(pt.e, pt.w).margin >= -1e-9);
    }
}

TEST_CASE("bpsk beats the classical bound at xi = 0.4031") {
    const SchemePoint pt = bpsk_point(0.4031);
    CHECK(pt.w.omega1() == doctest::Approx(0.14997507806154375).epsilon(1e-13));
    CHECK(std::fabs(pt.e.e_minus()) ==
          doctest::Approx(1.1597449225503078).epsilon(1e-13));
    CHECK_FALSE(classical_avg_membership(pt.e, pt.w).member);
    CHECK(quantum_membership(pt.e, pt.w).member);
}

TEST_CASE("2ask point values") {
    const SchemePoint pt = ask2_point(0.8, 0.4031);
    CHECK(pt.e.e1() == doctest::Approx(0.5296614053204856).epsilon(1e-12));
    CHECK(pt.e.e2() == doctest::Approx(-0.7085030376930386).epsilon(1e-12));
    CHECK(pt.w.omega1() == doctest::Approx(0.14997507806154375).epsilon(1e-13));
    CHECK(pt.w.omega1() == pt.w.omega2());
    CHECK(quantum_membership(pt.e, pt.w).member);
}

TEST_CASE("2ask edge cases and validation") {
    // xi == epsilon: the lower branch is the vacuum, so E2 = -1 exactly.
    CHECK(ask2_point(0.7, 0.7).e.e2() == doctest::Approx(-1.0));
    CHECK_THROWS_AS(ask2_point(0.7, 2.0), std::invalid_argument);  // omega > 1/2
    CHECK_THROWS_AS(ask2_point(0.7, -0.1), std::invalid_argument);
    CHECK_THROWS_AS(ask2_point(-0.1, 0.1), std::invalid_argument);
}

TEST_CASE("ook point values") {
    const double xi = ook_xi_from_omega1(0.51);
    const SchemePoint unit = ook_point(xi, 1.0);
    CHECK(unit.e.e1() == doctest::Approx(0.02).epsilon(1e-12));
    CHECK(unit.e.e2() == -1.0);
    CHECK(unit.w.omega1() == doctest::Approx(0.51).epsilon(1e-14));
    CHECK(unit.w.omega2() == 0.0);
    // Unit efficiency lands exactly on the classical-average boundary.
    CHECK(std::fabs(classical_avg_membership(unit.e, unit.w).margin) < 1e-12);

    const SchemePoint lossy = ook_point(xi, 0.25);
    CHECK(lossy.e.e1() == doctest::Approx(-0.6733200530681511).epsilon(1e-12));
    CHECK_FALSE(det_peak_membership(lossy.e, 1, lossy.w).member);

    CHECK_THROWS_AS(ook_point(xi, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(ook_point(xi, 1.5), std::invalid_argument);
    CHECK_THROWS_AS(ook_xi_from_omega1(1.0), std::invalid_argument);
}

TEST_CASE("mean photon parametrisation agrees for matched amplitudes") {
    // xi^2 = 0.0625 as mean photon number vs the same amplitude directly.
    const SchemePoint pa = bpsk_point(0.25);
    const SchemePoint pb = bpsk_point(0.25, true);
    CHECK(pa.e.e1() == doctest::Approx(pb.e.e1()).epsilon(1e-14));
    // The mean-photon threshold is the looser one: a^2 >= 1 - exp(-a^2).
    CHECK(pb.w.omega1() > pa.w.omega1());
    CHECK(pb.w.omega1() == doctest::Approx(0.0625).epsilon(1e-14));
}

TEST_CASE("classify returns all seven verdicts in the fixed order") {
    const auto verdicts = classify(bpsk_point(0.4031));
    REQUIRE(verdicts.size() == 7);
    CHECK(verdicts[0].set == SetName::Quantum);
    CHECK(verdicts[0].member);
    CHECK(verdicts[1].set == SetName::ClassicalAvg);
    CHECK_FALSE(verdicts[1].member);
    CHECK(verdicts[2].set == SetName::ClassicalPeak);
    CHECK_FALSE(verdicts[2].member);
}

TEST_CASE("scan locates the bpsk verdict flips") {
    SchemeParams base;
    base.scheme = Scheme::BPSK;
    const ScanResult res = scan(base, ScanParam::Xi, 0.40, 0.70, 61);
    REQUIRE(res.rows.size() == 61);
    CHECK(res.rows.front().param == doctest::Approx(0.40));
    CHECK(res.rows.back().param == doctest::Approx(0.70));

    double det_avg_flip = -1, det_peak_flip = -1;
    for (const auto& f : res.flips) {
        if (f.set == SetName::DetAvg1) det_avg_flip = f.param;
        if (f.set == SetName::DetPeak1) det_peak_flip = f.param;
    }
    CHECK(det_avg_flip == doctest::Approx(0.5497759687286622).epsilon(2e-6));
    CHECK(det_peak_flip == doctest::Approx(0.6342517496343314).epsilon(2e-6));
}

TEST_CASE("scan over ook efficiency stays nonclassical") {
    SchemeParams base;
    base.scheme = Scheme::OOK;
    base.xi = ook_xi_from_omega1(0.51);
    const ScanResult res = scan(base, ScanParam::Eta, 0.01, 1.0, 25);
    for (const auto& row : res.rows) {
        CHECK_FALSE(row.verdicts[5].member);  // det-peak-1
        CHECK(row.verdicts[0].member);        // quantum
    }
}

TEST_CASE("scan validates its inputs") {
    SchemeParams base;
    base.scheme = Scheme::BPSK;
    CHECK_THROWS_AS(scan(base, ScanParam::Xi, 0.4, 0.3, 10),
                    std::invalid_argument);
    CHECK_THROWS_AS(scan(base, ScanParam::Xi, 0.1, 0.4, 1),
                    std::invalid_argument);
}

TEST_CASE("name round trips") {
    CHECK(scheme_from_string("bpsk") == Scheme::BPSK);
    CHECK(scheme_from_string("2ask") == Scheme::ASK2);
    CHECK(scheme_from_string("ook") == Scheme::OOK);
    CHECK_THROWS_AS(scheme_from_string("qam"), std::invalid_argument);
    CHECK(scan_param_from_string("eta") == ScanParam::Eta);
    CHECK_THROWS_AS(scan_param_from_string("zeta"), std::invalid_argument);
}
