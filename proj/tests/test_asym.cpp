#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <stdexcept>
#include <vector>

#include "pp/asymptotics.hpp"
#include "pp/gf.hpp"

using namespace pp;
using namespace pp::asym;

namespace {

std::vector<BigInt> int_coeffs(const TruncatedSeries& s) {
    std::vector<BigInt> out;
    for (const Rational& r : s.constant_coeffs()) {
        REQUIRE(r.get_den() == 1);
        out.push_back(r.get_num());
    }
    return out;
}

}  // namespace

TEST_CASE("rho: root of 1 - 3t - t^2 - t^3") {
    Constant r = rho();
    CHECK(std::fabs(r.value - 0.2955977) <= 1e-6);
    CHECK(r.residual <= 1e-12);
    CHECK(r.hi - r.lo <= 1e-13);
    CHECK(r.lo <= r.value);
    CHECK(r.value <= r.hi);
    double t = r.value;
    CHECK(std::fabs(1 - 3 * t - t * t - t * t * t) <= 1e-12);
}

TEST_CASE("amplitude A") {
    Constant a = amplitude_A();
    CHECK(std::fabs(a.value - 0.8548166) <= 1e-6);
}

TEST_CASE("sigma: square of the real root of t^5 + 2t^2 + 3t - 2") {
    Constant s = sigma();
    CHECK(std::fabs(s.value - 0.2441312) <= 1e-6);
    CHECK(s.residual <= 1e-12);
    CHECK(s.hi - s.lo <= 1e-13);
    double tau = std::sqrt(s.value);
    CHECK(std::fabs(std::pow(tau, 5) + 2 * tau * tau + 3 * tau - 2) <= 1e-12);
    CHECK(s.value < rho().value);
}

TEST_CASE("sigma_N ladder increases from sigma toward rho") {
    double r = rho().value;
    CHECK(std::fabs(sigma_n(0).value - sigma().value) <= 1e-12);
    double prev = 0;
    for (int N = 0; N <= 10; ++N) {
        Constant s = sigma_n(N);
        CHECK(s.residual <= 1e-12);
        CHECK(s.hi - s.lo <= 1e-13);
        CHECK(s.value > prev);
        CHECK(s.value < r);
        prev = s.value;
    }
    CHECK(r - prev < r - sigma().value);  // strictly closer to rho by N = 10
    CHECK_THROWS_AS(sigma_n(-1), std::invalid_argument);
}

TEST_CASE("q at rho: (rho^2+1)/(2 rho) = 1/sqrt(rho)") {
    double r = rho().value;
    CHECK(std::fabs((r * r + 1) / (2 * r) - 1 / std::sqrt(r)) <= 1e-10);
    CHECK(std::fabs(u_of_t(r) - 1) <= 1e-10);
    // q itself stays below the branch value on (0, rho).
    for (double t : {0.05, 0.15, 0.25}) CHECK(q_of_t(t) < 1 / std::sqrt(t));
}

TEST_CASE("B(t, u(t)) = sqrt(t) on the singular curve") {
    for (double t : {0.05, 0.1, 0.2})
        CHECK(std::fabs(bargraph_of(t, u_of_t(t)) - std::sqrt(t)) <= 1e-8);
    // Away from the curve, the closed form matches the series expansion.
    gf::GfCatalog cat(24);
    std::vector<Rational> b1 = cat.bargraph1().constant_coeffs();
    double direct = 0, tp = 1;
    for (const Rational& c : b1) {
        direct += c.get_d() * tp;
        tp *= 0.1;
    }
    CHECK(std::fabs(bargraph_of(0.1, 1.0) - direct) <= 1e-12);
}

TEST_CASE("growth_estimate on a pure geometric sequence") {
    std::vector<BigInt> c{1};
    for (int i = 1; i <= 24; ++i) c.push_back(c.back() * 2);
    GrowthEstimate g = growth_estimate(c, 0);
    CHECK(g.rate == 2.0);
    CHECK(std::fabs(g.amplitude - 1.0) <= 1e-9);
}

TEST_CASE("growth_estimate recovers the PP2 constants") {
    gf::GfCatalog cat(400);
    GrowthEstimate g = growth_estimate(int_coeffs(cat.pp2()), -1.5);
    double r = rho().value;
    CHECK(std::fabs(g.rate * r - 1) <= 1e-3);
    CHECK(std::fabs(g.amplitude / amplitude_A().value - 1) <= 2e-2);
}

TEST_CASE("growth_estimate recovers the PP3 growth rate") {
    gf::GfCatalog cat(200);
    GrowthEstimate g = growth_estimate(int_coeffs(cat.pp3()), -1.5);
    CHECK(std::fabs(g.rate * sigma().value - 1) <= 5e-3);
}

TEST_CASE("growth_estimate input validation") {
    std::vector<BigInt> tiny{0, 0, 1, 2, 5};
    CHECK_THROWS_AS(growth_estimate(tiny, -1.5), std::invalid_argument);
    std::vector<BigInt> neg;
    for (int i = 0; i <= 20; ++i) neg.push_back(i == 7 ? -1 : 1);
    CHECK_THROWS_AS(growth_estimate(neg, 0), std::invalid_argument);
}
