#include "pp/asymptotics.hpp"

#include <cmath>
#include <functional>
#include <numbers>
#include <stdexcept>
#include <utility>

namespace pp::asym {

namespace {

// Bisect f on [lo,hi] down to adjacent doubles. f(lo), f(hi) must straddle 0.
std::pair<double, double> bisect(const std::function<double(double)>& f,
                                 double lo, double hi) {
    double flo = f(lo), fhi = f(hi);
    if (flo == 0) return {lo, lo};
    if (fhi == 0) return {hi, hi};
    if ((flo < 0) == (fhi < 0))
        throw std::invalid_argument("bisect: root not bracketed");
    for (int it = 0; it < 220; ++it) {
        double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) break;
        double fm = f(mid);
        if (fm == 0) return {mid, mid};
        if ((fm < 0) == (flo < 0)) {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
        }
    }
    return {lo, hi};
}

Constant solve(std::string name, const std::function<double(double)>& f,
               double lo, double hi) {
    auto [a, b] = bisect(f, lo, hi);
    Constant c;
    c.name = std::move(name);
    c.lo = a;
    c.hi = b;
    c.value = 0.5 * (a + b);
    c.residual = std::fabs(f(c.value));
    return c;
}

double theta() { return std::cbrt(26 + 6 * std::sqrt(33.0)); }

double log_big(const BigInt& z) {
    signed long e = 0;
    double d = mpz_get_d_2exp(&e, z.get_mpz_t());
    return std::log(d) + static_cast<double>(e) * std::numbers::ln2;
}

// c[m]/c[m-1] with the power-law part divided out.
double corrected_ratio(const std::vector<BigInt>& c, int m, double exponent) {
    mpq_class r(c[m], c[m - 1]);
    r.canonicalize();
    double ratio = r.get_d();
    if (exponent == 0) return ratio;
    return ratio * std::pow(static_cast<double>(m) / (m - 1), -exponent);
}

}  // namespace

double q_of_t(double t) {
    double rad = 1 + t * (-4 + t * (2 + t * t));
    return (t * t + 1 - std::sqrt(std::max(0.0, rad))) / (2 * t);
}

// u(t) = (1/t)(1-sqrt t)/(1+sqrt t) = (1-sqrt t)^2 / (t(1-t)); the second
// form matches the factored radicand below, so bargraph_of(t, u_of_t(t))
// hits the branch point exactly.
double u_of_t(double t) {
    double s = std::sqrt(t);
    return (1 - s) * (1 - s) / (t * (1 - t));
}

// B(t,u) = (1 - t - u(1+t)t - sqrt(rad)) / (2tu) with the radicand in its
// factored form t^2 (1-t)^2 (u - u+)(u - u-), u+- = (1 +- sqrt t)^2/(t(1-t)).
double bargraph_of(double t, double u) {
    double s = std::sqrt(t);
    double tf = t * (1 - t);
    double up = (1 + s) * (1 + s) / tf;
    double um = (1 - s) * (1 - s) / tf;
    double rad = tf * tf * (u - up) * (u - um);
    return (1 - t - u * (1 + t) * t - std::sqrt(std::max(0.0, rad))) /
           (2 * t * u);
}

Constant rho() {
    Constant c = solve(
        "rho", [](double t) { return 1 + t * (-3 + t * (-1 - t)); }, 0.2, 0.4);
    double th = theta();
    double closed = (th * th - th - 8) / (3 * th);
    if (std::fabs(c.value - closed) > 1e-12)
        throw std::logic_error("rho: bisection and closed form disagree");
    return c;
}

Constant amplitude_A() {
    double s33 = std::sqrt(33.0);
    double th = theta();
    double r = (th * th - th - 8) / (3 * th);
    Constant c;
    c.name = "A";
    c.value = std::sqrt((-37 + 11 * s33) * th * th + (-152 + 8 * s33) * th + 32) /
              (4 * std::sqrt(6 * std::numbers::pi) * r);
    c.lo = c.hi = c.value;
    c.residual = 0;
    return c;
}

Constant sigma() {
    // tau is the real root of t^5 + 2t^2 + 3t - 2; sigma = tau^2.
    Constant tau = solve(
        "tau", [](double t) { return ((t * t * t + 2) * t + 3) * t - 2; },
        0.1, 1.0);
    Constant c;
    c.name = "sigma";
    c.value = tau.value * tau.value;
    c.residual = tau.residual;
    c.lo = tau.lo * tau.lo;
    c.hi = tau.hi * tau.hi;
    // Same point as the N = 0 member of the sigma_N family.
    if (std::fabs(u_of_t(c.value) - q_of_t(c.value)) > 1e-10)
        throw std::logic_error("sigma: u(sigma) != q(sigma)");
    return c;
}

Constant sigma_n(int N) {
    if (N < 0) throw std::invalid_argument("sigma_n: N must be >= 0");
    auto f = [N](double t) {
        double q = q_of_t(t);
        return u_of_t(t) - q * std::pow(q * q * t, N);
    };
    double top = rho().value - 1e-10;  // u - q(q^2 t)^N < 0 just left of rho
    return solve("sigma_" + std::to_string(N), f, 0.05, top);
}

GrowthEstimate growth_estimate(const std::vector<BigInt>& c, double exponent) {
    int m = static_cast<int>(c.size()) - 1;
    int v = 0;
    while (v <= m && c[v] == 0) ++v;
    if (m - v < 8 || v > m / 2 - 1)
        throw std::invalid_argument("growth_estimate: too few coefficients");
    for (int i = v; i <= m; ++i)
        if (c[i] <= 0)
            throw std::invalid_argument("growth_estimate: coefficients must be positive");

    GrowthEstimate g;
    int h = m / 2;
    if (exponent == 0) {
        // Aitken delta^2 on the last three ratios; exact for geometric input.
        double r1 = corrected_ratio(c, m - 2, 0);
        double r2 = corrected_ratio(c, m - 1, 0);
        double r3 = corrected_ratio(c, m, 0);
        double den = (r3 - r2) - (r2 - r1);
        g.rate = std::fabs(den) <= 1e-12 * std::fabs(r3)
                     ? r3
                     : r3 - (r3 - r2) * (r3 - r2) / den;
    } else {
        // Power-law-corrected ratios carry an O(1/m^2) error; one Richardson
        // step against the half point removes it.
        double rm = corrected_ratio(c, m, exponent);
        double rh = corrected_ratio(c, h, exponent);
        g.rate = (4 * rm - rh) / 3;
    }

    // A(k) = c_k rate^-k k^-exponent has an O(1/k) error term.
    auto amp = [&](int k) {
        return std::exp(log_big(c[k]) - k * std::log(g.rate) -
                        exponent * std::log(static_cast<double>(k)));
    };
    g.amplitude = 2 * amp(m) - amp(h);
    return g;
}

}  // namespace pp::asym
