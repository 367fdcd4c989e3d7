#pragma once

#include <string>
#include <vector>

#include "pp/rational.hpp"

namespace pp::asym {

// A numerically determined constant: value with the bisection bracket it was
// isolated in and the residual of its defining equation at `value`.
struct Constant {
    std::string name;
    double value = 0;
    double residual = 0;
    double lo = 0, hi = 0;
};

// Dominant singularity of PP2: unique real root of 1 - 3t - t^2 - t^3,
// cross-checked against the closed form via theta = cbrt(26 + 6 sqrt(33)).
Constant rho();

// Amplitude of pp2^(m) ~ A rho^(-m) m^(-3/2), from the closed form.
Constant amplitude_A();

// Dominant singularity of PP3: sigma = sigma_0 = tau^2 with tau the real
// root of t^5 + 2t^2 + 3t - 2.
Constant sigma();

// Singularity of B(t, q (q^2 t)^N): root of u(t) - q (q^2 t)^N in (0, rho).
Constant sigma_n(int N);

// Pointwise evaluations of the closed forms (double precision).
double q_of_t(double t);
double u_of_t(double t);                   // (1/t)(1-sqrt t)/(1+sqrt t)
double bargraph_of(double t, double u);    // B(t,u), radicand clamped at 0

// Growth-rate and amplitude extrapolation from an integer coefficient list
// c[0..m].  For coefficients c_m ~ A mu^m m^exponent the ratios are first
// corrected by (m/(m-1))^(-exponent), then Richardson-extrapolated; for
// exponent 0 an Aitken delta-squared step is used instead.
struct GrowthEstimate {
    double rate = 0;
    double amplitude = 0;  // meaningful only when exponent != 0
};
GrowthEstimate growth_estimate(const std::vector<BigInt>& c, double exponent);

}  // namespace pp::asym
