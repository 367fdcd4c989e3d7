#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pp/series.hpp"

namespace pp::gf {

// Argument descriptor for K(w)/L(w): the argument is (t*q^2)^j, optionally
// times the symbolic catalytic variable w.
struct WSpec {
    int j = 0;
    bool with_w = false;
};

struct IdentityReport {
    std::vector<std::pair<std::string, bool>> checks;
    bool all_ok() const;
};

// Catalog of the closed-form generating functions at a fixed truncation
// order. Series are built lazily and cached; call warm() before sharing one
// instance across threads.
class GfCatalog {
  public:
    explicit GfCatalog(int order);
    int order() const { return N_; }

    const TruncatedSeries& q() const;          // q(t,1)
    const TruncatedSeries& q_two_var() const;  // q(t,u)
    const TruncatedSeries& bargraph() const;   // B(t,u)
    const TruncatedSeries& bargraph1() const;  // B(t,1)
    const TruncatedSeries& pp2() const;        // closed form == assembled form
    const TruncatedSeries& one_sided() const;  // t^2/(1-t), per-shape counting
    const TruncatedSeries& r11() const;        // R(t,1,1)
    const TruncatedSeries& pp3() const;

    // K(w)/L(w) per the printed formulas, argument given by ws. Both the
    // primary and the alternative printed forms are computed and must agree.
    // B(t, q*warg) is formed by substituting u := q^(2j+1) * [w] * t^j into
    // bargraph().
    std::pair<TruncatedSeries, TruncatedSeries> KL(const WSpec& ws) const;
    TruncatedSeries K(const WSpec& ws) const { return KL(ws).first; }
    TruncatedSeries L(const WSpec& ws) const { return KL(ws).second; }

    // R(t,w,w) with symbolic w, by iterating the K/L sum.
    TruncatedSeries rww() const;

    // B(t,g) for univariate g with val(g) = v >= 0, evaluated directly from
    // the closed form. Requires g.order() >= order()+1+v; result has order().
    TruncatedSeries bargraph_at(const TruncatedSeries& g) const;

    IdentityReport powers_of_q_identities() const;
    // Five q-derived series with provably nonnegative integer coefficients,
    // paired with printable names.
    std::vector<std::pair<std::string, TruncatedSeries>> positivity_series() const;

    void warm() const;

  private:
    TruncatedSeries q_at(int order) const;
    std::pair<TruncatedSeries, TruncatedSeries> kl_from_M(const TruncatedSeries& qN,
                                                          const TruncatedSeries& M) const;
    TruncatedSeries r_sum(bool symbolic) const;

    int N_;
    mutable std::optional<TruncatedSeries> q_, q2v_, bg_, bg1_, pp2_, one_sided_, r11_,
        pp3_;
};

// Polynomial sum_i coeffs[i] * t^i as a truncated series.
TruncatedSeries tpoly(const std::vector<long>& coeffs, int order);

}  // namespace pp::gf
