#pragma once

#include <array>
#include <optional>
#include <vector>

#include "pp/catpoly.hpp"

namespace pp {

// Target of a per-variable substitution v := mono * t^tshift.
struct VarTarget {
    Monomial mono;
    int tshift = 0;
};

// Formal power series in t, truncated at t^order inclusive, with CatPoly
// coefficients. All binary operations require identical orders (callers pad
// explicitly; silent order juggling has caused real bugs in this kind of
// code). An optional cap on total catalytic degree prunes coefficients after
// multiplicative operations; 0 means no cap.
class TruncatedSeries {
  public:
    explicit TruncatedSeries(int order);

    static TruncatedSeries zero(int order) { return TruncatedSeries(order); }
    static TruncatedSeries one(int order);
    static TruncatedSeries t_power(int k, int order);  // t^k (zero if k > order)
    static TruncatedSeries term(const CatPoly& p, int k, int order);  // p * t^k

    int order() const { return order_; }
    int cap() const { return cap_; }
    void set_cap(int cap) { cap_ = cap; }

    const CatPoly& coeff(int n) const;
    void set_coeff(int n, CatPoly p);

    bool is_zero() const;
    std::optional<int> valuation() const;

    TruncatedSeries operator+(const TruncatedSeries& o) const;
    TruncatedSeries operator-(const TruncatedSeries& o) const;
    TruncatedSeries operator-() const;
    TruncatedSeries operator*(const TruncatedSeries& o) const;
    TruncatedSeries& operator+=(const TruncatedSeries& o);
    TruncatedSeries& operator-=(const TruncatedSeries& o);
    bool operator==(const TruncatedSeries& o) const;

    TruncatedSeries mul_scalar(const Rational& c) const;
    TruncatedSeries mul_catpoly(const CatPoly& p) const;
    // Multiply by t^k in place: coefficients shift up, overflow is dropped.
    TruncatedSeries mul_tpower(int k) const;

    // 1/this. Constant coefficient must be a nonzero pure rational.
    TruncatedSeries recip() const;

    // Square root with constant coefficient a nonzero perfect rational
    // square; the branch with sqrt(c_0) > 0 is returned.
    TruncatedSeries sqrt() const;

    // v := g(t) * mono * t^tshift where g is a series of the same order.
    TruncatedSeries subst(Var v, const TruncatedSeries& g, const Monomial& mono,
                          int tshift) const;
    // v := constant rational value.
    TruncatedSeries subst_value(Var v, const Rational& val) const;
    // Simultaneous substitution of all three variables (termwise).
    TruncatedSeries subst_all(const std::array<std::optional<VarTarget>, 3>& targets) const;

    // (f[v := T] - f)/(T - v) with T = targetMono * t^tshift, computed by
    // telescoping -- no division happens.
    TruncatedSeries divided_difference(Var v, const Monomial& targetMono, int tshift) const;

    // Exact division by the variable v; throws if any term lacks it.
    TruncatedSeries divide_by_var(Var v) const;

    // Exact division by t^k; the dropped low coefficients must be zero.
    // Result has order order()-k.
    TruncatedSeries shift_down(int k) const;

    TruncatedSeries truncated(int newOrder) const;

    // For univariate series: all coefficients as rationals (throws if any
    // coefficient involves a catalytic variable).
    std::vector<Rational> constant_coeffs() const;

    std::string str(int maxTerms = 12) const;

  private:
    void apply_cap();

    int order_;
    int cap_ = 0;
    std::vector<CatPoly> c_;
};

}  // namespace pp
