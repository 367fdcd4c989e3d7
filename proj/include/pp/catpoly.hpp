#pragma once

#include <utility>
#include <vector>

#include "pp/monomial.hpp"
#include "pp/rational.hpp"

namespace pp {

// Sparse polynomial in the catalytic variables u, w, x with rational
// coefficients. Terms are kept sorted by monomial key with no zero
// coefficients and no duplicates.
class CatPoly {
  public:
    using Term = std::pair<Monomial, Rational>;

    CatPoly() = default;

    static CatPoly zero() { return CatPoly(); }
    static CatPoly constant(Rational c);
    static CatPoly term(Monomial m, Rational c);

    // Sorts, combines duplicates, drops zeros.
    static CatPoly from_terms(std::vector<Term> terms);

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    // The coefficient of the monomial 1 (zero if absent).
    Rational constant_term() const;
    // Requires is_constant(); throws std::domain_error otherwise.
    Rational as_constant() const;

    const std::vector<Term>& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }

    Rational coeff(const Monomial& m) const;
    unsigned max_deg(Var v) const;
    unsigned max_total_deg() const;

    CatPoly& operator+=(const CatPoly& o);
    CatPoly& operator-=(const CatPoly& o);
    CatPoly operator+(const CatPoly& o) const;
    CatPoly operator-(const CatPoly& o) const;
    CatPoly operator-() const;
    CatPoly operator*(const CatPoly& o) const;

    void mul_monomial_inplace(const Monomial& m);
    void mul_scalar_inplace(const Rational& c);
    void add_term(const Monomial& m, const Rational& c);  // keeps invariants

    // Value at u=w=x=1, i.e. the sum of coefficients.
    Rational sum_coeffs() const;

    // Substitute a value in [0,1]-free form: each variable may be assigned a
    // rational; unassigned variables must not occur.
    Rational eval(const Rational& u, const Rational& w, const Rational& x) const;

    // Drop every term whose total catalytic degree exceeds cap.
    void prune_above_total_deg(unsigned cap);

    bool operator==(const CatPoly& o) const { return terms_ == o.terms_; }

    std::string str() const;

  private:
    std::vector<Term> terms_;
};

}  // namespace pp
