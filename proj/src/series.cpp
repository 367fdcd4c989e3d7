#include "pp/series.hpp"

#include <stdexcept>

namespace pp {

TruncatedSeries::TruncatedSeries(int order) : order_(order) {
    if (order < 0) throw std::invalid_argument("TruncatedSeries: negative order");
    c_.resize(order + 1);
}

TruncatedSeries TruncatedSeries::one(int order) {
    TruncatedSeries s(order);
    s.c_[0] = CatPoly::constant(Rational(1));
    return s;
}

TruncatedSeries TruncatedSeries::t_power(int k, int order) {
    if (k < 0) throw std::invalid_argument("t_power: negative exponent");
    TruncatedSeries s(order);
    if (k <= order) s.c_[k] = CatPoly::constant(Rational(1));
    return s;
}

TruncatedSeries TruncatedSeries::term(const CatPoly& p, int k, int order) {
    if (k < 0) throw std::invalid_argument("term: negative exponent");
    TruncatedSeries s(order);
    if (k <= order) s.c_[k] = p;
    return s;
}

const CatPoly& TruncatedSeries::coeff(int n) const {
    if (n < 0 || n > order_) throw std::invalid_argument("coeff: index out of range");
    return c_[n];
}

void TruncatedSeries::set_coeff(int n, CatPoly p) {
    if (n < 0 || n > order_) throw std::invalid_argument("set_coeff: index out of range");
    c_[n] = std::move(p);
}

bool TruncatedSeries::is_zero() const {
    for (const auto& p : c_)
        if (!p.is_zero()) return false;
    return true;
}

std::optional<int> TruncatedSeries::valuation() const {
    for (int n = 0; n <= order_; ++n)
        if (!c_[n].is_zero()) return n;
    return std::nullopt;
}

static void check_same_order(const TruncatedSeries& a, const TruncatedSeries& b,
                             const char* op) {
    if (a.order() != b.order())
        throw std::invalid_argument(std::string(op) + ": order mismatch");
}

TruncatedSeries& TruncatedSeries::operator+=(const TruncatedSeries& o) {
    check_same_order(*this, o, "series add");
    for (int n = 0; n <= order_; ++n) c_[n] += o.c_[n];
    if (!cap_) cap_ = o.cap_;
    return *this;
}

TruncatedSeries& TruncatedSeries::operator-=(const TruncatedSeries& o) {
    check_same_order(*this, o, "series sub");
    for (int n = 0; n <= order_; ++n) c_[n] -= o.c_[n];
    if (!cap_) cap_ = o.cap_;
    return *this;
}

TruncatedSeries TruncatedSeries::operator+(const TruncatedSeries& o) const {
    TruncatedSeries r = *this;
    r += o;
    return r;
}

TruncatedSeries TruncatedSeries::operator-(const TruncatedSeries& o) const {
    TruncatedSeries r = *this;
    r -= o;
    return r;
}

TruncatedSeries TruncatedSeries::operator-() const {
    TruncatedSeries r(order_);
    r.cap_ = cap_;
    for (int n = 0; n <= order_; ++n) r.c_[n] = -c_[n];
    return r;
}

TruncatedSeries TruncatedSeries::operator*(const TruncatedSeries& o) const {
    check_same_order(*this, o, "series mul");
    TruncatedSeries r(order_);
    r.cap_ = cap_ ? cap_ : o.cap_;
    for (int i = 0; i <= order_; ++i) {
        if (c_[i].is_zero()) continue;
        for (int j = 0; i + j <= order_; ++j) {
            if (o.c_[j].is_zero()) continue;
            r.c_[i + j] += c_[i] * o.c_[j];
        }
    }
    r.apply_cap();
    return r;
}

bool TruncatedSeries::operator==(const TruncatedSeries& o) const {
    if (order_ != o.order_) return false;
    for (int n = 0; n <= order_; ++n)
        if (!(c_[n] == o.c_[n])) return false;
    return true;
}

TruncatedSeries TruncatedSeries::mul_scalar(const Rational& v) const {
    TruncatedSeries r = *this;
    for (auto& p : r.c_) p.mul_scalar_inplace(v);
    return r;
}

TruncatedSeries TruncatedSeries::mul_catpoly(const CatPoly& p) const {
    TruncatedSeries r(order_);
    r.cap_ = cap_;
    for (int n = 0; n <= order_; ++n)
        if (!c_[n].is_zero()) r.c_[n] = c_[n] * p;
    r.apply_cap();
    return r;
}

TruncatedSeries TruncatedSeries::mul_tpower(int k) const {
    if (k < 0) throw std::invalid_argument("mul_tpower: negative shift");
    TruncatedSeries r(order_);
    r.cap_ = cap_;
    for (int n = 0; n + k <= order_; ++n) r.c_[n + k] = c_[n];
    return r;
}

TruncatedSeries TruncatedSeries::recip() const {
    if (!c_[0].is_constant() || c_[0].is_zero())
        throw std::domain_error("recip: constant coefficient must be a nonzero rational");
    Rational c0 = c_[0].as_constant();
    Rational inv0 = make_rational(c0.get_den(), c0.get_num());
    TruncatedSeries r(order_);
    r.cap_ = cap_;
    r.c_[0] = CatPoly::constant(inv0);
    for (int n = 1; n <= order_; ++n) {
        CatPoly acc;
        for (int k = 1; k <= n; ++k) {
            if (c_[k].is_zero() || r.c_[n - k].is_zero()) continue;
            acc += c_[k] * r.c_[n - k];
        }
        acc.mul_scalar_inplace(-inv0);
        r.c_[n] = std::move(acc);
    }
    r.apply_cap();
    return r;
}

TruncatedSeries TruncatedSeries::sqrt() const {
    if (!c_[0].is_constant())
        throw std::domain_error("sqrt: constant coefficient must be rational");
    auto root = rational_sqrt(c_[0].as_constant());
    if (!root || *root == 0)
        throw std::domain_error("sqrt: constant coefficient must be a nonzero square");
    // y_n = (a_n - sum_{k=1..n-1} y_k y_{n-k}) / (2 y_0)
    Rational y0 = *root;
    Rational half = make_rational(1, 2) / y0;
    TruncatedSeries y(order_);
    y.cap_ = cap_;
    y.c_[0] = CatPoly::constant(y0);
    for (int n = 1; n <= order_; ++n) {
        CatPoly acc = c_[n];
        for (int k = 1; k <= n - 1; ++k) {
            if (y.c_[k].is_zero() || y.c_[n - k].is_zero()) continue;
            acc -= y.c_[k] * y.c_[n - k];
        }
        acc.mul_scalar_inplace(half);
        y.c_[n] = std::move(acc);
    }
    y.apply_cap();
    return y;
}

TruncatedSeries TruncatedSeries::subst(Var v, const TruncatedSeries& g,
                                       const Monomial& mono, int tshift) const {
    check_same_order(*this, g, "subst");
    if (tshift < 0) throw std::invalid_argument("subst: negative t-shift");
    // Bucket terms by their v-degree: h_k(t) collects (coeff * rest-monomial)
    // of the terms with v-degree exactly k. Then
    //   result = sum_k h_k * g^k * mono^k * t^(k*tshift).
    unsigned maxk = 0;
    for (const auto& p : c_) maxk = std::max(maxk, p.max_deg(v));
    std::vector<TruncatedSeries> buckets;
    buckets.reserve(maxk + 1);
    for (unsigned k = 0; k <= maxk; ++k) buckets.emplace_back(order_);
    for (int n = 0; n <= order_; ++n) {
        for (const auto& [m, coef] : c_[n].terms()) {
            unsigned k = m.deg(v);
            buckets[k].c_[n].add_term(m.without(v), coef);
        }
    }
    TruncatedSeries result = buckets[0];
    result.cap_ = cap_;
    TruncatedSeries gpow = TruncatedSeries::one(order_);
    for (unsigned k = 1; k <= maxk; ++k) {
        gpow = gpow * g;
        if (buckets[k].is_zero()) continue;
        long shift = long(k) * tshift;
        if (shift > order_) continue;
        TruncatedSeries piece =
            buckets[k].mul_catpoly(CatPoly::term(mono.pow(k), Rational(1))) * gpow;
        result += piece.mul_tpower(int(shift));
    }
    result.apply_cap();
    return result;
}

TruncatedSeries TruncatedSeries::subst_value(Var v, const Rational& val) const {
    auto rpow = [](const Rational& b, unsigned e) {
        Rational r(1), p = b;
        while (e) {
            if (e & 1) r *= p;
            p *= p;
            e >>= 1;
        }
        return r;
    };
    TruncatedSeries r(order_);
    r.cap_ = cap_;
    for (int n = 0; n <= order_; ++n) {
        for (const auto& [m, coef] : c_[n].terms()) {
            unsigned k = m.deg(v);
            r.c_[n].add_term(m.without(v), k ? coef * rpow(val, k) : coef);
        }
    }
    return r;
}

TruncatedSeries TruncatedSeries::subst_all(
    const std::array<std::optional<VarTarget>, 3>& targets) const {
    TruncatedSeries r(order_);
    r.cap_ = cap_;
    for (int n = 0; n <= order_; ++n) {
        for (const auto& [m, coef] : c_[n].terms()) {
            Monomial nm = Monomial::one();
            long shift = 0;
            for (Var v : {Var::u, Var::w, Var::x}) {
                unsigned d = m.deg(v);
                if (d == 0) continue;
                const auto& tgt = targets[int(v)];
                if (tgt) {
                    nm = nm * tgt->mono.pow(d);
                    shift += long(d) * tgt->tshift;
                } else {
                    nm = nm * Monomial::var(v, d);
                }
            }
            if (n + shift > order_) continue;
            if (shift < 0) throw std::invalid_argument("subst_all: negative t-shift");
            r.c_[n + shift].add_term(nm, coef);
        }
    }
    r.apply_cap();
    return r;
}

TruncatedSeries TruncatedSeries::divided_difference(Var v, const Monomial& targetMono,
                                                    int tshift) const {
    if (tshift < 0) throw std::invalid_argument("divided_difference: negative t-shift");
    // (T^k - v^k)/(T - v) = sum_{i=0}^{k-1} T^i v^(k-1-i), T = targetMono*t^tshift.
    TruncatedSeries r(order_);
    r.cap_ = cap_;
    for (int n = 0; n <= order_; ++n) {
        for (const auto& [m, coef] : c_[n].terms()) {
            unsigned k = m.deg(v);
            if (k == 0) continue;
            Monomial base = m.without(v);
            for (unsigned i = 0; i < k; ++i) {
                long nn = n + long(i) * tshift;
                if (nn > order_) break;
                r.c_[nn].add_term(base * targetMono.pow(i) * Monomial::var(v, k - 1 - i),
                                  coef);
            }
        }
    }
    r.apply_cap();
    return r;
}

TruncatedSeries TruncatedSeries::divide_by_var(Var v) const {
    TruncatedSeries r(order_);
    r.cap_ = cap_;
    for (int n = 0; n <= order_; ++n) {
        std::vector<CatPoly::Term> terms;
        terms.reserve(c_[n].size());
        for (const auto& [m, coef] : c_[n].terms()) {
            unsigned k = m.deg(v);
            if (k == 0)
                throw std::domain_error(std::string("divide_by_var: term lacks ") +
                                        var_name(v));
            terms.emplace_back(m.with_deg(v, k - 1), coef);
        }
        r.c_[n] = CatPoly::from_terms(std::move(terms));
    }
    return r;
}

TruncatedSeries TruncatedSeries::shift_down(int k) const {
    if (k < 0 || k > order_) throw std::invalid_argument("shift_down: bad shift");
    for (int n = 0; n < k; ++n)
        if (!c_[n].is_zero())
            throw std::domain_error("shift_down: nonzero coefficient below shift");
    TruncatedSeries r(order_ - k);
    r.cap_ = cap_;
    for (int n = k; n <= order_; ++n) r.c_[n - k] = c_[n];
    return r;
}

TruncatedSeries TruncatedSeries::truncated(int newOrder) const {
    if (newOrder < 0 || newOrder > order_)
        throw std::invalid_argument("truncated: bad order");
    TruncatedSeries r(newOrder);
    r.cap_ = cap_;
    for (int n = 0; n <= newOrder; ++n) r.c_[n] = c_[n];
    return r;
}

std::vector<Rational> TruncatedSeries::constant_coeffs() const {
    std::vector<Rational> out;
    out.reserve(order_ + 1);
    for (const auto& p : c_) {
        if (!p.is_constant())
            throw std::domain_error("constant_coeffs: coefficient has catalytic variables");
        out.push_back(p.constant_term());
    }
    return out;
}

std::string TruncatedSeries::str(int maxTerms) const {
    std::string s;
    int shown = 0;
    for (int n = 0; n <= order_ && shown < maxTerms; ++n) {
        if (c_[n].is_zero()) continue;
        if (!s.empty()) s += " + ";
        s += "(" + c_[n].str() + ")*t^" + std::to_string(n);
        ++shown;
    }
    if (s.empty()) s = "0";
    s += " + O(t^" + std::to_string(order_ + 1) + ")";
    return s;
}

void TruncatedSeries::apply_cap() {
    if (!cap_) return;
    for (auto& p : c_) p.prune_above_total_deg(unsigned(cap_));
}

}  // namespace pp
