#include "pp/catpoly.hpp"

#include <algorithm>
#include <stdexcept>

namespace pp {

CatPoly CatPoly::constant(Rational c) {
    CatPoly p;
    if (c != 0) p.terms_.emplace_back(Monomial::one(), std::move(c));
    return p;
}

CatPoly CatPoly::term(Monomial m, Rational c) {
    CatPoly p;
    if (c != 0) p.terms_.emplace_back(m, std::move(c));
    return p;
}

CatPoly CatPoly::from_terms(std::vector<Term> terms) {
    std::sort(terms.begin(), terms.end(),
              [](const Term& a, const Term& b) { return a.first < b.first; });
    CatPoly p;
    for (auto& [m, c] : terms) {
        if (c == 0) continue;
        if (!p.terms_.empty() && p.terms_.back().first == m) {
            p.terms_.back().second += c;
            if (p.terms_.back().second == 0) p.terms_.pop_back();
        } else {
            p.terms_.emplace_back(m, std::move(c));
        }
    }
    return p;
}

bool CatPoly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_[0].first.is_one());
}

Rational CatPoly::constant_term() const {
    if (!terms_.empty() && terms_[0].first.is_one()) return terms_[0].second;
    return Rational(0);
}

Rational CatPoly::as_constant() const {
    if (!is_constant()) throw std::domain_error("CatPoly::as_constant: not constant");
    return constant_term();
}

Rational CatPoly::coeff(const Monomial& m) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                               [](const Term& t, const Monomial& k) { return t.first < k; });
    if (it != terms_.end() && it->first == m) return it->second;
    return Rational(0);
}

unsigned CatPoly::max_deg(Var v) const {
    unsigned d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m.deg(v));
    return d;
}

unsigned CatPoly::max_total_deg() const {
    unsigned d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m.total());
    return d;
}

CatPoly& CatPoly::operator+=(const CatPoly& o) {
    if (o.terms_.empty()) return *this;
    if (terms_.empty()) {
        terms_ = o.terms_;
        return *this;
    }
    std::vector<Term> merged;
    merged.reserve(terms_.size() + o.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < terms_.size() && j < o.terms_.size()) {
        if (terms_[i].first < o.terms_[j].first) {
            merged.push_back(std::move(terms_[i++]));
        } else if (o.terms_[j].first < terms_[i].first) {
            merged.push_back(o.terms_[j++]);
        } else {
            Rational c = terms_[i].second + o.terms_[j].second;
            if (c != 0) merged.emplace_back(terms_[i].first, std::move(c));
            ++i;
            ++j;
        }
    }
    while (i < terms_.size()) merged.push_back(std::move(terms_[i++]));
    while (j < o.terms_.size()) merged.push_back(o.terms_[j++]);
    terms_ = std::move(merged);
    return *this;
}

CatPoly& CatPoly::operator-=(const CatPoly& o) { return *this += -o; }

CatPoly CatPoly::operator+(const CatPoly& o) const {
    CatPoly r = *this;
    r += o;
    return r;
}

CatPoly CatPoly::operator-(const CatPoly& o) const {
    CatPoly r = *this;
    r -= o;
    return r;
}

CatPoly CatPoly::operator-() const {
    CatPoly r = *this;
    for (auto& [m, c] : r.terms_) c = -c;
    return r;
}

CatPoly CatPoly::operator*(const CatPoly& o) const {
    if (terms_.empty() || o.terms_.empty()) return CatPoly();
    // Fast paths: multiplication by a single term keeps sortedness.
    if (o.terms_.size() == 1) {
        CatPoly r = *this;
        r.mul_monomial_inplace(o.terms_[0].first);
        r.mul_scalar_inplace(o.terms_[0].second);
        return r;
    }
    if (terms_.size() == 1) return o * *this;
    std::vector<Term> prod;
    prod.reserve(terms_.size() * o.terms_.size());
    for (const auto& [ma, ca] : terms_)
        for (const auto& [mb, cb] : o.terms_) prod.emplace_back(ma * mb, ca * cb);
    return from_terms(std::move(prod));
}

void CatPoly::mul_monomial_inplace(const Monomial& m) {
    if (m.is_one()) return;
    for (auto& [mm, c] : terms_) mm = mm * m;
    // Multiplying every monomial by the same monomial preserves key order.
}

void CatPoly::mul_scalar_inplace(const Rational& c) {
    if (c == 0) {
        terms_.clear();
        return;
    }
    if (c == 1) return;
    for (auto& [m, cc] : terms_) cc *= c;
}

void CatPoly::add_term(const Monomial& m, const Rational& c) {
    if (c == 0) return;
    auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                               [](const Term& t, const Monomial& k) { return t.first < k; });
    if (it != terms_.end() && it->first == m) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    } else {
        terms_.emplace(it, m, c);
    }
}

Rational CatPoly::sum_coeffs() const {
    Rational s(0);
    for (const auto& [m, c] : terms_) s += c;
    return s;
}

Rational CatPoly::eval(const Rational& u, const Rational& w, const Rational& x) const {
    auto rpow = [](const Rational& b, unsigned e) {
        Rational r(1), p = b;
        while (e) {
            if (e & 1) r *= p;
            p *= p;
            e >>= 1;
        }
        return r;
    };
    Rational s(0);
    for (const auto& [m, c] : terms_)
        s += c * rpow(u, m.deg(Var::u)) * rpow(w, m.deg(Var::w)) * rpow(x, m.deg(Var::x));
    return s;
}

void CatPoly::prune_above_total_deg(unsigned cap) {
    std::erase_if(terms_, [cap](const Term& t) { return t.first.total() > cap; });
}

std::string CatPoly::str() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (const auto& [m, c] : terms_) {
        if (!s.empty()) s += " + ";
        s += c.get_str();
        if (!m.is_one()) s += "*" + m.str();
    }
    return s;
}

}  // namespace pp
