#pragma once

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace pp {

// Catalytic variables. Series coefficients are polynomials in these; the
// main series variable t is handled separately by TruncatedSeries.
enum class Var : int { u = 0, w = 1, x = 2 };

inline const char* var_name(Var v) {
    switch (v) {
        case Var::u: return "u";
        case Var::w: return "w";
        case Var::x: return "x";
    }
    throw std::invalid_argument("var_name: bad Var");
}

// Monomial u^a w^b x^c packed into one word, 20 bits per exponent.
// Degrees stay far below 2^20 in practice (they are bounded by the series
// truncation order), but every operation checks anyway.
class Monomial {
  public:
    static constexpr unsigned kBits = 20;
    static constexpr std::uint64_t kMax = (std::uint64_t{1} << kBits) - 1;

    constexpr Monomial() : key_(0) {}

    static Monomial from_degrees(unsigned du, unsigned dw, unsigned dx) {
        if (du > kMax || dw > kMax || dx > kMax)
            throw std::domain_error("Monomial: exponent overflow");
        Monomial m;
        m.key_ = (std::uint64_t{du} << (2 * kBits)) | (std::uint64_t{dw} << kBits) |
                 std::uint64_t{dx};
        return m;
    }

    static Monomial one() { return Monomial(); }
    static Monomial var(Var v, unsigned d = 1) {
        switch (v) {
            case Var::u: return from_degrees(d, 0, 0);
            case Var::w: return from_degrees(0, d, 0);
            case Var::x: return from_degrees(0, 0, d);
        }
        throw std::invalid_argument("Monomial::var: bad Var");
    }

    unsigned deg(Var v) const {
        return unsigned((key_ >> ((2 - int(v)) * kBits)) & kMax);
    }
    unsigned total() const { return deg(Var::u) + deg(Var::w) + deg(Var::x); }
    bool is_one() const { return key_ == 0; }

    Monomial operator*(const Monomial& o) const {
        return from_degrees(deg(Var::u) + o.deg(Var::u), deg(Var::w) + o.deg(Var::w),
                            deg(Var::x) + o.deg(Var::x));
    }

    Monomial pow(unsigned e) const {
        return from_degrees(deg(Var::u) * e, deg(Var::w) * e, deg(Var::x) * e);
    }

    // Monomial with the v-exponent removed.
    Monomial without(Var v) const {
        unsigned du = deg(Var::u), dw = deg(Var::w), dx = deg(Var::x);
        switch (v) {
            case Var::u: du = 0; break;
            case Var::w: dw = 0; break;
            case Var::x: dx = 0; break;
        }
        return from_degrees(du, dw, dx);
    }

    Monomial with_deg(Var v, unsigned d) const {
        unsigned du = deg(Var::u), dw = deg(Var::w), dx = deg(Var::x);
        switch (v) {
            case Var::u: du = d; break;
            case Var::w: dw = d; break;
            case Var::x: dx = d; break;
        }
        return from_degrees(du, dw, dx);
    }

    auto operator<=>(const Monomial& o) const = default;

    std::string str() const {
        if (is_one()) return "1";
        std::string s;
        for (Var v : {Var::u, Var::w, Var::x}) {
            unsigned d = deg(v);
            if (d == 0) continue;
            if (!s.empty()) s += "*";
            s += var_name(v);
            if (d > 1) s += "^" + std::to_string(d);
        }
        return s;
    }

    std::uint64_t key() const { return key_; }

  private:
    std::uint64_t key_;
};

}  // namespace pp
