#include "pp/gf.hpp"

#include <stdexcept>

namespace pp::gf {

TruncatedSeries tpoly(const std::vector<long>& coeffs, int order) {
    TruncatedSeries s(order);
    for (std::size_t i = 0; i < coeffs.size() && int(i) <= order; ++i)
        if (coeffs[i] != 0) s.set_coeff(int(i), CatPoly::constant(Rational(coeffs[i])));
    return s;
}

bool IdentityReport::all_ok() const {
    for (const auto& [name, ok] : checks)
        if (!ok) return false;
    return true;
}

GfCatalog::GfCatalog(int order) : N_(order) {
    if (order < 0) throw std::invalid_argument("GfCatalog: negative order");
}

void GfCatalog::warm() const {
    q();
    q_two_var();
    bargraph();
    bargraph1();
    pp2();
    one_sided();
    r11();
    pp3();
}

/* q(t,1) = (t^2 + 1 - sqrt(1 - 4t + 2t^2 + t^4)) / (2t), computed at the
 * requested order (one extra coefficient internally for the /t shift). */
TruncatedSeries GfCatalog::q_at(int order) const {
    int W = order + 1;
    TruncatedSeries rad = tpoly({1, -4, 2, 0, 1}, W);
    TruncatedSeries num = tpoly({1, 0, 1}, W) - rad.sqrt();
    return num.shift_down(1).mul_scalar(make_rational(1, 2));
}

const TruncatedSeries& GfCatalog::q() const {
    if (!q_) {
        TruncatedSeries qq = q_at(N_);
        // kernel quadratic: t q^2 - (1 + t^2) q + 1 = 0
        TruncatedSeries resid = (qq * qq).mul_tpower(1) - tpoly({1, 0, 1}, N_) * qq +
                                TruncatedSeries::one(N_);
        if (!resid.is_zero()) throw std::logic_error("q: kernel quadratic failed");
        q_ = std::move(qq);
    }
    return *q_;
}

/* q(t,u) = (1 + (1-u)t + u t^2 - sqrt(radicand)) / (2t) with
 * radicand = t^2 (1-t)^2 u^2 - 2t(1-t^2) u + (1-t)^2. */
const TruncatedSeries& GfCatalog::q_two_var() const {
    if (!q2v_) {
        int W = N_ + 1;
        CatPoly u = CatPoly::term(Monomial::var(Var::u), Rational(1));
        TruncatedSeries uS = TruncatedSeries::term(u, 0, W);
        TruncatedSeries rad = tpoly({0, 0, 1, -2, 1}, W) * uS * uS -
                              tpoly({0, 2, 0, -2}, W) * uS + tpoly({1, -2, 1}, W);
        TruncatedSeries num =
            tpoly({1, 1}, W) - uS.mul_tpower(1) + uS.mul_tpower(2) - rad.sqrt();
        q2v_ = num.shift_down(1).mul_scalar(make_rational(1, 2));
    }
    return *q2v_;
}

/* B(t,u) = (1 - t - u(1+t)t - sqrt(radicand)) / (2tu), same radicand. */
const TruncatedSeries& GfCatalog::bargraph() const {
    if (!bg_) {
        int W = N_ + 1;
        CatPoly u = CatPoly::term(Monomial::var(Var::u), Rational(1));
        TruncatedSeries uS = TruncatedSeries::term(u, 0, W);
        TruncatedSeries rad = tpoly({0, 0, 1, -2, 1}, W) * uS * uS -
                              tpoly({0, 2, 0, -2}, W) * uS + tpoly({1, -2, 1}, W);
        TruncatedSeries num = tpoly({1, -1}, W) - uS * tpoly({0, 1, 1}, W) - rad.sqrt();
        // /2tu: t-shift (low coefficient must vanish), then exact division by u.
        bg_ = num.shift_down(1).divide_by_var(Var::u).mul_scalar(make_rational(1, 2));
    }
    return *bg_;
}

const TruncatedSeries& GfCatalog::bargraph1() const {
    // Univariate evaluation; equality with bargraph() at u:=1 is a test.
    if (!bg1_) bg1_ = bargraph_at(TruncatedSeries::one(N_ + 1));
    return *bg1_;
}

const TruncatedSeries& GfCatalog::one_sided() const {
    if (!one_sided_) one_sided_ = tpoly({1, -1}, N_).recip().mul_tpower(2);
    return *one_sided_;
}

const TruncatedSeries& GfCatalog::pp2() const {
    if (!pp2_) {
        int W = N_ + 1;
        TruncatedSeries inner =
            tpoly({1, -3, 1, 3}, W) * tpoly({1, -1}, W).recip() -
            (tpoly({1, -1}, W) * tpoly({1, -3, -1, -1}, W)).sqrt();
        TruncatedSeries closed = inner.shift_down(1);
        TruncatedSeries assembled = (one_sided() + bargraph1()).mul_scalar(Rational(2));
        if (!(closed == assembled))
            throw std::logic_error("pp2: closed form and assembly disagree");
        pp2_ = std::move(closed);
    }
    return *pp2_;
}

TruncatedSeries GfCatalog::bargraph_at(const TruncatedSeries& g) const {
    auto val = g.valuation();
    if (!val) throw std::invalid_argument("bargraph_at: zero argument");
    int v = *val;
    if (g.order() < N_ + 1 + v)
        throw std::invalid_argument("bargraph_at: argument order too small");
    int W = N_ + 1 + v;
    TruncatedSeries gg = g.truncated(W);
    TruncatedSeries rad = tpoly({0, 0, 1, -2, 1}, W) * gg * gg -
                          tpoly({0, 2, 0, -2}, W) * gg + tpoly({1, -2, 1}, W);
    TruncatedSeries num = tpoly({1, -1}, W) - gg * tpoly({0, 1, 1}, W) - rad.sqrt();
    // num = 2 t g B(t,g); peel off t^(1+v) and the unit part of g.
    TruncatedSeries unit = gg.shift_down(v).truncated(N_);
    return num.shift_down(1 + v) * unit.recip().mul_scalar(make_rational(1, 2));
}

/* Both printed forms of K and L from q (at order N) and M := (B(t,q warg)+t)*warg,
 * where warg is the WSpec argument. The alternative forms are rearranged so
 * that the common factor t cancels structurally instead of being divided out:
 * with bracket := (1-q) q M + 1,
 *   Kalt = (q-1) [ (1-q)(1-qt) q M + t q (q-1) ] / [ q (1-qt)^2 bracket ]
 *   Lalt = (1-qt)(1-q^2 t)(q-1) q M / [ q (1-qt)^2 bracket ].            */
std::pair<TruncatedSeries, TruncatedSeries> GfCatalog::kl_from_M(
    const TruncatedSeries& qN, const TruncatedSeries& M) const {
    int W = qN.order();
    TruncatedSeries one = TruncatedSeries::one(W);

    TruncatedSeries D = one - tpoly({0, 1, 1}, W) * qN -
                        (tpoly({0, 1, -1, 0, -1}, W) * qN + tpoly({0, 0, 1}, W)) * M;
    if (!(D.coeff(0).is_constant() && D.coeff(0).as_constant() == 1))
        throw std::domain_error("K/L: denominator constant term is not 1");
    TruncatedSeries Dinv = D.recip();
    TruncatedSeries K =
        (tpoly({1, -1}, W) * qN - one - (tpoly({1, -1, 1}, W) * qN - one) * M) * Dinv;
    TruncatedSeries L =
        (tpoly({1, 0, 1}, W) - tpoly({1, -2, 2, 0, 1}, W) * qN) * M * Dinv;

    TruncatedSeries om_q = one - qN;                         // 1 - q
    TruncatedSeries qm1 = qN - one;                          // q - 1
    TruncatedSeries om_qt = one - qN.mul_tpower(1);          // 1 - qt
    TruncatedSeries om_q2t = one - (qN * qN).mul_tpower(1);  // 1 - q^2 t
    TruncatedSeries qM = qN * M;
    TruncatedSeries bracket = om_q * qM + one;
    TruncatedSeries DaltInv = (qN * om_qt * om_qt * bracket).recip();
    TruncatedSeries Kalt =
        (om_q * om_qt * qM + (qN * qm1).mul_tpower(1)) * qm1 * DaltInv;
    TruncatedSeries Lalt = om_qt * om_q2t * qm1 * qM * DaltInv;

    if (!(K == Kalt)) throw std::logic_error("K: primary and alternative forms disagree");
    if (!(L == Lalt)) throw std::logic_error("L: primary and alternative forms disagree");
    return {std::move(K), std::move(L)};
}

std::pair<TruncatedSeries, TruncatedSeries> GfCatalog::KL(const WSpec& ws) const {
    if (ws.j < 0) throw std::invalid_argument("KL: negative power");
    const TruncatedSeries& qN = q();
    TruncatedSeries tq2 = (qN * qN).mul_tpower(1);
    TruncatedSeries g = qN;                        // q^(2j+1) t^j, t-shift kept separate
    TruncatedSeries h = TruncatedSeries::one(N_);  // (t q^2)^j
    for (int i = 0; i < ws.j; ++i) {
        g = g * qN * qN;
        h = h * tq2;
    }
    Monomial mono = ws.with_w ? Monomial::var(Var::w) : Monomial::one();
    // B(t, q^(2j+1) [w] t^j) = B(t, q * (t q^2)^j [w])
    TruncatedSeries Bq = bargraph().subst(Var::u, g, mono, ws.j);
    TruncatedSeries M = (Bq + TruncatedSeries::t_power(1, N_)) * h;
    if (ws.with_w) M = M.mul_catpoly(CatPoly::term(mono, Rational(1)));
    return kl_from_M(qN, M);
}

/* R(t,w,w) = sum_k L((tq^2)^k w) prod_{j<k} K((tq^2)^j w); the univariate
 * variant evaluates at w := 1 with B computed through bargraph_at, which is
 * much cheaper at large orders than the symbolic substitution. */
TruncatedSeries GfCatalog::r_sum(bool symbolic) const {
    const int N = N_;
    const int jcap = N / 3 + 4;  // val K_j >= 3, so the product dies by then
    TruncatedSeries R = TruncatedSeries::zero(N);
    TruncatedSeries prod = TruncatedSeries::one(N);
    int lastVal = 0;

    // State for the fast path: g lives at order Wbig so bargraph_at can
    // shift down by 1+j; warg = (t q^2)^j at the target order.
    const int Wbig = N + 1 + jcap;
    TruncatedSeries qbig = q_at(Wbig);
    TruncatedSeries tq2big = (qbig * qbig).mul_tpower(1);
    TruncatedSeries gbig = qbig;  // q (t q^2)^j, including the t-shift
    TruncatedSeries tq2N = tq2big.truncated(N);
    TruncatedSeries warg = TruncatedSeries::one(N);
    TruncatedSeries qN = q().truncated(N);

    for (int j = 0;; ++j) {
        if (j > jcap) throw std::logic_error("r_sum: valuation bound violated");
        std::pair<TruncatedSeries, TruncatedSeries> kl =
            symbolic ? KL(WSpec{j, true})
                     : [&] {
                           TruncatedSeries Bq = bargraph_at(gbig);
                           TruncatedSeries M =
                               (Bq + TruncatedSeries::t_power(1, N)) * warg;
                           return kl_from_M(qN, M);
                       }();
        R += prod * kl.second;
        prod = prod * kl.first;
        auto v = prod.valuation();
        if (!v) break;
        if (j > 0 && *v <= lastVal)
            throw std::logic_error("r_sum: product valuation did not increase");
        lastVal = *v;
        if (*v > N) break;
        if (!symbolic) {
            gbig = gbig * tq2big;
            warg = warg * tq2N;
        }
    }
    return R;
}

const TruncatedSeries& GfCatalog::r11() const {
    if (!r11_) r11_ = r_sum(false);
    return *r11_;
}

TruncatedSeries GfCatalog::rww() const { return r_sum(true); }

const TruncatedSeries& GfCatalog::pp3() const {
    if (!pp3_) pp3_ = (one_sided() + bargraph1() + r11()).mul_scalar(Rational(2));
    return *pp3_;
}

IdentityReport GfCatalog::powers_of_q_identities() const {
    const TruncatedSeries& qq = q();
    int W = N_;
    TruncatedSeries q2 = qq * qq;
    TruncatedSeries q3 = q2 * qq;
    TruncatedSeries q4 = q2 * q2;
    IdentityReport rep;
    // q^2 = (t(t^2+1) q - t) / t^2
    rep.checks.emplace_back(
        "t^2 q^2 - t(t^2+1) q + t = 0",
        (q2.mul_tpower(2) - tpoly({0, 1, 0, 1}, W) * qq + tpoly({0, 1}, W)).is_zero());
    // q^3 = (t(t^4+2t^2-t+1) q - t^3 - t) / t^3
    rep.checks.emplace_back(
        "t^3 q^3 - t(t^4+2t^2-t+1) q + t^3 + t = 0",
        (q3.mul_tpower(3) - tpoly({0, 1, -1, 2, 0, 1}, W) * qq + tpoly({0, 1, 0, 1}, W))
            .is_zero());
    // q^4 = (t q (t^6+3t^4-2t^3+3t^2-2t+1) - t + t^2 - 2t^3 - t^5) / t^4
    rep.checks.emplace_back(
        "t^4 q^4 - t q (t^6+3t^4-2t^3+3t^2-2t+1) + t - t^2 + 2t^3 + t^5 = 0",
        (q4.mul_tpower(4) - tpoly({0, 1, -2, 3, -2, 3, 0, 1}, W) * qq +
         tpoly({0, 1, -1, 2, 0, 1}, W))
            .is_zero());
    return rep;
}

std::vector<std::pair<std::string, TruncatedSeries>> GfCatalog::positivity_series() const {
    const TruncatedSeries& qq = q();
    int W = N_;
    TruncatedSeries one = TruncatedSeries::one(W);
    std::vector<std::pair<std::string, TruncatedSeries>> out;
    out.emplace_back("q", qq);
    out.emplace_back("(1-t)q-1", tpoly({1, -1}, W) * qq - one);
    out.emplace_back("q^2 t", (qq * qq).mul_tpower(1));
    out.emplace_back("t(1+t)q", tpoly({0, 1, 1}, W) * qq);
    out.emplace_back("t(1-t-t^3)q+t^2",
                     tpoly({0, 1, -1, 0, -1}, W) * qq + tpoly({0, 0, 1}, W));
    return out;
}

}  // namespace pp::gf
