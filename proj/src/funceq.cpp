#include "pp/funceq.hpp"

#include <stdexcept>
#include <string>

namespace pp::funceq {

namespace {

const Monomial kU = Monomial::var(Var::u);
const Monomial kW = Monomial::var(Var::w);
const Monomial kX = Monomial::var(Var::x);

CatPoly cat_term(const Monomial& m) { return CatPoly::term(m, Rational(1)); }

// First order (inclusive) at which two iterates differ, or order+1 if equal.
int first_difference(const TruncatedSeries& a, const TruncatedSeries& b) {
    for (int n = 0; n <= a.order(); ++n)
        if (!(a.coeff(n) == b.coeff(n))) return n;
    return a.order() + 1;
}

void check_contraction(int diff, int pass, int order, const char* what) {
    if (diff < std::min(pass, order) + 1)
        throw std::logic_error(std::string(what) +
                               ": iteration not contracting at pass " +
                               std::to_string(pass));
}

}  // namespace

TruncatedSeries solve_feqB(int order) {
    const int N = order;
    // 1/(1-wt) = sum_k w^k t^k
    TruncatedSeries geo(N);
    for (int k = 0; k <= N; ++k) geo.set_coeff(k, cat_term(kW.pow(k)));
    CatPoly uw = cat_term(kU * kW);
    TruncatedSeries single = geo.mul_catpoly(uw).mul_tpower(2);  // u t^2 w/(1-wt)

    TruncatedSeries B = TruncatedSeries::zero(N);
    int maxPasses = N + 6;
    for (int pass = 1; pass <= maxPasses; ++pass) {
        TruncatedSeries shorter =
            B.divided_difference(Var::w, Monomial::one(), 0).mul_catpoly(uw).mul_tpower(1);
        TruncatedSeries longer = (B * geo).mul_catpoly(uw).mul_tpower(2);
        TruncatedSeries next = single + shorter + longer;
        int diff = first_difference(next, B);
        B = std::move(next);
        if (diff > N) return B;
        check_contraction(diff, pass, N, "solve_feqB");
    }
    throw std::logic_error("solve_feqB: no fixed point within pass budget");
}

TruncatedSeries solve_feqR(int order, const gf::GfCatalog& cat) {
    const int N = order;
    if (cat.order() < N) throw std::invalid_argument("solve_feqR: catalog order too small");
    // u t (B(t,u) + t)
    TruncatedSeries base =
        (cat.bargraph().truncated(N) + TruncatedSeries::t_power(1, N))
            .mul_catpoly(cat_term(kU))
            .mul_tpower(1);

    TruncatedSeries R = TruncatedSeries::zero(N);
    int maxPasses = N + 6;
    for (int pass = 1; pass <= maxPasses; ++pass) {
        // ut (R(t,w,w) - R(t,u,w)) / (w-u)
        TruncatedSeries topEq =
            R.divided_difference(Var::u, kW, 0).mul_catpoly(cat_term(kU)).mul_tpower(1);
        // u t^2 (R(t,u,w) - R(t,u,ut)) / (w-ut)
        TruncatedSeries topLonger =
            R.divided_difference(Var::w, kU, 1).mul_catpoly(cat_term(kU)).mul_tpower(2);
        // R(t,u,ut) ut (B(t,u) + t)
        TruncatedSeries inflate = R.subst(Var::w, TruncatedSeries::one(N), kU, 1) * base;
        TruncatedSeries next = base + topEq + topLonger + inflate;
        int diff = first_difference(next, R);
        R = std::move(next);
        if (diff > N) return R;
        check_contraction(diff, pass, N, "solve_feqR");
    }
    throw std::logic_error("solve_feqR: no fixed point within pass budget");
}

FGH solve_feq4sd(int order) {
    const int N = order;
    CatPoly ux = cat_term(kU * kX);
    TruncatedSeries seed = TruncatedSeries::term(cat_term(kU * kX), 2, N);  // t^2 u x

    // the two row-extension summands common to all three equations
    auto common = [&](const TruncatedSeries& X) {
        TruncatedSeries a =
            X.divided_difference(Var::u, kW, 0).mul_catpoly(ux).mul_tpower(1);
        TruncatedSeries b =
            X.divided_difference(Var::w, kU, 1).mul_catpoly(ux).mul_tpower(2);
        return a + b;
    };
    // argument permutations of the coupled system, as simultaneous remappings
    auto at_xxu = [&](const TruncatedSeries& X) {  // X(x,x,u)
        return X.subst_all({VarTarget{kX, 0}, VarTarget{kX, 0}, VarTarget{kU, 0}});
    };
    auto at_x_xt_w = [&](const TruncatedSeries& X) {  // X(x,xt,w)
        return X.subst_all({VarTarget{kX, 0}, VarTarget{kX, 1}, VarTarget{kW, 0}});
    };

    FGH s{TruncatedSeries::zero(N), TruncatedSeries::zero(N), TruncatedSeries::zero(N), 0};
    int maxPasses = N + 6;
    for (int pass = 1; pass <= maxPasses; ++pass) {
        // Gauss-Seidel sweep: G first, then F and H from the fresh G
        TruncatedSeries iG =
            seed + at_x_xt_w(s.F).mul_catpoly(ux).mul_tpower(2) +
            at_xxu(s.H).mul_catpoly(cat_term(kX));
        TruncatedSeries nG = common(s.G) + iG;

        TruncatedSeries nF = common(s.F) + at_xxu(nG);

        TruncatedSeries gShift = at_x_xt_w(nG);
        TruncatedSeries iH = [&] {
            try {
                return gShift.divide_by_var(Var::w);
            } catch (const std::domain_error&) {
                throw std::logic_error(
                    "solve_feq4sd: G(x,xt,w) not divisible by w; first coefficients: " +
                    gShift.str(4));
            }
        }();
        TruncatedSeries nH = common(s.H) + iH.mul_catpoly(ux).mul_tpower(2);

        int diff = std::min({first_difference(nF, s.F), first_difference(nG, s.G),
                             first_difference(nH, s.H)});
        s.F = std::move(nF);
        s.G = std::move(nG);
        s.H = std::move(nH);
        s.passes = pass;
        if (diff > N) return s;
        check_contraction(diff, pass, N, "solve_feq4sd");
    }
    throw std::logic_error("solve_feq4sd: no fixed point within pass budget");
}

TruncatedSeries pp_all_gf(int order) {
    FGH s = solve_feq4sd(order);
    TruncatedSeries diag = s.F.subst_value(Var::u, Rational(1))
                               .subst_value(Var::w, Rational(1))
                               .subst_value(Var::x, Rational(1));
    return diag.mul_scalar(Rational(8));
}

}  // namespace pp::funceq
