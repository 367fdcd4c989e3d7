#include "pp/chisq.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace pp::stats {

namespace {

// Regularized incomplete gamma functions, split at x = a + 1 as usual:
// the series for P(a,x) converges fast below, the Lentz continued fraction
// for Q(a,x) above.

double gamma_p_series(double a, double x) {
    double ap = a, sum = 1.0 / a, del = sum;
    for (int n = 0; n < 500; ++n) {
        ap += 1;
        del *= x / ap;
        sum += del;
        if (std::fabs(del) < std::fabs(sum) * 1e-16) break;
    }
    return sum * std::exp(-x + a * std::log(x) - std::lgamma(a));
}

double gamma_q_cf(double a, double x) {
    const double tiny = 1e-300;
    double b = x + 1 - a, c = 1 / tiny, d = 1 / b, h = d;
    for (int i = 1; i <= 500; ++i) {
        double an = -i * (i - a);
        b += 2;
        d = an * d + b;
        if (std::fabs(d) < tiny) d = tiny;
        c = b + an / c;
        if (std::fabs(c) < tiny) c = tiny;
        d = 1 / d;
        double del = d * c;
        h *= del;
        if (std::fabs(del - 1) < 1e-16) break;
    }
    return h * std::exp(-x + a * std::log(x) - std::lgamma(a));
}

double gamma_q(double a, double x) {
    if (x < 0 || a <= 0) throw std::invalid_argument("gamma_q: bad arguments");
    if (x == 0) return 1;
    return x < a + 1 ? 1 - gamma_p_series(a, x) : gamma_q_cf(a, x);
}

}  // namespace

double chi_square_pvalue(double statistic, double dof) {
    if (dof <= 0) throw std::invalid_argument("chi_square_pvalue: dof must be positive");
    if (statistic < 0) throw std::invalid_argument("chi_square_pvalue: negative statistic");
    return gamma_q(dof / 2, statistic / 2);
}

Uniformity uniformity(const std::vector<long long>& observed, long long total_bins) {
    if (total_bins < 2) throw std::invalid_argument("uniformity: need at least two bins");
    if ((long long)observed.size() > total_bins)
        throw std::invalid_argument("uniformity: more bins observed than exist");
    long long n = 0;
    for (long long o : observed) {
        if (o < 0) throw std::invalid_argument("uniformity: negative count");
        n += o;
    }
    if (n == 0) throw std::invalid_argument("uniformity: no observations");
    double e = double(n) / double(total_bins);
    double stat = 0;
    for (long long o : observed) {
        double d = double(o) - e;
        stat += d * d / e;
    }
    stat += double(total_bins - (long long)observed.size()) * e;  // empty bins
    Uniformity r;
    r.statistic = stat;
    r.dof = double(total_bins - 1);
    r.observed_bins = (long long)observed.size();
    r.p_value = chi_square_pvalue(stat, r.dof);
    return r;
}

}  // namespace pp::stats
