#pragma once

#include <vector>

namespace pp::stats {

// Upper-tail p-value of the chi-square distribution: Q(dof/2, x/2).
double chi_square_pvalue(double statistic, double dof);

struct Uniformity {
    double statistic = 0;
    double dof = 0;
    double p_value = 1;
    long long observed_bins = 0;
};

// Pearson test of `observed` draws against the uniform distribution on
// `total_bins` cells.  `observed` lists the per-bin counts of the bins that
// were hit; the remaining total_bins - observed.size() bins count as zero.
Uniformity uniformity(const std::vector<long long>& observed, long long total_bins);

}  // namespace pp::stats
