#pragma once

// Goodness-of-fit helpers for checking generators against closed forms.

#include <functional>
#include <span>

namespace spikelv {

/// Kolmogorov-Smirnov statistic sup |F_n(x) - F(x)| of a sample (any order).
double ks_statistic(std::span<const double> sample, const std::function<double(double)>& cdf);

/// Asymptotic p-value for a one-sample KS statistic with Stephens' small-n
/// correction lambda = (sqrt(n) + 0.12 + 0.11/sqrt(n)) * d.
double ks_pvalue(double d, std::size_t n);

/// Upper-tail probability of a chi-square statistic with `dof` degrees of freedom.
double chi_square_pvalue(double statistic, double dof);

}  // namespace spikelv
