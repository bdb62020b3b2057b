#ifndef NPST_GOODNESS_OF_FIT_HPP_
#define NPST_GOODNESS_OF_FIT_HPP_

#include <vector>

#include "critical_tables.hpp"
#include "distributions.hpp"
#include "outcome.hpp"
#include "sequence.hpp"

namespace npst {

// Pearson chi-square fit of observed category counts against expected
// probabilities (summing to 1) or expected counts (summing to the
// observed total). df = k - 1 - estimated_params.
TestOutcome chi_square_gof(const std::vector<double>& observed,
                           const std::vector<double>& expected,
                           int estimated_params = 0);

// One-sample Kolmogorov-Smirnov against a fully specified continuous
// target. Exact two-sided p from the Dn law, one-sided exact tails via
// Birnbaum-Tingey, asymptotic via the Kolmogorov limit.
TestOutcome ks_one_sample(const NumericSequence& s, const ContinuousDistribution& target,
                          Alternative alt);

// Lilliefors test: target family with parameters estimated from the
// sample; p reported as a critical-value table bound.
TestOutcome lilliefors(const NumericSequence& s, GofFamily family);

// Anderson-Darling test with estimated parameters and the standard
// small-sample statistic adjustment; p as a table bound.
TestOutcome anderson_darling(const NumericSequence& s, GofFamily family);

// Shared Dn machinery (exposed for tests): sup over both step limits.
struct KsStatistics {
  double d_plus, d_minus, d;
};
KsStatistics ks_statistics(std::vector<double> fitted_cdf_values);

}  // namespace npst

#endif  // NPST_GOODNESS_OF_FIT_HPP_
