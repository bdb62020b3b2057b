#ifndef NPST_ONE_SAMPLE_HPP_
#define NPST_ONE_SAMPLE_HPP_

#include "outcome.hpp"
#include "sequence.hpp"
#include "table.hpp"

namespace npst {

// Distribution-free confidence interval for the q-th quantile, built
// from a pair of order statistics.
struct QuantileInterval {
  int r, s;              // 1-based order-statistic indices, r < s
  double lower, upper;   // X(r), X(s)
  double achieved;       // exact coverage of (X(r), X(s))
};

QuantileInterval quantile_confidence_interval(const NumericSequence& s, double q,
                                              double confidence);

// Binomial test of H0: the q-th population quantile equals `hypothesized`
// (values equal to it are dropped).
TestOutcome population_quantile_test(const NumericSequence& s, double q,
                                     double hypothesized, Alternative alt);

// Sign test on paired columns (col1 - col2); zero differences dropped.
TestOutcome sign_test(const DataTable& paired, Alternative alt);

// Wilcoxon signed-ranks test on paired columns; midranks of |d|, zero
// differences dropped, exact law by subset-sum DP over sign patterns.
TestOutcome wilcoxon_signed_ranks(const DataTable& paired, Alternative alt);

}  // namespace npst

#endif  // NPST_ONE_SAMPLE_HPP_
