#ifndef NPST_TWO_SAMPLE_HPP_
#define NPST_TWO_SAMPLE_HPP_

#include <optional>
#include <vector>

#include "outcome.hpp"
#include "sequence.hpp"

namespace npst {

struct TwoSamples {
  std::vector<double> x;  // sample 1
  std::vector<double> y;  // sample 2
};

// Runs test on the origin labels of the sorted pooled sample;
// cross-sample ties are rejected (the run sequence would be ill-defined).
TestOutcome wald_wolfowitz(const TwoSamples& ts);

// 2x2 above/not-above split at the pooled midpoint median; exact
// hypergeometric tails, asymptotic chi-square df 1.
TestOutcome median_test(const TwoSamples& ts);

// Mathisen's control-median test: V = #(sample-2 values below the
// ceil(m/2)-th order statistic of sample 1).
TestOutcome control_median_test(const TwoSamples& ts);

// Two-sample Kolmogorov-Smirnov. Exact tails by lattice-path counting
// (tie-free, m*n <= 1e4) or assignment enumeration under ties.
TestOutcome ks_two_sample(const TwoSamples& ts, Alternative alt);

// Rank-sum test; W = rank sum of sample 2. When `confidence` is given, a
// shift interval for location(Y) - location(X) from the ordered pairwise
// differences plus the Hodges-Lehmann point estimate.
TestOutcome wilcoxon_rank_sum(const TwoSamples& ts, Alternative alt,
                              std::optional<double> confidence = std::nullopt);

// Normal-scores location test: scores Phi^-1(midrank / (N+1)).
TestOutcome van_der_waerden(const TwoSamples& ts, Alternative alt);

enum class ScaleVariant {
  david_barton,
  freund_ansari_bradley,
  mood,
  klotz,
  siegel_tukey,
  sukhatme
};

// Linear-rank scale tests (Sukhatme is the pairwise-count exception).
// The statistic is always computed on sample 2.
TestOutcome scale_test(const TwoSamples& ts, ScaleVariant variant, Alternative alt);

}  // namespace npst

#endif  // NPST_TWO_SAMPLE_HPP_
