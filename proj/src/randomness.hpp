#ifndef NPST_RANDOMNESS_HPP_
#define NPST_RANDOMNESS_HPP_

#include "outcome.hpp"
#include "sequence.hpp"

namespace npst {

// Number-of-runs test on a binary symbolic sequence (exactly two
// distinct symbols).
TestOutcome number_of_runs(const StringSequence& s, Alternative alt);

// Runs of increasing/decreasing steps in a numeric sequence; consecutive
// equal values are rejected.
TestOutcome runs_up_down(const NumericSequence& s, Alternative alt);

// Dichotomize around the sample median (values equal to the median are
// dropped), then apply the number-of-runs law.
TestOutcome runs_up_down_median(const NumericSequence& s, Alternative alt);

// Rank von Neumann test: NM = sum of squared successive rank
// differences, RVN = NM / (n(n^2-1)/12).
TestOutcome von_neumann(const NumericSequence& s, Alternative alt);

}  // namespace npst

#endif  // NPST_RANDOMNESS_HPP_
