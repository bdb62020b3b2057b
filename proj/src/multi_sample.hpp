#ifndef NPST_MULTI_SAMPLE_HPP_
#define NPST_MULTI_SAMPLE_HPP_

#include <vector>

#include "outcome.hpp"

namespace npst {

using Samples = std::vector<std::vector<double>>;

// k-sample Brown-Mood median test: above/not-above split at the pooled
// midpoint median, chi-square with df = k - 1.
TestOutcome extended_median_test(const Samples& samples);

// Kruskal-Wallis H with midranks and tie correction; exact right tail by
// assignment enumeration for pooled size <= 10.
TestOutcome kruskal_wallis(const Samples& samples);

// Jonckheere-Terpstra B for the ordered alternative (ties count 1/2);
// exact law by Mann-Whitney convolution for tie-free data, N <= 20.
TestOutcome jonckheere_terpstra(const Samples& samples);

// Chakraborti-Desu comparison with a control: W = total count of
// treatment values below the control median (left-tail rejection).
TestOutcome chakraborti_desu(const Samples& samples, int control_index);

}  // namespace npst

#endif  // NPST_MULTI_SAMPLE_HPP_
