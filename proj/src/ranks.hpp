#ifndef NPST_RANKS_HPP_
#define NPST_RANKS_HPP_

#include <span>
#include <vector>

namespace npst {

// Midranks of `values` in their given order (tied values share the mean
// of the positions they would occupy). If `tie_sizes` is non-null it
// receives the size of every tie group of size >= 2.
std::vector<double> midranks(std::span<const double> values,
                             std::vector<int>* tie_sizes = nullptr);

// Sum of t^3 - t over tie groups.
double tie_correction_sum(const std::vector<int>& tie_sizes);

// Sample median, midpoint convention for even length.
double median(std::vector<double> values);

}  // namespace npst

#endif  // NPST_RANKS_HPP_
