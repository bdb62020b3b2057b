#include "ranks.hpp"

#include <algorithm>
#include <numeric>

#include "errors.hpp"

namespace npst {

std::vector<double> midranks(std::span<const double> values,
                             std::vector<int>* tie_sizes) {
  const std::size_t n = values.size();
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });

  std::vector<double> ranks(n);
  std::size_t i = 0;
  while (i < n) {
    std::size_t j = i;
    while (j < n && values[order[j]] == values[order[i]]) ++j;
    double mid = (static_cast<double>(i + 1) + static_cast<double>(j)) / 2.0;
    for (std::size_t t = i; t < j; ++t) ranks[order[t]] = mid;
    if (tie_sizes && j - i >= 2) tie_sizes->push_back(static_cast<int>(j - i));
    i = j;
  }
  return ranks;
}

double tie_correction_sum(const std::vector<int>& tie_sizes) {
  double sum = 0;
  for (int t : tie_sizes) sum += static_cast<double>(t) * t * t - t;
  return sum;
}

double median(std::vector<double> values) {
  if (values.empty()) throw numeric_error("median of an empty sample");
  std::sort(values.begin(), values.end());
  std::size_t n = values.size();
  if (n % 2 == 1) return values[n / 2];
  return 0.5 * (values[n / 2 - 1] + values[n / 2]);
}

}  // namespace npst
