#ifndef NPST_CRITICAL_TABLES_HPP_
#define NPST_CRITICAL_TABLES_HPP_

#include <string>

namespace npst {

enum class GofStatistic { lilliefors_d, anderson_darling_a2 };
enum class GofFamily { normal, exponential };

// A p-value bound read off a critical-value table:
// relation -1 means "p < alpha", +1 means "p > alpha".
struct TableBound {
  double alpha;
  int relation;
};

// Tightest bound among alpha in {0.20, 0.15, 0.10, 0.05, 0.01} that the
// statistic crosses at sample size n. Linear interpolation between
// tabulated sizes; beyond the largest tabulated n the Lilliefors rows
// scale as c/sqrt(n) and the adjusted Anderson-Darling rows are flat.
TableBound table_bound(GofStatistic s, GofFamily f, int n, double statistic);

// Critical value itself (used by tests and reports).
double critical_value(GofStatistic s, GofFamily f, int n, double alpha);

// The embedded plain-text resource (identical to
// resources/critical_values.txt).
const std::string& critical_values_resource_text();

}  // namespace npst

#endif  // NPST_CRITICAL_TABLES_HPP_
