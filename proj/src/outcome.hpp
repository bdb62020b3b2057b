#ifndef NPST_OUTCOME_HPP_
#define NPST_OUTCOME_HPP_

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace npst {

class DiscreteLaw;

enum class Alternative { two_sided, left, right, ordered_increasing, control_comparison };

const char* alternative_name(Alternative a);
Alternative parse_alternative(const std::string& name);

// A reported probability. bracket 0: point value; -1: bound "p < value";
// +1: bound "p > value" (critical-value-table reporting).
struct PValue {
  double value;
  int bracket = 0;
};

// Uniform result record shared by all tests: named statistics in a
// fixed order plus up to six tail probabilities. Absent optionals mean
// "not available", never "approximated silently".
struct TestOutcome {
  std::string test_name;
  std::optional<Alternative> alternative;
  std::vector<std::pair<std::string, double>> statistics;
  std::optional<PValue> exact_left, exact_right, exact_double;
  std::optional<PValue> asymptotic_left, asymptotic_right, asymptotic_double;
  std::vector<std::string> notes;

  void add_statistic(std::string name, double value) {
    statistics.emplace_back(std::move(name), value);
  }
  // Lookup by name; NaN if absent.
  double statistic(const std::string& name) const;
  bool has_statistic(const std::string& name) const;
};

// min(1, 2 min(left, right)) - the doubling convention for two-sided
// exact p-values.
double double_tail(double left, double right);

// Attaches exact left/right/double from a finite null law evaluated at
// the observed statistic.
void set_exact_from_law(TestOutcome& o, const DiscreteLaw& law, double observed);

// Attaches asymptotic left/right/double from a standard normal score.
void set_asymptotic_from_z(TestOutcome& o, double z);

// Deterministic text report: test name, statistics and p-values to four
// decimals, notes verbatim.
std::string format_report(const TestOutcome& o);

// Machine-readable mirror of the outcome (stable field order).
std::string to_json(const TestOutcome& o);

}  // namespace npst

#endif  // NPST_OUTCOME_HPP_
