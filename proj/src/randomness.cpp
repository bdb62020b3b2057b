#include "randomness.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <set>

#include "errors.hpp"
#include "exact_laws.hpp"
#include "ranks.hpp"

namespace npst {
namespace {

// Shared tail/asymptotics for a runs count over n1+n2 binary labels.
void attach_runs_tails(TestOutcome& o, int runs, int n1, int n2) {
  o.add_statistic("R", runs);
  o.add_statistic("n1", n1);
  o.add_statistic("n2", n2);
  set_exact_from_law(o, *runs_law(n1, n2), runs);
  double n = n1 + n2;
  double mu = 1.0 + 2.0 * n1 * n2 / n;
  double var = 2.0 * n1 * n2 * (2.0 * n1 * n2 - n) / (n * n * (n - 1.0));
  if (var > 0) {
    double z = (runs - mu) / std::sqrt(var);
    o.add_statistic("Z", z);
    set_asymptotic_from_z(o, z);
  }
}

int count_runs(const std::vector<int>& labels) {
  int runs = labels.empty() ? 0 : 1;
  for (std::size_t i = 1; i < labels.size(); ++i)
    if (labels[i] != labels[i - 1]) ++runs;
  return runs;
}

}  // namespace

TestOutcome number_of_runs(const StringSequence& s, Alternative alt) {
  TestOutcome o;
  o.test_name = "Number of runs";
  o.alternative = alt;

  std::set<std::string> symbols(s.tokens().begin(), s.tokens().end());
  if (symbols.size() != 2)
    throw data_error("number of runs requires exactly 2 distinct symbols, found " +
                     std::to_string(symbols.size()));
  const std::string& first = *symbols.begin();
  std::vector<int> labels;
  labels.reserve(s.size());
  int n1 = 0;
  for (const auto& t : s.tokens()) {
    labels.push_back(t == first ? 0 : 1);
    if (t == first) ++n1;
  }
  int n2 = static_cast<int>(s.size()) - n1;
  attach_runs_tails(o, count_runs(labels), n1, n2);
  return o;
}

TestOutcome runs_up_down(const NumericSequence& s, Alternative alt) {
  TestOutcome o;
  o.test_name = "Runs up and down";
  o.alternative = alt;

  const auto& x = s.values();
  const int n = static_cast<int>(x.size());
  if (n < 2) throw data_error("runs up and down requires at least 2 values");
  std::vector<int> signs;
  signs.reserve(x.size() - 1);
  for (std::size_t i = 1; i < x.size(); ++i) {
    if (x[i] == x[i - 1])
      throw numeric_error("tie between consecutive values at positions " +
                          std::to_string(i) + " and " + std::to_string(i + 1));
    signs.push_back(x[i] > x[i - 1] ? 1 : 0);
  }
  int runs = count_runs(signs);
  o.add_statistic("R", runs);

  if (n <= 64) set_exact_from_law(o, *updown_runs_law(n), runs);
  double mu = (2.0 * n - 1.0) / 3.0;
  double var = (16.0 * n - 29.0) / 90.0;
  double z = (runs - mu) / std::sqrt(var);
  o.add_statistic("Z", z);
  set_asymptotic_from_z(o, z);
  return o;
}

TestOutcome runs_up_down_median(const NumericSequence& s, Alternative alt) {
  TestOutcome o;
  o.test_name = "Runs up and down (median)";
  o.alternative = alt;

  double med = median(s.values());
  std::vector<int> labels;
  int n1 = 0, n2 = 0, dropped = 0;
  for (double v : s.values()) {
    if (v == med) {
      ++dropped;
      continue;
    }
    labels.push_back(v > med ? 1 : 0);
    v > med ? ++n1 : ++n2;
  }
  if (n1 == 0 || n2 == 0)
    throw numeric_error("degenerate sequence: no values on both sides of the median");
  o.add_statistic("median", med);
  attach_runs_tails(o, count_runs(labels), n1, n2);
  if (dropped > 0)
    o.notes.push_back("values equal to the median dropped: " + std::to_string(dropped));
  return o;
}

TestOutcome von_neumann(const NumericSequence& s, Alternative alt) {
  TestOutcome o;
  o.test_name = "Von Neumann ranks";
  o.alternative = alt;

  const int n = static_cast<int>(s.size());
  if (n < 3) throw data_error("von Neumann test requires at least 3 values");
  std::vector<int> ties;
  std::vector<double> r = midranks(s.values(), &ties);
  double nm = 0;
  for (std::size_t i = 1; i < r.size(); ++i) {
    double d = r[i] - r[i - 1];
    nm += d * d;
  }
  double denom = n * (static_cast<double>(n) * n - 1.0) / 12.0;
  double rvn = nm / denom;
  o.add_statistic("NM", nm);
  o.add_statistic("RVN", rvn);

  if (n <= 10) {
    // permutation law of NM over orderings of the observed midranks
    std::vector<double> sorted = r;
    std::sort(sorted.begin(), sorted.end());
    std::map<long long, BigInt> acc;
    do {
      double v = 0;
      for (std::size_t i = 1; i < sorted.size(); ++i) {
        double d = sorted[i] - sorted[i - 1];
        v += d * d;
      }
      acc[std::llround(4.0 * v)] += 1;
    } while (std::next_permutation(sorted.begin(), sorted.end()));
    set_exact_from_law(o, DiscreteLaw::from_scaled(acc, 0.25), nm);
  }
  double var = 4.0 * (n - 2.0) * (5.0 * n * n - 2.0 * n - 9.0) /
               (5.0 * n * (n + 1.0) * (n - 1.0) * (n - 1.0));
  double z = (rvn - 2.0) / std::sqrt(var);
  o.add_statistic("Z", z);
  set_asymptotic_from_z(o, z);
  if (!ties.empty())
    o.notes.push_back("midranks used for " + std::to_string(ties.size()) +
                      " tied group(s)");
  return o;
}

}  // namespace npst
