#include "one_sample.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "distributions.hpp"
#include "errors.hpp"
#include "exact_laws.hpp"
#include "ranks.hpp"

namespace npst {
namespace {

std::pair<std::vector<double>, std::vector<double>> paired_columns(
    const DataTable& t) {
  if (t.columns() != 2)
    throw data_error("paired test requires a table with exactly 2 columns, got " +
                     std::to_string(t.columns()));
  return {t.column(0), t.column(1)};
}

// Exact binomial tails at the observed count k.
void attach_binomial_tails(TestOutcome& o, int n, double p, int k) {
  Binomial law(n, p);
  double left = law.cdf(k);
  double right = k == 0 ? 1.0 : 1.0 - law.cdf(k - 1);
  o.exact_left = PValue{left};
  o.exact_right = PValue{right};
  o.exact_double = PValue{double_tail(left, right)};
}

}  // namespace

QuantileInterval quantile_confidence_interval(const NumericSequence& s, double q,
                                              double confidence) {
  const int n = static_cast<int>(s.size());
  if (n < 2) throw data_error("confidence interval requires n >= 2");
  if (!(q > 0.0 && q < 1.0)) throw usage_error("quantile must lie in (0,1)");
  if (!(confidence > 0.0 && confidence < 1.0))
    throw usage_error("confidence level must lie in (0,1)");

  Binomial law(n, q);
  // coverage of (X(r), X(s)) = P(r <= K <= s-1), K ~ Bin(n, q)
  auto coverage = [&](int r, int s) {
    return law.cdf(s - 1) - (r == 0 ? 0.0 : law.cdf(r - 1));
  };

  int best_r = -1, best_s = -1;
  if (std::fabs(q - 0.5) < 1e-12) {
    // symmetric-in-probability pair (r, n+1-r), widest r achieving the level
    for (int r = n / 2; r >= 1; --r) {
      int ss = n + 1 - r;
      if (ss > n || ss <= r) continue;
      if (coverage(r, ss) >= confidence - 1e-12) {
        best_r = r;
        best_s = ss;
        break;
      }
    }
  } else {
    // smallest width achieving the level, ties toward lower r
    for (int width = 1; width <= n - 1 && best_r < 0; ++width) {
      for (int r = 1; r + width <= n; ++r) {
        if (coverage(r, r + width) >= confidence - 1e-12) {
          best_r = r;
          best_s = r + width;
          break;
        }
      }
    }
  }
  if (best_r < 0) {
    double max_cov = 0;
    for (int r = 1; r <= n - 1; ++r)
      for (int ss = r + 1; ss <= n; ++ss) max_cov = std::max(max_cov, coverage(r, ss));
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.4f", max_cov);
    throw numeric_error("no order-statistic interval achieves confidence " +
                        std::to_string(confidence) + "; maximum achievable is " +
                        std::string(buf));
  }

  std::vector<double> sorted = s.values();
  std::sort(sorted.begin(), sorted.end());
  return QuantileInterval{best_r, best_s, sorted[static_cast<std::size_t>(best_r) - 1],
                          sorted[static_cast<std::size_t>(best_s) - 1],
                          coverage(best_r, best_s)};
}

TestOutcome population_quantile_test(const NumericSequence& s, double q,
                                     double hypothesized, Alternative alt) {
  TestOutcome o;
  o.test_name = "Population quantile";
  o.alternative = alt;
  if (!(q > 0.0 && q < 1.0)) throw usage_error("quantile must lie in (0,1)");

  int above = 0, dropped = 0, n = 0;
  for (double v : s.values()) {
    if (v == hypothesized) {
      ++dropped;
      continue;
    }
    ++n;
    if (v > hypothesized) ++above;
  }
  if (n == 0) throw numeric_error("degenerate sample: every value equals the "
                                  "hypothesized quantile");
  o.add_statistic("K", above);
  o.add_statistic("n", n);
  // under H0 each value exceeds the q-th quantile with probability 1-q
  attach_binomial_tails(o, n, 1.0 - q, above);
  double mu = n * (1.0 - q);
  double var = n * q * (1.0 - q);
  double z = (above - mu) / std::sqrt(var);
  o.add_statistic("Z", z);
  set_asymptotic_from_z(o, z);
  if (dropped > 0)
    o.notes.push_back("values equal to the hypothesized quantile dropped: " +
                      std::to_string(dropped));
  return o;
}

TestOutcome sign_test(const DataTable& paired, Alternative alt) {
  TestOutcome o;
  o.test_name = "Sign test";
  o.alternative = alt;

  auto [c1, c2] = paired_columns(paired);
  int plus = 0, minus = 0;
  for (std::size_t i = 0; i < c1.size(); ++i) {
    double d = c1[i] - c2[i];
    if (d > 0)
      ++plus;
    else if (d < 0)
      ++minus;
  }
  int n = plus + minus;
  if (n == 0) throw numeric_error("degenerate pairs: all differences are zero");
  int zeros = static_cast<int>(c1.size()) - n;

  o.add_statistic("plus", plus);
  o.add_statistic("minus", minus);
  o.add_statistic("n", n);
  attach_binomial_tails(o, n, 0.5, plus);
  double z = (plus - n / 2.0) / std::sqrt(n / 4.0);
  o.add_statistic("Z", z);
  set_asymptotic_from_z(o, z);
  if (zeros > 0) o.notes.push_back("zero differences dropped: " + std::to_string(zeros));
  return o;
}

TestOutcome wilcoxon_signed_ranks(const DataTable& paired, Alternative alt) {
  TestOutcome o;
  o.test_name = "Wilcoxon signed-ranks";
  o.alternative = alt;

  auto [c1, c2] = paired_columns(paired);
  std::vector<double> absd;
  std::vector<int> sign;
  for (std::size_t i = 0; i < c1.size(); ++i) {
    double d = c1[i] - c2[i];
    if (d == 0) continue;
    absd.push_back(std::fabs(d));
    sign.push_back(d > 0 ? 1 : -1);
  }
  const int n = static_cast<int>(absd.size());
  if (n == 0) throw numeric_error("degenerate pairs: all differences are zero");
  int zeros = static_cast<int>(c1.size()) - n;

  std::vector<int> ties;
  std::vector<double> r = midranks(absd, &ties);
  double wplus = 0;
  for (int i = 0; i < n; ++i)
    if (sign[static_cast<std::size_t>(i)] > 0) wplus += r[static_cast<std::size_t>(i)];
  double wminus = n * (n + 1.0) / 2.0 - wplus;
  o.add_statistic("W+", wplus);
  o.add_statistic("W-", wminus);
  o.add_statistic("n", n);

  if (n <= 200) {
    if (ties.empty())
      set_exact_from_law(o, *signed_rank_law(n), wplus);
    else
      set_exact_from_law(o, signed_rank_law_tied(r), wplus);
  }

  double mu = n * (n + 1.0) / 4.0;
  double var = n * (n + 1.0) * (2.0 * n + 1.0) / 24.0 - tie_correction_sum(ties) / 48.0;
  if (var <= 0) throw numeric_error("degenerate differences: zero variance");
  double z = (wplus - mu) / std::sqrt(var);
  o.add_statistic("Z", z);
  set_asymptotic_from_z(o, z);

  if (zeros > 0) o.notes.push_back("zero differences dropped: " + std::to_string(zeros));
  if (!ties.empty())
    o.notes.push_back("midranks used for " + std::to_string(ties.size()) +
                      " tied group(s); variance tie-corrected");
  return o;
}

}  // namespace npst
