#include "goodness_of_fit.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "errors.hpp"
#include "kolmogorov.hpp"
#include "special.hpp"

namespace npst {

KsStatistics ks_statistics(std::vector<double> u) {
  std::sort(u.begin(), u.end());
  const double n = static_cast<double>(u.size());
  double dplus = 0, dminus = 0;
  for (std::size_t i = 0; i < u.size(); ++i) {
    dplus = std::max(dplus, (static_cast<double>(i) + 1.0) / n - u[i]);
    dminus = std::max(dminus, u[i] - static_cast<double>(i) / n);
  }
  return KsStatistics{dplus, dminus, std::max(dplus, dminus)};
}

TestOutcome chi_square_gof(const std::vector<double>& observed,
                           const std::vector<double>& expected,
                           int estimated_params) {
  TestOutcome o;
  o.test_name = "Chi-square goodness of fit";

  const std::size_t k = observed.size();
  if (k < 2) throw data_error("chi-square fit requires at least 2 categories");
  if (expected.size() != k)
    throw data_error("expected entries (" + std::to_string(expected.size()) +
                     ") do not match categories (" + std::to_string(k) + ")");
  double total_obs = 0;
  for (double v : observed) {
    if (v < 0) throw data_error("negative observed count");
    total_obs += v;
  }
  double total_exp = 0;
  for (double v : expected) {
    if (v <= 0) throw data_error("zero or negative expected entry");
    total_exp += v;
  }
  std::vector<double> e(k);
  if (std::fabs(total_exp - 1.0) <= 1e-9) {
    for (std::size_t i = 0; i < k; ++i) e[i] = expected[i] * total_obs;
  } else if (std::fabs(total_exp - total_obs) <= 1e-6 * std::max(1.0, total_obs)) {
    e = expected;
  } else {
    throw data_error("expected entries must be probabilities summing to 1 "
                     "or counts matching the observed total");
  }

  double q = 0;
  bool small_cells = false;
  for (std::size_t i = 0; i < k; ++i) {
    double d = observed[i] - e[i];
    q += d * d / e[i];
    if (e[i] < 5.0) small_cells = true;
  }
  int df = static_cast<int>(k) - 1 - estimated_params;
  if (df < 1) throw usage_error("degrees of freedom fell below 1");

  o.add_statistic("Q", q);
  o.add_statistic("df", df);
  o.asymptotic_right = PValue{1.0 - chi_square_cdf(q, df)};
  if (small_cells)
    o.notes.push_back("warning: some expected counts are below 5; "
                      "the chi-square approximation may be poor");
  return o;
}

TestOutcome ks_one_sample(const NumericSequence& s, const ContinuousDistribution& target,
                          Alternative alt) {
  TestOutcome o;
  o.test_name = "Kolmogorov-Smirnov (one sample)";
  o.alternative = alt;

  const int n = static_cast<int>(s.size());
  std::vector<double> u(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) u[i] = cdf(target, s[i]);
  KsStatistics ks = ks_statistics(std::move(u));
  o.add_statistic("Dn", ks.d);
  o.add_statistic("Dn+", ks.d_plus);
  o.add_statistic("Dn-", ks.d_minus);

  o.exact_right = PValue{birnbaum_tingey_sf(n, ks.d_plus)};
  o.exact_left = PValue{birnbaum_tingey_sf(n, ks.d_minus)};
  o.exact_double = PValue{1.0 - kolmogorov_exact_cdf(n, ks.d)};

  double root_n = std::sqrt(static_cast<double>(n));
  o.asymptotic_right =
      PValue{std::clamp(std::exp(-2.0 * n * ks.d_plus * ks.d_plus), 0.0, 1.0)};
  o.asymptotic_left =
      PValue{std::clamp(std::exp(-2.0 * n * ks.d_minus * ks.d_minus), 0.0, 1.0)};
  o.asymptotic_double = PValue{kolmogorov_limit_sf(root_n * ks.d)};
  o.notes.push_back("target: " + describe(target));
  return o;
}

namespace {

struct FittedCdf {
  std::vector<double> u;       // fitted cdf at each (unsorted) value
  std::string note;
  double p1, p2;               // estimated parameters for the report
  const char* n1;
  const char* n2;
};

FittedCdf fit_family(const NumericSequence& s, GofFamily family) {
  const auto& x = s.values();
  const double n = static_cast<double>(x.size());
  FittedCdf f;
  f.u.resize(x.size());
  if (family == GofFamily::normal) {
    double mean = std::accumulate(x.begin(), x.end(), 0.0) / n;
    double ss = 0;
    for (double v : x) ss += (v - mean) * (v - mean);
    if (ss == 0) throw data_error("zero sample variance: normal fit impossible");
    double sd = std::sqrt(ss / (n - 1.0));
    for (std::size_t i = 0; i < x.size(); ++i)
      f.u[i] = normal_cdf((x[i] - mean) / sd);
    f.note = "fitted normal, sd estimated with divisor n-1";
    f.p1 = mean; f.p2 = sd; f.n1 = "mean"; f.n2 = "sd";
  } else {
    double mean = std::accumulate(x.begin(), x.end(), 0.0) / n;
    for (double v : x)
      if (v <= 0) throw data_error("exponential fit requires positive values");
    for (std::size_t i = 0; i < x.size(); ++i) f.u[i] = -std::expm1(-x[i] / mean);
    f.note = "fitted exponential, rate = 1/mean";
    f.p1 = mean; f.p2 = 1.0 / mean; f.n1 = "mean"; f.n2 = "rate";
  }
  return f;
}

void attach_table_bound(TestOutcome& o, GofStatistic stat, GofFamily family, int n,
                        double value) {
  TableBound b = table_bound(stat, family, n, value);
  o.asymptotic_double = PValue{b.alpha, b.relation};
  o.notes.push_back("p-value is a critical-value table bound, not a point value");
}

}  // namespace

TestOutcome lilliefors(const NumericSequence& s, GofFamily family) {
  TestOutcome o;
  o.test_name = family == GofFamily::normal ? "Lilliefors (normal)"
                                            : "Lilliefors (exponential)";
  const int n = static_cast<int>(s.size());
  if (n < 4) throw data_error("Lilliefors test requires n >= 4");
  FittedCdf f = fit_family(s, family);
  KsStatistics ks = ks_statistics(f.u);
  o.add_statistic("Dn", ks.d);
  o.add_statistic(f.n1, f.p1);
  o.add_statistic(f.n2, f.p2);
  attach_table_bound(o, GofStatistic::lilliefors_d, family, n, ks.d);
  o.notes.push_back(f.note);
  return o;
}

TestOutcome anderson_darling(const NumericSequence& s, GofFamily family) {
  TestOutcome o;
  o.test_name = family == GofFamily::normal ? "Anderson-Darling (normal)"
                                            : "Anderson-Darling (exponential)";
  const int n = static_cast<int>(s.size());
  if (n < 4) throw data_error("Anderson-Darling test requires n >= 4");
  FittedCdf f = fit_family(s, family);
  std::vector<double> u = f.u;
  std::sort(u.begin(), u.end());
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (u[i] <= 0.0 || u[i] >= 1.0)
      throw numeric_error("fitted cdf reached " + std::to_string(u[i]) +
                          " at sorted index " + std::to_string(i + 1) +
                          "; statistic overflows");
  }
  double a2 = -static_cast<double>(n);
  for (int i = 0; i < n; ++i) {
    a2 -= (2.0 * i + 1.0) / n *
          (std::log(u[static_cast<std::size_t>(i)]) +
           std::log1p(-u[static_cast<std::size_t>(n - 1 - i)]));
  }
  double adjust = family == GofFamily::normal
                      ? 1.0 + 0.75 / n + 2.25 / (static_cast<double>(n) * n)
                      : 1.0 + 0.6 / n;
  double a2_star = a2 * adjust;
  o.add_statistic("A2", a2);
  o.add_statistic("A2*", a2_star);
  o.add_statistic(f.n1, f.p1);
  o.add_statistic(f.n2, f.p2);
  attach_table_bound(o, GofStatistic::anderson_darling_a2, family, n, a2_star);
  o.notes.push_back(f.note);
  o.notes.push_back("small-sample adjustment applied to A2 before the table lookup");
  return o;
}

}  // namespace npst
