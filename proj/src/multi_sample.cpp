#include "multi_sample.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "errors.hpp"
#include "exact_laws.hpp"
#include "ranks.hpp"
#include "special.hpp"

namespace npst {
namespace {

constexpr long long kAssignmentBudget = 500000;
constexpr int kKruskalExactN = 10;
constexpr int kJonckheereExactN = 20;

std::vector<double> pool(const Samples& samples) {
  std::vector<double> all;
  for (const auto& s : samples) all.insert(all.end(), s.begin(), s.end());
  return all;
}

std::vector<int> sizes_of(const Samples& samples) {
  std::vector<int> sizes;
  sizes.reserve(samples.size());
  for (const auto& s : samples) {
    if (s.empty()) throw data_error("every sample needs at least one value");
    sizes.push_back(static_cast<int>(s.size()));
  }
  return sizes;
}

long long assignment_count_ll(const std::vector<int>& sizes) {
  BigInt c = assignment_count(sizes);
  if (c > BigInt(1) << 62) return (1LL << 62);
  return c.convert_to<long long>();
}

double kruskal_h(const Samples& groups) {
  int N = 0;
  for (const auto& g : groups) N += static_cast<int>(g.size());
  std::vector<double> all;
  all.reserve(static_cast<std::size_t>(N));
  for (const auto& g : groups) all.insert(all.end(), g.begin(), g.end());
  std::vector<int> ties;
  std::vector<double> r = midranks(all, &ties);
  double h = 0;
  std::size_t at = 0;
  for (const auto& g : groups) {
    double rs = 0;
    for (std::size_t i = 0; i < g.size(); ++i) rs += r[at++];
    h += rs * rs / static_cast<double>(g.size());
  }
  h = 12.0 / (static_cast<double>(N) * (N + 1.0)) * h - 3.0 * (N + 1.0);
  double tc = tie_correction_sum(ties);
  double denom = 1.0 - tc / (static_cast<double>(N) * N * N - N);
  if (denom <= 0) throw numeric_error("degenerate samples: all pooled values tied");
  return h / denom;
}

double jonckheere_b(const Samples& groups) {
  double b = 0;
  for (std::size_t i = 0; i < groups.size(); ++i)
    for (std::size_t j = i + 1; j < groups.size(); ++j)
      for (double xv : groups[i])
        for (double yv : groups[j]) {
          if (xv < yv)
            b += 1.0;
          else if (xv == yv)
            b += 0.5;
        }
  return b;
}

}  // namespace

TestOutcome extended_median_test(const Samples& samples) {
  TestOutcome o;
  o.test_name = "Extended median";
  const int k = static_cast<int>(samples.size());
  if (k < 3) throw data_error("extended median test requires k >= 3 samples");
  auto sizes = sizes_of(samples);
  const int N = std::accumulate(sizes.begin(), sizes.end(), 0);
  if (N < 2 * k) throw data_error("combined size must be at least 2k");

  double g = median(pool(samples));
  int A = 0;
  std::vector<int> above(samples.size());
  for (std::size_t i = 0; i < samples.size(); ++i) {
    above[i] = static_cast<int>(std::count_if(samples[i].begin(), samples[i].end(),
                                              [g](double v) { return v > g; }));
    A += above[i];
  }
  if (A == 0 || A == N)
    throw numeric_error("degenerate samples: the grand median does not split them");

  double q = 0;
  for (std::size_t i = 0; i < samples.size(); ++i) {
    double ni = static_cast<double>(sizes[i]);
    double ea = ni * A / N;
    double eb = ni * (N - A) / static_cast<double>(N);
    double da = above[i] - ea;
    q += da * da / ea + da * da / eb;
  }
  o.add_statistic("Q", q);
  o.add_statistic("df", k - 1);
  o.add_statistic("A", A);
  o.add_statistic("median", g);
  o.asymptotic_right = PValue{1.0 - chi_square_cdf(q, k - 1)};
  return o;
}

TestOutcome kruskal_wallis(const Samples& samples) {
  TestOutcome o;
  o.test_name = "Kruskal-Wallis";
  const int k = static_cast<int>(samples.size());
  if (k < 3) throw data_error("Kruskal-Wallis requires k >= 3 samples");
  auto sizes = sizes_of(samples);
  const int N = std::accumulate(sizes.begin(), sizes.end(), 0);
  if (N < k + 1) throw data_error("combined size must exceed the number of samples");

  double h = kruskal_h(samples);
  o.add_statistic("H", h);
  o.add_statistic("df", k - 1);
  {
    auto all = pool(samples);
    std::vector<int> ties;
    std::vector<double> r = midranks(all, &ties);
    std::size_t at = 0;
    for (std::size_t i = 0; i < samples.size(); ++i) {
      double rs = 0;
      for (std::size_t t = 0; t < samples[i].size(); ++t) rs += r[at++];
      o.add_statistic("R" + std::to_string(i + 1), rs);
    }
    if (!ties.empty()) o.notes.push_back("midranks used; H tie-corrected");
  }

  if (N <= kKruskalExactN && assignment_count_ll(sizes) <= kAssignmentBudget) {
    auto all = pool(samples);
    DiscreteLaw law = enumerate_assignments(
        all, sizes, [](const Samples& g) { return kruskal_h(g); });
    double right = law.sf(h);
    o.exact_right = PValue{right};
  }
  o.asymptotic_right = PValue{1.0 - chi_square_cdf(h, k - 1)};
  return o;
}

TestOutcome jonckheere_terpstra(const Samples& samples) {
  TestOutcome o;
  o.test_name = "Jonckheere-Terpstra";
  const int k = static_cast<int>(samples.size());
  if (k < 2) throw data_error("Jonckheere-Terpstra requires k >= 2 samples");
  auto sizes = sizes_of(samples);
  const int N = std::accumulate(sizes.begin(), sizes.end(), 0);

  double b = jonckheere_b(samples);
  o.add_statistic("B", b);

  auto all = pool(samples);
  std::vector<double> sorted = all;
  std::sort(sorted.begin(), sorted.end());
  bool tied = std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end();

  if (!tied && N <= kJonckheereExactN) {
    set_exact_from_law(o, *jonckheere_law(sizes), b);
  } else if (assignment_count_ll(sizes) <= kAssignmentBudget) {
    DiscreteLaw law = enumerate_assignments(
        all, sizes, [](const Samples& g) { return jonckheere_b(g); });
    set_exact_from_law(o, law, b);
    if (tied) o.notes.push_back("ties present: exact tail by assignment enumeration");
  }

  // B = (S + M)/2 with S = Kendall's S of (group index, value); the
  // tie-corrected Var(S)/4 covers tied data and reduces to the classical
  // untied Jonckheere variance.
  double sum_nn = 0;
  double t1 = 0, t2 = 0, t3 = 0;  // sum u(u-1)(2u+5), u(u-1)(u-2), u(u-1)
  for (int ni : sizes) {
    double u = ni;
    sum_nn += u * u;
    t1 += u * (u - 1.0) * (2.0 * u + 5.0);
    t2 += u * (u - 1.0) * (u - 2.0);
    t3 += u * (u - 1.0);
  }
  double v1 = 0, v2 = 0, v3 = 0;  // same sums over value tie groups
  {
    std::size_t i = 0;
    while (i < sorted.size()) {
      std::size_t j = i;
      while (j < sorted.size() && sorted[j] == sorted[i]) ++j;
      double t = static_cast<double>(j - i);
      v1 += t * (t - 1.0) * (2.0 * t + 5.0);
      v2 += t * (t - 1.0) * (t - 2.0);
      v3 += t * (t - 1.0);
      i = j;
    }
  }
  double Nd = N;
  double var_s = (Nd * (Nd - 1.0) * (2.0 * Nd + 5.0) - t1 - v1) / 18.0 +
                 t2 * v2 / (9.0 * Nd * (Nd - 1.0) * (Nd - 2.0)) +
                 t3 * v3 / (2.0 * Nd * (Nd - 1.0));
  double var_b = var_s / 4.0;
  if (var_b <= 0) throw numeric_error("degenerate samples: zero variance");
  double mu = (Nd * Nd - sum_nn) / 4.0;
  double z = (b - mu) / std::sqrt(var_b);
  o.add_statistic("Z", z);
  set_asymptotic_from_z(o, z);
  return o;
}

TestOutcome chakraborti_desu(const Samples& samples, int control_index) {
  TestOutcome o;
  o.test_name = "Chakraborti-Desu";
  const int k = static_cast<int>(samples.size());
  if (k < 2) throw data_error("Chakraborti-Desu requires k >= 2 samples");
  if (control_index < 1 || control_index > k)
    throw usage_error("control index must be between 1 and " + std::to_string(k));
  auto sizes = sizes_of(samples);

  const auto& control = samples[static_cast<std::size_t>(control_index) - 1];
  const int m = static_cast<int>(control.size());
  std::vector<double> ctrl = control;
  std::sort(ctrl.begin(), ctrl.end());
  const int q = (m + 1) / 2;
  double pivot = ctrl[static_cast<std::size_t>(q) - 1];

  int w = 0, n = 0, dropped = 0;
  for (std::size_t i = 0; i < samples.size(); ++i) {
    if (static_cast<int>(i) == control_index - 1) continue;
    for (double v : samples[i]) {
      if (v == pivot) {
        ++dropped;
        continue;
      }
      ++n;
      if (v < pivot) ++w;
    }
  }
  if (n == 0)
    throw numeric_error("degenerate control comparison: every treatment value "
                        "equals the control median");

  o.add_statistic("W", w);
  o.add_statistic("pivot", pivot);
  // pooled treatments behave as one sample of size n against the control
  set_exact_from_law(o, *mathisen_law(m, n), w);
  double mu = static_cast<double>(n) * q / (m + 1.0);
  double var = static_cast<double>(n) * q * (m + 1.0 - q) * (m + n + 1.0) /
               ((m + 1.0) * (m + 1.0) * (m + 2.0));
  double z = (w - mu) / std::sqrt(var);
  o.add_statistic("Z", z);
  set_asymptotic_from_z(o, z);
  o.notes.push_back("rejection of equal-or-greater treatment locations is for "
                    "large W (right tail)");
  if (dropped > 0)
    o.notes.push_back("treatment values equal to the control median dropped: " +
                      std::to_string(dropped));
  return o;
}

}  // namespace npst
