#include "two_sample.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>
#include <string>

#include "errors.hpp"
#include "exact_laws.hpp"
#include "kolmogorov.hpp"
#include "ranks.hpp"
#include "special.hpp"

namespace npst {
namespace {

constexpr long long kSubsetBudget = 500000;   // C(N, n) enumeration cap
constexpr int kRankSumDpBudget = 60;          // untied DP cap on m+n
constexpr long long kLatticeBudget = 10000;   // m*n cap for path counting

std::vector<double> pooled(const TwoSamples& ts) {
  std::vector<double> all = ts.x;
  all.insert(all.end(), ts.y.begin(), ts.y.end());
  return all;
}

bool has_any_tie(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  return std::adjacent_find(v.begin(), v.end()) != v.end();
}

long long choose_ll(int n, int k) {
  BigInt c = big_choose(n, k);
  if (c > BigInt(1) << 62) return (1LL << 62);
  return c.convert_to<long long>();
}

// Exact + asymptotic tails for a linear rank statistic with
// observation-fixed scores; T = sum of sample-2 scores.
void attach_linear_rank_tails(TestOutcome& o, const std::vector<double>& scores,
                              int m, int n, double t_obs) {
  const int N = m + n;
  if (choose_ll(N, n) <= kSubsetBudget)
    set_exact_from_law(o, linear_rank_law(scores, n), t_obs);
  double mean = std::accumulate(scores.begin(), scores.end(), 0.0) / N;
  double ss = 0;
  for (double a : scores) ss += (a - mean) * (a - mean);
  double var = static_cast<double>(m) * n / (static_cast<double>(N) * (N - 1)) * ss;
  if (var <= 0) throw numeric_error("degenerate scores: zero variance");
  double z = (t_obs - n * mean) / std::sqrt(var);
  o.add_statistic("Z", z);
  set_asymptotic_from_z(o, z);
}

void require_sizes(const TwoSamples& ts, std::size_t min_each) {
  if (ts.x.size() < min_each || ts.y.size() < min_each)
    throw data_error("both samples need at least " + std::to_string(min_each) +
                     " values");
}

}  // namespace

TestOutcome wald_wolfowitz(const TwoSamples& ts) {
  TestOutcome o;
  o.test_name = "Wald-Wolfowitz runs";
  require_sizes(ts, 1);

  for (double a : ts.x)
    for (double b : ts.y)
      if (a == b)
        throw numeric_error("cross-sample tie at value " + std::to_string(a) +
                            ": run sequence undefined");

  const int m = static_cast<int>(ts.x.size());
  const int n = static_cast<int>(ts.y.size());
  std::vector<std::pair<double, int>> tagged;
  tagged.reserve(static_cast<std::size_t>(m + n));
  for (double v : ts.x) tagged.emplace_back(v, 0);
  for (double v : ts.y) tagged.emplace_back(v, 1);
  std::sort(tagged.begin(), tagged.end());

  int runs = 1;
  for (std::size_t i = 1; i < tagged.size(); ++i)
    if (tagged[i].second != tagged[i - 1].second) ++runs;

  o.add_statistic("R", runs);
  o.add_statistic("n1", m);
  o.add_statistic("n2", n);
  set_exact_from_law(o, *runs_law(m, n), runs);
  double N = m + n;
  double mu = 1.0 + 2.0 * m * n / N;
  double var = 2.0 * m * n * (2.0 * m * n - N) / (N * N * (N - 1.0));
  if (var > 0) {
    double z = (runs - mu) / std::sqrt(var);
    o.add_statistic("Z", z);
    set_asymptotic_from_z(o, z);
  }
  o.notes.push_back("rejection is for too few runs (left tail)");
  return o;
}

TestOutcome median_test(const TwoSamples& ts) {
  TestOutcome o;
  o.test_name = "Median test";
  require_sizes(ts, 1);
  const int m = static_cast<int>(ts.x.size());
  const int n = static_cast<int>(ts.y.size());
  const int N = m + n;
  if (N < 4) throw data_error("median test requires a combined size of at least 4");

  double g = median(pooled(ts));
  auto above = [g](const std::vector<double>& v) {
    return static_cast<int>(std::count_if(v.begin(), v.end(),
                                          [g](double t) { return t > g; }));
  };
  int a1 = above(ts.x), a2 = above(ts.y);
  int A = a1 + a2, B = N - A;
  if (A == 0) throw numeric_error("degenerate samples: no values above the grand median");

  o.add_statistic("U", a1);
  o.add_statistic("above2", a2);
  o.add_statistic("A", A);
  o.add_statistic("median", g);

  // U ~ hypergeometric: m draws from N with A marked
  {
    std::map<long long, BigInt> w;
    for (int u = std::max(0, m - B); u <= std::min(m, A); ++u)
      w[u] = big_choose(A, u) * big_choose(B, m - u);
    set_exact_from_law(o, DiscreteLaw::from_scaled(w, 1.0), a1);
  }
  double num = static_cast<double>(a1) * n - static_cast<double>(a2) * m;
  double q = static_cast<double>(N) * num * num /
             (static_cast<double>(m) * n * A * B);
  o.add_statistic("Q", q);
  double z = (num >= 0 ? 1.0 : -1.0) * std::sqrt(q);
  o.add_statistic("Z", z);
  o.asymptotic_left = PValue{normal_cdf(z)};
  o.asymptotic_right = PValue{normal_cdf(-z)};
  o.asymptotic_double = PValue{1.0 - chi_square_cdf(q, 1)};
  return o;
}

TestOutcome control_median_test(const TwoSamples& ts) {
  TestOutcome o;
  o.test_name = "Control median";
  require_sizes(ts, 1);
  const int m = static_cast<int>(ts.x.size());

  std::vector<double> ctrl = ts.x;
  std::sort(ctrl.begin(), ctrl.end());
  const int q = (m + 1) / 2;
  double pivot = ctrl[static_cast<std::size_t>(q) - 1];

  int v = 0, dropped = 0, n = 0;
  for (double t : ts.y) {
    if (t == pivot) {
      ++dropped;
      continue;
    }
    ++n;
    if (t < pivot) ++v;
  }
  if (n == 0)
    throw numeric_error("degenerate control comparison: every treatment value "
                        "equals the control median");

  o.add_statistic("V", v);
  o.add_statistic("pivot", pivot);
  set_exact_from_law(o, *mathisen_law(m, n), v);
  double mu = static_cast<double>(n) * q / (m + 1.0);
  double var = static_cast<double>(n) * q * (m + 1.0 - q) * (m + n + 1.0) /
               ((m + 1.0) * (m + 1.0) * (m + 2.0));
  double z = (v - mu) / std::sqrt(var);
  o.add_statistic("Z", z);
  set_asymptotic_from_z(o, z);
  o.notes.push_back("control median taken as control order statistic " +
                    std::to_string(q) + " of " + std::to_string(m));
  if (dropped > 0)
    o.notes.push_back("treatment values equal to the control median dropped: " +
                      std::to_string(dropped));
  return o;
}

TestOutcome ks_two_sample(const TwoSamples& ts, Alternative alt) {
  TestOutcome o;
  o.test_name = "Kolmogorov-Smirnov (two samples)";
  o.alternative = alt;
  require_sizes(ts, 1);
  const int m = static_cast<int>(ts.x.size());
  const int n = static_cast<int>(ts.y.size());

  // integer sweep over the pooled order: diff = i*n - j*m at each
  // distinct pooled value, D = max|diff| / (m*n)
  std::vector<double> xs = ts.x, ys = ts.y;
  std::sort(xs.begin(), xs.end());
  std::sort(ys.begin(), ys.end());
  long long max_abs = 0, max_plus = 0, max_minus = 0;
  {
    std::size_t i = 0, j = 0;
    while (i < xs.size() || j < ys.size()) {
      double v = (i < xs.size() && (j >= ys.size() || xs[i] <= ys[j])) ? xs[i] : ys[j];
      while (i < xs.size() && xs[i] == v) ++i;
      while (j < ys.size() && ys[j] == v) ++j;
      long long diff = static_cast<long long>(i) * n - static_cast<long long>(j) * m;
      max_abs = std::max(max_abs, std::llabs(diff));
      max_plus = std::max(max_plus, diff);
      max_minus = std::max(max_minus, -diff);
    }
  }
  const double mn = static_cast<double>(m) * n;
  double d = static_cast<double>(max_abs) / mn;
  double dplus = static_cast<double>(max_plus) / mn;
  double dminus = static_cast<double>(max_minus) / mn;
  o.add_statistic("Dn", d);
  o.add_statistic("Dn+", dplus);
  o.add_statistic("Dn-", dminus);

  bool tied = has_any_tie(pooled(ts));
  if (!tied && static_cast<long long>(m) * n <= kLatticeBudget) {
    o.exact_double = PValue{ks2_exact_sf_two_sided(m, n, max_abs)};
    o.exact_right = PValue{ks2_exact_sf_one_sided(m, n, max_plus)};
    o.exact_left = PValue{ks2_exact_sf_one_sided(n, m, max_minus)};
  } else if (choose_ll(m + n, m) <= kSubsetBudget) {
    auto all = pooled(ts);
    std::vector<int> sizes = {m, n};
    auto stat_d = [&](const std::vector<std::vector<double>>& g) {
      std::vector<double> a = g[0], b = g[1];
      std::sort(a.begin(), a.end());
      std::sort(b.begin(), b.end());
      std::size_t i = 0, j = 0;
      long long mx = 0;
      while (i < a.size() || j < b.size()) {
        double v = (i < a.size() && (j >= b.size() || a[i] <= b[j])) ? a[i] : b[j];
        while (i < a.size() && a[i] == v) ++i;
        while (j < b.size() && b[j] == v) ++j;
        mx = std::max(mx, std::llabs(static_cast<long long>(i) * n -
                                     static_cast<long long>(j) * m));
      }
      return static_cast<double>(mx);
    };
    DiscreteLaw law = enumerate_assignments(all, sizes, stat_d);
    o.exact_double = PValue{law.sf(static_cast<double>(max_abs))};
    o.notes.push_back("ties present: exact tail by assignment enumeration");
  }

  double lambda = std::sqrt(mn / (m + n)) * d;
  o.asymptotic_double = PValue{kolmogorov_limit_sf(lambda)};
  double lp = std::sqrt(mn / (m + n)) * dplus;
  double lm = std::sqrt(mn / (m + n)) * dminus;
  o.asymptotic_right = PValue{std::clamp(std::exp(-2.0 * lp * lp), 0.0, 1.0)};
  o.asymptotic_left = PValue{std::clamp(std::exp(-2.0 * lm * lm), 0.0, 1.0)};
  return o;
}

TestOutcome wilcoxon_rank_sum(const TwoSamples& ts, Alternative alt,
                              std::optional<double> confidence) {
  TestOutcome o;
  o.test_name = "Wilcoxon rank-sum";
  o.alternative = alt;
  require_sizes(ts, 1);
  const int m = static_cast<int>(ts.x.size());
  const int n = static_cast<int>(ts.y.size());
  const int N = m + n;

  auto all = pooled(ts);
  std::vector<int> ties;
  std::vector<double> r = midranks(all, &ties);
  double w = 0;
  for (int i = m; i < N; ++i) w += r[static_cast<std::size_t>(i)];
  double u = w - n * (n + 1.0) / 2.0;
  o.add_statistic("W", w);
  o.add_statistic("U", u);

  bool exact_available = false;
  LawPtr untied_law;
  if (ties.empty() && N <= kRankSumDpBudget) {
    untied_law = rank_sum_law(m, n);
    set_exact_from_law(o, *untied_law, w);
    exact_available = true;
  } else if (!ties.empty() && choose_ll(N, n) <= kSubsetBudget) {
    set_exact_from_law(o, linear_rank_law(r, n), w);
    o.notes.push_back("ties present: exact tail by rank-assignment enumeration");
  }

  double mu = n * (N + 1.0) / 2.0;
  double var = static_cast<double>(m) * n * (N + 1.0) / 12.0;
  if (!ties.empty())
    var -= static_cast<double>(m) * n * tie_correction_sum(ties) /
           (12.0 * N * (N - 1.0));
  if (var <= 0) throw numeric_error("degenerate ranks: zero variance");
  double z = (w - mu) / std::sqrt(var);
  o.add_statistic("Z", z);
  set_asymptotic_from_z(o, z);
  if (!ties.empty()) o.notes.push_back("midranks used; variance tie-corrected");

  if (confidence) {
    double conf = *confidence;
    if (!(conf > 0.0 && conf < 1.0))
      throw usage_error("confidence level must lie in (0,1)");
    std::vector<double> diffs;
    diffs.reserve(static_cast<std::size_t>(m) * n);
    for (double yy : ts.y)
      for (double xx : ts.x) diffs.push_back(yy - xx);
    std::sort(diffs.begin(), diffs.end());
    const long long mn = static_cast<long long>(m) * n;

    long long k = 0;
    double attained_halft = 0;
    double alpha = 1.0 - conf;
    if (exact_available) {
      // largest k with P(U <= k-1) <= alpha/2; law of U = law of W shifted
      double shift = n * (n + 1.0) / 2.0;
      k = 0;
      for (long long c = 0; c < mn / 2 + 1; ++c) {
        double p = untied_law->cdf(static_cast<double>(c) + shift);
        if (p <= alpha / 2.0 + 1e-12) {
          k = c + 1;
          attained_halft = p;
        } else {
          break;
        }
      }
      o.notes.push_back("shift interval from the exact rank-sum law");
    } else {
      double zq = normal_quantile(1.0 - alpha / 2.0);
      double c = mn / 2.0 - zq * std::sqrt(var);
      k = static_cast<long long>(std::floor(c));
      o.notes.push_back("shift interval from asymptotic critical indices");
    }
    bool clamped = false;
    if (k < 1) {
      k = 1;
      clamped = true;
    }
    if (2 * k > mn) k = (mn + 1) / 2;
    o.add_statistic("shift_lower", diffs[static_cast<std::size_t>(k - 1)]);
    o.add_statistic("shift_upper", diffs[static_cast<std::size_t>(mn - k)]);
    double hl = (mn % 2 == 1)
                    ? diffs[static_cast<std::size_t>(mn / 2)]
                    : 0.5 * (diffs[static_cast<std::size_t>(mn / 2 - 1)] +
                             diffs[static_cast<std::size_t>(mn / 2)]);
    o.add_statistic("hodges_lehmann", hl);
    if (exact_available)
      o.add_statistic("achieved_confidence", 1.0 - 2.0 * attained_halft);
    if (clamped)
      o.notes.push_back("requested confidence unattainable; widest interval reported");
  }
  return o;
}

TestOutcome van_der_waerden(const TwoSamples& ts, Alternative alt) {
  TestOutcome o;
  o.test_name = "van der Waerden";
  o.alternative = alt;
  require_sizes(ts, 1);
  const int m = static_cast<int>(ts.x.size());
  const int n = static_cast<int>(ts.y.size());
  const int N = m + n;
  if (N < 2) throw data_error("van der Waerden requires a combined size of 2");

  auto all = pooled(ts);
  std::vector<int> ties;
  std::vector<double> r = midranks(all, &ties);
  std::vector<double> scores(all.size());
  for (std::size_t i = 0; i < all.size(); ++i)
    scores[i] = normal_quantile(r[i] / (N + 1.0));
  double t = 0;
  for (int i = m; i < N; ++i) t += scores[static_cast<std::size_t>(i)];
  o.add_statistic("T", t);
  attach_linear_rank_tails(o, scores, m, n, t);
  if (!ties.empty()) o.notes.push_back("normal scores computed at midranks");
  return o;
}

namespace {

std::vector<double> siegel_tukey_weights(int N) {
  // Alternating extreme-inward assignment of the Wilcoxon weights,
  // starting at the low extreme: positions 1,2,3,... of the sorted
  // pooled sample receive 1,4,5,8,... and N,N-1,... receive 2,3,6,7,...
  std::vector<double> w(static_cast<std::size_t>(N));
  int lo = 0, hi = N - 1, next = 1;
  bool at_low = true, first = true;
  while (lo <= hi) {
    if (at_low) {
      w[static_cast<std::size_t>(lo++)] = next++;
      if (!first && lo <= hi) w[static_cast<std::size_t>(lo++)] = next++;
      first = false;
    } else {
      w[static_cast<std::size_t>(hi--)] = next++;
      if (lo <= hi) w[static_cast<std::size_t>(hi--)] = next++;
    }
    at_low = !at_low;
  }
  return w;
}

std::string score_vector_note(const std::vector<double>& scores) {
  std::string s = "scores:";
  char buf[32];
  for (double v : scores) {
    std::snprintf(buf, sizeof(buf), " %g", v);
    s += buf;
  }
  return s;
}

TestOutcome sukhatme(const TwoSamples& ts, Alternative alt) {
  TestOutcome o;
  o.test_name = "Sukhatme";
  o.alternative = alt;
  const int m = static_cast<int>(ts.x.size());
  const int n = static_cast<int>(ts.y.size());
  const int N = m + n;

  auto stat = [](const std::vector<double>& xs, const std::vector<double>& ys) {
    double mx = median(xs);
    double my = median(ys);
    double t = 0;
    for (double a : xs) {
      double xc = a - mx;
      for (double b : ys) {
        double yc = b - my;
        if ((yc < xc && xc < 0) || (0 < xc && xc < yc)) t += 1;
      }
    }
    return t;
  };
  double t_obs = stat(ts.x, ts.y);
  o.add_statistic("T", t_obs);

  if (choose_ll(N, n) <= kSubsetBudget) {
    auto all = pooled(ts);
    std::vector<int> sizes = {m, n};
    DiscreteLaw law = enumerate_assignments(
        all, sizes, [&](const std::vector<std::vector<double>>& g) {
          return stat(g[0], g[1]);
        });
    set_exact_from_law(o, law, t_obs);
  }
  double mu = static_cast<double>(m) * n / 4.0;
  double var = static_cast<double>(m) * n * (N + 7.0) / 48.0;
  double z = (t_obs - mu) / std::sqrt(var);
  o.add_statistic("Z", z);
  set_asymptotic_from_z(o, z);
  o.notes.push_back("asymptotic moments assume known medians; sample medians "
                    "are estimated here (approximation)");
  return o;
}

}  // namespace

TestOutcome scale_test(const TwoSamples& ts, ScaleVariant variant, Alternative alt) {
  require_sizes(ts, 2);
  if (variant == ScaleVariant::sukhatme) return sukhatme(ts, alt);

  TestOutcome o;
  o.alternative = alt;
  const int m = static_cast<int>(ts.x.size());
  const int n = static_cast<int>(ts.y.size());
  const int N = m + n;

  auto all = pooled(ts);
  std::vector<int> ties;
  std::vector<double> r = midranks(all, &ties);
  std::vector<double> scores(all.size());

  switch (variant) {
    case ScaleVariant::david_barton: {
      o.test_name = "David-Barton";
      double half = (N % 2 == 0) ? 0.5 : 0.0;
      for (std::size_t i = 0; i < r.size(); ++i)
        scores[i] = std::fabs(r[i] - (N + 1.0) / 2.0) + half;
      break;
    }
    case ScaleVariant::freund_ansari_bradley: {
      o.test_name = "Freund-Ansari-Bradley";
      for (std::size_t i = 0; i < r.size(); ++i)
        scores[i] = std::min(r[i], N + 1.0 - r[i]);
      break;
    }
    case ScaleVariant::mood: {
      o.test_name = "Mood";
      for (std::size_t i = 0; i < r.size(); ++i) {
        double d = r[i] - (N + 1.0) / 2.0;
        scores[i] = d * d;
      }
      break;
    }
    case ScaleVariant::klotz: {
      o.test_name = "Klotz";
      for (std::size_t i = 0; i < r.size(); ++i) {
        double q = normal_quantile(r[i] / (N + 1.0));
        scores[i] = q * q;
      }
      break;
    }
    default: {  // siegel_tukey
      o.test_name = "Siegel-Tukey";
      std::vector<double> w = siegel_tukey_weights(N);
      // weights attach to sorted positions; tied values share the mean
      // of their positions' weights
      std::vector<std::size_t> order(all.size());
      std::iota(order.begin(), order.end(), 0);
      std::sort(order.begin(), order.end(),
                [&](std::size_t a, std::size_t b) { return all[a] < all[b]; });
      std::size_t i = 0;
      while (i < order.size()) {
        std::size_t j = i;
        double sum = 0;
        while (j < order.size() && all[order[j]] == all[order[i]]) sum += w[j++];
        double avg = sum / (j - i);
        for (std::size_t t2 = i; t2 < j; ++t2) scores[order[t2]] = avg;
        i = j;
      }
      break;
    }
  }

  double t = 0;
  for (int i = m; i < N; ++i) t += scores[static_cast<std::size_t>(i)];
  o.add_statistic("T", t);
  attach_linear_rank_tails(o, scores, m, n, t);
  if (variant == ScaleVariant::david_barton) {
    std::vector<double> sorted_scores = scores;
    std::sort(sorted_scores.begin(), sorted_scores.end());
    o.notes.push_back(score_vector_note(sorted_scores));
  }
  if (!ties.empty()) o.notes.push_back("midranks used for tied values");
  return o;
}

}  // namespace npst
