#include "exact_laws.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <mutex>
#include <numeric>

#include "errors.hpp"

namespace npst {
namespace {

double snap_eps(double x) { return 1e-9 * std::max(1.0, std::fabs(x)); }

double to_double(const BigInt& v) { return v.convert_to<double>(); }

double ratio(const BigInt& num, const BigInt& den) {
  // Counts convert with <= 1 ulp relative error; the quotient keeps
  // p-values accurate far beyond the 1e-12 contract.
  return to_double(num) / to_double(den);
}

template <typename Key>
class LawCache {
 public:
  template <typename Builder>
  LawPtr get(const Key& key, Builder&& build) {
    {
      std::lock_guard<std::mutex> lk(mu_);
      auto it = map_.find(key);
      if (it != map_.end()) return it->second;
    }
    auto law = std::make_shared<const DiscreteLaw>(build());
    std::lock_guard<std::mutex> lk(mu_);
    auto [it, inserted] = map_.emplace(key, std::move(law));
    return it->second;
  }

 private:
  std::mutex mu_;
  std::map<Key, LawPtr> map_;
};

}  // namespace

BigInt big_choose(int n, int k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  BigInt r = 1;
  for (int i = 1; i <= k; ++i) {
    r *= (n - k + i);
    r /= i;
  }
  return r;
}

BigInt big_factorial(int n) {
  BigInt r = 1;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

DiscreteLaw::DiscreteLaw(std::vector<double> support, std::vector<BigInt> weights) {
  if (support.size() != weights.size() || support.empty())
    throw numeric_error("discrete law requires matching nonempty support/weights");
  std::vector<std::size_t> order(support.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return support[a] < support[b]; });
  for (std::size_t idx : order) {
    double v = support[idx];
    BigInt& w = weights[idx];
    if (w < 0) throw numeric_error("negative weight in discrete law");
    if (w == 0) continue;
    if (!support_.empty() && std::fabs(v - support_.back()) <= snap_eps(v)) {
      weights_.back() += w;
    } else {
      support_.push_back(v);
      weights_.push_back(w);
    }
  }
  if (support_.empty()) throw numeric_error("discrete law has empty support");
  cum_.resize(weights_.size());
  BigInt run = 0;
  for (std::size_t i = 0; i < weights_.size(); ++i) {
    run += weights_[i];
    cum_[i] = run;
  }
  total_ = run;
}

DiscreteLaw DiscreteLaw::from_scaled(const std::map<long long, BigInt>& weights,
                                     double scale) {
  std::vector<double> support;
  std::vector<BigInt> w;
  support.reserve(weights.size());
  w.reserve(weights.size());
  for (const auto& [k, v] : weights) {
    support.push_back(static_cast<double>(k) * scale);
    w.push_back(v);
  }
  return DiscreteLaw(std::move(support), std::move(w));
}

double DiscreteLaw::cdf(double x) const {
  double bound = x + snap_eps(x);
  auto it = std::upper_bound(support_.begin(), support_.end(), bound);
  if (it == support_.begin()) return 0.0;
  return ratio(cum_[static_cast<std::size_t>(it - support_.begin()) - 1], total_);
}

double DiscreteLaw::sf(double x) const {
  double bound = x - snap_eps(x);
  auto it = std::lower_bound(support_.begin(), support_.end(), bound);
  if (it == support_.begin()) return 1.0;
  BigInt below = cum_[static_cast<std::size_t>(it - support_.begin()) - 1];
  return ratio(total_ - below, total_);
}

double DiscreteLaw::pmf(double x) const {
  auto it = std::lower_bound(support_.begin(), support_.end(), x - snap_eps(x));
  if (it == support_.end() || std::fabs(*it - x) > snap_eps(x)) return 0.0;
  return ratio(weights_[static_cast<std::size_t>(it - support_.begin())], total_);
}

double DiscreteLaw::mean() const {
  double t = to_double(total_);
  double m = 0;
  for (std::size_t i = 0; i < support_.size(); ++i)
    m += support_[i] * (to_double(weights_[i]) / t);
  return m;
}

double DiscreteLaw::variance() const {
  double t = to_double(total_);
  double m = mean();
  double v = 0;
  for (std::size_t i = 0; i < support_.size(); ++i) {
    double d = support_[i] - m;
    v += d * d * (to_double(weights_[i]) / t);
  }
  return v;
}

LawPtr runs_law(int n1, int n2) {
  static LawCache<std::pair<int, int>> cache;
  if (n1 < 1 || n2 < 1) throw numeric_error("runs law requires n1, n2 >= 1");
  return cache.get({n1, n2}, [&] {
    int n = n1 + n2;
    int rmax = 2 * std::min(n1, n2) + (n1 == n2 ? 0 : 1);
    std::map<long long, BigInt> w;
    for (int r = 2; r <= rmax; ++r) {
      BigInt count;
      if (r % 2 == 0) {
        int k = r / 2;
        count = 2 * big_choose(n1 - 1, k - 1) * big_choose(n2 - 1, k - 1);
      } else {
        int k = (r - 1) / 2;
        count = big_choose(n1 - 1, k - 1) * big_choose(n2 - 1, k) +
                big_choose(n1 - 1, k) * big_choose(n2 - 1, k - 1);
      }
      if (count > 0) w[r] = count;
    }
    DiscreteLaw law = DiscreteLaw::from_scaled(w, 1.0);
    if (law.total() != big_choose(n, n1))
      throw numeric_error("runs law arrangement count mismatch");
    return law;
  });
}

LawPtr updown_runs_law(int n) {
  static LawCache<int> cache;
  if (n < 2) throw numeric_error("runs up/down law requires n >= 2");
  return cache.get(n, [&] {
    // a(m, r): permutations of m distinct values whose difference-sign
    // sequence has exactly r runs.
    std::vector<BigInt> prev(1, 1);  // a(1, 0) = 1
    for (int m = 2; m <= n; ++m) {
      std::vector<BigInt> cur(m, 0);  // r ranges 0..m-1
      for (int r = 0; r < m; ++r) {
        BigInt v = r * (r < static_cast<int>(prev.size()) ? prev[r] : BigInt(0));
        if (r >= 1 && r - 1 < static_cast<int>(prev.size())) v += 2 * prev[r - 1];
        if (r >= 2 && r - 2 < static_cast<int>(prev.size()))
          v += (m - r) * prev[r - 2];
        cur[r] = v;
      }
      prev = std::move(cur);
    }
    std::map<long long, BigInt> w;
    for (int r = 1; r < n; ++r)
      if (prev[r] > 0) w[r] = prev[r];
    DiscreteLaw law = DiscreteLaw::from_scaled(w, 1.0);
    if (law.total() != big_factorial(n))
      throw numeric_error("runs up/down law count mismatch");
    return law;
  });
}

namespace {

DiscreteLaw signed_rank_dp(const std::vector<long long>& scaled, double scale) {
  long long maxsum = 0;
  for (long long r : scaled) maxsum += r;
  std::vector<BigInt> ways(static_cast<std::size_t>(maxsum) + 1, 0);
  ways[0] = 1;
  for (long long r : scaled)
    for (long long w = maxsum; w >= r; --w) ways[w] += ways[w - r];
  std::map<long long, BigInt> acc;
  for (long long w = 0; w <= maxsum; ++w)
    if (ways[w] > 0) acc[w] = ways[w];
  return DiscreteLaw::from_scaled(acc, scale);
}

}  // namespace

LawPtr signed_rank_law(int n) {
  static LawCache<int> cache;
  if (n < 1) throw numeric_error("signed-rank law requires n >= 1");
  return cache.get(n, [&] {
    std::vector<long long> ranks(n);
    std::iota(ranks.begin(), ranks.end(), 1);
    return signed_rank_dp(ranks, 1.0);
  });
}

DiscreteLaw signed_rank_law_tied(std::span<const double> midranks) {
  std::vector<long long> scaled(midranks.size());
  for (std::size_t i = 0; i < midranks.size(); ++i) {
    double twice = 2.0 * midranks[i];
    scaled[i] = std::llround(twice);
    if (std::fabs(twice - static_cast<double>(scaled[i])) > 1e-9)
      throw numeric_error("midranks are not on the half-integer grid");
  }
  return signed_rank_dp(scaled, 0.5);
}

LawPtr rank_sum_law(int m, int n) {
  static LawCache<std::pair<int, int>> cache;
  if (m < 1 || n < 1) throw numeric_error("rank-sum law requires m, n >= 1");
  return cache.get({m, n}, [&] {
    int N = m + n;
    long long wmax = 0;
    for (int i = N - n + 1; i <= N; ++i) wmax += i;
    // dp[j][w] = ways to pick j ranks from those seen so far summing to w
    std::vector<std::vector<BigInt>> dp(
        n + 1, std::vector<BigInt>(static_cast<std::size_t>(wmax) + 1, 0));
    dp[0][0] = 1;
    for (int rank = 1; rank <= N; ++rank) {
      for (int j = std::min(rank, n); j >= 1; --j) {
        for (long long w = wmax; w >= rank; --w) {
          if (dp[j - 1][w - rank] > 0) dp[j][w] += dp[j - 1][w - rank];
        }
      }
    }
    std::map<long long, BigInt> acc;
    for (long long w = 0; w <= wmax; ++w)
      if (dp[n][w] > 0) acc[w] = dp[n][w];
    DiscreteLaw law = DiscreteLaw::from_scaled(acc, 1.0);
    if (law.total() != big_choose(N, n))
      throw numeric_error("rank-sum law arrangement count mismatch");
    return law;
  });
}

DiscreteLaw linear_rank_law(std::span<const double> scores, int n_select) {
  const int N = static_cast<int>(scores.size());
  if (n_select < 1 || n_select > N)
    throw numeric_error("linear rank law: invalid selection size");
  std::vector<std::pair<double, BigInt>> acc;
  std::vector<int> idx(n_select);
  std::iota(idx.begin(), idx.end(), 0);
  while (true) {
    double sum = 0;
    for (int i : idx) sum += scores[static_cast<std::size_t>(i)];
    acc.emplace_back(sum, 1);
    // next combination
    int i = n_select - 1;
    while (i >= 0 && idx[i] == N - n_select + i) --i;
    if (i < 0) break;
    ++idx[i];
    for (int j = i + 1; j < n_select; ++j) idx[j] = idx[j - 1] + 1;
  }
  std::vector<double> support;
  std::vector<BigInt> weights;
  support.reserve(acc.size());
  weights.reserve(acc.size());
  for (auto& [v, w] : acc) {
    support.push_back(v);
    weights.push_back(std::move(w));
  }
  return DiscreteLaw(std::move(support), std::move(weights));
}

LawPtr kendall_t_law(int n) {
  static LawCache<int> cache;
  if (n < 2) throw numeric_error("Kendall law requires n >= 2");
  return cache.get(n, [&] {
    // Permutation counts by inversion number (Mahonian numbers).
    long long maxinv = static_cast<long long>(n) * (n - 1) / 2;
    std::vector<BigInt> cur(1, 1);
    for (int j = 2; j <= n; ++j) {
      long long mi = static_cast<long long>(j) * (j - 1) / 2;
      std::vector<BigInt> next(static_cast<std::size_t>(mi) + 1, 0);
      BigInt window = 0;
      for (long long v = 0; v <= mi; ++v) {
        if (v < static_cast<long long>(cur.size())) window += cur[v];
        if (v - j >= 0 && v - j < static_cast<long long>(cur.size()))
          window -= cur[v - j];
        next[v] = window;
      }
      cur = std::move(next);
    }
    std::map<long long, BigInt> acc;
    for (long long inv = 0; inv <= maxinv; ++inv)
      if (cur[inv] > 0) acc[maxinv - 2 * inv] = cur[inv];  // T = C(n,2) - 2*inv
    DiscreteLaw law = DiscreteLaw::from_scaled(acc, 1.0);
    if (law.total() != big_factorial(n))
      throw numeric_error("Kendall law count mismatch");
    return law;
  });
}

LawPtr spearman_s_law(int n) {
  static LawCache<int> cache;
  if (n < 2 || n > 10)
    throw numeric_error("Spearman S law enumerated only for 2 <= n <= 10");
  return cache.get(n, [&] {
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 1);
    std::map<long long, BigInt> acc;
    do {
      long long s = 0;
      for (int i = 0; i < n; ++i) {
        long long d = (i + 1) - perm[static_cast<std::size_t>(i)];
        s += d * d;
      }
      acc[s] += 1;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return DiscreteLaw::from_scaled(acc, 1.0);
  });
}

FriedmanPageLaws friedman_page_laws(const std::vector<std::vector<double>>& rank_rows) {
  const int blocks = static_cast<int>(rank_rows.size());
  if (blocks < 1) throw numeric_error("Friedman enumeration requires blocks");
  const int k = static_cast<int>(rank_rows[0].size());
  // All k! index permutations, shared across blocks.
  std::vector<std::vector<int>> perms;
  {
    std::vector<int> p(k);
    std::iota(p.begin(), p.end(), 0);
    do {
      perms.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
  }
  double center = 0;
  for (const auto& row : rank_rows)
    for (double r : row) center += r;
  center /= k;  // = n(k+1)/2 when rows hold midranks 1..k

  std::vector<double> colsum(k, 0.0);
  std::map<long long, BigInt> s_acc;
  std::map<long long, BigInt> l_acc;
  std::function<void(int)> rec = [&](int b) {
    if (b == blocks) {
      double s = 0, l = 0;
      for (int j = 0; j < k; ++j) {
        double d = colsum[j] - center;
        s += d * d;
        l += (j + 1) * colsum[j];
      }
      s_acc[std::llround(4.0 * s)] += 1;
      l_acc[std::llround(2.0 * l)] += 1;
      return;
    }
    const auto& row = rank_rows[static_cast<std::size_t>(b)];
    for (const auto& p : perms) {
      for (int j = 0; j < k; ++j) colsum[j] += row[static_cast<std::size_t>(p[j])];
      rec(b + 1);
      for (int j = 0; j < k; ++j) colsum[j] -= row[static_cast<std::size_t>(p[j])];
    }
  };
  rec(0);
  return FriedmanPageLaws{DiscreteLaw::from_scaled(s_acc, 0.25),
                          DiscreteLaw::from_scaled(l_acc, 0.5)};
}

LawPtr jonckheere_law(std::vector<int> sizes) {
  static LawCache<std::vector<int>> cache;
  if (sizes.size() < 2) throw numeric_error("Jonckheere law requires k >= 2 samples");
  return cache.get(sizes, [&] {
    // B = sum over j of the Mann-Whitney count of sample j against the
    // union of samples 1..j-1; the sequential placements are independent,
    // so the null law is the convolution of rank-sum laws.
    std::vector<BigInt> conv(1, 1);
    int seen = sizes[0];
    for (std::size_t j = 1; j < sizes.size(); ++j) {
      int nj = sizes[j];
      LawPtr wlaw = rank_sum_law(seen, nj);
      // shift W down to U = W - nj(nj+1)/2, support 0..seen*nj
      long long umax = static_cast<long long>(seen) * nj;
      long long wmin = static_cast<long long>(nj) * (nj + 1) / 2;
      std::vector<BigInt> u(static_cast<std::size_t>(umax) + 1, 0);
      const auto& sup = wlaw->support();
      const auto& wts = wlaw->weights();
      for (std::size_t i = 0; i < sup.size(); ++i) {
        long long uu = std::llround(sup[i]) - wmin;
        u[static_cast<std::size_t>(uu)] = wts[i];
      }
      std::vector<BigInt> next(conv.size() + u.size() - 1, 0);
      for (std::size_t a = 0; a < conv.size(); ++a) {
        if (conv[a] == 0) continue;
        for (std::size_t b = 0; b < u.size(); ++b) {
          if (u[b] == 0) continue;
          next[a + b] += conv[a] * u[b];
        }
      }
      conv = std::move(next);
      seen += nj;
    }
    std::map<long long, BigInt> acc;
    for (std::size_t v = 0; v < conv.size(); ++v)
      if (conv[v] > 0) acc[static_cast<long long>(v)] = conv[v];
    DiscreteLaw law = DiscreteLaw::from_scaled(acc, 1.0);
    if (law.total() != assignment_count(sizes))
      throw numeric_error("Jonckheere law count mismatch");
    return law;
  });
}

LawPtr mathisen_law(int m, int n) {
  static LawCache<std::pair<int, int>> cache;
  if (m < 1 || n < 1) throw numeric_error("control-median law requires m, n >= 1");
  return cache.get({m, n}, [&] {
    int q = (m + 1) / 2;  // pivot order statistic of the control sample
    std::map<long long, BigInt> w;
    for (int v = 0; v <= n; ++v) {
      BigInt count = big_choose(q - 1 + v, v) * big_choose(m - q + n - v, n - v);
      if (count > 0) w[v] = count;
    }
    DiscreteLaw law = DiscreteLaw::from_scaled(w, 1.0);
    if (law.total() != big_choose(m + n, n))
      throw numeric_error("control-median law count mismatch");
    return law;
  });
}

BigInt assignment_count(std::span<const int> sizes) {
  int N = 0;
  for (int s : sizes) N += s;
  BigInt c = big_factorial(N);
  for (int s : sizes) c /= big_factorial(s);
  return c;
}

namespace detail {

void enumerate_assignments_impl(
    std::span<const double> pooled, std::span<const int> sizes,
    const std::function<double(const std::vector<std::vector<double>>&)>& stat,
    std::vector<std::pair<double, BigInt>>* out) {
  const int N = static_cast<int>(pooled.size());
  std::vector<int> labels;
  labels.reserve(static_cast<std::size_t>(N));
  for (std::size_t g = 0; g < sizes.size(); ++g)
    labels.insert(labels.end(), static_cast<std::size_t>(sizes[g]),
                  static_cast<int>(g));
  std::sort(labels.begin(), labels.end());
  std::vector<std::vector<double>> groups(sizes.size());
  do {
    for (auto& g : groups) g.clear();
    for (int i = 0; i < N; ++i)
      groups[static_cast<std::size_t>(labels[static_cast<std::size_t>(i)])]
          .push_back(pooled[static_cast<std::size_t>(i)]);
    out->emplace_back(stat(groups), 1);
  } while (std::next_permutation(labels.begin(), labels.end()));
}

}  // namespace detail

}  // namespace npst
