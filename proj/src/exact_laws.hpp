#ifndef NPST_EXACT_LAWS_HPP_
#define NPST_EXACT_LAWS_HPP_

#include <boost/multiprecision/cpp_int.hpp>
#include <functional>
#include <map>
#include <memory>
#include <span>
#include <utility>
#include <vector>

namespace npst {

using BigInt = boost::multiprecision::cpp_int;

BigInt big_choose(int n, int k);
BigInt big_factorial(int n);

// Finite null distribution of a test statistic: ordered support with
// exact big-integer arrangement counts. Tail probabilities include the
// point mass on both sides; support lookups snap within a relative 1e-9.
class DiscreteLaw {
 public:
  DiscreteLaw(std::vector<double> support, std::vector<BigInt> weights);

  // Builds from integer keys scaled by `scale` (exact grids like
  // midrank sums expressed in half units).
  static DiscreteLaw from_scaled(const std::map<long long, BigInt>& weights,
                                 double scale);

  double cdf(double x) const;  // P(S <= x)
  double sf(double x) const;   // P(S >= x)
  double pmf(double x) const;
  double mean() const;
  double variance() const;

  const std::vector<double>& support() const { return support_; }
  const std::vector<BigInt>& weights() const { return weights_; }
  const BigInt& total() const { return total_; }

 private:
  std::vector<double> support_;
  std::vector<BigInt> weights_;
  std::vector<BigInt> cum_;
  BigInt total_;
};

using LawPtr = std::shared_ptr<const DiscreteLaw>;

// Number-of-runs law for n1 + n2 binary arrangements (closed form;
// weights over C(n1+n2, n1) equiprobable arrangements).
LawPtr runs_law(int n1, int n2);

// Runs-up-and-down law: number of sign runs in the difference sequence
// of a random permutation of n distinct values.
LawPtr updown_runs_law(int n);

// Wilcoxon signed-rank W+ law. The tied variant takes the observed
// midranks of |d| (half-integer grid); both run the same subset-sum DP
// over 2^n equiprobable sign patterns.
LawPtr signed_rank_law(int n);
DiscreteLaw signed_rank_law_tied(std::span<const double> midranks);

// Rank-sum law of W = sum of sample-2 ranks among 1..m+n (tie-free).
LawPtr rank_sum_law(int m, int n);

// Null law of a linear rank statistic: sum of `n_select` scores drawn
// without replacement from `scores`; exhaustive over C(N, n) subsets.
DiscreteLaw linear_rank_law(std::span<const double> scores, int n_select);

// Kendall T = concordant - discordant over random untied permutations.
LawPtr kendall_t_law(int n);

// Spearman S = sum d_i^2 over random untied permutations (n <= 10).
LawPtr spearman_s_law(int n);

// Friedman S and Page L laws for the given per-block midrank rows;
// enumerates all (k!)^blocks within-block permutations in one pass.
struct FriedmanPageLaws {
  DiscreteLaw friedman_s;
  DiscreteLaw page_l;
};
FriedmanPageLaws friedman_page_laws(const std::vector<std::vector<double>>& rank_rows);

// Jonckheere-Terpstra B law for tie-free samples of the given sizes
// (convolution of sequential Mann-Whitney laws).
LawPtr jonckheere_law(std::vector<int> sizes);

// Law of V = #(treatment values below the q-th control order statistic),
// q = ceil(m/2); negative hypergeometric over C(m+n, n) interleavings.
LawPtr mathisen_law(int m, int n);

// Distribution of a statistic over all distinct assignments of the
// pooled values into groups of the given sizes (multiset-aware; every
// position-assignment equally likely). `stat` receives the groups.
template <typename Stat>
DiscreteLaw enumerate_assignments(std::span<const double> pooled,
                                  std::span<const int> sizes, Stat&& stat);

// Number of distinct position-assignments N! / prod(n_j!).
BigInt assignment_count(std::span<const int> sizes);

// --- implementation of the template ----------------------------------

namespace detail {
void enumerate_assignments_impl(
    std::span<const double> pooled, std::span<const int> sizes,
    const std::function<double(const std::vector<std::vector<double>>&)>& stat,
    std::vector<std::pair<double, BigInt>>* out);
}

template <typename Stat>
DiscreteLaw enumerate_assignments(std::span<const double> pooled,
                                  std::span<const int> sizes, Stat&& stat) {
  std::vector<std::pair<double, BigInt>> acc;
  detail::enumerate_assignments_impl(pooled, sizes, stat, &acc);
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

}  // namespace npst

#endif  // NPST_EXACT_LAWS_HPP_
