#include "distributions.hpp"

#include <cmath>
#include <sstream>

#include "errors.hpp"
#include "special.hpp"

namespace npst {

Binomial::Binomial(int trials, double p) : n_(trials), p_(p) {
  if (n_ < 0) throw usage_error("binomial requires trials >= 0");
  if (!(p_ >= 0.0 && p_ <= 1.0)) throw usage_error("binomial requires 0 <= p <= 1");
}

double Binomial::pmf(int k) const {
  if (k < 0 || k > n_) return 0.0;
  if (p_ == 0.0) return k == 0 ? 1.0 : 0.0;
  if (p_ == 1.0) return k == n_ ? 1.0 : 0.0;
  double lp = ln_choose(n_, k) + k * std::log(p_) + (n_ - k) * std::log1p(-p_);
  return std::exp(lp);
}

double Binomial::cdf(double x) const {
  if (x < 0) return 0.0;
  int k = static_cast<int>(std::floor(x + 1e-12));
  if (k >= n_) return 1.0;
  // Sum the smaller tail for accuracy.
  if (k + 1 <= n_ - k) {
    double sum = 0.0;
    for (int j = 0; j <= k; ++j) sum += pmf(j);
    return sum < 1.0 ? sum : 1.0;
  }
  double upper = 0.0;
  for (int j = k + 1; j <= n_; ++j) upper += pmf(j);
  double sum = 1.0 - upper;
  return sum > 0.0 ? sum : 0.0;
}

Poisson::Poisson(double lambda) : lambda_(lambda) {
  if (!(lambda_ > 0)) throw usage_error("poisson requires lambda > 0");
}

double Poisson::pmf(int k) const {
  if (k < 0) return 0.0;
  return std::exp(-lambda_ + k * std::log(lambda_) - ln_factorial(k));
}

double Poisson::cdf(double x) const {
  if (x < 0) return 0.0;
  int k = static_cast<int>(std::floor(x + 1e-12));
  // P(X <= k) = Q(k+1, lambda), the upper regularized gamma.
  return 1.0 - reg_lower_gamma(static_cast<double>(k) + 1.0, lambda_);
}

Normal::Normal(double mean, double sigma) : mean_(mean), sigma_(sigma) {
  if (!(sigma_ > 0)) throw usage_error("normal requires sigma > 0");
}

double Normal::cdf(double x) const { return normal_cdf((x - mean_) / sigma_); }

double Normal::quantile(double p) const {
  return mean_ + sigma_ * normal_quantile(p);
}

ChiSquare::ChiSquare(double df) : df_(df) {
  if (!(df_ >= 1)) throw usage_error("chi-square requires df >= 1");
}

double ChiSquare::cdf(double x) const { return chi_square_cdf(x, df_); }

double ChiSquare::quantile(double p) const {
  if (!(p > 0.0 && p < 1.0)) throw usage_error("quantile requires 0 < p < 1");
  double lo = 0.0, hi = df_ + 10.0;
  while (cdf(hi) < p) hi *= 2.0;
  for (int i = 0; i < 200; ++i) {
    double mid = 0.5 * (lo + hi);
    if (chi_square_cdf(mid, df_) < p)
      lo = mid;
    else
      hi = mid;
    if (hi - lo < 1e-13 * (1.0 + hi)) break;
  }
  return 0.5 * (lo + hi);
}

Exponential::Exponential(double rate) : rate_(rate) {
  if (!(rate_ > 0)) throw usage_error("exponential requires rate > 0");
}

double Exponential::cdf(double x) const {
  return x <= 0 ? 0.0 : -std::expm1(-rate_ * x);
}

double Exponential::quantile(double p) const {
  if (!(p > 0.0 && p < 1.0)) throw usage_error("quantile requires 0 < p < 1");
  return -std::log1p(-p) / rate_;
}

Uniform::Uniform(double a, double b) : a_(a), b_(b) {
  if (!(a_ < b_)) throw usage_error("uniform requires a < b");
}

double Uniform::cdf(double x) const {
  if (x <= a_) return 0.0;
  if (x >= b_) return 1.0;
  return (x - a_) / (b_ - a_);
}

double Uniform::quantile(double p) const {
  if (!(p > 0.0 && p < 1.0)) throw usage_error("quantile requires 0 < p < 1");
  return a_ + p * (b_ - a_);
}

double cdf(const ContinuousDistribution& d, double x) {
  return std::visit([x](const auto& law) { return law.cdf(x); }, d);
}

double quantile(const ContinuousDistribution& d, double p) {
  return std::visit([p](const auto& law) { return law.quantile(p); }, d);
}

std::string describe(const ContinuousDistribution& d) {
  std::ostringstream out;
  if (const auto* n = std::get_if<Normal>(&d))
    out << "normal(mean=" << n->mean() << ", sd=" << n->sigma() << ")";
  else if (const auto* c = std::get_if<ChiSquare>(&d))
    out << "chi_square(df=" << c->df() << ")";
  else if (std::get_if<Exponential>(&d))
    out << "exponential";
  else
    out << "uniform";
  return out.str();
}

}  // namespace npst
