#include "special.hpp"

#include <cmath>
#include <limits>

#include "errors.hpp"

namespace npst {

double normal_cdf(double z) {
  // 0.5 * erfc(-z / sqrt(2)); erfc keeps full relative accuracy in the
  // lower tail where 1 - Phi(-z) would cancel.
  return 0.5 * std::erfc(-z / std::sqrt(2.0));
}

double normal_quantile(double p) {
  if (!(p > 0.0 && p < 1.0))
    throw usage_error("normal quantile requires 0 < p < 1");
  // Bisection to a tight bracket, then Newton polish.
  double lo = -40.0, hi = 40.0;
  for (int i = 0; i < 80; ++i) {
    double mid = 0.5 * (lo + hi);
    if (normal_cdf(mid) < p)
      lo = mid;
    else
      hi = mid;
  }
  double x = 0.5 * (lo + hi);
  for (int i = 0; i < 4; ++i) {
    double f = normal_cdf(x) - p;
    double d = std::exp(-0.5 * x * x) / std::sqrt(2.0 * M_PI);
    if (d <= 0) break;
    double step = f / d;
    if (!std::isfinite(step)) break;
    x -= step;
  }
  return x;
}

namespace {

// Series expansion of P(a,x), valid and fast for x < a + 1.
double gamma_p_series(double a, double x) {
  double ap = a;
  double sum = 1.0 / a;
  double del = sum;
  for (int i = 0; i < 10000; ++i) {
    ap += 1.0;
    del *= x / ap;
    sum += del;
    if (std::fabs(del) < std::fabs(sum) * 1e-16) break;
  }
  return sum * std::exp(-x + a * std::log(x) - std::lgamma(a));
}

// Continued fraction for Q(a,x) (modified Lentz), valid for x > a - 1.
double gamma_q_cf(double a, double x) {
  const double tiny = 1e-300;
  double b = x + 1.0 - a;
  double c = 1.0 / tiny;
  double d = 1.0 / b;
  double h = d;
  for (int i = 1; i < 10000; ++i) {
    double an = -static_cast<double>(i) * (i - a);
    b += 2.0;
    d = an * d + b;
    if (std::fabs(d) < tiny) d = tiny;
    c = b + an / c;
    if (std::fabs(c) < tiny) c = tiny;
    d = 1.0 / d;
    double del = d * c;
    h *= del;
    if (std::fabs(del - 1.0) < 1e-16) break;
  }
  return h * std::exp(-x + a * std::log(x) - std::lgamma(a));
}

}  // namespace

double reg_lower_gamma(double a, double x) {
  if (!(a > 0) || !(x >= 0)) throw usage_error("reg_lower_gamma domain: a > 0, x >= 0");
  if (x == 0) return 0.0;
  if (x < a) return gamma_p_series(a, x);
  return 1.0 - gamma_q_cf(a, x);
}

double chi_square_cdf(double x, double df) {
  if (!(df >= 1)) throw usage_error("chi-square requires df >= 1");
  if (x <= 0) return 0.0;
  return reg_lower_gamma(df / 2.0, x / 2.0);
}

double ln_factorial(int n) {
  if (n < 0) throw usage_error("ln_factorial of a negative integer");
  return std::lgamma(static_cast<double>(n) + 1.0);
}

double ln_choose(int n, int k) {
  if (k < 0 || k > n) return -std::numeric_limits<double>::infinity();
  return ln_factorial(n) - ln_factorial(k) - ln_factorial(n - k);
}

}  // namespace npst
