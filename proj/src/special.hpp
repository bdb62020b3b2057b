#ifndef NPST_SPECIAL_HPP_
#define NPST_SPECIAL_HPP_

namespace npst {

// Standard normal cdf, |error| < 1e-12 over the full double range
// (erfc-based; cross-language ports must agree to printed precision).
double normal_cdf(double z);

// Inverse of normal_cdf on (0,1); cdf(quantile(p)) = p within 1e-12.
double normal_quantile(double p);

// Regularized lower incomplete gamma P(a, x), a > 0, x >= 0.
// Series for x < a, continued fraction otherwise; |error| < 1e-13.
double reg_lower_gamma(double a, double x);

// Chi-square cdf with df >= 1 (split per reg_lower_gamma at x = df).
double chi_square_cdf(double x, double df);

// log n! and log C(n, k) for nonnegative integer arguments.
double ln_factorial(int n);
double ln_choose(int n, int k);

}  // namespace npst

#endif  // NPST_SPECIAL_HPP_
