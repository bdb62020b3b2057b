#ifndef NPST_DISTRIBUTIONS_HPP_
#define NPST_DISTRIBUTIONS_HPP_

#include <string>
#include <variant>

namespace npst {

// --- discrete laws ---------------------------------------------------

class Binomial {
 public:
  Binomial(int trials, double p);
  double pmf(int k) const;
  double cdf(double x) const;  // P(X <= floor(x))
  int trials() const { return n_; }
  double success_probability() const { return p_; }

 private:
  int n_;
  double p_;
};

class Poisson {
 public:
  explicit Poisson(double lambda);
  double pmf(int k) const;
  double cdf(double x) const;

 private:
  double lambda_;
};

// --- continuous laws --------------------------------------------------

class Normal {
 public:
  Normal(double mean, double sigma);
  double cdf(double x) const;
  double quantile(double p) const;
  double mean() const { return mean_; }
  double sigma() const { return sigma_; }

 private:
  double mean_, sigma_;
};

class ChiSquare {
 public:
  explicit ChiSquare(double df);
  double cdf(double x) const;
  double quantile(double p) const;
  double df() const { return df_; }

 private:
  double df_;
};

class Exponential {
 public:
  explicit Exponential(double rate);
  double cdf(double x) const;
  double quantile(double p) const;

 private:
  double rate_;
};

class Uniform {
 public:
  Uniform(double a, double b);
  double cdf(double x) const;
  double quantile(double p) const;

 private:
  double a_, b_;
};

// Closed set of continuous targets accepted by the goodness-of-fit tests.
using ContinuousDistribution = std::variant<Normal, ChiSquare, Exponential, Uniform>;

double cdf(const ContinuousDistribution& d, double x);
double quantile(const ContinuousDistribution& d, double p);
std::string describe(const ContinuousDistribution& d);

}  // namespace npst

#endif  // NPST_DISTRIBUTIONS_HPP_
