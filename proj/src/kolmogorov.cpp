#include "kolmogorov.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <vector>

#include "errors.hpp"
#include "exact_laws.hpp"
#include "special.hpp"

namespace npst {
namespace {

// Square matrices with a power-of-1e140 scale factor to keep the Durbin
// matrix power finite for large n.
struct ScaledMatrix {
  int m;
  std::vector<double> a;
  int exponent = 0;  // value = a * (1e140)^exponent

  double& at(int i, int j) { return a[static_cast<std::size_t>(i) * m + j]; }
  double at(int i, int j) const { return a[static_cast<std::size_t>(i) * m + j]; }

  void rescale() {
    double mx = 0;
    for (double v : a) mx = std::max(mx, std::fabs(v));
    if (mx > 1e140) {
      for (double& v : a) v *= 1e-140;
      ++exponent;
    }
  }
};

ScaledMatrix multiply(const ScaledMatrix& x, const ScaledMatrix& y) {
  ScaledMatrix r{x.m, std::vector<double>(x.a.size(), 0.0), x.exponent + y.exponent};
  for (int i = 0; i < x.m; ++i)
    for (int t = 0; t < x.m; ++t) {
      double v = x.at(i, t);
      if (v == 0) continue;
      for (int j = 0; j < x.m; ++j) r.at(i, j) += v * y.at(t, j);
    }
  r.rescale();
  return r;
}

ScaledMatrix matrix_power(ScaledMatrix base, int n) {
  ScaledMatrix result{base.m, std::vector<double>(base.a.size(), 0.0), 0};
  for (int i = 0; i < base.m; ++i) result.at(i, i) = 1.0;
  while (n > 0) {
    if (n & 1) result = multiply(result, base);
    n >>= 1;
    if (n > 0) base = multiply(base, base);
  }
  return result;
}

}  // namespace

double kolmogorov_exact_cdf(int n, double d) {
  if (n < 1) throw usage_error("kolmogorov cdf requires n >= 1");
  if (!(d >= 0.0 && d <= 1.0)) throw usage_error("kolmogorov cdf requires 0 <= d <= 1");
  if (d * n <= 0.5) return 0.0;  // Dn >= 1/(2n) almost surely
  if (d >= 1.0) return 1.0;
  if (n * d * d >= 20.0) return 1.0;  // tail below 4e-18

  const int k = static_cast<int>(std::ceil(n * d - 1e-12));
  const double h = k - n * d;
  const int m = 2 * k - 1;

  ScaledMatrix H{m, std::vector<double>(static_cast<std::size_t>(m) * m, 0.0), 0};
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      if (i - j + 1 >= 0) H.at(i, j) = 1.0;
  for (int i = 0; i < m; ++i) {
    H.at(i, 0) -= std::pow(h, i + 1);
    H.at(m - 1, i) -= std::pow(h, m - i);
  }
  H.at(m - 1, 0) += (2 * h - 1 > 0) ? std::pow(2 * h - 1, m) : 0.0;
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      if (i - j + 1 > 0)
        for (int g = 1; g <= i - j + 1; ++g) H.at(i, j) /= g;

  ScaledMatrix Hn = matrix_power(std::move(H), n);
  double t = Hn.at(k - 1, k - 1);
  int exponent = Hn.exponent;
  // multiply by n! / n^n with the same rescaling scheme
  for (int i = 1; i <= n; ++i) {
    t *= static_cast<double>(i) / n;
    if (t < 1e-140 && t > 0) {
      t *= 1e140;
      --exponent;
    }
  }
  double value = t * std::pow(1e140, exponent);
  return std::clamp(value, 0.0, 1.0);
}

double birnbaum_tingey_sf(int n, double d) {
  if (n < 1) throw usage_error("one-sided KS tail requires n >= 1");
  if (d <= 0) return 1.0;
  if (d >= 1) return 0.0;
  const int jmax = static_cast<int>(std::floor(n * (1.0 - d) + 1e-12));
  double sum = 0.0;
  for (int j = 0; j <= jmax; ++j) {
    double a = d + static_cast<double>(j) / n;
    double b = 1.0 - d - static_cast<double>(j) / n;
    if (b < 0) break;
    double lt = ln_choose(n, j);
    double term;
    if (j == 0) {
      term = std::exp(lt - std::log(a) + n * std::log(b));
    } else if (b == 0) {
      term = 0.0;
    } else {
      term = std::exp(lt + (j - 1) * std::log(a) + (n - j) * std::log(b));
    }
    sum += term;
  }
  return std::clamp(d * sum, 0.0, 1.0);
}

double kolmogorov_limit_sf(double lambda) {
  if (lambda <= 0) return 1.0;
  if (lambda < 1.18) {
    // complementary theta-series form, accurate for small lambda
    double t = std::exp(-M_PI * M_PI / (8.0 * lambda * lambda));
    double cdf = std::sqrt(2.0 * M_PI) / lambda *
                 (t + std::pow(t, 9) + std::pow(t, 25) + std::pow(t, 49));
    return std::clamp(1.0 - cdf, 0.0, 1.0);
  }
  double sum = 0.0;
  for (int j = 1; j <= 100; ++j) {
    double term = std::exp(-2.0 * j * j * lambda * lambda);
    sum += (j % 2 == 1) ? term : -term;
    if (term < 1e-18) break;
  }
  return std::clamp(2.0 * sum, 0.0, 1.0);
}

namespace {

// Counts monotone (0,0)->(m,n) lattice paths whose every vertex (i,j)
// satisfies keep(i*n - j*m); probability complement gives the tail.
double ks2_sf(int m, int n, const std::function<bool(long long)>& keep) {
  std::vector<std::vector<BigInt>> ways(
      static_cast<std::size_t>(m) + 1,
      std::vector<BigInt>(static_cast<std::size_t>(n) + 1, 0));
  for (int i = 0; i <= m; ++i) {
    for (int j = 0; j <= n; ++j) {
      long long diff = static_cast<long long>(i) * n - static_cast<long long>(j) * m;
      if (!keep(diff)) continue;
      if (i == 0 && j == 0) {
        ways[0][0] = 1;
        continue;
      }
      BigInt v = 0;
      if (i > 0) v += ways[static_cast<std::size_t>(i) - 1][static_cast<std::size_t>(j)];
      if (j > 0) v += ways[static_cast<std::size_t>(i)][static_cast<std::size_t>(j) - 1];
      ways[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = v;
    }
  }
  BigInt inside = ways[static_cast<std::size_t>(m)][static_cast<std::size_t>(n)];
  BigInt total = big_choose(m + n, m);
  double p = 1.0 - inside.convert_to<double>() / total.convert_to<double>();
  return std::clamp(p, 0.0, 1.0);
}

}  // namespace

double ks2_exact_sf_two_sided(int m, int n, long long t) {
  if (t <= 0) return 1.0;
  return ks2_sf(m, n, [t](long long diff) { return std::llabs(diff) <= t - 1; });
}

double ks2_exact_sf_one_sided(int m, int n, long long t) {
  if (t <= 0) return 1.0;
  return ks2_sf(m, n, [t](long long diff) { return diff <= t - 1; });
}

}  // namespace npst
