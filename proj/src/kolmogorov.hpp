#ifndef NPST_KOLMOGOROV_HPP_
#define NPST_KOLMOGOROV_HPP_

namespace npst {

// Exact P(Dn <= d) for the one-sample statistic under a continuous null
// (Durbin matrix form of Marsaglia-Tsang-Wang).
double kolmogorov_exact_cdf(int n, double d);

// Exact one-sided P(Dn+ >= d) (Birnbaum-Tingey).
double birnbaum_tingey_sf(int n, double d);

// Limiting two-sided tail: P(K >= lambda) = 2 sum (-1)^{j-1} exp(-2 j^2 lambda^2).
double kolmogorov_limit_sf(double lambda);

// Two-sample exact tails by lattice-path counting (tie-free pooled
// sample). Thresholds are on the integer grid t = D * m * n.
// two_sided: P(max |i*n - j*m| >= t); one_sided: P(max (i*n - j*m) >= t).
double ks2_exact_sf_two_sided(int m, int n, long long t);
double ks2_exact_sf_one_sided(int m, int n, long long t);

}  // namespace npst

#endif  // NPST_KOLMOGOROV_HPP_
