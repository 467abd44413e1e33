#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "zetalab/types.hpp"

namespace zetalab {

// mu, lambda and running M, L over a contiguous range [lo, hi].
// Cumulative columns are anchored to the true M(lo-1), L(lo-1).
struct SieveTable {
  int64_t lo = 1;
  int64_t hi = 1;
  std::vector<int8_t> mu;      // mu[n - lo]
  std::vector<int8_t> lambda;  // lambda[n - lo]
  std::vector<int64_t> M_cum;  // M(n)
  std::vector<int64_t> L_cum;  // L(n)

  int8_t mu_at(int64_t n) const { return mu[size_t(n - lo)]; }
  int8_t lambda_at(int64_t n) const { return lambda[size_t(n - lo)]; }
  int64_t M_at(int64_t n) const { return M_cum[size_t(n - lo)]; }
  int64_t L_at(int64_t n) const { return L_cum[size_t(n - lo)]; }
};

struct MertensStats {
  int64_t N = 0;
  double max_ratio_sqrt = 0.0;  // max over 1 < n <= N of |M(n)| / sqrt(n)
  double max_ratio_eps = 0.0;   // max of |M(n)| / n^(1/2 + eps)
  int64_t argmax_n = 0;         // argmax of the sqrt ratio
};

SieveTable sieve_build(int64_t lo, int64_t hi);

MertensStats mertens_stats(int64_t N, double eps);

// sum_{n <= x} lambda(n)/n, compensated summation.
double turan_sum(int64_t x);

struct DirichletCheckpoint {
  int64_t x = 0;
  Complex partial;
};

// Partial sums of sum mu(n) n^-s at log-spaced checkpoints up to N.
std::vector<DirichletCheckpoint> mu_dirichlet_partial(Complex s, int64_t N);

struct PntError {
  int64_t pi_x = 0;
  double li_x = 0.0;
  double rel_err = 0.0;  // (pi_x - li_x) / li_x
};

PntError pnt_error(int64_t x);

// Principal-value logarithmic integral, adaptive quadrature, error < 1e-8.
double log_integral(double x);

struct SeriesRow {
  int64_t x = 0;
  int64_t M = 0;
  int64_t L = 0;
  double turan = 0.0;
  double m_over_sqrt = 0.0;
  double m_over_x_eps = 0.0;
};

// Checkpoint series for CSV export:
// columns x, M, L, turan_sum, |M|/sqrt(x), |M|/x^(1/2+eps).
std::vector<SeriesRow> checkpoint_series(int64_t N, double eps);
std::string series_to_csv(const std::vector<SeriesRow>& rows);

}  // namespace zetalab
