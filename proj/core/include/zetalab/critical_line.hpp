#pragma once

#include <string>
#include <vector>

#include "zetalab/types.hpp"

namespace zetalab {

struct ZeroRecord {
  long index = 1;          // 1-based, consecutive by ordinate
  double ordinate = 0.0;   // gamma of rho = 1/2 + i*gamma
  double bracket_lo = 0.0;
  double bracket_hi = 0.0;
  double tol = 0.0;
};

struct GapPoint {
  long n = 0;
  double T = 0.0;               // in (n, n+1)
  double min_distance = 0.0;    // min |T - gamma| over scanned zeros
  double product_with_log = 0.0;  // min_distance * log n
};

// Riemann-Siegel phase, asymptotic expansion; error < 1e-10 for t >= 10.
double rs_theta(double t);

// Z(t) = e^{i theta(t)} zeta(1/2 + it), real up to evaluation error.
double hardy_z(double t, const EvalSettings& settings = {});

// All sign changes of Z on the step grid over [t_lo, t_hi], bisected to
// tol. Zeros below t = 10 do not exist, so indices start at 1 at t_lo = 10.
std::vector<ZeroRecord> scan_zeros(double t_lo, double t_hi, double step,
                                   double tol);

struct ZeroCount {
  long scanned = 0;
  double main_term = 0.0;  // (T/2pi) log(T/2pi) - T/2pi + 7/8
};

// Scan-based count of zeros with 0 < gamma <= T, next to the smooth main
// term of the zero-counting formula. A discrepancy > 2 triggers one rescan
// at a quarter of the default step.
ZeroCount count_zeros(double T);

// Point 1/2 + iT in (n, n+1) maximizing the distance to the nearest
// scanned zero ordinate, over a uniform grid (leftmost maximizer on ties).
GapPoint find_gap_point(long n, long grid);
GapPoint find_gap_point(long n, long grid,
                        const std::vector<ZeroRecord>& zeros);

// CSV with header: index,ordinate,bracket_lo,bracket_hi
std::string zeros_to_csv(const std::vector<ZeroRecord>& zeros);

}  // namespace zetalab
