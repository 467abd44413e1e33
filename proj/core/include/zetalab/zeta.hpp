#pragma once

#include <vector>

#include "zetalab/types.hpp"

namespace zetalab {

// zeta(s) for Re s > -1, s != 1, by Euler-Maclaurin continuation:
//   zeta(s) = sum_{n<N} n^-s + N^(1-s)/(s-1) + N^-s/2 + correction terms,
// with the standard remainder bound. N starts at max(10, 2|t|+10) and is
// doubled until the bound meets settings.target_tol.
EvalResult zeta_eval(Complex s, const EvalSettings& settings = {});

// Independent route: eta(s) accelerated by Borwein's Chebyshev scheme,
// zeta(s) = eta(s) / (1 - 2^(1-s)), valid for Re s > 0. The tail bound is
// Borwein's published one plus an explicit rounding allowance.
EvalResult zeta_oracle(Complex s, const EvalSettings& settings = {});

// Truncated Euler product over primes p <= prime_cutoff, Re s > 1.
EvalResult euler_product(Complex s, uint32_t prime_cutoff);

// S_n(s) = sum_{v=1}^{n} v^-s, exact up to floating-point rounding.
Complex partial_sum(long n, Complex s);
Complex partial_sum_deriv(long n, Complex s);

struct BoxRoot {
  Complex location;
  double residual;  // |S_n| at the refined point
};

struct Box {
  double sigma_lo, sigma_hi, t_lo, t_hi;
};

// Zeros of S_n inside the box, counted by the argument principle on the
// boundary and refined by damped Newton iteration to |S_n| < 1e-10.
std::vector<BoxRoot> sn_zero_search(long n, const Box& box, int quad_points);

// Winding number of S_n along the box boundary (exposed for testing).
int sn_winding_number(long n, const Box& box, int quad_points);

// log|zeta(s)| with propagated error bound (returned through *err_bound
// when non-null). Errors out within 1e-300 of a zero or the pole.
double log_abs_zeta(Complex s, const EvalSettings& settings = {},
                    double* err_bound = nullptr);

// zeta'(s)/zeta(s) via the term-wise differentiated Euler-Maclaurin sum.
EvalResult log_deriv_zeta(Complex s, const EvalSettings& settings = {});

// zeta(k) for integer k >= 2. Even k <= 32 via the Bernoulli closed form,
// everything else by direct series with tail bound <= 1e-15. Memoized.
double zeta_integer(int k);

// B_{2m} for 2m <= 32 (exact rationals rounded to double).
double bernoulli_2m(int m);

}  // namespace zetalab
