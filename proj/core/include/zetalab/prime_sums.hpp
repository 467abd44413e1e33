#pragma once

#include <cstdint>

#include "zetalab/types.hpp"

namespace zetalab {

enum class PrimeSumMethod { direct, mobius_log_zeta };

struct PrimeSumResult {
  Complex value{};
  uint32_t cutoff = 0;      // largest prime bound (or k-index) used
  double tail_bound = 0.0;  // rigorous for the stated method
  PrimeSumMethod method = PrimeSumMethod::direct;
};

// P(s) = sum_p p^-s for Re s > 1.
// Default route: P(s) = sum_{k>=1} mu(k)/k log zeta(ks), truncated when
// |log zeta(ks)|/k < target_tol. Near Re s = 1 the direct route is useless
// (the tail decays like cutoff^(1-sigma)), so the identity route is the
// primary one; the direct sum is a cross-check for Re s >= 1.5.
PrimeSumResult prime_zeta(Complex s, const EvalSettings& settings = {});
PrimeSumResult prime_zeta_direct(Complex s, uint32_t prime_cutoff);

// f(s) = log zeta(s) - P(s) = sum_p (-log(1 - p^-s) - p^-s), Re s >= 1.
PrimeSumResult f_remainder(Complex s, uint32_t prime_cutoff);

// B = sum_p 1/(p(p-1)), truncated at prime_cutoff, tail bound 1/cutoff.
double b_constant(uint32_t prime_cutoff);

// sum_p log p / p^sigma, sigma > 1. Direct summation when the integral
// tail bound fits under target_tol; otherwise (sigma < 1.5) falls back to
// -zeta'/zeta minus the m >= 2 prime-power part, which converges fast.
PrimeSumResult log_prime_sum(double sigma_prime, uint32_t prime_cutoff,
                             const EvalSettings& settings = {});

struct TrigPrimeSums {
  double cos_sum = 0.0;      // sum cos(delta log p) / p^sigma
  double sin2_sum = 0.0;     // sum sin^2((delta/2) log p) / p^sigma
  double sin_abs_sum = 0.0;  // sum |sin((delta/2) log p)| / p^sigma
  uint32_t cutoff = 0;
  double tail_bound = 0.0;   // shared by all three sums
};

TrigPrimeSums trig_prime_sums(double sigma_prime, double delta,
                              uint32_t prime_cutoff);

}  // namespace zetalab
