#include <doctest.h>

#include <cmath>
#include <random>

#include "zetalab/prime_sums.hpp"
#include "zetalab/primes.hpp"
#include "zetalab/zeta.hpp"

using namespace zetalab;

TEST_CASE("prime_zeta classical points") {
  const PrimeSumResult p2 = prime_zeta(Complex(2.0, 0.0));
  CHECK(p2.value.real() == doctest::Approx(0.4522474200410655).epsilon(1e-10));
  CHECK(p2.value.imag() == doctest::Approx(0.0));
  CHECK(p2.method == PrimeSumMethod::mobius_log_zeta);

  const PrimeSumResult p4 = prime_zeta(Complex(4.0, 0.0));
  CHECK(p4.value.real() > 0.0769);
  CHECK(p4.value.real() < 0.0779);

  CHECK_THROWS_AS(prime_zeta(Complex(0.9, 0.0)), ZetaError);
}

TEST_CASE("prime_zeta methods cross-validate") {
  // identity route vs direct prime summation, sigma in [1.5, 4]
  for (int i = 0; i < 20; ++i) {
    const double sigma = 1.5 + 2.5 * double(i) / 19.0;
    const PrimeSumResult a = prime_zeta(Complex(sigma, 0.0));
    const PrimeSumResult b = prime_zeta_direct(Complex(sigma, 0.0), 2'000'000);
    CHECK(std::abs(a.value - b.value) <= a.tail_bound + b.tail_bound);
  }
}

TEST_CASE("prime_zeta asymptotic ratio near sigma = 1") {
  const double sigma = 1.001;
  const PrimeSumResult p = prime_zeta(Complex(sigma, 0.0));
  const double ratio = p.value.real() / std::log(1.0 / (sigma - 1.0));
  CHECK(ratio > 0.8);
  CHECK(ratio < 1.2);
}

TEST_CASE("f_remainder and b_constant") {
  const double b5 = b_constant(100'000);
  const double b6 = b_constant(1'000'000);
  CHECK(b6 == doctest::Approx(0.7731566).epsilon(1e-6));
  CHECK(b5 <= b6);
  CHECK(b6 <= b5 + 1e-5);  // tail bound 1/cutoff

  // |f(s')| <= B on random points with sigma' >= 1
  const double B = b6 + 1e-6;
  std::mt19937 rng(424242);
  std::uniform_real_distribution<double> sig(1.0, 3.0), tt(0.0, 30.0);
  for (int i = 0; i < 50; ++i) {
    const Complex s(sig(rng), tt(rng));
    const PrimeSumResult f = f_remainder(s, 100'000);
    CHECK(std::abs(f.value) <= B + f.tail_bound);
  }
}

TEST_CASE("log zeta = prime zeta + remainder") {
  const Complex s(2.0, 0.0);
  const PrimeSumResult p = prime_zeta(s);
  const PrimeSumResult f = f_remainder(s, 1'000'000);
  const double lz = log_abs_zeta(s);
  CHECK(std::abs(lz - p.value.real() - f.value.real()) <=
        p.tail_bound + f.tail_bound + 1e-10);

  for (const double sigma : {1.1, 1.5, 2.5}) {
    const Complex sp(sigma, 7.0);
    const PrimeSumResult pp = prime_zeta(sp);
    const PrimeSumResult ff = f_remainder(sp, 1'000'000);
    CHECK(std::abs(log_abs_zeta(sp) - pp.value.real() - ff.value.real()) <=
          pp.tail_bound + ff.tail_bound + 1e-8);
  }
}

TEST_CASE("log_prime_sum values and windows") {
  EvalSettings coarse;
  coarse.target_tol = 1e-4;
  const PrimeSumResult a = log_prime_sum(2.0, 1'000'000, coarse);
  const PrimeSumResult b = log_prime_sum(2.0, 10'000'000, coarse);
  CHECK(a.method == PrimeSumMethod::direct);
  CHECK(std::abs(a.value.real() - b.value.real()) <=
        a.tail_bound + b.tail_bound);
  CHECK(a.value.real() == doctest::Approx(0.4930911).epsilon(1e-4));

  // near sigma = 1 the -zeta'/zeta route takes over
  const PrimeSumResult c = log_prime_sum(1.1, 1'000'000);
  CHECK(c.method == PrimeSumMethod::mobius_log_zeta);
  CHECK(std::abs(c.value.real() - 10.0) < 5.0);  // 1/(sigma-1) + O(1)

  const PrimeSumResult d = log_prime_sum(1.01, 1'000'000);
  CHECK(d.value.real() * 0.01 > 0.9);
  CHECK(d.value.real() * 0.01 < 1.1);

  CHECK_THROWS_AS(log_prime_sum(2.0, 100, EvalSettings{}), ZetaError);
  CHECK_THROWS_AS(log_prime_sum(0.99, 1000), ZetaError);
}

TEST_CASE("hybrid route is consistent with direct summation") {
  // at sigma = 1.6 both routes are available; they must agree
  EvalSettings coarse;
  coarse.target_tol = 1e-2;
  const PrimeSumResult direct = log_prime_sum(1.6, 10'000'000, coarse);
  const EvalResult ld = log_deriv_zeta(Complex(1.6, 0.0));
  const auto primes = cached_primes(100'000);
  double higher = 0.0;
  for (uint32_t p : *primes) {
    const double ps = std::pow(double(p), -1.6);
    higher += std::log(double(p)) * ps * ps / (1.0 - ps);
  }
  CHECK(std::abs(direct.value.real() - (-ld.value.real() - higher)) <
        direct.tail_bound + 1e-8);
}

TEST_CASE("trig_prime_sums identities") {
  const double sigma = 1.5, delta = 0.3;
  const uint32_t cutoff = 1'000'000;
  const TrigPrimeSums tr = trig_prime_sums(sigma, delta, cutoff);
  const PrimeSumResult pz = prime_zeta_direct(Complex(sigma, 0.0), cutoff);

  // cos theta = 1 - 2 sin^2(theta/2) per prime: zero discrepancy beyond
  // rounding across the whole sum
  CHECK(std::abs(tr.cos_sum - (pz.value.real() - 2.0 * tr.sin2_sum)) < 1e-11);
  CHECK(tr.sin2_sum <= tr.sin_abs_sum);

  // Lemma-style termwise bound: sum |sin| <= (delta/2) sum log p / p^sigma
  EvalSettings coarse;
  coarse.target_tol = 0.05;
  const PrimeSumResult lp = log_prime_sum(sigma, cutoff, coarse);
  CHECK(tr.sin_abs_sum <= 0.5 * delta * (lp.value.real() + lp.tail_bound));

  const TrigPrimeSums zero_delta = trig_prime_sums(sigma, 0.0, cutoff);
  CHECK(zero_delta.sin2_sum == 0.0);
  CHECK(zero_delta.cos_sum == doctest::Approx(pz.value.real()).epsilon(1e-13));

  CHECK_THROWS_AS(trig_prime_sums(0.9, 0.1, cutoff), ZetaError);
  CHECK_THROWS_AS(trig_prime_sums(1.5, -0.1, cutoff), ZetaError);
}
