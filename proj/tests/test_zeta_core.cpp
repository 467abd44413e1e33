#include <doctest.h>

#include <cmath>
#include <numbers>

#include "zetalab/primes.hpp"
#include "zetalab/zeta.hpp"

using namespace zetalab;

namespace {
constexpr double kZeta2 = 1.6449340668482264;  // pi^2/6
constexpr double kPi = std::numbers::pi;
}  // namespace

TEST_CASE("zeta_eval classical values") {
  const EvalResult z2 = zeta_eval(Complex(2.0, 0.0));
  CHECK(std::abs(z2.value - Complex(kZeta2, 0.0)) < 1e-12);
  CHECK(z2.abs_error_bound <= 1e-12);

  const EvalResult z0 = zeta_eval(Complex(0.0, 0.0));
  CHECK(std::abs(z0.value - Complex(-0.5, 0.0)) < 1e-12);

  const EvalResult z3 = zeta_eval(Complex(3.0, 0.0));
  CHECK(std::abs(z3.value.real() - 1.2020569031595943) < 1e-12);
}

TEST_CASE("zeta_eval domain errors") {
  CHECK_THROWS_AS(zeta_eval(Complex(1.0, 0.0)), ZetaError);
  CHECK_THROWS_AS(zeta_eval(Complex(1.0005, 0.0)), ZetaError);  // pole disc
  CHECK_THROWS_AS(zeta_eval(Complex(-1.5, 3.0)), ZetaError);
  EvalSettings bad;
  bad.target_tol = 1e-16;
  CHECK_THROWS_AS(zeta_eval(Complex(2.0, 0.0), bad), ZetaError);
}

TEST_CASE("zeta_oracle agrees with zeta_eval") {
  const EvalResult o2 = zeta_oracle(Complex(2.0, 0.0));
  CHECK(std::abs(o2.value - Complex(kZeta2, 0.0)) < 1e-12);

  for (const Complex s : {Complex(2.0, 0.0), Complex(0.5, 10.0),
                          Complex(0.3, 30.0), Complex(1.5, 5.0)}) {
    const EvalResult a = zeta_eval(s);
    const EvalResult b = zeta_oracle(s);
    CHECK(std::abs(a.value - b.value) <=
          a.abs_error_bound + b.abs_error_bound);
  }
}

TEST_CASE("zeta_oracle denominator guard") {
  // 1 - 2^(1-s) vanishes at s = 1 + 2 pi i / log 2
  const Complex s(1.0, 2.0 * kPi / std::log(2.0));
  CHECK_THROWS_AS(zeta_oracle(s), ZetaError);
}

TEST_CASE("oracle agreement on a 200-point grid") {
  int tested = 0;
  for (int i = 0; i < 20; ++i) {
    for (int j = 0; j < 10; ++j) {
      const double sigma = 0.1 + 2.9 * double(i) / 19.0;
      const double t = 50.0 * double(j) / 9.0;
      const Complex s(sigma, t);
      if (std::abs(s - Complex(1.0, 0.0)) < 0.1) continue;
      const EvalResult a = zeta_eval(s);
      const EvalResult b = zeta_oracle(s);
      CHECK(std::abs(a.value - b.value) <=
            a.abs_error_bound + b.abs_error_bound);
      ++tested;
    }
  }
  CHECK(tested >= 195);
}

TEST_CASE("conjugate symmetry") {
  for (const Complex s :
       {Complex(0.5, 14.0), Complex(2.0, 3.0), Complex(0.2, 40.0)}) {
    const Complex a = zeta_eval(s).value;
    const Complex b = zeta_eval(std::conj(s)).value;
    CHECK(std::abs(b - std::conj(a)) < 1e-12);
  }
}

TEST_CASE("Laurent behavior near the pole") {
  // |(s-1) zeta(s) - 1| <= C |s-1| with C < 1 on |s-1| <= 0.1
  double worst = 0.0;
  for (const double r : {0.01, 0.03, 0.05, 0.1}) {
    for (int k = 0; k < 8; ++k) {
      const double phi = 2.0 * kPi * double(k) / 8.0;
      const Complex s = Complex(1.0, 0.0) + std::polar(r, phi);
      const Complex v = (s - Complex(1.0, 0.0)) * zeta_eval(s).value;
      worst = std::max(worst, std::abs(v - Complex(1.0, 0.0)) / r);
    }
  }
  CHECK(worst < 1.0);  // the fitted C; gamma = 0.577... in the limit
}

TEST_CASE("euler_product cross-checks") {
  const EvalResult p2 = euler_product(Complex(2.0, 0.0), 100'000);
  CHECK(std::abs(p2.value - Complex(kZeta2, 0.0)) <= p2.abs_error_bound);

  for (const Complex s : {Complex(3.0, 0.0), Complex(1.5, 5.0),
                          Complex(2.5, 11.0)}) {
    const uint32_t cutoff = s.real() >= 2.0 ? 1'000 : 100'000;
    const EvalResult prod = euler_product(s, cutoff);
    const EvalResult ref = zeta_eval(s);
    CHECK(std::abs(prod.value - ref.value) <=
          prod.abs_error_bound + ref.abs_error_bound);
  }
  CHECK_THROWS_AS(euler_product(Complex(0.9, 0.0), 100), ZetaError);
}

TEST_CASE("partial_sum basics and convergence") {
  CHECK(partial_sum(1, Complex(7.0, 3.0)) == Complex(1.0, 0.0));
  CHECK(partial_sum(2, Complex(2.0, 0.0)) == Complex(1.25, 0.0));

  const Complex target = zeta_eval(Complex(2.0, 0.0)).value;
  double prev = 1e9;
  for (long n : {10, 100, 1000, 10000}) {
    const double err = std::abs(partial_sum(n, Complex(2.0, 0.0)) - target);
    CHECK(err < prev);
    prev = err;
  }
}

TEST_CASE("sn_zero_search closed-form root of S_2") {
  // S_2(s) = 1 + 2^-s = 0 at s = i pi / log 2
  const double t_root = kPi / std::log(2.0);
  const Box box{-0.5, 0.5, 4.0, 5.0};
  const auto roots = sn_zero_search(2, box, 32);
  REQUIRE(roots.size() == 1);
  CHECK(std::abs(roots[0].location - Complex(0.0, t_root)) < 1e-8);
  CHECK(roots[0].residual < 1e-10);
}

TEST_CASE("sn_zero_search trivial cases") {
  const Box box{0.2, 1.4, 1.0, 20.0};
  CHECK(sn_zero_search(1, box, 32).empty());  // S_1 == 1

  const Box empty_box{-0.5, 0.5, 1.0, 2.0};
  CHECK(sn_winding_number(2, empty_box, 32) == 0);
  const Box hit_box{-0.5, 0.5, 4.0, 5.0};
  CHECK(sn_winding_number(2, hit_box, 32) == 1);
}

TEST_CASE("S_19 has a zero with sigma > 1") {
  // located by a coarse |S_19| scan along sigma slightly above 1 and
  // verified here by the winding count plus the residual check
  const Box box{1.0001, 1.1, 600880.0, 600890.0};
  const auto roots = sn_zero_search(19, box, 64);
  bool found = false;
  for (const auto& r : roots) {
    // at t ~ 6e5 the evaluation noise floor of S_19 is a few 1e-10
    CHECK(r.residual < 1e-9);
    if (r.location.real() > 1.0) found = true;
  }
  CHECK(found);
}

TEST_CASE("log_abs_zeta") {
  CHECK(log_abs_zeta(Complex(2.0, 0.0)) ==
        doctest::Approx(std::log(kZeta2)).epsilon(1e-10));

  const Complex s(0.75, 20.0);
  double bound = 0.0;
  const double a = log_abs_zeta(s, EvalSettings{}, &bound);
  const EvalResult o = zeta_oracle(s);
  CHECK(std::abs(a - std::log(std::abs(o.value))) <
        bound + o.abs_error_bound / std::abs(o.value) * 2.0);
}

TEST_CASE("log_deriv_zeta vs central difference") {
  const double h = 1e-5;
  const EvalResult d = log_deriv_zeta(Complex(2.0, 0.0));
  const double fd = (log_abs_zeta(Complex(2.0 + h, 0.0)) -
                     log_abs_zeta(Complex(2.0 - h, 0.0))) /
                    (2.0 * h);
  CHECK(std::abs(d.value.real() - fd) < 1e-6);
}

TEST_CASE("log_deriv_zeta near sigma = 1") {
  const EvalResult d = log_deriv_zeta(Complex(1.01, 0.0));
  CHECK(std::abs(d.value.real() + 100.0) < 5.0);  // -1/(sigma-1) + O(1)
}

TEST_CASE("log_deriv_zeta vs von Mangoldt sum") {
  // -zeta'/zeta(3) = sum Lambda(n)/n^3 over prime powers
  const auto primes = cached_primes(100'000);
  double sum = 0.0;
  for (uint32_t p : *primes) {
    const double lp = std::log(double(p));
    double pk = double(p);
    while (pk <= 1e15) {
      sum += lp / (pk * pk * pk);
      if (pk > 1e5) break;
      pk *= double(p);
    }
  }
  const EvalResult d = log_deriv_zeta(Complex(3.0, 0.0));
  CHECK(std::abs(-d.value.real() - sum) < 1e-6);
}

TEST_CASE("zeta_integer closed forms and fallbacks") {
  CHECK(zeta_integer(2) == doctest::Approx(kPi * kPi / 6.0).epsilon(1e-14));
  CHECK(zeta_integer(4) ==
        doctest::Approx(std::pow(kPi, 4) / 90.0).epsilon(1e-14));
  CHECK(std::abs(zeta_integer(3) - zeta_eval(Complex(3.0, 0.0)).value.real()) <
        1e-12);
  // even k above the Bernoulli table falls back to the direct series
  CHECK(std::abs(zeta_integer(34) -
                 zeta_eval(Complex(34.0, 0.0)).value.real()) < 1e-14);
  CHECK_THROWS_AS(zeta_integer(1), ZetaError);
}

TEST_CASE("bernoulli table spot checks") {
  CHECK(bernoulli_2m(1) == doctest::Approx(1.0 / 6.0));
  CHECK(bernoulli_2m(6) == doctest::Approx(-691.0 / 2730.0));
  CHECK(bernoulli_2m(8) == doctest::Approx(-3617.0 / 510.0));
}
