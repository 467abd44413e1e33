#include "zetalab/prime_sums.hpp"

#include <cassert>
#include <cmath>

#include "zetalab/primes.hpp"
#include "zetalab/zeta.hpp"

namespace zetalab {

namespace {

struct KahanSum {
  double sum = 0.0, c = 0.0;
  void add(double x) {
    const double y = x - c;
    const double t = sum + y;
    c = (t - sum) - y;
    sum = t;
  }
};

int mobius_small(long k) {
  int sign = 1;
  for (long p = 2; p * p <= k; ++p) {
    if (k % p == 0) {
      k /= p;
      if (k % p == 0) return 0;
      sign = -sign;
    }
  }
  if (k > 1) sign = -sign;
  return sign;
}

// integral tail bound for sum_{n > C} n^-sigma
double power_tail(double cutoff, double sigma) {
  return std::pow(cutoff, 1.0 - sigma) / (sigma - 1.0);
}

// integral tail bound for sum_{n > C} log(n) n^-sigma
double log_power_tail(double cutoff, double sigma) {
  const double s1 = sigma - 1.0;
  return std::pow(cutoff, -s1) * (std::log(cutoff) / s1 + 1.0 / (s1 * s1));
}

}  // namespace

PrimeSumResult prime_zeta(Complex s, const EvalSettings& settings) {
  settings.validate();
  if (s.real() <= 1.0) fail(Errc::DomainError, "prime_zeta requires Re s > 1");
  PrimeSumResult out;
  out.method = PrimeSumMethod::mobius_log_zeta;
  Complex acc{};
  double err = 0.0;
  long k = 0;
  for (;;) {
    ++k;
    if (k > 200) fail(Errc::NoConvergence, "mobius-log-zeta series stalled");
    const int mu = mobius_small(k);
    // Near the pole the k = 1 evaluation cannot beat its rounding floor
    // (~eps * |zeta|); the log turns that into a relative error, so a
    // looser absolute tolerance is harmless for the tail accounting.
    EvalSettings sk = settings;
    if (k == 1 && std::abs(s - Complex(1.0, 0.0)) < 0.1)
      sk.target_tol = std::max(settings.target_tol, 1e-10);
    const EvalResult z = zeta_eval(double(k) * s, sk);
    const Complex lz = std::log(z.value);
    if (mu != 0) {
      acc += double(mu) / double(k) * lz;
      err += z.abs_error_bound / (std::abs(z.value) - z.abs_error_bound) /
             double(k);
    }
    if (k >= 2 && std::abs(lz) / double(k) < settings.target_tol) {
      // remaining terms decay like 2^(-k sigma); next term dominates
      out.tail_bound = err + 2.0 * std::abs(lz) / double(k);
      break;
    }
  }
  out.value = acc;
  out.cutoff = uint32_t(k);
  return out;
}

PrimeSumResult prime_zeta_direct(Complex s, uint32_t prime_cutoff) {
  if (s.real() <= 1.0) fail(Errc::DomainError, "requires Re s > 1");
  if (prime_cutoff < 10) fail(Errc::CutoffInsufficient, "cutoff < 10");
  const auto primes = cached_primes(prime_cutoff);
  KahanSum re, im;
  for (uint32_t p : *primes) {
    if (p > prime_cutoff) break;
    const Complex t = std::exp(-s * std::log(double(p)));
    re.add(t.real());
    im.add(t.imag());
  }
  PrimeSumResult out;
  out.value = {re.sum, im.sum};
  out.cutoff = prime_cutoff;
  out.tail_bound = power_tail(double(prime_cutoff), s.real());
  out.method = PrimeSumMethod::direct;
  return out;
}

PrimeSumResult f_remainder(Complex s, uint32_t prime_cutoff) {
  if (s.real() < 1.0) fail(Errc::DomainError, "f_remainder requires Re s >= 1");
  if (prime_cutoff < 10) fail(Errc::DomainError, "cutoff >= 10 required");
  const auto primes = cached_primes(prime_cutoff);
  KahanSum re, im;
  for (uint32_t p : *primes) {
    if (p > prime_cutoff) break;
    // sum_{m>=2} p^-ms / m = -log(1 - p^-s) - p^-s
    const Complex ps = std::exp(-s * std::log(double(p)));
    const Complex t = -std::log(1.0 - ps) - ps;
    re.add(t.real());
    im.add(t.imag());
  }
  PrimeSumResult out;
  out.value = {re.sum, im.sum};
  out.cutoff = prime_cutoff;
  out.tail_bound = power_tail(double(prime_cutoff), 2.0 * s.real());
  out.method = PrimeSumMethod::direct;
  return out;
}

double b_constant(uint32_t prime_cutoff) {
  if (prime_cutoff < 10) fail(Errc::DomainError, "cutoff >= 10 required");
  const auto primes = cached_primes(prime_cutoff);
  KahanSum acc;
  for (uint32_t p : *primes) {
    if (p > prime_cutoff) break;
    acc.add(1.0 / (double(p) * (double(p) - 1.0)));
  }
  return acc.sum;
}

PrimeSumResult log_prime_sum(double sigma_prime, uint32_t prime_cutoff,
                             const EvalSettings& settings) {
  if (sigma_prime <= 1.0) fail(Errc::DomainError, "requires sigma' > 1");
  if (sigma_prime < 1.5) {
    // Direct summation cannot converge here at any desk-scale cutoff:
    // sum_p log p / p^sigma = -zeta'/zeta(sigma) - sum_p sum_{m>=2} ...
    const EvalResult ld = log_deriv_zeta(Complex(sigma_prime, 0.0), settings);
    const uint32_t c2 = 100'000;
    const auto primes = cached_primes(c2);
    KahanSum acc;
    for (uint32_t p : *primes) {
      if (p > c2) break;
      const double lp = std::log(double(p));
      const double ps = std::pow(double(p), -sigma_prime);
      acc.add(lp * ps * ps / (1.0 - ps));
    }
    PrimeSumResult out;
    out.value = Complex(-ld.value.real() - acc.sum, 0.0);
    out.cutoff = c2;
    out.tail_bound =
        ld.abs_error_bound + 2.0 * log_power_tail(double(c2),
                                                  2.0 * sigma_prime);
    out.method = PrimeSumMethod::mobius_log_zeta;
    return out;
  }
  const double tail = log_power_tail(double(prime_cutoff), sigma_prime);
  if (!(tail < settings.target_tol))
    fail(Errc::CutoffInsufficient,
         "integral tail bound exceeds target_tol at this cutoff");
  const auto primes = cached_primes(prime_cutoff);
  KahanSum acc;
  for (uint32_t p : *primes) {
    if (p > prime_cutoff) break;
    acc.add(std::log(double(p)) * std::pow(double(p), -sigma_prime));
  }
  PrimeSumResult out;
  out.value = Complex(acc.sum, 0.0);
  out.cutoff = prime_cutoff;
  out.tail_bound = tail;
  out.method = PrimeSumMethod::direct;
  return out;
}

TrigPrimeSums trig_prime_sums(double sigma_prime, double delta,
                              uint32_t prime_cutoff) {
  if (sigma_prime <= 1.0) fail(Errc::DomainError, "requires sigma' > 1");
  if (delta < 0.0) fail(Errc::DomainError, "delta >= 0 required");
  if (prime_cutoff < 10) fail(Errc::CutoffInsufficient, "cutoff < 10");
  const auto primes = cached_primes(prime_cutoff);
  KahanSum coss, sin2s, sinabs;
  for (uint32_t p : *primes) {
    if (p > prime_cutoff) break;
    const double lp = std::log(double(p));
    const double w = std::pow(double(p), -sigma_prime);
    const double sn = std::sin(0.5 * delta * lp);
    assert(std::abs(sn) <= 0.5 * delta * lp + 1e-16);  // |sin x| <= x
    // cos(delta log p) = 1 - 2 sin^2((delta/2) log p), exact per prime
    sin2s.add(sn * sn * w);
    sinabs.add(std::abs(sn) * w);
    coss.add((1.0 - 2.0 * sn * sn) * w);
  }
  TrigPrimeSums out;
  out.cos_sum = coss.sum;
  out.sin2_sum = sin2s.sum;
  out.sin_abs_sum = sinabs.sum;
  out.cutoff = prime_cutoff;
  out.tail_bound = power_tail(double(prime_cutoff), sigma_prime);
  return out;
}

}  // namespace zetalab
