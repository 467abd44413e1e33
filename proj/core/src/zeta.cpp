#include "zetalab/zeta.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <map>
#include <mutex>
#include <numbers>

#include "zetalab/primes.hpp"

namespace zetalab {

namespace {

constexpr double kEps = 2.220446049250313e-16;

// B_2, B_4, ..., B_32 as doubles (exact rationals 1/6, -1/30, ...).
constexpr std::array<double, 16> kBernoulli2m = {
    1.0 / 6,
    -1.0 / 30,
    1.0 / 42,
    -1.0 / 30,
    5.0 / 66,
    -691.0 / 2730,
    7.0 / 6,
    -3617.0 / 510,
    43867.0 / 798,
    -174611.0 / 330,
    854513.0 / 138,
    -236364091.0 / 2730,
    8553103.0 / 6,
    -23749461029.0 / 870,
    8615841276005.0 / 14322,
    -7709321041217.0 / 510,
};

const std::vector<double>& log_table(size_t upto) {
  static std::mutex mu;
  static std::vector<double> logs{0.0, 0.0};  // logs[0] unused
  std::lock_guard<std::mutex> lock(mu);
  while (logs.size() <= upto) logs.push_back(std::log(double(logs.size())));
  return logs;
}

Complex pow_ns(double log_n, Complex s) {
  // n^-s = exp(-s log n)
  const double mag = std::exp(-s.real() * log_n);
  const double ph = -s.imag() * log_n;
  return {mag * std::cos(ph), mag * std::sin(ph)};
}

struct EmResult {
  Complex zeta;
  Complex zeta_deriv;
  double bound;       // truncation + rounding bound for zeta
  double deriv_bound; // same for zeta'
  long terms;
};

// One Euler-Maclaurin pass at a fixed N, optionally carrying the term-wise
// derivative. q correction terms of B_{2r}; remainder bounded by the first
// omitted term times |s+2q+1|/(sigma+2q+1).
EmResult em_pass(Complex s, long N, int q, bool with_deriv) {
  const auto& logs = log_table(size_t(N) + 1);
  Complex sum{}, dsum{};
  double abs_acc = 0.0;
  for (long n = N - 1; n >= 1; --n) {
    const Complex term = pow_ns(logs[size_t(n)], s);
    sum += term;
    abs_acc += std::abs(term);
    if (with_deriv) dsum += -logs[size_t(n)] * term;
  }
  const double logN = logs[size_t(N)];
  const Complex Ns = pow_ns(logN, s);        // N^-s
  const Complex sm1 = s - Complex(1.0, 0.0);
  const Complex pole_term = Ns * double(N) / sm1;  // N^(1-s)/(s-1)
  sum += pole_term + 0.5 * Ns;
  abs_acc += std::abs(pole_term) + 0.5 * std::abs(Ns);
  if (with_deriv) {
    dsum += pole_term * (-logN) - pole_term / sm1;
    dsum += -logN * 0.5 * Ns;
  }

  // Correction terms: B_{2r}/(2r)! * s(s+1)...(s+2r-2) * N^(-s-2r+1)
  Complex poch = s;     // running product s(s+1)...(s+2r-2)
  Complex poch_dlog{};  // sum of 1/(s+j), for the derivative
  double fact = 2.0;    // (2r)!
  for (int r = 1; r <= q; ++r) {
    if (r > 1) {
      const Complex a = s + Complex(2.0 * r - 3.0, 0.0);
      const Complex b = s + Complex(2.0 * r - 2.0, 0.0);
      poch *= a * b;
      poch_dlog += 1.0 / a + 1.0 / b;
      fact *= (2.0 * r) * (2.0 * r - 1.0);
    } else {
      poch_dlog = 1.0 / s;
    }
    const double c = kBernoulli2m[size_t(r - 1)] / fact;
    const Complex tr = c * poch * Ns * std::pow(double(N), 1.0 - 2.0 * r);
    sum += tr;
    abs_acc += std::abs(tr);
    if (with_deriv) dsum += tr * (poch_dlog - logN);
  }

  // Remainder: first omitted term, scaled.
  {
    const Complex a = s + Complex(2.0 * q - 1.0, 0.0);
    const Complex b = s + Complex(2.0 * q, 0.0);
    const Complex poch_next = poch * a * b;
    const double fact_next = fact * (2.0 * q + 2.0) * (2.0 * q + 1.0);
    const double c = std::abs(kBernoulli2m[size_t(q)]) / fact_next;
    const double scale = std::exp((-s.real() - 2.0 * q - 1.0) * logN);
    const double factor =
        std::abs(s + Complex(2.0 * q + 1.0, 0.0)) / (s.real() + 2.0 * q + 1.0);
    double rem = c * std::abs(poch_next) * scale * factor;
    const double rounding = 8.0 * kEps * abs_acc;
    EmResult out;
    out.zeta = sum;
    out.zeta_deriv = dsum;
    out.bound = rem + rounding;
    out.deriv_bound = rem * (logN + 2.0 * q + 2.0) +
                      rounding * (logN + 1.0);
    out.terms = N + q;
    return out;
  }
}

EmResult em_adaptive(Complex s, const EvalSettings& settings, bool with_deriv) {
  settings.validate();
  if (s == Complex(1.0, 0.0)) fail(Errc::PoleAtOne, "zeta pole at s = 1");
  // the tiny slack keeps boundary points like s = 1.001 usable
  if (std::abs(s - Complex(1.0, 0.0)) < 1e-3 - 1e-12)
    fail(Errc::DomainError, "inside pole exclusion disc |s-1| < 1e-3");
  if (s.real() <= -1.0)
    fail(Errc::DomainError, "zeta_eval requires Re s > -1");
  if (!finite(s)) fail(Errc::DomainError, "non-finite argument");

  const int q = settings.em_correction_order / 2;
  long N = std::max<long>(10, long(std::ceil(2.0 * std::abs(s.imag()))) + 10);
  for (;;) {
    EmResult r = em_pass(s, N, std::min(q, 15), with_deriv);
    if (r.bound <= settings.target_tol) return r;
    if (2 * N > settings.max_terms)
      fail(Errc::NoConvergence, "tolerance unreachable within max_terms");
    N *= 2;
  }
}

}  // namespace

double bernoulli_2m(int m) {
  if (m < 1 || m > 16) fail(Errc::DomainError, "bernoulli_2m: 1 <= m <= 16");
  return kBernoulli2m[size_t(m - 1)];
}

EvalResult zeta_eval(Complex s, const EvalSettings& settings) {
  EmResult r = em_adaptive(s, settings, false);
  if (!finite(r.zeta)) fail(Errc::NoConvergence, "non-finite result");
  return {r.zeta, r.bound, r.terms};
}

EvalResult zeta_oracle(Complex s, const EvalSettings& settings) {
  settings.validate();
  if (s.real() <= 0.0) fail(Errc::DomainError, "zeta_oracle requires Re s > 0");
  if (!finite(s)) fail(Errc::DomainError, "non-finite argument");
  const Complex denom =
      1.0 - std::exp((1.0 - s) * std::numbers::ln2);
  if (std::abs(denom) < 1e-6)
    fail(Errc::DenominatorNearZero, "1 - 2^(1-s) too close to 0");

  // Borwein's eta acceleration: error <= 3/(3+sqrt8)^n (1+2|t|) e^(pi|t|/2).
  const double t = std::abs(s.imag());
  const double log_growth = std::log(3.0 + std::sqrt(8.0));
  const double need = std::log(3.0 * (1.0 + 2.0 * t)) +
                      std::numbers::pi * t / 2.0 -
                      std::log(settings.target_tol * std::abs(denom));
  long n = long(std::ceil(need / log_growth)) + 2;
  n = std::max<long>(n, 12);
  if (n > 380) fail(Errc::NoConvergence, "|t| too large for eta acceleration");

  std::vector<double> d(size_t(n) + 1);
  double u = 1.0, acc = 1.0;
  d[0] = 1.0;
  for (long i = 1; i <= n; ++i) {
    u *= 4.0 * double(n + i - 1) * double(n - i + 1) /
         (2.0 * i * (2.0 * i - 1.0));
    acc += u;
    d[size_t(i)] = acc;
  }
  const double dn = d[size_t(n)];
  const auto& logs = log_table(size_t(n) + 1);
  Complex sum{};
  double abs_acc = 0.0;
  for (long k = n - 1; k >= 0; --k) {
    const Complex term =
        (d[size_t(k)] - dn) * pow_ns(logs[size_t(k) + 1], s);
    if (k % 2 == 0)
      sum += term;
    else
      sum -= term;
    abs_acc += std::abs(term);
  }
  const Complex eta = -sum / dn;
  const Complex value = eta / denom;
  const double tail = 3.0 / std::exp(double(n) * log_growth) *
                      (1.0 + 2.0 * t) * std::exp(std::numbers::pi * t / 2.0) /
                      std::abs(denom);
  const double rounding = 16.0 * kEps * abs_acc / (dn * std::abs(denom));
  if (!finite(value)) fail(Errc::NoConvergence, "non-finite result");
  return {value, tail + rounding, n};
}

EvalResult euler_product(Complex s, uint32_t prime_cutoff) {
  if (s.real() <= 1.0)
    fail(Errc::DomainError, "euler_product requires Re s > 1");
  if (prime_cutoff < 2) fail(Errc::DomainError, "prime_cutoff >= 2 required");
  const auto primes = cached_primes(prime_cutoff);
  Complex prod{1.0, 0.0};
  long used = 0;
  for (uint32_t p : *primes) {
    if (p > prime_cutoff) break;
    const Complex ps = std::pow(Complex(double(p), 0.0), -s);
    prod /= (1.0 - ps);
    ++used;
  }
  // |log zeta - log prod| <= sum_{n>cutoff} n^-sigma <= C^(1-sigma)/(sigma-1)
  const double sigma = s.real();
  const double tail_log =
      std::pow(double(prime_cutoff), 1.0 - sigma) / (sigma - 1.0);
  const double bound = std::abs(prod) * std::expm1(tail_log) +
                       8.0 * kEps * double(used) * std::abs(prod);
  return {prod, bound, std::max<long>(used, 1)};
}

Complex partial_sum(long n, Complex s) {
  if (n < 1) fail(Errc::DomainError, "partial_sum requires n >= 1");
  const auto& logs = log_table(size_t(n) + 1);
  Complex sum{};
  for (long v = n; v >= 1; --v) sum += pow_ns(logs[size_t(v)], s);
  return sum;
}

Complex partial_sum_deriv(long n, Complex s) {
  if (n < 1) fail(Errc::DomainError, "partial_sum_deriv requires n >= 1");
  const auto& logs = log_table(size_t(n) + 1);
  Complex sum{};
  for (long v = n; v >= 2; --v)
    sum += -logs[size_t(v)] * pow_ns(logs[size_t(v)], s);
  return sum;
}

namespace {

// Accumulated argument of S_n along the segment [z1, z2], subdividing until
// each step rotates by less than ~1/2 radian.
double phase_change(long n, Complex z1, Complex z2, int depth,
                    double* boundary_min) {
  const Complex f1 = partial_sum(n, z1);
  const Complex f2 = partial_sum(n, z2);
  *boundary_min = std::min({*boundary_min, std::abs(f1), std::abs(f2)});
  const double d = std::arg(f2 / f1);
  if (std::abs(d) < 0.5 || depth > 40) return d;
  const Complex mid = 0.5 * (z1 + z2);
  double a = phase_change(n, z1, mid, depth + 1, boundary_min);
  double b = phase_change(n, mid, z2, depth + 1, boundary_min);
  return a + b;
}

}  // namespace

int sn_winding_number(long n, const Box& box, int quad_points) {
  const int m = std::max(quad_points, 8);
  const std::array<Complex, 4> corners = {
      Complex(box.sigma_lo, box.t_lo), Complex(box.sigma_hi, box.t_lo),
      Complex(box.sigma_hi, box.t_hi), Complex(box.sigma_lo, box.t_hi)};
  double total = 0.0;
  double boundary_min = std::numeric_limits<double>::infinity();
  for (int side = 0; side < 4; ++side) {
    const Complex a = corners[size_t(side)];
    const Complex b = corners[size_t((side + 1) % 4)];
    for (int i = 0; i < m; ++i) {
      const Complex z1 = a + (b - a) * (double(i) / m);
      const Complex z2 = a + (b - a) * (double(i + 1) / m);
      total += phase_change(n, z1, z2, 0, &boundary_min);
    }
  }
  if (boundary_min < 1e-8)
    fail(Errc::BoundaryZero, "S_n modulus below threshold on box boundary");
  const double w = total / (2.0 * std::numbers::pi);
  const double nearest = std::round(w);
  if (std::abs(w - nearest) > 0.2)
    fail(Errc::QuadratureNonInteger, "winding integral not close to integer");
  return int(nearest);
}

namespace {

BoxRoot newton_refine(long n, Complex z0) {
  Complex z = z0;
  double fz = std::abs(partial_sum(n, z));
  for (int it = 0; it < 100 && fz >= 1e-10; ++it) {
    const Complex f = partial_sum(n, z);
    const Complex df = partial_sum_deriv(n, z);
    if (std::abs(df) == 0.0) break;
    Complex step = f / df;
    Complex trial = z - step;
    double ftrial = std::abs(partial_sum(n, trial));
    int halvings = 0;
    while (ftrial >= fz && halvings < 40) {
      step *= 0.5;  // damping factor on non-decreasing |S_n|
      trial = z - step;
      ftrial = std::abs(partial_sum(n, trial));
      ++halvings;
    }
    if (ftrial >= fz) break;
    z = trial;
    fz = ftrial;
  }
  return {z, fz};
}

void search_rec(long n, Box box, int quad_points, int depth,
                std::vector<BoxRoot>* out) {
  int count = 0;
  // A zero sitting on a split line trips BoundaryZero; nudge and retry.
  for (int attempt = 0;; ++attempt) {
    try {
      count = sn_winding_number(n, box, quad_points);
      break;
    } catch (const ZetaError& e) {
      if (e.code() != Errc::BoundaryZero || attempt >= 4 || depth == 0) throw;
      const double ds = (box.sigma_hi - box.sigma_lo) * 0.013;
      const double dt = (box.t_hi - box.t_lo) * 0.017;
      box.sigma_lo -= ds;
      box.sigma_hi += ds;
      box.t_lo -= dt;
      box.t_hi += dt;
    }
  }
  if (count == 0) return;
  const double w = box.sigma_hi - box.sigma_lo;
  const double h = box.t_hi - box.t_lo;
  if ((count == 1 && w < 0.2 && h < 0.2) || (w < 0.02 && h < 0.02) ||
      depth > 48) {
    const Complex center(0.5 * (box.sigma_lo + box.sigma_hi),
                         0.5 * (box.t_lo + box.t_hi));
    BoxRoot root = newton_refine(n, center);
    for (int i = 0; i < count; ++i) out->push_back(root);
    return;
  }
  Box a = box, b = box;
  if (h >= w) {
    const double mid = 0.5 * (box.t_lo + box.t_hi);
    a.t_hi = mid;
    b.t_lo = mid;
  } else {
    const double mid = 0.5 * (box.sigma_lo + box.sigma_hi);
    a.sigma_hi = mid;
    b.sigma_lo = mid;
  }
  search_rec(n, a, quad_points, depth + 1, out);
  search_rec(n, b, quad_points, depth + 1, out);
}

}  // namespace

std::vector<BoxRoot> sn_zero_search(long n, const Box& box, int quad_points) {
  if (n < 1) fail(Errc::DomainError, "n >= 1 required");
  std::vector<BoxRoot> out;
  search_rec(n, box, quad_points, 0, &out);
  std::sort(out.begin(), out.end(), [](const BoxRoot& x, const BoxRoot& y) {
    if (x.location.imag() != y.location.imag())
      return x.location.imag() < y.location.imag();
    return x.location.real() < y.location.real();
  });
  // A zero on a split line makes both inflated sibling boxes report it; the
  // winding count of the whole box decides how many copies are genuine.
  const int expected = sn_winding_number(n, box, quad_points);
  for (size_t i = 1; i < out.size() && int(out.size()) > expected;) {
    if (std::abs(out[i].location - out[i - 1].location) < 1e-7)
      out.erase(out.begin() + long(i));
    else
      ++i;
  }
  return out;
}

double log_abs_zeta(Complex s, const EvalSettings& settings,
                    double* err_bound) {
  const EvalResult r = zeta_eval(s, settings);
  const double mag = std::abs(r.value);
  if (mag <= 1e-300 || r.abs_error_bound >= mag)
    fail(Errc::NearZeroOrPole, "|zeta| indistinguishable from 0");
  if (err_bound) {
    // |log a - log b| <= |a-b| / min(a, b)
    *err_bound = r.abs_error_bound / (mag - r.abs_error_bound);
  }
  return std::log(mag);
}

EvalResult log_deriv_zeta(Complex s, const EvalSettings& settings) {
  EmResult r = em_adaptive(s, settings, true);
  const double mag = std::abs(r.zeta);
  if (mag <= 1e-12) fail(Errc::NearZeroOrPole, "|zeta| <= 1e-12");
  const Complex value = r.zeta_deriv / r.zeta;
  const double bound = r.deriv_bound / mag +
                       r.bound * std::abs(r.zeta_deriv) / (mag * mag);
  return {value, bound, r.terms};
}

double zeta_integer(int k) {
  if (k < 2) fail(Errc::DomainError, "zeta_integer requires k >= 2");
  static std::mutex mu;
  static std::map<int, double> memo;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = memo.find(k);
    if (it != memo.end()) return it->second;
  }
  double v;
  if (k % 2 == 0 && k <= 32) {
    // zeta(2m) = (2pi)^(2m) |B_2m| / (2 (2m)!)
    const int m = k / 2;
    double fact = 1.0;
    for (int i = 2; i <= k; ++i) fact *= i;
    v = std::pow(2.0 * std::numbers::pi, double(k)) *
        std::abs(kBernoulli2m[size_t(m - 1)]) / (2.0 * fact);
  } else {
    // direct series, tail N^(1-k)/(k-1) <= 1e-15
    const double N_needed =
        std::pow(1e15 / double(k - 1), 1.0 / double(k - 1));
    const long N = std::max<long>(3, long(std::ceil(N_needed)) + 1);
    double sum = 0.0, c = 0.0;
    for (long n = N; n >= 1; --n) {
      const double term = std::pow(double(n), -double(k));
      const double y = term - c;
      const double t = sum + y;
      c = (t - sum) - y;
      sum = t;
    }
    v = sum;
  }
  std::lock_guard<std::mutex> lock(mu);
  memo[k] = v;
  return v;
}

}  // namespace zetalab
