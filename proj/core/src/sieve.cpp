#include "zetalab/sieve.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <sstream>

#include "zetalab/primes.hpp"

namespace zetalab {

namespace {

constexpr int64_t kSegmentSize = int64_t(1) << 22;
constexpr int64_t kMaxRange = 100'000'000;

struct KahanSum {
  double sum = 0.0, c = 0.0;
  void add(double x) {
    const double y = x - c;
    const double t = sum + y;
    c = (t - sum) - y;
    sum = t;
  }
};

// mu and lambda for one window [lo, hi] (inclusive), via trial marking by
// primes <= sqrt(hi).
void sieve_window(int64_t lo, int64_t hi, std::vector<int8_t>* mu,
                  std::vector<int8_t>* lambda) {
  const size_t len = size_t(hi - lo + 1);
  std::vector<uint64_t> rem(len);
  std::vector<uint8_t> omega(len, 0);
  std::vector<uint8_t> sqfree(len, 1);
  for (size_t i = 0; i < len; ++i) rem[i] = uint64_t(lo + int64_t(i));
  if (lo == 1) rem[0] = 1;

  const uint32_t root = uint32_t(std::sqrt(double(hi))) + 1;
  const auto primes = cached_primes(root);
  for (uint32_t p : *primes) {
    if (uint64_t(p) * p > uint64_t(hi)) break;
    int64_t start = ((lo + p - 1) / p) * p;
    if (start < int64_t(p) * 2) start = int64_t(p) * 2;
    if (start < lo) start += p;
    for (int64_t m = start; m <= hi; m += p) {
      const size_t i = size_t(m - lo);
      uint8_t e = 0;
      while (rem[i] % p == 0) {
        rem[i] /= p;
        ++e;
      }
      omega[i] += e;
      if (e >= 2) sqfree[i] = 0;
    }
  }
  mu->resize(len);
  lambda->resize(len);
  for (size_t i = 0; i < len; ++i) {
    uint8_t w = omega[i];
    if (rem[i] > 1) ++w;  // one prime factor above sqrt(hi)
    const int8_t sign = (w & 1) ? int8_t(-1) : int8_t(1);
    (*lambda)[i] = sign;
    (*mu)[i] = sqfree[i] ? sign : int8_t(0);
  }
  if (lo == 1) {
    (*mu)[0] = 1;
    (*lambda)[0] = 1;
  }
}

// Walk [1, upto] in segments, feeding each window to visit(lo, mu, lambda).
void for_each_segment(
    int64_t from, int64_t upto,
    const std::function<void(int64_t, const std::vector<int8_t>&,
                             const std::vector<int8_t>&)>& visit) {
  std::vector<int8_t> mu, lambda;
  for (int64_t lo = from; lo <= upto; lo += kSegmentSize) {
    const int64_t hi = std::min(lo + kSegmentSize - 1, upto);
    sieve_window(lo, hi, &mu, &lambda);
    visit(lo, mu, lambda);
  }
}

// M(x) and L(x) for the anchor in front of a partial table.
std::pair<int64_t, int64_t> cumulative_before(int64_t lo) {
  int64_t M = 0, L = 0;
  if (lo <= 1) return {0, 0};
  for_each_segment(1, lo - 1,
                   [&](int64_t, const std::vector<int8_t>& mu,
                       const std::vector<int8_t>& lambda) {
                     for (size_t i = 0; i < mu.size(); ++i) {
                       M += mu[i];
                       L += lambda[i];
                     }
                   });
  return {M, L};
}

}  // namespace

SieveTable sieve_build(int64_t lo, int64_t hi) {
  if (lo < 1 || hi < lo) fail(Errc::DomainError, "need 1 <= lo <= hi");
  if (hi - lo > kMaxRange) fail(Errc::RangeTooLarge, "range exceeds 1e8");
  SieveTable t;
  t.lo = lo;
  t.hi = hi;
  auto [M, L] = cumulative_before(lo);
  t.mu.reserve(size_t(hi - lo + 1));
  t.lambda.reserve(size_t(hi - lo + 1));
  t.M_cum.reserve(size_t(hi - lo + 1));
  t.L_cum.reserve(size_t(hi - lo + 1));
  for_each_segment(lo, hi,
                   [&](int64_t, const std::vector<int8_t>& mu,
                       const std::vector<int8_t>& lambda) {
                     for (size_t i = 0; i < mu.size(); ++i) {
                       t.mu.push_back(mu[i]);
                       t.lambda.push_back(lambda[i]);
                       M += mu[i];
                       L += lambda[i];
                       t.M_cum.push_back(M);
                       t.L_cum.push_back(L);
                     }
                   });
  return t;
}

MertensStats mertens_stats(int64_t N, double eps) {
  if (N < 10) fail(Errc::DomainError, "N >= 10 required");
  if (!(eps > 0.0 && eps < 0.5)) fail(Errc::DomainError, "0 < eps < 1/2");
  MertensStats st;
  st.N = N;
  int64_t M = 0;
  for_each_segment(1, N,
                   [&](int64_t lo, const std::vector<int8_t>& mu,
                       const std::vector<int8_t>&) {
                     for (size_t i = 0; i < mu.size(); ++i) {
                       const int64_t n = lo + int64_t(i);
                       M += mu[i];
                       if (n <= 1) continue;
                       const double r =
                           std::abs(double(M)) / std::sqrt(double(n));
                       if (r > st.max_ratio_sqrt) {
                         st.max_ratio_sqrt = r;
                         st.argmax_n = n;
                       }
                       const double re = std::abs(double(M)) /
                                         std::pow(double(n), 0.5 + eps);
                       st.max_ratio_eps = std::max(st.max_ratio_eps, re);
                     }
                   });
  return st;
}

double turan_sum(int64_t x) {
  if (x < 1) fail(Errc::DomainError, "x >= 1 required");
  if (x > kMaxRange) fail(Errc::RangeTooLarge, "x exceeds 1e8");
  KahanSum acc;
  for_each_segment(1, x,
                   [&](int64_t lo, const std::vector<int8_t>&,
                       const std::vector<int8_t>& lambda) {
                     for (size_t i = 0; i < lambda.size(); ++i)
                       acc.add(double(lambda[i]) / double(lo + int64_t(i)));
                   });
  return acc.sum;
}

namespace {

std::vector<int64_t> log_checkpoints(int64_t N) {
  std::vector<int64_t> xs;
  const double ratio = std::pow(10.0, 0.125);
  double x = 10.0;
  while (int64_t(std::llround(x)) < N) {
    const int64_t xi = int64_t(std::llround(x));
    if (xs.empty() || xi > xs.back()) xs.push_back(xi);
    x *= ratio;
  }
  if (xs.empty() || xs.back() != N) xs.push_back(N);
  return xs;
}

}  // namespace

std::vector<DirichletCheckpoint> mu_dirichlet_partial(Complex s, int64_t N) {
  if (N < 10) fail(Errc::DomainError, "N >= 10 required");
  if (s.real() <= 0.0) fail(Errc::DomainError, "Re s > 0 required");
  if (N > kMaxRange) fail(Errc::RangeTooLarge, "N exceeds 1e8");
  const auto xs = log_checkpoints(N);
  std::vector<DirichletCheckpoint> out;
  KahanSum re, im;
  size_t next = 0;
  for_each_segment(1, N,
                   [&](int64_t lo, const std::vector<int8_t>& mu,
                       const std::vector<int8_t>&) {
                     for (size_t i = 0; i < mu.size(); ++i) {
                       const int64_t n = lo + int64_t(i);
                       if (mu[i] != 0) {
                         const Complex term =
                             double(mu[i]) *
                             std::exp(-s * std::log(double(n)));
                         re.add(term.real());
                         im.add(term.imag());
                       }
                       while (next < xs.size() && xs[next] == n) {
                         out.push_back({n, Complex(re.sum, im.sum)});
                         ++next;
                       }
                     }
                   });
  return out;
}

namespace {

double adaptive_simpson(const std::function<double(double)>& f, double a,
                        double b, double fa, double fm, double fb, double tol,
                        int depth) {
  const double m = 0.5 * (a + b);
  const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
  const double flm = f(lm), frm = f(rm);
  const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
  const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
  const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
  if (depth > 50 || std::abs(left + right - whole) < 15.0 * tol)
    return left + right + (left + right - whole) / 15.0;
  return adaptive_simpson(f, a, m, fa, flm, fm, tol / 2.0, depth + 1) +
         adaptive_simpson(f, m, b, fm, frm, fb, tol / 2.0, depth + 1);
}

double integrate(const std::function<double(double)>& f, double a, double b,
                 double tol) {
  const double m = 0.5 * (a + b);
  return adaptive_simpson(f, a, b, f(a), f(m), f(b), tol, 0);
}

}  // namespace

double log_integral(double x) {
  if (x < 2.0) fail(Errc::DomainError, "log_integral requires x >= 2");
  // Principal value: pair t = 1-u with t = 1+u; the 1/u singularities
  // cancel and the paired integrand extends continuously to u = 0.
  const auto paired = [](double u) {
    if (u < 1e-12) return 1.0;  // limit of 1/log(1-u) + 1/log(1+u)
    if (u >= 1.0) return 1.0 / std::log(2.0);
    return 1.0 / std::log1p(-u) + 1.0 / std::log1p(u);
  };
  // split just off the singular pairing point, symmetric below/above 1
  const double split = 1e-6;
  double v = integrate(paired, 0.0, split, 1e-12);
  v += integrate(paired, split, 1.0, 5e-10);
  v += integrate([](double t) { return 1.0 / std::log(t); }, 2.0, x, 5e-10);
  return v;
}

PntError pnt_error(int64_t x) {
  if (x < 10) fail(Errc::DomainError, "x >= 10 required");
  if (x > kMaxRange) fail(Errc::RangeTooLarge, "x exceeds 1e8");
  PntError out;
  out.pi_x = int64_t(primes_up_to(uint32_t(x)).size());
  out.li_x = log_integral(double(x));
  out.rel_err = (double(out.pi_x) - out.li_x) / out.li_x;
  return out;
}

std::vector<SeriesRow> checkpoint_series(int64_t N, double eps) {
  if (N < 10) fail(Errc::DomainError, "N >= 10 required");
  if (N > kMaxRange) fail(Errc::RangeTooLarge, "N exceeds 1e8");
  const auto xs = log_checkpoints(N);
  std::vector<SeriesRow> rows;
  int64_t M = 0, L = 0;
  KahanSum turan;
  size_t next = 0;
  for_each_segment(1, N,
                   [&](int64_t lo, const std::vector<int8_t>& mu,
                       const std::vector<int8_t>& lambda) {
                     for (size_t i = 0; i < mu.size(); ++i) {
                       const int64_t n = lo + int64_t(i);
                       M += mu[i];
                       L += lambda[i];
                       turan.add(double(lambda[i]) / double(n));
                       while (next < xs.size() && xs[next] == n) {
                         SeriesRow r;
                         r.x = n;
                         r.M = M;
                         r.L = L;
                         r.turan = turan.sum;
                         r.m_over_sqrt =
                             std::abs(double(M)) / std::sqrt(double(n));
                         r.m_over_x_eps = std::abs(double(M)) /
                                          std::pow(double(n), 0.5 + eps);
                         rows.push_back(r);
                         ++next;
                       }
                     }
                   });
  return rows;
}

std::string series_to_csv(const std::vector<SeriesRow>& rows) {
  std::ostringstream os;
  os.precision(17);
  os << "x,M,L,turan_sum,m_over_sqrt,m_over_x_eps\n";
  for (const auto& r : rows)
    os << r.x << ',' << r.M << ',' << r.L << ',' << r.turan << ','
       << r.m_over_sqrt << ',' << r.m_over_x_eps << '\n';
  return os.str();
}

}  // namespace zetalab
