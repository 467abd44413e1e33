// Acceptance gate: one line per criterion, pass/fail, nonzero exit on any
// failure. Each criterion is self-contained and uses independent oracles
// where the expected values are not classical constants.
#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include "zetalab/critical_line.hpp"
#include "zetalab/lemma_audit.hpp"
#include "zetalab/prime_sums.hpp"
#include "zetalab/primes.hpp"
#include "zetalab/sieve.hpp"
#include "zetalab/zeta.hpp"

using namespace zetalab;

namespace {

int g_failures = 0;

struct Criterion {
  std::string detail;
  bool ok = true;

  void require(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      if (!detail.empty()) detail += "; ";
      detail += what;
    }
  }
};

template <typename F>
void report(int index, const std::string& name, F&& body) {
  Criterion c;
  const auto start = std::chrono::steady_clock::now();
  try {
    body(c);
  } catch (const std::exception& e) {
    c.ok = false;
    c.detail = std::string("exception: ") + e.what();
  }
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  if (!c.ok) ++g_failures;
  std::printf("%s criterion %d (%s) [%.1fs]%s%s\n", c.ok ? "PASS" : "FAIL",
              index, name.c_str(), secs, c.detail.empty() ? "" : ": ",
              c.detail.c_str());
  std::fflush(stdout);
}

void criterion1(Criterion& c) {
  const EvalResult z2 = zeta_eval(Complex(2.0, 0.0));
  c.require(std::abs(z2.value - Complex(std::numbers::pi * std::numbers::pi /
                                        6.0, 0.0)) < 1e-12,
            "zeta(2) != pi^2/6 within 1e-12");
  const EvalResult z0 = zeta_eval(Complex(0.0, 0.0));
  c.require(std::abs(z0.value - Complex(-0.5, 0.0)) < 1e-12,
            "zeta(0) != -1/2 within 1e-12");
  int checked = 0;
  for (int i = 0; i < 20; ++i) {
    for (int j = 0; j < 10; ++j) {
      const Complex s(0.1 + 2.9 * double(i) / 19.0, 50.0 * double(j) / 9.0);
      if (std::abs(s - Complex(1.0, 0.0)) < 0.1) continue;
      const EvalResult a = zeta_eval(s);
      const EvalResult b = zeta_oracle(s);
      if (std::abs(a.value - b.value) > a.abs_error_bound + b.abs_error_bound)
        c.require(false, "oracle disagreement at grid point");
      ++checked;
    }
  }
  c.require(checked >= 195, "grid unexpectedly small");
}

void criterion2(Criterion& c) {
  const auto zeros = scan_zeros(10.0, 100.0, 0.05, 1e-9);
  c.require(zeros.size() == 29, "scan (10,100) zero count != 29");
  for (const auto& z : zeros)
    if (std::abs(hardy_z(z.ordinate)) >= 1e-6)
      c.require(false, "|Z| >= 1e-6 at a refined ordinate");
  for (const double T : {50.0, 100.0, 500.0, 1000.0}) {
    const ZeroCount zc = count_zeros(T);
    c.require(std::abs(double(zc.scanned) - zc.main_term) <= 2.0,
              "count vs main term off by > 2 at T = " + std::to_string(T));
  }
}

void criterion3(Criterion& c) {
  for (const long n : {100L, 500L, 1000L}) {
    const auto zeros =
        scan_zeros(double(n) - 1.0, double(n) + 2.0, 0.05, 1e-9);
    const GapPoint g = find_gap_point(n, 10'000, zeros);
    c.require(g.min_distance > 0.0, "nonpositive gap at n");
    for (const auto& z : zeros)
      if (std::abs(z.ordinate - g.T) < g.min_distance)
        c.require(false, "scanned ordinate inside the open gap interval");
  }
}

void criterion4(Criterion& c) {
  {
    const int64_t N = 10'000;
    const SieveTable t = sieve_build(1, N);
    std::vector<int64_t> divsum(size_t(N) + 1, 0);
    for (int64_t d = 1; d <= N; ++d)
      for (int64_t m = d; m <= N; m += d) divsum[size_t(m)] += t.mu_at(d);
    bool ident = divsum[1] == 1;
    for (int64_t n = 2; n <= N && ident; ++n) ident = divsum[size_t(n)] == 0;
    c.require(ident, "Mobius divisor-sum identity failed");
    c.require(t.M_at(5) == -2, "M(5) != -2");
  }
  const MertensStats st = mertens_stats(1'000'000, 0.1);
  c.require(st.max_ratio_sqrt < 1.0, "|M(n)|/sqrt(n) >= 1 below 1e6");
  {
    const SieveTable t = sieve_build(1, 1'000'000);
    double sum = 0.0, comp = 0.0;
    bool nonneg = true;
    for (int64_t n = 1; n <= 1'000'000; ++n) {
      const double y = double(t.lambda_at(n)) / double(n) - comp;
      const double s = sum + y;
      comp = (s - sum) - y;
      sum = s;
      if (sum < 0.0) nonneg = false;
    }
    c.require(nonneg, "Turan sum went negative below 1e6");
  }
}

void criterion5(Criterion& c) {
  const PrimeSumResult ident = prime_zeta(Complex(2.0, 0.0));
  const PrimeSumResult direct = prime_zeta_direct(Complex(2.0, 0.0),
                                                  10'000'000);
  c.require(std::abs(ident.value - direct.value) <=
                ident.tail_bound + direct.tail_bound,
            "prime_zeta(2) method disagreement");

  const double B = b_constant(1'000'000) + 1e-6;
  std::mt19937 rng(112358);
  std::uniform_real_distribution<double> sig(1.0, 3.0), tt(0.0, 30.0);
  for (int i = 0; i < 50; ++i) {
    const PrimeSumResult f =
        f_remainder(Complex(sig(rng), tt(rng)), 100'000);
    if (std::abs(f.value) > B + f.tail_bound)
      c.require(false, "|f(s')| > B at a random point");
  }

  const PrimeSumResult lp = log_prime_sum(1.01, 1'000'000);
  const double ratio = lp.value.real() * 0.01;
  c.require(ratio > 0.9 && ratio < 1.1, "Lemma 7 ratio outside [0.9, 1.1]");

  const PrimeSumResult pz = prime_zeta(Complex(1.001, 0.0));
  const double r5 = pz.value.real() / std::log(1.0 / 0.001);
  c.require(r5 > 0.8 && r5 < 1.2, "Lemma 5 ratio outside [0.8, 1.2]");
}

void criterion6(Criterion& c) {
  const auto primes = cached_primes(100'000);
  std::mt19937 rng(314159);
  std::uniform_real_distribution<double> dd(0.0, 5.0);
  std::uniform_int_distribution<size_t> pi(0, primes->size() - 1);
  for (int i = 0; i < 10'000; ++i) {
    const double x = 0.5 * dd(rng) * std::log(double((*primes)[pi(rng)]));
    if (std::abs(std::sin(x)) > x)
      c.require(false, "|sin x| > x at a sampled prime");
  }
  std::uniform_real_distribution<double> ad(1.5, 200.0), kd(0.1, 50.0),
      th(0.01, 10.0);
  int satisfied = 0;
  while (satisfied < 1000) {
    AuditParams params;
    params.theta = th(rng);
    LemmaPoint pt;
    pt.a = ad(rng);
    pt.k = kd(rng);
    if (!(params.theta > pt.k / (pt.a - 1.0))) continue;
    ++satisfied;
    if (!audit_lemma(LemmaId::L10, params, pt).steps[0].holds)
      c.require(false, "Lemma 10 conclusion failed under its hypothesis");
  }
}

void criterion7(Criterion& c) {
  const std::vector<std::string> expected = {
      "Eq14", "Eq15", "Eq16", "Eq17", "Eq19", "Eq20",    "Eq21", "Eq22",
      "Eq23", "Eq25", "Eq26", "Eq28", "Lemma10", "Eq34", "Eq35", "Eq36",
      "Eq38", "Eq39", "Eq40", "Eq42", "Eq43", "Eq44",    "Eq45", "Eq45vs18"};
  const AuditParams params;
  for (const long n : {100L, 200L, 500L}) {
    const AuditReport rep = audit_chain(n, params);
    bool order_ok = rep.steps.size() == expected.size();
    for (size_t i = 0; order_ok && i < expected.size(); ++i)
      order_ok = rep.steps[i].step_id == expected[i];
    c.require(order_ok, "chain step list wrong at n = " + std::to_string(n));
    if (!order_ok) continue;

    const AuditStep& last = rep.steps.back();
    c.require(!last.holds, "terminal step not marked false");
    c.require(std::abs(last.lhs - last.rhs) <= 1e-9 * std::abs(last.rhs),
              "terminal sides differ by > 1e-9 relative");

    const ChainState& st = rep.state;
    const double sh = std::pow(st.zeta_half_t, params.A_tilde()) /
                      std::exp(st.k_t + params.A2 * std::log(st.t) +
                               params.theta);
    const bool rearranged = params.A2 * std::log(st.t) * sh * sh -
                                params.A_prime * st.delta_prime * st.delta >
                            0.0;
    const auto eq42 =
        std::find_if(rep.steps.begin(), rep.steps.end(),
                     [](const AuditStep& s) { return s.step_id == "Eq42"; });
    c.require(eq42->holds == rearranged,
              "Eq42 direct and rearranged forms disagree");
  }
}

void criterion8(Criterion& c) {
  const auto cps = mu_dirichlet_partial(Complex(2.0, 0.0), 1'000'000);
  const double target = 6.0 / (std::numbers::pi * std::numbers::pi);
  c.require(std::abs(cps.back().partial.real() - target) < 1e-5,
            "mu Dirichlet partial sum misses 1/zeta(2)");

  const PntError e = pnt_error(100);
  c.require(e.pi_x == 25, "pi(100) != 25");
  // two-step composite Simpson oracle on the paired principal value,
  // with u = 1 - e^-v smoothing the u = 1 endpoint
  const auto mapped = [](double v) {
    if (v < 1e-8) return 1.0;  // limit of the paired integrand
    return std::exp(-v) * (-1.0 / v + 1.0 / std::log(2.0 - std::exp(-v)));
  };
  const auto simpson = [](const auto& f, double a, double b, int n) {
    const double h = (b - a) / double(n);
    double s = f(a) + f(b);
    for (int i = 1; i < n; ++i)
      s += f(a + h * double(i)) * (i % 2 ? 4.0 : 2.0);
    return s * h / 3.0;
  };
  double li[2];
  for (int k = 0; k < 2; ++k) {
    const int n = k == 0 ? 20000 : 40000;
    li[k] = simpson(mapped, 0.0, 40.0, n) +
            simpson([](double t) { return 1.0 / std::log(t); }, 2.0, 100.0, n);
  }
  c.require(std::abs(li[0] - li[1]) < 1e-6, "quadrature oracle unstable");
  c.require(std::abs(e.li_x - li[1]) < 1e-3, "li(100) misses the oracle");

  for (const double x : {1.0, 10.0, 50.0}) {
    const SeriesValue a = series_alpha(x, 500);
    const SeriesValue a2 = series_alpha(x, 1000);
    if (std::abs(a.value - a2.value) >=
        1e-14 * std::max(1.0, std::abs(a.value)))
      c.require(false, "alpha series unstable under K doubling");
    const SeriesValue b = series_beta(x, 500, 0.05);
    const SeriesValue b2 = series_beta(x, 1000, 0.05);
    if (std::abs(b.value - b2.value) >=
        1e-14 * std::max(1.0, std::abs(b.value)))
      c.require(false, "beta series unstable under K doubling");
  }
}

}  // namespace

int main() {
  report(1, "zeta oracle suite", criterion1);
  report(2, "zero machinery", criterion2);
  report(3, "gap-point instrument", criterion3);
  report(4, "sieve suite", criterion4);
  report(5, "prime-sum suite", criterion5);
  report(6, "termwise and product-sum properties", criterion6);
  report(7, "chain audit", criterion7);
  report(8, "series and PNT equivalents", criterion8);
  return g_failures == 0 ? 0 : 1;
}
