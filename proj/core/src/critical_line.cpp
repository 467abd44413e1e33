#include "zetalab/critical_line.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "zetalab/zeta.hpp"

namespace zetalab {

double rs_theta(double t) {
  if (t < 10.0) fail(Errc::DomainError, "rs_theta requires t >= 10");
  const double u = t / 2.0;
  return u * std::log(u / std::numbers::pi) - u - std::numbers::pi / 8.0 +
         1.0 / (48.0 * t) + 7.0 / (5760.0 * t * t * t);
}

double hardy_z(double t, const EvalSettings& settings) {
  if (t < 10.0) fail(Errc::DomainError, "hardy_z requires t >= 10");
  const EvalResult z = zeta_eval(Complex(0.5, t), settings);
  const double th = rs_theta(t);
  const Complex rotated = std::polar(1.0, th) * z.value;
  // The rotation leaves only evaluation error in the imaginary part.
  if (std::abs(rotated.imag()) > 1e-8 + 2.0 * z.abs_error_bound)
    fail(Errc::NoConvergence, "hardy_z imaginary residue too large");
  return rotated.real();
}

std::vector<ZeroRecord> scan_zeros(double t_lo, double t_hi, double step,
                                   double tol) {
  if (t_lo < 10.0 || t_hi < t_lo)
    fail(Errc::DomainError, "scan range must satisfy 10 <= t_lo <= t_hi");
  if (step > 0.1 || step <= 0.0)
    fail(Errc::DomainError, "step must be in (0, 0.1]");
  std::vector<ZeroRecord> out;
  if (t_lo == t_hi) return out;
  EvalSettings settings;
  settings.target_tol = 1e-10;
  double prev_t = t_lo;
  double prev_z = hardy_z(prev_t, settings);
  const long steps = long(std::ceil((t_hi - t_lo) / step));
  for (long i = 1; i <= steps; ++i) {
    const double cur_t = std::min(t_lo + double(i) * step, t_hi);
    const double cur_z = hardy_z(cur_t, settings);
    if ((prev_z < 0.0) != (cur_z < 0.0)) {
      double lo = prev_t, hi = cur_t, zlo = prev_z;
      while (hi - lo > 2.0 * tol) {
        const double mid = 0.5 * (lo + hi);
        const double zm = hardy_z(mid, settings);
        if ((zlo < 0.0) != (zm < 0.0)) {
          hi = mid;
        } else {
          lo = mid;
          zlo = zm;
        }
      }
      ZeroRecord rec;
      rec.index = long(out.size()) + 1;
      rec.bracket_lo = lo;
      rec.bracket_hi = hi;
      rec.ordinate = 0.5 * (lo + hi);
      rec.tol = tol;
      out.push_back(rec);
    }
    prev_t = cur_t;
    prev_z = cur_z;
  }
  return out;
}

ZeroCount count_zeros(double T) {
  if (T < 20.0) fail(Errc::DomainError, "count_zeros requires T >= 20");
  ZeroCount out;
  const double x = T / (2.0 * std::numbers::pi);
  out.main_term = x * std::log(x) - x + 7.0 / 8.0;
  auto zeros = scan_zeros(10.0, T, 0.05, 1e-9);
  out.scanned = long(zeros.size());  // no zeros below t = 10
  if (std::abs(double(out.scanned) - out.main_term) > 2.0) {
    // close pairs can slip through the default grid
    zeros = scan_zeros(10.0, T, 0.0125, 1e-9);
    out.scanned = long(zeros.size());
  }
  return out;
}

GapPoint find_gap_point(long n, long grid,
                        const std::vector<ZeroRecord>& zeros) {
  if (n < 50) fail(Errc::DomainError, "find_gap_point requires n >= 50");
  if (grid < 2) fail(Errc::DomainError, "grid must have at least 2 points");
  std::vector<double> ords;
  ords.reserve(zeros.size());
  for (const auto& z : zeros) ords.push_back(z.ordinate);
  std::sort(ords.begin(), ords.end());
  GapPoint best;
  best.n = n;
  best.min_distance = -1.0;
  for (long i = 0; i < grid; ++i) {
    const double T = double(n) + (double(i) + 0.5) / double(grid);
    auto it = std::lower_bound(ords.begin(), ords.end(), T);
    double d = std::numeric_limits<double>::infinity();
    if (it != ords.end()) d = std::min(d, *it - T);
    if (it != ords.begin()) d = std::min(d, T - *(it - 1));
    if (d > best.min_distance) {  // strict: leftmost maximizer wins ties
      best.min_distance = d;
      best.T = T;
    }
  }
  best.product_with_log = best.min_distance * std::log(double(n));
  return best;
}

GapPoint find_gap_point(long n, long grid) {
  const auto zeros = scan_zeros(double(n) - 1.0, double(n) + 2.0, 0.05, 1e-9);
  return find_gap_point(n, grid, zeros);
}

std::string zeros_to_csv(const std::vector<ZeroRecord>& zeros) {
  std::ostringstream os;
  os.precision(17);
  os << "index,ordinate,bracket_lo,bracket_hi\n";
  for (const auto& z : zeros)
    os << z.index << ',' << z.ordinate << ',' << z.bracket_lo << ','
       << z.bracket_hi << '\n';
  return os.str();
}

}  // namespace zetalab
