#pragma once

#include <complex>
#include <stdexcept>
#include <string>

namespace zetalab {

using Complex = std::complex<double>;

// Failure modes surfaced by the numeric operations. The CLI maps these to
// exit code 2; argument errors stay on exit code 1.
enum class Errc {
  PoleAtOne,
  NoConvergence,
  DomainError,
  NearZeroOrPole,
  DenominatorNearZero,
  BoundaryZero,
  QuadratureNonInteger,
  RangeTooLarge,
  CutoffInsufficient,
  TruncationInsufficient,
  NoZeroBelow,
};

class ZetaError : public std::runtime_error {
 public:
  ZetaError(Errc code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  Errc code() const { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) {
  throw ZetaError(code, what);
}

// A computed complex value together with a rigorous absolute error bound
// for the truncation rule that produced it.
struct EvalResult {
  Complex value{};
  double abs_error_bound = 0.0;
  long terms_used = 1;
};

struct EvalSettings {
  double target_tol = 1e-12;
  long max_terms = 2'000'000;
  int em_correction_order = 10;  // even, >= 2

  void validate() const {
    if (target_tol < 1e-14)
      fail(Errc::DomainError, "target_tol below 1e-14 precision floor");
    if (max_terms < 10) fail(Errc::DomainError, "max_terms < 10");
    if (em_correction_order < 2 || em_correction_order % 2 != 0)
      fail(Errc::DomainError, "em_correction_order must be even and >= 2");
  }
};

inline bool finite(const Complex& z) {
  return std::isfinite(z.real()) && std::isfinite(z.imag());
}

}  // namespace zetalab
