#pragma once

#include <cmath>
#include <stdexcept>
#include <string>

namespace fpst {

/// Process exit status attached to every library error.
enum class ExitCode : int {
  ok = 0,
  validation = 2,
  non_convergence = 3,
  verify_failure = 4,
};

/// Base class of all library errors. `tag()` is a stable machine-readable
/// identifier (E_DOMAIN, E_POLE, ...) used by the CLI.
class Error : public std::runtime_error {
 public:
  Error(std::string tag, ExitCode code, const std::string& what)
      : std::runtime_error(what), tag_(std::move(tag)), code_(code) {}

  [[nodiscard]] const std::string& tag() const noexcept { return tag_; }
  [[nodiscard]] ExitCode code() const noexcept { return code_; }

 private:
  std::string tag_;
  ExitCode code_;
};

class DomainError : public Error {
 public:
  explicit DomainError(const std::string& what)
      : Error("E_DOMAIN", ExitCode::validation, what) {}

 protected:
  DomainError(std::string tag, const std::string& what)
      : Error(std::move(tag), ExitCode::validation, what) {}
};

/// Argument hits a pole of Γ or ψ.
class PoleError : public DomainError {
 public:
  explicit PoleError(const std::string& what) : DomainError("E_POLE", what) {}
};

/// An a = ∞ finite part was requested for a function family without a
/// registered closed form.
class MissingClosedFormError : public DomainError {
 public:
  explicit MissingClosedFormError(const std::string& what)
      : DomainError("E_NO_CLOSED_FORM", what) {}
};

class ConvergenceError : public Error {
 public:
  explicit ConvergenceError(const std::string& what)
      : Error("E_NONCONV", ExitCode::non_convergence, what) {}

 protected:
  ConvergenceError(std::string tag, const std::string& what)
      : Error(std::move(tag), ExitCode::non_convergence, what) {}
};

class QuadratureError : public ConvergenceError {
 public:
  explicit QuadratureError(const std::string& what)
      : ConvergenceError("E_QUAD", what) {}
};

/// Shared truncation control for every series summed in the library.
///
/// A series stops once `quiet_run` consecutive terms satisfy
/// |term| <= rel_tol * |partial sum|. Reaching `term_cap` first is a
/// non-convergence error.
struct SeriesControl {
  double rel_tol = 1e-16;
  int term_cap = 2000;
  int quiet_run = 3;
};

/// Running sum implementing the SeriesControl stopping rule.
///
/// A zero term added to a zero partial sum neither counts toward nor
/// resets the quiet run, so leading zero coefficients do not stop a sum.
class SeriesSum {
 public:
  explicit SeriesSum(const SeriesControl& control, int cap = -1)
      : control_(control), cap_(cap > 0 ? cap : control.term_cap) {}

  /// Adds a term; returns true once the stopping rule has fired.
  bool add(double term) {
    if (!std::isfinite(term)) {
      throw ConvergenceError("series produced a non-finite term after " +
                             std::to_string(terms_) + " terms");
    }
    sum_ += term;
    ++terms_;
    const double mag = std::fabs(term);
    if (mag == 0.0 && sum_ == 0.0) return done_;
    if (mag <= control_.rel_tol * std::fabs(sum_)) {
      tail_ = std::fmax(tail_, mag);
      if (++quiet_ >= control_.quiet_run) done_ = true;
    } else {
      quiet_ = 0;
      tail_ = 0.0;
    }
    return done_;
  }

  [[nodiscard]] bool done() const noexcept { return done_; }
  [[nodiscard]] bool exhausted() const noexcept { return terms_ >= cap_; }
  [[nodiscard]] double value() const noexcept { return sum_; }
  [[nodiscard]] int terms() const noexcept { return terms_; }
  [[nodiscard]] int cap() const noexcept { return cap_; }
  /// Largest magnitude among the quiet terms that closed the sum.
  [[nodiscard]] double tail_estimate() const noexcept { return tail_; }

  /// Throws ConvergenceError naming `what` unless the rule has fired.
  void require_converged(const std::string& what) const {
    if (!done_) {
      throw ConvergenceError(what + ": no convergence within " +
                             std::to_string(terms_) + " terms");
    }
  }

 private:
  SeriesControl control_;
  int cap_;
  double sum_ = 0.0;
  double tail_ = 0.0;
  int terms_ = 0;
  int quiet_ = 0;
  bool done_ = false;
};

/// Sums term(k) for k = 0, 1, ... under the stopping rule, throwing on
/// non-convergence.
template <typename TermFn>
SeriesSum sum_series(const SeriesControl& control, const std::string& what,
                     TermFn&& term, int cap = -1) {
  SeriesSum sum(control, cap);
  for (int k = 0; !sum.exhausted(); ++k) {
    if (sum.add(term(k))) break;
  }
  sum.require_converged(what);
  return sum;
}

}  // namespace fpst
