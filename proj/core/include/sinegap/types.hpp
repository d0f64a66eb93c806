#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace sinegap {

// Thrown when an evaluation would need eigenvalue deficits below the accuracy
// floor of the active precision backend.
class PrecisionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Thrown when an asymptotic formula is requested outside the regime where the
// corresponding expansion is defined (not merely inaccurate).
class RegimeError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Thrown when an iterative scheme hits its cap without meeting its target.
class ConvergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Precision { baseline, extended };

// The point (s, v) with the derived coupling gamma = 1 - exp(-2v) and the
// ratio kappa = v / s. v may be +infinity, in which case gamma == 1.
struct GapParams {
  double s = 0.0;
  double v = 0.0;
  double gamma = 0.0;
  double kappa = 0.0;

  static GapParams from_v(double s, double v);
  static GapParams from_gamma(double s, double gamma);
};

using Components = std::vector<std::pair<std::string, double>>;

struct EvalReport {
  double ln_D = 0.0;
  std::string method;  // numeric-eigen | numeric-lu | asymptotic-eqN | monte-carlo
  double err_est = 0.0;
  std::string regime;  // regime label(s), or empty when not classified
  Components components;

  double component(const std::string& name) const;
  bool has_component(const std::string& name) const;
};

}  // namespace sinegap
