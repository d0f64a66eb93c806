#include "sinegap/types.hpp"

#include <cmath>
#include <limits>

namespace sinegap {

GapParams GapParams::from_v(double s, double v) {
  if (!(s > 0.0)) throw std::domain_error("GapParams: s must be positive");
  if (std::isnan(v) || v < 0.0) throw std::domain_error("GapParams: v must be >= 0");
  GapParams p;
  p.s = s;
  p.v = v;
  p.gamma = std::isinf(v) ? 1.0 : -std::expm1(-2.0 * v);
  p.kappa = v / s;
  return p;
}

GapParams GapParams::from_gamma(double s, double gamma) {
  if (!(s > 0.0)) throw std::domain_error("GapParams: s must be positive");
  if (!(gamma >= 0.0 && gamma <= 1.0))
    throw std::domain_error("GapParams: gamma must lie in [0,1]");
  GapParams p;
  p.s = s;
  p.gamma = gamma;
  p.v = (gamma == 1.0) ? std::numeric_limits<double>::infinity()
                       : -0.5 * std::log1p(-gamma);
  p.kappa = p.v / s;
  return p;
}

double EvalReport::component(const std::string& name) const {
  for (const auto& [key, value] : components)
    if (key == name) return value;
  throw std::out_of_range("EvalReport: no component named " + name);
}

bool EvalReport::has_component(const std::string& name) const {
  for (const auto& [key, value] : components)
    if (key == name) return true;
  return false;
}

}  // namespace sinegap
