#include "swipt/probability.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace swipt {

std::string_view to_string(Method m) {
  switch (m) {
    case Method::closed_form:
      return "closed-form";
    case Method::oracle_fallback:
      return "oracle-fallback";
    case Method::gated:
      return "gated";
  }
  return "unknown";
}

ComponentError::ComponentError(std::string component, const std::string& what)
    : std::runtime_error(component + ": " + what), component_(std::move(component)) {}

namespace {

std::string series_message(double partial) {
  std::ostringstream os;
  os.precision(17);
  os << "series did not converge (partial sum " << partial << ")";
  return os.str();
}

}  // namespace

SeriesError::SeriesError(std::string component, double partial)
    : ComponentError(std::move(component), series_message(partial)), partial_(partial) {}

double clamp_probability(double raw, const std::string& component) {
  if (!std::isfinite(raw) || raw < -kClampSlack || raw > 1.0 + kClampSlack) {
    std::ostringstream os;
    os.precision(17);
    os << "value " << raw << " outside [0, 1]";
    throw ComponentError(component, os.str());
  }
  return std::clamp(raw, 0.0, 1.0);
}

}  // namespace swipt
