#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace swipt {

/// How an analytic probability was obtained.
enum class Method {
  closed_form,
  oracle_fallback,  // closed form ill-conditioned here; integrated instead
  gated,            // exact value forced by a threshold gate
};

std::string_view to_string(Method m);

struct Probability {
  double value = 0.0;
  Method method = Method::closed_form;
};

/// A component evaluation failed; `component()` names it.
class ComponentError : public std::runtime_error {
 public:
  ComponentError(std::string component, const std::string& what);
  const std::string& component() const { return component_; }

 private:
  std::string component_;
};

/// A truncated series hit its term cap. Carries the partial sum.
class SeriesError : public ComponentError {
 public:
  SeriesError(std::string component, double partial);
  double partial() const { return partial_; }

 private:
  double partial_;
};

/// Slack allowed when clamping a closed-form value into [0, 1].
inline constexpr double kClampSlack = 1e-9;
/// Largest tolerated rounding bound before a closed form defers to the oracle.
inline constexpr double kFallbackRounding = 1e-9;

/// Clamps values within kClampSlack of [0, 1]; throws ComponentError otherwise.
double clamp_probability(double raw, const std::string& component);

}  // namespace swipt
