#pragma once

#include <exception>
#include <functional>
#include <string>

#include "swipt/closed_forms.hpp"
#include "swipt/oracle.hpp"
#include "swipt/probability.hpp"

namespace swipt::detail {

/// Accepts a closed-form value or, when its rounding bound is too loose,
/// the oracle integral of the same region.
inline Probability resolve(const std::string& name, const std::function<closed::Conditioned()>& cf,
                           const std::function<oracle::OracleValue()>& fallback) {
  closed::Conditioned c;
  try {
    c = cf();
  } catch (const ComponentError&) {
    throw;
  } catch (const std::exception& e) {
    throw ComponentError(name, e.what());
  }
  if (!c.series_converged) throw SeriesError(name, c.value);
  if (!(c.rounding_bound() <= kFallbackRounding)) {
    const oracle::OracleValue o = fallback();
    if (!o.converged) throw ComponentError(name, "oracle fallback did not converge");
    return {clamp_probability(o.value, name), Method::oracle_fallback};
  }
  return {clamp_probability(c.value, name), Method::closed_form};
}

template <typename F>
Probability named(const std::string& name, F&& f) {
  try {
    return f();
  } catch (const ComponentError&) {
    throw;
  } catch (const std::exception& e) {
    throw ComponentError(name, e.what());
  }
}

}  // namespace swipt::detail
