#include "swipt/quadrature.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <queue>
#include <stdexcept>

#include "swipt/specfun.hpp"

namespace swipt::quad {

namespace {

constexpr std::array<double, 8> kXgk = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.0};
constexpr std::array<double, 8> kWgk = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
// Gauss weights at kXgk[1], kXgk[3], kXgk[5], kXgk[7].
constexpr std::array<double, 4> kWg = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Panel {
  double a, b, value, error;
  bool operator<(const Panel& o) const { return error < o.error; }
};

Panel gk15(const std::function<double(double)>& g, double a, double b, long& evals) {
  const double c = 0.5 * (a + b);
  const double h = 0.5 * (b - a);
  const double fc = g(c);
  double kron = fc * kWgk[7];
  double gauss = fc * kWg[3];
  for (int j = 0; j < 7; ++j) {
    const double dx = h * kXgk[j];
    const double f1 = g(c - dx);
    const double f2 = g(c + dx);
    kron += kWgk[j] * (f1 + f2);
    if (j % 2 == 1) gauss += kWg[j / 2] * (f1 + f2);
  }
  evals += 15;
  const double value = kron * h;
  double err = std::abs((kron - gauss) * h);
  if (!std::isfinite(value)) err = std::numeric_limits<double>::infinity();
  return {a, b, value, err};
}

QuadResult adaptive(const std::function<double(double)>& g, std::vector<double> cuts,
                    const QuadratureControl& ctrl) {
  QuadResult r;
  std::priority_queue<Panel> heap;
  double total = 0.0;
  double err = 0.0;
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    const Panel p = gk15(g, cuts[i], cuts[i + 1], r.evaluations);
    total += p.value;
    err += p.error;
    heap.push(p);
  }
  int splits = 0;
  while (err > std::max(ctrl.abs_tol, ctrl.rel_tol * std::abs(total))) {
    if (splits >= ctrl.max_subdivisions) {
      r.converged = false;
      break;
    }
    const Panel worst = heap.top();
    const double mid = 0.5 * (worst.a + worst.b);
    if (!(mid > worst.a && mid < worst.b)) {
      // Panel cannot be split further in floating point.
      r.converged = false;
      break;
    }
    heap.pop();
    const Panel left = gk15(g, worst.a, mid, r.evaluations);
    const Panel right = gk15(g, mid, worst.b, r.evaluations);
    total += left.value + right.value - worst.value;
    err += left.error + right.error - worst.error;
    heap.push(left);
    heap.push(right);
    ++splits;
  }
  // Re-add from the panels to shed accumulated cancellation in the running sums.
  total = 0.0;
  err = 0.0;
  while (!heap.empty()) {
    total += heap.top().value;
    err += heap.top().error;
    heap.pop();
  }
  r.value = total;
  r.error = err;
  if (!std::isfinite(total)) r.converged = false;
  return r;
}

}  // namespace

QuadResult integrate(const std::function<double(double)>& f, double a, double b,
                     std::span<const double> breaks, const QuadratureControl& ctrl) {
  if (!(ctrl.abs_tol > 0.0)) throw std::invalid_argument("integrate: abs_tol must be > 0");
  if (std::isnan(a) || std::isnan(b)) throw std::invalid_argument("integrate: NaN bound");
  if (!(b > a)) return {};
  if (std::isinf(a)) throw std::invalid_argument("integrate: lower bound must be finite");

  const bool infinite = std::isinf(b);
  std::vector<double> cuts;
  if (infinite) {
    cuts.push_back(0.0);
    for (double x : breaks) {
      if (x > a && std::isfinite(x)) cuts.push_back((x - a) / (1.0 + (x - a)));
    }
    cuts.push_back(1.0);
  } else {
    cuts.push_back(a);
    for (double x : breaks) {
      if (x > a && x < b) cuts.push_back(x);
    }
    cuts.push_back(b);
  }
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

  if (!infinite) return adaptive(f, std::move(cuts), ctrl);
  const auto g = [&](double t) {
    const double u = 1.0 - t;
    const double v = f(a + t / u);
    return v == 0.0 ? 0.0 : v / (u * u);
  };
  return adaptive(g, std::move(cuts), ctrl);
}

double GammaDensity::pdf(double x) const {
  if (x < 0.0) return 0.0;
  if (x == 0.0) {
    if (shape == 1.0) return 1.0 / scale;
    return shape < 1.0 ? std::numeric_limits<double>::infinity() : 0.0;
  }
  const double y = x / scale;
  if (std::isinf(y)) return 0.0;
  return std::exp((shape - 1.0) * std::log(y) - y - specfun::log_gamma(shape)) / scale;
}

double GammaDensity::mass(double lo, double hi) const {
  lo = std::max(lo, 0.0);
  if (!(hi > lo)) return 0.0;
  const double l = lo / scale;
  const double h = hi / scale;
  if (h <= shape) {
    return specfun::gamma_p(shape, h) - specfun::gamma_p(shape, l);
  }
  return specfun::gamma_q(shape, l) - specfun::gamma_q(shape, h);
}

GammaDensity unit_mean_gamma(int n) {
  if (n < 1) throw std::invalid_argument("unit_mean_gamma: shape must be >= 1");
  return {static_cast<double>(n), 1.0 / n};
}

namespace {

struct RegionState {
  std::span<const Dimension> dims;
  std::vector<double> outer;
  bool converged = true;
  long evaluations = 0;
};

double region_level(RegionState& st, std::size_t level, const QuadratureControl& ctrl,
                    double* error_out) {
  const Dimension& d = st.dims[level];
  const std::span<const double> outer(st.outer.data(), level);
  const auto [lo, hi] = d.bounds(outer);
  if (level + 1 == st.dims.size()) {
    ++st.evaluations;
    return d.density.mass(lo, hi);
  }
  const double a = std::max(lo, 0.0);
  if (!(hi > a)) return 0.0;
  std::vector<double> brk;
  if (d.breaks) brk = d.breaks(outer);

  QuadratureControl inner = ctrl;
  inner.abs_tol = ctrl.abs_tol / 10.0;
  inner.rel_tol = ctrl.rel_tol / 10.0;
  const auto f = [&](double x) {
    const double w = d.density.pdf(x);
    if (w == 0.0) return 0.0;
    st.outer[level] = x;
    return w * region_level(st, level + 1, inner, nullptr);
  };
  const QuadResult r = integrate(f, a, hi, brk, ctrl);
  st.converged = st.converged && r.converged;
  if (error_out) *error_out = r.error;
  return r.value;
}

}  // namespace

QuadResult integrate_region(std::span<const Dimension> dims, const QuadratureControl& ctrl) {
  if (dims.empty() || dims.size() > 3) {
    throw std::invalid_argument("integrate_region: between 1 and 3 dimensions supported");
  }
  RegionState st{dims, std::vector<double>(dims.size(), 0.0)};
  QuadResult r;
  double err = 0.0;
  r.value = region_level(st, 0, ctrl, &err);
  // Inner levels are held to a tenth of the outer tolerance; their error
  // propagates into the outer integrand weighted by a probability density.
  r.error = err + (dims.size() > 1 ? ctrl.abs_tol / 10.0 : 0.0);
  r.converged = st.converged;
  r.evaluations = st.evaluations;
  return r;
}

}  // namespace swipt::quad
