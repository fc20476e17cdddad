#pragma once

#include <cmath>
#include <utility>

namespace nrb {

template <typename Real>
struct ScalarMinimum {
  Real argmin;
  Real value;
  int iterations;
};

/// Golden-section search for the minimum of a unimodal f on [lo, hi].
///
/// Stops once the bracket is narrower than `width`, after `max_iterations`
/// shrink steps, or as soon as `done(bracket_width, best_value)` returns true.
/// The returned point is the best probe seen, so the result never exceeds
/// min(f(probe)) even when f is flat to rounding.
template <typename Real, typename F, typename Done>
ScalarMinimum<Real> golden_section_minimize(F&& f, Real lo, Real hi, Real width, int max_iterations,
                                            Done&& done) {
  const Real inv_phi = (std::sqrt(Real(5)) - Real(1)) / Real(2);
  Real a = lo;
  Real b = hi;
  Real c = b - inv_phi * (b - a);
  Real d = a + inv_phi * (b - a);
  Real fc = f(c);
  Real fd = f(d);

  ScalarMinimum<Real> best{fc <= fd ? c : d, fc <= fd ? fc : fd, 0};
  int it = 0;
  while (it < max_iterations && (b - a) > width && !done(b - a, best.value)) {
    ++it;
    if (fc <= fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - inv_phi * (b - a);
      fc = f(c);
      if (fc < best.value) best = {c, fc, it};
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + inv_phi * (b - a);
      fd = f(d);
      if (fd < best.value) best = {d, fd, it};
    }
  }
  best.iterations = it;
  return best;
}

template <typename Real, typename F>
ScalarMinimum<Real> golden_section_minimize(F&& f, Real lo, Real hi, Real width, int max_iterations = 200) {
  return golden_section_minimize<Real>(std::forward<F>(f), lo, hi, width, max_iterations,
                                       [](Real, Real) { return false; });
}

/// Maximizing counterpart; `done` receives the best (largest) value so far.
template <typename Real, typename F, typename Done>
ScalarMinimum<Real> golden_section_maximize(F&& f, Real lo, Real hi, Real width, int max_iterations,
                                            Done&& done) {
  auto r = golden_section_minimize<Real>([&f](Real x) { return -f(x); }, lo, hi, width, max_iterations,
                                         [&done](Real w, Real v) { return done(w, -v); });
  r.value = -r.value;
  return r;
}

template <typename Real, typename F>
ScalarMinimum<Real> golden_section_maximize(F&& f, Real lo, Real hi, Real width, int max_iterations = 200) {
  return golden_section_maximize<Real>(std::forward<F>(f), lo, hi, width, max_iterations,
                                       [](Real, Real) { return false; });
}

}  // namespace nrb
