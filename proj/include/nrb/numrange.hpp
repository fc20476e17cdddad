#pragma once

// Numerical radius and Crawford number by rotation sweeps over the numerical
// range, boundary sampling, and the inner-product inequalities the radius
// bounds are built from (returned as non-negative "gaps").
//
// Both sweeps use the support-function identity
//   max_{z in W(T)} Re(e^{i theta} z) = lambda_max((e^{i theta} T + e^{-i theta} T^*) / 2).

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <vector>

#include "nrb/golden.hpp"
#include "nrb/linalg.hpp"

namespace nrb {

/// Default absolute accuracy of numerical_radius / crawford_number.
inline constexpr double kDefaultRadiusTol = 1e-10;

/// Coarse grid resolution of the rotation sweeps.
inline constexpr int kSweepGridSize = 360;

template <typename Real>
struct SweepResult {
  Real value = 0;
  Real theta_star = 0;  // in [0, 2 pi)
  int grid_size = 0;
  bool refined = false;
};

/// A vector of Euclidean norm one (within 1e-12).
template <typename Real>
class UnitVector {
 public:
  explicit UnitVector(ComplexVector<Real> v) : v_(std::move(v)) {
    if (v_.size() == 0 || std::abs(v_.norm() - Real(1)) > Real(1e-12)) {
      throw DomainError("UnitVector: norm differs from 1");
    }
  }

  static UnitVector normalized(const ComplexVector<Real>& v) {
    const Real n = v.norm();
    if (!(n > Real(0))) throw DomainError("UnitVector: cannot normalize the zero vector");
    return UnitVector(ComplexVector<Real>(v / n));
  }

  const ComplexVector<Real>& vector() const { return v_; }
  Eigen::Index size() const { return v_.size(); }

 private:
  ComplexVector<Real> v_;
};

template <typename Derived>
auto rotated_real_part(const Eigen::MatrixBase<Derived>& t, typename Derived::RealScalar theta) {
  using Real = typename Derived::RealScalar;
  const ComplexMatrix<Real> r = std::polar(Real(1), theta) * detail::to_complex(t);
  return ComplexMatrix<Real>((r + r.adjoint()) / Real(2));
}

namespace detail {

template <typename Real>
Real wrap_angle(Real theta) {
  const Real two_pi = Real(2) * std::numbers::pi_v<Real>;
  Real w = std::fmod(theta, two_pi);
  if (w < 0) w += two_pi;
  if (w >= two_pi) w = 0;
  return w;
}

// Maximizes a 2 pi-periodic objective: coarse grid, then golden-section
// refinement on [theta_{k-1}, theta_{k+1}] around every grid-local maximum.
//
// With `support_function` set, the objective is known to be the support
// function h of a compact convex set. At an interior local maximum theta_b
// with h(theta_b) > 0 we have h(theta) >= h(theta_b) cos(theta - theta_b), so
//   * a bracket whose centre value f_k obeys f_k / cos(delta / 2) <= best
//     cannot improve on best and is skipped;
//   * once a bracket of width L holds a probe of value v, the bracket maximum
//     is at most v / cos(L), and refinement stops when that gap is <= value_tol.
// The winning bracket is then refined again down to `angle_width` so that
// theta_star is resolved as finely as requested.
//
// With `lipschitz` >= 0 the objective is assumed Lipschitz with that constant;
// a bracket whose three grid values plus lipschitz * delta / 2 cannot exceed
// max(best, floor) is skipped. Values at or below `floor` are of no interest.
template <typename Real, typename F>
SweepResult<Real> sweep_maximum(F&& objective, Real angle_width, Real value_tol, int grid_size,
                                bool support_function, Real lipschitz = Real(-1),
                                Real floor = -std::numeric_limits<Real>::infinity()) {
  const Real two_pi = Real(2) * std::numbers::pi_v<Real>;
  const Real delta = two_pi / Real(grid_size);
  std::vector<Real> values(static_cast<std::size_t>(grid_size));
  for (int k = 0; k < grid_size; ++k) values[static_cast<std::size_t>(k)] = objective(delta * Real(k));

  auto at = [&](int k) { return values[static_cast<std::size_t>((k + grid_size) % grid_size)]; };

  SweepResult<Real> out;
  out.grid_size = grid_size;
  int best_k = 0;
  for (int k = 1; k < grid_size; ++k)
    if (at(k) > at(best_k)) best_k = k;
  out.value = at(best_k);
  out.theta_star = delta * Real(best_k);

  std::vector<int> candidates;
  for (int k = 0; k < grid_size; ++k)
    if (at(k) > at(k - 1) && at(k) >= at(k + 1)) candidates.push_back(k);
  if (candidates.empty()) candidates.push_back(best_k);
  std::stable_sort(candidates.begin(), candidates.end(), [&](int i, int j) { return at(i) > at(j); });

  auto settled = [&](Real width, Real best) {
    return support_function && best > Real(0) && width < Real(1) && best * (Real(1) / std::cos(width) - Real(1)) <= value_tol;
  };

  const Real cos_half = std::cos(delta / Real(2));
  int winner = -1;
  for (int k : candidates) {
    if (support_function && out.value > Real(0) && at(k) / cos_half <= out.value) continue;
    if (lipschitz >= Real(0) &&
        std::max({at(k - 1), at(k), at(k + 1)}) + lipschitz * delta / Real(2) <= std::max(out.value, floor))
      continue;
    const auto m = golden_section_maximize<Real>(objective, delta * Real(k - 1), delta * Real(k + 1), angle_width,
                                                 200, settled);
    out.refined = true;
    if (m.value > out.value || winner < 0) {
      if (m.value > out.value) {
        out.value = m.value;
        out.theta_star = m.argmin;
      }
      winner = k;
    }
  }
  if (support_function && winner >= 0) {
    const auto m = golden_section_maximize<Real>(objective, delta * Real(winner - 1), delta * Real(winner + 1),
                                                 angle_width);
    if (m.value >= out.value) {
      out.value = m.value;
      out.theta_star = m.argmin;
    }
  }
  out.theta_star = wrap_angle(out.theta_star);
  return out;
}

template <typename Real>
Real sweep_angle_width(Real tol) {
  return std::max(std::min(tol, Real(1e-12)), Real(1e-15));
}

}  // namespace detail

/// w(T) = max over theta of lambda_max(Re(e^{i theta} T)).
///
/// `tol` is the target absolute accuracy; the angular refinement is carried
/// to a bracket width of min(tol, 1e-12).
template <typename Derived>
SweepResult<typename Derived::RealScalar> numerical_radius(
    const Eigen::MatrixBase<Derived>& t,
    typename Derived::RealScalar tol = typename Derived::RealScalar(kDefaultRadiusTol)) {
  using Real = typename Derived::RealScalar;
  const ComplexMatrix<Real> m = detail::to_complex(t);
  detail::require_square(m, "numerical_radius");
  if (!detail::all_finite(m)) throw NumericalError("numerical_radius: non-finite entry");
  if (m.rows() == 1) {
    return {std::abs(m(0, 0)), detail::wrap_angle(-std::arg(m(0, 0))), 1, false};
  }
  auto objective = [&m](Real theta) {
    const auto values = hermitian_eigenvalues(rotated_real_part(m, theta));
    return values(values.size() - 1);
  };
  return detail::sweep_maximum<Real>(objective, detail::sweep_angle_width(tol), tol / Real(2), kSweepGridSize, true);
}

/// c(T) = distance from the origin to W(T).
///
/// Hermitian inputs short-circuit to the spectrum: W(T) = [lambda_min, lambda_max].
/// Otherwise c(T) = max(0, max over theta of lambda_min(Re(e^{i theta} T))).
template <typename Derived>
SweepResult<typename Derived::RealScalar> crawford_number(
    const Eigen::MatrixBase<Derived>& t,
    typename Derived::RealScalar tol = typename Derived::RealScalar(kDefaultRadiusTol)) {
  using Real = typename Derived::RealScalar;
  const ComplexMatrix<Real> m = detail::to_complex(t);
  detail::require_square(m, "crawford_number");
  if (!detail::all_finite(m)) throw NumericalError("crawford_number: non-finite entry");
  if (m.rows() == 1) {
    return {std::abs(m(0, 0)), detail::wrap_angle(-std::arg(m(0, 0))), 1, false};
  }
  const Real pi = std::numbers::pi_v<Real>;
  const Real fro = m.norm();
  if ((m - m.adjoint()).norm() <= detail::effective_tol(Real(kDefaultTol)) * (Real(1) + fro)) {
    const auto values = hermitian_eigenvalues(m);
    const Real lo = values(0);
    const Real hi = values(values.size() - 1);
    if (lo >= Real(0)) return {lo, Real(0), 0, false};
    if (hi <= Real(0)) return {-hi, pi, 0, false};
    return {Real(0), Real(0), 0, false};
  }
  auto objective = [&m](Real theta) {
    return hermitian_eigenvalues(rotated_real_part(m, theta))(0);
  };
  // d/dtheta Re(e^{i theta} T) has norm at most ||T|| <= ||T||_F.
  auto r = detail::sweep_maximum<Real>(objective, detail::sweep_angle_width(tol), tol / Real(2), kSweepGridSize, false,
                                       fro, Real(0));
  r.value = std::max(Real(0), r.value);
  return r;
}

/// Boundary points <T x, x> of W(T), x the top eigenvector of Re(e^{i theta} T)
/// for num_points equispaced angles.
template <typename Derived>
std::vector<Complex<typename Derived::RealScalar>> range_boundary(const Eigen::MatrixBase<Derived>& t,
                                                                  int num_points) {
  using Real = typename Derived::RealScalar;
  if (num_points < 3) throw DomainError("range_boundary: need at least 3 points");
  const ComplexMatrix<Real> m = detail::to_complex(t);
  detail::require_square(m, "range_boundary");
  const Real two_pi = Real(2) * std::numbers::pi_v<Real>;
  std::vector<Complex<Real>> points;
  points.reserve(static_cast<std::size_t>(num_points));
  for (int k = 0; k < num_points; ++k) {
    const auto eig = hermitian_eigen(rotated_real_part(m, two_pi * Real(k) / Real(num_points)));
    const ComplexVector<Real> x = eig.eigenvectors.col(eig.size() - 1);
    points.push_back(x.dot(m * x) / x.squaredNorm());
  }
  return points;
}

namespace detail {

template <typename Real>
Real quadratic_form(const ComplexMatrix<Real>& a, const ComplexVector<Real>& x) {
  return x.dot(a * x).real();
}

template <typename Real>
void require_conformable(const ComplexMatrix<Real>& t, const UnitVector<Real>& x, const char* what) {
  require_square(t, what);
  if (t.rows() != x.size()) {
    throw DimensionMismatch(std::string(what) + ": vector length " + std::to_string(x.size()) +
                            " does not match matrix order " + std::to_string(t.rows()));
  }
}

template <typename Real>
void require_power(Real r, const char* what) {
  if (!(r >= Real(1))) throw DomainError(std::string(what) + ": exponent r must be >= 1");
}

}  // namespace detail

/// <|T|x,x>^{1/2} <|T^*|x,x>^{1/2} - |<Tx,x>|, non-negative up to rounding.
template <typename Real>
Real mixed_schwarz_gap(const ComplexMatrix<Real>& t, const UnitVector<Real>& x) {
  detail::require_conformable(t, x, "mixed_schwarz_gap");
  const auto& v = x.vector();
  const Real left = std::max(Real(0), detail::quadratic_form(abs_op(t), v));
  const Real right = std::max(Real(0), detail::quadratic_form(abs_op(ComplexMatrix<Real>(t.adjoint())), v));
  return std::sqrt(left) * std::sqrt(right) - std::abs(v.dot(t * v));
}

/// <A^r x,x> - <Ax,x>^r for PSD A and r >= 1.
template <typename Real>
Real mccarthy_gap(const ComplexMatrix<Real>& a, const UnitVector<Real>& x, Real r,
                  Real tol = Real(kDefaultTol)) {
  detail::require_conformable(a, x, "mccarthy_gap");
  detail::require_power(r, "mccarthy_gap");
  const auto eig = clamp_psd(hermitian_eigen(a, tol), a.norm(), tol, "mccarthy_gap");
  const auto& v = x.vector();
  const Real base = std::max(Real(0), detail::quadratic_form(a, v));
  return detail::quadratic_form(psd_power(eig, r), v) - std::pow(base, r);
}

/// (||a|| ||b|| + |<a,b>|) / 2 - |<a,e><e,b>| for unit e.
template <typename Real>
Real buzano_gap(const ComplexVector<Real>& a, const UnitVector<Real>& e, const ComplexVector<Real>& b) {
  if (a.size() != e.size() || b.size() != e.size()) throw DimensionMismatch("buzano_gap: length mismatch");
  const auto& u = e.vector();
  const Real lhs = (a.norm() * b.norm() + std::abs(b.dot(a))) / Real(2);
  return lhs - std::abs(u.dot(a) * b.dot(u));
}

/// |<T^2x,x>|^r / 2 + <(|T|^{2r} + |T^*|^{2r})x,x> / 4 - |<Tx,x>|^{2r}.
template <typename Real>
Real buzano_power_gap(const ComplexMatrix<Real>& t, const UnitVector<Real>& x, Real r) {
  detail::require_conformable(t, x, "buzano_power_gap");
  detail::require_power(r, "buzano_power_gap");
  const auto& v = x.vector();
  const ComplexMatrix<Real> adj = t.adjoint();
  const ComplexMatrix<Real> abs_pow = psd_power(ComplexMatrix<Real>(adj * t), r);
  const ComplexMatrix<Real> adj_abs_pow = psd_power(ComplexMatrix<Real>(t * adj), r);
  const Real square_term = std::pow(std::abs(v.dot(t * (t * v))), r) / Real(2);
  const Real abs_term = detail::quadratic_form(ComplexMatrix<Real>(abs_pow + adj_abs_pow), v) / Real(4);
  return square_term + abs_term - std::pow(std::abs(v.dot(t * v)), Real(2) * r);
}

}  // namespace nrb
