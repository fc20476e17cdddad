#pragma once

// Upper bounds for the numerical radius built from |T| = (T^*T)^{1/2} and
// |T^*| = (TT^*)^{1/2}: the alpha-parameterized families, their alpha-optimal
// forms, and the classical baselines they refine.
//
// Every bound is reported on the w scale (the 2r-th root is taken), so all
// values compare directly with numerical_radius(T).

#include <algorithm>
#include <cassert>
#include <cmath>
#include <optional>
#include <string>
#include <vector>

#include "nrb/golden.hpp"
#include "nrb/linalg.hpp"
#include "nrb/numrange.hpp"

namespace nrb {

/// Which of the two companion inequalities: `star` keeps |T^*|^{2r} as the
/// trailing term, `plain` uses |T|^{2r} (the T -> T^* image).
enum class Variant { star, plain };

inline const char* to_string(Variant v) { return v == Variant::star ? "star" : "plain"; }

template <typename Real>
struct AlphaOptimum {
  Real alpha_star = 0;
  Real value = 0;
  int iterations = 0;
};

/// Bracket width of every alpha minimization.
inline constexpr double kAlphaWidth = 1e-12;

/// Minimizes a convex f on [0, 1] by golden section, then compares against the
/// endpoints so a minimum sitting on the boundary is reported exactly.
template <typename Real, typename F>
AlphaOptimum<Real> minimize_over_alpha(F&& f, Real tol = Real(kAlphaWidth)) {
  const Real width = std::max(std::min(tol, Real(kAlphaWidth)), Real(1e-15));
  const auto m = golden_section_minimize<Real>(f, Real(0), Real(1), width);
  AlphaOptimum<Real> best{m.argmin, m.value, m.iterations};
  for (Real end : {Real(0), Real(1)}) {
    const Real v = f(end);
    if (v < best.value) best = {end, v, m.iterations};
  }
#ifndef NDEBUG
  Real grid_min = best.value;
  for (int k = 0; k <= 1000; ++k) grid_min = std::min(grid_min, f(Real(k) / Real(1000)));
  assert(best.value <= grid_min + Real(1e-9) * (Real(1) + std::abs(grid_min)));
#endif
  return best;
}

namespace detail {

template <typename Real>
void require_unit_interval(Real x, const char* name, const char* what) {
  if (!(x >= Real(0) && x <= Real(1))) {
    throw DomainError(std::string(what) + ": " + name + " must lie in [0, 1]");
  }
}

template <typename Real>
void require_psd(const ComplexMatrix<Real>& a, Real tol, const char* what) {
  const auto values = hermitian_eigenvalues(a, tol);
  if (values(0) < -effective_tol(tol) * a.norm()) {
    throw NotPsd(std::string(what) + ": argument is not positive semidefinite");
  }
}

}  // namespace detail

/// min over alpha in [0,1] of ||alpha A + (1 - alpha) B|| for PSD A, B.
template <typename Real>
AlphaOptimum<Real> alpha_min_norm(const ComplexMatrix<Real>& a, const ComplexMatrix<Real>& b,
                                  Real tol = Real(kAlphaWidth)) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw DimensionMismatch("alpha_min_norm: operands differ in shape");
  }
  detail::require_psd(a, Real(kDefaultTol), "alpha_min_norm");
  detail::require_psd(b, Real(kDefaultTol), "alpha_min_norm");
  return minimize_over_alpha<Real>(
      [&](Real alpha) { return hermitian_norm(ComplexMatrix<Real>(alpha * a + (Real(1) - alpha) * b)); }, tol);
}

/// Spectral data of T shared by all bounds: decompositions of T^*T, TT^* and
/// (|T| + |T^*|)/2, plus w(T) and w(T^2).
template <typename Real>
class BoundContext {
 public:
  explicit BoundContext(const ComplexMatrix<Real>& t, Real tol = Real(kDefaultRadiusTol))
      : t_(t), tol_(tol) {
    detail::require_square(t_, "BoundContext");
    const ComplexMatrix<Real> gram = t_.adjoint() * t_;
    const ComplexMatrix<Real> cogram = t_ * t_.adjoint();
    abs_sq_ = clamp_psd(hermitian_eigen(gram), gram.norm(), Real(kDefaultTol));
    adj_abs_sq_ = clamp_psd(hermitian_eigen(cogram), cogram.norm(), Real(kDefaultTol));
    const ComplexMatrix<Real> mean = (abs_power(1) + adjoint_abs_power(1)) / Real(2);
    mean_ = clamp_psd(hermitian_eigen(mean), mean.norm(), Real(kDefaultTol));
    radius_ = numerical_radius(t_, tol).value;
    square_radius_ = numerical_radius(ComplexMatrix<Real>(t_ * t_), tol).value;
  }

  const ComplexMatrix<Real>& matrix() const { return t_; }
  Real tol() const { return tol_; }
  Real radius() const { return radius_; }
  Real square_radius() const { return square_radius_; }
  Real norm() const { return std::sqrt(std::max(Real(0), abs_sq_.max())); }

  /// |T|^p
  ComplexMatrix<Real> abs_power(Real p) const { return psd_power(abs_sq_, p / Real(2)); }
  /// |T^*|^p
  ComplexMatrix<Real> adjoint_abs_power(Real p) const { return psd_power(adj_abs_sq_, p / Real(2)); }
  /// ((|T| + |T^*|)/2)^p
  ComplexMatrix<Real> mean_abs_power(Real p) const { return psd_power(mean_, p); }

  const EigenDecomposition<Real>& abs_squared_eigen() const { return abs_sq_; }
  const EigenDecomposition<Real>& adjoint_abs_squared_eigen() const { return adj_abs_sq_; }

 private:
  ComplexMatrix<Real> t_;
  Real tol_;
  EigenDecomposition<Real> abs_sq_;
  EigenDecomposition<Real> adj_abs_sq_;
  EigenDecomposition<Real> mean_;
  Real radius_ = 0;
  Real square_radius_ = 0;
};

namespace detail {

template <typename Real>
Real root_2r(Real x, Real r) {
  return std::pow(std::max(Real(0), x), Real(1) / (Real(2) * r));
}

// The objectives below are on the w^{2r} scale.

template <typename Real>
Real thm1_objective(const ComplexMatrix<Real>& abs_2r, const ComplexMatrix<Real>& adj_2r, Real alpha) {
  return hermitian_norm(ComplexMatrix<Real>(alpha * abs_2r + (Real(1) - alpha) * adj_2r));
}

template <typename Real>
Real thm2_objective(Real square_radius_r, const ComplexMatrix<Real>& abs_2r,
                    const ComplexMatrix<Real>& adj_2r, Real alpha, Variant variant) {
  const Real small = alpha / Real(4);
  const Real large = Real(1) - Real(3) * alpha / Real(4);
  const ComplexMatrix<Real> mix =
      variant == Variant::star ? ComplexMatrix<Real>(small * abs_2r + large * adj_2r)
                               : ComplexMatrix<Real>(large * abs_2r + small * adj_2r);
  return alpha / Real(2) * square_radius_r + hermitian_norm(mix);
}

template <typename Real>
Real thm3_objective(const ComplexMatrix<Real>& mean_2r, const ComplexMatrix<Real>& trailing, Real alpha) {
  return hermitian_norm(ComplexMatrix<Real>(alpha * mean_2r + (Real(1) - alpha) * trailing));
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Single-parameter evaluations on a shared context.

template <typename Real>
Real bound_thm1(const BoundContext<Real>& ctx, Real r, Real alpha) {
  detail::require_power(r, "bound_thm1");
  detail::require_unit_interval(alpha, "alpha", "bound_thm1");
  const Real p = Real(2) * r;
  return detail::root_2r(detail::thm1_objective(ctx.abs_power(p), ctx.adjoint_abs_power(p), alpha), r);
}

template <typename Real>
Real bound_heinz(const BoundContext<Real>& ctx, Real r, Real alpha, Real lambda, Variant variant) {
  detail::require_power(r, "bound_heinz");
  detail::require_unit_interval(alpha, "alpha", "bound_heinz");
  detail::require_unit_interval(lambda, "lambda", "bound_heinz");
  const ComplexMatrix<Real> pair = ctx.abs_power(Real(4) * lambda * r) +
                                   ctx.adjoint_abs_power(Real(4) * (Real(1) - lambda) * r);
  const ComplexMatrix<Real> trailing =
      variant == Variant::star ? ctx.adjoint_abs_power(Real(2) * r) : ctx.abs_power(Real(2) * r);
  const Real value = hermitian_norm(ComplexMatrix<Real>(alpha / Real(2) * pair + (Real(1) - alpha) * trailing));
  return detail::root_2r(value, r);
}

template <typename Real>
Real bound_thm2(const BoundContext<Real>& ctx, Real r, Real alpha, Variant variant) {
  detail::require_power(r, "bound_thm2");
  detail::require_unit_interval(alpha, "alpha", "bound_thm2");
  const Real p = Real(2) * r;
  const Real value = detail::thm2_objective(std::pow(ctx.square_radius(), r), ctx.abs_power(p),
                                            ctx.adjoint_abs_power(p), alpha, variant);
  return detail::root_2r(value, r);
}

template <typename Real>
Real bound_thm3(const BoundContext<Real>& ctx, Real r, Real alpha, Variant variant) {
  detail::require_power(r, "bound_thm3");
  detail::require_unit_interval(alpha, "alpha", "bound_thm3");
  const Real p = Real(2) * r;
  const ComplexMatrix<Real> trailing = variant == Variant::star ? ctx.adjoint_abs_power(p) : ctx.abs_power(p);
  return detail::root_2r(detail::thm3_objective(ctx.mean_abs_power(p), trailing, alpha), r);
}

/// sqrt(||(|T|^2 + |T^*|^2) / 2||)
template <typename Real>
Real bound_kittaneh_sq(const BoundContext<Real>& ctx) {
  return std::sqrt(hermitian_norm(ComplexMatrix<Real>((ctx.abs_power(2) + ctx.adjoint_abs_power(2)) / Real(2))));
}

/// sqrt(w(T^2) / 2 + ||(|T|^2 + |T^*|^2)|| / 4)
template <typename Real>
Real bound_abu_omar_kittaneh(const BoundContext<Real>& ctx) {
  const Real sum = hermitian_norm(ComplexMatrix<Real>(ctx.abs_power(2) + ctx.adjoint_abs_power(2)));
  return std::sqrt(ctx.square_radius() / Real(2) + sum / Real(4));
}

/// ||(|T| + |T^*|)|| / 2
template <typename Real>
Real bound_kittaneh_abs(const BoundContext<Real>& ctx) {
  return hermitian_norm(ctx.mean_abs_power(1));
}

// ---------------------------------------------------------------------------
// Alpha-optimal forms.

/// Pair of alpha minima for the two variants; `value` is sqrt(min) on the w scale.
template <typename Real>
struct VariantOptimum {
  AlphaOptimum<Real> star;   // beta_1 / gamma_1, w^2 scale
  AlphaOptimum<Real> plain;  // beta_2 / gamma_2, w^2 scale
  Real value = 0;

  Variant best_variant() const { return plain.value < star.value ? Variant::plain : Variant::star; }
  const AlphaOptimum<Real>& best() const { return plain.value < star.value ? plain : star; }
};

/// sqrt(min_alpha ||alpha |T|^2 + (1 - alpha)|T^*|^2||); alpha_star reported, value on the w scale.
template <typename Real>
AlphaOptimum<Real> bound_cor1(const BoundContext<Real>& ctx) {
  const ComplexMatrix<Real> a = ctx.abs_power(2);
  const ComplexMatrix<Real> b = ctx.adjoint_abs_power(2);
  auto opt = minimize_over_alpha<Real>([&](Real alpha) { return detail::thm1_objective(a, b, alpha); });
  opt.value = std::sqrt(std::max(Real(0), opt.value));
  return opt;
}

template <typename Real>
VariantOptimum<Real> bound_cor2(const BoundContext<Real>& ctx) {
  const ComplexMatrix<Real> a = ctx.abs_power(2);
  const ComplexMatrix<Real> b = ctx.adjoint_abs_power(2);
  const Real wsq = ctx.square_radius();
  VariantOptimum<Real> out;
  out.star = minimize_over_alpha<Real>(
      [&](Real alpha) { return detail::thm2_objective(wsq, a, b, alpha, Variant::star); });
  out.plain = minimize_over_alpha<Real>(
      [&](Real alpha) { return detail::thm2_objective(wsq, a, b, alpha, Variant::plain); });
  out.value = std::sqrt(std::max(Real(0), std::min(out.star.value, out.plain.value)));
  return out;
}

template <typename Real>
VariantOptimum<Real> bound_cor3(const BoundContext<Real>& ctx) {
  const ComplexMatrix<Real> mean_sq = ctx.mean_abs_power(2);
  const ComplexMatrix<Real> a = ctx.abs_power(2);
  const ComplexMatrix<Real> b = ctx.adjoint_abs_power(2);
  VariantOptimum<Real> out;
  out.star = minimize_over_alpha<Real>([&](Real alpha) { return detail::thm3_objective(mean_sq, b, alpha); });
  out.plain = minimize_over_alpha<Real>([&](Real alpha) { return detail::thm3_objective(mean_sq, a, alpha); });
  out.value = std::sqrt(std::max(Real(0), std::min(out.star.value, out.plain.value)));
  return out;
}

/// ||T^*T + TT^*|| - ||T||^2 - max(c(|T|^2), c(|T^*|^2)); non-negative up to rounding.
template <typename Real>
Real check_prop1(const BoundContext<Real>& ctx) {
  const ComplexMatrix<Real> a = ctx.abs_power(2);
  const ComplexMatrix<Real> b = ctx.adjoint_abs_power(2);
  const Real crawford = std::max(crawford_number(a).value, crawford_number(b).value);
  const Real n = ctx.norm();
  return hermitian_norm(ComplexMatrix<Real>(a + b)) - n * n - crawford;
}

// ---------------------------------------------------------------------------
// Free-standing overloads on a bare matrix. Each builds the spectral data it
// needs; prefer a BoundContext when evaluating several bounds of one T.

namespace detail {

template <typename Real>
ComplexMatrix<Real> gram_power(const ComplexMatrix<Real>& g, Real p) {
  return psd_power(clamp_psd(hermitian_eigen(g), g.norm(), Real(kDefaultTol)), p);
}

}  // namespace detail

template <typename Real>
Real bound_thm1(const ComplexMatrix<Real>& t, Real r, Real alpha) {
  detail::require_power(r, "bound_thm1");
  detail::require_unit_interval(alpha, "alpha", "bound_thm1");
  detail::require_square(t, "bound_thm1");
  const ComplexMatrix<Real> abs_2r = detail::gram_power(ComplexMatrix<Real>(t.adjoint() * t), r);
  const ComplexMatrix<Real> adj_2r = detail::gram_power(ComplexMatrix<Real>(t * t.adjoint()), r);
  return detail::root_2r(detail::thm1_objective(abs_2r, adj_2r, alpha), r);
}

template <typename Real>
AlphaOptimum<Real> bound_cor1(const ComplexMatrix<Real>& t, Real tol = Real(kAlphaWidth)) {
  detail::require_square(t, "bound_cor1");
  auto opt = alpha_min_norm(abs_squared(t), abs_squared(ComplexMatrix<Real>(t.adjoint())), tol);
  opt.value = std::sqrt(std::max(Real(0), opt.value));
  return opt;
}

template <typename Real>
Real bound_kittaneh_sq(const ComplexMatrix<Real>& t) {
  detail::require_square(t, "bound_kittaneh_sq");
  return std::sqrt(hermitian_norm(ComplexMatrix<Real>((t.adjoint() * t + t * t.adjoint()) / Real(2))));
}

template <typename Real>
Real w_of_square(const ComplexMatrix<Real>& t, Real tol = Real(kDefaultRadiusTol)) {
  return numerical_radius(multiply(t, t), tol).value;
}

template <typename Real>
Real bound_heinz(const ComplexMatrix<Real>& t, Real r, Real alpha, Real lambda, Variant variant) {
  return bound_heinz(BoundContext<Real>(t), r, alpha, lambda, variant);
}

template <typename Real>
Real bound_thm2(const ComplexMatrix<Real>& t, Real r, Real alpha, Variant variant,
                Real tol = Real(kDefaultRadiusTol)) {
  return bound_thm2(BoundContext<Real>(t, tol), r, alpha, variant);
}

template <typename Real>
VariantOptimum<Real> bound_cor2(const ComplexMatrix<Real>& t, Real tol = Real(kDefaultRadiusTol)) {
  return bound_cor2(BoundContext<Real>(t, tol));
}

template <typename Real>
Real bound_abu_omar_kittaneh(const ComplexMatrix<Real>& t, Real tol = Real(kDefaultRadiusTol)) {
  return bound_abu_omar_kittaneh(BoundContext<Real>(t, tol));
}

template <typename Real>
Real bound_thm3(const ComplexMatrix<Real>& t, Real r, Real alpha, Variant variant) {
  return bound_thm3(BoundContext<Real>(t), r, alpha, variant);
}

template <typename Real>
VariantOptimum<Real> bound_cor3(const ComplexMatrix<Real>& t, Real tol = Real(kDefaultRadiusTol)) {
  return bound_cor3(BoundContext<Real>(t, tol));
}

template <typename Real>
Real bound_kittaneh_abs(const ComplexMatrix<Real>& t) {
  return bound_kittaneh_abs(BoundContext<Real>(t));
}

template <typename Real>
Real check_prop1(const ComplexMatrix<Real>& t, Real tol = Real(kDefaultRadiusTol)) {
  return check_prop1(BoundContext<Real>(t, tol));
}

// ---------------------------------------------------------------------------
// Reports.

template <typename Real>
struct BoundParams {
  Real r = 1;
  std::optional<Real> alpha;
  std::optional<Real> lambda;
  std::optional<Variant> variant;
};

template <typename Real>
struct BoundEntry {
  std::string name;
  std::string formula;
  Real value = 0;
  std::optional<BoundParams<Real>> params;
  Real slack = 0;  // value - computed_radius
};

template <typename Real>
struct BoundReport {
  Real computed_radius = 0;
  std::vector<BoundEntry<Real>> entries;

  /// Every bound dominates the computed radius up to `tol_report`.
  bool consistent(Real tol_report = Real(1e-8)) const {
    return std::all_of(entries.begin(), entries.end(),
                       [&](const auto& e) { return e.slack >= -tol_report; });
  }

  const BoundEntry<Real>* find(const std::string& name) const {
    for (const auto& e : entries)
      if (e.name == name) return &e;
    return nullptr;
  }
};

template <typename Real>
struct ReportConfig {
  std::vector<Real> r_values{Real(1)};
  Real tol = Real(kDefaultRadiusTol);
};

/// All alpha-optimal bounds and the three baselines, sorted ascending by value
/// (ties by name). For each r != 1 in the config the alpha-optimal families
/// at that r are added as well.
template <typename Real>
BoundReport<Real> evaluate_all(const ComplexMatrix<Real>& t, const ReportConfig<Real>& config = {}) {
  for (Real r : config.r_values) detail::require_power(r, "evaluate_all");
  const BoundContext<Real> ctx(t, config.tol);

  BoundReport<Real> report;
  report.computed_radius = ctx.radius();
  auto add = [&](std::string name, std::string formula, Real value, std::optional<BoundParams<Real>> params) {
    report.entries.push_back({std::move(name), std::move(formula), value, std::move(params), value - ctx.radius()});
  };
  auto fmt_r = [](Real r) {
    std::string s = std::to_string(static_cast<double>(r));
    s.erase(s.find_last_not_of('0') + 1);
    if (!s.empty() && s.back() == '.') s.pop_back();
    return s;
  };

  const bool has_r1 = std::any_of(config.r_values.begin(), config.r_values.end(), [](Real r) { return r == Real(1); });
  if (has_r1 || config.r_values.empty()) {
    const auto c1 = bound_cor1(ctx);
    add("cor1", "sqrt(min_a ||a|T|^2 + (1-a)|T*|^2||)", c1.value, BoundParams<Real>{1, c1.alpha_star, {}, {}});
    add("kittaneh_sq", "sqrt(||(|T|^2 + |T*|^2)/2||)", bound_kittaneh_sq(ctx), std::nullopt);

    const auto c2 = bound_cor2(ctx);
    add("cor2", "sqrt(min(beta1, beta2))", c2.value,
        BoundParams<Real>{1, c2.best().alpha_star, {}, c2.best_variant()});
    add("abu_omar_kittaneh", "sqrt(w(T^2)/2 + ||(|T|^2 + |T*|^2)||/4)", bound_abu_omar_kittaneh(ctx), std::nullopt);

    const auto c3 = bound_cor3(ctx);
    add("cor3", "sqrt(min(gamma1, gamma2))", c3.value,
        BoundParams<Real>{1, c3.best().alpha_star, {}, c3.best_variant()});
    add("kittaneh_abs", "||(|T| + |T*|)||/2", bound_kittaneh_abs(ctx), std::nullopt);
  }

  for (Real r : config.r_values) {
    if (r == Real(1)) continue;
    const Real p = Real(2) * r;
    const ComplexMatrix<Real> a = ctx.abs_power(p);
    const ComplexMatrix<Real> b = ctx.adjoint_abs_power(p);
    const ComplexMatrix<Real> m = ctx.mean_abs_power(p);
    const Real wsq_r = std::pow(ctx.square_radius(), r);
    const std::string tag = "(r=" + fmt_r(r) + ")";

    const auto t1 = minimize_over_alpha<Real>([&](Real al) { return detail::thm1_objective(a, b, al); });
    add("thm1" + tag, "min_a ||a|T|^2r + (1-a)|T*|^2r||^(1/2r)", detail::root_2r(t1.value, r),
        BoundParams<Real>{r, t1.alpha_star, {}, {}});

    for (Variant v : {Variant::star, Variant::plain}) {
      const auto t2 = minimize_over_alpha<Real>(
          [&](Real al) { return detail::thm2_objective(wsq_r, a, b, al, v); });
      add("thm2_" + std::string(to_string(v)) + tag, "min_a (a/2 w^r(T^2) + ||...||)^(1/2r)",
          detail::root_2r(t2.value, r), BoundParams<Real>{r, t2.alpha_star, {}, v});
      const auto& trailing = v == Variant::star ? b : a;
      const auto t3 = minimize_over_alpha<Real>([&](Real al) { return detail::thm3_objective(m, trailing, al); });
      add("thm3_" + std::string(to_string(v)) + tag, "min_a ||a((|T|+|T*|)/2)^2r + (1-a)...||^(1/2r)",
          detail::root_2r(t3.value, r), BoundParams<Real>{r, t3.alpha_star, {}, v});
    }
  }

  std::stable_sort(report.entries.begin(), report.entries.end(), [](const auto& x, const auto& y) {
    if (x.value != y.value) return x.value < y.value;
    return x.name < y.name;
  });
  return report;
}

}  // namespace nrb
