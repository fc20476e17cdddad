#pragma once

// Bounds on the moduli of the zeros of a monic complex polynomial, obtained
// from numerical-radius estimates of its Frobenius companion matrix, with the
// Cauchy and Montel bounds as baselines and Durand-Kerner roots as the oracle.

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "nrb/bounds.hpp"
#include "nrb/linalg.hpp"
#include "nrb/numrange.hpp"

namespace nrb {

/// p(z) = z^n + a_{n-1} z^{n-1} + ... + a_1 z + a_0 with n >= 2.
template <typename Real>
class MonicPolynomial {
 public:
  /// `lower` holds a_0, a_1, ..., a_{n-1}.
  explicit MonicPolynomial(std::vector<Complex<Real>> lower) : a_(std::move(lower)) {
    if (a_.size() < 2) throw DomainError("MonicPolynomial: degree must be at least 2");
    for (const auto& c : a_) {
      if (!std::isfinite(c.real()) || !std::isfinite(c.imag())) {
        throw DomainError("MonicPolynomial: non-finite coefficient");
      }
    }
  }

  /// Coefficients from the leading term down: {1, a_{n-1}, ..., a_0}.
  static MonicPolynomial from_descending(const std::vector<Complex<Real>>& desc) {
    if (desc.empty() || desc.front() != Complex<Real>(1)) {
      throw DomainError("MonicPolynomial: leading coefficient must be 1");
    }
    return MonicPolynomial(std::vector<Complex<Real>>(desc.rbegin(), desc.rend() - 1));
  }

  int degree() const { return static_cast<int>(a_.size()); }
  const std::vector<Complex<Real>>& coefficients() const { return a_; }
  const Complex<Real>& coefficient(int i) const { return a_[static_cast<std::size_t>(i)]; }

  Complex<Real> operator()(Complex<Real> z) const {
    Complex<Real> acc(1);
    for (auto it = a_.rbegin(); it != a_.rend(); ++it) acc = acc * z + *it;
    return acc;
  }

  Real max_abs_coefficient() const {
    Real m = 0;
    for (const auto& c : a_) m = std::max(m, std::abs(c));
    return m;
  }

 private:
  std::vector<Complex<Real>> a_;
};

/// First row (-a_{n-1}, ..., -a_0), ones on the subdiagonal.
template <typename Real>
ComplexMatrix<Real> companion_matrix(const MonicPolynomial<Real>& p) {
  const int n = p.degree();
  ComplexMatrix<Real> c = shift_matrix<Real>(n);
  for (int j = 0; j < n; ++j) c(0, j) = -p.coefficient(n - 1 - j);
  return c;
}

/// Closed-form numerical radius of the n x n shift, cos(pi / (n + 1)).
template <typename Real = double>
Real shift_radius(int n) {
  if (n < 1) throw DomainError("shift_radius: n must be positive");
  return std::cos(std::numbers::pi_v<Real> / Real(n + 1));
}

/// Upper bound on w([[0, B], [C, 0]]):
///   min over alpha of max{||(1-a)BB^* + aC^*C||, ||aB^*B + (1-a)CC^*||},
/// the pointwise max of two convex functions of alpha. The returned value is
/// the square root (w scale).
template <typename Real>
AlphaOptimum<Real> block_offdiag_bound(const ComplexMatrix<Real>& b, const ComplexMatrix<Real>& c,
                                       Real tol = Real(kAlphaWidth)) {
  if (b.rows() != c.cols() || b.cols() != c.rows()) {
    throw DimensionMismatch("block_offdiag_bound: B is " + detail::dims(b.rows(), b.cols()) + ", C is " +
                            detail::dims(c.rows(), c.cols()));
  }
  const ComplexMatrix<Real> bbh = b * b.adjoint();
  const ComplexMatrix<Real> chc = c.adjoint() * c;
  const ComplexMatrix<Real> bhb = b.adjoint() * b;
  const ComplexMatrix<Real> cch = c * c.adjoint();
  auto objective = [&](Real alpha) {
    const Real beta = Real(1) - alpha;
    return std::max(hermitian_norm(ComplexMatrix<Real>(beta * bbh + alpha * chc)),
                    hermitian_norm(ComplexMatrix<Real>(alpha * bhb + beta * cch)));
  };
  auto opt = minimize_over_alpha<Real>(objective, tol);
  opt.value = std::sqrt(std::max(Real(0), opt.value));
  return opt;
}

/// (w(A) + w(D))/2 + sqrt((w(A) - w(D))^2 + 4 w(T)^2)/2, T the off-diagonal part.
template <typename Real>
Real block_2x2_formula(Real w_a, Real w_d, Real w_offdiag) {
  const Real diff = w_a - w_d;
  return (w_a + w_d) / Real(2) + std::sqrt(diff * diff + Real(4) * w_offdiag * w_offdiag) / Real(2);
}

/// How block_2x2_bound obtains w([[0, B], [C, 0]]).
enum class OffDiagonalMode {
  exact,       // numerical_radius of the assembled off-diagonal block
  alpha_bound  // block_offdiag_bound
};

template <typename Real>
ComplexMatrix<Real> assemble_blocks(const ComplexMatrix<Real>& a, const ComplexMatrix<Real>& b,
                                    const ComplexMatrix<Real>& c, const ComplexMatrix<Real>& d) {
  if (a.rows() != a.cols() || d.rows() != d.cols() || b.rows() != a.rows() || b.cols() != d.rows() ||
      c.rows() != d.rows() || c.cols() != a.rows()) {
    throw DimensionMismatch("assemble_blocks: blocks are not conformable");
  }
  const auto p = a.rows();
  const auto q = d.rows();
  ComplexMatrix<Real> m(p + q, p + q);
  m << a, b, c, d;
  return m;
}

/// Upper bound on w([[A, B], [C, D]]).
template <typename Real>
Real block_2x2_bound(const ComplexMatrix<Real>& a, const ComplexMatrix<Real>& b, const ComplexMatrix<Real>& c,
                     const ComplexMatrix<Real>& d, Real tol = Real(kDefaultRadiusTol),
                     OffDiagonalMode mode = OffDiagonalMode::exact) {
  const ComplexMatrix<Real> zero_a = ComplexMatrix<Real>::Zero(a.rows(), a.cols());
  const ComplexMatrix<Real> zero_d = ComplexMatrix<Real>::Zero(d.rows(), d.cols());
  const ComplexMatrix<Real> offdiag = assemble_blocks(zero_a, b, c, zero_d);
  const Real w_off = mode == OffDiagonalMode::exact ? numerical_radius(offdiag, tol).value
                                                    : block_offdiag_bound(b, c, tol).value;
  return block_2x2_formula(numerical_radius(a, tol).value, numerical_radius(d, tol).value, w_off);
}

/// The 2x2 partition of C(p) with a 1x1 leading block.
template <typename Real>
struct CompanionBlocks {
  ComplexMatrix<Real> a;  // 1 x 1, -a_{n-1}
  ComplexMatrix<Real> b;  // 1 x (n-1), (-a_{n-2}, ..., -a_0)
  ComplexMatrix<Real> c;  // (n-1) x 1, e_1
  ComplexMatrix<Real> d;  // shift of order n-1
};

template <typename Real>
CompanionBlocks<Real> companion_blocks(const MonicPolynomial<Real>& p) {
  const ComplexMatrix<Real> m = companion_matrix(p);
  const auto n = m.rows();
  return {m.topLeftCorner(1, 1), m.topRightCorner(1, n - 1), m.bottomLeftCorner(n - 1, 1),
          m.bottomRightCorner(n - 1, n - 1)};
}

/// Sum of |a_i|^2 for i = 0 .. n-2.
template <typename Real>
Real tail_energy(const MonicPolynomial<Real>& p) {
  Real s = 0;
  for (int i = 0; i + 1 < p.degree(); ++i) s += std::norm(p.coefficient(i));
  return s;
}

/// (|a_{n-1}| + cos(pi/n))/2 + sqrt((|a_{n-1}| - cos(pi/n))^2 + 2(1 + sum_{i<=n-2} |a_i|^2))/2
template <typename Real>
Real zero_bound_thm5(const MonicPolynomial<Real>& p) {
  const int n = p.degree();
  const Real lead = std::abs(p.coefficient(n - 1));
  const Real shift = std::cos(std::numbers::pi_v<Real> / Real(n));
  const Real diff = lead - shift;
  return (lead + shift) / Real(2) + std::sqrt(diff * diff + Real(2) * (Real(1) + tail_energy(p))) / Real(2);
}

/// 1 + max |a_i|
template <typename Real>
Real zero_bound_cauchy(const MonicPolynomial<Real>& p) {
  return Real(1) + p.max_abs_coefficient();
}

/// max(1, sum |a_i|)
template <typename Real>
Real zero_bound_montel(const MonicPolynomial<Real>& p) {
  Real s = 0;
  for (const auto& c : p.coefficients()) s += std::abs(c);
  return std::max(Real(1), s);
}

inline constexpr int kDurandKernerMaxIterations = 1000;

/// Orders roots by descending modulus, ties (to ~10 significant digits) by
/// ascending argument.
template <typename Real>
void sort_roots(std::vector<Complex<Real>>& roots) {
  auto key = [](const Complex<Real>& z) {
    const Real m = std::abs(z);
    const Real rounded = m == Real(0) ? Real(0) : std::round(m * Real(1e10)) / Real(1e10);
    return std::pair<Real, Real>(-rounded, std::arg(z));
  };
  std::stable_sort(roots.begin(), roots.end(), [&](const auto& x, const auto& y) { return key(x) < key(y); });
}

/// All n zeros by Durand-Kerner (Weierstrass) simultaneous iteration.
///
/// Starts from (0.4 + 0.9i)^k (1 + max|a_i|); stops once the largest update
/// falls below tol (1 + max|z_k|). Throws NoConvergence after
/// kDurandKernerMaxIterations sweeps.
template <typename Real>
std::vector<Complex<Real>> roots(const MonicPolynomial<Real>& p, Real tol = Real(kDefaultTol)) {
  const int n = p.degree();
  const Real scale = Real(1) + p.max_abs_coefficient();
  const Complex<Real> seed(Real(0.4), Real(0.9));
  std::vector<Complex<Real>> z(static_cast<std::size_t>(n));
  Complex<Real> power(1);
  for (auto& zk : z) {
    zk = power * scale;
    power *= seed;
  }

  const Real step_tol = detail::effective_tol(tol);
  for (int it = 0; it < kDurandKernerMaxIterations; ++it) {
    Real max_step = 0;
    Real max_mod = 0;
    for (std::size_t k = 0; k < z.size(); ++k) {
      Complex<Real> denom(1);
      for (std::size_t j = 0; j < z.size(); ++j)
        if (j != k) denom *= z[k] - z[j];
      if (denom == Complex<Real>(0)) denom = Complex<Real>(std::numeric_limits<Real>::epsilon());
      const Complex<Real> step = p(z[k]) / denom;
      z[k] -= step;
      max_step = std::max(max_step, std::abs(step));
      max_mod = std::max(max_mod, std::abs(z[k]));
    }
    if (!std::isfinite(max_step)) break;
    if (max_step <= step_tol * (Real(1) + max_mod)) {
      sort_roots(z);
      return z;
    }
  }
  std::ostringstream os;
  os << "roots: Durand-Kerner did not converge within " << kDurandKernerMaxIterations
     << " iterations (degree " << n << ")";
  throw NoConvergence(os.str());
}

template <typename Real>
struct ZeroBound {
  std::string method;
  Real bound = 0;
};

template <typename Real>
struct ZeroBoundTable {
  std::vector<ZeroBound<Real>> entries;  // ascending by bound
  Real max_root_modulus = 0;
  std::vector<Complex<Real>> roots;

  bool consistent(Real tol = Real(1e-8)) const {
    return std::all_of(entries.begin(), entries.end(),
                       [&](const auto& e) { return e.bound >= max_root_modulus - tol; });
  }
};

template <typename Real>
ZeroBoundTable<Real> compare_bounds(const MonicPolynomial<Real>& p, Real tol = Real(kDefaultTol)) {
  ZeroBoundTable<Real> table;
  table.entries = {{"thm5", zero_bound_thm5(p)}, {"cauchy", zero_bound_cauchy(p)}, {"montel", zero_bound_montel(p)}};
  std::stable_sort(table.entries.begin(), table.entries.end(), [](const auto& x, const auto& y) {
    if (x.bound != y.bound) return x.bound < y.bound;
    return x.method < y.method;
  });
  table.roots = roots(p, tol);
  for (const auto& r : table.roots) table.max_root_modulus = std::max(table.max_root_modulus, std::abs(r));
  return table;
}

}  // namespace nrb
