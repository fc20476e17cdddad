#pragma once

// Dense complex matrix helpers, a cyclic Jacobi eigensolver for Hermitian
// matrices and spectral functions of positive semidefinite matrices.
//
// Every function takes an arbitrary Eigen expression (real or complex) and
// returns a fresh ComplexMatrix<Real>; nothing is modified in place.

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "nrb/errors.hpp"

namespace nrb {

template <typename Real>
using Complex = std::complex<Real>;

template <typename Real>
using ComplexMatrix = Eigen::Matrix<std::complex<Real>, Eigen::Dynamic, Eigen::Dynamic>;

template <typename Real>
using ComplexVector = Eigen::Matrix<std::complex<Real>, Eigen::Dynamic, 1>;

template <typename Real>
using RealVector = Eigen::Matrix<Real, Eigen::Dynamic, 1>;

/// Relative tolerance used by the eigensolver and PSD checks unless overridden.
inline constexpr double kDefaultTol = 1e-12;

/// Sweep limit of the Jacobi eigensolver.
inline constexpr int kMaxJacobiSweeps = 100;

namespace detail {

inline std::string dims(Eigen::Index r, Eigen::Index c) {
  std::ostringstream os;
  os << r << "x" << c;
  return os.str();
}

template <typename Derived>
ComplexMatrix<typename Derived::RealScalar> to_complex(const Eigen::MatrixBase<Derived>& m) {
  using Real = typename Derived::RealScalar;
  return m.template cast<std::complex<Real>>();
}

template <typename Real>
void require_square(const ComplexMatrix<Real>& m, const char* what) {
  if (m.rows() != m.cols()) {
    throw DimensionMismatch(std::string(what) + ": expected a square matrix, got " +
                            dims(m.rows(), m.cols()));
  }
}

template <typename Real>
bool all_finite(const ComplexMatrix<Real>& m) {
  for (Eigen::Index j = 0; j < m.cols(); ++j) {
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
      if (!std::isfinite(m(i, j).real()) || !std::isfinite(m(i, j).imag())) return false;
    }
  }
  return true;
}

template <typename Real>
Real effective_tol(Real tol) {
  return std::max(tol, Real(4) * std::numeric_limits<Real>::epsilon());
}

}  // namespace detail

/// Real eigenvalues (ascending) and unit eigenvectors (columns) of a Hermitian matrix.
template <typename Real>
struct EigenDecomposition {
  RealVector<Real> eigenvalues;
  ComplexMatrix<Real> eigenvectors;
  int sweeps = 0;

  Eigen::Index size() const { return eigenvalues.size(); }
  Real min() const { return eigenvalues.size() ? eigenvalues(0) : Real(0); }
  Real max() const { return eigenvalues.size() ? eigenvalues(eigenvalues.size() - 1) : Real(0); }
};

template <typename Derived>
auto adjoint(const Eigen::MatrixBase<Derived>& m) {
  return ComplexMatrix<typename Derived::RealScalar>(detail::to_complex(m).adjoint());
}

template <typename DerivedA, typename DerivedB>
auto multiply(const Eigen::MatrixBase<DerivedA>& a, const Eigen::MatrixBase<DerivedB>& b) {
  using Real = typename DerivedA::RealScalar;
  if (a.cols() != b.rows()) {
    throw DimensionMismatch("multiply: " + detail::dims(a.rows(), a.cols()) + " times " +
                            detail::dims(b.rows(), b.cols()));
  }
  return ComplexMatrix<Real>(detail::to_complex(a) * detail::to_complex(b));
}

/// Entrywise a*A + b*B.
template <typename Real, typename DerivedA, typename DerivedB>
ComplexMatrix<Real> linear_combination(Real a, const Eigen::MatrixBase<DerivedA>& lhs, Real b,
                                       const Eigen::MatrixBase<DerivedB>& rhs) {
  if (lhs.rows() != rhs.rows() || lhs.cols() != rhs.cols()) {
    throw DimensionMismatch("linear_combination: " + detail::dims(lhs.rows(), lhs.cols()) +
                            " vs " + detail::dims(rhs.rows(), rhs.cols()));
  }
  return a * lhs.template cast<std::complex<Real>>() + b * rhs.template cast<std::complex<Real>>();
}

/// n x n matrix with ones on the subdiagonal.
template <typename Real = double>
ComplexMatrix<Real> shift_matrix(Eigen::Index n) {
  ComplexMatrix<Real> s = ComplexMatrix<Real>::Zero(n, n);
  for (Eigen::Index i = 1; i < n; ++i) s(i, i - 1) = Real(1);
  return s;
}

namespace detail {

// One cyclic Jacobi solve. When `vectors` is null the rotations are not
// accumulated. When they are, one extra sweep is run after the threshold is
// met so the reconstruction U diag(A) U^* is accurate to rounding rather than
// to tol. Returns the number of sweeps used.
template <typename Real>
int jacobi_diagonalize(ComplexMatrix<Real>& a, ComplexMatrix<Real>* vectors, Real tol) {
  const Eigen::Index n = a.rows();
  const Real threshold = effective_tol(tol) * a.norm();
  if (vectors) vectors->setIdentity(n, n);

  auto off_norm = [&] {
    Real s = 0;
    for (Eigen::Index j = 0; j < n; ++j)
      for (Eigen::Index i = 0; i < n; ++i)
        if (i != j) s += std::norm(a(i, j));
    return std::sqrt(s);
  };

  bool polishing = false;
  for (int sweep = 0; sweep <= kMaxJacobiSweeps; ++sweep) {
    if (polishing) return sweep;
    if (off_norm() <= threshold) {
      if (!vectors || sweep == 0) return sweep;
      polishing = true;
    } else if (sweep == kMaxJacobiSweeps) {
      break;
    }

    for (Eigen::Index p = 0; p + 1 < n; ++p) {
      for (Eigen::Index q = p + 1; q < n; ++q) {
        const std::complex<Real> g = a(p, q);
        const Real mag = std::abs(g);
        if (mag == Real(0)) continue;

        const Real app = a(p, p).real();
        const Real aqq = a(q, q).real();
        const Real theta = (aqq - app) / (Real(2) * mag);
        Real t;
        if (std::abs(theta) > Real(1) / std::sqrt(std::numeric_limits<Real>::epsilon())) {
          t = Real(1) / (Real(2) * theta);
        } else {
          t = (theta >= 0 ? Real(1) : Real(-1)) / (std::abs(theta) + std::sqrt(theta * theta + 1));
        }
        const Real c = Real(1) / std::sqrt(t * t + 1);
        const Real s = t * c;
        const std::complex<Real> phase = g / mag;
        const std::complex<Real> cphase = std::conj(phase);

        // A <- G^* A G with G = [[c, s], [-s conj(phase), c conj(phase)]] on (p, q).
        for (Eigen::Index k = 0; k < n; ++k) {
          const auto akp = a(k, p);
          const auto akq = a(k, q);
          a(k, p) = c * akp - s * cphase * akq;
          a(k, q) = s * akp + c * cphase * akq;
        }
        for (Eigen::Index k = 0; k < n; ++k) {
          const auto apk = a(p, k);
          const auto aqk = a(q, k);
          a(p, k) = c * apk - s * phase * aqk;
          a(q, k) = s * apk + c * phase * aqk;
        }
        a(p, q) = a(q, p) = Real(0);
        a(p, p) = app - t * mag;
        a(q, q) = aqq + t * mag;

        if (vectors) {
          auto& v = *vectors;
          for (Eigen::Index k = 0; k < n; ++k) {
            const auto vkp = v(k, p);
            const auto vkq = v(k, q);
            v(k, p) = c * vkp - s * cphase * vkq;
            v(k, q) = s * vkp + c * cphase * vkq;
          }
        }
      }
    }
  }
  std::ostringstream os;
  os << "hermitian_eigen: no convergence after " << kMaxJacobiSweeps << " sweeps (n = " << n << ")";
  throw NoConvergence(os.str());
}

template <typename Real>
ComplexMatrix<Real> checked_hermitian_part(const ComplexMatrix<Real>& h, Real tol, const char* what) {
  require_square(h, what);
  if (!all_finite(h)) throw NumericalError(std::string(what) + ": non-finite entry");
  const Real fro = h.norm();
  const Real asym = (h - h.adjoint()).norm();
  if (asym > effective_tol(tol) * (Real(1) + fro)) {
    std::ostringstream os;
    os << what << ": matrix is not Hermitian (||H - H*||_F = " << asym << ")";
    throw NotHermitian(os.str());
  }
  return (h + h.adjoint()) / Real(2);
}

}  // namespace detail

/// Eigendecomposition of a Hermitian matrix by cyclic complex Jacobi rotations.
///
/// Throws NotHermitian when ||H - H*||_F > tol (1 + ||H||_F) and NoConvergence
/// when the off-diagonal mass does not drop below tol ||H||_F within
/// kMaxJacobiSweeps sweeps.
template <typename Derived>
EigenDecomposition<typename Derived::RealScalar> hermitian_eigen(
    const Eigen::MatrixBase<Derived>& h,
    typename Derived::RealScalar tol = typename Derived::RealScalar(kDefaultTol)) {
  using Real = typename Derived::RealScalar;
  ComplexMatrix<Real> a = detail::checked_hermitian_part(detail::to_complex(h), tol, "hermitian_eigen");
  const Eigen::Index n = a.rows();

  ComplexMatrix<Real> v;
  const int sweeps = detail::jacobi_diagonalize(a, &v, tol);

  std::vector<Eigen::Index> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), Eigen::Index{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](Eigen::Index i, Eigen::Index j) { return a(i, i).real() < a(j, j).real(); });

  EigenDecomposition<Real> out;
  out.sweeps = sweeps;
  out.eigenvalues.resize(n);
  out.eigenvectors.resize(n, n);
  for (Eigen::Index k = 0; k < n; ++k) {
    const auto src = order[static_cast<std::size_t>(k)];
    out.eigenvalues(k) = a(src, src).real();
    out.eigenvectors.col(k) = v.col(src);
  }
  return out;
}

/// Eigenvalues only (ascending); skips eigenvector accumulation.
template <typename Derived>
RealVector<typename Derived::RealScalar> hermitian_eigenvalues(
    const Eigen::MatrixBase<Derived>& h,
    typename Derived::RealScalar tol = typename Derived::RealScalar(kDefaultTol)) {
  using Real = typename Derived::RealScalar;
  ComplexMatrix<Real> a =
      detail::checked_hermitian_part(detail::to_complex(h), tol, "hermitian_eigenvalues");
  detail::jacobi_diagonalize<Real>(a, nullptr, tol);
  RealVector<Real> values = a.diagonal().real();
  std::sort(values.data(), values.data() + values.size());
  return values;
}

/// U f(Lambda) U^* for an existing decomposition; no clamping.
template <typename Real, typename F>
ComplexMatrix<Real> recompose(const EigenDecomposition<Real>& eig, F&& f) {
  const auto& u = eig.eigenvectors;
  ComplexMatrix<Real> scaled = u;
  for (Eigen::Index k = 0; k < eig.size(); ++k) scaled.col(k) *= f(eig.eigenvalues(k));
  return scaled * u.adjoint();
}

/// Clamps roundoff-level negative eigenvalues of a PSD decomposition to zero.
/// Eigenvalues below -tol * scale mean the matrix is genuinely indefinite.
template <typename Real>
EigenDecomposition<Real> clamp_psd(EigenDecomposition<Real> eig, Real scale, Real tol,
                                   const char* what = "psd_function") {
  const Real floor = -detail::effective_tol(tol) * scale;
  for (Eigen::Index k = 0; k < eig.size(); ++k) {
    Real& lambda = eig.eigenvalues(k);
    if (lambda < floor) {
      std::ostringstream os;
      os << what << ": matrix is not positive semidefinite (eigenvalue " << lambda << ")";
      throw NotPsd(os.str());
    }
    if (lambda < Real(0)) lambda = Real(0);
  }
  return eig;
}

/// Spectral function of a positive semidefinite matrix: U f(max(Lambda, 0)) U^*.
template <typename Derived, typename F>
ComplexMatrix<typename Derived::RealScalar> psd_function(
    const Eigen::MatrixBase<Derived>& h, F&& f,
    typename Derived::RealScalar tol = typename Derived::RealScalar(kDefaultTol)) {
  auto eig = clamp_psd(hermitian_eigen(h, tol), h.norm(), tol);
  return recompose(eig, std::forward<F>(f));
}

/// H^p for PSD H and p >= 0; H^0 is the identity.
template <typename Real>
ComplexMatrix<Real> psd_power(const EigenDecomposition<Real>& psd_eig, Real p) {
  if (p < Real(0)) throw DomainError("psd_power: negative exponent");
  if (p == Real(0)) {
    const auto n = psd_eig.size();
    return ComplexMatrix<Real>::Identity(n, n);
  }
  return recompose(psd_eig, [p](Real x) { return std::pow(x, p); });
}

template <typename Derived>
ComplexMatrix<typename Derived::RealScalar> psd_power(
    const Eigen::MatrixBase<Derived>& h, typename Derived::RealScalar p,
    typename Derived::RealScalar tol = typename Derived::RealScalar(kDefaultTol)) {
  return psd_power(clamp_psd(hermitian_eigen(h, tol), h.norm(), tol), p);
}

/// Spectral norm of a Hermitian matrix, max |lambda|.
template <typename Derived>
typename Derived::RealScalar hermitian_norm(
    const Eigen::MatrixBase<Derived>& h,
    typename Derived::RealScalar tol = typename Derived::RealScalar(kDefaultTol)) {
  if (h.size() == 0) return 0;
  const auto values = hermitian_eigenvalues(h, tol);
  return std::max(std::abs(values(0)), std::abs(values(values.size() - 1)));
}

/// |M|^2 = M^* M.
template <typename Derived>
auto abs_squared(const Eigen::MatrixBase<Derived>& m) {
  const auto c = detail::to_complex(m);
  return ComplexMatrix<typename Derived::RealScalar>(c.adjoint() * c);
}

/// |M| = (M^* M)^{1/2}.
template <typename Derived>
ComplexMatrix<typename Derived::RealScalar> abs_op(
    const Eigen::MatrixBase<Derived>& m,
    typename Derived::RealScalar tol = typename Derived::RealScalar(kDefaultTol)) {
  using Real = typename Derived::RealScalar;
  return psd_function(abs_squared(m), [](Real x) { return std::sqrt(x); }, tol);
}

/// Largest singular value, sqrt(lambda_max(M^* M)).
template <typename Derived>
typename Derived::RealScalar operator_norm(
    const Eigen::MatrixBase<Derived>& m,
    typename Derived::RealScalar tol = typename Derived::RealScalar(kDefaultTol)) {
  using Real = typename Derived::RealScalar;
  if (m.size() == 0) return 0;
  // Use the smaller Gram matrix for rectangular inputs.
  const auto c = detail::to_complex(m);
  const ComplexMatrix<Real> gram =
      c.rows() < c.cols() ? ComplexMatrix<Real>(c * c.adjoint()) : ComplexMatrix<Real>(c.adjoint() * c);
  const auto values = hermitian_eigenvalues(gram, tol);
  return std::sqrt(std::max(Real(0), values(values.size() - 1)));
}

}  // namespace nrb
