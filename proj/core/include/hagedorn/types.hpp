#pragma once

#include <Eigen/Dense>
#include <complex>
#include <stdexcept>
#include <string>

namespace hagedorn {

using Real = double;
using Complex = std::complex<double>;

using RealMat = Eigen::MatrixXd;
using CplxMat = Eigen::MatrixXcd;
using RealVec = Eigen::VectorXd;
using CplxVec = Eigen::VectorXcd;

inline constexpr Complex kI{0.0, 1.0};

/// Absolute tolerances used by the structural checks. Values can be
/// overridden per call; these are the library-wide defaults.
struct Tolerances {
  Real symplectic = 1e-10;       // ||S^T J S - J||_max
  Real lubich = 1e-10;           // normalized-pair conditions
  Real ladder_rel = 1e-8;        // ladder detection, relative to ||X||_max
  Real siegel_symmetry = 1e-10;  // ||Z - Z^T||_max
  Real free_det = 1e-8;          // |det B| threshold for free factors
};

inline Tolerances& default_tolerances() {
  static Tolerances tol;
  return tol;
}

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Malformed or dimensionally inconsistent arguments.
struct InvalidInputError : Error {
  using Error::Error;
};

/// A (Q,P,q,p,hbar) set that violates one of the normalization conditions.
/// The message names the violated condition.
struct ParametrizationError : Error {
  using Error::Error;
};

/// Singular or numerically rank-deficient matrix where invertibility is required.
struct SingularityError : Error {
  using Error::Error;
};

/// Could not split a symplectic matrix into two free factors.
struct FactorizationError : Error {
  using Error::Error;
};

inline Real max_abs(const RealMat& m) { return m.cwiseAbs().maxCoeff(); }
inline Real max_abs(const CplxMat& m) { return m.cwiseAbs().maxCoeff(); }
inline Real max_abs(const RealVec& v) { return v.size() ? v.cwiseAbs().maxCoeff() : 0.0; }
inline Real max_abs(const CplxVec& v) { return v.size() ? v.cwiseAbs().maxCoeff() : 0.0; }

/// Principal square root, argument of the result in (-pi/2, pi/2].
inline Complex principal_sqrt(Complex z) { return std::sqrt(z); }

/// z^{-1/2} on the principal branch.
inline Complex principal_inv_sqrt(Complex z) { return 1.0 / std::sqrt(z); }

}  // namespace hagedorn
