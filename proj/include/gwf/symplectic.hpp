#pragma once

#include "gwf/geometry.hpp"
#include "gwf/grid.hpp"

#include <Eigen/Dense>

#include <string>

namespace gwf {

/// q(X) = <X, Q X> on R^{2d}, X = (x, xi), with Q complex symmetric and
/// Re Q positive semidefinite.
struct QuadraticHamiltonian {
  int dim = 1;
  Eigen::MatrixXcd Q;
};

/// Validated constructor; throws std::invalid_argument when Q is not
/// 2x2 or 4x4, not symmetric to 1e-12, or Re Q has an eigenvalue below
/// -1e-12.
QuadraticHamiltonian make_hamiltonian(const Eigen::MatrixXcd& Q);

/// Q = i I_{2d}: the harmonic oscillator |x|^2 + |xi|^2 times i.
QuadraticHamiltonian harmonic_oscillator(int dim);

/// [[0, I], [-I, 0]].
Eigen::MatrixXd symplectic_j(int dim);

struct HamiltonMap {
  Eigen::MatrixXcd F;

  Eigen::MatrixXd re() const { return F.real(); }
  Eigen::MatrixXd im() const { return F.imag(); }
};

/// F = J Q.
HamiltonMap hamilton_map(const QuadraticHamiltonian& q);

struct SingularSpace {
  /// Orthonormal columns; 2d x dim(S). Each column has its largest
  /// component positive; the full space is returned as the identity.
  Eigen::MatrixXd basis;
  double tol = 0.0;
  /// Set by ker_re_f when {q, q_bar} does not vanish.
  std::string warning;

  Eigen::Index dimension() const { return basis.cols(); }
};

inline constexpr double kNullSpaceTol = 1e-10;

/// Real null space of the stack Re F (Im F)^j, j = 0..2d-1. Singular
/// values at or below tol times the largest one count as zero.
SingularSpace singular_space(const QuadraticHamiltonian& q, double tol = kNullSpaceTol);

/// Symmetric matrix B with {q, q_bar}(X) = <X, B X>, where
/// {f, g} = <d_xi f, d_x g> - <d_x f, d_xi g>.
Eigen::MatrixXcd poisson_bracket_form(const QuadraticHamiltonian& q);

/// True iff ||B|| <= tol * max(1, ||Q||^2) (operator norms).
bool poisson_bracket_vanishes(const QuadraticHamiltonian& q, double tol = kNullSpaceTol);

/// Null space of Re F; equals S when the bracket vanishes. Otherwise the
/// result carries a warning and is only Ker Re F.
SingularSpace ker_re_f(const QuadraticHamiltonian& q, double tol = kNullSpaceTol);

/// Largest residual of projecting each basis onto the span of the other.
/// Zero iff the spans agree; 1 when the dimensions differ.
double subspace_distance(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b);

/// e^{2t Im F}. Closed form cos(2t) I + sin(2t) J for Q = iI, otherwise
/// Eigen's scaling-and-squaring Pade exponential.
Eigen::MatrixXd flow_matrix(const QuadraticHamiltonian& q, double t);

/// Always the generic matrix exponential; kept to cross-check the closed form.
Eigen::MatrixXd flow_matrix_expm(const QuadraticHamiltonian& q, double t);

/// Predicted generators of WF_G(e^{-t q^w} u): directions within angle `tol`
/// of S are projected onto S, moved by the flow, renormalized and kept when
/// still within `tol` of S. For Re Q = 0 this is the flow applied to dirs.
DirectionSet propagate_wf_set(const QuadraticHamiltonian& q, double t, const DirectionSet& dirs,
                              double tol = 1e-9);

/// ||M^T J M - J|| <= tol (Frobenius).
bool is_symplectic(const Eigen::MatrixXd& M, double tol = 1e-10);

}  // namespace gwf
