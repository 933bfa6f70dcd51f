#include "gwf/symplectic.hpp"

#include <unsupported/Eigen/MatrixFunctions>

#include <cmath>
#include <stdexcept>

namespace gwf {

namespace {

Eigen::MatrixXd canonical_columns(Eigen::MatrixXd basis) {
  for (Eigen::Index c = 0; c < basis.cols(); ++c) {
    Eigen::Index arg = 0;
    basis.col(c).cwiseAbs().maxCoeff(&arg);
    if (basis(arg, c) < 0.0) basis.col(c) *= -1.0;
  }
  return basis;
}

SingularSpace null_space(const Eigen::MatrixXd& stacked, Eigen::Index n, double tol) {
  SingularSpace s;
  s.tol = tol;
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(stacked, Eigen::ComputeFullV);
  const Eigen::VectorXd& sv = svd.singularValues();
  const double top = sv.size() ? sv(0) : 0.0;
  if (top == 0.0) {
    s.basis = Eigen::MatrixXd::Identity(n, n);
    return s;
  }
  Eigen::Index rank = 0;
  while (rank < sv.size() && sv(rank) > tol * top) ++rank;
  if (rank == 0) {
    s.basis = Eigen::MatrixXd::Identity(n, n);
    return s;
  }
  s.basis = canonical_columns(svd.matrixV().rightCols(n - rank));
  return s;
}

bool is_harmonic_oscillator(const QuadraticHamiltonian& q) {
  const auto n = q.Q.rows();
  const Eigen::MatrixXcd target = cplx(0.0, 1.0) * Eigen::MatrixXcd::Identity(n, n);
  return (q.Q - target).cwiseAbs().maxCoeff() <= 1e-15;
}

}  // namespace

QuadraticHamiltonian make_hamiltonian(const Eigen::MatrixXcd& Q) {
  if (Q.rows() != Q.cols() || (Q.rows() != 2 && Q.rows() != 4)) {
    throw std::invalid_argument("Q must be 2x2 (d = 1) or 4x4 (d = 2)");
  }
  if (!Q.allFinite()) throw std::invalid_argument("Q has non-finite entries");
  if ((Q - Q.transpose()).norm() > 1e-12) throw std::invalid_argument("Q must be symmetric");
  const Eigen::MatrixXd re = Q.real();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(0.5 * (re + re.transpose()), Eigen::EigenvaluesOnly);
  if (eig.eigenvalues().minCoeff() < -1e-12) {
    throw std::invalid_argument("Re Q must be positive semidefinite");
  }
  return {static_cast<int>(Q.rows() / 2), Q};
}

QuadraticHamiltonian harmonic_oscillator(int dim) {
  if (dim != 1 && dim != 2) throw std::invalid_argument("dim must be 1 or 2");
  return {dim, cplx(0.0, 1.0) * Eigen::MatrixXcd::Identity(2 * dim, 2 * dim)};
}

Eigen::MatrixXd symplectic_j(int dim) {
  Eigen::MatrixXd J = Eigen::MatrixXd::Zero(2 * dim, 2 * dim);
  J.topRightCorner(dim, dim).setIdentity();
  J.bottomLeftCorner(dim, dim) = -Eigen::MatrixXd::Identity(dim, dim);
  return J;
}

HamiltonMap hamilton_map(const QuadraticHamiltonian& q) {
  return {symplectic_j(q.dim).cast<cplx>() * q.Q};
}

SingularSpace singular_space(const QuadraticHamiltonian& q, double tol) {
  const HamiltonMap f = hamilton_map(q);
  const Eigen::Index n = 2 * q.dim;
  const Eigen::MatrixXd re = f.re(), im = f.im();
  Eigen::MatrixXd stacked(n * n, n);
  Eigen::MatrixXd power = Eigen::MatrixXd::Identity(n, n);
  for (Eigen::Index j = 0; j < n; ++j) {
    stacked.middleRows(j * n, n) = re * power;
    power = power * im;
  }
  return null_space(stacked, n, tol);
}

Eigen::MatrixXcd poisson_bracket_form(const QuadraticHamiltonian& q) {
  // grad q = 2 Q X, grad q_bar = 2 conj(Q) X and {f, g} = <J grad f, grad g>,
  // so the form is 4 Q^T J^T conj(Q) = -4 Q J conj(Q), symmetrized.
  const Eigen::MatrixXcd J = symplectic_j(q.dim).cast<cplx>();
  const Eigen::MatrixXcd m = -4.0 * q.Q * J * q.Q.conjugate();
  return 0.5 * (m + m.transpose());
}

bool poisson_bracket_vanishes(const QuadraticHamiltonian& q, double tol) {
  const Eigen::MatrixXcd b = poisson_bracket_form(q);
  Eigen::JacobiSVD<Eigen::MatrixXcd> sb(b), sq(q.Q);
  const double qn = sq.singularValues()(0);
  return sb.singularValues()(0) <= tol * std::max(1.0, qn * qn);
}

SingularSpace ker_re_f(const QuadraticHamiltonian& q, double tol) {
  SingularSpace s = null_space(hamilton_map(q).re(), 2 * q.dim, tol);
  if (!poisson_bracket_vanishes(q, tol)) {
    s.warning = "{q, q_bar} does not vanish: Ker(Re F) may differ from the singular space";
  }
  return s;
}

double subspace_distance(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b) {
  if (a.cols() != b.cols()) return 1.0;
  if (a.cols() == 0) return 0.0;
  double worst = 0.0;
  for (Eigen::Index c = 0; c < a.cols(); ++c) {
    worst = std::max(worst, (a.col(c) - b * (b.transpose() * a.col(c))).norm());
  }
  for (Eigen::Index c = 0; c < b.cols(); ++c) {
    worst = std::max(worst, (b.col(c) - a * (a.transpose() * b.col(c))).norm());
  }
  return worst;
}

Eigen::MatrixXd flow_matrix(const QuadraticHamiltonian& q, double t) {
  if (!is_harmonic_oscillator(q)) return flow_matrix_expm(q, t);
  const Eigen::Index n = 2 * q.dim;
  return std::cos(2.0 * t) * Eigen::MatrixXd::Identity(n, n) + std::sin(2.0 * t) * symplectic_j(q.dim);
}

Eigen::MatrixXd flow_matrix_expm(const QuadraticHamiltonian& q, double t) {
  const Eigen::MatrixXd a = 2.0 * t * hamilton_map(q).im();
  return a.exp();
}

DirectionSet propagate_wf_set(const QuadraticHamiltonian& q, double t, const DirectionSet& dirs, double tol) {
  const SingularSpace s = singular_space(q);
  DirectionSet out;
  if (s.dimension() == 0) return out;
  const Eigen::MatrixXd& B = s.basis;
  const Eigen::MatrixXd M = flow_matrix(q, t);
  const auto n = static_cast<std::size_t>(2 * q.dim);
  // Rounding of the projection is absorbed below 1e-12.
  const double max_sin = std::max(std::sin(tol), 1e-12);
  for (const auto& d : dirs) {
    if (d.size() != n) throw std::invalid_argument("direction has the wrong dimension");
    const Eigen::VectorXd v = Eigen::Map<const Eigen::VectorXd>(d.data(), static_cast<Eigen::Index>(n));
    const Eigen::VectorXd p = B * (B.transpose() * v);
    if ((v - p).norm() > max_sin * v.norm()) continue;
    Eigen::VectorXd w = M * p;
    w.normalize();
    if ((w - B * (B.transpose() * w)).norm() > max_sin) continue;
    out.emplace_back(w.data(), w.data() + w.size());
  }
  return out;
}

bool is_symplectic(const Eigen::MatrixXd& M, double tol) {
  if (M.rows() != M.cols() || (M.rows() != 2 && M.rows() != 4)) return false;
  const Eigen::MatrixXd J = symplectic_j(static_cast<int>(M.rows() / 2));
  return (M.transpose() * J * M - J).norm() <= tol;
}

}  // namespace gwf
