#include "gwf/symplectic.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <random>

namespace gwf {
namespace {

const cplx I(0.0, 1.0);

Eigen::MatrixXcd mat2(cplx a, cplx b, cplx c, cplx d) {
  Eigen::MatrixXcd m(2, 2);
  m << a, b, c, d;
  return m;
}

// Stack Re F (Im F)^j assembled independently of the library.
Eigen::MatrixXd stacked_generator(const Eigen::MatrixXcd& Q) {
  const Eigen::Index n = Q.rows();
  const Eigen::MatrixXcd F = symplectic_j(static_cast<int>(n / 2)).cast<cplx>() * Q;
  Eigen::MatrixXd out(n * n, n);
  Eigen::MatrixXd p = Eigen::MatrixXd::Identity(n, n);
  for (Eigen::Index j = 0; j < n; ++j) {
    out.middleRows(j * n, n) = F.real() * p;
    p = p * F.imag();
  }
  return out;
}

TEST(Hamiltonian, Validation) {
  EXPECT_THROW(make_hamiltonian(Eigen::MatrixXcd::Identity(3, 3)), std::invalid_argument);
  EXPECT_THROW(make_hamiltonian(mat2(1, 2, 0, 1)), std::invalid_argument);
  EXPECT_THROW(make_hamiltonian(mat2(-1, 0, 0, 1)), std::invalid_argument);
  EXPECT_NO_THROW(make_hamiltonian(mat2(0, 0, 0, 1)));
  EXPECT_NO_THROW(make_hamiltonian(mat2(I, 0.0, 0.0, -I)));
  EXPECT_THROW(harmonic_oscillator(3), std::invalid_argument);
}

TEST(HamiltonMap, HarmonicOscillator) {
  const HamiltonMap f = hamilton_map(harmonic_oscillator(1));
  EXPECT_EQ(f.re(), Eigen::MatrixXd::Zero(2, 2));
  EXPECT_EQ(f.im(), symplectic_j(1));
  const HamiltonMap f2 = hamilton_map(harmonic_oscillator(2));
  EXPECT_EQ(f2.im(), symplectic_j(2));
  Eigen::MatrixXd j(2, 2);
  j << 0, 1, -1, 0;
  EXPECT_EQ(symplectic_j(1), j);
}

TEST(SingularSpace, Examples) {
  EXPECT_EQ(singular_space(harmonic_oscillator(1)).dimension(), 2);
  EXPECT_EQ(singular_space(harmonic_oscillator(2)).dimension(), 4);
  EXPECT_EQ(singular_space(make_hamiltonian(Eigen::MatrixXcd::Identity(2, 2))).dimension(), 0);
  EXPECT_EQ(singular_space(make_hamiltonian(mat2(1.0, 0.0, 0.0, I))).dimension(), 0);
  const SingularSpace s = singular_space(make_hamiltonian(mat2(0, 0, 0, 1)));
  ASSERT_EQ(s.dimension(), 1);
  EXPECT_NEAR(s.basis(0, 0), 1.0, 1e-12);
  EXPECT_NEAR(s.basis(1, 0), 0.0, 1e-12);
}

// Brute force over unit vectors on a fine circle: the null directions of
// the stack are where its smallest norm is attained.
TEST(SingularSpace, BruteForceOracle) {
  for (const auto& Q : {mat2(0, 0, 0, 1), mat2(1, 0, 0, 0), mat2(1, 1, 1, 1), mat2(0.5, 0.5, 0.5, I + 0.5)}) {
    const Eigen::MatrixXd stack = stacked_generator(Q);
    std::vector<double> null_angles;
    for (int k = 0; k < 3600; ++k) {
      const double a = kPi * k / 3600.0;
      const Eigen::Vector2d v(std::cos(a), std::sin(a));
      if ((stack * v).norm() < 1e-9) null_angles.push_back(a);
    }
    const SingularSpace s = singular_space(make_hamiltonian(Q));
    ASSERT_EQ(s.dimension(), static_cast<Eigen::Index>(null_angles.size()));
    if (s.dimension() == 1) {
      const double a = null_angles[0];
      EXPECT_NEAR(std::abs(s.basis(0, 0) * std::cos(a) + s.basis(1, 0) * std::sin(a)), 1.0, 1e-12);
      EXPECT_GT(s.basis.col(0).cwiseAbs().maxCoeff(), 0.0);
    }
  }
}

// {q, q_bar} by central differences of q(X) = <X, Q X>.
cplx bracket_fd(const Eigen::MatrixXcd& Q, const Eigen::VectorXd& X) {
  const Eigen::Index n = X.size(), d = n / 2;
  const double eps = 1e-5;
  auto q = [&](const Eigen::VectorXd& Y) -> cplx { return (Y.cast<cplx>().transpose() * Q * Y.cast<cplx>())(0, 0); };
  Eigen::VectorXcd grad(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    Eigen::VectorXd p = X, m = X;
    p(i) += eps;
    m(i) -= eps;
    grad(i) = (q(p) - q(m)) / (2.0 * eps);
  }
  const Eigen::VectorXcd gbar = grad.conjugate();
  cplx out = 0.0;
  for (Eigen::Index i = 0; i < d; ++i) out += grad(d + i) * gbar(i) - grad(i) * gbar(d + i);
  return out;
}

TEST(PoissonBracket, MatchesFiniteDifferences) {
  std::mt19937_64 rng(3);
  std::normal_distribution<double> nd;
  Eigen::MatrixXcd q4 = Eigen::MatrixXcd::Zero(4, 4);
  q4.real() = Eigen::MatrixXd::Identity(4, 4);
  q4(0, 2) = q4(2, 0) = cplx(0.3, 0.7);
  q4(1, 3) = q4(3, 1) = cplx(0.0, -0.4);
  for (const auto& Q : {mat2(1.0, 0.0, 0.0, I), mat2(I, 0.0, 0.0, I), mat2(2.0, 0.5 * I, 0.5 * I, 1.0), q4}) {
    const Eigen::MatrixXcd B = poisson_bracket_form(make_hamiltonian(Q));
    EXPECT_LE((B - B.transpose()).norm(), 1e-14);
    for (int trial = 0; trial < 5; ++trial) {
      Eigen::VectorXd X(Q.rows());
      for (Eigen::Index i = 0; i < X.size(); ++i) X(i) = nd(rng);
      const cplx form = (X.cast<cplx>().transpose() * B * X.cast<cplx>())(0, 0);
      EXPECT_NEAR(std::abs(form - bracket_fd(Q, X)), 0.0, 1e-6);
    }
  }
  // q = x^2 + i xi^2 gives {q, q_bar} = 8 i x xi.
  const Eigen::MatrixXcd B = poisson_bracket_form(make_hamiltonian(mat2(1.0, 0.0, 0.0, I)));
  EXPECT_NEAR(std::abs(B(0, 1) - cplx(0.0, 4.0)), 0.0, 1e-14);
  EXPECT_FALSE(poisson_bracket_vanishes(make_hamiltonian(mat2(1.0, 0.0, 0.0, I))));
  EXPECT_TRUE(poisson_bracket_vanishes(harmonic_oscillator(1)));
  EXPECT_TRUE(poisson_bracket_vanishes(make_hamiltonian(mat2(0, 0, 0, 1))));
}

TEST(KerReF, AgreesWithSingularSpaceWhenBracketVanishes) {
  for (const auto& Q : {mat2(I, 0.0, 0.0, I), mat2(0, 0, 0, 1), mat2(1, 0, 0, 1)}) {
    const QuadraticHamiltonian q = make_hamiltonian(Q);
    const SingularSpace k = ker_re_f(q);
    EXPECT_TRUE(k.warning.empty());
    EXPECT_LE(subspace_distance(k.basis, singular_space(q).basis), 1e-12);
  }
  const QuadraticHamiltonian mixed = make_hamiltonian(mat2(1.0, 0.0, 0.0, I));
  const SingularSpace k = ker_re_f(mixed);
  EXPECT_FALSE(k.warning.empty());
  EXPECT_EQ(k.dimension(), 1);
  EXPECT_EQ(subspace_distance(k.basis, singular_space(mixed).basis), 1.0);
}

TEST(SubspaceDistance, Basics) {
  Eigen::MatrixXd a(2, 1), b(2, 1);
  a << 1, 0;
  b << -1, 0;
  EXPECT_NEAR(subspace_distance(a, b), 0.0, 1e-15);
  b << 0, 1;
  EXPECT_NEAR(subspace_distance(a, b), 1.0, 1e-15);
  EXPECT_EQ(subspace_distance(a, Eigen::MatrixXd::Identity(2, 2)), 1.0);
  EXPECT_EQ(subspace_distance(Eigen::MatrixXd(2, 0), Eigen::MatrixXd(2, 0)), 0.0);
}

TEST(Flow, ClosedFormMatchesExpm) {
  for (int dim : {1, 2}) {
    const QuadraticHamiltonian q = harmonic_oscillator(dim);
    for (double t : {0.0, 0.1, kPi / 8.0, 1.0, kPi, 4.2}) {
      EXPECT_LE((flow_matrix(q, t) - flow_matrix_expm(q, t)).norm(), 1e-10) << t;
      EXPECT_TRUE(is_symplectic(flow_matrix(q, t)));
    }
  }
  const Eigen::MatrixXd quarter = flow_matrix(harmonic_oscillator(1), kPi / 4.0);
  EXPECT_LE((quarter - symplectic_j(1)).norm(), 1e-15);
}

TEST(Flow, GroupLaw) {
  const QuadraticHamiltonian q = make_hamiltonian(I * mat2(2.0, 0.5, 0.5, 1.0));
  for (double s : {0.3, -1.1}) {
    for (double t : {0.7, 2.0}) {
      EXPECT_LE((flow_matrix(q, s) * flow_matrix(q, t) - flow_matrix(q, s + t)).norm(), 1e-10);
    }
  }
  EXPECT_TRUE(is_symplectic(flow_matrix(q, 0.9)));
}

TEST(Symplectic, Predicate) {
  EXPECT_TRUE(is_symplectic(Eigen::MatrixXd::Identity(2, 2)));
  EXPECT_TRUE(is_symplectic(symplectic_j(2)));
  Eigen::MatrixXd squeeze(2, 2);
  squeeze << 2.0, 0.0, 0.0, 0.5;
  EXPECT_TRUE(is_symplectic(squeeze));
  squeeze(1, 1) = 1.0;
  EXPECT_FALSE(is_symplectic(squeeze));
  EXPECT_FALSE(is_symplectic(Eigen::MatrixXd::Identity(3, 3)));
}

TEST(PropagateWf, HarmonicOscillatorRotates) {
  const QuadraticHamiltonian q = harmonic_oscillator(1);
  for (double t : {0.0, 0.2, kPi / 8.0, kPi / 4.0, 1.3}) {
    const DirectionSet out = propagate_wf_set(q, t, {{0.0, 1.0}, {0.0, -1.0}});
    ASSERT_EQ(out.size(), 2u);
    EXPECT_NEAR(out[0][0], std::sin(2.0 * t), 1e-12);
    EXPECT_NEAR(out[0][1], std::cos(2.0 * t), 1e-12);
    EXPECT_NEAR(out[1][0], -std::sin(2.0 * t), 1e-12);
  }
  EXPECT_THROW(propagate_wf_set(q, 0.1, {{1.0, 0.0, 0.0}}), std::invalid_argument);
}

TEST(PropagateWf, DampedDirectionsDisappear) {
  EXPECT_TRUE(propagate_wf_set(make_hamiltonian(mat2(1, 0, 0, 1)), 0.5, {{0.0, 1.0}}).empty());
  const DirectionSet kept = propagate_wf_set(make_hamiltonian(mat2(0, 0, 0, 1)), 0.5, {{1.0, 0.0}, {0.0, 1.0}});
  ASSERT_EQ(kept.size(), 1u);
  EXPECT_NEAR(kept[0][0], 1.0, 1e-12);
}

}  // namespace
}  // namespace gwf
