// Copyright 2026 The diracent Authors.
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include <Eigen/Eigenvalues>

#include <cmath>
#include <numbers>

#include "diracent/kinematics.hpp"
#include "test_support.hpp"

namespace diracent {
namespace {

using testing::EMat;
using testing::Rng;
using testing::to_eigen;

// H(p) = m sigma_z^(P) x I + sigma_x^(P) x p.sigma in (P) x (S) order.
ComplexMatrix free_hamiltonian(const FourMomentum& p) {
  return kron(pauli::z(), pauli::identity()) * Complex{p.mass()} + kron(pauli::x(), sigma_dot(p.p3()));
}

FourMomentum random_momentum(Rng& rng) {
  return FourMomentum::on_shell(rng.uniform(0.3, 3.0),
                                {rng.uniform(-4, 4), rng.uniform(-4, 4), rng.uniform(-4, 4)});
}

TEST(FourMomentumTest, RejectsUnphysicalInput) {
  EXPECT_THROW(FourMomentum(0.0, 1.0, {0, 0, 0}), DomainError);
  EXPECT_THROW(FourMomentum(-1.0, 1.0, {0, 0, 0}), DomainError);
  EXPECT_THROW(FourMomentum(1.0, 0.5, {0, 0, 0}), DomainError);
  EXPECT_THROW(FourMomentum(1.0, 2.0, {0, 0, 0}), DomainError);
  EXPECT_NO_THROW(FourMomentum(1.0, std::sqrt(2.0), {0, 0, 1}));
}

TEST(FourMomentumTest, FromRapidity) {
  const FourMomentum p = FourMomentum::from_rapidity(2.0, 1.0, {0, 0, 5});
  EXPECT_NEAR(p.energy(), 2.0 * std::cosh(1.0), 1e-14);
  EXPECT_NEAR(p.p3()[2], 2.0 * std::sinh(1.0), 1e-14);
  EXPECT_NEAR(p.reversed().p3()[2], -2.0 * std::sinh(1.0), 1e-14);
}

TEST(BoostSpecTest, Validation) {
  EXPECT_THROW(BoostSpec(NAN, kUnitZ), DomainError);
  EXPECT_THROW(BoostSpec(1.0, {0, 0, 2}), DomainError);
  const BoostSpec b = BoostSpec::in_xz_plane(0.3, std::numbers::pi / 2);
  EXPECT_NEAR(b.direction()[0], 1.0, 1e-15);
  EXPECT_NEAR(b.direction()[2], 0.0, 1e-15);
}

TEST(HelicitySpinor, IsEigenvectorOfHelicityOperator) {
  Rng rng(21);
  for (int t = 0; t < 50; ++t) {
    const FourMomentum p = random_momentum(rng);
    const Vec3 e = scaled(p.p3(), 1.0 / p.momentum());
    for (Helicity s : {Helicity::positive, Helicity::negative}) {
      const ComplexVector chi = helicity_spinor(p, s);
      const ComplexVector expected = chi * Complex{helicity_sign(s)};
      EXPECT_LT((sigma_dot(e).apply(chi) - expected).norm(), 1e-13);
      EXPECT_NEAR(chi.norm(), 1.0, 1e-14);
    }
  }
}

TEST(HelicitySpinor, AntiparallelAxisIsHandled) {
  const FourMomentum q = FourMomentum::on_shell(1.0, {0, 0, -2});
  const ComplexVector up = helicity_spinor(q, Helicity::positive);
  EXPECT_NEAR(std::abs(up[1]), 1.0, 1e-15);  // |z-> along -z
  const ComplexVector down = helicity_spinor(q, Helicity::negative);
  EXPECT_NEAR(std::abs(down[0]), 1.0, 1e-15);
}

TEST(HelicitySpinor, RestFrameUsesZAxis) {
  const FourMomentum r = FourMomentum::at_rest(1.0);
  EXPECT_EQ(helicity_spinor(r, Helicity::positive)[0], Complex(1.0));
  EXPECT_EQ(helicity_spinor(r, Helicity::negative)[1], Complex(1.0));
}

TEST(Bispinor, PositiveAndNegativeEnergyEigenvectors) {
  Rng rng(22);
  for (int t = 0; t < 50; ++t) {
    const FourMomentum p = random_momentum(rng);
    const ComplexMatrix h = free_hamiltonian(p);
    for (Helicity s : {Helicity::positive, Helicity::negative}) {
      const ComplexVector u = bispinor_u(p, s).amplitudes;
      EXPECT_LT((h.apply(u) - u * Complex{p.energy()}).norm(), 1e-12 * p.energy());
      // v(-p) is the negative-energy solution at momentum p.
      const ComplexVector v = bispinor_v(p.reversed(), s).amplitudes;
      EXPECT_LT((h.apply(v) + v * Complex{p.energy()}).norm(), 1e-12 * p.energy());
    }
  }
}

TEST(Bispinor, OrthonormalityAndCompleteness) {
  Rng rng(23);
  for (int t = 0; t < 50; ++t) {
    const FourMomentum p = random_momentum(rng);
    const ComplexVector u1 = bispinor_u(p, Helicity::positive).amplitudes;
    const ComplexVector u2 = bispinor_u(p, Helicity::negative).amplitudes;
    const ComplexVector v1 = bispinor_v(p.reversed(), Helicity::positive).amplitudes;
    const ComplexVector v2 = bispinor_v(p.reversed(), Helicity::negative).amplitudes;
    const ComplexVector all[] = {u1, u2, v1, v2};
    ComplexMatrix sum(4, 4);
    for (int i = 0; i < 4; ++i) {
      for (int j = 0; j < 4; ++j) EXPECT_NEAR(std::abs(inner(all[i], all[j]) - Complex(i == j)), 0.0, 1e-12);
      sum += ComplexMatrix::projector(all[i]);
    }
    EXPECT_LT(frobenius_distance(sum, ComplexMatrix::identity(4)), 1e-12);
  }
}

TEST(Bispinor, CompletenessFailsWithUnreversedNegativeEnergyMomentum) {
  const FourMomentum p = FourMomentum::from_rapidity(1.0, 1.0, kUnitZ);
  ComplexMatrix sum(4, 4);
  for (Helicity s : {Helicity::positive, Helicity::negative})
    sum += ComplexMatrix::projector(bispinor_u(p, s).amplitudes) +
           ComplexMatrix::projector(bispinor_v(p, s).amplitudes);
  EXPECT_GT(frobenius_distance(sum, ComplexMatrix::identity(4)), 0.1);
}

TEST(Bispinor, RestFrameIsPositiveParityTimesSpinor) {
  const FourMomentum r = FourMomentum::at_rest(1.0);
  const ComplexVector u = bispinor_u(r, Helicity::positive).amplitudes;
  EXPECT_NEAR(std::abs(u[0] - 1.0), 0.0, 1e-15);
  for (int k = 1; k < 4; ++k) EXPECT_EQ(u[k], Complex{});
}

TEST(LorentzMatrixTest, RestParticleBoostedAlongZ) {
  const double w = 0.7;
  const LorentzMatrix l = lorentz_matrix(BoostSpec(w, kUnitZ));
  // column 0 is the image of (m, 0, 0, 0) with m = 1
  EXPECT_NEAR(l[0][0], std::cosh(w), 1e-15);
  EXPECT_NEAR(l[3][0], std::sinh(w), 1e-15);
  EXPECT_NEAR(l[1][0], 0.0, 1e-15);
}

TEST(LorentzMatrixTest, PreservesMinkowskiMetric) {
  Rng rng(24);
  for (int t = 0; t < 20; ++t) {
    const LorentzMatrix l = lorentz_matrix(BoostSpec(rng.uniform(-3, 3), rng.unit_vector()));
    for (int a = 0; a < 4; ++a) {
      for (int b = 0; b < 4; ++b) {
        double g = 0.0;
        for (int k = 0; k < 4; ++k) g += (k == 0 ? 1.0 : -1.0) * l[k][a] * l[k][b];
        EXPECT_NEAR(g, a == b ? (a == 0 ? 1.0 : -1.0) : 0.0, 1e-11);
      }
    }
  }
}

TEST(BoostFourVector, MovingParticleBroughtToRest) {
  const FourMomentum p = FourMomentum::from_rapidity(1.0, 1.0, kUnitZ);
  const FourMomentum r = boost_four_vector(p, BoostSpec(1.0, kUnitZ));
  EXPECT_NEAR(r.energy(), 1.0, 1e-14);
  EXPECT_NEAR(r.momentum(), 0.0, 1e-14);
}

TEST(BoostFourVector, PreservesInvariantMass) {
  Rng rng(25);
  for (int t = 0; t < 50; ++t) {
    const FourMomentum p = random_momentum(rng);
    const FourMomentum q = boost_four_vector(p, BoostSpec(rng.uniform(-4, 4), rng.unit_vector()));
    const double m2 = q.energy() * q.energy() - dot(q.p3(), q.p3());
    EXPECT_NEAR(m2 / (p.mass() * p.mass()), 1.0, 1e-10);
  }
}

TEST(BispinorBoost, HermitianUnitDeterminantNotUnitary) {
  const ComplexMatrix s = bispinor_boost(BoostSpec(0.8, {0.6, 0.0, 0.8}));
  EXPECT_LT(s.hermiticity_defect(), 1e-15);
  EXPECT_NEAR(std::abs(to_eigen(s).determinant() - 1.0), 0.0, 1e-13);
  EXPECT_GT(frobenius_distance(s * s.adjoint(), ComplexMatrix::identity(4)), 0.1);
}

TEST(BispinorBoost, InverseAndCollinearComposition) {
  Rng rng(26);
  for (int t = 0; t < 50; ++t) {
    const Vec3 n = rng.unit_vector();
    const double w1 = rng.uniform(-3, 3), w2 = rng.uniform(-3, 3);
    const ComplexMatrix s1 = bispinor_boost(BoostSpec(w1, n));
    EXPECT_LT(frobenius_distance(s1 * bispinor_boost(BoostSpec(-w1, n)), ComplexMatrix::identity(4)), 1e-12);
    const ComplexMatrix s12 = bispinor_boost(BoostSpec(w1 + w2, n));
    EXPECT_LT(frobenius_distance(s1 * bispinor_boost(BoostSpec(w2, n)), s12) / s12.frobenius_norm(), 1e-12);
  }
}

TEST(BispinorBoost, CommutesWithGamma5) {
  Rng rng(27);
  for (int t = 0; t < 20; ++t) {
    const ComplexMatrix s = bispinor_boost(BoostSpec(rng.uniform(-5, 5), rng.unit_vector()));
    EXPECT_LE(commutator(gamma5(), s).max_abs(), 1e-14);
  }
}

TEST(BispinorBoost, MapsRestSpinorToReversedMomentumSolution) {
  Rng rng(28);
  for (int t = 0; t < 20; ++t) {
    const double w = rng.uniform(-3, 3);
    const Vec3 n = rng.unit_vector();
    const BoostSpec b(w, n);
    const FourMomentum rest = FourMomentum::at_rest(1.0);
    const FourMomentum moved = boost_four_vector(rest, b);
    EXPECT_NEAR(moved.p3()[0], -n[0] * std::sinh(w), 1e-12);
    ComplexVector chi{rng.normal(), Complex{rng.normal(), rng.normal()}};
    chi = chi.normalized();
    const ComplexVector boosted = bispinor_boost(b).apply(positive_energy_spinor(rest, chi));
    const ComplexVector expected = positive_energy_spinor(moved, chi) * Complex{std::sqrt(std::cosh(w))};
    EXPECT_LT((boosted - expected).norm(), 1e-12);
  }
}

TEST(Chirality, ProjectorsAreComplementaryIdempotents) {
  const ComplexMatrix p0 = chiral_projector(0), p1 = chiral_projector(1);
  EXPECT_LT(frobenius_distance(p0 * p0, p0), 1e-15);
  EXPECT_LT(frobenius_distance(p1 * p1, p1), 1e-15);
  EXPECT_LT((p0 * p1).max_abs(), 1e-15);
  EXPECT_LT(frobenius_distance(p0 + p1, ComplexMatrix::identity(4)), 1e-15);
  EXPECT_LT(frobenius_distance(gamma5() * gamma5(), ComplexMatrix::identity(4)), 1e-15);
  EXPECT_THROW(chiral_projector(2), DomainError);
}

TEST(HelicityLabels, Parsing) {
  EXPECT_EQ(helicity_from_label(1), Helicity::positive);
  EXPECT_EQ(helicity_from_label(2), Helicity::negative);
  EXPECT_THROW(helicity_from_label(0), DomainError);
}

}  // namespace
}  // namespace diracent
