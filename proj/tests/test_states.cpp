// Copyright 2026 The diracent Authors.
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include <cmath>

#include "diracent/states.hpp"
#include "test_support.hpp"

namespace diracent {
namespace {

using testing::EMat;
using testing::EVec;
using testing::Rng;
using testing::to_eigen;

constexpr double kInvRoot2 = 0.70710678118654752440;

void expect_term(const SuperpositionTerm& t, double c, double pa_z, Helicity ha, double pb_z, Helicity hb) {
  EXPECT_NEAR(std::abs(t.coefficient - Complex{c}), 0.0, 1e-15);
  EXPECT_NEAR(t.a.momentum.p3()[2], pa_z, 1e-14);
  EXPECT_EQ(t.a.helicity, ha);
  EXPECT_NEAR(t.b.momentum.p3()[2], pb_z, 1e-14);
  EXPECT_EQ(t.b.helicity, hb);
}

TEST(ScenarioRegistry, Psi1Terms) {
  const double p = std::sinh(1.0);
  const TwoParticleState st = make_psi1(1.0);
  const auto& t = st.terms();
  ASSERT_EQ(t.size(), 2u);
  expect_term(t[0], kInvRoot2, p, Helicity::positive, -p, Helicity::negative);
  expect_term(t[1], -kInvRoot2, -p, Helicity::negative, p, Helicity::positive);
}

TEST(ScenarioRegistry, Psi2Terms) {
  const double p = std::sinh(1.0);
  const TwoParticleState st = make_psi2(1.0);
  const auto& t = st.terms();
  ASSERT_EQ(t.size(), 2u);
  expect_term(t[0], kInvRoot2, p, Helicity::positive, -p, Helicity::positive);
  expect_term(t[1], -kInvRoot2, p, Helicity::negative, -p, Helicity::negative);
}

TEST(ScenarioRegistry, Psi3Terms) {
  const double p = std::sinh(1.0);
  const TwoParticleState st = make_psi3(1.0);
  const auto& t = st.terms();
  ASSERT_EQ(t.size(), 2u);
  expect_term(t[0], kInvRoot2, p, Helicity::positive, p, Helicity::negative);
  expect_term(t[1], -kInvRoot2, p, Helicity::negative, p, Helicity::positive);
}

TEST(ScenarioRegistry, MassScalesMomenta) {
  const TwoParticleState st = make_psi1(0.5, 2.0);
  const auto& t = st.terms();
  EXPECT_NEAR(t[0].a.momentum.energy(), 2.0 * std::cosh(0.5), 1e-14);
  EXPECT_THROW(make_psi1(-0.1), DomainError);
}

// Block-sum oracle: sum_ij c_i c_j* (u_i u_j^dag) x (u'_i u'_j^dag), normalized by its trace.
EMat block_sum_density(const TwoParticleState& st) {
  EMat rho = EMat::Zero(16, 16);
  for (const auto& ti : st.terms()) {
    for (const auto& tj : st.terms()) {
      const EVec ai = to_eigen(ti.a.bispinor()), aj = to_eigen(tj.a.bispinor());
      const EVec bi = to_eigen(ti.b.bispinor()), bj = to_eigen(tj.b.bispinor());
      rho += ti.coefficient * std::conj(tj.coefficient) *
             testing::eigen_kron(ai * aj.adjoint(), bi * bj.adjoint());
    }
  }
  return rho / rho.trace();
}

TEST(DensityMatrix, MatchesBlockSumOracle) {
  for (double w0 : {0.0, 0.4, 1.0, 2.5}) {
    std::vector<TwoParticleState> states{make_psi1(w0), make_psi2(w0), make_psi3(w0)};
    if (w0 > 0.0) states.push_back(make_psi2_exchange(w0));
    for (const auto& st : states) {
      EXPECT_LT((to_eigen(density_matrix(st)) - block_sum_density(st)).norm(), 1e-13) << w0;
    }
  }
}

TEST(DensityMatrix, RandomSuperpositionsArePureUnitTraceHermitian) {
  Rng rng(31);
  for (int t = 0; t < 20; ++t) {
    std::vector<SuperpositionTerm> terms;
    const int m = rng.integer(1, 4);
    for (int k = 0; k < m; ++k) {
      auto mom = [&] {
        return FourMomentum::on_shell(1.0, {rng.uniform(-2, 2), rng.uniform(-2, 2), rng.uniform(-2, 2)});
      };
      terms.push_back({{rng.normal(), rng.normal()},
                       {mom(), helicity_from_label(rng.integer(1, 2))},
                       {mom(), helicity_from_label(rng.integer(1, 2))}});
    }
    const TwoParticleState st(terms);
    const ComplexMatrix rho = density_matrix(st);
    EXPECT_NEAR(rho.trace().real(), 1.0, 1e-12);
    EXPECT_LT(rho.hermiticity_defect(), 1e-14);
    EXPECT_NEAR(std::pow(rho.frobenius_norm(), 2), 1.0, 1e-12);
    EXPECT_LT((to_eigen(rho) - block_sum_density(st)).norm(), 1e-12);
  }
}

// Exchange of the two 4-dimensional particle factors.
ComplexMatrix swap_particles() {
  ComplexMatrix s(16, 16);
  for (std::size_t a = 0; a < 4; ++a)
    for (std::size_t b = 0; b < 4; ++b) s(4 * b + a, 4 * a + b) = 1.0;
  return s;
}

TEST(Antisymmetry, ExchangeFormsAreOddUnderParticleSwap) {
  const ComplexMatrix swap = swap_particles();
  for (const auto& st : {make_psi1(1.0), make_psi3(1.0), make_psi2_exchange(1.0)}) {
    const ComplexVector psi = assemble_state_vector(st);
    EXPECT_LT((swap.apply(psi) + psi).norm(), 1e-14);
  }
}

TEST(Antisymmetry, Psi2FormsAgreeOnlyInTheRestLimit) {
  EXPECT_LT(frobenius_distance(density_matrix(make_psi2(1e-9)), density_matrix(make_psi2_exchange(1e-9))), 1e-8);
  EXPECT_THROW(density_matrix(make_psi2_exchange(0.0)), DegenerateStateError);
  EXPECT_GT(frobenius_distance(density_matrix(make_psi2(1.0)), density_matrix(make_psi2_exchange(1.0))), 0.1);
}

TEST(TwoParticleStateTest, ExchangedIsIdenticalForAntisymmetricStates) {
  const TwoParticleState st = make_psi1(1.0);
  EXPECT_LT(frobenius_distance(density_matrix(st), density_matrix(st.exchanged())), 1e-14);
}

TEST(TwoParticleStateTest, Errors) {
  EXPECT_THROW(TwoParticleState({}), DegenerateStateError);
  const FourMomentum p = FourMomentum::at_rest(1.0);
  const TwoParticleState cancel({{1.0, {p, Helicity::positive}, {p, Helicity::negative}},
                                 {-1.0, {p, Helicity::positive}, {p, Helicity::negative}}});
  EXPECT_THROW(assemble_state_vector(cancel), DegenerateStateError);
  const FourMomentum heavy = FourMomentum::at_rest(2.0);
  EXPECT_THROW(TwoParticleState({{1.0, {p, Helicity::positive}, {heavy, Helicity::positive}}}), DomainError);
}

TEST(Boost, ZeroRapidityIsIdentity) {
  const ComplexMatrix rho = density_matrix(make_psi2(1.0));
  const BoostedDensity b = boost_two_particle(rho, BoostSpec(0.0, kUnitZ));
  EXPECT_EQ(b.nu, 1.0);
  EXPECT_EQ(frobenius_distance(b.rho, rho), 0.0);
}

TEST(Boost, NormalizationMatchesSquaredOperatorTrace) {
  Rng rng(32);
  const ComplexMatrix rho = density_matrix(make_psi3(0.7));
  for (int t = 0; t < 20; ++t) {
    const BoostSpec b(rng.uniform(-4, 4), rng.unit_vector());
    const BoostedDensity out = boost_two_particle(rho, b);
    EXPECT_GT(out.nu, 0.0);
    EXPECT_NEAR(out.nu / boost_normalization(rho, b), 1.0, 1e-12);
    EXPECT_NEAR(out.rho.trace().real(), 1.0, 1e-12);
    EXPECT_LT(out.rho.hermiticity_defect(), 1e-12);
  }
}

TEST(Boost, InverseBoostRestoresState) {
  const ComplexMatrix rho = density_matrix(make_psi1(1.0));
  const BoostSpec b(1.3, {0.0, 0.6, 0.8});
  const ComplexMatrix back = boost_two_particle(boost_two_particle(rho, b).rho, b.inverse()).rho;
  EXPECT_LT(frobenius_distance(back, rho), 1e-12);
}

TEST(Boost, BringsPsi3PairToRest) {
  // Both particles share p = sinh(1) e_z, so a boost of rapidity 1 along z
  // leaves positive parity only.
  const ComplexMatrix rho = boost_two_particle(density_matrix(make_psi3(1.0)), BoostSpec(1.0, kUnitZ)).rho;
  const ComplexMatrix rest = density_matrix(make_psi3(0.0));
  EXPECT_LT(frobenius_distance(rho, rest), 1e-12);
}

TEST(Boost, RejectsWrongDimension) {
  EXPECT_THROW(boost_two_particle(ComplexMatrix::identity(4), BoostSpec(1.0, kUnitZ)), DimensionError);
}

TEST(Chiral, ProjectionIsPureAndInRange) {
  for (int f : {0, 1}) {
    for (int g : {0, 1}) {
      const ComplexMatrix rho = chiral_project(make_psi2(1.0), {f, g});
      EXPECT_NEAR(rho.trace().real(), 1.0, 1e-13);
      const ComplexMatrix proj = kron(chiral_projector(f), chiral_projector(g));
      EXPECT_LT(frobenius_distance(proj * rho * proj, rho), 1e-13);
    }
  }
  EXPECT_THROW(ChiralLabelPair(0, 3), DomainError);
}

}  // namespace
}  // namespace diracent
