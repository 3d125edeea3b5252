// Copyright 2026 The diracent Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cmath>
#include <utility>
#include <vector>

#include "diracent/errors.hpp"
#include "diracent/kinematics.hpp"
#include "diracent/tensor.hpp"

namespace diracent {

/// One particle's quantum numbers inside a superposition term.
struct Slot {
  FourMomentum momentum;
  Helicity helicity;

  ComplexVector bispinor() const { return bispinor_u(momentum, helicity).amplitudes; }
};

/// c_i |u(slot_a)>^A x |u(slot_b)>^B
struct SuperpositionTerm {
  Complex coefficient;
  Slot a;
  Slot b;
};

/// Superposition of two-particle bispinor products sharing a common mass.
/// Normalization is taken from the assembled vector, so terms need not be
/// orthogonal and coefficients need not be normalized.
class TwoParticleState {
 public:
  explicit TwoParticleState(std::vector<SuperpositionTerm> terms) : terms_(std::move(terms)) {
    if (terms_.empty()) throw DegenerateStateError("superposition has no terms");
    mass_ = terms_.front().a.momentum.mass();
    for (const auto& t : terms_)
      for (const Slot* s : {&t.a, &t.b})
        if (std::abs(s->momentum.mass() - mass_) > 1e-12 * mass_)
          throw DomainError("all momenta of a two-particle state must share one mass");
  }

  const std::vector<SuperpositionTerm>& terms() const noexcept { return terms_; }
  double mass() const noexcept { return mass_; }

  /// Slots exchanged and coefficients negated; identical for antisymmetric states.
  TwoParticleState exchanged() const {
    std::vector<SuperpositionTerm> t;
    t.reserve(terms_.size());
    for (const auto& term : terms_) t.push_back({-term.coefficient, term.b, term.a});
    return TwoParticleState(std::move(t));
  }

 private:
  std::vector<SuperpositionTerm> terms_;
  double mass_ = 1.0;
};

inline constexpr double kDegenerateNorm = 1e-14;

/// Unit-norm 16-component vector in (P)A (S)A (P)B (S)B order.
inline ComplexVector assemble_state_vector(const TwoParticleState& st) {
  ComplexVector psi(16);
  for (const auto& term : st.terms())
    psi += kron(term.a.bispinor(), term.b.bispinor()) * term.coefficient;
  const double n = psi.norm();
  if (n < kDegenerateNorm) throw DegenerateStateError("superposition has zero norm");
  return psi * Complex{1.0 / n};
}

inline ComplexMatrix density_matrix(const TwoParticleState& st) {
  return ComplexMatrix::projector(assemble_state_vector(st));
}

//===----------------------------------------------------------------------===//
// Anti-symmetric scenarios. p = -q = m sinh(omega0) e_z.
//===----------------------------------------------------------------------===//

namespace detail {

struct CenterOfMomentum {
  FourMomentum p;
  FourMomentum q;
};

inline CenterOfMomentum center_of_momentum(double omega0, double mass) {
  if (!(omega0 >= 0.0)) throw DomainError("omega0 must be non-negative");
  const FourMomentum p = FourMomentum::from_rapidity(mass, omega0, kUnitZ);
  return {p, p.reversed()};
}

inline constexpr Complex kHalfRoot2{0.70710678118654752440, 0.0};

}  // namespace detail

/// (u1(p) x u2(q) - u2(q) x u1(p)) / sqrt2: helicity superposition, spin-spin separable.
inline TwoParticleState make_psi1(double omega0, double mass = 1.0) {
  const auto [p, q] = detail::center_of_momentum(omega0, mass);
  return TwoParticleState({
      {detail::kHalfRoot2, {p, Helicity::positive}, {q, Helicity::negative}},
      {-detail::kHalfRoot2, {q, Helicity::negative}, {p, Helicity::positive}},
  });
}

/// (u1(p) x u1(q) - u2(p) x u2(q)) / sqrt2: each particle keeps a definite momentum.
inline TwoParticleState make_psi2(double omega0, double mass = 1.0) {
  const auto [p, q] = detail::center_of_momentum(omega0, mass);
  return TwoParticleState({
      {detail::kHalfRoot2, {p, Helicity::positive}, {q, Helicity::positive}},
      {-detail::kHalfRoot2, {p, Helicity::negative}, {q, Helicity::negative}},
  });
}

/// (u1(p) x u1(q) - u1(q) x u1(p)) / sqrt2, the exchange-antisymmetrized
/// positive-helicity pair. Approaches make_psi2 as omega0 -> 0+; away from rest
/// the parity factors of u1(q) and u2(p) differ. At omega0 = 0 exactly p = q
/// and the state vanishes (DegenerateStateError).
inline TwoParticleState make_psi2_exchange(double omega0, double mass = 1.0) {
  const auto [p, q] = detail::center_of_momentum(omega0, mass);
  return TwoParticleState({
      {detail::kHalfRoot2, {p, Helicity::positive}, {q, Helicity::positive}},
      {-detail::kHalfRoot2, {q, Helicity::positive}, {p, Helicity::positive}},
  });
}

/// (u1(p) x u2(p) - u2(p) x u1(p)) / sqrt2: both particles share momentum p.
inline TwoParticleState make_psi3(double omega0, double mass = 1.0) {
  const auto [p, q] = detail::center_of_momentum(omega0, mass);
  (void)q;
  return TwoParticleState({
      {detail::kHalfRoot2, {p, Helicity::positive}, {p, Helicity::negative}},
      {-detail::kHalfRoot2, {p, Helicity::negative}, {p, Helicity::positive}},
  });
}

//===----------------------------------------------------------------------===//
// Chiral projection
//===----------------------------------------------------------------------===//

struct ChiralLabelPair {
  int f = 0;
  int g = 0;

  ChiralLabelPair() = default;
  ChiralLabelPair(int f_, int g_) : f(f_), g(g_) {
    if ((f != 0 && f != 1) || (g != 0 && g != 1))
      throw DomainError("chiral labels must be 0 or 1");
  }
};

/// Renormalized pure density matrix of (P_f x P_g)|psi>.
inline ComplexMatrix chiral_project(const TwoParticleState& st, ChiralLabelPair labels) {
  const ComplexMatrix proj = kron(chiral_projector(labels.f), chiral_projector(labels.g));
  const ComplexVector projected = proj.apply(assemble_state_vector(st));
  const double n = projected.norm();
  if (n < kDegenerateNorm) throw DegenerateStateError("chiral projection annihilates the state");
  return ComplexMatrix::projector(projected * Complex{1.0 / n});
}

//===----------------------------------------------------------------------===//
// Two-particle boost
//===----------------------------------------------------------------------===//

struct BoostedDensity {
  ComplexMatrix rho;
  double nu;  // Tr[(S x S) rho (S x S)^dagger] before renormalization
};

inline ComplexMatrix two_particle_boost_operator(const BoostSpec& b) {
  const ComplexMatrix s = bispinor_boost(b);
  return kron(s, s);
}

/// rho' = (S x S) rho (S x S)^dagger / nu.
inline BoostedDensity boost_two_particle(const ComplexMatrix& rho, const BoostSpec& b) {
  if (rho.rows() != 16 || !rho.is_square()) throw DimensionError("expected a 16x16 density matrix");
  if (b.rapidity() == 0.0) return {rho, 1.0};
  const ComplexMatrix ss = two_particle_boost_operator(b);
  ComplexMatrix out = ss * rho * ss.adjoint();
  const double nu = out.trace().real();
  if (!(nu > 1e-14)) throw DegenerateStateError("boost normalization vanished");
  out *= Complex{1.0 / nu};
  return {std::move(out), nu};
}

/// Tr[(S x S)^2 rho]; equals the nu returned by boost_two_particle since S is Hermitian.
inline double boost_normalization(const ComplexMatrix& rho, const BoostSpec& b) {
  const ComplexMatrix ss = two_particle_boost_operator(b);
  return (ss * ss * rho).trace().real();
}

}  // namespace diracent
