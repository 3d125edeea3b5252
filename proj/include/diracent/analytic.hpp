// Copyright 2026 The diracent Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

// Closed-form boosted Bloch vectors.
//
// For states whose slot-A terms share one momentum p and slot-B terms share
// q, every block |u_i><u_j| factorizes into a parity block P_ij (a 2x2 matrix
// fixed by E, m, |p| and the two helicity signs) times the spin block
// Xi_ij = |chi_i><chi_j|. The boost S = C - S' sigma_x x n.sigma with
// C = cosh(w/2), S' = sinh(w/2) then acts block by block:
//
//   Tr_S[S (P x Xi) S] = C^2 Tr[Xi] P - C S' Tr[n.sigma Xi] {sigma_x, P}
//                        + S'^2 Tr[Xi] sigma_x P sigma_x
//   Tr_P[S (P x Xi) S] = C^2 Tr[P] Xi - C S' Tr[sigma_x P] {n.sigma, Xi}
//                        + S'^2 Tr[P] n.sigma Xi n.sigma
//   mu_ij = Tr[S (P x Xi) S] = cosh w Tr[P] Tr[Xi] - sinh w Tr[sigma_x P] Tr[n.sigma Xi]
//
// Only scalars (traces against Pauli matrices) enter the sums below; no 16x16
// matrix is ever formed, which keeps this path independent of the numeric
// boost -> partial trace -> Bloch pipeline it is checked against.

#include <array>
#include <cmath>
#include <map>
#include <vector>

#include "diracent/entanglement.hpp"
#include "diracent/errors.hpp"
#include "diracent/kinematics.hpp"
#include "diracent/states.hpp"

namespace diracent {

/// Pauli coefficients of P_ij = phi_i phi_j^dagger, phi the parity factor of
/// a helicity bispinor: trace and Tr[sigma_k P].
struct ParityBlock {
  double trace;
  double x;
  Complex y;
  double z;
};

/// h_i, h_j are the helicity signs (+1 / -1) of the two bispinors.
inline ParityBlock parity_block(const FourMomentum& k, double h_i, double h_j) {
  const double e = k.energy(), m = k.mass(), pk = k.momentum();
  const double hh = h_i * h_j;
  return {((e + m) + hh * (e - m)) / (2.0 * e), pk * (h_i + h_j) / (2.0 * e),
          kI * pk * (h_j - h_i) / (2.0 * e), ((e + m) - hh * (e - m)) / (2.0 * e)};
}

namespace detail {

// <chi_j| M |chi_i> = Tr[M |chi_i><chi_j|]
inline Complex block_trace(const ComplexVector& chi_i, const ComplexVector& chi_j,
                           const ComplexMatrix& m) {
  return inner(chi_j, m.apply(chi_i));
}

struct SlotBlock {
  ParityBlock parity;
  Complex xi_trace;                  // Tr[Xi]
  Complex xi_n;                      // Tr[n.sigma Xi]
  std::array<Complex, 3> xi_k;       // Tr[sigma_k Xi]
  std::array<Complex, 3> xi_nkn;     // Tr[sigma_k n.sigma Xi n.sigma]
};

inline SlotBlock slot_block(const Slot& si, const Slot& sj, const ComplexMatrix& n_sigma) {
  const ComplexVector chi_i = helicity_spinor(si.momentum, si.helicity);
  const ComplexVector chi_j = helicity_spinor(sj.momentum, sj.helicity);
  const ComplexMatrix paulis[3] = {pauli::x(), pauli::y(), pauli::z()};
  SlotBlock b{parity_block(si.momentum, helicity_sign(si.helicity), helicity_sign(sj.helicity)),
              inner(chi_j, chi_i),
              block_trace(chi_i, chi_j, n_sigma),
              {},
              {}};
  for (int k = 0; k < 3; ++k) {
    b.xi_k[k] = block_trace(chi_i, chi_j, paulis[k]);
    b.xi_nkn[k] = block_trace(chi_i, chi_j, n_sigma * paulis[k] * n_sigma);
  }
  return b;
}

struct BoostScalars {
  double ch, sh;        // cosh w, sinh w
  double ch2, sh2;      // cosh^2(w/2), sinh^2(w/2)
  Vec3 n;
};

// Tr of the boosted block.
inline Complex mu(const SlotBlock& b, const BoostScalars& w) {
  return w.ch * b.parity.trace * b.xi_trace - w.sh * b.parity.x * b.xi_n;
}

// Tr[sigma_k Tr_P(boosted block)]
inline Complex spin_component(const SlotBlock& b, const BoostScalars& w, int k) {
  return w.ch2 * b.parity.trace * b.xi_k[k] - w.sh * b.parity.x * w.n[k] * b.xi_trace +
         w.sh2 * b.parity.trace * b.xi_nkn[k];
}

// Tr[sigma_k Tr_S(boosted block)]
inline Complex parity_component(const SlotBlock& b, const BoostScalars& w, int k) {
  switch (k) {
    case 0: return w.ch * b.xi_trace * b.parity.x - w.sh * b.parity.trace * b.xi_n;
    case 1: return b.xi_trace * b.parity.y;
    default: return b.xi_trace * b.parity.z;
  }
}

inline bool same_momentum(const FourMomentum& a, const FourMomentum& b) {
  const double tol = 1e-12 * std::max(1.0, a.energy());
  return std::abs(a.energy() - b.energy()) <= tol && std::abs(a.p3()[0] - b.p3()[0]) <= tol &&
         std::abs(a.p3()[1] - b.p3()[1]) <= tol && std::abs(a.p3()[2] - b.p3()[2]) <= tol;
}

}  // namespace detail

/// True when every slot-A momentum is equal and every slot-B momentum is equal.
inline bool has_shared_slot_momenta(const TwoParticleState& st) {
  const auto& t = st.terms();
  for (const auto& term : t)
    if (!detail::same_momentum(term.a.momentum, t.front().a.momentum) ||
        !detail::same_momentum(term.b.momentum, t.front().b.momentum))
      return false;
  return true;
}

/// Bloch vectors of the four single-qubit reductions of the boosted state,
/// from the block sums alone.
inline std::map<Subsystem, BlochVector> analytic_boosted_bloch(const TwoParticleState& st,
                                                               const BoostSpec& b) {
  if (!has_shared_slot_momenta(st))
    throw UnsupportedStateError(
        "closed-form Bloch vectors need one momentum per slot (mixed slot momenta given)");

  const double w = b.rapidity();
  const detail::BoostScalars ws{std::cosh(w), std::sinh(w), std::pow(std::cosh(0.5 * w), 2),
                                std::pow(std::sinh(0.5 * w), 2), b.direction()};
  const ComplexMatrix n_sigma = sigma_dot(b.direction());

  const auto& terms = st.terms();
  const std::size_t m = terms.size();
  Complex nu{};
  std::array<Complex, 3> spin_a{}, spin_b{}, par_a{}, par_b{};
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      const Complex cc = terms[i].coefficient * std::conj(terms[j].coefficient);
      const auto blk_a = detail::slot_block(terms[i].a, terms[j].a, n_sigma);
      const auto blk_b = detail::slot_block(terms[i].b, terms[j].b, n_sigma);
      const Complex mu_a = detail::mu(blk_a, ws);
      const Complex mu_b = detail::mu(blk_b, ws);
      nu += cc * mu_a * mu_b;
      for (int k = 0; k < 3; ++k) {
        spin_a[k] += cc * mu_b * detail::spin_component(blk_a, ws, k);
        spin_b[k] += cc * mu_a * detail::spin_component(blk_b, ws, k);
        par_a[k] += cc * mu_b * detail::parity_component(blk_a, ws, k);
        par_b[k] += cc * mu_a * detail::parity_component(blk_b, ws, k);
      }
    }
  }
  if (std::abs(nu) < kDegenerateNorm) throw DegenerateStateError("superposition has zero norm");

  auto to_bloch = [&](const std::array<Complex, 3>& v) {
    return BlochVector{(v[0] / nu).real(), (v[1] / nu).real(), (v[2] / nu).real()};
  };
  return {{Subsystem::ParityA, to_bloch(par_a)},
          {Subsystem::SpinA, to_bloch(spin_a)},
          {Subsystem::ParityB, to_bloch(par_b)},
          {Subsystem::SpinB, to_bloch(spin_b)}};
}

/// Tr_P of the boosted block S (P x Xi) S for one slot; the transformed
/// spin block of the reduced two-spin state, before the 1/nu normalization.
inline ComplexMatrix boosted_spin_block(const ParityBlock& parity, const ComplexMatrix& xi,
                                        const BoostSpec& b) {
  const double w = b.rapidity();
  const ComplexMatrix ns = sigma_dot(b.direction());
  return xi * Complex{std::pow(std::cosh(0.5 * w), 2) * parity.trace} -
         anticommutator(ns, xi) * Complex{0.5 * std::sinh(w) * parity.x} +
         ns * xi * ns * Complex{std::pow(std::sinh(0.5 * w), 2) * parity.trace};
}

}  // namespace diracent
