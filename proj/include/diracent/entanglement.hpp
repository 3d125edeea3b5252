// Copyright 2026 The diracent Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <cmath>
#include <map>
#include <numeric>
#include <optional>

#include "diracent/errors.hpp"
#include "diracent/states.hpp"
#include "diracent/tensor.hpp"

namespace diracent {

inline constexpr double kTraceTolerance = 1e-8;
inline constexpr double kPurityTolerance = 1e-8;
inline constexpr double kNegativityClamp = 1e-12;

struct BlochVector {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  double squared_length() const noexcept { return x * x + y * y + z * z; }
  double component(int k) const noexcept { return k == 0 ? x : (k == 1 ? y : z); }
};

namespace detail {

inline void require_unit_trace(const ComplexMatrix& rho) {
  const Complex tr = rho.trace();
  if (std::abs(tr - Complex{1.0}) > kTraceTolerance)
    throw DomainError("density matrix trace is " + std::to_string(tr.real()) + ", expected 1");
}

// Tr rho^2 for Hermitian rho is the squared Frobenius norm.
inline double purity(const ComplexMatrix& rho) {
  const double f = rho.frobenius_norm();
  return f * f;
}

}  // namespace detail

/// (d/(d-1)) (1 - Tr rho^2)
inline double linear_entropy(const ComplexMatrix& rho) {
  if (!rho.is_square() || rho.rows() < 2) throw DimensionError("linear_entropy needs d >= 2");
  detail::require_unit_trace(rho);
  const double d = static_cast<double>(rho.rows());
  return d / (d - 1.0) * (1.0 - detail::purity(rho));
}

/// a_n = Tr[sigma_n rho]
inline BlochVector bloch_vector(const ComplexMatrix& rho) {
  if (rho.rows() != 2 || rho.cols() != 2) throw DimensionError("bloch_vector needs a 2x2 matrix");
  detail::require_unit_trace(rho);
  return {(rho(0, 1) + rho(1, 0)).real(), (kI * (rho(0, 1) - rho(1, 0))).real(),
          (rho(0, 0) - rho(1, 1)).real()};
}

inline ComplexMatrix single_qubit_reduction(const ComplexMatrix& rho, Subsystem tag) {
  const Subsystem keep[] = {tag};
  return partial_trace(rho, SubsystemLayout::two_bispinors(), keep);
}

/// Meyer-Wallach measure with the per-qubit detail it is built from.
/// Index order of the arrays follows kAllSubsystems: PA, SA, PB, SB.
struct GlobalEntanglement {
  double value = 0.0;
  std::array<double, 4> linear_entropy{};
  std::array<BlochVector, 4> bloch{};
};

/// Mean single-qubit linear entropy of a pure 16x16 state.
inline GlobalEntanglement global_entanglement(const ComplexMatrix& rho) {
  if (rho.rows() != 16 || !rho.is_square()) throw DimensionError("expected a 16x16 density matrix");
  detail::require_unit_trace(rho);
  if (detail::purity(rho) < 1.0 - kPurityTolerance)
    throw DomainError("global entanglement is defined for pure states only");
  GlobalEntanglement g;
  for (std::size_t k = 0; k < 4; ++k) {
    const ComplexMatrix r = single_qubit_reduction(rho, kAllSubsystems[k]);
    g.linear_entropy[k] = linear_entropy(r);
    g.bloch[k] = bloch_vector(r);
  }
  g.value = 0.25 * std::accumulate(g.linear_entropy.begin(), g.linear_entropy.end(), 0.0);
  return g;
}

/// 1 - (1/4) sum over qubits of |a|^2
inline double global_entanglement_from_bloch(const std::array<BlochVector, 4>& bloch) {
  double acc = 0.0;
  for (const auto& a : bloch) acc += a.squared_length();
  return 1.0 - 0.25 * acc;
}

/// Tr over both parity qubits; result in (S)A (S)B order.
inline ComplexMatrix spin_spin_reduced(const ComplexMatrix& rho) {
  return partial_trace(rho, SubsystemLayout::two_bispinors(), {Subsystem::SpinA, Subsystem::SpinB});
}

/// sum |lambda_i(rho^{T_A})| - 1 for a two-qubit state.
inline double negativity(const ComplexMatrix& rho_ss) {
  if (rho_ss.rows() != 4 || !rho_ss.is_square()) throw DimensionError("negativity expects a 4x4 matrix");
  detail::require_unit_trace(rho_ss);
  const auto ev = hermitian_eigenvalues(
      partial_transpose(rho_ss, SubsystemLayout::spin_pair(), Subsystem::SpinA));
  double n = -1.0;
  for (double l : ev) n += std::abs(l);
  if (n < 0.0 && n >= -kNegativityClamp) n = 0.0;
  return n;
}

inline double spin_spin_negativity(const ComplexMatrix& rho) {
  return negativity(spin_spin_reduced(rho));
}

//===----------------------------------------------------------------------===//
// Reports and boost deltas
//===----------------------------------------------------------------------===//

struct EntanglementReport {
  double global_eg = 0.0;
  double negativity_ss = 0.0;
  std::map<Subsystem, BlochVector> bloch;
  std::optional<double> nu;
};

inline EntanglementReport entanglement_report(const ComplexMatrix& rho) {
  const GlobalEntanglement g = global_entanglement(rho);
  EntanglementReport r;
  r.global_eg = g.value;
  r.negativity_ss = spin_spin_negativity(rho);
  for (std::size_t k = 0; k < 4; ++k) r.bloch[kAllSubsystems[k]] = g.bloch[k];
  return r;
}

inline EntanglementReport boosted_report(const ComplexMatrix& rho, const BoostSpec& b) {
  const BoostedDensity boosted = boost_two_particle(rho, b);
  EntanglementReport r = entanglement_report(boosted.rho);
  r.nu = boosted.nu;
  return r;
}

inline double delta_global(const ComplexMatrix& rho, const BoostSpec& b) {
  return global_entanglement(boost_two_particle(rho, b).rho).value - global_entanglement(rho).value;
}

inline double delta_negativity(const ComplexMatrix& rho, const BoostSpec& b) {
  return spin_spin_negativity(boost_two_particle(rho, b).rho) - spin_spin_negativity(rho);
}

inline double delta_global(const TwoParticleState& st, const BoostSpec& b) {
  return delta_global(density_matrix(st), b);
}

inline double delta_negativity(const TwoParticleState& st, const BoostSpec& b) {
  return delta_negativity(density_matrix(st), b);
}

}  // namespace diracent
