// Copyright 2026 The diracent Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <cmath>

#include "diracent/errors.hpp"
#include "diracent/tensor.hpp"

namespace diracent {

//===----------------------------------------------------------------------===//
// 3-vectors
//===----------------------------------------------------------------------===//

using Vec3 = std::array<double, 3>;

inline double dot(const Vec3& a, const Vec3& b) noexcept {
  return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
}
inline double norm(const Vec3& a) noexcept { return std::sqrt(dot(a, a)); }
inline Vec3 scaled(const Vec3& a, double s) noexcept { return {a[0] * s, a[1] * s, a[2] * s}; }

inline constexpr Vec3 kUnitX{1.0, 0.0, 0.0};
inline constexpr Vec3 kUnitZ{0.0, 0.0, 1.0};

inline ComplexMatrix sigma_dot(const Vec3& n) { return pauli::dot(n[0], n[1], n[2]); }

//===----------------------------------------------------------------------===//
// FourMomentum
//===----------------------------------------------------------------------===//

/// On-shell momentum of a particle of mass m > 0, natural units.
class FourMomentum {
 public:
  static constexpr double kOnShellTolerance = 1e-10;

  FourMomentum(double mass, double energy, const Vec3& p3)
      : mass_(mass), energy_(energy), p3_(p3) {
    if (!(mass > 0.0)) throw DomainError("mass must be positive");
    if (energy < mass * (1.0 - kOnShellTolerance))
      throw DomainError("energy below rest mass");
    const double lhs = energy * energy - dot(p3, p3);
    if (std::abs(lhs - mass * mass) > kOnShellTolerance * energy * energy)
      throw DomainError("momentum is off shell");
  }

  static FourMomentum on_shell(double mass, const Vec3& p3) {
    return FourMomentum(mass, std::sqrt(mass * mass + dot(p3, p3)), p3);
  }

  static FourMomentum at_rest(double mass) { return on_shell(mass, {0.0, 0.0, 0.0}); }

  /// E = m cosh(omega0), p = m sinh(omega0) direction.
  static FourMomentum from_rapidity(double mass, double omega0, const Vec3& direction) {
    const double n = norm(direction);
    if (n < 1e-300) throw DomainError("direction must be nonzero");
    const Vec3 e = scaled(direction, 1.0 / n);
    return FourMomentum(mass, mass * std::cosh(omega0), scaled(e, mass * std::sinh(omega0)));
  }

  double mass() const noexcept { return mass_; }
  double energy() const noexcept { return energy_; }
  const Vec3& p3() const noexcept { return p3_; }
  double momentum() const noexcept { return norm(p3_); }

  FourMomentum reversed() const { return FourMomentum(mass_, energy_, scaled(p3_, -1.0)); }

 private:
  double mass_;
  double energy_;
  Vec3 p3_;
};

//===----------------------------------------------------------------------===//
// BoostSpec
//===----------------------------------------------------------------------===//

/// Pure boost: rapidity omega (cosh omega = gamma) along unit direction n.
class BoostSpec {
 public:
  BoostSpec(double rapidity, const Vec3& direction) : rapidity_(rapidity), direction_(direction) {
    if (!std::isfinite(rapidity)) throw DomainError("rapidity must be finite");
    if (std::abs(norm(direction) - 1.0) > 1e-12)
      throw DomainError("boost direction must be a unit vector");
  }

  /// n = sin(theta) e_x + cos(theta) e_z
  static BoostSpec in_xz_plane(double rapidity, double theta) {
    return BoostSpec(rapidity, {std::sin(theta), 0.0, std::cos(theta)});
  }

  double rapidity() const noexcept { return rapidity_; }
  const Vec3& direction() const noexcept { return direction_; }
  BoostSpec inverse() const { return BoostSpec(-rapidity_, direction_); }

 private:
  double rapidity_;
  Vec3 direction_;
};

//===----------------------------------------------------------------------===//
// Helicity spinors and bispinors
//===----------------------------------------------------------------------===//

/// s = 1 is positive helicity, s = 2 negative.
enum class Helicity : int { positive = 1, negative = 2 };

/// Eigenvalue of e_p . sigma carried by the label: +1 or -1.
inline constexpr double helicity_sign(Helicity s) noexcept {
  return s == Helicity::positive ? 1.0 : -1.0;
}

inline Helicity helicity_from_label(int s) {
  if (s == 1) return Helicity::positive;
  if (s == 2) return Helicity::negative;
  throw DomainError("helicity label must be 1 or 2");
}

namespace detail {

// First entry above the noise floor becomes real and positive.
inline ComplexVector fix_global_phase(ComplexVector v) {
  for (std::size_t i = 0; i < v.dim(); ++i) {
    const double a = std::abs(v[i]);
    if (a > 1e-14) return v * (std::conj(v[i]) / a);
  }
  return v;
}

}  // namespace detail

/// Eigenvector of e_p . sigma with eigenvalue +1 (s = 1) or -1 (s = 2).
/// At rest the z axis is used.
inline ComplexVector helicity_spinor(const FourMomentum& p, Helicity s) {
  const double pn = p.momentum();
  const Vec3 e = pn > 0.0 ? scaled(p.p3(), 1.0 / pn) : kUnitZ;
  const double h = helicity_sign(s);
  // (I + h e.sigma) applied to whichever of |z+>, |z-> it does not annihilate.
  ComplexVector v;
  if (h * e[2] >= 0.0)
    v = ComplexVector{1.0 + h * e[2], h * Complex{e[0], e[1]}};
  else
    v = ComplexVector{h * Complex{e[0], -e[1]}, 1.0 - h * e[2]};
  return detail::fix_global_phase(v.normalized());
}

/// Positive-frequency solution for an arbitrary two-component spinor chi:
/// [(E+m) |+> chi + |-> (p.sigma chi)] / sqrt(2E(E+m)), (P) x (S) order.
inline ComplexVector positive_energy_spinor(const FourMomentum& p, const ComplexVector& chi) {
  const double e = p.energy(), m = p.mass();
  const double scale = 1.0 / std::sqrt(2.0 * e * (e + m));
  const ComplexVector lower = sigma_dot(p.p3()).apply(chi);
  ComplexVector u(4);
  for (std::size_t k = 0; k < 2; ++k) {
    u[k] = (e + m) * scale * chi[k];
    u[2 + k] = scale * lower[k];
  }
  return u;
}

/// Negative-frequency counterpart with the parity roles swapped.
inline ComplexVector negative_energy_spinor(const FourMomentum& p, const ComplexVector& chi) {
  const double e = p.energy(), m = p.mass();
  const double scale = 1.0 / std::sqrt(2.0 * e * (e + m));
  const ComplexVector upper = sigma_dot(p.p3()).apply(chi);
  ComplexVector v(4);
  for (std::size_t k = 0; k < 2; ++k) {
    v[k] = scale * upper[k];
    v[2 + k] = (e + m) * scale * chi[k];
  }
  return v;
}

struct Bispinor {
  ComplexVector amplitudes;  // dim 4, (P) x (S)
  FourMomentum momentum;
  Helicity helicity;
};

inline Bispinor bispinor_u(const FourMomentum& p, Helicity s) {
  return {positive_energy_spinor(p, helicity_spinor(p, s)), p, s};
}

inline Bispinor bispinor_v(const FourMomentum& p, Helicity s) {
  return {negative_energy_spinor(p, helicity_spinor(p, s)), p, s};
}

//===----------------------------------------------------------------------===//
// Boosts
//===----------------------------------------------------------------------===//

using LorentzMatrix = std::array<std::array<double, 4>, 4>;

/// [L]_00 = cosh w, [L]_i0 = [L]_0i = sinh w n_i, [L]_ij = d_ij + (cosh w - 1) n_i n_j.
/// Maps a particle at rest to momentum +m sinh(w) n.
inline LorentzMatrix lorentz_matrix(const BoostSpec& b) {
  const double ch = std::cosh(b.rapidity()), sh = std::sinh(b.rapidity());
  const Vec3& n = b.direction();
  LorentzMatrix l{};
  l[0][0] = ch;
  for (int i = 0; i < 3; ++i) {
    l[0][i + 1] = l[i + 1][0] = sh * n[i];
    for (int j = 0; j < 3; ++j) l[i + 1][j + 1] = (i == j ? 1.0 : 0.0) + (ch - 1.0) * n[i] * n[j];
  }
  return l;
}

/// Momentum seen from the frame reached by `b`, i.e. the transformation that
/// accompanies bispinor_boost(b): p' = lorentz_matrix(-w, n) p. A particle
/// moving with rapidity w along n is at rest after boost_four_vector(p, {w, n}).
inline FourMomentum boost_four_vector(const FourMomentum& p, const BoostSpec& b) {
  const LorentzMatrix l = lorentz_matrix(b.inverse());
  const std::array<double, 4> in{p.energy(), p.p3()[0], p.p3()[1], p.p3()[2]};
  std::array<double, 4> out{};
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c) out[r] += l[r][c] * in[c];
  return FourMomentum(p.mass(), out[0], {out[1], out[2], out[3]});
}

/// cosh(w/2) I4 - sinh(w/2) sigma_x^(P) x n.sigma^(S). Hermitian, det 1,
/// not unitary for w != 0.
inline ComplexMatrix bispinor_boost(const BoostSpec& b) {
  const double w = b.rapidity();
  return ComplexMatrix::identity(4) * Complex{std::cosh(0.5 * w)} -
         kron(pauli::x(), sigma_dot(b.direction())) * Complex{std::sinh(0.5 * w)};
}

/// gamma5 = sigma_x^(P) x I^(S)
inline ComplexMatrix gamma5() { return kron(pauli::x(), pauli::identity()); }

/// (I + (-1)^f gamma5) / 2, f in {0, 1}.
inline ComplexMatrix chiral_projector(int f) {
  if (f != 0 && f != 1) throw DomainError("chirality label must be 0 or 1");
  const double sign = f == 0 ? 1.0 : -1.0;
  return (ComplexMatrix::identity(4) + gamma5() * Complex{sign}) * Complex{0.5};
}

}  // namespace diracent
