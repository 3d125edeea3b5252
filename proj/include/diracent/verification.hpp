// Copyright 2026 The diracent Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

// Acceptance checks shared by `diracent verify` and the acceptance test.
// Every tolerance and grid is fixed here.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <ostream>
#include <random>
#include <string>
#include <vector>

#include "json.hpp"

#include "diracent/analytic.hpp"
#include "diracent/entanglement.hpp"
#include "diracent/kinematics.hpp"
#include "diracent/states.hpp"
#include "diracent/tensor.hpp"

namespace diracent {

struct CheckResult {
  int id = 0;
  std::string description;
  double measured = 0.0;
  double expected = 0.0;
  double tolerance = 0.0;
  bool passed = false;
  std::string details;
};

struct VerifyOptions {
  /// Fault injection: every numeric boost runs with the rapidity negated.
  bool flip_boost_sign = false;
  std::uint64_t seed = 20260214;
};

struct VerifyReport {
  std::vector<CheckResult> checks;
  bool all_passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
  }
};

namespace verify_detail {

inline constexpr double kPi = std::numbers::pi;

inline std::vector<double> linspace(double lo, double hi, int n) {
  std::vector<double> v(n);
  for (int i = 0; i < n; ++i) v[i] = n == 1 ? lo : lo + (hi - lo) * i / (n - 1);
  return v;
}

inline std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

class Context {
 public:
  explicit Context(const VerifyOptions& o) : opts_(o), rng_(o.seed) {}

  BoostSpec boost(double w, double theta) const {
    return BoostSpec::in_xz_plane(opts_.flip_boost_sign ? -w : w, theta);
  }
  BoostSpec boost(const BoostSpec& b) const { return opts_.flip_boost_sign ? b.inverse() : b; }

  ComplexMatrix boosted(const ComplexMatrix& rho, double w, double theta) const {
    return boost_two_particle(rho, boost(w, theta)).rho;
  }
  double eg(const ComplexMatrix& rho, double w, double theta) const {
    return global_entanglement(boosted(rho, w, theta)).value;
  }
  double neg(const ComplexMatrix& rho, double w, double theta) const {
    return spin_spin_negativity(boosted(rho, w, theta));
  }

  double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }
  double normal() { return std::normal_distribution<double>(0.0, 1.0)(rng_); }
  Vec3 unit_vector() {
    Vec3 v{normal(), normal(), normal()};
    while (norm(v) < 1e-6) v = {normal(), normal(), normal()};
    return scaled(v, 1.0 / norm(v));
  }

 private:
  VerifyOptions opts_;
  std::mt19937_64 rng_;
};

inline CheckResult make(int id, std::string desc, double measured, double expected, double tol,
                        bool passed, std::string details = {}) {
  return {id, std::move(desc), measured, expected, tol, passed, std::move(details)};
}

inline CheckResult check_psi1_baseline(Context&) {
  constexpr double kTol = 1e-10;
  const double eg = global_entanglement(density_matrix(make_psi1(1.0))).value;
  return make(1, "psi1 unboosted global entanglement", eg, 0.5, kTol, std::abs(eg - 0.5) <= kTol);
}

inline CheckResult check_psi1_separable(Context& ctx) {
  constexpr double kTol = 1e-10;
  const ComplexMatrix rho = density_matrix(make_psi1(1.0));
  double worst = 0.0;
  for (double w : linspace(0.0, 5.0, 20))
    for (double t : linspace(0.0, kPi / 2, 10)) worst = std::max(worst, std::abs(ctx.neg(rho, w, t)));
  return make(2, "psi1 spin-spin negativity on 20x10 grid", worst, 0.0, kTol, worst <= kTol,
              "max |N|");
}

inline CheckResult check_psi1_parallel(Context& ctx) {
  constexpr double kTol = 1e-10;
  const ComplexMatrix rho = density_matrix(make_psi1(1.0));
  const double eg0 = global_entanglement(rho).value;
  double worst = 0.0;
  for (double w : linspace(0.0, 5.0, 51)) worst = std::max(worst, std::abs(ctx.eg(rho, w, 0.0) - eg0));
  return make(3, "psi1 parallel boost leaves E_G unchanged", worst, 0.0, kTol, worst <= kTol,
              "max |delta E_G| at theta=0");
}

inline CheckResult check_psi1_saturation(Context& ctx) {
  constexpr double kThreshold = 0.99;
  constexpr double kMonotoneSlack = 1e-12;
  const ComplexMatrix rho = density_matrix(make_psi1(1.0));
  const double top = ctx.eg(rho, 10.0, kPi / 2);
  double worst_step = HUGE_VAL;
  for (double t : linspace(0.0, kPi / 2, 10)) {
    double prev = -HUGE_VAL;
    for (double w : linspace(0.0, 10.0, 41)) {
      const double e = ctx.eg(rho, w, t);
      if (prev != -HUGE_VAL) worst_step = std::min(worst_step, e - prev);
      prev = e;
    }
  }
  const bool ok = top > kThreshold && worst_step >= -kMonotoneSlack;
  return make(4, "psi1 E_G(omega=10, theta=pi/2) > 0.99 and nondecreasing in omega", top, kThreshold,
              kMonotoneSlack, ok, "min step " + fmt(worst_step));
}

inline const std::vector<double>& psi2_angles() {
  static const std::vector<double> a{0.0, kPi / 8, kPi / 4, kPi / 2};
  return a;
}

inline CheckResult check_psi2_angle_independence(Context& ctx) {
  constexpr double kTol = 1e-10;
  const ComplexMatrix rho = density_matrix(make_psi2(1.0));
  double worst = 0.0, worst_w = 0.0;
  for (double w : linspace(0.0, 5.0, 50)) {
    std::vector<double> egs, ns;
    for (double t : psi2_angles()) {
      const ComplexMatrix r = ctx.boosted(rho, w, t);
      egs.push_back(global_entanglement(r).value);
      ns.push_back(spin_spin_negativity(r));
    }
    for (const auto* v : {&egs, &ns}) {
      const auto [lo, hi] = std::minmax_element(v->begin(), v->end());
      if (*hi - *lo > worst) worst = *hi - *lo, worst_w = w;
    }
  }
  return make(5, "psi2 E_G and N independent of boost angle", worst, 0.0, kTol, worst <= kTol,
              "max spread over theta in {0,pi/8,pi/4,pi/2}, worst at omega=" + fmt(worst_w));
}

inline CheckResult check_psi2_degradation(Context& ctx) {
  constexpr double kTol = 1e-9;
  constexpr double kMonotoneSlack = 1e-12;
  constexpr double kFinalBound = 0.01;
  const ComplexMatrix rho = density_matrix(make_psi2(1.0));
  const double expected = 1.0 / (std::cosh(1.0) * std::cosh(1.0));
  const double n0 = spin_spin_negativity(rho);
  double worst_rise = 0.0, worst_final = 0.0;
  for (double t : psi2_angles()) {
    double prev = HUGE_VAL;
    for (double w : linspace(0.0, 10.0, 41)) {
      const double n = ctx.neg(rho, w, t);
      if (prev != HUGE_VAL) worst_rise = std::max(worst_rise, n - prev);
      prev = n;
    }
    worst_final = std::max(worst_final, prev);
  }
  const bool ok = std::abs(n0 - expected) <= kTol && worst_rise <= kMonotoneSlack && worst_final < kFinalBound;
  return make(6, "psi2 N(0) = sech^2(1), nonincreasing, N(10) < 0.01", n0, expected, kTol, ok,
              "max rise " + fmt(worst_rise) + ", max N(10) " + fmt(worst_final));
}

inline CheckResult check_psi3_extremum(Context& ctx) {
  constexpr double kTol = 1e-9;
  const ComplexMatrix rho = density_matrix(make_psi3(1.0));
  std::vector<double> egs, ns;
  for (int i = 0; i <= 60; ++i) {
    const ComplexMatrix r = ctx.boosted(rho, 0.05 * i, 0.0);
    egs.push_back(global_entanglement(r).value);
    ns.push_back(spin_spin_negativity(r));
  }
  const auto k = static_cast<std::size_t>(std::min_element(egs.begin(), egs.end()) - egs.begin());
  const double w_min = 0.05 * static_cast<double>(k);
  const bool local_max = k > 0 && k + 1 < ns.size() && ns[k] >= ns[k - 1] && ns[k] >= ns[k + 1];
  const bool ok = k == 20 && std::abs(egs[k] - 0.5) <= kTol && std::abs(ns[k] - 1.0) <= kTol && local_max;
  return make(7, "psi3 E_G minimum at the rest frame omega=1 (theta=0)", w_min, 1.0, kTol, ok,
              "E_G=" + fmt(egs[k]) + " N=" + fmt(ns[k]) + (local_max ? " N local max" : " N not local max"));
}

inline CheckResult check_chiral_invariance(Context& ctx) {
  constexpr double kTol = 1e-12;
  struct Sample {
    double w, t;
  };
  std::vector<Sample> samples;
  for (int i = 0; i < 25; ++i) {
    const double w = ctx.uniform(0.0, 5.0);
    samples.push_back({w, ctx.uniform(0.0, kPi)});
  }
  double worst = 0.0;
  bool ok = true;
  std::string details;
  for (const auto& [name, st] : {std::pair{"psi2", make_psi2(1.0)}, std::pair{"psi3", make_psi3(1.0)}}) {
    for (int f : {0, 1}) {
      for (int g : {0, 1}) {
        double sub = 0.0;
        std::string note;
        try {
          const ComplexMatrix rho = chiral_project(st, {f, g});
          for (const auto& s : samples)
            sub = std::max(sub, frobenius_distance(rho, ctx.boosted(rho, s.w, s.t)));
        } catch (const DegenerateStateError&) {
          note = " (annihilated)";
          sub = HUGE_VAL;
        }
        const bool pass = sub < kTol;
        ok = ok && pass;
        worst = std::max(worst, sub);
        if (!details.empty()) details += "; ";
        details += std::string(name) + " f=" + std::to_string(f) + " g=" + std::to_string(g) + ": " +
                   fmt(sub) + (pass ? " pass" : " FAIL") + note;
      }
    }
  }
  return make(8, "chiral-projected states invariant under boosts", worst, 0.0, kTol, ok, details);
}

inline CheckResult check_analytic_oracle(Context& ctx) {
  constexpr double kTol = 1e-9;
  double worst = 0.0;
  for (const auto& [name, st] : {std::pair{"psi2", make_psi2(1.0)}, std::pair{"psi3", make_psi3(1.0)}}) {
    const ComplexMatrix rho = density_matrix(st);
    for (double w : linspace(0.0, 5.0, 20)) {
      for (double t : linspace(0.0, kPi, 10)) {
        const auto closed = analytic_boosted_bloch(st, BoostSpec::in_xz_plane(w, t));
        const ComplexMatrix r = ctx.boosted(rho, w, t);
        for (Subsystem s : kAllSubsystems) {
          const BlochVector num = bloch_vector(single_qubit_reduction(r, s));
          for (int k = 0; k < 3; ++k)
            worst = std::max(worst, std::abs(num.component(k) - closed.at(s).component(k)));
        }
      }
    }
  }
  return make(9, "closed-form boosted Bloch vectors match numeric pipeline (psi2, psi3)", worst, 0.0,
              kTol, worst < kTol, "max componentwise error on 20x10 grid");
}

inline CheckResult check_algebra(Context& ctx) {
  constexpr double kSpinorTol = 1e-12;
  constexpr double kBoostTol = 1e-12;
  constexpr double kChiralTol = 1e-14;
  constexpr double kMinkowskiTol = 1e-10;
  constexpr double kDualTol = 1e-12;

  double spinor = 0.0, boost = 0.0, chiral = 0.0, minkowski = 0.0, dual = 0.0;
  const ComplexMatrix g5 = gamma5();
  for (int i = 0; i < 50; ++i) {
    const double m = ctx.uniform(0.5, 2.0);
    const FourMomentum p =
        FourMomentum::on_shell(m, {ctx.uniform(-3, 3), ctx.uniform(-3, 3), ctx.uniform(-3, 3)});
    std::vector<ComplexVector> us, vs;
    for (Helicity s : {Helicity::positive, Helicity::negative}) {
      us.push_back(bispinor_u(p, s).amplitudes);
      vs.push_back(bispinor_v(p.reversed(), s).amplitudes);
    }
    ComplexMatrix sum(4, 4);
    for (int r = 0; r < 2; ++r) {
      for (int c = 0; c < 2; ++c) {
        const Complex d = r == c ? 1.0 : 0.0;
        spinor = std::max({spinor, std::abs(inner(us[r], us[c]) - d), std::abs(inner(vs[r], vs[c]) - d),
                           std::abs(inner(us[r], vs[c]))});
      }
      sum += ComplexMatrix::outer(us[r], us[r]) + ComplexMatrix::outer(vs[r], vs[r]);
    }
    spinor = std::max(spinor, frobenius_distance(sum, ComplexMatrix::identity(4)));

    const Vec3 n = ctx.unit_vector();
    const double w1 = ctx.uniform(-3, 3), w2 = ctx.uniform(-3, 3);
    const ComplexMatrix s1 = bispinor_boost(ctx.boost(BoostSpec(w1, n)));
    const ComplexMatrix s1_inv = bispinor_boost(ctx.boost(BoostSpec(-w1, n)));
    const ComplexMatrix s2 = bispinor_boost(ctx.boost(BoostSpec(w2, n)));
    const ComplexMatrix s12 = bispinor_boost(ctx.boost(BoostSpec(w1 + w2, n)));
    const double scale = std::max(1.0, s12.frobenius_norm());
    boost = std::max({boost, frobenius_distance(s1 * s1_inv, ComplexMatrix::identity(4)),
                      frobenius_distance(s1 * s2, s12) / scale});
    chiral = std::max(chiral, commutator(g5, s1).max_abs());

    const FourMomentum pb = boost_four_vector(p, ctx.boost(BoostSpec(w1, n)));
    const double mink = pb.energy() * pb.energy() - dot(pb.p3(), pb.p3());
    minkowski = std::max(minkowski, std::abs(mink - m * m) / (m * m));

    ComplexVector psi(16);
    for (std::size_t k = 0; k < 16; ++k) psi[k] = {ctx.normal(), ctx.normal()};
    const GlobalEntanglement ge = global_entanglement(ComplexMatrix::projector(psi.normalized()));
    dual = std::max(dual, std::abs(ge.value - global_entanglement_from_bloch(ge.bloch)));
  }
  const bool ok = spinor <= kSpinorTol && boost <= kBoostTol && chiral <= kChiralTol &&
                  minkowski <= kMinkowskiTol && dual <= kDualTol;
  const double worst = std::max({spinor / kSpinorTol, boost / kBoostTol, chiral / kChiralTol,
                                 minkowski / kMinkowskiTol, dual / kDualTol});
  return make(10, "bispinor, boost, chirality and dual-path algebra", worst, 0.0, 1.0, ok,
              "spinor " + fmt(spinor) + ", boost " + fmt(boost) + ", [g5,S] " + fmt(chiral) +
                  ", minkowski " + fmt(minkowski) + ", dual E_G " + fmt(dual) +
                  " (measured = worst error / tolerance)");
}

}  // namespace verify_detail

inline VerifyReport run_verification(const VerifyOptions& opts = {}) {
  using namespace verify_detail;
  Context ctx(opts);
  const std::function<CheckResult(Context&)> checks[] = {
      check_psi1_baseline,   check_psi1_separable,          check_psi1_parallel,
      check_psi1_saturation, check_psi2_angle_independence, check_psi2_degradation,
      check_psi3_extremum,   check_chiral_invariance,       check_analytic_oracle,
      check_algebra};
  VerifyReport report;
  int id = 1;
  for (const auto& check : checks) {
    try {
      report.checks.push_back(check(ctx));
    } catch (const std::exception& e) {
      report.checks.push_back(make(id, "check raised an exception", NAN, NAN, NAN, false, e.what()));
    }
    ++id;
  }
  return report;
}

inline void print_report(const VerifyReport& report, std::ostream& out) {
  for (const auto& c : report.checks) {
    char buf[160];
    std::snprintf(buf, sizeof buf, "[%s] C%-2d measured=%.6g expected=%.6g tol=%.3g", c.passed ? "PASS" : "FAIL",
                  c.id, c.measured, c.expected, c.tolerance);
    out << buf << "  " << c.description;
    if (!c.details.empty()) out << " | " << c.details;
    out << "\n";
  }
  int passed = 0;
  for (const auto& c : report.checks) passed += c.passed ? 1 : 0;
  out << passed << "/" << report.checks.size() << " checks passed\n";
}

inline nlohmann::ordered_json report_json(const VerifyReport& report) {
  nlohmann::ordered_json j;
  j["passed"] = report.all_passed();
  j["checks"] = nlohmann::ordered_json::array();
  for (const auto& c : report.checks) {
    auto num = [](double v) { return std::isfinite(v) ? nlohmann::ordered_json(v) : nlohmann::ordered_json(); };
    j["checks"].push_back({{"id", "C" + std::to_string(c.id)},
                           {"description", c.description},
                           {"measured", num(c.measured)},
                           {"expected", num(c.expected)},
                           {"tolerance", num(c.tolerance)},
                           {"passed", c.passed},
                           {"details", c.details}});
  }
  return j;
}

}  // namespace diracent
