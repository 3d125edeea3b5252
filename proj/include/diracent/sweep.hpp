// Copyright 2026 The diracent Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <algorithm>
#include <atomic>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <exception>
#include <numbers>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <thread>
#include <vector>

#include "json.hpp"

#include "diracent/entanglement.hpp"
#include "diracent/errors.hpp"
#include "diracent/kinematics.hpp"
#include "diracent/states.hpp"

namespace diracent {

//===----------------------------------------------------------------------===//
// Configuration
//===----------------------------------------------------------------------===//

enum class Scenario { psi1, psi2, psi3, chiral_psi2, chiral_psi3, custom };

inline constexpr std::string_view scenario_name(Scenario s) noexcept {
  switch (s) {
    case Scenario::psi1: return "psi1";
    case Scenario::psi2: return "psi2";
    case Scenario::psi3: return "psi3";
    case Scenario::chiral_psi2: return "chiral-psi2";
    case Scenario::chiral_psi3: return "chiral-psi3";
    case Scenario::custom: return "custom";
  }
  return "?";
}

inline Scenario parse_scenario(std::string_view s) {
  for (Scenario v : {Scenario::psi1, Scenario::psi2, Scenario::psi3, Scenario::chiral_psi2,
                     Scenario::chiral_psi3, Scenario::custom})
    if (scenario_name(v) == s) return v;
  throw ValidationError("scenario", "unknown scenario '" + std::string(s) + "'");
}

inline bool is_chiral(Scenario s) noexcept {
  return s == Scenario::chiral_psi2 || s == Scenario::chiral_psi3;
}

enum class Measure { eg, delta_eg, negativity, delta_negativity, bloch };

inline constexpr Measure kAllMeasures[] = {Measure::eg, Measure::delta_eg, Measure::negativity,
                                           Measure::delta_negativity, Measure::bloch};

inline constexpr std::string_view measure_name(Measure m) noexcept {
  switch (m) {
    case Measure::eg: return "eg";
    case Measure::delta_eg: return "delta_eg";
    case Measure::negativity: return "negativity";
    case Measure::delta_negativity: return "delta_negativity";
    case Measure::bloch: return "bloch";
  }
  return "?";
}

namespace detail {

inline std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = s.find(sep, start);
    out.emplace_back(s.substr(start, pos == std::string_view::npos ? pos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

inline std::string trim(std::string s) {
  const auto ws = [](unsigned char c) { return std::isspace(c) != 0; };
  s.erase(s.begin(), std::find_if_not(s.begin(), s.end(), ws));
  s.erase(std::find_if_not(s.rbegin(), s.rend(), ws).base(), s.end());
  return s;
}

inline double parse_real(const std::string& field, const std::string& text) {
  const std::string t = trim(text);
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(t, &used);
  } catch (const std::exception&) {
    throw ValidationError(field, "'" + text + "' is not a number");
  }
  if (used != t.size()) throw ValidationError(field, "'" + text + "' is not a number");
  if (!std::isfinite(v)) throw ValidationError(field, "value must be finite");
  return v;
}

inline int parse_int(const std::string& field, const std::string& text) {
  const double v = parse_real(field, text);
  if (v != std::floor(v) || std::abs(v) > 1e9)
    throw ValidationError(field, "'" + text + "' is not an integer");
  return static_cast<int>(v);
}

}  // namespace detail

/// Comma-separated measure names, returned in canonical column order without duplicates.
inline std::vector<Measure> parse_measures(std::string_view list) {
  std::vector<bool> seen(std::size(kAllMeasures), false);
  for (const std::string& raw : detail::split(list, ',')) {
    const std::string name = detail::trim(raw);
    if (name.empty()) continue;
    bool found = false;
    for (std::size_t k = 0; k < std::size(kAllMeasures); ++k)
      if (measure_name(kAllMeasures[k]) == name) seen[k] = found = true;
    if (!found) throw ValidationError("measures", "unknown measure '" + name + "'");
  }
  std::vector<Measure> out;
  for (std::size_t k = 0; k < std::size(kAllMeasures); ++k)
    if (seen[k]) out.push_back(kAllMeasures[k]);
  return out;
}

/// min + (max - min) i / (steps - 1), i = 0 .. steps-1; a single step yields min.
struct GridSpec {
  double min = 0.0;
  double max = 0.0;
  int steps = 1;

  std::vector<double> values() const {
    std::vector<double> v(static_cast<std::size_t>(std::max(steps, 0)));
    for (int i = 0; i < steps; ++i)
      v[i] = steps == 1 ? min : min + (max - min) * static_cast<double>(i) / (steps - 1);
    return v;
  }
};

/// "min:max:steps"
inline GridSpec parse_grid(const std::string& field, std::string_view text) {
  const auto parts = detail::split(text, ':');
  if (parts.size() != 3) throw ValidationError(field, "expected min:max:steps");
  return {detail::parse_real(field, parts[0]), detail::parse_real(field, parts[1]),
          detail::parse_int(field, parts[2])};
}

/// One term of a custom superposition. Momenta lie along +e_z (dir = +1) or -e_z (dir = -1).
struct CustomTerm {
  Complex coefficient;
  int helicity_a = 1;
  double omega0_a = 0.0;
  int dir_a = 1;
  int helicity_b = 1;
  double omega0_b = 0.0;
  int dir_b = 1;
};

/// "re,im,sA,omega0A,dirA,sB,omega0B,dirB"; directions accept +1/-1, +z/-z or z.
inline CustomTerm parse_custom_term(std::string_view text) {
  const auto p = detail::split(text, ',');
  if (p.size() != 8) throw ValidationError("term", "expected re,im,sA,omega0A,dirA,sB,omega0B,dirB");
  auto dir = [](const std::string& raw) {
    const std::string d = detail::trim(raw);
    if (d == "+z" || d == "z" || d == "+1" || d == "1") return 1;
    if (d == "-z" || d == "-1") return -1;
    throw ValidationError("term", "direction must be +z or -z, got '" + d + "'");
  };
  return {{detail::parse_real("term", p[0]), detail::parse_real("term", p[1])},
          detail::parse_int("term", p[2]),
          detail::parse_real("term", p[3]),
          dir(p[4]),
          detail::parse_int("term", p[5]),
          detail::parse_real("term", p[6]),
          dir(p[7])};
}

struct SweepConfig {
  Scenario scenario = Scenario::psi1;
  double omega0 = 1.0;
  double mass = 1.0;
  GridSpec omega_grid{0.0, 5.0, 100};
  GridSpec theta_grid{0.0, std::numbers::pi / 2.0, 50};
  std::optional<ChiralLabelPair> chiral_labels;
  std::vector<Measure> measures{Measure::eg, Measure::delta_eg, Measure::negativity,
                                Measure::delta_negativity};
  std::vector<CustomTerm> custom_terms;
  /// Replaces the theta grid with one fixed boost direction.
  std::optional<Vec3> direction;
};

inline void validate(const SweepConfig& cfg) {
  if (!std::isfinite(cfg.omega0) || cfg.omega0 < 0.0)
    throw ValidationError("omega0", "must be finite and >= 0");
  if (!std::isfinite(cfg.mass) || cfg.mass <= 0.0) throw ValidationError("mass", "must be > 0");
  for (const auto& [name, g] : {std::pair{"omega", cfg.omega_grid}, std::pair{"theta", cfg.theta_grid}}) {
    if (!std::isfinite(g.min) || !std::isfinite(g.max)) throw ValidationError(name, "bounds must be finite");
    if (g.steps < 1) throw ValidationError(name, "steps must be >= 1");
    if (g.max < g.min) throw ValidationError(name, "max must be >= min");
  }
  constexpr double kAngleSlack = 1e-12;
  if (cfg.theta_grid.min < -kAngleSlack || cfg.theta_grid.max > std::numbers::pi + kAngleSlack)
    throw ValidationError("theta", "range must lie within [0, pi]");
  if (cfg.measures.empty()) throw ValidationError("measures", "at least one measure is required");
  if (cfg.chiral_labels && !is_chiral(cfg.scenario) && cfg.scenario != Scenario::custom)
    throw ValidationError("chiral", "labels apply to chiral-* and custom scenarios only");
  if (cfg.direction) {
    const double n = norm(*cfg.direction);
    if (!std::isfinite(n) || n < 1e-12) throw ValidationError("direction", "must be a nonzero vector");
  }
  if (cfg.scenario == Scenario::custom) {
    if (cfg.custom_terms.empty()) throw ValidationError("term", "custom scenario needs at least one term");
    bool any_nonzero = false;
    for (const auto& t : cfg.custom_terms) {
      if (!std::isfinite(t.coefficient.real()) || !std::isfinite(t.coefficient.imag()))
        throw ValidationError("term", "coefficient must be finite");
      any_nonzero = any_nonzero || std::abs(t.coefficient) > 0.0;
      for (int s : {t.helicity_a, t.helicity_b})
        if (s != 1 && s != 2) throw ValidationError("term", "helicity label must be 1 or 2");
      for (double w : {t.omega0_a, t.omega0_b})
        if (!std::isfinite(w) || w < 0.0) throw ValidationError("term", "omega0 must be finite and >= 0");
      for (int d : {t.dir_a, t.dir_b})
        if (d != 1 && d != -1) throw ValidationError("term", "direction must be +z or -z");
    }
    if (!any_nonzero) throw ValidationError("term", "at least one coefficient must be nonzero");
  } else if (!cfg.custom_terms.empty()) {
    throw ValidationError("term", "terms are accepted only by the custom scenario");
  }
}

/// Pure-state vector of the scenario. Throws ValidationError when the
/// configuration describes no physical state.
inline TwoParticleState build_state(const SweepConfig& cfg) {
  switch (cfg.scenario) {
    case Scenario::psi1: return make_psi1(cfg.omega0, cfg.mass);
    case Scenario::psi2:
    case Scenario::chiral_psi2: return make_psi2(cfg.omega0, cfg.mass);
    case Scenario::psi3:
    case Scenario::chiral_psi3: return make_psi3(cfg.omega0, cfg.mass);
    case Scenario::custom: break;
  }
  std::vector<SuperpositionTerm> terms;
  for (const auto& t : cfg.custom_terms) {
    const auto mom = [&](double w0, int dir) {
      return FourMomentum::from_rapidity(cfg.mass, w0, scaled(kUnitZ, static_cast<double>(dir)));
    };
    terms.push_back({t.coefficient,
                     {mom(t.omega0_a, t.dir_a), helicity_from_label(t.helicity_a)},
                     {mom(t.omega0_b, t.dir_b), helicity_from_label(t.helicity_b)}});
  }
  return TwoParticleState(std::move(terms));
}

/// Unboosted density matrix, chirally projected when the scenario asks for it.
inline ComplexMatrix initial_density(const SweepConfig& cfg) {
  const TwoParticleState st = build_state(cfg);
  try {
    if (is_chiral(cfg.scenario)) return chiral_project(st, cfg.chiral_labels.value_or(ChiralLabelPair{}));
    if (cfg.chiral_labels) return chiral_project(st, *cfg.chiral_labels);
    return density_matrix(st);
  } catch (const DegenerateStateError& e) {
    throw ValidationError(cfg.scenario == Scenario::custom ? "term" : "chiral", e.what());
  }
}

//===----------------------------------------------------------------------===//
// Sweep
//===----------------------------------------------------------------------===//

/// Column names for the configured measures, without omega, theta and nu.
inline std::vector<std::string> measure_columns(const std::vector<Measure>& measures) {
  std::vector<std::string> cols;
  for (Measure m : measures) {
    if (m != Measure::bloch) {
      cols.emplace_back(measure_name(m));
      continue;
    }
    for (Subsystem s : kAllSubsystems)
      for (const char* axis : {"x", "y", "z"})
        cols.push_back("bloch_" + std::string(tag_name(s)) + "_" + axis);
  }
  return cols;
}

struct SweepRow {
  double omega = 0.0;
  double theta = 0.0;
  std::vector<double> values;  // aligned with measure_columns
  double nu = 1.0;
};

namespace detail {

struct Baseline {
  ComplexMatrix rho;
  double eg;
  double negativity;
};

inline constexpr double kRangeSlack = 1e-9;

inline void check_range(double omega, double theta, std::string_view what, double v, double lo,
                        double hi) {
  if (!std::isfinite(v)) throw PipelineError(omega, theta, std::string(what) + " is not finite");
  if (v < lo - kRangeSlack || v > hi + kRangeSlack)
    throw PipelineError(omega, theta, std::string(what) + " out of range");
}

inline SweepRow compute_row(const Baseline& base, const std::vector<Measure>& measures,
                            double omega, double theta, const BoostSpec& boost) {
  SweepRow row{omega, theta, {}, 1.0};
  try {
    const BoostedDensity boosted = boost_two_particle(base.rho, boost);
    const EntanglementReport r = entanglement_report(boosted.rho);
    row.nu = boosted.nu;
    check_range(omega, theta, "eg", r.global_eg, 0.0, 1.0);
    check_range(omega, theta, "negativity", r.negativity_ss, 0.0, 1.0);
    check_range(omega, theta, "nu", row.nu, 0.0, HUGE_VAL);
    for (Measure m : measures) {
      switch (m) {
        case Measure::eg: row.values.push_back(r.global_eg); break;
        case Measure::delta_eg: row.values.push_back(r.global_eg - base.eg); break;
        case Measure::negativity: row.values.push_back(r.negativity_ss); break;
        case Measure::delta_negativity: row.values.push_back(r.negativity_ss - base.negativity); break;
        case Measure::bloch:
          for (Subsystem s : kAllSubsystems) {
            const BlochVector& a = r.bloch.at(s);
            for (int k = 0; k < 3; ++k) {
              check_range(omega, theta, "bloch component", a.component(k), -1.0, 1.0);
              row.values.push_back(a.component(k));
            }
          }
          break;
      }
    }
  } catch (const PipelineError&) {
    throw;
  } catch (const std::exception& e) {
    throw PipelineError(omega, theta, e.what());
  }
  return row;
}

}  // namespace detail

/// Rows in omega-outer, theta-inner order. workers = 0 picks the hardware
/// concurrency. Output does not depend on the worker count.
inline std::vector<SweepRow> run_sweep(const SweepConfig& cfg, unsigned workers = 1) {
  validate(cfg);
  detail::Baseline base{initial_density(cfg), 0.0, 0.0};
  base.eg = global_entanglement(base.rho).value;
  base.negativity = spin_spin_negativity(base.rho);

  const std::vector<double> omegas = cfg.omega_grid.values();
  std::vector<double> thetas;
  std::optional<Vec3> fixed_dir;
  if (cfg.direction) {
    fixed_dir = scaled(*cfg.direction, 1.0 / norm(*cfg.direction));
    thetas = {std::acos(std::clamp((*fixed_dir)[2], -1.0, 1.0))};
  } else {
    thetas = cfg.theta_grid.values();
  }

  const std::size_t n = omegas.size() * thetas.size();
  std::vector<SweepRow> rows(n);
  std::vector<std::exception_ptr> errors(n);
  std::atomic<std::size_t> next{0};

  auto work = [&] {
    for (std::size_t i = next.fetch_add(1); i < n; i = next.fetch_add(1)) {
      const double w = omegas[i / thetas.size()];
      const double t = thetas[i % thetas.size()];
      try {
        const BoostSpec b = fixed_dir ? BoostSpec(w, *fixed_dir) : BoostSpec::in_xz_plane(w, t);
        rows[i] = detail::compute_row(base, cfg.measures, w, t, b);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };

  if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());
  workers = static_cast<unsigned>(std::min<std::size_t>(workers, n));
  if (workers <= 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (unsigned k = 0; k < workers; ++k) pool.emplace_back(work);
  }

  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);
  return rows;
}

//===----------------------------------------------------------------------===//
// Emission
//===----------------------------------------------------------------------===//

/// 12 significant digits; magnitudes below 1e-12 print as "0".
inline std::string format_value(double v) {
  if (std::abs(v) < 1e-12) return "0";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

namespace detail {

inline void require_rows(const std::vector<SweepRow>& rows) {
  if (rows.empty()) throw Error("nothing to emit: no rows");
}

inline void require_good(const std::ostream& out) {
  if (!out) throw Error("write to output destination failed");
}

}  // namespace detail

inline void emit_csv(const std::vector<SweepRow>& rows, const std::vector<Measure>& measures,
                     std::ostream& out) {
  detail::require_rows(rows);
  std::string text = "omega,theta";
  for (const auto& c : measure_columns(measures)) text += "," + c;
  text += ",nu\n";
  for (const auto& r : rows) {
    text += format_value(r.omega) + "," + format_value(r.theta);
    for (double v : r.values) text += "," + format_value(v);
    text += "," + format_value(r.nu) + "\n";
  }
  out << text;
  out.flush();
  detail::require_good(out);
}

/// Values are the CSV strings read back, so both formats carry the same numbers.
inline void emit_json(const std::vector<SweepRow>& rows, const std::vector<Measure>& measures,
                      std::ostream& out) {
  detail::require_rows(rows);
  const auto cols = measure_columns(measures);
  auto num = [](double v) { return std::stod(format_value(v)); };
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& r : rows) {
    nlohmann::ordered_json obj;
    obj["omega"] = num(r.omega);
    obj["theta"] = num(r.theta);
    for (std::size_t k = 0; k < cols.size(); ++k) obj[cols[k]] = num(r.values.at(k));
    obj["nu"] = num(r.nu);
    arr.push_back(std::move(obj));
  }
  out << arr.dump(2) << "\n";
  out.flush();
  detail::require_good(out);
}

enum class OutputFormat { csv, json };

inline OutputFormat parse_format(std::string_view s) {
  if (s == "csv") return OutputFormat::csv;
  if (s == "json") return OutputFormat::json;
  throw ValidationError("format", "expected csv or json");
}

inline void emit(const std::vector<SweepRow>& rows, const std::vector<Measure>& measures,
                 OutputFormat format, std::ostream& out) {
  if (format == OutputFormat::csv)
    emit_csv(rows, measures, out);
  else
    emit_json(rows, measures, out);
}

}  // namespace diracent
