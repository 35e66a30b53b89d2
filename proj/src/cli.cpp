// Copyright 2026 The Passage Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "passage/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <iostream>
#include <iterator>
#include <json.hpp>
#include <sstream>

#include "passage/bounds.hpp"
#include "passage/ensemble.hpp"
#include "passage/error.hpp"
#include "passage/geometry.hpp"
#include "passage/rational.hpp"
#include "passage/solver.hpp"
#include "passage/state.hpp"

namespace passage::cli {

using Json = nlohmann::ordered_json;

SpecError::SpecError(std::size_t line, std::string field, const std::string& message)
    : std::runtime_error(message), line_(line), field_(std::move(field)) {}

namespace {

// ---------------------------------------------------------------------------
// Problem document parsing

std::size_t line_at(std::string_view text, std::size_t offset) {
  offset = std::min(offset, text.size());
  return 1 + static_cast<std::size_t>(std::count(text.begin(), text.begin() + offset, '\n'));
}

class Reader {
 public:
  explicit Reader(std::string_view text) : text_(text) {}

  [[noreturn]] void fail(const std::string& field, const std::string& message) const {
    // Field paths look like "ensemble[1].weight"; report the line of the
    // last key name that appears in the document.
    std::string key = field;
    if (auto dot = key.rfind('.'); dot != std::string::npos) key = key.substr(dot + 1);
    if (auto br = key.find('['); br != std::string::npos) key = key.substr(0, br);
    std::size_t line = 0;
    if (auto pos = text_.find("\"" + key + "\""); !key.empty() && pos != std::string_view::npos) {
      line = line_at(text_, pos);
    }
    throw SpecError(line, field, message);
  }

  double number(const Json& j, const std::string& field) const {
    if (!j.is_number()) fail(field, "expected a number");
    const double v = j.get<double>();
    if (!std::isfinite(v)) fail(field, "expected a finite number");
    return v;
  }

  double positive(const Json& j, const std::string& field) const {
    const double v = number(j, field);
    if (!(v > 0.0)) fail(field, "expected a positive number");
    return v;
  }

  std::int64_t positive_integer(const Json& j, const std::string& field) const {
    if (!j.is_number_integer()) fail(field, "expected an integer");
    const auto v = j.get<std::int64_t>();
    if (v < 1) fail(field, "expected a positive integer");
    return v;
  }

  std::vector<double> numbers(const Json& j, const std::string& field) const {
    if (!j.is_array()) fail(field, "expected an array of numbers");
    std::vector<double> out;
    for (std::size_t i = 0; i < j.size(); ++i) {
      out.push_back(number(j[i], field + "[" + std::to_string(i) + "]"));
    }
    return out;
  }

  std::complex<double> amplitude(const Json& j, const std::string& field) const {
    if (j.is_number()) return {number(j, field), 0.0};
    if (!j.is_array() || j.size() != 2) fail(field, "expected a number or a [re, im] pair");
    return {number(j[0], field + "[0]"), number(j[1], field + "[1]")};
  }

 private:
  std::string_view text_;
};

}  // namespace

ProblemSpec parse_problem(std::string_view text) {
  Json doc;
  try {
    doc = Json::parse(text.begin(), text.end());
  } catch (const Json::parse_error& e) {
    throw SpecError(line_at(text, e.byte == 0 ? 0 : e.byte - 1), "", e.what());
  }
  const Reader r(text);
  if (!doc.is_object()) r.fail("", "top level must be an object");

  ProblemSpec spec;
  for (const auto& [key, value] : doc.items()) {
    if (key == "hbar") {
      spec.hbar = r.positive(value, "hbar");
    } else if (key == "energies") {
      spec.energies = r.numbers(value, "energies");
    } else if (key == "amplitudes") {
      if (!value.is_array()) r.fail("amplitudes", "expected an array");
      std::vector<std::complex<double>> amps;
      for (std::size_t i = 0; i < value.size(); ++i) {
        amps.push_back(r.amplitude(value[i], "amplitudes[" + std::to_string(i) + "]"));
      }
      spec.amplitudes = std::move(amps);
    } else if (key == "ensemble") {
      if (!value.is_array()) r.fail("ensemble", "expected an array of members");
      std::vector<EnsembleEntry> members;
      for (std::size_t i = 0; i < value.size(); ++i) {
        const std::string base = "ensemble[" + std::to_string(i) + "]";
        const Json& m = value[i];
        if (!m.is_object()) r.fail(base, "expected an object");
        EnsembleEntry entry;
        if (!m.contains("weight")) r.fail(base + ".weight", "missing");
        entry.weight = r.number(m["weight"], base + ".weight");
        if (!m.contains("energies")) r.fail(base + ".energies", "missing");
        const auto e = r.numbers(m["energies"], base + ".energies");
        if (e.size() != 2) r.fail(base + ".energies", "expected exactly two energies");
        entry.energy_a = e[0];
        entry.energy_b = e[1];
        if (m.contains("phase")) entry.phase = r.number(m["phase"], base + ".phase");
        for (const auto& [k, unused] : m.items()) {
          if (k != "weight" && k != "energies" && k != "phase") {
            r.fail(base + "." + k, "unknown member field");
          }
        }
        members.push_back(entry);
      }
      spec.ensemble = std::move(members);
    } else if (key == "solver") {
      if (!value.is_object()) r.fail("solver", "expected an object");
      for (const auto& [k, v] : value.items()) {
        const std::string field = "solver." + k;
        if (k == "t_max") spec.solver.t_max = r.positive(v, field);
        else if (k == "zero_tol") spec.solver.zero_tol = r.positive(v, field);
        else if (k == "tol") spec.solver.tol = r.positive(v, field);
        else if (k == "max_den") spec.solver.max_den = r.positive_integer(v, field);
        else if (k == "k_max") spec.solver.k_max = r.positive_integer(v, field);
        else r.fail(field, "unknown solver setting");
      }
    } else if (key == "name" || key == "description") {
      // free-form annotations
    } else {
      r.fail(key, "unknown field");
    }
  }
  return spec;
}

namespace {

// ---------------------------------------------------------------------------
// Commands

struct Flags {
  std::string input;
  double t_max = 0.0;
  bool has_t_max = false;
  double zero_tol = 0.0;
  bool has_zero_tol = false;
  std::size_t samples = 201;
  std::int64_t seed = 0;
  bool has_seed = false;
  bool report_in_pi = false;
};

class InvalidInput : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Json time_value(const TimeBound& b) {
  if (!b.is_finite()) return "inf";
  return b.value();
}

void add_time(Json& doc, const std::string& key, const Json& value, const Flags& flags) {
  doc[key] = value;
  if (!flags.report_in_pi) return;
  if (value.is_number()) doc[key + "_over_pi"] = value.get<double>() / kPi;
  else doc[key + "_over_pi"] = value;
}

EnergyState build_state(const ProblemSpec& spec) {
  if (spec.energies.empty()) throw InvalidInput("field 'energies': required for this command");
  if (!spec.amplitudes) throw InvalidInput("field 'amplitudes': required for this command");
  return make_state(spec.energies, *spec.amplitudes, spec.hbar);
}

RationalOptions rational_options(const ProblemSpec& spec) {
  RationalOptions opts;
  if (spec.solver.tol) opts.tol = *spec.solver.tol;
  if (spec.solver.max_den) opts.max_den = *spec.solver.max_den;
  return opts;
}

PassageOptions passage_options(const ProblemSpec& spec, const Flags& flags) {
  PassageOptions opts;
  opts.rational = rational_options(spec);
  if (spec.solver.t_max) opts.t_max = *spec.solver.t_max;
  if (flags.has_t_max) opts.t_max = flags.t_max;
  if (spec.solver.zero_tol) opts.zero_tol = *spec.solver.zero_tol;
  if (flags.has_zero_tol) opts.zero_tol = flags.zero_tol;
  return opts;
}

Json header(std::string_view command, const ProblemSpec& spec, const Flags& flags) {
  Json doc;
  doc["command"] = command;
  doc["hbar"] = spec.hbar;
  if (flags.has_seed) doc["seed"] = flags.seed;
  return doc;
}

int cmd_bounds(const ProblemSpec& spec, const Flags& flags, std::ostream& out) {
  const EnergyState state = build_state(spec);
  const BoundsReport report = bounds_report(state);
  Json doc = header("bounds", spec, flags);
  doc["delta_h"] = report.delta_h;
  add_time(doc, "fleming", time_value(report.fleming), flags);
  if (report.delta_e_passage) add_time(doc, "delta_e_passage", *report.delta_e_passage, flags);
  add_time(doc, "margolus_levitin", time_value(report.margolus_levitin), flags);
  doc["ml_never_sharper"] = report.ml_never_sharper;
  out << doc.dump(2) << '\n';
  return kExitOk;
}

int cmd_passage(const ProblemSpec& spec, const Flags& flags, std::ostream& out) {
  const EnergyState state = build_state(spec);
  const BoundsReport report = bounds_report(state);
  const PassageResult result = find_passage(state, passage_options(spec, flags));

  Json doc = header("passage", spec, flags);
  doc["found"] = result.found;
  add_time(doc, "time", result.time ? Json(*result.time) : Json(nullptr), flags);
  doc["residual"] = result.residual;
  doc["min_location"] = result.min_location;
  doc["window"] = result.window;
  doc["method"] = to_string(result.method);
  add_time(doc, "fleming", time_value(report.fleming), flags);
  doc["fleming_ratio"] = result.fleming_ratio ? Json(*result.fleming_ratio) : Json(nullptr);
  doc["attainment"] = to_string(classify_attainment(result, report));
  if (result.found) {
    doc["geodesic"] = geodesic_check(state, *result.time);
    doc["ml_never_sharper"] = ml_never_sharper_than(report, *result.time);
  }
  out << doc.dump(2) << '\n';
  return result.found ? kExitOk : kExitNoPassage;
}

void put_number(std::string& line, double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 17);
  line.append(buf, res.ptr);
}

int cmd_trajectory(const ProblemSpec& spec, const Flags& flags, std::ostream& out) {
  const EnergyState state = build_state(spec);
  if (flags.samples < 2) throw InvalidInput("--samples must be at least 2");
  double t_max = 0.0;
  if (flags.has_t_max) {
    t_max = flags.t_max;
  } else if (spec.solver.t_max) {
    t_max = *spec.solver.t_max;
  } else if (state.support_size() >= 2) {
    t_max = default_window(state, passage_options(spec, flags));
  } else {
    throw InvalidInput("an eigenstate needs an explicit --t-max");
  }
  const auto samples = survival_scan(state, t_max, flags.samples);
  const ProjectivePoint origin = evolve(state, 0.0);

  std::string text = "t,re_a,im_a,survival_prob,fs_distance\n";
  for (std::size_t k = 0; k < samples.size(); ++k) {
    const SurvivalSample& s = samples[k];
    // Row 0 is the exact anchor a(0) = 1.
    const Complex a = (k == 0) ? Complex{1.0, 0.0} : s.amplitude;
    const double prob = (k == 0) ? 1.0 : s.probability;
    const double dist = (k == 0) ? 0.0 : fs_distance(origin, evolve(state, s.t));
    put_number(text, s.t);
    text += ',';
    put_number(text, a.real());
    text += ',';
    put_number(text, a.imag());
    text += ',';
    put_number(text, prob);
    text += ',';
    put_number(text, dist);
    text += '\n';
  }
  out << text;
  return kExitOk;
}

int cmd_check_spectrum(const ProblemSpec& spec, const Flags& flags, std::ostream& out) {
  std::vector<double> levels = spec.energies;
  std::sort(levels.begin(), levels.end());
  levels.erase(std::unique(levels.begin(), levels.end(), same_level), levels.end());
  if (levels.size() < 2) throw InvalidInput("field 'energies': need at least two distinct levels");
  const RationalOptions opts = rational_options(spec);
  const RationalStructure s = analyze_spectrum(levels, spec.hbar, opts);

  Json doc = header("check-spectrum", spec, flags);
  doc["energies"] = levels;
  Json ratios = Json::array();
  for (std::size_t i = 0; i < s.frequencies.size(); ++i) {
    Json entry;
    entry["frequency"] = s.frequencies[i];
    if (const auto& r = s.ratios[i]) {
      entry["ratio"] = {r->num, r->den};
      const bool odd = (r->num % 2 != 0) && (r->den % 2 != 0);
      entry["odd_odd"] = odd;
      if (odd) {
        entry["m"] = (r->num + 1) / 2;
        entry["n"] = (r->den + 1) / 2;
      }
    } else {
      entry["ratio"] = nullptr;
      entry["odd_odd"] = false;
    }
    ratios.push_back(std::move(entry));
  }
  doc["ratios"] = std::move(ratios);
  doc["all_commensurate"] = s.all_commensurate;
  doc["fundamental"] = s.fundamental ? Json(*s.fundamental) : Json(nullptr);
  add_time(doc, "period", s.period ? Json(*s.period) : Json(nullptr), flags);
  doc["odd_odd"] = s.odd_odd;
  out << doc.dump(2) << '\n';
  return kExitOk;
}

int cmd_ensemble(const ProblemSpec& spec, const Flags& flags, std::ostream& out) {
  if (!spec.ensemble || spec.ensemble->empty()) {
    throw InvalidInput("field 'ensemble': required for this command");
  }
  std::vector<EnsembleMember> members;
  for (const EnsembleEntry& e : *spec.ensemble) {
    const double energies[] = {e.energy_a, e.energy_b};
    const Complex amps[] = {Complex{1.0, 0.0}, std::polar(1.0, e.phase)};
    members.push_back({e.weight, make_state(energies, amps, spec.hbar)});
  }
  const Ensemble ens = make_ensemble(std::move(members));
  const auto freqs = ens.frequencies();

  Json doc = header("ensemble", spec, flags);
  Json listed = Json::array();
  for (std::size_t m = 0; m < ens.members().size(); ++m) {
    const auto& member = ens.members()[m];
    const auto support = member.state.support();
    Json entry;
    entry["weight"] = member.weight;
    entry["energies"] = {member.state.energies()[support[0]], member.state.energies()[support[1]]};
    entry["frequency"] = freqs[m];
    listed.push_back(std::move(entry));
  }

  std::optional<double> time;
  std::string outcome;
  try {
    const EnsemblePassage p =
        ensemble_passage_time(ens, rational_options(spec), spec.solver.k_max.value_or(10'000));
    time = p.time;
    switch (p.outcome) {
      case EnsembleOutcome::kFound: outcome = "found"; break;
      case EnsembleOutcome::kParityObstruction: outcome = "none (parity obstruction)"; break;
      case EnsembleOutcome::kBeyondSearchBound: outcome = "none (beyond search bound)"; break;
    }
    for (std::size_t m = 0; m < listed.size(); ++m) {
      listed[m]["multiple"] = p.multiples[m];
      if (p.time) listed[m]["odd_multiple"] = p.odd_multiples[m];
    }
  } catch (const Error& e) {
    if (e.code() != ErrorCode::kIncommensurateEnsemble) throw;
    outcome = "none (incommensurate)";
  }
  doc["members"] = std::move(listed);
  doc["outcome"] = outcome;
  add_time(doc, "time", time ? Json(*time) : Json(nullptr), flags);

  // Diagonal check at the simultaneous passage time, or else at the first
  // member's own passage time.
  const double t_check = time ? *time : kPi * ens.hbar() / freqs.front();
  if (time) doc["member_overlaps"] = verify_member_orthogonality(ens, *time);
  const DensityMatrix rho0 = density_matrix(ens);
  const DensityMatrix rho_t = evolve_density(rho0, rho0.levels, t_check, ens.hbar());
  const double diag_dev =
      (rho_t.entries.diagonal() - rho0.entries.diagonal()).cwiseAbs().maxCoeff();
  Json diag;
  diag["t"] = t_check;
  diag["max_deviation"] = diag_dev;
  diag["hermiticity_error"] = rho_t.hermiticity_error();
  diag["trace_error"] = rho_t.trace_error();
  diag["passed"] = diag_dev <= 1e-14 && rho_t.hermiticity_error() <= 1e-12 &&
                   rho_t.trace_error() <= 1e-12;
  doc["diagonal_invariance"] = std::move(diag);

  out << doc.dump(2) << '\n';
  return time ? kExitOk : kExitNoPassage;
}

std::string read_input(const std::string& path, std::istream& in) {
  if (path == "-") {
    return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
  }
  std::ifstream file(path, std::ios::binary);
  if (!file) throw InvalidInput("cannot open input file '" + path + "'");
  std::ostringstream buf;
  buf << file.rdbuf();
  return buf.str();
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Passage times, speed-limit bounds and spectral structure of quantum states",
               "passage"};
  app.require_subcommand(1);
  app.fallthrough();

  Flags flags;
  auto* t_max_opt = app.add_option("--t-max", flags.t_max, "search / trajectory window");
  auto* zero_tol_opt = app.add_option("--zero-tol", flags.zero_tol, "|a| counted as zero");
  app.add_option("--samples", flags.samples, "trajectory sample count")->capture_default_str();
  auto* seed_opt = app.add_option("--seed", flags.seed, "echoed into the output document");
  app.add_flag("--report-in-pi", flags.report_in_pi, "also print times divided by pi");

  using Command = int (*)(const ProblemSpec&, const Flags&, std::ostream&);
  const std::pair<const char*, Command> commands[] = {
      {"bounds", cmd_bounds},
      {"passage", cmd_passage},
      {"trajectory", cmd_trajectory},
      {"check-spectrum", cmd_check_spectrum},
      {"ensemble", cmd_ensemble},
  };
  const char* descriptions[] = {
      "Fleming, Delta E and Margolus-Levitin bounds",
      "earliest orthogonal time, attainment and geodesic verdicts",
      "CSV of the survival amplitude and distance from the initial ray",
      "rational frequency ratios, odd/odd verdicts and period",
      "simultaneous passage time of a two-level mixture",
  };
  std::vector<CLI::App*> subs;
  for (std::size_t i = 0; i < std::size(commands); ++i) {
    CLI::App* sub = app.add_subcommand(commands[i].first, descriptions[i]);
    sub->add_option("input", flags.input, "problem document, or - for standard input")
        ->required();
    subs.push_back(sub);
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "passage: " << e.what() << '\n';
    return kExitInvalidInput;
  }
  flags.has_t_max = t_max_opt->count() > 0;
  flags.has_zero_tol = zero_tol_opt->count() > 0;
  flags.has_seed = seed_opt->count() > 0;
  if (flags.has_t_max && !(flags.t_max > 0.0 && std::isfinite(flags.t_max))) {
    err << "passage: --t-max must be finite and positive\n";
    return kExitInvalidInput;
  }
  if (flags.has_zero_tol && !(flags.zero_tol > 0.0)) {
    err << "passage: --zero-tol must be positive\n";
    return kExitInvalidInput;
  }

  const std::string source = flags.input == "-" ? "<stdin>" : flags.input;
  try {
    const ProblemSpec spec = parse_problem(read_input(flags.input, in));
    for (std::size_t i = 0; i < subs.size(); ++i) {
      if (subs[i]->parsed()) return commands[i].second(spec, flags, out);
    }
  } catch (const SpecError& e) {
    err << source << ':' << e.line() << ": ";
    if (!e.field().empty()) err << "field '" << e.field() << "': ";
    err << e.what() << '\n';
    return kExitInvalidInput;
  } catch (const InvalidInput& e) {
    err << source << ": " << e.what() << '\n';
    return kExitInvalidInput;
  } catch (const Error& e) {
    err << source << ": " << to_string(e.code()) << ": " << e.what() << '\n';
    return kExitInvalidInput;
  }
  return kExitInvalidInput;
}

}  // namespace passage::cli
