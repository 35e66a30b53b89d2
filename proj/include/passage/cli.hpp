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

// Command-line front end. Kept as a library so tests can drive it in-process
// with string streams; tools/passage_main.cpp only forwards argv.
//
// Problem documents are JSON objects:
//
//   {
//     "hbar": 1.0,                                  (optional)
//     "energies": [0, 1, 3],
//     "amplitudes": [[0.7071, 0], 0.5, [0.5, 0]],   (number or [re, im])
//     "ensemble": [{"weight": 0.5, "energies": [0, 1], "phase": 0}],
//     "solver": {"t_max": 10, "zero_tol": 1e-10, "tol": 1e-9,
//                "max_den": 1000000, "k_max": 10000}
//   }

#ifndef PASSAGE_CLI_HPP
#define PASSAGE_CLI_HPP

#include <complex>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace passage::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitNoPassage = 1;
inline constexpr int kExitInvalidInput = 2;

struct EnsembleEntry {
  double weight = 0.0;
  double energy_a = 0.0;
  double energy_b = 0.0;
  double phase = 0.0;
};

struct SolverSettings {
  std::optional<double> t_max;
  std::optional<double> zero_tol;
  std::optional<double> tol;
  std::optional<std::int64_t> max_den;
  std::optional<std::int64_t> k_max;
};

struct ProblemSpec {
  double hbar = 1.0;
  std::vector<double> energies;
  std::optional<std::vector<std::complex<double>>> amplitudes;
  std::optional<std::vector<EnsembleEntry>> ensemble;
  SolverSettings solver;
};

/// Malformed input, with the line it was found on (0 when unknown) and the
/// offending field path ("" for syntax errors).
class SpecError : public std::runtime_error {
 public:
  SpecError(std::size_t line, std::string field, const std::string& message);
  std::size_t line() const { return line_; }
  const std::string& field() const { return field_; }

 private:
  std::size_t line_;
  std::string field_;
};

ProblemSpec parse_problem(std::string_view text);

/// Runs one command. `args` excludes the program name. Returns the exit code.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace passage::cli

#endif  // PASSAGE_CLI_HPP
