/*
   Copyright 2026 The otcohom Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#pragma once

// Analysis reports: model summary, bundle classes with their Hodge tables and
// de Rham vectors, a verification suite and provenance. Reports serialize to
// JSON (round-trippable), CSV and markdown; markdown tables put p on rows
// (ascending downward) and q on columns.

#include "otcohom/characters.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace otcohom {

struct VerificationItem {
  std::string name;
  bool passed = true;
  bool skipped = false;
  double residual = 0;  // measured defect: max deviation or violation count
  std::string detail;
  friend bool operator==(const VerificationItem&, const VerificationItem&) = default;
};

struct ClassReport {
  std::string id;
  bool trivial = false;
  std::vector<std::string> members;
  std::vector<std::vector<long long>> hodge;  // [p][q]
  std::vector<long long> derham;              // [r]
  friend bool operator==(const ClassReport&, const ClassReport&) = default;
};

struct Provenance {
  std::string input_hash;
  int precision = 0;
  double tolerance = 0;
  std::string version;
  friend bool operator==(const Provenance&, const Provenance&) = default;
};

struct Report {
  int s = 0;
  int t = 0;
  std::string source;   // "field" or "synthetic"
  std::string backend;  // "numeric" or "generic"
  std::vector<std::vector<double>> lattice;
  std::vector<std::vector<double>> B;
  std::vector<std::pair<std::string, double>> residuals;
  std::vector<ClassReport> classes;
  std::vector<VerificationItem> verification;
  Provenance provenance;

  bool all_passed() const;
  friend bool operator==(const Report&, const Report&) = default;
};

struct VerifyOptions {
  /// Symbolic checks enumerate 2^{2(s+t)} monomials; above this many
  /// generators they are reported as skipped.
  int max_symbolic_generators = 12;
};

std::vector<VerificationItem> run_verification(const Classification& c, const VerifyOptions& options = {});

Report make_report(const Classification& c, std::vector<VerificationItem> verification, Provenance provenance);

std::string to_json(const Report& r);
Report report_from_json(const std::string& text);
std::string to_csv(const Report& r);
std::string to_markdown(const Report& r);
/// format is "json", "csv" or "md".
std::string render(const Report& r, const std::string& format);

}  // namespace otcohom
