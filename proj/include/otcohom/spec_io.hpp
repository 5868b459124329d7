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

// Model specification documents (JSON).
//
//   {
//     "field": {"poly": ["-1", "-1", "0", "1"],      // lowest degree first
//               "units": [["0", "1", "0"]],           // power-basis coordinates
//               "assume_irreducible": false,           // optional
//               "branch_shift": [[0]]},                // optional, s x t integers
//     -- or --
//     "synthetic": {"s": 2, "t": 2, "B": [["-1", "0"], ["0", "-1"]],
//                   "relations": [],                   // optional, rows of length s + 2t
//                   "mode": "generic"},                // or "C": [[...]]
//     "options": {"precision": 256, "tolerance": 1e-9,
//                 "backend": "numeric" | "generic", "format": "json" | "csv" | "md"}
//   }
//
// Exact numbers may be JSON integers or strings "p/q" / decimals.

#include "otcohom/characters.hpp"
#include "otcohom/field.hpp"
#include "otcohom/model.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace otcohom {

struct FieldSpec {
  QPoly poly;
  std::vector<RationalVector> units;
  bool assume_irreducible = false;
  std::optional<IntMatrix> branch_shift;
};

struct SyntheticSpec {
  int s = 0;
  int t = 0;
  RationalMatrix B;
  RationalMatrix relations;  // 0 x (s + 2t) when none are declared
  std::optional<Eigen::MatrixXd> C;
};

struct SpecOptions {
  std::optional<int> precision;
  std::optional<double> tolerance;
  std::optional<Backend> backend;
  std::optional<std::string> format;
};

struct ModelSpec {
  std::optional<FieldSpec> field;
  std::optional<SyntheticSpec> synthetic;
  SpecOptions options;
  std::uint64_t input_hash = 0;
};

/// 64-bit FNV-1a.
std::uint64_t fnv1a(std::string_view bytes);
std::string hex64(std::uint64_t value);

/// Throws Error(MalformedSpec) on syntax or schema problems.
ModelSpec parse_spec(const std::string& text);
ModelSpec load_spec(const std::string& path);

/// Builds the model described by `spec` with the given numeric settings.
SolvModel build_from_spec(const ModelSpec& spec, int precision, double tolerance);

}  // namespace otcohom
