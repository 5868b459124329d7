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

// The solvmanifold data attached to a number field and a rank-s group of
// totally positive units: lattice Lambda = p(l(U)) in R^s, the matrices
// B = (b_ik), C = (c_ik), and the values sigma_i(u_j) at the generators.
//
// The complex functionals are
//   psi_k(x) = (1/2) sum_i b_ik x_i + sqrt(-1) sum_i c_ik x_i,
// so that exp(psi_k(lambda_j)) = sigma_{s+k}(u_j) and psibar_k is the complex
// conjugate functional.

#include "otcohom/embeddings.hpp"
#include "otcohom/exact_linalg.hpp"
#include "otcohom/field.hpp"
#include "otcohom/scalar.hpp"

#include <optional>
#include <vector>

namespace otcohom {

inline constexpr double kDefaultTolerance = 1e-9;
inline constexpr int kDefaultPrecision = 256;

struct UnitSystem {
  std::vector<FieldElement> units;
};

/// l(u) = (log sigma_1(u), ..., log sigma_s(u), 2 log|sigma_{s+1}(u)|, ..., 2 log|sigma_{s+t}(u)|).
Eigen::VectorXd log_vector(const FieldElement& u, const EmbeddingSet& embeddings);

struct ModelOptions {
  int precision = kDefaultPrecision;
  double tolerance = kDefaultTolerance;
  bool assume_irreducible = false;
  /// Adds 2*pi*shift(j, k) to Arg sigma_{s+k}(u_j) before solving for C.
  /// Any choice yields the same characters on the lattice.
  std::optional<IntMatrix> branch_shift;
};

struct FieldProvenance {
  QPoly modulus;
  std::vector<RationalVector> unit_coords;
  int precision = 0;
  /// sigma(theta^k) in R^s x C^t for k < n: generators of the fiber lattice Delta.
  std::vector<std::vector<std::complex<double>>> fiber_generators;
};

struct ModelResiduals {
  double log_norm = 0;         // max_j |sum of l(u_j)|
  double unimodularity = 0;    // max_i |1 + sum_k b_ik|
  double modulus_fit = 0;      // max |2 log|sigma_{s+k}(u_j)| - (P B)_jk|
  double exp_reproduction = 0; // max |exp(psi_k(lambda_j)) - sigma_{s+k}(u_j)|
  double det_lattice = 0;
};

struct SolvModel {
  enum class Source { Field, Synthetic };

  int s = 0;
  int t = 0;
  Source source = Source::Synthetic;
  double tolerance = kDefaultTolerance;

  Eigen::MatrixXd lattice;  // s x s, row j = lambda_j
  Eigen::MatrixXd B;        // s x t
  Eigen::MatrixXd C;        // s x t, meaningful only when has_C
  bool has_C = false;

  /// Exact data for synthetic models: B itself and the relation lattice among
  /// the functionals {x_1..x_s, psi_1..psi_t, psibar_1..psibar_t}.
  std::optional<RationalMatrix> exact_B;
  RationalMatrix relations;  // rows of length s + 2t
  SpanReducer<Rational> relation_span;

  /// unit_values[j][i] = sigma_{i+1}(u_j); empty for generic synthetic models.
  std::vector<std::vector<ComplexBall>> unit_values;

  ModelResiduals residuals;
  std::optional<FieldProvenance> provenance;

  int functional_count() const { return s + 2 * t; }
  bool has_values() const { return !unit_values.empty(); }
  bool has_exact_relations() const { return exact_B.has_value(); }
};

/// Builds the model from a field and a unit system; |U| must equal s.
SolvModel build_model(const NumberField& field, const UnitSystem& units, const ModelOptions& options = {});

/// Builds a model from exact functional data only.
///
/// `B` must satisfy 1 + sum_k b_ik = 0 exactly. `declared_relations` are extra
/// exact linear relations among the s + 2t functionals beyond those forced by
/// B (which are psi_k + psibar_k - sum_i b_ik x_i = 0). With `C` the model also
/// carries numeric character values at the standard-basis lattice; without it
/// the model is generic and characters compare by exact relation reduction.
SolvModel synthetic_model(int s, int t, const RationalMatrix& B, const RationalMatrix& declared_relations,
                          const std::optional<Eigen::MatrixXd>& C, double tolerance = kDefaultTolerance);

/// Relations forced by B: one row per k with -b_ik at x_i and 1 at psi_k, psibar_k.
RationalMatrix relations_from_B(const RationalMatrix& B);

}  // namespace otcohom
