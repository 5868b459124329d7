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

// Flat line bundles E_rho are determined by the character rho on the lattice
// Lambda ~ U. Every harmonic basis form alpha_I ^ alphabar_J ^ beta_K ^ betabar_L
// is twisted by the character
//   exp(Psi_{I K Lbar}) = prod_{i in I} sigma_i * prod_{k in K} sigma_{s+k} * prod_{l in L} sigma_{s+t+l},
// so the index triple (I, K, L) determines the bundle; J never does.
//
// I runs over real places, K over the functionals psi_k, L over their
// conjugates psibar_l.

#include "otcohom/model.hpp"

#include <optional>
#include <string>
#include <vector>

namespace otcohom {

struct IndexTriple {
  std::vector<int> I;  // subset of [s], 1-based, ascending
  std::vector<int> K;  // subset of [t]
  std::vector<int> L;  // subset of [t]

  int holomorphic_degree() const { return static_cast<int>(I.size() + K.size()); }
  int antiholomorphic_weight() const { return static_cast<int>(L.size()); }
  std::string name() const;

  friend auto operator<=>(const IndexTriple&, const IndexTriple&) = default;
  friend bool operator==(const IndexTriple&, const IndexTriple&) = default;
};

/// The complement ([s] - I, [t] - K, [t] - L).
IndexTriple complement(const IndexTriple& triple, int s, int t);

/// All 2^{s+2t} triples in ascending order.
std::vector<IndexTriple> all_triples(int s, int t);

/// Exponent vector over {x_1..x_s, psi_1..psi_t, psibar_1..psibar_t}.
RationalVector exponent_of(const IndexTriple& triple, int s, int t);

struct Character {
  std::vector<ComplexBall> values;       // rho(u_j); empty when the model has no values
  std::optional<RationalVector> exponent;
};

enum class Backend { Numeric, Generic };
enum class Equality { Yes, No, Ambiguous };

std::string_view to_string(Backend backend);
std::string_view to_string(Equality eq);

/// Generic for models without numeric values, numeric otherwise.
Backend default_backend(const SolvModel& model);

Character char_of_triple(const SolvModel& model, const IndexTriple& triple);
/// Character with an arbitrary integer exponent over the s + 2t functionals.
Character char_from_exponent(const SolvModel& model, const RationalVector& exponent);
Character char_from_values(const SolvModel& model, std::vector<ComplexBall> values);

/// Parses a character expression:
///   `1` | factor ('*' factor)* | `triple I=1,2;K=1;L=` | `[(re,im), ...]`
/// where factor is `sigma(i)` optionally followed by `^k` (k may be negative).
Character char_from_user(const SolvModel& model, const std::string& spec);

Character inverse(const Character& c);
Character product(const Character& a, const Character& b);

/// Numeric: Yes iff every |a_j - b_j| < tau, Ambiguous iff some difference lies
/// in [tau, 10 tau]. Generic: Yes iff the exponent difference lies in the
/// exact span of the model's relations.
Equality equal_on_lattice(const SolvModel& model, const Character& a, const Character& b, Backend backend);

struct BundleClass {
  std::string id;  // "trivial" or the representative's name
  IndexTriple representative;
  std::vector<IndexTriple> members;
  Character character;
  bool trivial = false;
};

struct Classification {
  SolvModel model;
  Backend backend = Backend::Numeric;
  std::vector<BundleClass> classes;

  /// Index of the class whose character equals rho, or nullopt if none does.
  /// Throws AmbiguousCharacters when the comparison is not decisive.
  std::optional<std::size_t> resolve(const Character& rho) const;
  std::size_t trivial_index() const { return 0; }
};

/// Groups all index triples by their character on the lattice. Classes are
/// ordered by their (lexicographically smallest) representative; the trivial
/// class always comes first.
Classification classify_all(const SolvModel& model, Backend backend);
inline Classification classify_all(const SolvModel& model) { return classify_all(model, default_backend(model)); }

}  // namespace otcohom
