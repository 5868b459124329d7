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

#include "otcohom/field.hpp"
#include "otcohom/scalar.hpp"

#include <vector>

namespace otcohom {

/// The complex embeddings sigma_1..sigma_n of K, each as a certified disc
/// around the image of the power-basis generator.
///
/// Ordering: the s real roots ascending, then one representative of each
/// conjugate pair (positive imaginary part, sorted by real then imaginary
/// part), then the conjugates in the same order, so that
/// sigma_{s+i} = conj(sigma_{s+t+i}).
struct EmbeddingSet {
  QPoly modulus;
  int s = 0;
  int t = 0;
  int precision = 0;      // requested bits
  int working_bits = 0;   // MPFR precision the discs were certified at
  std::vector<Ball<BigFloat>> roots;

  int degree() const { return s + 2 * t; }
};

/// Isolates all roots of the monic squarefree f by Aberth iteration, doubling
/// the working precision until the inclusion discs are pairwise disjoint and
/// smaller than 2^{-precision/2}. Inclusion radii follow the simultaneous
/// (Braess-Hadeler) bound n |f(z_i)| / prod_{j != i} |z_i - z_j|.
EmbeddingSet find_embeddings(const QPoly& f, int precision = 256);
inline EmbeddingSet find_embeddings(const NumberField& field, int precision = 256) {
  return find_embeddings(field.modulus(), precision);
}

/// sigma_index(a) with 1 <= index <= n, by Horner evaluation in disc arithmetic.
Ball<BigFloat> evaluate(const FieldElement& a, int index, const EmbeddingSet& embeddings);

}  // namespace otcohom
