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

// Brute-force Dolbeault dimensions: enumerate every basis monomial
// alpha_I ^ alphabar_J ^ beta_K ^ betabar_L, attach the character of (I, K, L)
// and tally bidegrees per class. Class membership is decided by comparing
// against each class representative directly, not through resolve().

#include "otcohom/characters.hpp"

#include <vector>

namespace oracle {

using namespace otcohom;

inline std::vector<IntMatrix> brute_tables(const Classification& c) {
  const int s = c.model.s, t = c.model.t, n = s + t;
  std::vector<IntMatrix> out(c.classes.size(), IntMatrix::Zero(n + 1, n + 1));
  auto subset = [](unsigned mask, int size) {
    std::vector<int> v;
    for (int i = 0; i < size; ++i)
      if (mask & (1u << i)) v.push_back(i + 1);
    return v;
  };
  for (unsigned I = 0; I < (1u << s); ++I)
    for (unsigned J = 0; J < (1u << s); ++J)
      for (unsigned K = 0; K < (1u << t); ++K)
        for (unsigned L = 0; L < (1u << t); ++L) {
          const IndexTriple triple{subset(I, s), subset(K, t), subset(L, t)};
          const int p = static_cast<int>(triple.I.size() + triple.K.size());
          const int q = __builtin_popcount(J) + static_cast<int>(triple.L.size());
          const Character rho = char_of_triple(c.model, triple);
          int hits = 0;
          for (std::size_t k = 0; k < c.classes.size(); ++k) {
            if (equal_on_lattice(c.model, rho, c.classes[k].character, c.backend) == Equality::Yes) {
              out[k](p, q) += 1;
              ++hits;
            }
          }
          if (hits != 1) out[0](0, 0) += 1000;  // poison: monomial in zero or several classes
        }
  return out;
}

}  // namespace oracle
