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

// Shared models for the test suites.

#include "otcohom/characters.hpp"
#include "otcohom/field.hpp"
#include "otcohom/model.hpp"

#include <initializer_list>

namespace fixtures {

using namespace otcohom;

inline QPoly poly(std::initializer_list<long> coeffs) {
  QPoly p;
  for (long c : coeffs) p.push_back(Rational(c));
  return p;
}

inline RationalMatrix rmat(int rows, int cols, std::initializer_list<Rational> entries) {
  RationalMatrix m(rows, cols);
  auto it = entries.begin();
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) m(r, c) = *it++;
  return m;
}

// x^3 - x - 1 with U = <theta>.
inline NumberField cubic_field() { return NumberField::create(poly({-1, -1, 0, 1})); }
inline SolvModel cubic_model(const ModelOptions& opt = {}) {
  NumberField k = cubic_field();
  return build_model(k, UnitSystem{{k.generator()}}, opt);
}

// x^4 - x - 1 with U = <theta^2, (theta - 1)^2>; signature (2, 1).
inline NumberField quartic_field() { return NumberField::create(poly({-1, -1, 0, 0, 1})); }
inline SolvModel quartic_model(const ModelOptions& opt = {}) {
  NumberField k = quartic_field();
  return build_model(k, UnitSystem{{k.element({0, 0, 1, 0}), k.element({1, -2, 1, 0})}}, opt);
}

// s = t = 2, B = -I, no further relations.
inline SolvModel diag22_model() {
  return synthetic_model(2, 2, rmat(2, 2, {-1, 0, 0, -1}), RationalMatrix(0, 6), std::nullopt);
}

// A unimodular generic B for each small signature.
inline RationalMatrix generic_B(int s, int t) {
  RationalMatrix B = RationalMatrix::Zero(s, t);
  if (s == t) {
    for (int i = 0; i < s; ++i) B(i, i) = -1;
  } else {
    for (int i = 0; i < s; ++i)
      for (int k = 0; k < t; ++k) B(i, k) = Rational(-1, t);
  }
  return B;
}

inline SolvModel generic_model(int s, int t) {
  return synthetic_model(s, t, generic_B(s, t), RationalMatrix(0, s + 2 * t), std::nullopt);
}

}  // namespace fixtures
