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

// Exact arithmetic in K = Q[x]/(f) on power-basis coordinates.

#include "otcohom/scalar.hpp"

#include <initializer_list>
#include <memory>
#include <vector>

namespace otcohom {

/// Dense univariate polynomial over Q, coefficients lowest degree first.
/// Trailing zero coefficients are always trimmed; the zero polynomial is empty.
using QPoly = std::vector<Rational>;

QPoly trimmed(QPoly p);
int degree(const QPoly& p);  // -1 for the zero polynomial
QPoly derivative(const QPoly& p);
QPoly multiply(const QPoly& a, const QPoly& b);
/// Euclidean division; b must be nonzero.
void divmod(const QPoly& a, const QPoly& b, QPoly& quotient, QPoly& remainder);
QPoly monic_gcd(QPoly a, QPoly b);
/// Resultant of a and b; for monic a this equals the product of b over the roots of a.
Rational resultant(QPoly a, QPoly b);

enum class Irreducibility { Irreducible, Reducible, Unknown };

/// Decides irreducibility over Q for degree <= 4 (rational roots and
/// quadratic factors); higher degrees only detect rational roots.
Irreducibility test_irreducible(const QPoly& f);

class FieldElement;

/// The field Q[x]/(f) for a monic, squarefree, irreducible f of degree >= 3.
/// Copies are cheap and share the modulus.
class NumberField {
 public:
  /// Validates f. With `assume_irreducible` the degree > 4 irreducibility
  /// question is left to the caller; a rational root still rejects f.
  static NumberField create(QPoly f, bool assume_irreducible = false);

  int degree() const { return static_cast<int>(modulus_->size()) - 1; }
  const QPoly& modulus() const { return *modulus_; }

  FieldElement element(RationalVector coords) const;
  FieldElement element(std::initializer_list<long> coords) const;
  FieldElement one() const;
  FieldElement generator() const;

  friend bool operator==(const NumberField& a, const NumberField& b) {
    return a.modulus_ == b.modulus_ || *a.modulus_ == *b.modulus_;
  }

 private:
  explicit NumberField(std::shared_ptr<const QPoly> f) : modulus_(std::move(f)) {}
  std::shared_ptr<const QPoly> modulus_;
};

class FieldElement {
 public:
  const NumberField& field() const { return field_; }
  const RationalVector& coords() const { return coords_; }
  QPoly as_polynomial() const;
  bool is_zero() const;
  bool has_integer_coords() const;

  friend FieldElement operator+(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator-(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator*(const FieldElement& a, const FieldElement& b);
  friend bool operator==(const FieldElement& a, const FieldElement& b) {
    return a.field_ == b.field_ && a.coords_ == b.coords_;
  }

 private:
  friend class NumberField;
  FieldElement(NumberField field, RationalVector coords)
      : field_(std::move(field)), coords_(std::move(coords)) {}

  NumberField field_;
  RationalVector coords_;
};

FieldElement mul(const FieldElement& a, const FieldElement& b);
FieldElement inv(const FieldElement& a);
FieldElement pow(const FieldElement& a, long k);

/// Matrix of multiplication by a in the power basis (column j = a * theta^j).
RationalMatrix multiplication_matrix(const FieldElement& a);

/// Field norm N(a) = Res(f, a(x)).
Rational norm(const FieldElement& a);

/// True iff |N(a)| = 1; requires integer power-basis coordinates.
bool is_unit(const FieldElement& a);

}  // namespace otcohom
