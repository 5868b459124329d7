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

#include "otcohom/field.hpp"

#include "otcohom/errors.hpp"

#include <algorithm>
#include <cstdlib>

namespace otcohom {

QPoly trimmed(QPoly p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
  return p;
}

int degree(const QPoly& p) { return static_cast<int>(trimmed(p).size()) - 1; }

QPoly derivative(const QPoly& p) {
  QPoly d;
  for (std::size_t k = 1; k < p.size(); ++k) d.push_back(p[k] * Rational(static_cast<long>(k)));
  return trimmed(std::move(d));
}

QPoly multiply(const QPoly& a, const QPoly& b) {
  if (a.empty() || b.empty()) return {};
  QPoly c(a.size() + b.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
  return trimmed(std::move(c));
}

void divmod(const QPoly& a, const QPoly& b_in, QPoly& quotient, QPoly& remainder) {
  const QPoly b = trimmed(b_in);
  if (b.empty()) throw Error(ErrorKind::NotInvertible, "polynomial division by zero");
  remainder = trimmed(a);
  const int db = degree(b);
  quotient.assign(std::max<int>(0, degree(remainder) - db + 1), Rational(0));
  while (!remainder.empty() && degree(remainder) >= db) {
    const int shift = degree(remainder) - db;
    const Rational c = remainder.back() / b.back();
    quotient[static_cast<std::size_t>(shift)] = c;
    for (int i = 0; i <= db; ++i) remainder[static_cast<std::size_t>(shift + i)] -= c * b[static_cast<std::size_t>(i)];
    remainder = trimmed(std::move(remainder));
  }
  quotient = trimmed(std::move(quotient));
}

QPoly monic_gcd(QPoly a, QPoly b) {
  a = trimmed(std::move(a));
  b = trimmed(std::move(b));
  while (!b.empty()) {
    QPoly q, r;
    divmod(a, b, q, r);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {
    const Rational lead = a.back();
    for (auto& c : a) c /= lead;
  }
  return a;
}

namespace {

Rational rpow(const Rational& base, int e) {
  Rational acc = 1;
  for (int i = 0; i < e; ++i) acc *= base;
  return acc;
}

}  // namespace

Rational resultant(QPoly a, QPoly b) {
  a = trimmed(std::move(a));
  b = trimmed(std::move(b));
  if (a.empty() || b.empty()) return 0;
  Rational scale = 1;
  if (degree(a) < degree(b)) {
    if ((degree(a) * degree(b)) % 2 != 0) scale = -scale;
    std::swap(a, b);
  }
  // Res(a, b) = (-1)^{mn} lc(b)^{m - deg r} Res(b, r) with r = a mod b.
  while (degree(b) > 0) {
    const int m = degree(a), n = degree(b);
    QPoly q, r;
    divmod(a, b, q, r);
    if (r.empty()) return 0;
    if ((m * n) % 2 != 0) scale = -scale;
    scale *= rpow(b.back(), m - degree(r));
    a = std::move(b);
    b = std::move(r);
  }
  return scale * rpow(b[0], degree(a));
}

namespace {

// Monic integer polynomial g(x) = D^n f(x / D) with the same irreducibility as f.
std::vector<Integer> integral_rescaling(const QPoly& f) {
  Integer d = 1;
  for (const auto& c : f) d = mp::lcm(d, mp::denominator(c));
  const int n = degree(f);
  std::vector<Integer> g(static_cast<std::size_t>(n + 1));
  Integer power = 1;
  for (int k = n; k >= 0; --k) {
    Rational v = f[static_cast<std::size_t>(k)] * Rational(power);
    g[static_cast<std::size_t>(k)] = mp::numerator(v);
    power *= d;
  }
  return g;
}

Integer eval(const std::vector<Integer>& g, const Integer& x) {
  Integer acc = 0;
  for (auto it = g.rbegin(); it != g.rend(); ++it) acc = acc * x + *it;
  return acc;
}

// Divisors of |n| (n != 0) up to a search limit; returns false if too large to enumerate.
bool positive_divisors(Integer n, std::vector<Integer>& out) {
  if (n < 0) n = -n;
  if (n > Integer(1000000000000LL)) return false;
  for (Integer d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      if (d * d != n) out.push_back(n / d);
    }
  }
  return true;
}

bool is_perfect_square(const Integer& n, Integer& root) {
  if (n < 0) return false;
  root = mp::sqrt(n);
  return root * root == n;
}

// Monic integer quartic x^4 + a3 x^3 + a2 x^2 + a1 x + a0: search for a factor
// pair (x^2 + a x + b)(x^2 + c x + d) with integer coefficients.
bool has_quadratic_factor(const std::vector<Integer>& g, bool& decided) {
  const Integer a0 = g[0], a1 = g[1], a2 = g[2], a3 = g[3];
  std::vector<Integer> divs;
  if (!positive_divisors(a0, divs)) {
    decided = false;
    return false;
  }
  decided = true;
  for (const auto& pd : divs) {
    for (int sign : {1, -1}) {
      const Integer b = pd * sign;
      const Integer d = a0 / b;
      if (b != d) {
        const Integer num = a1 - b * a3;
        const Integer den = d - b;
        if (num % den != 0) continue;
        const Integer a = num / den;
        const Integer c = a3 - a;
        if (b + d + a * c == a2) return true;
      } else {
        if (a1 != b * a3) continue;
        // a + c = a3, a c = a2 - 2b: a is an integer root of z^2 - a3 z + (a2 - 2b)
        Integer root;
        const Integer disc = a3 * a3 - 4 * (a2 - 2 * b);
        if (is_perfect_square(disc, root) && (a3 + root) % 2 == 0) return true;
      }
    }
  }
  return false;
}

}  // namespace

Irreducibility test_irreducible(const QPoly& f_in) {
  const QPoly f = trimmed(f_in);
  const int n = degree(f);
  if (n <= 1) return Irreducibility::Irreducible;
  const auto g = integral_rescaling(f);
  if (g[0] == 0) return Irreducibility::Reducible;
  std::vector<Integer> divs;
  if (!positive_divisors(g[0], divs)) return Irreducibility::Unknown;
  for (const auto& d : divs)
    if (eval(g, d) == 0 || eval(g, -d) == 0) return Irreducibility::Reducible;
  if (n <= 3) return Irreducibility::Irreducible;
  if (n == 4) {
    bool decided = false;
    const bool factor = has_quadratic_factor(g, decided);
    if (!decided) return Irreducibility::Unknown;
    return factor ? Irreducibility::Reducible : Irreducibility::Irreducible;
  }
  return Irreducibility::Unknown;
}

NumberField NumberField::create(QPoly f, bool assume_irreducible) {
  f = trimmed(std::move(f));
  if (otcohom::degree(f) < 3) throw Error(ErrorKind::InvalidPolynomial, "degree must be at least 3");
  if (f.back() != 1) throw Error(ErrorKind::InvalidPolynomial, "polynomial must be monic");
  if (otcohom::degree(monic_gcd(f, derivative(f))) != 0)
    throw Error(ErrorKind::InvalidPolynomial, "polynomial is not squarefree");
  switch (test_irreducible(f)) {
    case Irreducibility::Reducible:
      throw Error(ErrorKind::ReduciblePolynomial, "polynomial factors over Q");
    case Irreducibility::Unknown:
      if (!assume_irreducible)
        throw Error(ErrorKind::IrreducibilityUnverified,
                    "cannot certify irreducibility at this degree; set assume_irreducible");
      break;
    case Irreducibility::Irreducible:
      break;
  }
  return NumberField(std::make_shared<const QPoly>(std::move(f)));
}

FieldElement NumberField::element(RationalVector coords) const {
  if (coords.size() != degree())
    throw Error(ErrorKind::IndexOutOfRange, "element needs exactly " + std::to_string(degree()) + " coordinates");
  return FieldElement(*this, std::move(coords));
}

FieldElement NumberField::element(std::initializer_list<long> coords) const {
  RationalVector v = RationalVector::Zero(degree());
  if (static_cast<int>(coords.size()) > degree())
    throw Error(ErrorKind::IndexOutOfRange, "too many coordinates");
  Eigen::Index i = 0;
  for (long c : coords) v(i++) = c;
  return FieldElement(*this, std::move(v));
}

FieldElement NumberField::one() const { return element({1}); }
FieldElement NumberField::generator() const { return element({0, 1}); }

namespace {

FieldElement from_polynomial(const NumberField& field, const QPoly& p) {
  QPoly q, r;
  divmod(p, field.modulus(), q, r);
  RationalVector coords = RationalVector::Zero(field.degree());
  for (std::size_t i = 0; i < r.size(); ++i) coords(static_cast<Eigen::Index>(i)) = r[i];
  return field.element(std::move(coords));
}

void require_same_field(const FieldElement& a, const FieldElement& b) {
  if (!(a.field() == b.field())) throw Error(ErrorKind::InvalidPolynomial, "elements of different fields");
}

}  // namespace

QPoly FieldElement::as_polynomial() const {
  QPoly p(coords_.begin(), coords_.end());
  return trimmed(std::move(p));
}

bool FieldElement::is_zero() const {
  return std::all_of(coords_.begin(), coords_.end(), [](const Rational& c) { return c == 0; });
}

bool FieldElement::has_integer_coords() const {
  return std::all_of(coords_.begin(), coords_.end(), [](const Rational& c) { return is_integer(c); });
}

FieldElement operator+(const FieldElement& a, const FieldElement& b) {
  require_same_field(a, b);
  return a.field().element(a.coords() + b.coords());
}

FieldElement operator-(const FieldElement& a, const FieldElement& b) {
  require_same_field(a, b);
  return a.field().element(a.coords() - b.coords());
}

FieldElement operator*(const FieldElement& a, const FieldElement& b) {
  require_same_field(a, b);
  return from_polynomial(a.field(), multiply(a.as_polynomial(), b.as_polynomial()));
}

FieldElement mul(const FieldElement& a, const FieldElement& b) { return a * b; }

FieldElement inv(const FieldElement& a) {
  if (a.is_zero()) throw Error(ErrorKind::NotInvertible, "zero has no inverse");
  // Extended Euclid: track s with s * a == r (mod f).
  QPoly r0 = a.field().modulus(), r1 = a.as_polynomial();
  QPoly s0 = {}, s1 = {Rational(1)};
  while (degree(r1) > 0) {
    QPoly q, r;
    divmod(r0, r1, q, r);
    QPoly qs = multiply(q, s1);
    QPoly s(std::max(s0.size(), qs.size()), Rational(0));
    for (std::size_t i = 0; i < s0.size(); ++i) s[i] += s0[i];
    for (std::size_t i = 0; i < qs.size(); ++i) s[i] -= qs[i];
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = trimmed(std::move(s));
  }
  if (r1.empty())
    throw Error(ErrorKind::NotInvertible, "element shares a factor with the modulus (modulus is reducible)");
  const Rational c = r1[0];
  for (auto& coeff : s1) coeff /= c;
  return from_polynomial(a.field(), s1);
}

FieldElement pow(const FieldElement& a, long k) {
  FieldElement base = k < 0 ? inv(a) : a;
  unsigned long e = static_cast<unsigned long>(k < 0 ? -k : k);
  FieldElement result = a.field().one();
  while (e != 0) {
    if (e & 1UL) result = result * base;
    e >>= 1;
    if (e != 0) base = base * base;
  }
  return result;
}

RationalMatrix multiplication_matrix(const FieldElement& a) {
  const int n = a.field().degree();
  RationalMatrix m(n, n);
  FieldElement basis = a.field().one();
  const FieldElement theta = a.field().generator();
  for (int j = 0; j < n; ++j) {
    m.col(j) = (a * basis).coords();
    basis = basis * theta;
  }
  return m;
}

Rational norm(const FieldElement& a) { return resultant(a.field().modulus(), a.as_polynomial()); }

bool is_unit(const FieldElement& a) {
  if (!a.has_integer_coords())
    throw Error(ErrorKind::NonIntegralElement, "unit test needs integer power-basis coordinates");
  const Rational n = norm(a);
  return n == 1 || n == -1;
}

}  // namespace otcohom
