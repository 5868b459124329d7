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

#include "fixtures.hpp"

#include "otcohom/embeddings.hpp"
#include "otcohom/errors.hpp"
#include "otcohom/exact_linalg.hpp"

#include <doctest.h>

#include <random>

using namespace otcohom;
using fixtures::poly;

TEST_CASE("rational parsing") {
  CHECK(parse_rational("3/6") == Rational(1, 2));
  CHECK(parse_rational("-0.25") == Rational(-1, 4));
  CHECK(parse_rational("1e3") == Rational(1000));
  CHECK(parse_rational("0010") == Rational(10));
  CHECK(parse_rational(" 7 ") == Rational(7));
  CHECK_THROWS_AS(parse_rational("1/0"), Error);
  CHECK_THROWS_AS(parse_rational("abc"), Error);
  CHECK(to_string(Rational(-3, 4)) == "-3/4");
}

TEST_CASE("exact linear algebra") {
  RationalMatrix m = fixtures::rmat(3, 3, {2, 1, 0, 4, 2, 0, 1, 0, 1});
  CHECK(rank(m) == 2);
  CHECK(determinant(m) == 0);
  RationalMatrix n = fixtures::rmat(2, 2, {2, 1, 1, 1});
  CHECK(determinant(n) == 1);
  RationalVector x, b(2);
  b << 3, 2;
  REQUIRE(solve(n, b, x));
  CHECK(x(0) == 1);
  CHECK(x(1) == 1);
  SpanReducer<Rational> span(fixtures::rmat(1, 3, {1, 1, 0}));
  RationalVector v(3), w(3);
  v << 2, 2, 0;
  w << 1, 0, 0;
  CHECK(span.contains(v));
  CHECK_FALSE(span.contains(w));
  CHECK(span.dimension() == 1);
}

TEST_CASE("polynomial helpers") {
  QPoly f = poly({-1, -1, 0, 1});
  CHECK(degree(f) == 3);
  CHECK(derivative(f) == poly({-1, 0, 3}));
  CHECK(degree(monic_gcd(f, derivative(f))) == 0);
  // (sqrt2 - 1)(-sqrt2 - 1)
  CHECK(resultant(poly({-2, 0, 1}), poly({-1, 1})) == -1);
  CHECK(test_irreducible(f) == Irreducibility::Irreducible);
  CHECK(test_irreducible(poly({1, 0, 0, 0, 1})) == Irreducibility::Irreducible);  // x^4 + 1
  CHECK(test_irreducible(poly({1, 0, 2, 0, 1})) == Irreducibility::Reducible);   // (x^2 + 1)^2
  CHECK(test_irreducible(poly({-2, 0, -1, 0, 1})) == Irreducibility::Reducible); // (x^2 - 2)(x^2 + 1)
  CHECK(test_irreducible(poly({-1, 1, 0, 1})) == Irreducibility::Irreducible);
}

TEST_CASE("field construction errors") {
  CHECK_THROWS_WITH_AS(NumberField::create(poly({-2, 0, 1})), doctest::Contains("degree"), Error);
  CHECK_THROWS_AS(NumberField::create(poly({-1, -1, 0, 2})), Error);     // not monic
  CHECK_THROWS_AS(NumberField::create(poly({0, -1, 0, 1})), Error);      // x (x^2 - 1)
}

TEST_CASE("degree five needs the irreducibility flag") {
  // x^5 - x - 1 is irreducible but not decidable by the built-in test.
  try {
    NumberField::create(poly({-1, -1, 0, 0, 0, 1}));
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::IrreducibilityUnverified);
  }
  CHECK_NOTHROW(NumberField::create(poly({-1, -1, 0, 0, 0, 1}), true));
  // A rational root still rejects the polynomial with the flag set.
  try {
    NumberField::create(poly({-1, 1, 0, 0, -1, 1}), true);  // (x - 1)(x^4 + 1)
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::ReduciblePolynomial);
  }
}

TEST_CASE("cubic field arithmetic") {
  NumberField k = fixtures::cubic_field();
  FieldElement th = k.generator();
  CHECK(pow(th, 3) == k.element({1, 1, 0}));
  CHECK(th * k.element({-1, 0, 1}) == k.one());  // theta (theta^2 - 1) = 1
  CHECK(inv(th) == k.element({-1, 0, 1}));
  CHECK(norm(th) == 1);
  CHECK(norm(k.element({2, 0, 0})) == 8);
  CHECK(norm(k.element({1, 1, 0})) == 1);
  CHECK(norm(k.element({-1, 0, 1})) == 1);
  CHECK(norm(k.element({-2, 1, 3})) == 37);
  CHECK(is_unit(th));
  CHECK_FALSE(is_unit(k.element({2, 0, 0})));
  CHECK_THROWS_AS(inv(k.element({0, 0, 0})), Error);
  CHECK_THROWS_AS(is_unit(k.element(RationalVector::Constant(3, Rational(1, 2)))), Error);
  CHECK(pow(th, -2) == inv(th * th));
}

TEST_CASE("field properties on random elements") {
  NumberField k = fixtures::cubic_field();
  std::mt19937_64 rng(20261015);
  std::uniform_int_distribution<long> coef(-9, 9);
  const EmbeddingSet e = find_embeddings(k, 128);
  for (int trial = 0; trial < 50; ++trial) {
    FieldElement a = k.element({coef(rng), coef(rng), coef(rng)});
    FieldElement b = k.element({coef(rng), coef(rng), coef(rng)});
    if (a.is_zero() || b.is_zero()) continue;
    CHECK(inv(inv(a)) == a);
    CHECK(a * inv(a) == k.one());
    CHECK(norm(a * b) == norm(a) * norm(b));
    CHECK(norm(a) == determinant(multiplication_matrix(a)));
    // norm = product of the embeddings
    std::complex<double> prod = 1;
    for (int i = 1; i <= 3; ++i) {
      Ball<BigFloat> v = evaluate(a, i, e);
      prod *= std::complex<double>(v.mid.re.convert_to<double>(), v.mid.im.convert_to<double>());
    }
    const double n = norm(a).convert_to<double>();
    CHECK(std::abs(prod.real() - n) <= 1e-9 * std::max(1.0, std::abs(n)));
    CHECK(std::abs(prod.imag()) <= 1e-9 * std::max(1.0, std::abs(n)));
  }
}
