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

#include "otcohom/errors.hpp"
#include "otcohom/exterior.hpp"

#include <doctest.h>

#include <random>

using namespace otcohom;

namespace {

Weight unit(const FormAlgebra& a, int i) {
  Weight w = a.zero_weight();
  w[static_cast<std::size_t>(i)] = 1;
  return w;
}

FormExpr random_form(const FormAlgebra& a, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> gen(0, a.generator_count() - 1), deg(0, 3), terms(1, 3), coef(-4, 4),
      wt(-1, 1);
  FormExpr out;
  const int n = terms(rng);
  for (int k = 0; k < n; ++k) {
    std::uint64_t mask = 0;
    const int d = deg(rng);
    for (int j = 0; j < d; ++j) mask |= std::uint64_t{1} << gen(rng);
    Weight w = a.zero_weight();
    for (auto& x : w) x = wt(rng);
    out += FormExpr::term(mask, w, Coefficient(Rational(coef(rng)), Rational(coef(rng))));
  }
  return out;
}

}  // namespace

TEST_CASE("wedge basics") {
  const FormAlgebra a = FormAlgebra::dolbeault(1, 1);
  const FormExpr alpha = a.generator(0), abar = a.generator(1);
  CHECK(wedge(alpha, alpha).is_zero());
  CHECK(wedge(alpha, abar) == -wedge(abar, alpha));
  const FormExpr b = a.generator(2, unit(a, 1)), bbar = a.generator(3, unit(a, 2));
  const auto w = wedge(b, bbar).homogeneous_weight();
  REQUIRE(w);
  CHECK(*w == Weight{0, 1, 1});
  const FormExpr two = wedge(alpha, abar);
  CHECK(wedge(two, b) == wedge(b, two));  // even degree commutes
}

TEST_CASE("structure equations") {
  const FormAlgebra a = FormAlgebra::dolbeault(1, 1);
  CHECK(dbar(a, a.generator(1)).is_zero());
  const FormExpr expected = Coefficient(Rational(-1, 2)) * wedge(a.generator(1), a.generator(0));
  CHECK(dbar(a, a.generator(0)) == expected);
  // the section rule: dbar v_{x_1} = 1/2 alphabar_1 v_{x_1}
  const FormExpr v = FormExpr::term(0, unit(a, 0), Coefficient(1));
  CHECK(dbar(a, v) == FormExpr::term(std::uint64_t{1} << 1, unit(a, 0), Coefficient(Rational(1, 2))));
  CHECK(dbar(a, a.generator(0, unit(a, 0))).is_zero());
  CHECK_THROWS_AS(d_invariant(a, a.generator(0)), Error);
  const FormAlgebra r = FormAlgebra::de_rham(1, 1);
  CHECK_THROWS_AS(dbar(r, r.generator(0)), Error);
  CHECK(d_invariant(r, r.generator(0)).is_zero());
  CHECK_FALSE(d_invariant(r, r.generator(1)).is_zero());  // untwisted e^{-x} dy is not closed
}

TEST_CASE("dbar squared vanishes symbolically") {
  const FormAlgebra a = FormAlgebra::dolbeault(2, 2);
  for (int g = 0; g < a.generator_count(); ++g) CHECK(dbar(a, dbar(a, a.generator(g))).is_zero());
  std::mt19937_64 rng(42);
  for (int trial = 0; trial < 200; ++trial) {
    const FormExpr e = random_form(a, rng);
    CHECK(dbar(a, dbar(a, e)).is_zero());
  }
}

TEST_CASE("d squared vanishes on the de Rham algebra") {
  const FormAlgebra a = FormAlgebra::de_rham(2, 1);
  std::mt19937_64 rng(43);
  for (int trial = 0; trial < 200; ++trial) CHECK(d_invariant(a, d_invariant(a, random_form(a, rng))).is_zero());
}

TEST_CASE("derivation preserves weight") {
  const FormAlgebra a = FormAlgebra::dolbeault(2, 1);
  std::mt19937_64 rng(44);
  for (int trial = 0; trial < 50; ++trial) {
    const Weight w = unit(a, trial % 4);
    const FormExpr e = FormExpr::term(std::uint64_t{1} << (trial % a.generator_count()), w, Coefficient(1));
    const FormExpr d = dbar(a, e);
    if (!d.is_zero()) CHECK(*d.homogeneous_weight() == w);
  }
}

TEST_CASE("harmonic generators are closed") {
  for (int s = 1; s <= 2; ++s)
    for (int t = 1; t <= 2; ++t) {
      const FormAlgebra a = FormAlgebra::dolbeault(s, t);
      std::vector<FormExpr> gens = w1_generators(a);
      for (auto& g : w2_generators(a)) gens.push_back(g);
      for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << gens.size()); ++mask)
        CHECK(dbar(a, wedge_subset(gens, mask)).is_zero());
      const FormAlgebra r = FormAlgebra::de_rham(s, t);
      const auto v = v_generators(r);
      for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << v.size()); ++mask)
        CHECK(d_invariant(r, wedge_subset(v, mask)).is_zero());
    }
}

TEST_CASE("exact B substitution") {
  const FormAlgebra sym = FormAlgebra::dolbeault(1, 1);
  const FormAlgebra exact = FormAlgebra::dolbeault(1, 1, fixtures::rmat(1, 1, {-1}));
  const FormExpr beta = sym.generator(2);
  CHECK(sym.str(dbar(sym, beta)).find("b11") != std::string::npos);
  CHECK(exact.str(dbar(exact, exact.generator(2))).find("b11") == std::string::npos);
  CHECK(exact.str(dbar(exact, exact.generator(2))).find("c11") != std::string::npos);
}

TEST_CASE("harmonic monomials") {
  const FormAlgebra a = FormAlgebra::dolbeault(1, 1);
  const auto monos = harmonic_monomials(a);
  CHECK(monos.size() == 16);
  int bidegree11 = 0;
  for (const auto& m : monos) bidegree11 += (m.p == 1 && m.q == 1);
  CHECK(bidegree11 == 4);
}

TEST_CASE("star closure") {
  const SolvModel cubic = fixtures::cubic_model();
  const auto r = star_closure_check(cubic, Backend::Numeric);
  CHECK(r.passed);
  CHECK(r.checked == 8);
  CHECK(star_closure_check(fixtures::diag22_model(), Backend::Generic).passed);
  CHECK(star_closure_check(fixtures::quartic_model(), Backend::Numeric).passed);
  // Without the forced relation the full product is not trivial.
  SolvModel broken = fixtures::generic_model(1, 1);
  broken.relations = RationalMatrix(0, 3);
  broken.relation_span = SpanReducer<Rational>(broken.relations);
  CHECK_FALSE(star_closure_check(broken, Backend::Generic).passed);
}
