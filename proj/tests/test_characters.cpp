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

#include <doctest.h>

#include <set>

using namespace otcohom;

TEST_CASE("index triples") {
  const auto all = all_triples(2, 1);
  CHECK(all.size() == 16);
  CHECK(std::is_sorted(all.begin(), all.end()));
  const IndexTriple t{{1}, {}, {1}};
  CHECK(t.name() == "I={1};K={};L={1}");
  CHECK(complement(t, 2, 1) == IndexTriple{{2}, {1}, {}});
  CHECK(complement(complement(t, 2, 1), 2, 1) == t);
  const RationalVector e = exponent_of(t, 2, 1);
  CHECK(e(0) == 1);
  CHECK(e(1) == 0);
  CHECK(e(2) == 0);
  CHECK(e(3) == 1);
}

TEST_CASE("character values on the cubic") {
  const SolvModel m = fixtures::cubic_model();
  const Character c = char_of_triple(m, {{1}, {}, {}});
  CHECK(c.values[0].mid.real() == doctest::Approx(1.3247179572447460));
  const Character comp = char_of_triple(m, complement({{1}, {}, {}}, 1, 1));
  CHECK(comp.values[0].mid.real() == doctest::Approx(0.754877666246693));
  CHECK(equal_on_lattice(m, comp, inverse(c), Backend::Numeric) == Equality::Yes);
  CHECK(equal_on_lattice(m, char_of_triple(m, {{1}, {1}, {1}}), char_from_user(m, "1"), Backend::Numeric) ==
        Equality::Yes);
  CHECK(equal_on_lattice(m, c, char_from_user(m, "1"), Backend::Numeric) == Equality::No);
}

TEST_CASE("user character grammar") {
  const SolvModel m = fixtures::cubic_model();
  auto eq = [&](const std::string& a, const std::string& b) {
    return equal_on_lattice(m, char_from_user(m, a), char_from_user(m, b), Backend::Numeric);
  };
  CHECK(eq("sigma(1)", "triple I=1;K=;L=") == Equality::Yes);
  CHECK(eq("sigma(2)*sigma(3)", "sigma(1)^-1") == Equality::Yes);
  CHECK(eq("sigma(1)^2", "sigma(1)*sigma(1)") == Equality::Yes);
  CHECK(eq("[(1.3247179572447460,0)]", "sigma(1)") == Equality::Yes);
  CHECK(eq("[(1.32471,0)]", "sigma(1)") == Equality::No);
  CHECK_THROWS_AS(char_from_user(m, "sigma(4)"), Error);
  CHECK_THROWS_AS(char_from_user(m, "sigma(1"), Error);
  CHECK_THROWS_AS(char_from_user(m, "[(1,0),(2,0)]"), Error);
}

TEST_CASE("numeric equality has an ambiguous band") {
  const SolvModel m = fixtures::cubic_model();
  const Character c = char_of_triple(m, {{1}, {}, {}});
  const double tau = m.tolerance;
  auto shifted = [&](double d) {
    std::vector<ComplexBall> v = c.values;
    v[0].mid += d;
    return char_from_values(m, v);
  };
  CHECK(equal_on_lattice(m, c, shifted(0.1 * tau), Backend::Numeric) == Equality::Yes);
  CHECK(equal_on_lattice(m, c, shifted(3 * tau), Backend::Numeric) == Equality::Ambiguous);
  CHECK(equal_on_lattice(m, c, shifted(100 * tau), Backend::Numeric) == Equality::No);
}

TEST_CASE("cubic classification") {
  const Classification c = classify_all(fixtures::cubic_model());
  CHECK(c.backend == Backend::Numeric);
  REQUIRE(c.classes.size() == 7);
  CHECK(c.classes[0].trivial);
  CHECK(c.classes[0].id == "trivial");
  CHECK(c.classes[0].members == std::vector<IndexTriple>{{{}, {}, {}}, {{1}, {1}, {1}}});
  std::size_t total = 0;
  std::set<IndexTriple> seen;
  for (const auto& cls : c.classes)
    for (const auto& t : cls.members) {
      ++total;
      seen.insert(t);
    }
  CHECK(total == 8);
  CHECK(seen.size() == 8);  // partition
}

TEST_CASE("s = t = 2 diagonal classification") {
  const Classification c = classify_all(fixtures::diag22_model());
  CHECK(c.backend == Backend::Generic);
  CHECK(c.classes[0].members.size() == 4);
  const auto idx = c.resolve(char_of_triple(c.model, {{1}, {}, {}}));
  REQUIRE(idx);
  const auto& members = c.classes[*idx].members;
  CHECK(members == std::vector<IndexTriple>{{{1}, {}, {}}, {{1, 2}, {2}, {2}}});
  CHECK(char_from_user(c.model, "sigma(1)*sigma(3)*sigma(5)").exponent.has_value());
  CHECK(c.resolve(char_from_user(c.model, "sigma(1)*sigma(3)*sigma(5)")) == std::optional<std::size_t>(0));
  CHECK_THROWS_AS(classify_all(c.model, Backend::Numeric), Error);
}

TEST_CASE("declared relations merge classes") {
  // An extra relation x_1 = psi_1 on the s = t = 1 generic model.
  RationalMatrix rel(1, 3);
  rel << 1, -1, 0;
  const SolvModel m = synthetic_model(1, 1, fixtures::rmat(1, 1, {-1}), rel, std::nullopt);
  const Classification base = classify_all(fixtures::generic_model(1, 1));
  const Classification merged = classify_all(m);
  CHECK(merged.classes.size() < base.classes.size());
  const auto a = merged.resolve(char_of_triple(m, {{1}, {}, {}}));
  const auto b = merged.resolve(char_of_triple(m, {{}, {1}, {}}));
  CHECK(a == b);
}

TEST_CASE("ambiguity is reported") {
  const SolvModel m = fixtures::cubic_model();
  SolvModel loose = m;
  loose.tolerance = 0.1;  // characters differ by ~0.3 in places, inside the 10 tau band
  CHECK_THROWS_AS(classify_all(loose, Backend::Numeric), Error);
}
