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

#include "brute_oracle.hpp"
#include "fixtures.hpp"

#include "otcohom/cohomology.hpp"
#include "otcohom/errors.hpp"

#include <doctest.h>

#include <map>

using namespace otcohom;

namespace {

IntMatrix table(std::initializer_list<std::initializer_list<long long>> rows) {
  IntMatrix m(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(rows.begin()->size()));
  Eigen::Index r = 0;
  for (const auto& row : rows) {
    Eigen::Index c = 0;
    for (long long v : row) m(r, c++) = v;
    ++r;
  }
  return m;
}

void check_sum_identities(const Classification& c) {
  const int n = c.model.s + c.model.t;
  IntMatrix sum = IntMatrix::Zero(n + 1, n + 1);
  for (const auto& t : all_tables(c)) sum += t.dims;
  for (int p = 0; p <= n; ++p)
    for (int q = 0; q <= n; ++q) CHECK(sum(p, q) == binomial(n, p) * binomial(n, q));
  Vector<long long> b = Vector<long long>::Zero(2 * n + 1);
  for (const auto& v : all_derham(c)) b += v.dims;
  for (int r = 0; r <= 2 * n; ++r) CHECK(b(r) == binomial(2 * n, r));
}

}  // namespace

TEST_CASE("binomial") {
  CHECK(binomial(4, 2) == 6);
  CHECK(binomial(2, 3) == 0);
  CHECK(binomial(2, -1) == 0);
  CHECK(binomial(0, 0) == 1);
}

TEST_CASE("cubic tables") {
  const Classification c = classify_all(fixtures::cubic_model());
  CHECK(hodge_table(c, 0).dims == table({{1, 1, 0}, {0, 0, 0}, {0, 1, 1}}));
  check_sum_identities(c);
  for (std::size_t i = 1; i < c.classes.size(); ++i) {
    const IndexTriple& rep = c.classes[i].representative;
    const IntMatrix d = hodge_table(c, i).dims;
    CHECK(d(0, 0) == 0);
    if (rep.L.empty()) CHECK(d.row(0).isZero());
  }
  // The (0, 0, {1}) bundle does carry H^{0,q} for q >= 1.
  const auto idx = c.resolve(char_of_triple(c.model, {{}, {}, {1}}));
  REQUIRE(idx);
  CHECK(hodge_table(c, *idx).dims == table({{0, 1, 1}, {0, 0, 0}, {0, 0, 0}}));
}

TEST_CASE("s = t = 2 diagonal tables") {
  const Classification c = classify_all(fixtures::diag22_model());
  CHECK(hodge_table(c, 0).dims ==
        table({{1, 2, 1, 0, 0}, {0, 0, 0, 0, 0}, {0, 2, 4, 2, 0}, {0, 0, 0, 0, 0}, {0, 0, 1, 2, 1}}));
  const auto idx = c.resolve(char_of_triple(c.model, {{1}, {}, {}}));
  REQUIRE(idx);
  CHECK(hodge_table(c, *idx).dims ==
        table({{0, 0, 0, 0, 0}, {1, 2, 1, 0, 0}, {0, 0, 0, 0, 0}, {0, 1, 2, 1, 0}, {0, 0, 0, 0, 0}}));
  check_sum_identities(c);
}

TEST_CASE("dimensions of unmatched characters are zero") {
  const Classification c = classify_all(fixtures::cubic_model());
  const Character odd = char_from_user(c.model, "sigma(1)^5");
  CHECK_FALSE(c.resolve(odd));
  for (int p = 0; p <= 2; ++p)
    for (int q = 0; q <= 2; ++q) CHECK(dolbeault_dim(c, odd, p, q) == 0);
  CHECK(derham_dim(c, odd, 2) == 0);
  CHECK_FALSE(nonvanishing(c, odd, 0, 0).nonzero);
}

TEST_CASE("nonvanishing witnesses and bounds") {
  const Classification c = classify_all(fixtures::diag22_model());
  const Character triv = char_from_user(c.model, "1");
  const Nonvanishing nv = nonvanishing(c, triv, 2, 2);
  CHECK(nv.nonzero);
  CHECK(nv.witnesses.size() == 2);
  CHECK(nv.lower_bound == 2);
  CHECK(dolbeault_dim(c, triv, 2, 2) == 4);  // strictly above the single-witness bound
  for (const auto& cls : c.classes)
    for (int p = 0; p <= 4; ++p)
      for (int q = 0; q <= 4; ++q) {
        const Nonvanishing v = nonvanishing(c, cls.character, p, q);
        const long long d = dolbeault_dim(c, cls.character, p, q);
        CHECK(v.nonzero == (d > 0));
        CHECK(v.lower_bound <= d);
      }
}

TEST_CASE("duality and tangent cohomology") {
  const Classification cubic = classify_all(fixtures::cubic_model());
  CHECK(serre_check(cubic).passed);
  for (int p = 1; p <= 2; ++p)
    for (int q = 0; q <= 2; ++q) CHECK(tangent_cohomology(cubic, p, q) == 0);
  CHECK(tangent_cohomology(cubic, 0, 0) == 1);
  CHECK(serre_check(classify_all(fixtures::diag22_model())).passed);
  CHECK(serre_check(classify_all(fixtures::quartic_model())).passed);
}

TEST_CASE("brute-force oracle agrees on small generic models") {
  for (int s = 1; s <= 2; ++s)
    for (int t = 1; t <= 2; ++t) {
      CAPTURE(s);
      CAPTURE(t);
      const Classification c = classify_all(fixtures::generic_model(s, t));
      const auto brute = oracle::brute_tables(c);
      for (std::size_t i = 0; i < c.classes.size(); ++i) CHECK(brute[i] == hodge_table(c, i).dims);
      check_sum_identities(c);
    }
}

TEST_CASE("brute-force oracle agrees on field models") {
  for (const SolvModel& m : {fixtures::cubic_model(), fixtures::quartic_model()}) {
    const Classification c = classify_all(m);
    const auto brute = oracle::brute_tables(c);
    for (std::size_t i = 0; i < c.classes.size(); ++i) CHECK(brute[i] == hodge_table(c, i).dims);
    check_sum_identities(c);
  }
}

TEST_CASE("cubic classes from frozen embedding values") {
  // Group triples by sigma_1^|I| sigma_2^|K| conj(sigma_2)^|L| using
  // independently computed embedding values.
  const std::complex<double> s1(1.3247179572447460, 0), s2(-0.66235897862237, 0.56227951206230);
  std::map<IndexTriple, std::complex<double>> value;
  for (const auto& t : all_triples(1, 1))
    value[t] = std::pow(s1, t.I.size()) * std::pow(s2, t.K.size()) * std::pow(std::conj(s2), t.L.size());
  const Classification c = classify_all(fixtures::cubic_model());
  for (const auto& cls : c.classes)
    for (const auto& a : all_triples(1, 1)) {
      const bool same = std::abs(value[a] - value[cls.representative]) < 1e-9;
      const bool member = std::find(cls.members.begin(), cls.members.end(), a) != cls.members.end();
      CHECK(same == member);
    }
}
