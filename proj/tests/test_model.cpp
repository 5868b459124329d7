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

using namespace otcohom;
using fixtures::rmat;

namespace {

ErrorKind kind_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("no error raised");
  return ErrorKind::MalformedSpec;
}

}  // namespace

TEST_CASE("cubic model") {
  const SolvModel m = fixtures::cubic_model();
  CHECK(m.s == 1);
  CHECK(m.t == 1);
  CHECK(m.lattice(0, 0) == doctest::Approx(0.281199574322962).epsilon(1e-14));
  CHECK(std::abs(m.B(0, 0) + 1) < 1e-12);
  CHECK(m.C(0, 0) * m.lattice(0, 0) == doctest::Approx(2.43773493228832).epsilon(1e-13));
  CHECK(m.residuals.unimodularity < 1e-12);
  CHECK(m.residuals.log_norm < 1e-12);
  CHECK(m.residuals.exp_reproduction < 1e-12);
  REQUIRE(m.unit_values.size() == 1);
  CHECK(m.unit_values[0][0].mid.real() == doctest::Approx(1.3247179572447460));
  CHECK(std::norm(m.unit_values[0][1].mid) == doctest::Approx(0.754877666246693));
  REQUIRE(m.provenance);
  CHECK(m.provenance->fiber_generators.size() == 3);
}

TEST_CASE("quartic model") {
  const SolvModel m = fixtures::quartic_model();
  CHECK(m.s == 2);
  CHECK(m.t == 1);
  CHECK(m.lattice.determinant() == doctest::Approx(1.5127973298382762).epsilon(1e-13));
  CHECK(std::abs(m.B(0, 0) + 1) < 1e-12);
  CHECK(std::abs(m.B(1, 0) + 1) < 1e-12);
  CHECK(m.C(0, 0) == doctest::Approx(5.698760946112634).epsilon(1e-12));
  CHECK(m.C(1, 0) == doctest::Approx(2.513501886023833).epsilon(1e-12));
}

TEST_CASE("branch shift moves C but not B") {
  ModelOptions opt;
  opt.branch_shift = IntMatrix::Ones(1, 1);
  const SolvModel base = fixtures::cubic_model();
  const SolvModel shifted = fixtures::cubic_model(opt);
  CHECK(shifted.B(0, 0) == doctest::Approx(base.B(0, 0)));
  CHECK((shifted.C(0, 0) - base.C(0, 0)) * base.lattice(0, 0) == doctest::Approx(2 * M_PI));
}

TEST_CASE("unit system validation") {
  NumberField k = fixtures::cubic_field();
  CHECK(kind_of([&] { build_model(k, UnitSystem{{}}); }) == ErrorKind::WrongRank);
  CHECK(kind_of([&] { build_model(k, UnitSystem{{k.element({2, 0, 0})}}); }) == ErrorKind::NotAUnit);
  // -theta is a unit with a negative real embedding
  CHECK(kind_of([&] { build_model(k, UnitSystem{{k.element({0, -1, 0})}}); }) == ErrorKind::NotTotallyPositive);
  CHECK(kind_of([&] { build_model(k, UnitSystem{{k.one()}}); }) == ErrorKind::NotALattice);
  NumberField q = fixtures::quartic_field();
  // theta^2 and theta^4 = (theta + 1)^2 are dependent
  CHECK(kind_of([&] { build_model(q, UnitSystem{{q.element({0, 0, 1, 0}), q.element({1, 2, 1, 0})}}); }) ==
        ErrorKind::NotALattice);
}

TEST_CASE("synthetic models") {
  const SolvModel m = fixtures::diag22_model();
  CHECK(m.relations.rows() == 2);
  CHECK(m.relation_span.dimension() == 2);
  CHECK_FALSE(m.has_values());
  CHECK(kind_of([] { synthetic_model(1, 1, rmat(1, 1, {-2}), RationalMatrix(0, 3), std::nullopt); }) ==
        ErrorKind::NotUnimodular);
  CHECK(kind_of([] { synthetic_model(1, 1, rmat(1, 2, {-1, 0}), RationalMatrix(0, 3), std::nullopt); }) ==
        ErrorKind::MalformedSpec);
  CHECK(kind_of([] { synthetic_model(0, 1, RationalMatrix(0, 1), RationalMatrix(0, 1), std::nullopt); }) ==
        ErrorKind::WrongSignature);
  Eigen::MatrixXd C(1, 1);
  C << 0.7;
  const SolvModel n = synthetic_model(1, 1, rmat(1, 1, {-1}), RationalMatrix(0, 3), C);
  REQUIRE(n.has_values());
  CHECK(std::abs(n.unit_values[0][1].mid - std::exp(std::complex<double>(-0.5, 0.7))) < 1e-15);
  CHECK(n.unit_values[0][2].mid == std::conj(n.unit_values[0][1].mid));
}

TEST_CASE("relations forced by B") {
  const RationalMatrix r = relations_from_B(rmat(2, 1, {-1, -1}));
  CHECK(r.rows() == 1);
  CHECK(r(0, 0) == 1);
  CHECK(r(0, 1) == 1);
  CHECK(r(0, 2) == 1);
  CHECK(r(0, 3) == 1);
}
