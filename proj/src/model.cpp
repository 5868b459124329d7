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

#include "otcohom/model.hpp"

#include "otcohom/errors.hpp"

#include <boost/math/constants/constants.hpp>

#include <cmath>

namespace otcohom {

namespace {

void check_totally_positive(const FieldElement& u, const EmbeddingSet& e) {
  for (int i = 1; i <= e.s; ++i) {
    Ball<BigFloat> v = evaluate(u, i, e);
    if (!(v.mid.re - v.rad > 0))
      throw Error(ErrorKind::NotTotallyPositive, "sigma_" + std::to_string(i) + "(u) is not certifiably positive");
  }
}

void check_unit(const FieldElement& u) {
  if (!is_unit(u)) throw Error(ErrorKind::NotAUnit, "norm is " + to_string(norm(u)));
}

}  // namespace

Eigen::VectorXd log_vector(const FieldElement& u, const EmbeddingSet& e) {
  check_unit(u);
  check_totally_positive(u, e);
  PrecisionGuard guard(e.working_bits);
  Eigen::VectorXd out(e.s + e.t);
  for (int i = 1; i <= e.s; ++i) out(i - 1) = log(evaluate(u, i, e).mid.re).convert_to<double>();
  for (int k = 1; k <= e.t; ++k) {
    Ball<BigFloat> v = evaluate(u, e.s + k, e);
    out(e.s + k - 1) = (log(norm2(v.mid))).convert_to<double>();
  }
  return out;
}

RationalMatrix relations_from_B(const RationalMatrix& B) {
  const Eigen::Index s = B.rows(), t = B.cols();
  RationalMatrix rel = RationalMatrix::Zero(t, s + 2 * t);
  for (Eigen::Index k = 0; k < t; ++k) {
    for (Eigen::Index i = 0; i < s; ++i) rel(k, i) = -B(i, k);
    rel(k, s + k) = 1;
    rel(k, s + t + k) = 1;
  }
  return rel;
}

SolvModel build_model(const NumberField& field, const UnitSystem& system, const ModelOptions& options) {
  const EmbeddingSet e = find_embeddings(field, options.precision);
  const int s = e.s, t = e.t, n = e.degree();
  if (static_cast<int>(system.units.size()) != s)
    throw Error(ErrorKind::WrongRank, "expected " + std::to_string(s) + " units, got " +
                                          std::to_string(system.units.size()));

  SolvModel m;
  m.s = s;
  m.t = t;
  m.source = SolvModel::Source::Field;
  m.tolerance = options.tolerance;
  m.has_C = true;

  Eigen::MatrixXd P(s, s), M(s, t), A(s, t);
  m.unit_values.assign(static_cast<std::size_t>(s), {});
  {
    PrecisionGuard guard(e.working_bits);
    const BigFloat two_pi = 2 * boost::math::constants::pi<BigFloat>();
    for (int j = 0; j < s; ++j) {
      const FieldElement& u = system.units[static_cast<std::size_t>(j)];
      check_unit(u);
      check_totally_positive(u, e);
      auto& row = m.unit_values[static_cast<std::size_t>(j)];
      for (int i = 1; i <= n; ++i) row.push_back(to_complex_ball(evaluate(u, i, e)));
      for (int i = 1; i <= s; ++i) P(j, i - 1) = log(evaluate(u, i, e).mid.re).convert_to<double>();
      for (int k = 1; k <= t; ++k) {
        Ball<BigFloat> v = evaluate(u, s + k, e);
        M(j, k - 1) = log(norm2(v.mid)).convert_to<double>();
        BigFloat angle = arg(v.mid);
        if (options.branch_shift) angle += two_pi * static_cast<double>((*options.branch_shift)(j, k - 1));
        A(j, k - 1) = angle.convert_to<double>();
      }
    }
  }

  const double det = P.determinant();
  const double scale = std::pow(std::max(P.norm(), 1e-300), s);
  m.residuals.det_lattice = det;
  if (!(std::abs(det) > options.tolerance * scale))
    throw Error(ErrorKind::NotALattice, "p(l(U)) is degenerate: det = " + std::to_string(det));

  Eigen::FullPivLU<Eigen::MatrixXd> lu(P);
  m.lattice = P;
  m.B = lu.solve(M);
  m.C = lu.solve(A);

  for (int j = 0; j < s; ++j)
    m.residuals.log_norm = std::max(m.residuals.log_norm, std::abs(P.row(j).sum() + M.row(j).sum()));
  for (int i = 0; i < s; ++i)
    m.residuals.unimodularity = std::max(m.residuals.unimodularity, std::abs(1.0 + m.B.row(i).sum()));
  const Eigen::MatrixXd PB = P * m.B, PC = P * m.C;
  for (int j = 0; j < s; ++j) {
    for (int k = 0; k < t; ++k) {
      m.residuals.modulus_fit = std::max(m.residuals.modulus_fit, std::abs(M(j, k) - PB(j, k)));
      std::complex<double> reproduced = std::exp(std::complex<double>(0.5 * PB(j, k), PC(j, k)));
      const auto& sigma = m.unit_values[static_cast<std::size_t>(j)][static_cast<std::size_t>(s + k)];
      m.residuals.exp_reproduction = std::max(m.residuals.exp_reproduction, std::abs(reproduced - sigma.mid));
    }
  }
  if (m.residuals.unimodularity > options.tolerance)
    throw Error(ErrorKind::NotUnimodular, "unimodularity residual " + std::to_string(m.residuals.unimodularity));

  FieldProvenance prov;
  prov.modulus = field.modulus();
  prov.precision = options.precision;
  for (const auto& u : system.units) prov.unit_coords.push_back(u.coords());
  FieldElement power = field.one();
  for (int k = 0; k < n; ++k) {
    std::vector<std::complex<double>> image;
    for (int i = 1; i <= s + t; ++i) image.push_back(to_complex_ball(evaluate(power, i, e)).mid);
    prov.fiber_generators.push_back(std::move(image));
    power = power * field.generator();
  }
  m.provenance = std::move(prov);
  return m;
}

SolvModel synthetic_model(int s, int t, const RationalMatrix& B, const RationalMatrix& declared,
                          const std::optional<Eigen::MatrixXd>& C, double tolerance) {
  if (s < 1 || t < 1) throw Error(ErrorKind::WrongSignature, "s and t must be positive");
  if (B.rows() != s || B.cols() != t) throw Error(ErrorKind::MalformedSpec, "B must be s x t");
  if (declared.rows() > 0 && declared.cols() != s + 2 * t)
    throw Error(ErrorKind::MalformedSpec, "relations must have length s + 2t");
  for (int i = 0; i < s; ++i) {
    Rational sum = 1;
    for (int k = 0; k < t; ++k) sum += B(i, k);
    if (sum != 0)
      throw Error(ErrorKind::NotUnimodular, "row " + std::to_string(i + 1) + ": 1 + sum_k b_ik = " + to_string(sum));
  }

  SolvModel m;
  m.s = s;
  m.t = t;
  m.source = SolvModel::Source::Synthetic;
  m.tolerance = tolerance;
  m.lattice = Eigen::MatrixXd::Identity(s, s);
  m.exact_B = B;
  m.B = Eigen::MatrixXd(s, t);
  for (int i = 0; i < s; ++i)
    for (int k = 0; k < t; ++k) m.B(i, k) = B(i, k).convert_to<double>();

  const RationalMatrix forced = relations_from_B(B);
  m.relations = RationalMatrix(forced.rows() + declared.rows(), s + 2 * t);
  m.relations << forced, declared;
  m.relation_span = SpanReducer<Rational>(m.relations);

  if (C) {
    if (C->rows() != s || C->cols() != t) throw Error(ErrorKind::MalformedSpec, "C must be s x t");
    m.C = *C;
    m.has_C = true;
    // lambda_j = e_j, so x_i(lambda_j) = delta_ij and psi_k(lambda_j) = b_jk / 2 + i c_jk.
    for (int j = 0; j < s; ++j) {
      std::vector<ComplexBall> row;
      for (int i = 0; i < s; ++i) row.push_back({std::exp(i == j ? 1.0 : 0.0), 0x1p-50});
      std::vector<ComplexBall> upper;
      for (int k = 0; k < t; ++k) {
        std::complex<double> v = std::exp(std::complex<double>(0.5 * m.B(j, k), (*C)(j, k)));
        upper.push_back({v, 4 * std::abs(v) * 0x1p-50});
      }
      row.insert(row.end(), upper.begin(), upper.end());
      for (const auto& v : upper) row.push_back(conj(v));
      m.unit_values.push_back(std::move(row));
    }
  }
  return m;
}

}  // namespace otcohom
