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

#include "otcohom/cohomology.hpp"

#include "otcohom/errors.hpp"

#include <algorithm>

namespace otcohom {

long long binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  long long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

long long class_dolbeault_dim(const BundleClass& cls, int s, int /*t*/, int p, int q) {
  long long dim = 0;
  for (const auto& m : cls.members)
    if (m.holomorphic_degree() == p) dim += binomial(s, q - m.antiholomorphic_weight());
  return dim;
}

long long class_derham_dim(const BundleClass& cls, int s, int /*t*/, int r) {
  long long dim = 0;
  for (const auto& m : cls.members)
    dim += binomial(s, r - m.holomorphic_degree() - m.antiholomorphic_weight());
  return dim;
}

long long dolbeault_dim(const Classification& c, const Character& rho, int p, int q) {
  auto idx = c.resolve(rho);
  if (!idx) return 0;
  return class_dolbeault_dim(c.classes[*idx], c.model.s, c.model.t, p, q);
}

long long derham_dim(const Classification& c, const Character& rho, int r) {
  auto idx = c.resolve(rho);
  if (!idx) return 0;
  return class_derham_dim(c.classes[*idx], c.model.s, c.model.t, r);
}

HodgeTable hodge_table(const Classification& c, std::size_t class_index) {
  const int s = c.model.s, t = c.model.t, n = s + t;
  const auto& cls = c.classes.at(class_index);
  HodgeTable table{cls.id, IntMatrix::Zero(n + 1, n + 1)};
  for (int p = 0; p <= n; ++p)
    for (int q = 0; q <= n; ++q) table.dims(p, q) = class_dolbeault_dim(cls, s, t, p, q);
  return table;
}

std::vector<HodgeTable> all_tables(const Classification& c) {
  std::vector<HodgeTable> out;
  for (std::size_t i = 0; i < c.classes.size(); ++i) out.push_back(hodge_table(c, i));
  return out;
}

DeRhamVector derham_vector(const Classification& c, std::size_t class_index) {
  const int s = c.model.s, t = c.model.t;
  const auto& cls = c.classes.at(class_index);
  DeRhamVector v{cls.id, Vector<long long>::Zero(2 * (s + t) + 1)};
  for (int r = 0; r <= 2 * (s + t); ++r) v.dims(r) = class_derham_dim(cls, s, t, r);
  return v;
}

std::vector<DeRhamVector> all_derham(const Classification& c) {
  std::vector<DeRhamVector> out;
  for (std::size_t i = 0; i < c.classes.size(); ++i) out.push_back(derham_vector(c, i));
  return out;
}

Nonvanishing nonvanishing(const Classification& c, const Character& rho, int p, int q) {
  Nonvanishing out;
  auto idx = c.resolve(rho);
  if (!idx) return out;
  const int s = c.model.s;
  for (const auto& m : c.classes[*idx].members) {
    const int l = m.antiholomorphic_weight();
    // A witness also needs q - |L| <= s, otherwise no alphabar_J completes it.
    if (m.holomorphic_degree() == p && l <= q && q - l <= s) {
      out.witnesses.push_back(m);
      out.lower_bound = std::max(out.lower_bound, binomial(s, q - l));
    }
  }
  out.nonzero = !out.witnesses.empty();
  return out;
}

DualityReport serre_check(const Classification& c) {
  DualityReport report;
  const int s = c.model.s, t = c.model.t, n = s + t;
  for (std::size_t i = 0; i < c.classes.size(); ++i) {
    const auto& cls = c.classes[i];
    auto dual = c.resolve(inverse(cls.character));
    if (!dual) throw Error(ErrorKind::MissingInverseClass, "no class carries the inverse of " + cls.id);
    const auto& other = c.classes[*dual];
    for (int p = 0; p <= n; ++p) {
      for (int q = 0; q <= n; ++q) {
        const long long a = class_dolbeault_dim(cls, s, t, p, q);
        const long long b = class_dolbeault_dim(other, s, t, n - p, n - q);
        if (a != b) {
          report.passed = false;
          report.violations.push_back(cls.id + " (" + std::to_string(p) + "," + std::to_string(q) + ") = " +
                                      std::to_string(a) + " but dual " + other.id + " gives " + std::to_string(b));
        }
      }
    }
  }
  return report;
}

long long tangent_cohomology(const Classification& c, int p, int q) {
  const int s = c.model.s, t = c.model.t;
  long long total = 0;
  for (const auto& triple : all_triples(s, t)) {
    if (!triple.L.empty() || triple.holomorphic_degree() != p) continue;
    total += dolbeault_dim(c, char_of_triple(c.model, triple), 0, q);
  }
  return total;
}

}  // namespace otcohom
