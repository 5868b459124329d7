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

// Dimensions of Dolbeault and de Rham cohomology with values in flat line
// bundles. A harmonic basis of the direct sum over all bundles is given by the
// forms alpha_I ^ alphabar_J ^ beta_K ^ betabar_L twisted by the character of
// (I, K, L); the alphabar_J carry the trivial character. Hence, for the class
// of rho,
//
//   dim H^{p,q}(E_rho) = sum over members (I,K,L) with |I|+|K| = p of C(s, q - |L|),
//   dim H^r(E_rho)     = sum over members (I,K,L) of C(s, r - |I| - |K| - |L|).

#include "otcohom/characters.hpp"

#include <string>
#include <vector>

namespace otcohom {

/// C(n, k), zero outside 0 <= k <= n.
long long binomial(int n, int k);

struct HodgeTable {
  std::string class_id;
  IntMatrix dims;  // (s+t+1) x (s+t+1), indexed (p, q)
};

struct DeRhamVector {
  std::string class_id;
  Vector<long long> dims;  // length 2(s+t)+1
};

long long class_dolbeault_dim(const BundleClass& cls, int s, int t, int p, int q);
long long class_derham_dim(const BundleClass& cls, int s, int t, int r);

/// Zero when rho matches no class.
long long dolbeault_dim(const Classification& c, const Character& rho, int p, int q);
long long derham_dim(const Classification& c, const Character& rho, int r);

HodgeTable hodge_table(const Classification& c, std::size_t class_index);
std::vector<HodgeTable> all_tables(const Classification& c);
DeRhamVector derham_vector(const Classification& c, std::size_t class_index);
std::vector<DeRhamVector> all_derham(const Classification& c);

struct Nonvanishing {
  bool nonzero = false;
  std::vector<IndexTriple> witnesses;  // members with |I|+|K| = p, |L| <= q, q - |L| <= s
  long long lower_bound = 0;           // max over witnesses of C(s, q - |L|)
};

Nonvanishing nonvanishing(const Classification& c, const Character& rho, int p, int q);

struct DualityReport {
  bool passed = true;
  std::vector<std::string> violations;
};

/// dim H^{p,q}(E_rho) = dim H^{s+t-p, s+t-q}(E_rho^{-1}) for every class.
DualityReport serre_check(const Classification& c);

/// dim H^{0,q}(X, wedge^p Theta), using Theta = sum of the bundles with
/// characters sigma_i (i <= s) and sigma_{s+k} (k <= t).
long long tangent_cohomology(const Classification& c, int p, int q);

}  // namespace otcohom
