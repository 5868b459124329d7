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

// Symbolic exterior algebra over left-invariant generators, each term twisted
// by a flat section v_w whose weight w is an exponent vector over the
// functionals {x_1..x_s, psi_1..psi_t, psibar_1..psibar_t}.
//
// Coefficients are polynomials with Gaussian-rational coefficients in the
// real symbols b_ik, c_ik, so identities verified here hold for every model
// with the given (s, t), not just one numeric instance.

#include "otcohom/characters.hpp"
#include "otcohom/scalar.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace otcohom {

struct GaussianRational {
  Rational re{0};
  Rational im{0};

  bool is_zero() const { return re == 0 && im == 0; }
  friend GaussianRational operator+(const GaussianRational& a, const GaussianRational& b) {
    return {a.re + b.re, a.im + b.im};
  }
  friend GaussianRational operator*(const GaussianRational& a, const GaussianRational& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend bool operator==(const GaussianRational&, const GaussianRational&) = default;
};

/// Polynomial in real symbols with Gaussian-rational coefficients.
class Coefficient {
 public:
  using Monomial = std::vector<std::pair<int, int>>;  // (symbol, exponent), symbol ascending

  Coefficient() = default;
  Coefficient(Rational re, Rational im = 0);
  static Coefficient symbol(int id);

  bool is_zero() const { return terms_.empty(); }
  const std::map<Monomial, GaussianRational>& terms() const { return terms_; }

  Coefficient& operator+=(const Coefficient& o);
  friend Coefficient operator+(Coefficient a, const Coefficient& b) { return a += b; }
  friend Coefficient operator*(const Coefficient& a, const Coefficient& b);
  friend Coefficient operator-(const Coefficient& a);
  friend bool operator==(const Coefficient&, const Coefficient&) = default;

  std::string str(const std::vector<std::string>& symbol_names) const;

 private:
  void add_term(const Monomial& m, const GaussianRational& c);
  std::map<Monomial, GaussianRational> terms_;
};

using Weight = std::vector<int>;

/// Sparse element of (wedge of generators) tensor (flat sections).
class FormExpr {
 public:
  struct Key {
    std::uint64_t mask = 0;  // bit i set = generator i present, wedged in ascending order
    Weight weight;
    friend auto operator<=>(const Key&, const Key&) = default;
    friend bool operator==(const Key&, const Key&) = default;
  };

  FormExpr() = default;
  static FormExpr term(std::uint64_t mask, Weight weight, Coefficient c);

  bool is_zero() const { return terms_.empty(); }
  const std::map<Key, Coefficient>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }

  FormExpr& operator+=(const FormExpr& o);
  friend FormExpr operator+(FormExpr a, const FormExpr& b) { return a += b; }
  friend FormExpr operator-(const FormExpr& a);
  friend FormExpr operator-(const FormExpr& a, const FormExpr& b) { return a + (-b); }
  friend FormExpr operator*(const Coefficient& c, const FormExpr& e);
  friend bool operator==(const FormExpr&, const FormExpr&) = default;

  /// Weight shared by all terms, or nullopt if terms carry different twists.
  std::optional<Weight> homogeneous_weight() const;

 private:
  void add_term(const Key& k, const Coefficient& c);
  std::map<Key, Coefficient> terms_;
};

/// Graded-commutative product; weights add.
FormExpr wedge(const FormExpr& a, const FormExpr& b);

struct Generator {
  std::string name;
  int p = 0;  // bidegree for Dolbeault generators; de Rham generators use p = 1, q = 0
  int q = 0;
};

/// Generators with their structure equations and the rule for differentiating
/// a flat section of weight w.
class FormAlgebra {
 public:
  enum class Kind { Dolbeault, DeRham };

  /// Generators alpha_1..alpha_s, alphabar_1..alphabar_s, beta_1..beta_t, betabar_1..betabar_t with
  ///   dbar alpha_i = -1/2 alphabar_i ^ alpha_i,  dbar alphabar_i = 0,
  ///   dbar beta_k = -1/2 psi_k(alphabar) ^ beta_k,  dbar betabar_k = -1/2 psibar_k(alphabar) ^ betabar_k,
  ///   dbar v_w = 1/2 Psi_w(alphabar) v_w.
  /// With `exact_B`, b_ik are substituted; otherwise they stay symbolic. c_ik are always symbolic.
  static FormAlgebra dolbeault(int s, int t, const std::optional<RationalMatrix>& exact_B = std::nullopt);

  /// Generators dx_i, e^{-x_i} dy_i, e^{-psi_k} dz_k, e^{-psibar_k} dzbar_k with
  ///   d(e^{-x_i} dy_i) = -dx_i ^ e^{-x_i} dy_i,  d(e^{-psi_k} dz_k) = -psi_k(dx) ^ e^{-psi_k} dz_k,
  ///   d v_w = Psi_w(dx) v_w.
  static FormAlgebra de_rham(int s, int t, const std::optional<RationalMatrix>& exact_B = std::nullopt);

  Kind kind() const { return kind_; }
  int s() const { return s_; }
  int t() const { return t_; }
  int generator_count() const { return static_cast<int>(generators_.size()); }
  const Generator& generator_info(int i) const { return generators_.at(static_cast<std::size_t>(i)); }
  const std::vector<std::string>& symbol_names() const { return symbol_names_; }

  /// Generator i tensored with v_w (zero weight by default).
  FormExpr generator(int i, Weight weight = {}) const;
  Weight zero_weight() const { return Weight(static_cast<std::size_t>(s_ + 2 * t_), 0); }

  const FormExpr& structure(int i) const { return structure_.at(static_cast<std::size_t>(i)); }
  /// The 1-form by which the differential of v_w is multiplied.
  FormExpr twist(const Weight& w) const;

  std::string str(const FormExpr& e) const;

 private:
  FormAlgebra(Kind kind, int s, int t) : kind_(kind), s_(s), t_(t) {}
  void build(const std::optional<RationalMatrix>& exact_B);

  Kind kind_;
  int s_, t_;
  std::vector<Generator> generators_;
  std::vector<FormExpr> structure_;
  std::vector<FormExpr> twist_basis_;
  std::vector<std::string> symbol_names_;
};

/// The derivation extending the structure equations and the section rule:
/// d(omega v_w) = (d omega) v_w + (-1)^{|omega|} omega ^ twist(w) v_w.
FormExpr differential(const FormAlgebra& algebra, const FormExpr& e);
/// Dolbeault operator; requires a Dolbeault algebra.
FormExpr dbar(const FormAlgebra& algebra, const FormExpr& e);
/// Twisted Chevalley-Eilenberg differential; requires a de Rham algebra.
FormExpr d_invariant(const FormAlgebra& algebra, const FormExpr& e);

/// alpha_i v_{x_i}, beta_k v_{psi_k}.
std::vector<FormExpr> w1_generators(const FormAlgebra& dolbeault);
/// alphabar_i (trivial bundle), betabar_k v_{psibar_k}.
std::vector<FormExpr> w2_generators(const FormAlgebra& dolbeault);
/// dx_i, e^{-x_i}dy_i v_{x_i}, e^{-psi_k}dz_k v_{psi_k}, e^{-psibar_k}dzbar_k v_{psibar_k}.
std::vector<FormExpr> v_generators(const FormAlgebra& de_rham);

/// Wedge of the listed generator elements over every subset selected by `mask`.
FormExpr wedge_subset(const std::vector<FormExpr>& generators, std::uint64_t mask);

struct HarmonicMonomial {
  std::uint64_t mask;  // over the concatenated W1 then W2 generator lists
  int p = 0;
  int q = 0;
  Weight weight;
};

/// Every wedge monomial of W1 and W2 generators, with bidegree and weight.
std::vector<HarmonicMonomial> harmonic_monomials(const FormAlgebra& dolbeault);

struct StarClosureReport {
  bool passed = true;
  std::size_t checked = 0;
  std::vector<std::string> failures;
};

/// For every triple, the complement triple carries the inverse character:
/// weights sum to the unimodular vector and the product character is trivial.
StarClosureReport star_closure_check(const SolvModel& model, Backend backend);

}  // namespace otcohom
