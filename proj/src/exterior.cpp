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

#include "otcohom/exterior.hpp"

#include "otcohom/errors.hpp"

#include <bit>
#include <sstream>

namespace otcohom {

// ---------------------------------------------------------------- Coefficient

Coefficient::Coefficient(Rational re, Rational im) {
  GaussianRational c{std::move(re), std::move(im)};
  if (!c.is_zero()) terms_[{}] = c;
}

Coefficient Coefficient::symbol(int id) {
  Coefficient c;
  c.terms_[{{id, 1}}] = GaussianRational{1, 0};
  return c;
}

void Coefficient::add_term(const Monomial& m, const GaussianRational& c) {
  auto it = terms_.find(m);
  if (it == terms_.end()) {
    if (!c.is_zero()) terms_.emplace(m, c);
    return;
  }
  it->second = it->second + c;
  if (it->second.is_zero()) terms_.erase(it);
}

Coefficient& Coefficient::operator+=(const Coefficient& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

Coefficient operator*(const Coefficient& a, const Coefficient& b) {
  Coefficient out;
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      Coefficient::Monomial m;
      std::size_t i = 0, j = 0;
      while (i < ma.size() || j < mb.size()) {
        if (j == mb.size() || (i < ma.size() && ma[i].first < mb[j].first)) {
          m.push_back(ma[i++]);
        } else if (i == ma.size() || mb[j].first < ma[i].first) {
          m.push_back(mb[j++]);
        } else {
          m.emplace_back(ma[i].first, ma[i].second + mb[j].second);
          ++i;
          ++j;
        }
      }
      out.add_term(m, ca * cb);
    }
  }
  return out;
}

Coefficient operator-(const Coefficient& a) {
  Coefficient out;
  for (const auto& [m, c] : a.terms_) out.terms_[m] = GaussianRational{-c.re, -c.im};
  return out;
}

std::string Coefficient::str(const std::vector<std::string>& names) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c.re.str();
    if (c.im != 0) os << (c.im > 0 ? "+" : "") << c.im.str() << "i";
    os << ")";
    for (const auto& [id, e] : m) {
      os << "*" << (id < static_cast<int>(names.size()) ? names[static_cast<std::size_t>(id)] : "s" + std::to_string(id));
      if (e != 1) os << "^" << e;
    }
  }
  return os.str();
}

// ------------------------------------------------------------------- FormExpr

FormExpr FormExpr::term(std::uint64_t mask, Weight weight, Coefficient c) {
  FormExpr e;
  e.add_term({mask, std::move(weight)}, c);
  return e;
}

void FormExpr::add_term(const Key& k, const Coefficient& c) {
  if (c.is_zero()) return;
  auto it = terms_.find(k);
  if (it == terms_.end()) {
    terms_.emplace(k, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

FormExpr& FormExpr::operator+=(const FormExpr& o) {
  for (const auto& [k, c] : o.terms_) add_term(k, c);
  return *this;
}

FormExpr operator-(const FormExpr& a) {
  FormExpr out;
  for (const auto& [k, c] : a.terms_) out.terms_.emplace(k, -c);
  return out;
}

FormExpr operator*(const Coefficient& c, const FormExpr& e) {
  FormExpr out;
  for (const auto& [k, v] : e.terms_) out.add_term(k, c * v);
  return out;
}

std::optional<Weight> FormExpr::homogeneous_weight() const {
  if (terms_.empty()) return std::nullopt;
  const Weight& w = terms_.begin()->first.weight;
  for (const auto& [k, c] : terms_)
    if (k.weight != w) return std::nullopt;
  return w;
}

namespace {

// Sign of reordering (a-generators) ^ (b-generators) into ascending order.
int merge_sign(std::uint64_t a, std::uint64_t b) {
  int swaps = 0;
  while (b != 0) {
    const int j = std::countr_zero(b);
    b &= b - 1;
    swaps += std::popcount(j + 1 < 64 ? (a >> (j + 1)) : 0);
  }
  return (swaps % 2 == 0) ? 1 : -1;
}

Weight add_weights(const Weight& a, const Weight& b) {
  if (a.empty()) return b;
  if (b.empty()) return a;
  Weight w(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) w[i] = a[i] + b[i];
  return w;
}

}  // namespace

FormExpr wedge(const FormExpr& a, const FormExpr& b) {
  FormExpr out;
  for (const auto& [ka, ca] : a.terms()) {
    for (const auto& [kb, cb] : b.terms()) {
      if (ka.mask & kb.mask) continue;
      Coefficient c = ca * cb;
      if (merge_sign(ka.mask, kb.mask) < 0) c = -c;
      out += FormExpr::term(ka.mask | kb.mask, add_weights(ka.weight, kb.weight), c);
    }
  }
  return out;
}

// ---------------------------------------------------------------- FormAlgebra

FormAlgebra FormAlgebra::dolbeault(int s, int t, const std::optional<RationalMatrix>& exact_B) {
  FormAlgebra a(Kind::Dolbeault, s, t);
  a.build(exact_B);
  return a;
}

FormAlgebra FormAlgebra::de_rham(int s, int t, const std::optional<RationalMatrix>& exact_B) {
  FormAlgebra a(Kind::DeRham, s, t);
  a.build(exact_B);
  return a;
}

void FormAlgebra::build(const std::optional<RationalMatrix>& exact_B) {
  const int s = s_, t = t_;
  if (s < 1 || t < 1 || 2 * (s + t) > 64) throw Error(ErrorKind::IndexOutOfRange, "unsupported (s, t)");
  if (exact_B && (exact_B->rows() != s || exact_B->cols() != t))
    throw Error(ErrorKind::MalformedSpec, "B must be s x t");

  const bool dol = kind_ == Kind::Dolbeault;
  auto label = [](const char* stem, int i) { return std::string(stem) + std::to_string(i); };
  for (int i = 1; i <= s; ++i) generators_.push_back({label(dol ? "a" : "dx", i), 1, 0});
  for (int i = 1; i <= s; ++i)
    generators_.push_back(dol ? Generator{label("abar", i), 0, 1} : Generator{label("ey", i), 1, 0});
  for (int k = 1; k <= t; ++k) generators_.push_back({label(dol ? "b" : "ez", k), 1, 0});
  for (int k = 1; k <= t; ++k)
    generators_.push_back(dol ? Generator{label("bbar", k), 0, 1} : Generator{label("ezbar", k), 1, 0});

  symbol_names_.assign(static_cast<std::size_t>(2 * s * t), "");
  for (int i = 0; i < s; ++i) {
    for (int k = 0; k < t; ++k) {
      symbol_names_[static_cast<std::size_t>(2 * (i * t + k))] = "b" + std::to_string(i + 1) + std::to_string(k + 1);
      symbol_names_[static_cast<std::size_t>(2 * (i * t + k) + 1)] = "c" + std::to_string(i + 1) + std::to_string(k + 1);
    }
  }
  auto b_coeff = [&](int i, int k) {
    return exact_B ? Coefficient((*exact_B)(i, k)) : Coefficient::symbol(2 * (i * t + k));
  };
  auto c_coeff = [&](int i, int k) { return Coefficient::symbol(2 * (i * t + k) + 1); };

  // The 1-forms the real parameter directions are paired with:
  // alphabar_i for the Dolbeault operator, dx_i for the de Rham differential.
  auto base = [&](int i) { return generator(dol ? s + i : i); };
  const Coefficient half(Rational(1, 2));
  const Coefficient i_unit(0, 1);

  // psi_k(base) = sum_i (b_ik / 2 + sqrt(-1) c_ik) base_i, psibar_k with -sqrt(-1).
  auto psi = [&](int k, bool conjugate) {
    FormExpr f;
    for (int i = 0; i < s; ++i) {
      Coefficient c = half * b_coeff(i, k) + (conjugate ? -(i_unit * c_coeff(i, k)) : i_unit * c_coeff(i, k));
      f += c * base(i);
    }
    return f;
  };

  // Dolbeault: dbar v_w = 1/2 Psi_w(alphabar) v_w; de Rham: d v_w = Psi_w(dx) v_w.
  const Coefficient section_factor = dol ? half : Coefficient(1);
  for (int i = 0; i < s; ++i) twist_basis_.push_back(section_factor * base(i));
  for (int k = 0; k < t; ++k) twist_basis_.push_back(section_factor * psi(k, false));
  for (int k = 0; k < t; ++k) twist_basis_.push_back(section_factor * psi(k, true));

  // Structure equations.
  const Coefficient structure_factor = dol ? -half : Coefficient(-1);
  structure_.resize(generators_.size());
  for (int i = 0; i < s; ++i) {
    if (dol) {
      structure_[static_cast<std::size_t>(i)] = structure_factor * wedge(base(i), generator(i));
    } else {
      structure_[static_cast<std::size_t>(s + i)] = structure_factor * wedge(base(i), generator(s + i));
    }
  }
  for (int k = 0; k < t; ++k) {
    structure_[static_cast<std::size_t>(2 * s + k)] = structure_factor * wedge(psi(k, false), generator(2 * s + k));
    structure_[static_cast<std::size_t>(2 * s + t + k)] =
        structure_factor * wedge(psi(k, true), generator(2 * s + t + k));
  }
}

FormExpr FormAlgebra::generator(int i, Weight weight) const {
  if (i < 0 || i >= generator_count()) throw Error(ErrorKind::IndexOutOfRange, "generator index");
  if (weight.empty()) weight = zero_weight();
  return FormExpr::term(std::uint64_t{1} << i, std::move(weight), Coefficient(1));
}

FormExpr FormAlgebra::twist(const Weight& w) const {
  FormExpr out;
  for (std::size_t e = 0; e < w.size() && e < twist_basis_.size(); ++e)
    if (w[e] != 0) out += Coefficient(w[e]) * twist_basis_[e];
  return out;
}

std::string FormAlgebra::str(const FormExpr& e) const {
  if (e.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, c] : e.terms()) {
    if (!first) os << " + ";
    first = false;
    os << "[" << c.str(symbol_names_) << "] ";
    bool first_gen = true;
    for (int i = 0; i < generator_count(); ++i) {
      if (!(k.mask & (std::uint64_t{1} << i))) continue;
      os << (first_gen ? "" : "^") << generators_[static_cast<std::size_t>(i)].name;
      first_gen = false;
    }
    if (first_gen) os << "1";
    os << " v(";
    for (std::size_t j = 0; j < k.weight.size(); ++j) os << (j ? "," : "") << k.weight[j];
    os << ")";
  }
  return os.str();
}

// --------------------------------------------------------------- derivations

FormExpr differential(const FormAlgebra& algebra, const FormExpr& e) {
  const Weight zero = algebra.zero_weight();
  FormExpr out;
  for (const auto& [key, coeff] : e.terms()) {
    // Leibniz over the generators in ascending order; the section weight rides
    // on the leading factor so every produced term keeps it.
    int position = 0;
    for (int i = 0; i < algebra.generator_count(); ++i) {
      const std::uint64_t bit = std::uint64_t{1} << i;
      if (!(key.mask & bit)) continue;
      const std::uint64_t before = key.mask & (bit - 1);
      const std::uint64_t after = key.mask & ~(bit | (bit - 1));
      FormExpr piece = wedge(wedge(FormExpr::term(before, key.weight, Coefficient(1)), algebra.structure(i)),
                             FormExpr::term(after, zero, Coefficient(1)));
      out += Coefficient(position % 2 == 0 ? 1 : -1) * coeff * piece;
      ++position;
    }
    // (-1)^{deg omega} omega ^ twist(w) v_w
    FormExpr section = wedge(FormExpr::term(key.mask, key.weight, Coefficient(1)), algebra.twist(key.weight));
    out += Coefficient(position % 2 == 0 ? 1 : -1) * coeff * section;
  }
  return out;
}

FormExpr dbar(const FormAlgebra& algebra, const FormExpr& e) {
  if (algebra.kind() != FormAlgebra::Kind::Dolbeault)
    throw Error(ErrorKind::BackendUnavailable, "dbar needs the Dolbeault generator set");
  return differential(algebra, e);
}

FormExpr d_invariant(const FormAlgebra& algebra, const FormExpr& e) {
  if (algebra.kind() != FormAlgebra::Kind::DeRham)
    throw Error(ErrorKind::BackendUnavailable, "d_invariant needs the de Rham generator set");
  return differential(algebra, e);
}

namespace {

Weight unit_weight(const FormAlgebra& a, int index) {
  Weight w = a.zero_weight();
  w[static_cast<std::size_t>(index)] = 1;
  return w;
}

}  // namespace

std::vector<FormExpr> w1_generators(const FormAlgebra& a) {
  const int s = a.s(), t = a.t();
  std::vector<FormExpr> out;
  for (int i = 0; i < s; ++i) out.push_back(a.generator(i, unit_weight(a, i)));
  for (int k = 0; k < t; ++k) out.push_back(a.generator(2 * s + k, unit_weight(a, s + k)));
  return out;
}

std::vector<FormExpr> w2_generators(const FormAlgebra& a) {
  const int s = a.s(), t = a.t();
  std::vector<FormExpr> out;
  for (int i = 0; i < s; ++i) out.push_back(a.generator(s + i));
  for (int k = 0; k < t; ++k) out.push_back(a.generator(2 * s + t + k, unit_weight(a, s + t + k)));
  return out;
}

std::vector<FormExpr> v_generators(const FormAlgebra& a) {
  const int s = a.s(), t = a.t();
  std::vector<FormExpr> out;
  for (int i = 0; i < s; ++i) out.push_back(a.generator(i));
  for (int i = 0; i < s; ++i) out.push_back(a.generator(s + i, unit_weight(a, i)));
  for (int k = 0; k < t; ++k) out.push_back(a.generator(2 * s + k, unit_weight(a, s + k)));
  for (int k = 0; k < t; ++k) out.push_back(a.generator(2 * s + t + k, unit_weight(a, s + t + k)));
  return out;
}

FormExpr wedge_subset(const std::vector<FormExpr>& generators, std::uint64_t mask) {
  FormExpr acc = FormExpr::term(0, {}, Coefficient(1));
  for (std::size_t i = 0; i < generators.size(); ++i)
    if (mask & (std::uint64_t{1} << i)) acc = wedge(acc, generators[i]);
  return acc;
}

std::vector<HarmonicMonomial> harmonic_monomials(const FormAlgebra& a) {
  if (a.kind() != FormAlgebra::Kind::Dolbeault)
    throw Error(ErrorKind::BackendUnavailable, "harmonic monomials live in the Dolbeault algebra");
  std::vector<FormExpr> gens = w1_generators(a);
  const std::size_t w1 = gens.size();
  for (auto& g : w2_generators(a)) gens.push_back(std::move(g));
  std::vector<HarmonicMonomial> out;
  const std::uint64_t count = std::uint64_t{1} << gens.size();
  for (std::uint64_t mask = 0; mask < count; ++mask) {
    FormExpr m = wedge_subset(gens, mask);
    HarmonicMonomial h{mask, 0, 0, a.zero_weight()};
    h.p = std::popcount(mask & ((std::uint64_t{1} << w1) - 1));
    h.q = std::popcount(mask >> w1);
    if (auto w = m.homogeneous_weight()) h.weight = *w;
    out.push_back(std::move(h));
  }
  return out;
}

StarClosureReport star_closure_check(const SolvModel& model, Backend backend) {
  StarClosureReport report;
  const int s = model.s, t = model.t;
  const RationalVector unimodular = RationalVector::Constant(s + 2 * t, Rational(1));
  const Character full = char_from_exponent(model, unimodular);
  const Character trivial = char_from_exponent(model, RationalVector::Zero(s + 2 * t));
  for (const auto& triple : all_triples(s, t)) {
    ++report.checked;
    const IndexTriple comp = complement(triple, s, t);
    const RationalVector sum = exponent_of(triple, s, t) + exponent_of(comp, s, t);
    if (sum != unimodular) {
      report.failures.push_back(triple.name() + ": weights do not sum to the unimodular vector");
      continue;
    }
    const Character a = char_of_triple(model, triple);
    const Character b = char_of_triple(model, comp);
    if (equal_on_lattice(model, product(a, b), trivial, backend) != Equality::Yes)
      report.failures.push_back(triple.name() + ": product with complement is not trivial");
    else if (equal_on_lattice(model, b, inverse(a), backend) != Equality::Yes)
      report.failures.push_back(triple.name() + ": complement is not the inverse character");
  }
  if (equal_on_lattice(model, full, trivial, backend) != Equality::Yes)
    report.failures.push_back("unimodular character is not trivial");
  report.passed = report.failures.empty();
  return report;
}

}  // namespace otcohom
