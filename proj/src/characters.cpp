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

#include "otcohom/characters.hpp"

#include "otcohom/errors.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace otcohom {

namespace {

std::string join(const std::vector<int>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(v[i]);
  }
  return out;
}

std::vector<int> subset_from_mask(unsigned mask, int size) {
  std::vector<int> out;
  for (int i = 0; i < size; ++i)
    if (mask & (1u << i)) out.push_back(i + 1);
  return out;
}

ComplexBall ipow(ComplexBall base, long k) {
  if (k < 0) {
    base = inverse(base);
    k = -k;
  }
  ComplexBall acc{1.0, 0.0};
  for (long i = 0; i < k; ++i) acc = acc * base;
  return acc;
}

void check_bounds(const std::vector<int>& v, int limit, const char* name) {
  for (int i : v)
    if (i < 1 || i > limit)
      throw Error(ErrorKind::IndexOutOfRange, std::string(name) + " index " + std::to_string(i) + " not in [1, " +
                                                  std::to_string(limit) + "]");
  if (!std::is_sorted(v.begin(), v.end()) || std::adjacent_find(v.begin(), v.end()) != v.end())
    throw Error(ErrorKind::IndexOutOfRange, std::string(name) + " must be strictly ascending");
}

}  // namespace

std::string IndexTriple::name() const {
  return "I={" + join(I) + "};K={" + join(K) + "};L={" + join(L) + "}";
}

IndexTriple complement(const IndexTriple& triple, int s, int t) {
  auto comp = [](const std::vector<int>& v, int n) {
    std::vector<int> out;
    for (int i = 1; i <= n; ++i)
      if (!std::binary_search(v.begin(), v.end(), i)) out.push_back(i);
    return out;
  };
  return {comp(triple.I, s), comp(triple.K, t), comp(triple.L, t)};
}

std::vector<IndexTriple> all_triples(int s, int t) {
  std::vector<IndexTriple> out;
  out.reserve(std::size_t{1} << (s + 2 * t));
  for (unsigned i = 0; i < (1u << s); ++i)
    for (unsigned k = 0; k < (1u << t); ++k)
      for (unsigned l = 0; l < (1u << t); ++l)
        out.push_back({subset_from_mask(i, s), subset_from_mask(k, t), subset_from_mask(l, t)});
  std::sort(out.begin(), out.end());
  return out;
}

RationalVector exponent_of(const IndexTriple& triple, int s, int t) {
  RationalVector e = RationalVector::Zero(s + 2 * t);
  for (int i : triple.I) e(i - 1) = 1;
  for (int k : triple.K) e(s + k - 1) = 1;
  for (int l : triple.L) e(s + t + l - 1) = 1;
  return e;
}

std::string_view to_string(Backend backend) { return backend == Backend::Numeric ? "numeric" : "generic"; }

std::string_view to_string(Equality eq) {
  switch (eq) {
    case Equality::Yes: return "yes";
    case Equality::No: return "no";
    case Equality::Ambiguous: return "ambiguous";
  }
  return "?";
}

Backend default_backend(const SolvModel& model) {
  return model.has_values() ? Backend::Numeric : Backend::Generic;
}

Character char_from_exponent(const SolvModel& model, const RationalVector& exponent) {
  if (exponent.size() != model.functional_count())
    throw Error(ErrorKind::IndexOutOfRange, "exponent vector must have length s + 2t");
  Character c;
  c.exponent = exponent;
  if (!model.has_values()) return c;
  for (const auto& row : model.unit_values) {
    ComplexBall acc{1.0, 0.0};
    for (Eigen::Index i = 0; i < exponent.size(); ++i) {
      if (exponent(i) == 0) continue;
      if (!is_integer(exponent(i)))
        throw Error(ErrorKind::MalformedSpec, "numeric characters need integer exponents");
      acc = acc * ipow(row[static_cast<std::size_t>(i)], mp::numerator(exponent(i)).convert_to<long>());
    }
    c.values.push_back(acc);
  }
  return c;
}

Character char_of_triple(const SolvModel& model, const IndexTriple& triple) {
  check_bounds(triple.I, model.s, "I");
  check_bounds(triple.K, model.t, "K");
  check_bounds(triple.L, model.t, "L");
  return char_from_exponent(model, exponent_of(triple, model.s, model.t));
}

Character char_from_values(const SolvModel& model, std::vector<ComplexBall> values) {
  if (static_cast<int>(values.size()) != model.s)
    throw Error(ErrorKind::MalformedSpec, "need one value per lattice generator (" + std::to_string(model.s) + ")");
  Character c;
  c.values = std::move(values);
  return c;
}

namespace {

class SpecParser {
 public:
  SpecParser(const SolvModel& model, std::string text) : model_(model) {
    for (char ch : text)
      if (!std::isspace(static_cast<unsigned char>(ch))) text_.push_back(ch);
  }

  Character parse() {
    if (text_.empty()) fail("empty character spec");
    if (text_.rfind("triple", 0) == 0) return parse_triple(text_.substr(6));
    if (text_.front() == '[') return parse_values();
    RationalVector exponent = RationalVector::Zero(model_.functional_count());
    do {
      parse_factor(exponent);
    } while (accept('*'));
    if (pos_ != text_.size()) fail("unexpected '" + text_.substr(pos_) + "'");
    return char_from_exponent(model_, exponent);
  }

 private:
  [[noreturn]] void fail(const std::string& why) const {
    throw Error(ErrorKind::MalformedSpec, why + " in character spec '" + text_ + "'");
  }

  bool accept(char c) {
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  long parse_int() {
    std::size_t start = pos_;
    if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) ++pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (pos_ == start || (pos_ == start + 1 && !std::isdigit(static_cast<unsigned char>(text_[start]))))
      fail("expected an integer");
    return std::stol(text_.substr(start, pos_ - start));
  }

  void parse_factor(RationalVector& exponent) {
    if (text_.compare(pos_, 5, "sigma") == 0) {
      pos_ += 5;
      expect('(');
      long index = parse_int();
      expect(')');
      long power = 1;
      if (accept('^')) power = parse_int();
      if (index < 1 || index > model_.functional_count())
        throw Error(ErrorKind::MalformedSpec, "sigma index " + std::to_string(index) + " out of range");
      exponent(index - 1) += power;
      return;
    }
    if (accept('1')) return;
    fail("expected sigma(i) or 1");
  }

  Character parse_triple(const std::string& body) {
    IndexTriple triple;
    std::stringstream ss(body);
    std::string part;
    while (std::getline(ss, part, ';')) {
      if (part.empty()) continue;
      auto eq = part.find('=');
      if (eq == std::string::npos) fail("expected KEY=list");
      std::string key = part.substr(0, eq), list = part.substr(eq + 1);
      std::vector<int>* target = key == "I" ? &triple.I : key == "K" ? &triple.K : key == "L" ? &triple.L : nullptr;
      if (!target) fail("unknown triple key '" + key + "'");
      std::stringstream ls(list);
      std::string item;
      while (std::getline(ls, item, ',')) {
        if (item.empty()) continue;
        try {
          target->push_back(std::stoi(item));
        } catch (const std::exception&) {
          fail("bad index '" + item + "'");
        }
      }
      std::sort(target->begin(), target->end());
    }
    try {
      return char_of_triple(model_, triple);
    } catch (const Error& e) {
      if (e.kind() == ErrorKind::IndexOutOfRange) throw Error(ErrorKind::MalformedSpec, e.what());
      throw;
    }
  }

  double parse_number() {
    std::size_t start = pos_;
    while (pos_ < text_.size() && (std::isdigit(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '.' ||
                                   text_[pos_] == '-' || text_[pos_] == '+' || text_[pos_] == 'e' ||
                                   text_[pos_] == 'E'))
      ++pos_;
    try {
      std::size_t used = 0;
      double v = std::stod(text_.substr(start, pos_ - start), &used);
      if (used != pos_ - start) fail("bad number");
      return v;
    } catch (const std::invalid_argument&) {
      fail("bad number");
    } catch (const std::out_of_range&) {
      fail("number out of range");
    }
  }

  Character parse_values() {
    expect('[');
    std::vector<ComplexBall> values;
    do {
      double re = 0, im = 0;
      if (accept('(')) {
        re = parse_number();
        if (accept(',')) im = parse_number();
        expect(')');
      } else {
        re = parse_number();
      }
      values.push_back({{re, im}, 0.0});
    } while (accept(','));
    expect(']');
    if (pos_ != text_.size()) fail("trailing characters");
    return char_from_values(model_, std::move(values));
  }

  const SolvModel& model_;
  std::string text_;
  std::size_t pos_ = 0;
};

}  // namespace

Character char_from_user(const SolvModel& model, const std::string& spec) { return SpecParser(model, spec).parse(); }

Character inverse(const Character& c) {
  Character out;
  for (const auto& v : c.values) out.values.push_back(otcohom::inverse(v));
  if (c.exponent) out.exponent = RationalVector(-*c.exponent);
  return out;
}

Character product(const Character& a, const Character& b) {
  Character out;
  if (a.values.size() == b.values.size())
    for (std::size_t j = 0; j < a.values.size(); ++j) out.values.push_back(a.values[j] * b.values[j]);
  if (a.exponent && b.exponent) out.exponent = RationalVector(*a.exponent + *b.exponent);
  return out;
}

Equality equal_on_lattice(const SolvModel& model, const Character& a, const Character& b, Backend backend) {
  if (backend == Backend::Generic) {
    if (!model.has_exact_relations())
      throw Error(ErrorKind::BackendUnavailable, "generic comparison needs a model with exact relations");
    if (!a.exponent || !b.exponent)
      throw Error(ErrorKind::BackendUnavailable, "generic comparison needs exponent data on both characters");
    return model.relation_span.contains(*a.exponent - *b.exponent) ? Equality::Yes : Equality::No;
  }
  if (a.values.empty() || b.values.empty() || a.values.size() != b.values.size())
    throw Error(ErrorKind::BackendUnavailable, "numeric comparison needs character values at every generator");
  const double tau = model.tolerance;
  bool all_close = true;
  for (std::size_t j = 0; j < a.values.size(); ++j) {
    const double d = std::abs(a.values[j].mid - b.values[j].mid);
    if (d > 10 * tau) return Equality::No;
    if (d >= tau) all_close = false;
  }
  return all_close ? Equality::Yes : Equality::Ambiguous;
}

namespace {

double max_difference(const Character& a, const Character& b) {
  double d = 0;
  for (std::size_t j = 0; j < std::min(a.values.size(), b.values.size()); ++j)
    d = std::max(d, std::abs(a.values[j].mid - b.values[j].mid));
  return d;
}

}  // namespace

std::optional<std::size_t> Classification::resolve(const Character& rho) const {
  std::optional<std::size_t> found;
  for (std::size_t c = 0; c < classes.size(); ++c) {
    switch (equal_on_lattice(model, rho, classes[c].character, backend)) {
      case Equality::Yes:
        if (found)
          throw Error(ErrorKind::AmbiguousCharacters,
                      "character matches both " + classes[*found].id + " and " + classes[c].id);
        found = c;
        break;
      case Equality::Ambiguous:
        throw Error(ErrorKind::AmbiguousCharacters,
                    "character is within the guard band of class " + classes[c].id + " (max |diff| = " +
                        std::to_string(max_difference(rho, classes[c].character)) + ")");
      case Equality::No:
        break;
    }
  }
  return found;
}

Classification classify_all(const SolvModel& model, Backend backend) {
  Classification out{model, backend, {}};
  std::vector<std::string> near;
  auto note = [&](const std::string& a, const std::string& b, const Character& ca, const Character& cb) {
    std::ostringstream os;
    os << a << " vs " << b;
    if (backend == Backend::Numeric) os << ": max |diff| = " << max_difference(ca, cb);
    near.push_back(os.str());
  };

  for (const auto& triple : all_triples(model.s, model.t)) {
    Character c = char_of_triple(model, triple);
    std::vector<std::size_t> matches;
    for (std::size_t k = 0; k < out.classes.size(); ++k) {
      auto& cls = out.classes[k];
      Equality eq = equal_on_lattice(model, c, cls.character, backend);
      if (eq == Equality::Ambiguous) note(triple.name(), cls.representative.name(), c, cls.character);
      if (eq == Equality::Yes) matches.push_back(k);
    }
    if (matches.size() > 1) {
      note(triple.name(), out.classes[matches[0]].id + " and " + out.classes[matches[1]].id, c, c);
      continue;
    }
    if (matches.size() == 1) {
      auto& cls = out.classes[matches[0]];
      for (const auto& member : cls.members) {
        if (equal_on_lattice(model, c, char_of_triple(model, member), backend) != Equality::Yes)
          note(triple.name(), member.name(), c, char_of_triple(model, member));
      }
      cls.members.push_back(triple);
      continue;
    }
    BundleClass cls;
    cls.representative = triple;
    cls.members = {triple};
    cls.character = std::move(c);
    cls.trivial = out.classes.empty();
    cls.id = cls.trivial ? "trivial" : triple.name();
    out.classes.push_back(std::move(cls));
  }

  if (!near.empty()) {
    std::ostringstream os;
    os << near.size() << " near-coincidence(s) between characters (tau = " << model.tolerance
       << "); raise the precision or lower the tolerance to separate them:";
    for (const auto& line : near) os << "\n  " << line;
    throw Error(ErrorKind::AmbiguousCharacters, os.str());
  }
  return out;
}

}  // namespace otcohom
