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

#include "otcohom/spec_io.hpp"

#include "otcohom/errors.hpp"

#include <nlohmann/json.hpp>

#include <cstdio>
#include <fstream>
#include <sstream>

namespace otcohom {

using nlohmann::json;

std::uint64_t fnv1a(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  return h;
}

std::string hex64(std::uint64_t value) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(value));
  return buf;
}

namespace {

[[noreturn]] void malformed(const std::string& what) { throw Error(ErrorKind::MalformedSpec, what); }

Rational exact(const json& v, const std::string& where) {
  if (v.is_number_integer()) return Rational(v.get<long long>());
  if (v.is_string()) return parse_rational(v.get<std::string>());
  malformed(where + ": expected an integer or a \"p/q\" string");
}

int integer(const json& v, const std::string& where) {
  if (!v.is_number_integer()) malformed(where + ": expected an integer");
  return v.get<int>();
}

const json& require(const json& obj, const char* key, const std::string& where) {
  if (!obj.contains(key)) malformed(where + ": missing \"" + key + "\"");
  return obj.at(key);
}

void reject_unknown(const json& obj, std::initializer_list<const char*> allowed, const std::string& where) {
  for (const auto& [key, _] : obj.items()) {
    bool ok = false;
    for (const char* a : allowed) ok = ok || key == a;
    if (!ok) malformed(where + ": unknown key \"" + key + "\"");
  }
}

RationalMatrix exact_matrix(const json& v, int rows, int cols, const std::string& where) {
  if (!v.is_array() || static_cast<int>(v.size()) != rows) malformed(where + ": expected " + std::to_string(rows) + " rows");
  RationalMatrix m(rows, cols);
  for (int r = 0; r < rows; ++r) {
    const json& row = v[static_cast<std::size_t>(r)];
    if (!row.is_array() || static_cast<int>(row.size()) != cols)
      malformed(where + ": row " + std::to_string(r + 1) + " must have " + std::to_string(cols) + " entries");
    for (int c = 0; c < cols; ++c) m(r, c) = exact(row[static_cast<std::size_t>(c)], where);
  }
  return m;
}

FieldSpec parse_field(const json& f) {
  if (!f.is_object()) malformed("field: expected an object");
  reject_unknown(f, {"poly", "units", "assume_irreducible", "branch_shift"}, "field");
  FieldSpec spec;
  const json& poly = require(f, "poly", "field");
  if (!poly.is_array() || poly.empty()) malformed("field.poly: expected a coefficient list");
  for (const auto& c : poly) spec.poly.push_back(exact(c, "field.poly"));
  const json& units = require(f, "units", "field");
  if (!units.is_array()) malformed("field.units: expected a list of coordinate vectors");
  const std::size_t n = spec.poly.size() - 1;
  for (const auto& u : units) {
    if (!u.is_array() || u.size() > n) malformed("field.units: each unit needs at most " + std::to_string(n) + " coordinates");
    RationalVector v = RationalVector::Zero(static_cast<Eigen::Index>(n));
    for (std::size_t i = 0; i < u.size(); ++i) v(static_cast<Eigen::Index>(i)) = exact(u[i], "field.units");
    spec.units.push_back(std::move(v));
  }
  if (f.contains("assume_irreducible")) {
    if (!f["assume_irreducible"].is_boolean()) malformed("field.assume_irreducible: expected a boolean");
    spec.assume_irreducible = f["assume_irreducible"].get<bool>();
  }
  if (f.contains("branch_shift")) {
    const json& b = f["branch_shift"];
    if (!b.is_array() || b.empty() || !b[0].is_array()) malformed("field.branch_shift: expected an integer matrix");
    const auto rows = static_cast<Eigen::Index>(b.size()), cols = static_cast<Eigen::Index>(b[0].size());
    IntMatrix m(rows, cols);
    for (Eigen::Index r = 0; r < rows; ++r) {
      if (!b[static_cast<std::size_t>(r)].is_array() || static_cast<Eigen::Index>(b[static_cast<std::size_t>(r)].size()) != cols)
        malformed("field.branch_shift: ragged matrix");
      for (Eigen::Index c = 0; c < cols; ++c)
        m(r, c) = integer(b[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)], "field.branch_shift");
    }
    spec.branch_shift = std::move(m);
  }
  return spec;
}

SyntheticSpec parse_synthetic(const json& g) {
  if (!g.is_object()) malformed("synthetic: expected an object");
  reject_unknown(g, {"s", "t", "B", "relations", "mode", "C"}, "synthetic");
  SyntheticSpec spec;
  spec.s = integer(require(g, "s", "synthetic"), "synthetic.s");
  spec.t = integer(require(g, "t", "synthetic"), "synthetic.t");
  if (spec.s < 1 || spec.t < 1 || spec.s + spec.t > 16) malformed("synthetic: need 1 <= s, t and s + t <= 16");
  spec.B = exact_matrix(require(g, "B", "synthetic"), spec.s, spec.t, "synthetic.B");

  const int n = spec.s + 2 * spec.t;
  spec.relations = RationalMatrix(0, n);
  if (g.contains("relations")) {
    const json& rel = g["relations"];
    if (!rel.is_array()) malformed("synthetic.relations: expected a list");
    std::vector<RationalVector> rows;
    for (const auto& r : rel) {
      if (!r.is_array()) malformed("synthetic.relations: each relation is a list");
      // A leading constant slot is accepted as long as it is zero.
      std::size_t offset = 0;
      if (static_cast<int>(r.size()) == n + 1) {
        if (exact(r[0], "synthetic.relations") != 0) malformed("synthetic.relations: constant term must be 0");
        offset = 1;
      } else if (static_cast<int>(r.size()) != n) {
        malformed("synthetic.relations: each relation needs s + 2t entries");
      }
      RationalVector v(n);
      for (int i = 0; i < n; ++i) v(i) = exact(r[offset + static_cast<std::size_t>(i)], "synthetic.relations");
      rows.push_back(std::move(v));
    }
    spec.relations = RationalMatrix(static_cast<Eigen::Index>(rows.size()), n);
    for (std::size_t i = 0; i < rows.size(); ++i) spec.relations.row(static_cast<Eigen::Index>(i)) = rows[i].transpose();
  }

  const bool has_mode = g.contains("mode"), has_C = g.contains("C");
  if (has_mode == has_C) malformed("synthetic: give exactly one of \"mode\": \"generic\" or \"C\"");
  if (has_mode && g["mode"] != "generic") malformed("synthetic.mode: only \"generic\" is supported");
  if (has_C) {
    const json& c = g["C"];
    if (!c.is_array() || static_cast<int>(c.size()) != spec.s) malformed("synthetic.C: expected s rows");
    Eigen::MatrixXd m(spec.s, spec.t);
    for (int i = 0; i < spec.s; ++i) {
      const json& row = c[static_cast<std::size_t>(i)];
      if (!row.is_array() || static_cast<int>(row.size()) != spec.t) malformed("synthetic.C: expected t columns");
      for (int k = 0; k < spec.t; ++k) {
        const json& x = row[static_cast<std::size_t>(k)];
        if (x.is_number()) m(i, k) = x.get<double>();
        else m(i, k) = exact(x, "synthetic.C").convert_to<double>();
      }
    }
    spec.C = std::move(m);
  }
  return spec;
}

SpecOptions parse_options(const json& o) {
  if (!o.is_object()) malformed("options: expected an object");
  reject_unknown(o, {"precision", "tolerance", "backend", "format"}, "options");
  SpecOptions opts;
  if (o.contains("precision")) {
    opts.precision = integer(o["precision"], "options.precision");
    if (*opts.precision < 53) malformed("options.precision: at least 53 bits");
  }
  if (o.contains("tolerance")) {
    if (!o["tolerance"].is_number() || !(o["tolerance"].get<double>() > 0)) malformed("options.tolerance: positive number");
    opts.tolerance = o["tolerance"].get<double>();
  }
  if (o.contains("backend")) {
    const json& b = o["backend"];
    if (b == "numeric") opts.backend = Backend::Numeric;
    else if (b == "generic") opts.backend = Backend::Generic;
    else malformed("options.backend: numeric or generic");
  }
  if (o.contains("format")) {
    const json& f = o["format"];
    if (f != "json" && f != "csv" && f != "md") malformed("options.format: json, csv or md");
    opts.format = f.get<std::string>();
  }
  return opts;
}

}  // namespace

ModelSpec parse_spec(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    malformed(std::string("not valid JSON: ") + e.what());
  }
  if (!doc.is_object()) malformed("top level must be an object");
  reject_unknown(doc, {"field", "synthetic", "options"}, "spec");
  ModelSpec spec;
  spec.input_hash = fnv1a(text);
  if (doc.contains("field") == doc.contains("synthetic")) malformed("give exactly one of \"field\" or \"synthetic\"");
  try {
    if (doc.contains("field")) spec.field = parse_field(doc["field"]);
    else spec.synthetic = parse_synthetic(doc["synthetic"]);
    if (doc.contains("options")) spec.options = parse_options(doc["options"]);
  } catch (const json::exception& e) {
    malformed(e.what());
  }
  return spec;
}

ModelSpec load_spec(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) malformed("cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_spec(buf.str());
}

SolvModel build_from_spec(const ModelSpec& spec, int precision, double tolerance) {
  if (spec.field) {
    const FieldSpec& f = *spec.field;
    NumberField field = NumberField::create(f.poly, f.assume_irreducible);
    UnitSystem units;
    for (const auto& u : f.units) {
      if (u.size() != field.degree()) malformed("field.units: wrong coordinate count");
      units.units.push_back(field.element(u));
    }
    ModelOptions options;
    options.precision = precision;
    options.tolerance = tolerance;
    options.assume_irreducible = f.assume_irreducible;
    options.branch_shift = f.branch_shift;
    return build_model(field, units, options);
  }
  const SyntheticSpec& g = *spec.synthetic;
  return synthetic_model(g.s, g.t, g.B, g.relations, g.C, tolerance);
}

}  // namespace otcohom
