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

#include "otcohom/report.hpp"

#include "otcohom/cohomology.hpp"
#include "otcohom/errors.hpp"
#include "otcohom/exterior.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <charconv>
#include <cmath>
#include <map>
#include <sstream>

namespace otcohom {

using ordered_json = nlohmann::ordered_json;

namespace {

VerificationItem item(std::string name, bool passed, double residual, std::string detail = {}) {
  return {std::move(name), passed, false, residual, std::move(detail)};
}

VerificationItem skipped(std::string name, std::string detail) { return {std::move(name), true, true, 0, std::move(detail)}; }

VerificationItem hodge_sum(const Classification& c) {
  const int n = c.model.s + c.model.t;
  IntMatrix total = IntMatrix::Zero(n + 1, n + 1);
  for (const auto& table : all_tables(c)) total += table.dims;
  long long worst = 0;
  for (int p = 0; p <= n; ++p)
    for (int q = 0; q <= n; ++q) worst = std::max(worst, std::llabs(total(p, q) - binomial(n, p) * binomial(n, q)));
  return item("hodge_sum_identity", worst == 0, static_cast<double>(worst), "sum over classes of h^{p,q} = C(s+t,p) C(s+t,q)");
}

VerificationItem derham_sum(const Classification& c) {
  const int n = 2 * (c.model.s + c.model.t);
  Vector<long long> total = Vector<long long>::Zero(n + 1);
  for (const auto& v : all_derham(c)) total += v.dims;
  long long worst = 0;
  for (int r = 0; r <= n; ++r) worst = std::max(worst, std::llabs(total(r) - binomial(n, r)));
  return item("derham_sum_identity", worst == 0, static_cast<double>(worst), "sum over classes of b_r = C(2s+2t,r)");
}

VerificationItem hodge_to_derham(const Classification& c) {
  const int n = c.model.s + c.model.t;
  long long worst = 0;
  for (std::size_t i = 0; i < c.classes.size(); ++i) {
    const IntMatrix h = hodge_table(c, i).dims;
    const Vector<long long> b = derham_vector(c, i).dims;
    for (int r = 0; r <= 2 * n; ++r) {
      long long sum = 0;
      for (int p = std::max(0, r - n); p <= std::min(r, n); ++p) sum += h(p, r - p);
      worst = std::max(worst, std::llabs(sum - b(r)));
    }
  }
  return item("hodge_derham_consistency", worst == 0, static_cast<double>(worst), "b_r = sum_{p+q=r} h^{p,q} per class");
}

VerificationItem euler(const Classification& c) {
  long long worst = 0;
  for (const auto& v : all_derham(c)) {
    long long chi = 0;
    for (Eigen::Index r = 0; r < v.dims.size(); ++r) chi += (r % 2 == 0 ? 1 : -1) * v.dims(r);
    worst = std::max(worst, std::llabs(chi));
  }
  return item("euler_characteristic", worst == 0, static_cast<double>(worst), "alternating sum of b_r vanishes per class");
}

VerificationItem nonvanishing_consistency(const Classification& c) {
  const int n = c.model.s + c.model.t;
  long long bad = 0;
  for (const auto& cls : c.classes) {
    for (int p = 0; p <= n; ++p) {
      for (int q = 0; q <= n; ++q) {
        const long long dim = dolbeault_dim(c, cls.character, p, q);
        const Nonvanishing nv = nonvanishing(c, cls.character, p, q);
        if (nv.nonzero != (dim > 0) || nv.lower_bound > dim) ++bad;
      }
    }
  }
  return item("nonvanishing_criterion", bad == 0, static_cast<double>(bad), "witness exists iff h^{p,q} > 0, bound <= h^{p,q}");
}

VerificationItem holomorphic_sections(const Classification& c) {
  long long bad = 0;
  for (const auto& cls : c.classes)
    if ((dolbeault_dim(c, cls.character, 0, 0) != 0) != cls.trivial) ++bad;
  return item("holomorphic_sections", bad == 0, static_cast<double>(bad), "h^{0,0} != 0 iff the bundle is trivial");
}

VerificationItem duality(const Classification& c) {
  const DualityReport d = serre_check(c);
  return item("serre_duality", d.passed, static_cast<double>(d.violations.size()),
              d.violations.empty() ? "h^{p,q}(E) = h^{n-p,n-q}(E^-1)" : d.violations.front());
}

VerificationItem oracle(const Classification& c, const VerifyOptions& opt) {
  const int s = c.model.s, t = c.model.t, n = s + t;
  if (2 * n > opt.max_symbolic_generators) return skipped("oracle_equivalence", "too many generators");
  const FormAlgebra algebra = FormAlgebra::dolbeault(s, t, c.model.exact_B);
  std::vector<IntMatrix> tally(c.classes.size(), IntMatrix::Zero(n + 1, n + 1));
  std::map<Weight, std::optional<std::size_t>> cache;
  long long unmatched = 0;
  for (const auto& m : harmonic_monomials(algebra)) {
    auto it = cache.find(m.weight);
    if (it == cache.end()) {
      RationalVector e(s + 2 * t);
      for (int i = 0; i < s + 2 * t; ++i) e(i) = m.weight[static_cast<std::size_t>(i)];
      it = cache.emplace(m.weight, c.resolve(char_from_exponent(c.model, e))).first;
    }
    if (!it->second) {
      ++unmatched;
      continue;
    }
    tally[*it->second](m.p, m.q) += 1;
  }
  long long worst = unmatched;
  for (std::size_t i = 0; i < c.classes.size(); ++i)
    worst = std::max(worst, (tally[i] - hodge_table(c, i).dims).cwiseAbs().maxCoeff());
  return item("oracle_equivalence", worst == 0, static_cast<double>(worst), "monomial enumeration reproduces every table");
}

VerificationItem star(const Classification& c) {
  const StarClosureReport r = star_closure_check(c.model, c.backend);
  return item("star_closure", r.passed, static_cast<double>(r.failures.size()),
              r.failures.empty() ? std::to_string(r.checked) + " triples" : r.failures.front());
}

Weight basis_weight(int size, int index) {
  Weight w(static_cast<std::size_t>(size), 0);
  if (index >= 0) w[static_cast<std::size_t>(index)] = 1;
  return w;
}

VerificationItem dbar_squared(const Classification& c) {
  const int s = c.model.s, t = c.model.t, f = s + 2 * t;
  const FormAlgebra a = FormAlgebra::dolbeault(s, t, c.model.exact_B);
  long long bad = 0;
  for (int g = 0; g < a.generator_count(); ++g)
    for (int w = -1; w < f; ++w)
      if (!dbar(a, dbar(a, a.generator(g, basis_weight(f, w)))).is_zero()) ++bad;
  return item("dbar_squared", bad == 0, static_cast<double>(bad), "on every generator and unit weight");
}

VerificationItem harmonic_closed(const Classification& c, const VerifyOptions& opt) {
  const int s = c.model.s, t = c.model.t;
  if (2 * (s + t) > opt.max_symbolic_generators) return skipped("dbar_harmonic_closed", "too many generators");
  const FormAlgebra a = FormAlgebra::dolbeault(s, t, c.model.exact_B);
  std::vector<FormExpr> gens = w1_generators(a);
  for (auto& g : w2_generators(a)) gens.push_back(std::move(g));
  long long bad = 0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << gens.size()); ++mask)
    if (!dbar(a, wedge_subset(gens, mask)).is_zero()) ++bad;
  return item("dbar_harmonic_closed", bad == 0, static_cast<double>(bad), "dbar = 0 on all W1, W2 monomials");
}

VerificationItem derham_closed(const Classification& c, const VerifyOptions& opt) {
  const int s = c.model.s, t = c.model.t;
  if (2 * (s + t) > opt.max_symbolic_generators) return skipped("d_invariant_zero", "too many generators");
  const FormAlgebra a = FormAlgebra::de_rham(s, t, c.model.exact_B);
  const std::vector<FormExpr> gens = v_generators(a);
  long long bad = 0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << gens.size()); ++mask)
    if (!d_invariant(a, wedge_subset(gens, mask)).is_zero()) ++bad;
  return item("d_invariant_zero", bad == 0, static_cast<double>(bad), "d = 0 on the invariant model");
}

VerificationItem residuals(const Classification& c) {
  const ModelResiduals& r = c.model.residuals;
  const double worst = std::max({r.log_norm, r.unimodularity, r.modulus_fit, r.exp_reproduction});
  return item("model_residuals", worst < c.model.tolerance, worst, "log norm, unimodularity, modulus fit, exp reproduction");
}

VerificationItem tangent(const Classification& c) {
  if (c.model.t != 1) return skipped("tangent_vanishing", "only asserted for t = 1");
  const int n = c.model.s + c.model.t;
  long long worst = 0;
  for (int p = 1; p <= n; ++p)
    for (int q = 0; q <= n; ++q) worst = std::max(worst, tangent_cohomology(c, p, q));
  return item("tangent_vanishing", worst == 0, static_cast<double>(worst), "H^{0,q}(wedge^p Theta) = 0 for p > 0");
}

std::string backend_name(Backend b) { return std::string(to_string(b)); }

std::vector<std::vector<double>> rows_of(const Eigen::MatrixXd& m) {
  std::vector<std::vector<double>> out(static_cast<std::size_t>(m.rows()));
  for (Eigen::Index r = 0; r < m.rows(); ++r)
    for (Eigen::Index c = 0; c < m.cols(); ++c) out[static_cast<std::size_t>(r)].push_back(m(r, c));
  return out;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

std::string fmt_double(double x) {
  char buf[32];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, end);
}

}  // namespace

std::vector<VerificationItem> run_verification(const Classification& c, const VerifyOptions& options) {
  std::vector<VerificationItem> out;
  out.push_back(hodge_sum(c));
  out.push_back(derham_sum(c));
  out.push_back(hodge_to_derham(c));
  out.push_back(euler(c));
  out.push_back(nonvanishing_consistency(c));
  out.push_back(holomorphic_sections(c));
  try {
    out.push_back(duality(c));
  } catch (const Error& e) {
    out.push_back(item("serre_duality", false, 1, e.what()));
  }
  out.push_back(oracle(c, options));
  out.push_back(star(c));
  out.push_back(dbar_squared(c));
  out.push_back(harmonic_closed(c, options));
  out.push_back(derham_closed(c, options));
  out.push_back(residuals(c));
  out.push_back(tangent(c));
  return out;
}

bool Report::all_passed() const {
  return std::all_of(verification.begin(), verification.end(), [](const VerificationItem& v) { return v.passed; });
}

Report make_report(const Classification& c, std::vector<VerificationItem> verification, Provenance provenance) {
  Report r;
  r.s = c.model.s;
  r.t = c.model.t;
  r.source = c.model.source == SolvModel::Source::Field ? "field" : "synthetic";
  r.backend = backend_name(c.backend);
  r.lattice = rows_of(c.model.lattice);
  r.B = rows_of(c.model.B);
  const ModelResiduals& res = c.model.residuals;
  r.residuals = {{"log_norm", res.log_norm},
                 {"unimodularity", res.unimodularity},
                 {"modulus_fit", res.modulus_fit},
                 {"exp_reproduction", res.exp_reproduction},
                 {"det_lattice", res.det_lattice}};
  for (std::size_t i = 0; i < c.classes.size(); ++i) {
    const BundleClass& cls = c.classes[i];
    ClassReport cr;
    cr.id = cls.id;
    cr.trivial = cls.trivial;
    for (const auto& m : cls.members) cr.members.push_back(m.name());
    const IntMatrix h = hodge_table(c, i).dims;
    cr.hodge.assign(static_cast<std::size_t>(h.rows()), {});
    for (Eigen::Index p = 0; p < h.rows(); ++p)
      for (Eigen::Index q = 0; q < h.cols(); ++q) cr.hodge[static_cast<std::size_t>(p)].push_back(h(p, q));
    const Vector<long long> b = derham_vector(c, i).dims;
    cr.derham.assign(b.data(), b.data() + b.size());
    r.classes.push_back(std::move(cr));
  }
  r.verification = std::move(verification);
  r.provenance = std::move(provenance);
  return r;
}

std::string to_json(const Report& r) {
  ordered_json j;
  j["model"] = {{"s", r.s}, {"t", r.t}, {"source", r.source}, {"backend", r.backend},
                {"lattice", r.lattice}, {"B", r.B}};
  ordered_json res = ordered_json::object();
  for (const auto& [k, v] : r.residuals) res[k] = v;
  j["model"]["residuals"] = res;
  j["classes"] = ordered_json::array();
  for (const auto& c : r.classes)
    j["classes"].push_back({{"id", c.id}, {"trivial", c.trivial}, {"members", c.members}, {"hodge", c.hodge}, {"derham", c.derham}});
  j["verification"] = ordered_json::array();
  for (const auto& v : r.verification)
    j["verification"].push_back({{"name", v.name}, {"passed", v.passed}, {"skipped", v.skipped},
                                 {"residual", v.residual}, {"detail", v.detail}});
  j["provenance"] = {{"input_hash", r.provenance.input_hash}, {"precision", r.provenance.precision},
                     {"tolerance", r.provenance.tolerance}, {"version", r.provenance.version}};
  return j.dump(2) + "\n";
}

Report report_from_json(const std::string& text) {
  try {
    const ordered_json j = ordered_json::parse(text);
    Report r;
    const auto& m = j.at("model");
    r.s = m.at("s").get<int>();
    r.t = m.at("t").get<int>();
    r.source = m.at("source").get<std::string>();
    r.backend = m.at("backend").get<std::string>();
    r.lattice = m.at("lattice").get<std::vector<std::vector<double>>>();
    r.B = m.at("B").get<std::vector<std::vector<double>>>();
    for (const auto& [k, v] : m.at("residuals").items()) r.residuals.emplace_back(k, v.get<double>());
    for (const auto& c : j.at("classes")) {
      ClassReport cr;
      cr.id = c.at("id").get<std::string>();
      cr.trivial = c.at("trivial").get<bool>();
      cr.members = c.at("members").get<std::vector<std::string>>();
      cr.hodge = c.at("hodge").get<std::vector<std::vector<long long>>>();
      cr.derham = c.at("derham").get<std::vector<long long>>();
      r.classes.push_back(std::move(cr));
    }
    for (const auto& v : j.at("verification"))
      r.verification.push_back({v.at("name").get<std::string>(), v.at("passed").get<bool>(), v.at("skipped").get<bool>(),
                                v.at("residual").get<double>(), v.at("detail").get<std::string>()});
    const auto& p = j.at("provenance");
    r.provenance = {p.at("input_hash").get<std::string>(), p.at("precision").get<int>(), p.at("tolerance").get<double>(),
                    p.at("version").get<std::string>()};
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::MalformedSpec, std::string("report: ") + e.what());
  }
}

std::string to_csv(const Report& r) {
  std::ostringstream os;
  os << "kind,key,i,j,value\n";
  for (const auto& c : r.classes) {
    for (std::size_t p = 0; p < c.hodge.size(); ++p)
      for (std::size_t q = 0; q < c.hodge[p].size(); ++q)
        os << "hodge," << csv_field(c.id) << "," << p << "," << q << "," << c.hodge[p][q] << "\n";
    for (std::size_t k = 0; k < c.derham.size(); ++k) os << "derham," << csv_field(c.id) << "," << k << ",," << c.derham[k] << "\n";
  }
  for (const auto& v : r.verification)
    os << "check," << v.name << "," << (v.skipped ? "skipped" : v.passed ? "pass" : "fail") << ",," << fmt_double(v.residual)
       << "\n";
  return os.str();
}

std::string to_markdown(const Report& r) {
  std::ostringstream os;
  os << "# otcohom report\n\n";
  os << "- signature: s = " << r.s << ", t = " << r.t << "\n";
  os << "- source: " << r.source << ", backend: " << r.backend << "\n";
  os << "- input hash: " << r.provenance.input_hash << ", precision: " << r.provenance.precision
     << " bits, tolerance: " << fmt_double(r.provenance.tolerance) << ", version: " << r.provenance.version << "\n\n";
  os << "## Residuals\n\n| quantity | value |\n|---|---|\n";
  for (const auto& [k, v] : r.residuals) os << "| " << k << " | " << fmt_double(v) << " |\n";
  os << "\n## Classes\n\nHodge tables: rows p = 0.. downward, columns q = 0.. rightward.\n";
  for (const auto& c : r.classes) {
    os << "\n### " << c.id << (c.trivial ? " (trivial)" : "") << "\n\nmembers:";
    for (const auto& m : c.members) os << " `" << m << "`";
    os << "\n\n| p \\ q |";
    for (std::size_t q = 0; q < c.hodge.size(); ++q) os << " " << q << " |";
    os << "\n|---|";
    for (std::size_t q = 0; q < c.hodge.size(); ++q) os << "---|";
    os << "\n";
    for (std::size_t p = 0; p < c.hodge.size(); ++p) {
      os << "| " << p << " |";
      for (long long d : c.hodge[p]) os << " " << d << " |";
      os << "\n";
    }
    os << "\nde Rham:";
    for (long long d : c.derham) os << " " << d;
    os << "\n";
  }
  os << "\n## Verification\n\n| check | result | residual | detail |\n|---|---|---|---|\n";
  for (const auto& v : r.verification)
    os << "| " << v.name << " | " << (v.skipped ? "skipped" : v.passed ? "pass" : "FAIL") << " | " << fmt_double(v.residual)
       << " | " << v.detail << " |\n";
  return os.str();
}

std::string render(const Report& r, const std::string& format) {
  if (format == "json") return to_json(r);
  if (format == "csv") return to_csv(r);
  if (format == "md") return to_markdown(r);
  throw Error(ErrorKind::MalformedSpec, "unknown format " + format);
}

}  // namespace otcohom
