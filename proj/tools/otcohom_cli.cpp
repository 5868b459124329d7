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
#include "otcohom/report.hpp"
#include "otcohom/spec_io.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <unistd.h>

namespace fs = std::filesystem;
using namespace otcohom;

namespace {

constexpr int kExitSpec = 2;
constexpr int kExitAmbiguous = 3;
constexpr int kExitInvariant = 4;

struct Settings {
  int precision = kDefaultPrecision;
  double tolerance = kDefaultTolerance;
  std::string format = "json";
  std::string out;
};

struct Loaded {
  ModelSpec spec;
  Classification classes;
  Settings settings;
};

Loaded load(const std::string& path, const Settings& cli, const CLI::App& app) {
  Loaded l;
  l.spec = load_spec(path);
  l.settings = cli;
  const SpecOptions& o = l.spec.options;
  if (app.count("--precision") == 0 && o.precision) l.settings.precision = *o.precision;
  if (app.count("--tol") == 0 && o.tolerance) l.settings.tolerance = *o.tolerance;
  if (app.count("--format") == 0 && o.format) l.settings.format = *o.format;
  SolvModel model = build_from_spec(l.spec, l.settings.precision, l.settings.tolerance);
  const Backend backend = o.backend.value_or(default_backend(model));
  l.classes = classify_all(model, backend);
  return l;
}

// Temp file in the destination directory, then rename: readers never see a partial file.
void emit(const std::string& text, const Settings& s, std::uint64_t input_hash) {
  if (s.out.empty()) {
    std::cout << text;
    return;
  }
  fs::path target = s.out;
  if (fs::is_directory(target)) target /= "otcohom-" + hex64(input_hash) + "." + s.format;
  fs::path tmp = target;
  tmp += ".tmp" + std::to_string(::getpid());
  {
    std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
    if (!f) throw std::runtime_error("cannot write " + tmp.string());
    f << text;
    f.close();
    if (!f) {
      fs::remove(tmp);
      throw std::runtime_error("write failed for " + tmp.string());
    }
  }
  fs::rename(tmp, target);
}

Provenance provenance_of(const Loaded& l) {
  return {hex64(l.spec.input_hash), l.settings.precision, l.settings.tolerance, OTCOHOM_VERSION};
}

std::string witnesses_text(const std::vector<IndexTriple>& w) {
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) out += (i ? " " : "") + w[i].name();
  return out.empty() ? "-" : out;
}

nlohmann::ordered_json witnesses_json(const std::vector<IndexTriple>& w) {
  nlohmann::ordered_json a = nlohmann::ordered_json::array();
  for (const auto& t : w) a.push_back(t.name());
  return a;
}

int cmd_analyze(const Loaded& l) {
  const Report r = make_report(l.classes, run_verification(l.classes), provenance_of(l));
  emit(render(r, l.settings.format), l.settings, l.spec.input_hash);
  return r.all_passed() ? 0 : kExitInvariant;
}

int cmd_verify(const Loaded& l) {
  const std::vector<VerificationItem> items = run_verification(l.classes);
  bool ok = true;
  for (const auto& v : items) ok = ok && v.passed;
  std::ostringstream os;
  if (l.settings.format == "json") {
    nlohmann::ordered_json j;
    j["passed"] = ok;
    j["checks"] = nlohmann::ordered_json::array();
    for (const auto& v : items)
      j["checks"].push_back({{"name", v.name}, {"passed", v.passed}, {"skipped", v.skipped}, {"residual", v.residual}});
    os << j.dump(2) << "\n";
  } else if (l.settings.format == "csv") {
    os << "check,status,residual\n";
    for (const auto& v : items) os << v.name << "," << (v.skipped ? "skipped" : v.passed ? "pass" : "fail") << "," << v.residual << "\n";
  } else {
    os << "| check | result | residual |\n|---|---|---|\n";
    for (const auto& v : items)
      os << "| " << v.name << " | " << (v.skipped ? "skipped" : v.passed ? "pass" : "FAIL") << " | " << v.residual << " |\n";
  }
  emit(os.str(), l.settings, l.spec.input_hash);
  return ok ? 0 : kExitInvariant;
}

int cmd_hodge(const Loaded& l, const std::string& bundle, int p, int q) {
  const Character rho = char_from_user(l.classes.model, bundle);
  const auto idx = l.classes.resolve(rho);
  const long long dim = dolbeault_dim(l.classes, rho, p, q);
  const Nonvanishing nv = nonvanishing(l.classes, rho, p, q);
  std::ostringstream os;
  const std::string cls = idx ? l.classes.classes[*idx].id : "";
  if (l.settings.format == "json") {
    nlohmann::ordered_json j;
    j["bundle"] = bundle;
    j["class"] = idx ? nlohmann::ordered_json(cls) : nlohmann::ordered_json(nullptr);
    j["p"] = p;
    j["q"] = q;
    j["dim"] = dim;
    j["lower_bound"] = nv.lower_bound;
    j["witnesses"] = witnesses_json(nv.witnesses);
    os << j.dump(2) << "\n";
  } else if (l.settings.format == "csv") {
    os << "bundle,class,p,q,dim,lower_bound\n\"" << bundle << "\",\"" << cls << "\"," << p << "," << q << "," << dim << ","
       << nv.lower_bound << "\n";
  } else {
    os << "h^{" << p << "," << q << "}(" << bundle << ") = " << dim << "\nclass: " << (idx ? cls : "none")
       << "\nlower bound: " << nv.lower_bound << "\nwitnesses: " << witnesses_text(nv.witnesses) << "\n";
  }
  emit(os.str(), l.settings, l.spec.input_hash);
  return 0;
}

int cmd_bundles(const Loaded& l, const std::vector<int>& pq) {
  const int p = pq.at(0), q = pq.at(1);
  nlohmann::ordered_json list = nlohmann::ordered_json::array();
  std::ostringstream text;
  for (const auto& cls : l.classes.classes) {
    const long long dim = dolbeault_dim(l.classes, cls.character, p, q);
    if (dim == 0) continue;
    const Nonvanishing nv = nonvanishing(l.classes, cls.character, p, q);
    list.push_back({{"class", cls.id}, {"dim", dim}, {"lower_bound", nv.lower_bound}, {"witnesses", witnesses_json(nv.witnesses)}});
    if (l.settings.format == "csv") text << "\"" << cls.id << "\"," << dim << "," << nv.lower_bound << "\n";
    else text << "| " << cls.id << " | " << dim << " | " << nv.lower_bound << " | " << witnesses_text(nv.witnesses) << " |\n";
  }
  std::ostringstream os;
  if (l.settings.format == "json") {
    nlohmann::ordered_json j;
    j["p"] = p;
    j["q"] = q;
    j["bundles"] = list;
    os << j.dump(2) << "\n";
  } else if (l.settings.format == "csv") {
    os << "class,dim,lower_bound\n" << text.str();
  } else {
    os << "| class | dim | lower bound | witnesses |\n|---|---|---|---|\n" << text.str();
  }
  emit(os.str(), l.settings, l.spec.input_hash);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Cohomology of Oeljeklaus-Toma solvmanifolds with values in flat line bundles"};
  app.set_version_flag("--version", std::string(OTCOHOM_VERSION));
  app.require_subcommand(1);
  app.fallthrough();

  Settings cli;
  app.add_option("--precision", cli.precision, "working precision in bits")->capture_default_str()->check(CLI::Range(53, 1 << 20));
  app.add_option("--tol", cli.tolerance, "character comparison tolerance")->capture_default_str()->check(CLI::PositiveNumber);
  app.add_option("--format", cli.format, "output format")->capture_default_str()->check(CLI::IsMember({"json", "csv", "md"}));
  app.add_option("--out", cli.out, "output file, or directory for a hash-named file");

  std::string spec_path, bundle;
  int p = 0, q = 0;
  std::vector<int> pq;

  auto* analyze = app.add_subcommand("analyze", "full report with verification");
  analyze->add_option("spec", spec_path, "model spec (JSON)")->required();
  auto* verify = app.add_subcommand("verify", "run the verification suite");
  verify->add_option("spec", spec_path, "model spec (JSON)")->required();
  auto* hodge = app.add_subcommand("hodge", "one Dolbeault dimension with witnesses");
  hodge->add_option("spec", spec_path, "model spec (JSON)")->required();
  hodge->add_option("--bundle", bundle, "character: 1, sigma(i)^k*..., triple I=..;K=..;L=.., or [(re,im),...]")->required();
  hodge->add_option("--p", p)->required();
  hodge->add_option("--q", q)->required();
  auto* bundles = app.add_subcommand("bundles", "classes with nonzero H^{p,q}");
  bundles->add_option("spec", spec_path, "model spec (JSON)")->required();
  bundles->add_option("--nonvanishing", pq, "p q")->expected(2)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitSpec;
  }

  try {
    const Loaded l = load(spec_path, cli, app);
    if (*analyze) return cmd_analyze(l);
    if (*verify) return cmd_verify(l);
    if (*hodge) return cmd_hodge(l, bundle, p, q);
    return cmd_bundles(l, pq);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.kind() == ErrorKind::AmbiguousCharacters ? kExitAmbiguous : kExitSpec;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitSpec;
  }
}
