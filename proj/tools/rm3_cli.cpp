// rm3: command-line front end. Everything goes through the C API in rm3.h.
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "rm3/rm3.h"

namespace {

using nlohmann::json;

constexpr int kExitConfig = 2;
constexpr int kExitIo = 3;
constexpr int kExitInternal = 4;

struct CString {
  char* p = nullptr;
  ~CString() { rm3_string_free(p); }
  std::string str() const { return p ? std::string(p) : std::string(); }
};

int exit_code(rm3_status s) {
  switch (s) {
    case RM3_OK: return 0;
    case RM3_ERR_INVALID_ARGUMENT:
    case RM3_ERR_CONFIG: return kExitConfig;
    case RM3_ERR_IO: return kExitIo;
    default: return kExitInternal;
  }
}

struct Options {
  std::string config_file;
  std::optional<std::string> family;
  std::optional<std::size_t> genus;
  std::optional<std::size_t> n;
  std::optional<std::string> family_file;
  std::optional<std::string> lengths;
  std::optional<std::size_t> samples;
  std::optional<std::uint64_t> seed;
  std::optional<std::string> mode;
  bool lazy = false;
  std::vector<std::uint64_t> primes;
  std::optional<std::size_t> steps;
  std::optional<std::size_t> trials;
  std::optional<std::size_t> alphabet;
  bool pow2 = false;
  bool linear = false;
  bool no_smoke = false;
  std::string chain;
  std::string matrix_file;
  std::string out;
  std::string format;
};

json load_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("io:cannot open config file '" + path + "'");
  try {
    json doc = json::parse(in);
    if (doc.contains("config") && doc["config"].is_object()) return doc["config"];
    return doc;
  } catch (const json::exception& e) {
    throw std::runtime_error(std::string("config:config file is not valid JSON: ") + e.what());
  }
}

json build_config(const std::string& command, const Options& o) {
  json cfg = o.config_file.empty() ? json::object() : load_config_file(o.config_file);
  if (cfg.contains("command") && cfg["command"] != command)
    throw std::runtime_error("config:config file is for '" + cfg["command"].get<std::string>() +
                             "', not '" + command + "'");
  cfg["command"] = command;
  if (o.family) cfg["family"] = *o.family;
  if (o.genus) cfg["parameter"] = *o.genus;
  if (o.n) cfg["parameter"] = *o.n;
  if (o.family_file) {
    cfg["family_file"] = *o.family_file;
    cfg.erase("custom_matrices");
    if (!o.family) cfg["family"] = "custom";
  }
  if (o.lengths) cfg["lengths"] = *o.lengths;
  if (o.samples) cfg["samples"] = *o.samples;
  if (o.seed) cfg["seed"] = *o.seed;
  if (o.mode) cfg["mode"] = *o.mode;
  if (o.lazy) cfg["lazy"] = true;
  if (!o.primes.empty()) cfg["primes"] = o.primes;
  if (o.steps) cfg["steps"] = *o.steps;
  if (o.trials) cfg["trials"] = *o.trials;
  if (o.alphabet) cfg["alphabet"] = *o.alphabet;
  if (o.pow2) cfg["pow2"] = true;
  if (o.linear) cfg["pow2"] = false;
  if (o.no_smoke) cfg["identity_smoke"] = false;
  if (!o.chain.empty()) cfg["chain"] = o.chain;
  if (!o.matrix_file.empty()) {
    cfg["matrix_file"] = o.matrix_file;
    cfg.erase("matrix");
  }
  return cfg;
}

void add_walk_flags(CLI::App* sub, Options& o) {
  sub->add_option("--family", o.family, "humphries | hua-reiner | stanek | custom");
  sub->add_option("--genus", o.genus, "genus (humphries)");
  sub->add_option("--n", o.n, "n (hua-reiner, stanek)");
  sub->add_option("--family-file", o.family_file, "matrices for a custom family");
  sub->add_option("--seed", o.seed, "master seed");
  sub->add_option("--mode", o.mode, "positive | symmetric");
  sub->add_flag("--lazy", o.lazy, "adjoin the identity to the generators");
}

void add_batch_flags(CLI::App* sub, Options& o) {
  add_walk_flags(sub, o);
  sub->add_option("--lengths", o.lengths, "start:end:step");
  sub->add_option("--samples", o.samples, "samples per length");
}

void add_common(CLI::App* sub, Options& o) {
  sub->add_option("--config", o.config_file, "JSON config or manifest; flags override it");
  sub->add_option("--out", o.out, "write <out>.csv and <out>.json");
  sub->add_option("--format", o.format, "stdout format: csv | json")
      ->check(CLI::IsMember({"csv", "json", "text"}));
}

int report_failure(rm3_status s) {
  std::cerr << "rm3: " << rm3_last_error() << '\n';
  return exit_code(s);
}

int run(const std::string& command, const Options& o) {
  json cfg;
  try {
    cfg = build_config(command, o);
  } catch (const std::runtime_error& e) {
    const std::string what = e.what();
    const bool io = what.rfind("io:", 0) == 0;
    std::cerr << "rm3: " << what.substr(what.find(':') + 1) << '\n';
    return io ? kExitIo : kExitConfig;
  }
  CString manifest, csv;
  const std::string text = cfg.dump();
  const rm3_status s = rm3_run_experiment(text.c_str(), o.out.empty() ? nullptr : o.out.c_str(),
                                          &manifest.p, &csv.p);
  if (s != RM3_OK) return report_failure(s);

  std::string format = o.format;
  if (format.empty()) {
    if (!o.out.empty()) {
      std::cerr << "wrote " << o.out << ".csv and " << o.out << ".json\n";
      return 0;
    }
    format = (command == "prescribe" || command == "snf") ? "text" : "csv";
  }
  if (format == "json") {
    std::cout << manifest.str() << '\n';
  } else if (format == "csv") {
    std::cout << csv.str();
  } else {
    const json m = json::parse(manifest.str());
    if (command == "prescribe") {
      const auto& rows = m["matrix"];
      std::cout << rows.size() << '\n';
      for (const auto& row : rows) {
        for (std::size_t j = 0; j < row.size(); ++j)
          std::cout << (j ? " " : "") << row[j].get<std::string>();
        std::cout << '\n';
      }
      std::cout << "verification=" << (m["verification"].get<bool>() ? "true" : "false") << '\n';
    } else if (command == "snf") {
      const auto& d = m["divisors"];
      for (std::size_t i = 0; i < d.size(); ++i) std::cout << (i ? " " : "") << d[i].get<std::string>();
      std::cout << '\n';
    } else {
      std::cout << csv.str();
    }
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"rm3: exact homology statistics of random 3-manifolds"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(rm3_version()));

  Options o;
  auto* torsion = app.add_subcommand("torsion-stats", "log torsion of random mapping tori");
  auto* modp = app.add_subcommand("modp-rank", "F_p homology ranks vs the finite-group oracle");
  auto* heegaard = app.add_subcommand("heegaard", "homology of random Heegaard splittings");
  auto* lyap = app.add_subcommand("lyapunov", "Lyapunov spectrum of a generator family");
  auto* prescribe = app.add_subcommand("prescribe", "symplectic matrix with prescribed divisors");
  auto* punctured = app.add_subcommand("punctured", "longest-run scaling of random words");
  auto* snf = app.add_subcommand("snf", "Smith normal form of a matrix file");

  for (auto* s : {torsion, modp, heegaard, lyap, prescribe, punctured, snf}) add_common(s, o);
  add_batch_flags(torsion, o);
  add_batch_flags(modp, o);
  modp->add_option("--primes", o.primes, "primes, comma-separated")->delimiter(',');
  add_batch_flags(heegaard, o);
  heegaard->add_flag("--no-identity-smoke", o.no_smoke, "omit the identity-gluing row");
  add_walk_flags(lyap, o);
  lyap->add_option("--steps", o.steps, "steps per trial");
  lyap->add_option("--trials", o.trials, "independent trials");
  prescribe->add_option("chain", o.chain, "divisibility chain, e.g. 1,1,2,4");
  punctured->add_option("--alphabet", o.alphabet, "alphabet size k >= 2");
  punctured->add_option("--lengths", o.lengths, "start:end:step (exponents of 2 by default)");
  punctured->add_option("--samples", o.samples, "samples per length");
  punctured->add_option("--seed", o.seed, "master seed");
  punctured->add_flag("--pow2", o.pow2, "lengths are exponents of 2 (default)");
  punctured->add_flag("--linear", o.linear, "lengths are literal word lengths");
  snf->add_option("matrix_file", o.matrix_file, "matrix file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kExitConfig;
  }
  for (auto* s : app.get_subcommands()) return run(s->get_name(), o);
  return kExitConfig;
}
