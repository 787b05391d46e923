#include "rm3/experiment.hpp"

#include <charconv>
#include <chrono>
#include <cmath>
#include <ctime>
#include <fstream>
#include <sstream>

#include "rm3/charpoly.hpp"
#include "rm3/errors.hpp"
#include "rm3/homology.hpp"
#include "rm3/lyapunov.hpp"
#include "rm3/matrix_io.hpp"
#include "rm3/prescribe.hpp"
#include "rm3/punctured.hpp"
#include "rm3/stats.hpp"

namespace rm3::experiment {

using nlohmann::json;

std::string to_string(Command c) {
  switch (c) {
    case Command::torsion_stats: return "torsion-stats";
    case Command::modp_rank: return "modp-rank";
    case Command::heegaard: return "heegaard";
    case Command::lyapunov: return "lyapunov";
    case Command::prescribe: return "prescribe";
    case Command::punctured: return "punctured";
    case Command::snf: return "snf";
  }
  return "?";
}

Command command_from_string(const std::string& s) {
  for (Command c : {Command::torsion_stats, Command::modp_rank, Command::heegaard,
                    Command::lyapunov, Command::prescribe, Command::punctured, Command::snf})
    if (to_string(c) == s) return c;
  throw ConfigError("unknown command '" + s + "'");
}

std::string format_real(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::general, 17);
  return std::string(buf, res.ptr);
}

namespace {

// ---------- config ----------

json matrix_to_json(const IntMatrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.dim(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.dim(); ++j) row.push_back(m(i, j).get_str());
    rows.push_back(std::move(row));
  }
  return rows;
}

IntMatrix matrix_from_json(const json& rows) {
  if (!rows.is_array() || rows.empty()) throw ConfigError("matrix must be a nonempty array of rows");
  const std::size_t n = rows.size();
  IntMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (!rows[i].is_array() || rows[i].size() != n) throw ConfigError("matrix must be square");
    for (std::size_t j = 0; j < n; ++j) {
      const json& e = rows[i][j];
      if (e.is_number_integer()) {
        m(i, j) = e.is_number_unsigned() ? Integer(std::to_string(e.get<std::uint64_t>()))
                                         : Integer(std::to_string(e.get<std::int64_t>()));
      } else if (e.is_string()) {
        if (m(i, j).set_str(e.get<std::string>(), 10) != 0)
          throw ConfigError("matrix entry is not an integer: " + e.dump());
      } else {
        throw ConfigError("matrix entry is not an integer: " + e.dump());
      }
    }
  }
  return m;
}

template <class T>
T get_number(const json& doc, const char* key, T fallback) {
  if (!doc.contains(key) || doc[key].is_null()) return fallback;
  const json& v = doc[key];
  if constexpr (std::is_same_v<T, bool>) {
    if (!v.is_boolean()) throw ConfigError(std::string(key) + " must be a boolean");
    return v.get<bool>();
  } else {
    if (!v.is_number_integer() || (v.is_number_integer() && !v.is_number_unsigned() && v.get<std::int64_t>() < 0))
      throw ConfigError(std::string(key) + " must be a nonnegative integer");
    return v.get<T>();
  }
}

}  // namespace

ExperimentConfig default_config(Command c) {
  ExperimentConfig cfg;
  cfg.command = c;
  cfg.batch.family = {FamilyName::humphries, 2, {}};
  // Fibered protocol: lengths 100..1000 step 10, 1000 products each.
  cfg.batch.lengths = {100, 1000, 10};
  cfg.batch.samples_per_length = 1000;
  cfg.batch.master_seed = 0;
  switch (c) {
    case Command::modp_rank:
      cfg.primes = {2};
      break;
    case Command::punctured:
      cfg.pow2 = true;
      cfg.batch.lengths = {10, 16, 1};
      cfg.batch.samples_per_length = 200;
      break;
    default:
      break;
  }
  return cfg;
}

ExperimentConfig config_from_json(const json& input) {
  try {
    const json& doc = (input.contains("config") && input["config"].is_object()) ? input["config"] : input;
    if (!doc.is_object()) throw ConfigError("config must be a JSON object");
    if (!doc.contains("command") || !doc["command"].is_string())
      throw ConfigError("config: missing \"command\"");
    ExperimentConfig cfg = default_config(command_from_string(doc["command"].get<std::string>()));
    auto& b = cfg.batch;

    if (doc.contains("family")) {
      if (!doc["family"].is_string()) throw ConfigError("family must be a string");
      b.family.name = family_name_from_string(doc["family"].get<std::string>());
    }
    for (const char* key : {"genus", "n", "parameter"})
      if (doc.contains(key) && !doc[key].is_null()) b.family.parameter = get_number<std::size_t>(doc, key, 0);
    if (doc.contains("custom_matrices")) {
      for (const auto& m : doc["custom_matrices"]) b.family.custom.push_back(matrix_from_json(m));
    } else if (doc.contains("family_file")) {
      b.family.custom = read_matrix_file(doc["family_file"].get<std::string>());
    }
    if (b.family.name == FamilyName::custom && b.family.custom.empty())
      throw ConfigError("custom family requires family_file or custom_matrices");

    if (doc.contains("lengths")) {
      const json& l = doc["lengths"];
      if (l.is_string()) {
        b.lengths = LengthProgression::parse(l.get<std::string>());
      } else if (l.is_object()) {
        b.lengths.start = get_number<std::size_t>(l, "start", 1);
        b.lengths.end = get_number<std::size_t>(l, "end", b.lengths.start);
        b.lengths.step = get_number<std::size_t>(l, "step", 1);
      } else if (l.is_number_integer() && l.get<std::int64_t>() > 0) {
        b.lengths.start = b.lengths.end = l.get<std::size_t>();
        b.lengths.step = 1;
      } else {
        throw ConfigError("lengths must be \"start:end:step\"");
      }
    }
    b.samples_per_length = get_number<std::size_t>(doc, "samples", b.samples_per_length);
    b.master_seed = get_number<std::uint64_t>(doc, "seed", b.master_seed);
    if (doc.contains("mode")) b.mode = sampling_mode_from_string(doc["mode"].get<std::string>());
    b.lazy = get_number<bool>(doc, "lazy", b.lazy);

    if (doc.contains("primes")) {
      cfg.primes.clear();
      for (const auto& p : doc["primes"]) {
        if (!p.is_number_integer() || p.get<std::int64_t>() <= 0)
          throw ConfigError("primes must be positive integers");
        cfg.primes.push_back(p.get<std::uint64_t>());
      }
    }
    cfg.steps = get_number<std::size_t>(doc, "steps", cfg.steps);
    cfg.trials = get_number<std::size_t>(doc, "trials", cfg.trials);
    if (doc.contains("chain")) {
      const json& c = doc["chain"];
      if (c.is_string()) {
        cfg.chain = c.get<std::string>();
      } else if (c.is_array()) {
        std::string s;
        for (const auto& e : c) s += (s.empty() ? "" : ",") + (e.is_string() ? e.get<std::string>() : e.dump());
        cfg.chain = s;
      } else {
        throw ConfigError("chain must be a comma-separated string");
      }
    }
    cfg.alphabet = get_number<std::size_t>(doc, "alphabet", cfg.alphabet);
    cfg.pow2 = get_number<bool>(doc, "pow2", cfg.pow2);
    cfg.identity_smoke = get_number<bool>(doc, "identity_smoke", cfg.identity_smoke);
    if (doc.contains("matrix")) {
      cfg.matrix = matrix_from_json(doc["matrix"]);
    } else if (doc.contains("matrix_file")) {
      auto ms = read_matrix_file(doc["matrix_file"].get<std::string>());
      if (ms.size() != 1) throw ConfigError("matrix_file must hold exactly one matrix");
      cfg.matrix = std::move(ms.front());
    }
    return cfg;
  } catch (const json::exception& e) {
    throw ConfigError(std::string("config: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw ConfigError(std::string("config: ") + e.what());
  }
}

json config_to_json(const ExperimentConfig& cfg) {
  json j;
  j["command"] = to_string(cfg.command);
  const auto& b = cfg.batch;
  const bool uses_family = cfg.command != Command::prescribe && cfg.command != Command::snf &&
                           cfg.command != Command::punctured;
  if (uses_family) {
    j["family"] = to_string(b.family.name);
    if (b.family.name == FamilyName::custom) {
      json ms = json::array();
      for (const auto& m : b.family.custom) ms.push_back(matrix_to_json(m));
      j["custom_matrices"] = std::move(ms);
    } else {
      j["parameter"] = b.family.parameter;
    }
    j["mode"] = to_string(b.mode);
    j["lazy"] = b.lazy;
    j["seed"] = b.master_seed;
  }
  switch (cfg.command) {
    case Command::torsion_stats:
    case Command::heegaard:
    case Command::modp_rank:
      j["lengths"] = b.lengths.to_string();
      j["samples"] = b.samples_per_length;
      if (cfg.command == Command::modp_rank) j["primes"] = cfg.primes;
      if (cfg.command == Command::heegaard) j["identity_smoke"] = cfg.identity_smoke;
      break;
    case Command::lyapunov:
      j["steps"] = cfg.steps;
      j["trials"] = cfg.trials;
      break;
    case Command::prescribe:
      j["chain"] = cfg.chain;
      break;
    case Command::punctured:
      j["alphabet"] = cfg.alphabet;
      j["lengths"] = b.lengths.to_string();
      j["pow2"] = cfg.pow2;
      j["samples"] = b.samples_per_length;
      j["seed"] = b.master_seed;
      break;
    case Command::snf:
      if (cfg.matrix) j["matrix"] = matrix_to_json(*cfg.matrix);
      break;
  }
  return j;
}

namespace {

std::string timestamp_utc() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

json summary_json(std::size_t length, std::span<const double> xs) {
  const StatSummary s = summarize(xs);
  json q = json::object();
  static const char* names[] = {"p01", "p05", "p25", "p50", "p75", "p95", "p99"};
  for (std::size_t i = 0; i < s.quantiles.size(); ++i) q[names[i]] = s.quantiles[i];
  return {{"length", length}, {"count", s.count}, {"mean", s.mean}, {"variance", s.variance},
          {"min", s.min}, {"max", s.max}, {"quantiles", q}};
}

json fit_json(const std::optional<LinearFit>& f) {
  if (!f) return nullptr;
  return {{"slope", f->slope}, {"intercept", f->intercept}, {"r_squared", f->r_squared}};
}

json clt_json(std::span<const double> xs) {
  try {
    const CltDiagnostics d = clt_diagnostics(xs);
    return {{"mean", d.mean}, {"variance", d.variance}, {"skewness", d.skewness},
            {"excess_kurtosis", d.excess_kurtosis}, {"ks_statistic", d.ks_statistic},
            {"count", xs.size()}};
  } catch (const std::invalid_argument& e) {
    return {{"unavailable", e.what()}};
  }
}

// Per-length grouping helper over records in (length, index) order.
template <class Record, class Value>
std::vector<std::vector<double>> group_by_length(const std::vector<Record>& recs, std::size_t per,
                                                 Value value) {
  std::vector<std::vector<double>> groups(recs.size() / per);
  for (std::size_t i = 0; i < recs.size(); ++i) groups[i / per].push_back(value(recs[i]));
  return groups;
}

std::optional<LinearFit> fit_means(const std::vector<std::size_t>& lengths,
                                   const std::vector<std::vector<double>>& groups) {
  if (lengths.size() < 2) return std::nullopt;
  std::vector<double> x, y;
  for (std::size_t i = 0; i < lengths.size(); ++i) {
    x.push_back(static_cast<double>(lengths[i]));
    y.push_back(pairwise_sum(groups[i]) / static_cast<double>(groups[i].size()));
  }
  return linear_fit(x, y);
}

json family_json(const GeneratorFamily& f) {
  return {{"name", to_string(f.name())}, {"group", f.group().to_string()},
          {"size", f.size()}, {"dim", f.dim()}, {"mode", to_string(f.mode())},
          {"preserved_form", to_string(f.preserved_form())}};
}

void check_det_one(const WalkSample& s) {
  if (det(s.product) != 1)
    throw InvariantError("walk product with det != 1 at (" + std::to_string(s.length) + ", " +
                         std::to_string(s.sample_index) + ")");
}

json base_manifest(const ExperimentConfig& cfg) {
  return {{"artifact_version", kArtifactVersion},
          {"command", to_string(cfg.command)},
          {"config", config_to_json(cfg)},
          {"timestamp", timestamp_utc()}};
}

// ---------- commands ----------

struct TorsionRecord {
  std::size_t length, index;
  double log_torsion;
  std::size_t betti;
  bool singular;
};

ExperimentOutput run_torsion_stats(const ExperimentConfig& cfg) {
  const auto family = prepare_family(cfg.batch);
  auto recs = run_batch(cfg.batch, [](const WalkSample& s) {
    check_det_one(s);
    const TorsionOrder t = torsion_order(s.product);
    std::size_t betti = 1;
    if (t.singular) betti = 1 + s.product.dim() - rational_rank(s.product.minus_identity());
    return TorsionRecord{s.length, s.sample_index, log_integer(t.value), betti, t.singular};
  });
  std::ostringstream csv;
  csv << "length,sample_index,log_torsion,betti,singular\n";
  for (const auto& r : recs)
    csv << r.length << ',' << r.index << ',' << format_real(r.log_torsion) << ',' << r.betti << ','
        << (r.singular ? 1 : 0) << '\n';

  const auto lengths = cfg.batch.lengths.values();
  const std::size_t per = cfg.batch.samples_per_length;
  const auto groups = group_by_length(recs, per, [](const TorsionRecord& r) { return r.log_torsion; });
  json summaries = json::array();
  for (std::size_t i = 0; i < lengths.size(); ++i) {
    json s = summary_json(lengths[i], groups[i]);
    std::size_t high_betti = 0, singular = 0;
    for (std::size_t k = 0; k < per; ++k) {
      high_betti += recs[i * per + k].betti > 1;
      singular += recs[i * per + k].singular;
    }
    s["mean_log_torsion_per_step"] = s["mean"].get<double>() / static_cast<double>(lengths[i]);
    s["fraction_betti_above_1"] = static_cast<double>(high_betti) / static_cast<double>(per);
    s["fraction_singular"] = static_cast<double>(singular) / static_cast<double>(per);
    summaries.push_back(std::move(s));
  }
  json m = base_manifest(cfg);
  m["family"] = family_json(*family);
  m["summaries"] = std::move(summaries);
  m["fit"] = fit_json(fit_means(lengths, groups));
  m["clt_diagnostics"] = clt_json(groups.back());
  return {csv.str(), std::move(m)};
}

struct RankRecord {
  std::size_t length, index;
  std::vector<std::size_t> ranks;
};

ExperimentOutput run_modp_rank(const ExperimentConfig& cfg) {
  if (cfg.primes.empty()) throw ConfigError("modp-rank: no primes given");
  for (auto p : cfg.primes)
    if (!is_prime(p)) throw ConfigError("modp-rank: " + std::to_string(p) + " is not prime");
  const auto family = prepare_family(cfg.batch);
  const auto primes = cfg.primes;
  auto recs = run_batch(cfg.batch, [&primes](const WalkSample& s) {
    RankRecord r{s.length, s.sample_index, {}};
    for (auto p : primes) r.ranks.push_back(fp_rank(s.product, p));
    return r;
  });
  std::ostringstream csv;
  csv << "length,sample_index,p,fp_rank\n";
  for (const auto& r : recs)
    for (std::size_t k = 0; k < primes.size(); ++k)
      csv << r.length << ',' << r.index << ',' << primes[k] << ',' << r.ranks[k] << '\n';

  const auto lengths = cfg.batch.lengths.values();
  const std::size_t per = cfg.batch.samples_per_length;
  json tables = json::array();
  for (std::size_t k = 0; k < primes.size(); ++k) {
    std::optional<SymplecticOracle> oracle;
    std::string oracle_note;
    if (family->is_symplectic()) {
      try {
        oracle = exhaustive_sp2_oracle(primes[k], family->dim() / 2);
      } catch (const std::domain_error& e) {
        oracle_note = e.what();
      }
    } else {
      oracle_note = "family does not preserve the standard symplectic form";
    }
    for (std::size_t li = 0; li < lengths.size(); ++li) {
      std::vector<std::size_t> ranks;
      for (std::size_t j = 0; j < per; ++j) ranks.push_back(recs[li * per + j].ranks[k]);
      const RankTable t = make_rank_table(primes[k], ranks, oracle ? &*oracle : nullptr);
      json freq = json::object(), pred = json::object();
      for (const auto& [r, v] : t.frequencies) freq[std::to_string(r)] = v;
      for (const auto& [r, v] : t.predicted) pred[std::to_string(r)] = v;
      double eig1 = 0;
      for (const auto& [r, v] : t.frequencies)
        if (r > 1) eig1 += v;
      json entry = {{"p", primes[k]}, {"length", lengths[li]}, {"frequencies", freq},
                    {"eigenvalue_one_fraction", eig1}};
      if (oracle) {
        json exact = json::object();
        for (const auto& [r, prob] : oracle->distribution)
          exact[std::to_string(r)] = std::to_string(prob.numerator) + "/" + std::to_string(prob.denominator);
        entry["predicted"] = pred;
        entry["predicted_exact"] = exact;
        entry["group_order"] = oracle->group_order;
        entry["total_variation"] = t.total_variation();
      } else {
        entry["predicted"] = nullptr;
        entry["oracle_note"] = oracle_note;
      }
      tables.push_back(std::move(entry));
    }
  }
  json m = base_manifest(cfg);
  m["family"] = family_json(*family);
  m["rank_tables"] = std::move(tables);
  return {csv.str(), std::move(m)};
}

struct HeegaardRecord {
  std::size_t length, index;
  double log_h1;
  std::size_t betti;
  double complexity;
};

HeegaardRecord heegaard_record(std::size_t length, std::size_t index, const IntMatrix& m) {
  const HomologyDescriptor h = heegaard_homology(m, m.dim() / 2);
  return {length, index, log_integer(h.torsion_order), h.betti, complexity_lower_bound(h)};
}

ExperimentOutput run_heegaard(const ExperimentConfig& cfg) {
  const auto family = prepare_family(cfg.batch);
  if (!family->is_symplectic())
    throw ConfigError("heegaard: family '" + to_string(family->name()) +
                      "' does not preserve the standard symplectic form");
  const std::size_t genus = family->dim() / 2;
  auto recs = run_batch(cfg.batch, [](const WalkSample& s) {
    check_det_one(s);
    return heegaard_record(s.length, s.sample_index, s.product);
  });
  std::ostringstream csv;
  csv << "length,sample_index,log_h1,betti,complexity_lower_bound\n";
  auto emit = [&csv](const HeegaardRecord& r) {
    csv << r.length << ',' << r.index << ',' << format_real(r.log_h1) << ',' << r.betti << ','
        << format_real(r.complexity) << '\n';
  };
  json m = base_manifest(cfg);
  if (cfg.identity_smoke) {
    const HeegaardRecord smoke = heegaard_record(0, 0, IntMatrix::identity(2 * genus));
    if (smoke.betti != genus) throw InvariantError("heegaard: identity gluing betti != genus");
    emit(smoke);
    m["identity_smoke"] = {{"betti", smoke.betti}, {"expected_betti", genus}};
  }
  for (const auto& r : recs) emit(r);

  const auto lengths = cfg.batch.lengths.values();
  const std::size_t per = cfg.batch.samples_per_length;
  const auto groups = group_by_length(recs, per, [](const HeegaardRecord& r) { return r.log_h1; });
  json summaries = json::array();
  for (std::size_t i = 0; i < lengths.size(); ++i) {
    json s = summary_json(lengths[i], groups[i]);
    std::size_t positive_betti = 0;
    for (std::size_t k = 0; k < per; ++k) positive_betti += recs[i * per + k].betti > 0;
    s["fraction_betti_positive"] = static_cast<double>(positive_betti) / static_cast<double>(per);
    summaries.push_back(std::move(s));
  }
  m["family"] = family_json(*family);
  m["summaries"] = std::move(summaries);
  m["fit"] = fit_json(fit_means(lengths, groups));
  m["clt_diagnostics"] = clt_json(groups.back());
  return {csv.str(), std::move(m)};
}

ExperimentOutput run_lyapunov(const ExperimentConfig& cfg) {
  const auto family = prepare_family(cfg.batch);
  LyapunovEstimate est;
  try {
    est = estimate_exponents(*family, cfg.steps, cfg.trials, cfg.batch.master_seed);
  } catch (const std::invalid_argument& e) {
    throw ConfigError(std::string("lyapunov: ") + e.what());
  }
  std::ostringstream csv;
  csv << "index,exponent,standard_error\n";
  for (std::size_t i = 0; i < est.exponents.size(); ++i)
    csv << i << ',' << format_real(est.exponents[i]) << ',' << format_real(est.standard_error[i])
        << '\n';
  json m = base_manifest(cfg);
  m["family"] = family_json(*family);
  m["lyapunov"] = {{"exponents", est.exponents},
                   {"standard_error", est.standard_error},
                   {"positive_sum", est.positive_sum()},
                   {"total_sum", est.total_sum()},
                   {"trials", est.trials},
                   {"steps_per_trial", est.steps_per_trial},
                   {"units", "nats per step"}};
  return {csv.str(), std::move(m)};
}

ExperimentOutput run_prescribe(const ExperimentConfig& cfg) {
  DivisorChain chain;
  IntMatrix mat;
  try {
    chain = parse_chain(cfg.chain);
    mat = prescribe_symplectic(chain);
  } catch (const std::invalid_argument& e) {
    throw ConfigError(std::string("prescribe: ") + e.what());
  }
  const bool ok = verify_prescription(mat, chain);
  if (!ok) throw InvariantError("prescribe: constructed matrix failed verification");
  std::ostringstream csv;
  csv << "row,col,value\n";
  for (std::size_t i = 0; i < mat.dim(); ++i)
    for (std::size_t j = 0; j < mat.dim(); ++j) csv << i << ',' << j << ',' << mat(i, j) << '\n';
  json divisors = json::array();
  for (const auto& d : chain.divisors) divisors.push_back(d.get_str());
  json m = base_manifest(cfg);
  m["chain"] = divisors;
  m["matrix"] = matrix_to_json(mat);
  m["symplectic"] = is_symplectic(mat);
  m["verification"] = ok;
  return {csv.str(), std::move(m)};
}

ExperimentOutput run_punctured(const ExperimentConfig& cfg) {
  std::vector<std::size_t> lengths;
  try {
    if (cfg.batch.lengths.step < 1 || cfg.batch.lengths.end < cfg.batch.lengths.start)
      throw std::invalid_argument("bad length progression");
    for (std::size_t v = cfg.batch.lengths.start; v <= cfg.batch.lengths.end; v += cfg.batch.lengths.step) {
      if (cfg.pow2) {
        if (v > 40) throw std::invalid_argument("pow2 exponent above 40");
        lengths.push_back(std::size_t{1} << v);
      } else {
        if (v == 0) throw std::invalid_argument("lengths must be >= 1");
        lengths.push_back(v);
      }
    }
  } catch (const std::invalid_argument& e) {
    throw ConfigError(std::string("punctured: ") + e.what());
  }
  RunScalingResult res;
  try {
    res = run_scaling_experiment(cfg.alphabet, lengths, cfg.batch.samples_per_length,
                                 cfg.batch.master_seed);
  } catch (const std::invalid_argument& e) {
    throw ConfigError(std::string("punctured: ") + e.what());
  }
  std::ostringstream csv;
  csv << "length,log_length,mean_longest_run,fitted\n";
  for (const auto& r : res.rows) {
    const double ll = std::log(static_cast<double>(r.length));
    const double fitted = res.fit ? res.fit->intercept + res.fit->slope * ll : std::nan("");
    csv << r.length << ',' << format_real(ll) << ',' << format_real(r.mean_longest_run) << ','
        << format_real(fitted) << '\n';
  }
  json m = base_manifest(cfg);
  m["fit"] = fit_json(res.fit);
  const double expected = 1.0 / std::log(static_cast<double>(cfg.alphabet));
  m["expected_log_coefficient"] = expected;
  m["relative_error"] = res.fit ? json(std::fabs(res.fit->slope - expected) / expected) : json(nullptr);
  return {csv.str(), std::move(m)};
}

ExperimentOutput run_snf(const ExperimentConfig& cfg) {
  if (!cfg.matrix) throw ConfigError("snf: no matrix given (matrix_file)");
  const DivisorChain chain = smith_normal_form(*cfg.matrix);
  if (!chain.is_valid()) throw InvariantError("snf: divisor chain invariant violated");
  std::ostringstream csv;
  csv << "index,divisor\n";
  json divisors = json::array();
  for (std::size_t i = 0; i < chain.divisors.size(); ++i) {
    csv << i << ',' << chain.divisors[i] << '\n';
    divisors.push_back(chain.divisors[i].get_str());
  }
  json m = base_manifest(cfg);
  m["divisors"] = divisors;
  m["determinant"] = det(*cfg.matrix).get_str();
  return {csv.str(), std::move(m)};
}

}  // namespace

ExperimentOutput run_experiment(const ExperimentConfig& cfg) {
  try {
    switch (cfg.command) {
      case Command::torsion_stats: return run_torsion_stats(cfg);
      case Command::modp_rank: return run_modp_rank(cfg);
      case Command::heegaard: return run_heegaard(cfg);
      case Command::lyapunov: return run_lyapunov(cfg);
      case Command::prescribe: return run_prescribe(cfg);
      case Command::punctured: return run_punctured(cfg);
      case Command::snf: return run_snf(cfg);
    }
  } catch (const BatchError& e) {
    throw InvariantError(e.what());
  } catch (const std::invalid_argument& e) {
    // Family construction and batch validation report through invalid_argument.
    throw ConfigError(e.what());
  }
  throw ConfigError("unknown command");
}

void write_outputs(const ExperimentOutput& out, const std::string& prefix) {
  auto write = [](const std::string& path, const std::string& data) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw IoError("cannot open '" + path + "' for writing");
    f << data;
    f.close();
    if (!f) throw IoError("failed writing '" + path + "'");
  };
  write(prefix + ".csv", out.csv);
  write(prefix + ".json", out.manifest.dump(2) + "\n");
}

}  // namespace rm3::experiment
