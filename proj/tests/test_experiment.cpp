#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "rm3/errors.hpp"
#include "rm3/experiment.hpp"

using namespace rm3;
using namespace rm3::experiment;
using nlohmann::json;

namespace {

ExperimentOutput run(const json& cfg) { return run_experiment(config_from_json(cfg)); }

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string l; std::getline(in, l);) out.push_back(l);
  return out;
}

std::string header(const std::string& csv) { return lines(csv).front(); }

}  // namespace

TEST_CASE("format_real round-trips doubles") {
  for (double v : {0.1, 1.0 / 3.0, 2.5e-300, 123456789.123, -0.0}) CHECK(std::stod(format_real(v)) == v);
  CHECK(format_real(0.5) == "0.5");
}

TEST_CASE("torsion-stats rows and fit") {
  const auto out = run({{"command", "torsion-stats"}, {"family", "humphries"}, {"genus", 2},
                        {"lengths", "100:500:100"}, {"samples", 50}, {"seed", 7}});
  const auto ls = lines(out.csv);
  CHECK(ls.front() == "length,sample_index,log_torsion,betti,singular");
  CHECK(ls.size() == 251);
  const double slope = out.manifest["fit"]["slope"].get<double>();
  CHECK(slope > 0.12);
  CHECK(slope < 0.18);
  CHECK(out.manifest["summaries"].size() == 5);
  CHECK(out.manifest["artifact_version"] == kArtifactVersion);
  CHECK(out.manifest.contains("timestamp"));
  CHECK(out.manifest["config"]["seed"] == 7);
  CHECK(out.manifest["config"]["mode"] == "positive");
}

TEST_CASE("single length has no fit") {
  const auto out = run({{"command", "torsion-stats"}, {"lengths", "10"}, {"samples", 1}});
  CHECK(lines(out.csv).size() == 2);
  CHECK(out.manifest["fit"].is_null());
}

TEST_CASE("manifest round trip reproduces the csv") {
  const std::vector<json> configs = {
      {{"command", "torsion-stats"}, {"family", "stanek"}, {"n", 2}, {"lengths", "20:60:20"}, {"samples", 7}, {"seed", 3}},
      {{"command", "modp-rank"}, {"family", "humphries"}, {"genus", 2}, {"lengths", "30"}, {"samples", 20}, {"primes", {2, 3}}, {"mode", "symmetric"}, {"lazy", true}},
      {{"command", "heegaard"}, {"family", "humphries"}, {"genus", 3}, {"lengths", "10:30:10"}, {"samples", 5}, {"seed", 11}},
      {{"command", "lyapunov"}, {"family", "hua-reiner"}, {"n", 3}, {"steps", 200}, {"trials", 3}, {"seed", 5}},
      {{"command", "prescribe"}, {"chain", "1,2,2,4"}},
      {{"command", "punctured"}, {"lengths", "4:8:2"}, {"samples", 10}, {"seed", 1}},
      json::parse(R"({"command": "snf", "matrix": [[2, 4, 4], [-6, 6, 12], [10, -4, -16]]})"),
      json::parse(R"({"command": "torsion-stats", "family": "custom", "custom_matrices": [[["2", "1"], ["1", "1"]], [[1, 1], [0, 1]]], "lengths": "5:10:5", "samples": 4})"),
  };
  for (const auto& c : configs) {
    const auto first = run(c);
    const auto again = run(first.manifest);  // the whole manifest is accepted
    CHECK(first.csv == again.csv);
    CHECK(first.manifest["config"] == again.manifest["config"]);
    json a = first.manifest, b = again.manifest;
    a.erase("timestamp");
    b.erase("timestamp");
    CHECK(a == b);
  }
}

TEST_CASE("modp-rank identity family and prime validation") {
  const auto out = run(json::parse(R"({"command": "modp-rank", "family": "custom",
    "custom_matrices": [[[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]]],
    "lengths": "5", "samples": 6, "primes": [2, 5]})"));
  const auto ls = lines(out.csv);
  CHECK(ls.front() == "length,sample_index,p,fp_rank");
  CHECK(ls.size() == 13);
  for (std::size_t i = 1; i < ls.size(); ++i) CHECK(ls[i].substr(ls[i].rfind(',') + 1) == "5");
  CHECK_THROWS_AS(run({{"command", "modp-rank"}, {"primes", {4}}}), ConfigError);
}

TEST_CASE("modp-rank emits the oracle comparison") {
  const auto out = run(json::parse(R"({"command": "modp-rank", "family": "custom",
    "custom_matrices": [[[1, 1], [0, 1]], [[1, 0], [-1, 1]]], "lengths": "50", "samples": 100, "primes": [2]})"));
  const auto& t = out.manifest["rank_tables"][0];
  CHECK(t["group_order"] == 6);
  CHECK(t["predicted_exact"]["3"] == "1/6");
  CHECK(t.contains("total_variation"));
  CHECK(t.contains("eigenvalue_one_fraction"));
}

TEST_CASE("heegaard identity smoke row") {
  const auto out = run({{"command", "heegaard"}, {"genus", 2}, {"lengths", "10:20:10"}, {"samples", 3}});
  const auto ls = lines(out.csv);
  CHECK(ls.front() == "length,sample_index,log_h1,betti,complexity_lower_bound");
  CHECK(ls[1] == "0,0,0,2,0");
  CHECK(ls.size() == 8);
  CHECK(out.manifest["identity_smoke"]["betti"] == 2);
  const auto off = run({{"command", "heegaard"}, {"genus", 2}, {"lengths", "10"}, {"samples", 3}, {"identity_smoke", false}});
  CHECK(lines(off.csv).size() == 4);
  CHECK_THROWS_AS(run({{"command", "heegaard"}, {"family", "hua-reiner"}, {"n", 3}}), ConfigError);
}

TEST_CASE("lyapunov output") {
  const auto out = run({{"command", "lyapunov"}, {"family", "stanek"}, {"n", 2}, {"seed", 1}});
  CHECK(header(out.csv) == "index,exponent,standard_error");
  const double s = out.manifest["lyapunov"]["positive_sum"].get<double>();
  CHECK(s > 0.119);
  CHECK(s < 0.146);
  CHECK_THROWS_AS(run({{"command", "lyapunov"}, {"steps", 10}}), ConfigError);
}

TEST_CASE("prescribe output") {
  const auto out = run({{"command", "prescribe"}, {"chain", "2,6"}});
  CHECK(out.manifest["verification"] == true);
  CHECK(out.manifest["matrix"] == json::array({json::array({"-13", "2"}), json::array({"-20", "3"})}));
  CHECK(out.csv == "row,col,value\n0,0,-13\n0,1,2\n1,0,-20\n1,1,3\n");
  CHECK_THROWS_AS(run({{"command", "prescribe"}, {"chain", "2,3"}}), ConfigError);
  CHECK_THROWS_AS(run({{"command", "prescribe"}, {"chain", "1,1,1"}}), ConfigError);
}

TEST_CASE("punctured output") {
  const auto out = run({{"command", "punctured"}, {"lengths", "6:10:1"}, {"samples", 50}, {"seed", 2}});
  const auto ls = lines(out.csv);
  CHECK(ls.front() == "length,log_length,mean_longest_run,fitted");
  CHECK(ls.size() == 6);
  CHECK(ls[1].rfind("64,", 0) == 0);
  CHECK(out.manifest["expected_log_coefficient"].get<double>() == doctest::Approx(1 / std::log(2.0)));
  const auto lin = run({{"command", "punctured"}, {"lengths", "1"}, {"pow2", false}, {"samples", 20}});
  CHECK(lines(lin.csv)[1].rfind("1,", 0) == 0);
  CHECK_THROWS_AS(run({{"command", "punctured"}, {"alphabet", 1}}), ConfigError);
}

TEST_CASE("snf output") {
  const auto out = run(json::parse(R"({"command": "snf", "matrix": [[2, 4, 4], [-6, 6, 12], [10, -4, -16]]})"));
  CHECK(out.csv == "index,divisor\n0,2\n1,6\n2,12\n");
  CHECK(out.manifest["determinant"] == "-144");
  CHECK_THROWS_AS(run({{"command", "snf"}}), ConfigError);
}

TEST_CASE("config errors") {
  CHECK_THROWS_AS(config_from_json(json::array()), ConfigError);
  CHECK_THROWS_AS(config_from_json({{"family", "humphries"}}), ConfigError);
  CHECK_THROWS_AS(config_from_json({{"command", "nope"}}), ConfigError);
  CHECK_THROWS_AS(config_from_json({{"command", "torsion-stats"}, {"family", "nope"}}), ConfigError);
  CHECK_THROWS_AS(config_from_json({{"command", "torsion-stats"}, {"samples", -3}}), ConfigError);
  CHECK_THROWS_AS(config_from_json({{"command", "torsion-stats"}, {"lengths", "x"}}), ConfigError);
  CHECK_THROWS_AS(config_from_json({{"command", "torsion-stats"}, {"mode", "sideways"}}), ConfigError);
  CHECK_THROWS_AS(config_from_json({{"command", "torsion-stats"}, {"family", "custom"}}), ConfigError);
  CHECK_THROWS_AS(config_from_json(json::parse(R"({"command": "snf", "matrix": [[1, 2]]})")), ConfigError);
  CHECK_THROWS_AS(run({{"command", "torsion-stats"}, {"genus", 1}}), ConfigError);
  CHECK_THROWS_AS(run({{"command", "torsion-stats"}, {"samples", 0}}), ConfigError);
  CHECK_THROWS_AS(config_from_json({{"command", "snf"}, {"matrix_file", "/nonexistent/m.txt"}}), IoError);
}

TEST_CASE("write_outputs") {
  const auto dir = std::filesystem::temp_directory_path() / "rm3_test_outputs";
  std::filesystem::create_directories(dir);
  const auto out = run({{"command", "prescribe"}, {"chain", "1,1"}});
  write_outputs(out, (dir / "p").string());
  std::ifstream csv(dir / "p.csv"), js(dir / "p.json");
  std::stringstream a;
  a << csv.rdbuf();
  CHECK(a.str() == out.csv);
  CHECK(json::parse(js)["verification"] == true);
  CHECK_THROWS_AS(write_outputs(out, "/nonexistent/dir/p"), IoError);
  std::filesystem::remove_all(dir);
}
