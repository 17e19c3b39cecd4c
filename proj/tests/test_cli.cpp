#include <doctest.h>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "alphax/cli.hpp"
#include "alphax/errors.hpp"

using namespace alphax;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  for (std::string line; std::getline(ss, line);) out.push_back(line);
  return out;
}

std::filesystem::path scratch(const std::string& name) {
  auto dir = std::filesystem::temp_directory_path() / ("alphax_cli_" + name);
  std::filesystem::remove_all(dir);
  return dir;
}

}  // namespace

TEST_CASE("decimal grids are generated exactly") {
  const auto grid = cli::parse_decimal_grid("0.1:0.9:0.1");
  REQUIRE(grid.size() == 9);
  CHECK(grid.front() == "0.1");
  CHECK(grid[2] == "0.3");
  CHECK(grid.back() == "0.9");
  CHECK(cli::parse_decimal_grid("0.25,0.5,0.75") == std::vector<std::string>{"0.25", "0.5", "0.75"});
  CHECK(cli::parse_decimal_grid("0:1:0.25").size() == 5);
  CHECK_THROWS_AS(cli::parse_decimal_grid("0.1:x:0.1"), ParseError);
  CHECK_THROWS_AS(cli::parse_decimal_grid("0.1:0.2:0"), ParseError);
  CHECK(cli::parse_int_range("4:8") == std::pair{4, 8});
  CHECK(cli::parse_int_list("3,2,2") == std::vector<int>{3, 2, 2});
}

TEST_CASE("alpha-index command") {
  auto k3 = run({"alpha-index", "--g6", "Bw", "--alpha", "0.5"});
  CHECK(k3.code == 0);
  CHECK(std::stod(k3.out) == doctest::Approx(2.0).epsilon(1e-12));
  auto split = run({"alpha-index", "--family", "split", "--n", "4", "--m", "1", "--alpha", "0.5"});
  CHECK(split.code == 0);
  CHECK(std::stod(split.out) == doctest::Approx(2.0).epsilon(1e-12));
  auto bad = run({"alpha-index", "--g6", "invalid~", "--alpha", "0.5"});
  CHECK(bad.code == cli::kExitParse);
  CHECK(bad.err.find("offset") != std::string::npos);
  CHECK(run({"alpha-index", "--g6", "Bw", "--alpha", "1.5"}).code == cli::kExitDomain);
  CHECK(run({"alpha-index", "--g6", "Bw", "--family", "split", "--alpha", "0.5"}).code == cli::kExitParse);
  CHECK(run({"alpha-index", "--family", "cliques", "--n", "10", "--s", "2", "--t", "4", "--alpha", "0.5"}).code ==
        cli::kExitDomain);
  auto json = run({"alpha-index", "--family", "cliques", "--n", "10", "--s", "2", "--t", "3", "--alpha", "0.5",
                   "--format", "json"});
  REQUIRE(json.code == 0);
  const auto j = nlohmann::json::parse(json.out);
  CHECK(std::abs(j["rho"].get<double>() - (7 + std::sqrt(13.0)) / 2) <= 1e-9);
  CHECK(j["vector"].size() == 10);
}

TEST_CASE("construct, enumerate, minor and star-forest commands") {
  CHECK(run({"construct", "--family", "split", "--n", "3", "--m", "3"}).out == "Bw\n");
  CHECK(run({"enumerate", "--n", "5", "--count"}).out == "34\n");
  CHECK(lines(run({"enumerate", "--n", "4"}).out).size() == 11);
  const auto minor = nlohmann::json::parse(run({"minor", "--g6", "Dhc", "--clique", "3"}).out);
  CHECK(minor["has_minor"] == true);
  CHECK(minor["certificate"]["branch_sets"].size() == 3);
  const auto none = nlohmann::json::parse(run({"minor", "--g6", "CF", "--clique", "3"}).out);
  CHECK(none["has_minor"] == false);
  const auto sf = nlohmann::json::parse(run({"star-forest", "--g6", "C~", "--degrees", "1,1"}).out);
  CHECK(sf["contains"] == true);
  CHECK(run({"minor", "--g6", "Bw"}).code == cli::kExitDomain);
}

TEST_CASE("environment cap is honoured") {
  ::setenv("ALPHA_EXTREMAL_CAP", "5", 1);
  const auto capped = run({"extremal", "--n", "6", "--alpha", "0.5", "--class", "clique", "--r", "3"});
  ::unsetenv("ALPHA_EXTREMAL_CAP");
  CHECK(capped.code == cli::kExitDomain);
  const auto ok = run({"extremal", "--n", "6", "--alpha", "0.5", "--class", "clique", "--r", "3"});
  CHECK(ok.code == 0);
  CHECK(nlohmann::json::parse(ok.out)["witnesses"].size() == 1);
}

TEST_CASE("check writes one report per grid point and a summary") {
  const auto dir = scratch("t1");
  const auto r = run({"check", "--theorem", "T1", "--r", "3", "--n-range", "4:8", "--alpha-grid",
                      "0.25,0.5,0.75", "--out", dir.string(), "--workers", "2"});
  REQUIRE(r.code == 0);
  int reports = 0;
  for (const auto& entry : std::filesystem::directory_iterator(dir))
    if (entry.path().extension() == ".json") {
      ++reports;
      std::ifstream in(entry.path());
      const auto j = nlohmann::json::parse(in);
      CHECK(j["verdict"] == "MATCH");
    }
  CHECK(reports == 15);
  std::ifstream summary(dir / "summary.csv");
  std::stringstream buf;
  buf << summary.rdbuf();
  CHECK(lines(buf.str()).size() == 16);

  const auto t3 = run({"check", "--theorem", "T3", "--degrees", "2,2", "--n-range", "6:8", "--alpha", "0.5",
                       "--format", "csv"});
  CHECK(t3.code == 0);
  CHECK(lines(t3.out).size() == 4);

  const auto t2 = run({"check", "--theorem", "T2", "--s", "2", "--t", "3", "--n", "7", "--alpha", "0.5"});
  REQUIRE(t2.code == 0);
  const auto j = nlohmann::json::parse(t2.out);
  REQUIRE(j.size() == 1);
  CHECK(j[0]["predicted_witness"] == "FJaNw");
  CHECK(run({"check", "--theorem", "T2", "--s", "3", "--t", "2", "--n", "7", "--alpha", "0.5"}).code ==
        cli::kExitDomain);
  CHECK(run({"check", "--theorem", "T1", "--r", "3", "--n", "7", "--alpha", "1"}).code == cli::kExitDomain);
}

TEST_CASE("check output does not depend on the worker count") {
  const auto a = scratch("w1");
  const auto b = scratch("w3");
  for (auto [dir, w] : {std::pair{a, "1"}, std::pair{b, "3"}})
    REQUIRE(run({"check", "--theorem", "T2", "--s", "2", "--t", "3", "--n-range", "5:7", "--alpha-grid",
                 "0.3,0.6", "--workers", w, "--out", dir.string()})
                .code == 0);
  int compared = 0;
  for (const auto& entry : std::filesystem::directory_iterator(a)) {
    std::ifstream fa(entry.path()), fb(b / entry.path().filename());
    std::stringstream sa, sb;
    sa << fa.rdbuf();
    sb << fb.rdbuf();
    CHECK(sa.str() == sb.str());
    ++compared;
  }
  CHECK(compared == 7);
}

TEST_CASE("check accepts an external graph6 stream") {
  const auto dir = scratch("stream");
  std::filesystem::create_directories(dir);
  const auto file = dir / "n6.g6";
  {
    std::ofstream out(file);
    out << run({"enumerate", "--n", "6"}).out;
  }
  const auto external = run({"check", "--theorem", "T1", "--r", "4", "--n", "6", "--alpha", "0.5", "--format",
                             "csv", "--graph6-stream", file.string()});
  const auto builtin = run({"check", "--theorem", "T1", "--r", "4", "--n", "6", "--alpha", "0.5", "--format",
                            "csv"});
  CHECK(external.code == 0);
  CHECK(external.out == builtin.out);
}

TEST_CASE("bounds tables") {
  const auto l21 = lines(run({"bounds", "--lemma21", "--n", "100", "--k", "3", "--alpha-grid", "0.1:0.9:0.1"}).out);
  REQUIRE(l21.size() == 10);
  // Column 7 is second - first; it is positive below 0.75 and negative above.
  auto diff = [&](int row) {
    std::vector<std::string> cells;
    std::stringstream ss(l21[row]);
    for (std::string c; std::getline(ss, c, ',');) cells.push_back(c);
    return std::stod(cells[6]);
  };
  for (int row = 1; row <= 6; ++row) CHECK(diff(row) > 0);
  for (int row = 8; row <= 9; ++row) CHECK(diff(row) < 0);

  const auto fa = lines(run({"bounds", "--falpha", "--n", "10", "--k", "2", "--d", "3", "--alpha", "0.5"}).out);
  REQUIRE(fa.size() == 2);
  CHECK(fa[1].find("5.30277563") != std::string::npos);

  const auto q = lines(run({"bounds", "--q", "--s", "2", "--t", "3", "--n", "10"}).out);
  REQUIRE(q.size() == 2);
  CHECK(q[1].find("10.6055512") != std::string::npos);

  const auto reasons = lines(run({"bounds", "--falpha", "--n-range", "5:6", "--k", "2", "--d", "3", "--alpha",
                                  "0.5"}).out);
  REQUIRE(reasons.size() == 3);
  CHECK(reasons[1].find("requires n >=") != std::string::npos);
  CHECK(reasons[2].find("requires") == std::string::npos);
}

TEST_CASE("sweep command reports violations through the exit code") {
  const auto clean = run({"sweep", "--samples", "1", "--exhaustive-n", "5"});
  CHECK(clean.code == 0);
  CHECK(nlohmann::json::parse(clean.out)["violations"].empty());
  const auto dirty = run({"sweep", "--samples", "1", "--exhaustive-n", "5", "--corrupt", "0.1"});
  CHECK(dirty.code == cli::kExitFailure);
}

TEST_CASE("usage errors exit with the parse code") {
  CHECK(run({}).code == cli::kExitParse);
  CHECK(run({"no-such-command"}).code == cli::kExitParse);
  CHECK(run({"bounds", "--falpha", "--q", "--n", "4"}).code == cli::kExitParse);
  CHECK(run({"alpha-index", "--g6", "Bw", "--alpha", "abc"}).code == cli::kExitParse);
  CHECK(run({"--help"}).code == 0);
}
