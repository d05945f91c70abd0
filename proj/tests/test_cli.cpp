#include <doctest.h>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "sqmodp/cli.hpp"

namespace fs = std::filesystem;
using sqmodp::cli::run_command;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "sqmodp");
  std::ostringstream out, err;
  const int code = run_command(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream in(s);
  for (std::string l; std::getline(in, l);) out.push_back(l);
  return out;
}

std::string slurp(const fs::path& p) {
  std::ifstream f(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(f), {}};
}

fs::path scratch(const std::string& name) {
  auto dir = fs::temp_directory_path() / ("sqmodp_cli_test_" + name);
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

}  // namespace

TEST_CASE("legendre subcommand") {
  const auto r = run({"legendre", "--p", "11"});
  REQUIRE(r.code == 0);
  const auto l = lines(r.out);
  REQUIRE(l.size() >= 11);
  CHECK(l[0] == "a,symbol");
  const std::vector<std::string> expected = {"1,1",  "2,-1", "3,1",  "4,1",  "5,1",
                                             "6,-1", "7,-1", "8,-1", "9,1",  "10,-1"};
  for (std::size_t i = 0; i < expected.size(); ++i) CHECK(l[i + 1] == expected[i]);

  const auto recip = run({"legendre", "--p", "11", "--method", "reciprocity"});
  CHECK(recip.code == 0);
  CHECK(recip.out.substr(0, recip.out.find('#')) == r.out.substr(0, r.out.find('#')));
}

TEST_CASE("exit codes") {
  CHECK(run({"legendre", "--p", "8"}).code == 2);
  CHECK(run({"legendre", "--p", "8"}).err.find("not an odd prime") != std::string::npos);
  CHECK(run({"legendre", "--p", "9"}).code == 2);
  CHECK(run({"frobnicate"}).code == 1);
  CHECK(run({}).code == 1);
  CHECK(run({"legendre"}).code == 1);
  CHECK(run({"legendre", "--p", "11", "--format", "svg"}).code == 1);
  CHECK(run({"legendre", "--p", "11", "--method", "magic"}).code == 1);
  CHECK(run({"cycle", "--p", "11", "--g", "3"}).code == 2);
  CHECK(run({"period", "--m", "10", "--a", "2"}).code == 2);
  CHECK(run({"runs", "--p", "11", "--scan", "3"}).code == 1);
  CHECK(run({"--help"}).code == 0);
  CHECK(run({"sim-inversions", "--p", "29", "--iterations", "0"}).code == 1);
}

TEST_CASE("period subcommand") {
  const auto r = run({"period", "--m", "8191", "--a", "1904"});
  REQUIRE(r.code == 0);
  CHECK(r.out ==
        "index,state\n0,1\n1,1904\n2,4794\n3,3002\n4,6681\n"
        "# m=8191\n# a=1904\n# period=5\n# full_period=false\n");
}

TEST_CASE("runs scan") {
  const auto r = run({"runs", "--scan", "200", "--format", "csv"});
  REQUIRE(r.code == 0);
  int rows = 0;
  for (const auto& l : lines(r.out)) {
    if (l.empty() || l[0] == '#' || l.rfind("p,", 0) == 0) continue;
    std::istringstream in(l);
    std::string p, runs;
    std::getline(in, p, ',');
    std::getline(in, runs, ',');
    CHECK(std::stoull(runs) == (std::stoull(p) + 1) / 2);
    ++rows;
  }
  CHECK(rows == 200);
  CHECK(run({"scan", "--p-max", "20"}).out.find("# primes=7") != std::string::npos);
  CHECK(run({"runs", "--p", "17"}).out == "p,runs,predicted\n17,9,9\n");
}

TEST_CASE("inversions summary footer") {
  const auto r = run({"inversions", "--p", "29", "--precision", "2"});
  REQUIRE(r.code == 0);
  const auto l = lines(r.out);
  CHECK(l[1] == "2,129");
  CHECK(l[12] == "27,180");
  CHECK(r.out.find("# sample_mean=175.50") != std::string::npos);
  CHECK(r.out.find("# sample_sd=26.02") != std::string::npos);
  CHECK(r.out.find("# theory_variance=575.25") != std::string::npos);
  CHECK(r.out.find("# theory_sd=23.98") != std::string::npos);
}

TEST_CASE("pairs, dlog, sqrt, primroots, squares, cycle") {
  CHECK(run({"pairs", "--p", "7"}).out ==
        "source,npp,npm,nmp,nmm\nobserved,1,2,1,1\npredicted,1,2,1,1\n# p=7\n# p_mod_4=3\n# match=true\n");
  CHECK(run({"dlog", "--p", "11", "--g", "2", "--a", "5"}).out == "p,g,a,log\n11,2,5,4\n");
  CHECK(run({"sqrt", "--p", "8191", "--a", "2"}).out.find(",128\n") != std::string::npos);
  CHECK(run({"sqrt", "--p", "11", "--a", "2"}).out.find(",none\n") != std::string::npos);
  CHECK(run({"primroots", "--p", "11"}).out.find("2,6\n6,2\n7,8\n8,7\n") != std::string::npos);
  CHECK(run({"squares", "--p", "11"}).out.find("residue\n1\n3\n4\n5\n9\n") == 0);
  CHECK(run({"squares", "--p", "11", "--g", "2"}).out.find("# period=5") != std::string::npos);
  CHECK(run({"cycle", "--p", "11", "--g", "2"}).out.find("# inversions=15") != std::string::npos);
}

TEST_CASE("json output") {
  const auto r = run({"sim-runs", "--p", "97", "--iterations", "500", "--format", "json"});
  REQUIRE(r.code == 0);
  const auto doc = nlohmann::json::parse(r.out);
  CHECK(doc["command"] == "sim-runs");
  CHECK(doc["inputs"]["p"] == 97);
  CHECK(doc["provenance"]["seed"] == 20130401);
  CHECK(doc["provenance"].contains("rng_algorithm"));
  CHECK(doc["provenance"].contains("version"));
  unsigned long total = 0;
  for (const auto& bin : doc["outputs"]["histogram"]) total += bin[1].get<unsigned long>();
  CHECK(total == 500);

  const auto leg = nlohmann::json::parse(run({"legendre", "--p", "7", "--format", "json"}).out);
  CHECK(leg["outputs"]["symbols"] == nlohmann::json::array({1, 1, -1, 1, -1, -1}));
}

TEST_CASE("simulation output is byte-reproducible across worker counts") {
  const std::vector<std::string> base = {"sim-inversions", "--p", "29", "--iterations", "3000", "--seed", "17"};
  const auto a = run(base);
  const auto b = run(base);
  auto par = base;
  par.insert(par.end(), {"--workers", "4"});
  const auto c = run(par);
  REQUIRE(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(a.out == c.out);

  auto svg = base;
  svg.insert(svg.end(), {"--format", "svg"});
  const auto s1 = run(svg);
  CHECK(s1.code == 0);
  CHECK(s1.out.find("<svg") != std::string::npos);
  CHECK(s1.out == run(svg).out);
}

TEST_CASE("--out writes only on success") {
  const auto dir = scratch("out");
  const auto good = dir / "legendre.csv";
  REQUIRE(run({"legendre", "--p", "5", "--out", good.string()}).code == 0);
  CHECK(slurp(good).rfind("a,symbol\n1,1\n2,-1\n3,-1\n4,1\n", 0) == 0);

  const auto bad = dir / "bad.csv";
  CHECK(run({"legendre", "--p", "15", "--out", bad.string()}).code == 2);
  CHECK_FALSE(fs::exists(bad));
  fs::remove_all(dir);
}

TEST_CASE("config file supplies defaults that flags override") {
  const auto dir = scratch("config");
  const auto cfg = dir / "defaults.cfg";
  std::ofstream(cfg) << "# defaults\niterations = 250\nseed=5\nscan=10\n";

  const auto r = run({"sim-runs", "--p", "11", "--config", cfg.string()});
  REQUIRE(r.code == 0);
  CHECK(r.out.find("# iterations=250") != std::string::npos);
  CHECK(r.out.find("# seed=5") != std::string::npos);

  const auto o = run({"sim-runs", "--p", "11", "--iterations", "40", "--config", cfg.string()});
  CHECK(o.out.find("# iterations=40") != std::string::npos);

  CHECK(run({"scan", "--config", cfg.string()}).out.find("# primes=10") != std::string::npos);

  const auto broken = dir / "broken.cfg";
  std::ofstream(broken) << "colour=blue\n";
  CHECK(run({"scan", "--config", broken.string()}).code == 1);
  fs::remove_all(dir);
}

TEST_CASE("repro writes every dataset") {
  const auto dir = scratch("repro");
  const auto r = run({"repro", "--out", dir.string(), "--iterations", "500"});
  REQUIRE(r.code == 0);
  for (const char* name : {"orbit_m8191_a1904.csv", "primroots_p11.csv", "primroots_p29.csv",
                           "cycle_p29_g2.csv", "cycle_p29_g15.csv", "sqrt_p8191_a2.csv",
                           "inversions_p29.csv", "fig1_sim_inversions_p29.csv",
                           "fig1_sim_inversions_p29.svg", "fig2_sim_runs_p97.csv",
                           "fig2_sim_runs_p97.svg", "fig3_legendre_table.csv",
                           "fig4_runs_scan.csv", "fig4_runs_scan.svg"}) {
    CAPTURE(name);
    CHECK(fs::exists(dir / name));
    CHECK(r.out.find(name) != std::string::npos);
  }
  CHECK(slurp(dir / "fig3_legendre_table.csv").find("7,1 1 -1 1 -1 -1,4\n") != std::string::npos);
  fs::remove_all(dir);
}
