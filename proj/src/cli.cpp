#include "sqmodp/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "sqmodp/genseq.hpp"
#include "sqmodp/modarith.hpp"
#include "sqmodp/permstats.hpp"
#include "sqmodp/primroots.hpp"
#include "sqmodp/report.hpp"
#include "sqmodp/runstats.hpp"
#include "sqmodp/simulation.hpp"

#ifndef SQMODP_VERSION
#define SQMODP_VERSION "0.0.0"
#endif

namespace sqmodp::cli {

namespace {

using json = nlohmann::ordered_json;
using report::Table;

constexpr u64 kDefaultScanCount = 200;

/// Bad flag combinations that CLI11 cannot express.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Options {
  u64 p = 0;
  u64 g = 0;
  u64 a = 0;
  u64 m = 0;
  u64 scan = 0;
  u64 p_max = 0;
  u64 iterations = kDefaultIterations;
  u64 seed = kDefaultSeed;
  u64 block_size = kDefaultBlockSize;
  unsigned workers = 1;
  u64 pvalue_batches = 0;
  int precision = 6;
  std::string method = "euler";
  std::string format = "csv";
  std::string out;
  std::string config;

  [[nodiscard]] SimConfig sim() const {
    SimConfig c;
    c.seed = seed;
    c.iterations = iterations;
    c.block_size = block_size;
    c.workers = workers;
    return c;
  }
};

/// What a subcommand produced, before rendering.
struct Output {
  Table table;
  json inputs = json::object();
  json outputs = json::object();
  std::optional<SimReport> histogram;
  std::string figure_title;
  std::vector<report::ScatterPoint> scatter;
  std::string scatter_x, scatter_y;
  std::optional<SimConfig> seeded;
};

std::string str(u64 v) { return std::to_string(v); }

// ---------------------------------------------------------------------------
// Subcommands

Output cmd_legendre(const Options& o) {
  const OddPrime p(o.p);
  if (o.method != "euler" && o.method != "reciprocity") {
    throw UsageError("--method must be 'euler' or 'reciprocity'");
  }
  const auto symbol = o.method == "euler" ? legendre_euler : legendre_reciprocity;
  Output r;
  r.table.header = {"a", "symbol"};
  json symbols = json::array();
  u64 residues = 0;
  for (u64 a = 1; a < p.value(); ++a) {
    const int s = to_int(symbol(static_cast<i64>(a), p));
    residues += s == 1;
    r.table.rows.push_back({str(a), std::to_string(s)});
    symbols.push_back(s);
  }
  r.table.footer = {"p=" + str(p), "method=" + o.method, "residues=" + str(residues)};
  r.inputs = {{"p", p.value()}, {"method", o.method}};
  r.outputs = {{"symbols", symbols}, {"residues", residues}};
  return r;
}

Output cmd_primroots(const Options& o) {
  const OddPrime p(o.p);
  const auto roots = primitive_roots(p);
  std::map<u64, u64> inverse;
  for (const auto& [g, h] : inverse_pairs(p)) {
    inverse[g] = h;
    inverse[h] = g;
  }
  Output r;
  r.table.header = {"g", "inverse"};
  json list = json::array();
  for (u64 g : roots.roots) {
    r.table.rows.push_back({str(g), str(inverse.at(g))});
    list.push_back({{"g", g}, {"inverse", inverse.at(g)}});
  }
  const u64 phi = euler_phi(p.value() - 1);
  r.table.footer = {"p=" + str(p), "count=" + str(roots.roots.size()), "phi(p-1)=" + str(phi)};
  r.inputs = {{"p", p.value()}};
  r.outputs = {{"roots", list}, {"count", roots.roots.size()}, {"phi_p_minus_1", phi}};
  return r;
}

Output cmd_cycle(const Options& o) {
  const OddPrime p(o.p);
  const auto cycle = generator_cycle(o.g, p);
  const u64 inv = count_inversions(cycle.states);
  Output r;
  r.table.header = {"index", "state"};
  for (std::size_t i = 0; i < cycle.states.size(); ++i) {
    r.table.rows.push_back({str(i), str(cycle.states[i])});
  }
  r.table.footer = {"p=" + str(p), "g=" + str(o.g), "period=" + str(cycle.period),
                    "inversions=" + str(inv)};
  r.inputs = {{"p", p.value()}, {"g", o.g}};
  r.outputs = {{"states", cycle.states}, {"period", cycle.period}, {"inversions", inv}};
  return r;
}

Output cmd_squares(const Options& o) {
  const OddPrime p(o.p);
  Output r;
  r.inputs = {{"p", p.value()}};
  if (o.g != 0) {
    const auto sq = square_cycle(o.g, p);
    r.table.header = {"index", "state"};
    for (std::size_t i = 0; i < sq.states.size(); ++i) {
      r.table.rows.push_back({str(i), str(sq.states[i])});
    }
    r.table.footer = {"p=" + str(p), "g=" + str(o.g), "period=" + str(sq.states.size())};
    r.inputs["g"] = o.g;
    r.outputs = {{"states", sq.states}, {"period", sq.states.size()}};
  } else {
    const auto set = squares_set(p);
    r.table.header = {"residue"};
    for (u64 x : set) r.table.rows.push_back({str(x)});
    r.table.footer = {"p=" + str(p), "count=" + str(set.size())};
    r.outputs = {{"squares", set}, {"count", set.size()}};
  }
  return r;
}

Output cmd_period(const Options& o) {
  const auto orbit = lcg_orbit(o.a, o.m);
  Output r;
  r.table.header = {"index", "state"};
  for (std::size_t i = 0; i < orbit.states.size(); ++i) {
    r.table.rows.push_back({str(i), str(orbit.states[i])});
  }
  const bool prime = is_prime(o.m);
  const bool full = prime && orbit.period == o.m - 1;
  r.table.footer = {"m=" + str(o.m), "a=" + str(o.a), "period=" + str(orbit.period),
                    std::string("full_period=") + (full ? "true" : "false")};
  r.inputs = {{"m", o.m}, {"a", o.a}};
  r.outputs = {{"states", orbit.states}, {"period", orbit.period}, {"full_period", full}};
  return r;
}

Output cmd_inversions(const Options& o) {
  const OddPrime p(o.p);
  const auto s = inversion_summary(p);
  Output r;
  r.table.header = {"g", "inversions"};
  json per_root = json::array();
  for (const auto& [g, inv] : s.per_root) {
    r.table.rows.push_back({str(g), str(inv)});
    per_root.push_back({{"g", g}, {"inversions", inv}});
  }
  const int prec = o.precision;
  r.table.footer = {
      "p=" + str(p),
      "sample_mean=" + report::format_rational(s.sample_mean, prec),
      "sample_sd=" + report::format_decimal(s.sample_sd, prec),
      "theory_mean=" + report::format_rational(s.theory.mean, prec),
      "theory_variance=" + report::format_rational(s.theory.variance, prec),
      "theory_sd=" + report::format_decimal(s.theory.sd(), prec),
  };
  r.inputs = {{"p", p.value()}};
  r.outputs = {{"per_root", per_root},
               {"sample_mean", to_string(s.sample_mean)},
               {"sample_sd", s.sample_sd},
               {"theory_mean", to_string(s.theory.mean)},
               {"theory_variance", to_string(s.theory.variance)},
               {"theory_sd", s.theory.sd()}};
  if (o.pvalue_batches > 0) {
    auto cfg = o.sim();
    cfg.iterations = o.pvalue_batches;
    const double pv = sd_pvalue(p, s.sample_sd, s.per_root.size(), cfg);
    r.table.footer.push_back("sd_pvalue=" + report::format_decimal(pv, prec));
    r.table.footer.push_back("pvalue_batches=" + str(cfg.iterations));
    r.table.footer.push_back("seed=" + str(cfg.seed));
    r.inputs["pvalue_batches"] = cfg.iterations;
    r.outputs["sd_pvalue"] = pv;
    r.seeded = cfg;
  }
  return r;
}

Output histogram_output(SimReport rep, std::string title, const Options& o,
                        const std::vector<std::string>& theory_lines) {
  Output r;
  r.table.header = {"value", "count"};
  json hist = json::array();
  for (const auto& [v, c] : rep.histogram) {
    r.table.rows.push_back({str(v), str(c)});
    hist.push_back({v, c});
  }
  r.table.footer = {"p=" + str(rep.p),
                    "iterations=" + str(rep.config.iterations),
                    "seed=" + str(rep.config.seed),
                    "block_size=" + str(rep.config.block_size),
                    "rng=" + rep.config.rng_algorithm,
                    "sample_mean=" + report::format_decimal(rep.sample_mean, o.precision),
                    "sample_sd=" + report::format_decimal(rep.sample_sd, o.precision)};
  r.table.footer.insert(r.table.footer.end(), theory_lines.begin(), theory_lines.end());
  r.inputs = {{"p", rep.p}, {"iterations", rep.config.iterations}, {"seed", rep.config.seed}};
  r.outputs = {{"statistic", rep.statistic},
               {"histogram", hist},
               {"sample_mean", rep.sample_mean},
               {"sample_sd", rep.sample_sd}};
  r.seeded = rep.config;
  r.figure_title = std::move(title);
  r.histogram = std::move(rep);
  return r;
}

Output cmd_sim_inversions(const Options& o) {
  const OddPrime p(o.p);
  const auto theory = inversion_null_moments(p);
  auto rep = simulate_inversions(p, o.sim());
  return histogram_output(
      std::move(rep), "Inversions of random fixed cycles, p = " + str(p), o,
      {"theory_mean=" + report::format_rational(theory.mean, o.precision),
       "theory_sd=" + report::format_decimal(theory.sd(), o.precision)});
}

Output cmd_sim_runs(const Options& o) {
  const OddPrime p(o.p);
  const u64 half = (p.value() - 1) / 2;
  const auto theory = runs_null_moments(half, half);
  auto rep = simulate_runs(p, o.sim());
  return histogram_output(
      std::move(rep), "Runs of random balanced sign sequences, p = " + str(p), o,
      {"theory_mean=" + report::format_rational(theory.mean, o.precision),
       "theory_variance=" + report::format_rational(theory.variance, o.precision)});
}

Output scan_output(const Options& o) {
  if (o.scan != 0 && o.p_max != 0) throw UsageError("give either --scan or --p-max, not both");
  const RunsScan scan = o.p_max != 0 ? scan_runs_upto(o.p_max)
                                     : scan_runs_first(o.scan != 0 ? o.scan : kDefaultScanCount);
  Output r;
  r.table.header = {"p", "runs", "predicted", "pairs_match"};
  json rows = json::array();
  u64 mismatches = 0;
  for (const auto& row : scan.rows) {
    const OddPrime p(row.p);
    const u64 predicted = (row.p + 1) / 2;
    const bool pairs_ok = pair_counts(legendre_sequence(p).symbols) == aladov_predicted(p);
    mismatches += (row.runs != predicted) + !pairs_ok;
    r.table.rows.push_back({str(row.p), str(row.runs), str(predicted), pairs_ok ? "true" : "false"});
    rows.push_back({{"p", row.p}, {"runs", row.runs}, {"predicted", predicted}, {"pairs_match", pairs_ok}});
    r.scatter.push_back({static_cast<double>(row.p), static_cast<double>(row.runs)});
  }
  r.table.footer = {"primes=" + str(scan.rows.size()), "mismatches=" + str(mismatches)};
  if (o.p_max != 0) {
    r.inputs = {{"p_max", o.p_max}};
  } else {
    r.inputs = {{"scan", o.scan != 0 ? o.scan : kDefaultScanCount}};
  }
  r.outputs = {{"rows", rows}, {"mismatches", mismatches}};
  r.figure_title = "Runs of the Legendre sequence versus p";
  r.scatter_x = "p";
  r.scatter_y = "number of runs";
  return r;
}

Output cmd_runs(const Options& o) {
  if (o.p == 0) return scan_output(o);
  if (o.scan != 0 || o.p_max != 0) throw UsageError("--p cannot be combined with --scan/--p-max");
  const OddPrime p(o.p);
  const auto seq = legendre_sequence(p);
  const u64 runs = count_runs(seq.symbols);
  Output r;
  r.table.header = {"p", "runs", "predicted"};
  r.table.rows.push_back({str(p), str(runs), str((p.value() + 1) / 2)});
  r.inputs = {{"p", p.value()}};
  r.outputs = {{"runs", runs}, {"predicted", (p.value() + 1) / 2}};
  return r;
}

Output cmd_pairs(const Options& o) {
  const OddPrime p(o.p);
  const auto observed = pair_counts(legendre_sequence(p).symbols);
  const auto predicted = aladov_predicted(p);
  const auto row = [](const char* name, const PairCounts& c) {
    return std::vector<std::string>{name, str(c.npp), str(c.npm), str(c.nmp), str(c.nmm)};
  };
  const auto obj = [](const PairCounts& c) {
    return json{{"npp", c.npp}, {"npm", c.npm}, {"nmp", c.nmp}, {"nmm", c.nmm}};
  };
  Output r;
  r.table.header = {"source", "npp", "npm", "nmp", "nmm"};
  r.table.rows = {row("observed", observed), row("predicted", predicted)};
  const bool match = observed == predicted;
  r.table.footer = {"p=" + str(p), "p_mod_4=" + str(p.value() % 4),
                    std::string("match=") + (match ? "true" : "false")};
  r.inputs = {{"p", p.value()}};
  r.outputs = {{"observed", obj(observed)}, {"predicted", obj(predicted)}, {"match", match}};
  return r;
}

Output cmd_dlog(const Options& o) {
  const OddPrime p(o.p);
  const u64 l = discrete_log(o.g, o.a, p);
  Output r;
  r.table.header = {"p", "g", "a", "log"};
  r.table.rows.push_back({str(p), str(o.g), str(o.a), str(l)});
  r.inputs = {{"p", p.value()}, {"g", o.g}, {"a", o.a}};
  r.outputs = {{"log", l}};
  return r;
}

Output cmd_sqrt(const Options& o) {
  const OddPrime p(o.p);
  const u64 g = o.g != 0 ? o.g : smallest_primitive_root(p);
  const auto root = sqrt_mod(o.a, p, g);
  Output r;
  r.table.header = {"p", "a", "g", "root"};
  r.table.rows.push_back({str(p), str(o.a), str(g), root ? str(*root) : "none"});
  r.inputs = {{"p", p.value()}, {"a", o.a}, {"g", g}};
  r.outputs = {{"root", root ? json(*root) : json(nullptr)}};
  return r;
}

// ---------------------------------------------------------------------------
// Rendering

std::string render(const Output& r, const std::string& command, const Options& o) {
  if (o.format == "csv") return report::emit_csv(r.table);
  if (o.format == "json") {
    json provenance = {{"version", SQMODP_VERSION}};
    if (r.seeded) {
      provenance["seed"] = r.seeded->seed;
      provenance["rng_algorithm"] = r.seeded->rng_algorithm;
      provenance["block_size"] = r.seeded->block_size;
    }
    json doc = {{"command", command},
                {"inputs", r.inputs},
                {"outputs", r.outputs},
                {"provenance", provenance}};
    return doc.dump(2) + "\n";
  }
  if (r.histogram) return report::emit_svg_histogram(*r.histogram, r.figure_title);
  if (!r.scatter.empty()) {
    return report::emit_svg_scatter(r.scatter, r.figure_title, r.scatter_x, r.scatter_y);
  }
  throw UsageError("--format svg is only available for sim-inversions, sim-runs, scan and runs --scan");
}

void write_file(const std::filesystem::path& path, const std::string& bytes) {
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) throw UsageError("cannot open '" + path.string() + "' for writing");
  f << bytes;
  if (!f) throw UsageError("failed writing '" + path.string() + "'");
}

// Regenerates every table and figure dataset into a directory.
int cmd_repro(const Options& o, std::ostream& out) {
  const std::filesystem::path dir = o.out.empty() ? "repro" : o.out;
  Options base = o;
  base.format = "csv";
  base.out.clear();

  std::vector<std::pair<std::string, std::string>> files;
  std::vector<std::vector<std::string>> manifest;
  const auto add = [&](const std::string& name, const std::string& what, const Output& r,
                       const std::string& command, const Options& opt) {
    files.emplace_back(name, render(r, command, opt));
    manifest.push_back({name, what});
  };

  Options orbit = base;
  orbit.m = 8191;
  orbit.a = 1904;
  add("orbit_m8191_a1904.csv", "short orbit of 1904 modulo 8191", cmd_period(orbit), "period", orbit);

  for (u64 p : {11, 29}) {
    Options pr = base;
    pr.p = p;
    add("primroots_p" + str(p) + ".csv", "primitive roots of " + str(p), cmd_primroots(pr),
        "primroots", pr);
  }
  for (u64 g : {2, 15}) {
    Options cy = base;
    cy.p = 29;
    cy.g = g;
    add("cycle_p29_g" + str(g) + ".csv", "cycle of " + str(g) + " modulo 29", cmd_cycle(cy), "cycle", cy);
  }
  Options sq = base;
  sq.p = 8191;
  sq.a = 2;
  add("sqrt_p8191_a2.csv", "square root of 2 modulo 8191", cmd_sqrt(sq), "sqrt", sq);

  Options inv = base;
  inv.p = 29;
  add("inversions_p29.csv", "inversion counts of the 12 cycles modulo 29", cmd_inversions(inv),
      "inversions", inv);

  Options f1 = base;
  f1.p = 29;
  const Output fig1 = cmd_sim_inversions(f1);
  add("fig1_sim_inversions_p29.csv", "simulated inversions, p = 29", fig1, "sim-inversions", f1);
  f1.format = "svg";
  add("fig1_sim_inversions_p29.svg", "histogram of simulated inversions", fig1, "sim-inversions", f1);

  Options f2 = base;
  f2.p = 97;
  const Output fig2 = cmd_sim_runs(f2);
  add("fig2_sim_runs_p97.csv", "simulated runs, p = 97", fig2, "sim-runs", f2);
  f2.format = "svg";
  add("fig2_sim_runs_p97.svg", "histogram of simulated runs", fig2, "sim-runs", f2);

  Table fig3;
  fig3.header = {"p", "symbols", "runs"};
  for (u64 p : first_odd_primes(7)) {
    const auto seq = legendre_sequence(OddPrime(p));
    std::string syms;
    for (Sign s : seq.symbols) syms += (syms.empty() ? "" : " ") + std::to_string(s);
    fig3.rows.push_back({str(p), syms, str(count_runs(seq.symbols))});
  }
  files.emplace_back("fig3_legendre_table.csv", report::emit_csv(fig3));
  manifest.push_back({"fig3_legendre_table.csv", "Legendre sequences of the first seven odd primes"});

  Options f4 = base;
  f4.scan = kDefaultScanCount;
  f4.p_max = 0;
  const Output fig4 = scan_output(f4);
  add("fig4_runs_scan.csv", "runs versus p, first 200 odd primes", fig4, "scan", f4);
  f4.format = "svg";
  add("fig4_runs_scan.svg", "scatter of runs versus p", fig4, "scan", f4);

  std::filesystem::create_directories(dir);
  for (const auto& [name, bytes] : files) write_file(dir / name, bytes);

  Table t;
  t.header = {"file", "contents"};
  t.rows = manifest;
  t.footer = {"directory=" + dir.string(), "seed=" + str(o.seed), "iterations=" + str(o.iterations)};
  out << report::emit_csv(t);
  return kSuccess;
}

// ---------------------------------------------------------------------------
// Config file: key=value lines, '#' comments. Flags given on the command
// line win over config values.

const std::set<std::string> kConfigKeys = {"iterations", "seed",   "workers",  "block-size",
                                           "scan",       "p-max",  "precision", "format"};

void apply_config(const std::string& path, CLI::App& sub) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read config file '" + path + "'");
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    const auto trim = [](std::string s) {
      const auto b = s.find_first_not_of(" \t\r");
      const auto e = s.find_last_not_of(" \t\r");
      return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
    };
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw UsageError(path + ":" + std::to_string(lineno) + ": expected key=value");
    }
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (!kConfigKeys.contains(key)) {
      throw UsageError(path + ":" + std::to_string(lineno) + ": unknown key '" + key + "'");
    }
    CLI::Option* opt = sub.get_option_no_throw("--" + key);
    if (opt == nullptr || opt->count() != 0) continue;
    opt->add_result(value);
    opt->run_callback();
  }
}

}  // namespace

int run_command(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Squares modulo p: residues, primitive-root cycles, inversion and runs statistics"};
  app.name(argv.empty() ? "sqmodp" : argv.front());
  app.require_subcommand(1);
  app.set_version_flag("--version", SQMODP_VERSION);

  const auto add_io = [&o](CLI::App* sub, bool figure) {
    auto* f = sub->add_option("--format", o.format, "Output format")->capture_default_str();
    f->check(CLI::IsMember(figure ? std::vector<std::string>{"csv", "json", "svg"}
                                  : std::vector<std::string>{"csv", "json"}));
    sub->add_option("--out", o.out, "Write output to this file instead of stdout");
    sub->add_option("--precision", o.precision, "Digits after the decimal point")
        ->capture_default_str()
        ->check(CLI::Range(0, 17));
    sub->add_option("--config", o.config, "key=value defaults file")->check(CLI::ExistingFile);
  };
  const auto add_sim = [&o](CLI::App* sub) {
    sub->add_option("--iterations", o.iterations, "Monte Carlo draws")
        ->capture_default_str()
        ->check(CLI::PositiveNumber);
    sub->add_option("--seed", o.seed, "64-bit seed")->capture_default_str();
    sub->add_option("--workers", o.workers, "Threads (results do not depend on this)")
        ->capture_default_str()
        ->check(CLI::Range(1u, 256u));
    sub->add_option("--block-size", o.block_size, "Draws per independently seeded block")
        ->capture_default_str()
        ->check(CLI::PositiveNumber);
  };
  const auto req_p = [&o](CLI::App* sub) { sub->add_option("--p", o.p, "Odd prime modulus")->required(); };

  std::map<CLI::App*, std::function<Output(const Options&)>> handlers;

  auto* legendre = app.add_subcommand("legendre", "Legendre symbols (a/p) for a = 1..p-1");
  req_p(legendre);
  legendre->add_option("--method", o.method, "euler or reciprocity")->capture_default_str();
  add_io(legendre, false);
  handlers[legendre] = cmd_legendre;

  auto* primroots = app.add_subcommand("primroots", "Primitive roots of p with their inverses");
  req_p(primroots);
  add_io(primroots, false);
  handlers[primroots] = cmd_primroots;

  auto* cycle = app.add_subcommand("cycle", "The (p-1)-cycle 1, g, g^2, ... of a primitive root");
  req_p(cycle);
  cycle->add_option("--g", o.g, "Primitive root")->required();
  add_io(cycle, false);
  handlers[cycle] = cmd_cycle;

  auto* squares = app.add_subcommand("squares", "Quadratic residues (brute force, or generated by g^2)");
  req_p(squares);
  squares->add_option("--g", o.g, "Primitive root; generate the squares by x -> g^2 x");
  add_io(squares, false);
  handlers[squares] = cmd_squares;

  auto* period = app.add_subcommand("period", "Orbit and period of x -> a x (mod m) from x = 1");
  period->add_option("--m", o.m, "Modulus")->required();
  period->add_option("--a", o.a, "Multiplier")->required();
  add_io(period, false);
  handlers[period] = cmd_period;

  auto* inversions = app.add_subcommand("inversions", "Inversion counts of every primitive-root cycle");
  req_p(inversions);
  inversions->add_option("--pvalue-batches", o.pvalue_batches,
                         "Also estimate the p-value of the observed sd from this many simulated batches");
  add_sim(inversions);
  add_io(inversions, false);
  handlers[inversions] = cmd_inversions;

  auto* sim_inv = app.add_subcommand("sim-inversions", "Inversions of random fixed cycles (histogram)");
  req_p(sim_inv);
  add_sim(sim_inv);
  add_io(sim_inv, true);
  handlers[sim_inv] = cmd_sim_inversions;

  auto* runs = app.add_subcommand("runs", "Runs of the Legendre sequence of p, or a scan over primes");
  runs->add_option("--p", o.p, "Odd prime");
  runs->add_option("--scan", o.scan, "First N odd primes");
  runs->add_option("--p-max", o.p_max, "All odd primes up to this bound");
  add_io(runs, true);
  handlers[runs] = cmd_runs;

  auto* pairs = app.add_subcommand("pairs", "Overlapping pair counts against the mod-4 prediction");
  req_p(pairs);
  add_io(pairs, false);
  handlers[pairs] = cmd_pairs;

  auto* sim_runs = app.add_subcommand("sim-runs", "Runs of random balanced sign sequences (histogram)");
  req_p(sim_runs);
  add_sim(sim_runs);
  add_io(sim_runs, true);
  handlers[sim_runs] = cmd_sim_runs;

  auto* scan = app.add_subcommand("scan", "Runs and pair-count check over a range of odd primes");
  scan->add_option("--scan", o.scan, "First N odd primes (default 200)");
  scan->add_option("--p-max", o.p_max, "All odd primes up to this bound");
  add_io(scan, true);
  handlers[scan] = scan_output;

  auto* dlog = app.add_subcommand("dlog", "Brute-force discrete logarithm of a to base g");
  req_p(dlog);
  dlog->add_option("--g", o.g, "Primitive root")->required();
  dlog->add_option("--a", o.a, "Target residue")->required();
  add_io(dlog, false);
  handlers[dlog] = cmd_dlog;

  auto* sqrt_cmd = app.add_subcommand("sqrt", "Smaller square root of a modulo p via discrete log");
  req_p(sqrt_cmd);
  sqrt_cmd->add_option("--a", o.a, "Residue")->required();
  sqrt_cmd->add_option("--g", o.g, "Primitive root (default: smallest)");
  add_io(sqrt_cmd, false);
  handlers[sqrt_cmd] = cmd_sqrt;

  auto* repro = app.add_subcommand("repro", "Regenerate every table and figure dataset into --out DIR");
  repro->add_option("--out", o.out, "Output directory (default ./repro)");
  add_sim(repro);
  repro->add_option("--config", o.config, "key=value defaults file")->check(CLI::ExistingFile);

  try {
    std::vector<std::string> args(argv.begin() + (argv.empty() ? 0 : 1), argv.end());
    std::reverse(args.begin(), args.end());
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kInvalidArguments;
  }

  CLI::App* sub = app.get_subcommands().front();
  try {
    if (!o.config.empty()) apply_config(o.config, *sub);
    if (sub == repro) return cmd_repro(o, out);

    const Output result = handlers.at(sub)(o);
    const std::string bytes = render(result, sub->get_name(), o);
    if (o.out.empty()) {
      out << bytes;
    } else {
      write_file(o.out, bytes);
    }
    return kSuccess;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kInvalidArguments;
  } catch (const CLI::Error& e) {
    err << "error: " << e.what() << '\n';
    return kInvalidArguments;
  } catch (const DomainError& e) {
    err << "domain error: " << e.what() << '\n';
    return kDomainError;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kInternalError;
  }
}

}  // namespace sqmodp::cli
