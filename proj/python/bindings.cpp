#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <vector>

#include "sqmodp/genseq.hpp"
#include "sqmodp/modarith.hpp"
#include "sqmodp/permstats.hpp"
#include "sqmodp/primroots.hpp"
#include "sqmodp/runstats.hpp"
#include "sqmodp/simulation.hpp"

namespace py = pybind11;
using namespace sqmodp;

namespace {

py::object fraction(const Rational& r) {
  static py::object cls = py::module_::import("fractions").attr("Fraction");
  return cls(r.num, r.den);
}

SimConfig make_config(u64 iterations, u64 seed, u64 block_size, unsigned workers) {
  SimConfig c;
  c.iterations = iterations;
  c.seed = seed;
  c.block_size = block_size;
  c.workers = workers;
  return c;
}

std::vector<int> signs(const std::vector<Sign>& s) { return {s.begin(), s.end()}; }

std::vector<Sign> to_signs(const std::vector<int>& v) {
  std::vector<Sign> out;
  out.reserve(v.size());
  for (int x : v) {
    if (x != 1 && x != -1) throw DomainError("sign sequences may only hold +1 and -1");
    out.push_back(static_cast<Sign>(x));
  }
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Squares modulo p: residue arithmetic, primitive roots, inversion and runs statistics.";
  m.attr("__version__") = SQMODP_VERSION;

  py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);

  // modarith
  m.def("is_prime", &is_prime, py::arg("n"));
  m.def("mul_mod", &mul_mod, py::arg("a"), py::arg("b"), py::arg("m"));
  m.def("pow_mod", &pow_mod, py::arg("base"), py::arg("exp"), py::arg("m"));
  m.def("legendre_euler", [](i64 a, u64 p) { return to_int(legendre_euler(a, OddPrime(p))); },
        py::arg("a"), py::arg("p"));
  m.def("legendre_reciprocity",
        [](i64 a, u64 p) { return to_int(legendre_reciprocity(a, OddPrime(p))); }, py::arg("a"),
        py::arg("p"));
  m.def("residue_rule", [](i64 a, u64 p) { return to_int(residue_rule(a, OddPrime(p))); },
        py::arg("a"), py::arg("p"));
  m.def("discrete_log", [](u64 g, u64 a, u64 p) { return discrete_log(g, a, OddPrime(p)); },
        py::arg("g"), py::arg("a"), py::arg("p"));
  m.def(
      "sqrt_mod",
      [](u64 a, u64 p, std::optional<u64> g) {
        const OddPrime op(p);
        return sqrt_mod(a, op, g ? *g : smallest_primitive_root(op));
      },
      py::arg("a"), py::arg("p"), py::arg("g") = py::none(),
      "Smaller square root of a mod p, or None for a non-residue.");

  // primroots
  m.def(
      "factorize",
      [](u64 n) {
        std::vector<std::pair<u64, unsigned>> out;
        for (const auto& pp : factorize(n)) out.emplace_back(pp.prime, pp.exponent);
        return out;
      },
      py::arg("n"));
  m.def("euler_phi", &euler_phi, py::arg("n"));
  m.def("is_primitive_root", [](u64 g, u64 p) { return is_primitive_root(g, OddPrime(p)); },
        py::arg("g"), py::arg("p"));
  m.def("primitive_roots", [](u64 p) { return primitive_roots(OddPrime(p)).roots; }, py::arg("p"));
  m.def("inverse_pairs", [](u64 p) { return inverse_pairs(OddPrime(p)); }, py::arg("p"));

  // genseq
  py::class_<GeneratorCycle>(m, "GeneratorCycle")
      .def_readonly("modulus", &GeneratorCycle::modulus)
      .def_readonly("multiplier", &GeneratorCycle::multiplier)
      .def_readonly("states", &GeneratorCycle::states)
      .def_readonly("period", &GeneratorCycle::period);
  m.def("lcg_orbit", &lcg_orbit, py::arg("a"), py::arg("m"));
  m.def("generator_cycle", [](u64 g, u64 p) { return generator_cycle(g, OddPrime(p)); },
        py::arg("g"), py::arg("p"));
  m.def("square_cycle", [](u64 g, u64 p) { return square_cycle(g, OddPrime(p)).states; },
        py::arg("g"), py::arg("p"));
  m.def("squares_set", [](u64 p) { return squares_set(OddPrime(p)); }, py::arg("p"));

  // permstats
  py::class_<NullMoments>(m, "NullMoments")
      .def_property_readonly("mean", [](const NullMoments& n) { return fraction(n.mean); })
      .def_property_readonly("variance", [](const NullMoments& n) { return fraction(n.variance); })
      .def_property_readonly("sd", &NullMoments::sd);
  py::class_<InversionSummary>(m, "InversionSummary")
      .def_property_readonly("p", [](const InversionSummary& s) { return s.p.value(); })
      .def_readonly("per_root", &InversionSummary::per_root)
      .def_property_readonly("sample_mean",
                             [](const InversionSummary& s) { return fraction(s.sample_mean); })
      .def_readonly("sample_sd", &InversionSummary::sample_sd)
      .def_readonly("theory", &InversionSummary::theory);
  py::class_<SimReport>(m, "SimReport")
      .def_readonly("statistic", &SimReport::statistic)
      .def_readonly("p", &SimReport::p)
      .def_readonly("histogram", &SimReport::histogram)
      .def_readonly("sample_mean", &SimReport::sample_mean)
      .def_readonly("sample_sd", &SimReport::sample_sd)
      .def_property_readonly("seed", [](const SimReport& r) { return r.config.seed; })
      .def_property_readonly("iterations", [](const SimReport& r) { return r.config.iterations; })
      .def_property_readonly("block_size", [](const SimReport& r) { return r.config.block_size; })
      .def_property_readonly("rng_algorithm",
                             [](const SimReport& r) { return r.config.rng_algorithm; });

  m.def("count_inversions", [](const std::vector<u64>& seq) { return count_inversions(seq); },
        py::arg("seq"));
  m.def("inversion_null_moments", [](u64 p) { return inversion_null_moments(OddPrime(p)); },
        py::arg("p"));
  m.def("inversion_summary", [](u64 p) { return inversion_summary(OddPrime(p)); }, py::arg("p"));
  m.def(
      "random_fixed_cycle",
      [](u64 p, u64 seed, u64 stream) {
        Rng rng(seed, stream);
        return random_fixed_cycle(OddPrime(p), rng);
      },
      py::arg("p"), py::arg("seed") = kDefaultSeed, py::arg("stream") = 0);
  m.def(
      "simulate_inversions",
      [](u64 p, u64 iterations, u64 seed, u64 block_size, unsigned workers) {
        const OddPrime op(p);
        py::gil_scoped_release release;
        return simulate_inversions(op, make_config(iterations, seed, block_size, workers));
      },
      py::arg("p"), py::arg("iterations") = kDefaultIterations, py::arg("seed") = kDefaultSeed,
      py::arg("block_size") = kDefaultBlockSize, py::arg("workers") = 1);
  m.def(
      "sd_pvalue",
      [](u64 p, u64 batches, u64 seed, u64 block_size, unsigned workers) {
        const OddPrime op(p);
        py::gil_scoped_release release;
        return sd_pvalue(op, make_config(batches, seed, block_size, workers));
      },
      py::arg("p"), py::arg("batches") = 1000, py::arg("seed") = kDefaultSeed,
      py::arg("block_size") = kDefaultBlockSize, py::arg("workers") = 1);

  // runstats
  py::class_<PairCounts>(m, "PairCounts")
      .def(py::init<>())
      .def_readonly("npp", &PairCounts::npp)
      .def_readonly("npm", &PairCounts::npm)
      .def_readonly("nmp", &PairCounts::nmp)
      .def_readonly("nmm", &PairCounts::nmm)
      .def("total", &PairCounts::total)
      .def("__eq__", [](const PairCounts& a, const PairCounts& b) { return a == b; })
      .def("__repr__", [](const PairCounts& c) {
        return "PairCounts(npp=" + std::to_string(c.npp) + ", npm=" + std::to_string(c.npm) +
               ", nmp=" + std::to_string(c.nmp) + ", nmm=" + std::to_string(c.nmm) + ")";
      });
  m.def("legendre_sequence", [](u64 p) { return signs(legendre_sequence(OddPrime(p)).symbols); },
        py::arg("p"));
  m.def("count_runs", [](const std::vector<int>& s) { return count_runs(to_signs(s)); },
        py::arg("seq"));
  m.def("pair_counts", [](const std::vector<int>& s) { return pair_counts(to_signs(s)); },
        py::arg("seq"));
  m.def("aladov_predicted", [](u64 p) { return aladov_predicted(OddPrime(p)); }, py::arg("p"));
  m.def(
      "runs_null_moments",
      [](u64 n_plus, u64 n_minus) {
        const auto mo = runs_null_moments(n_plus, n_minus);
        return py::make_tuple(fraction(mo.mean), fraction(mo.variance));
      },
      py::arg("n_plus"), py::arg("n_minus"));
  m.def(
      "simulate_runs",
      [](u64 p, u64 iterations, u64 seed, u64 block_size, unsigned workers) {
        const OddPrime op(p);
        py::gil_scoped_release release;
        return simulate_runs(op, make_config(iterations, seed, block_size, workers));
      },
      py::arg("p"), py::arg("iterations") = kDefaultIterations, py::arg("seed") = kDefaultSeed,
      py::arg("block_size") = kDefaultBlockSize, py::arg("workers") = 1);
  m.def(
      "scan_runs",
      [](std::optional<u64> count, std::optional<u64> p_max) {
        if (count.has_value() == p_max.has_value()) {
          throw DomainError("pass exactly one of count= or p_max=");
        }
        const RunsScan scan = count ? scan_runs_first(*count) : scan_runs_upto(*p_max);
        std::vector<std::pair<u64, u64>> rows;
        for (const auto& r : scan.rows) rows.emplace_back(r.p, r.runs);
        return rows;
      },
      py::arg("count") = py::none(), py::arg("p_max") = py::none());
}
