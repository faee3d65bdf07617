#include <pybind11/eigen.h>
#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "entcorr/bounds.hpp"
#include "entcorr/correlations.hpp"
#include "entcorr/entropy.hpp"
#include "entcorr/error.hpp"
#include "entcorr/experiments.hpp"
#include "entcorr/measures.hpp"
#include "entcorr/report.hpp"
#include "entcorr/sampling.hpp"
#include "entcorr/state.hpp"

namespace py = pybind11;
using namespace pybind11::literals;
using namespace entcorr;

namespace {

// Spectra cross the boundary as plain lists; unsorted or unnormalized input goes
// through from_weights, exactly like the C++ callers that build from raw weights.
Spectrum to_spectrum(const std::vector<double>& weights) { return Spectrum::from_weights(weights); }

std::vector<double> from_spectrum(const Spectrum& p) { return {p.components().begin(), p.components().end()}; }

MonotoneKind to_kind(const std::string& name) {
  const auto kind = parse_monotone_kind(name);
  if (!kind) throw py::value_error("unknown monotone kind: " + name);
  return *kind;
}

DensityMatrix to_density(const ComplexMatrix& m) { return DensityMatrix(m); }

BipartiteSplit split_of(std::size_t d1, std::size_t d2) { return BipartiteSplit(d1, d2); }

RunConfig make_config(const std::string& kind, std::uint64_t seed, std::size_t samples, std::size_t dim_b,
                      std::size_t grid, double tolerance, std::size_t workers) {
  RunConfig c;
  c.kind = to_kind(kind);
  c.seed = seed;
  c.samples = samples;
  c.dim_b = dim_b;
  c.grid = grid;
  c.tolerance = tolerance;
  c.workers = workers;
  return c;
}

py::dict report_dict(const Report& r) {
  py::dict out;
  out["command"] = r.command;
  out["passed"] = r.passed;
  out["columns"] = r.columns;
  out["rows"] = r.rows;
  out["summary"] = py::module_::import("json").attr("loads")(r.summary.dump());
  return out;
}

}  // namespace

PYBIND11_MODULE(_entcorr, m) {
  m.doc() = "Entanglement bounds from correlation monotones";
  m.attr("__version__") = kVersion;

  py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
  py::register_exception<CapacityError>(m, "CapacityError", PyExc_ValueError);
  py::register_exception<ConfigError>(m, "ConfigError", PyExc_ValueError);

  // states
  m.def("spectrum", [](const ComplexMatrix& rho) { return from_spectrum(spectrum(to_density(rho))); }, "rho"_a);
  m.def("partial_trace",
        [](const ComplexMatrix& rho, std::size_t d1, std::size_t d2, bool keep_first) {
          return partial_trace(to_density(rho), split_of(d1, d2), keep_first ? Subsystem::first : Subsystem::second)
              .matrix();
        },
        "rho"_a, "d1"_a, "d2"_a, "keep_first"_a = true);
  m.def("schmidt",
        [](const ComplexVector& psi, std::size_t d1, std::size_t d2) {
          return from_spectrum(schmidt(PureState::normalized(psi), split_of(d1, d2)));
        },
        "psi"_a, "d1"_a, "d2"_a);
  m.def("purify_into",
        [](const ComplexMatrix& rho, std::size_t ancilla_dim) {
          return purify_into(to_density(rho), ancilla_dim).amplitudes();
        },
        "rho"_a, "ancilla_dim"_a);
  m.def("strictly_correlated_cc",
        [](const std::vector<double>& p, std::size_t da, std::size_t db) {
          return strictly_correlated_cc(to_spectrum(p), da, db).matrix();
        },
        "p"_a, "dA"_a, "dB"_a);
  m.def("max_ef_state", [](const std::vector<double>& p) { return max_ef_state(to_spectrum(p)).matrix(); }, "p"_a);
  m.def("haar_pure",
        [](std::size_t dim, std::uint64_t seed) {
          Rng rng(seed);
          return haar_pure(dim, rng).amplitudes();
        },
        "dim"_a, "seed"_a);
  m.def("shannon_entropy", [](const std::vector<double>& p) { return shannon_entropy(to_spectrum(p)); }, "p"_a);
  m.def("von_neumann_entropy", [](const ComplexMatrix& rho) { return von_neumann_entropy(to_density(rho)); },
        "rho"_a);

  // entanglement of two qubits
  m.def("concurrence", [](const ComplexMatrix& rho) { return concurrence(to_density(rho)); }, "rho"_a);
  m.def("entanglement_of_formation", [](const ComplexMatrix& rho) { return entanglement_of_formation(to_density(rho)); },
        "rho"_a);
  m.def("negativity",
        [](const ComplexMatrix& rho, std::size_t d1, std::size_t d2) {
          return negativity(to_density(rho), split_of(d1, d2));
        },
        "rho"_a, "d1"_a = 2, "d2"_a = 2);
  m.def("max_orbit_concurrence", [](const std::vector<double>& p) { return max_orbit_concurrence(to_spectrum(p)); },
        "p"_a);
  m.def("s22_ef", [](const std::vector<double>& p) { return s22_ef(to_spectrum(p)); }, "p"_a);
  m.def("max_ef_over_orbit",
        [](const std::vector<double>& p, std::uint64_t seed, int restarts, int iterations) {
          OrbitSearchOptions o;
          o.restarts = restarts;
          o.iterations = iterations;
          Rng rng(seed);
          return max_ef_over_spectrum_numeric(to_spectrum(p), o, rng);
        },
        "p"_a, "seed"_a = 1, "restarts"_a = 20, "iterations"_a = 2000);

  // correlations
  m.def("f_db", [](const std::vector<double>& p) { return f_db(to_spectrum(p)); }, "p"_a);
  m.def("f_dh", [](const std::vector<double>& p) { return f_dh(to_spectrum(p)); }, "p"_a);
  m.def("f_mi", [](const std::vector<double>& p) { return f_mi(to_spectrum(p)); }, "p"_a);
  m.def("c_max", [](const std::string& kind, std::size_t d) { return c_max(to_kind(kind), d); }, "kind"_a, "d"_a);
  m.def("mutual_information",
        [](const ComplexMatrix& rho, std::size_t d1, std::size_t d2) {
          return mutual_information(to_density(rho), split_of(d1, d2));
        },
        "rho"_a, "d1"_a, "d2"_a);
  m.def("c_on_pure",
        [](const ComplexVector& psi, std::size_t d1, std::size_t d2, const std::string& kind) {
          return c_on_pure(PureState::normalized(psi), split_of(d1, d2), to_kind(kind));
        },
        "psi"_a, "d1"_a, "d2"_a, "kind"_a);
  m.def("c_distance_numeric",
        [](const ComplexMatrix& rho, std::size_t d1, std::size_t d2, const std::string& kind, std::uint64_t seed) {
          Rng rng(seed);
          return c_distance_numeric(to_density(rho), split_of(d1, d2), to_kind(kind), AlternatingOptions{}, rng);
        },
        "rho"_a, "d1"_a, "d2"_a, "kind"_a, "seed"_a = 1);

  // bounds
  m.def("v", &v, "y"_a);
  m.def("u", &u, "y"_a);
  m.def("xi", [](const std::string& kind, double x) { return xi_ef(to_kind(kind), x); }, "kind"_a, "x"_a);
  m.def("zeta", [](const std::string& kind, double x) { return zeta_ef(to_kind(kind), x); }, "kind"_a, "x"_a);
  m.def("threshold", [](const std::string& kind) { return threshold(to_kind(kind)); }, "kind"_a);
  m.def("beta_deform", [](const std::vector<double>& p, double beta) {
    return from_spectrum(beta_deform(to_spectrum(p), beta));
  }, "p"_a, "beta"_a);
  m.def("g4_numeric",
        [](const std::string& kind, double x, int grid_resolution) {
          return g_d_numeric(to_kind(kind), 4, x, grid_resolution);
        },
        "kind"_a, "x"_a, "grid_resolution"_a = 200);

  // experiment drivers; each returns the same table the command-line tool writes
  const auto drivers = [&m](const char* name, auto run) {
    m.def(
        name,
        [run](const std::string& kind, std::uint64_t seed, std::size_t samples, std::size_t dim_b, std::size_t grid,
              double tolerance, std::size_t workers) {
          const RunConfig c = make_config(kind, seed, samples, dim_b, grid, tolerance, workers);
          Report r;
          {
            py::gil_scoped_release release;
            r = run(c);
          }
          return report_dict(r);
        },
        "kind"_a = "hellinger", "seed"_a = RunConfig{}.seed, "samples"_a = 1000, "dim_b"_a = 16, "grid"_a = 21,
        "tolerance"_a = 1e-9, "workers"_a = 1);
  };
  drivers("run_verify", [](const RunConfig& c) { return make_report(run_verify(c), c); });
  drivers("run_tightness", [](const RunConfig& c) { return make_report(run_tightness(c), c); });
  drivers("run_ccbound", [](const RunConfig& c) { return make_report(run_ccbound(c), c); });
  drivers("run_gd", [](const RunConfig& c) { return make_report(run_gd(c), c); });
}
