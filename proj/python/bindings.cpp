#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "hypergon/cli.hpp"
#include "hypergon/errors.hpp"
#include "hypergon/hyperbolic_core.hpp"
#include "hypergon/lemma_verifier.hpp"
#include "hypergon/partition_engine.hpp"
#include "hypergon/report_json.hpp"

namespace py = pybind11;
using namespace hypergon;

namespace {

// Reports cross the boundary as JSON text; the Python side decodes them.
std::string verify_json(const std::string& lemma, const std::map<std::string, double>& overrides,
                        const std::string& pieces, std::uint64_t seed) {
    const auto id = lemma_id_from_string(lemma);
    if (!id) {
        throw ParameterError("unknown lemma id '" + lemma + "'");
    }
    cli::VerifyOptions options;
    options.values = overrides;
    options.pieces = pieces;
    options.seed = seed;
    return report_to_json(cli::run_verification(*id, options)).dump();
}

Partition make_partition(const std::vector<std::pair<int, double>>& pieces) {
    Partition p;
    for (const auto& [m, a] : pieces) {
        p.pieces.push_back(Piece{m, a});
    }
    return p;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Regular hyperbolic polygon perimeters and the filling-pair length bound";

    py::register_exception<ParameterError>(m, "ParameterError", PyExc_ValueError);
    py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
    py::register_exception<HypothesisError>(m, "HypothesisError", PyExc_RuntimeError);
    py::register_exception<NoSignChangeError>(m, "NoSignChangeError", PyExc_RuntimeError);

    m.def("interior_angle", &interior_angle, py::arg("n"), py::arg("area"));
    m.def("area_from_angle", &area_from_angle, py::arg("n"), py::arg("theta"));
    m.def("perim_regular", &perim_regular, py::arg("n"), py::arg("area"));
    m.def("perim_continuous", &perim_continuous, py::arg("n"), py::arg("area"));
    m.def("h_n", &h_n, py::arg("n"), py::arg("x"));
    m.def("mg", &mg, py::arg("g"));
    m.def("systole_lower_bound", &systole_lower_bound, py::arg("g"));
    m.def("threshold_angle", &threshold_angle, py::arg("k"));
    m.def("phi_tilde", &phi_tilde, py::arg("x"));
    m.def("phi_tilde_root", [](double tol) { return phi_tilde_root(tol).root; }, py::arg("tol") = kDefaultRootTol);

    m.def("enumerate_partition_shapes", &enumerate_partition_shapes, py::arg("g"), py::arg("k"));
    m.def(
        "brute_force_min",
        [](const Shape& shape, double total_area, int grid) {
            const auto r = brute_force_min(shape, total_area, grid);
            return py::make_tuple(r.min_value, r.argmin);
        },
        py::arg("shape"), py::arg("total_area"), py::arg("grid"));
    m.def(
        "merge_margins",
        [](const std::vector<std::pair<int, double>>& pieces) {
            const auto trace = merge_induction(make_partition(pieces));
            std::vector<double> margins;
            for (const auto& s : trace.steps) {
                margins.push_back(s.step_margin);
            }
            return py::make_tuple(margins, trace.telescoped_margin(), trace.final_is_Pg);
        },
        py::arg("pieces"));

    m.def("_verify_json", &verify_json, py::arg("lemma"), py::arg("overrides"), py::arg("pieces") = "",
          py::arg("seed") = 0);
    m.def(
        "_certify_json",
        [](int genus_lo, int genus_hi, int k_max, int samples, std::uint64_t seed, int grid) {
            cli::CertifyOptions o;
            o.genus = cli::parse_genus_range(std::to_string(genus_lo) + ".." + std::to_string(genus_hi));
            o.k_max = k_max;
            o.samples = samples;
            o.seed = seed;
            o.grid = grid;
            return cli::to_json(cli::run_certify(o)).dump();
        },
        py::arg("genus_lo"), py::arg("genus_hi"), py::arg("k_max"), py::arg("samples"), py::arg("seed"),
        py::arg("grid"));
}
