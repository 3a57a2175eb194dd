#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "anforge/constructions.hpp"
#include "anforge/core.hpp"
#include "anforge/dynamics.hpp"
#include "anforge/io.hpp"
#include "anforge/laws.hpp"
#include "anforge/search.hpp"
#include "anforge/structure.hpp"

namespace py = pybind11;
using namespace anforge;

namespace {

py::dict verdict_dict(const laws::Verdict& v) {
    py::dict d;
    d["law"] = v.law;
    d["status"] = laws::to_string(v.status);
    d["detail"] = v.detail;
    d["ok"] = v.ok();
    if (!v.witness.empty()) d["witness"] = v.witness.dump();
    return d;
}

std::vector<Sym> to_syms(const std::vector<int>& xs) {
    std::vector<Sym> out;
    out.reserve(xs.size());
    for (int x : xs) {
        if (x < 0 || x > 0xffff) throw input_error("symbol out of range");
        out.push_back(static_cast<Sym>(x));
    }
    return out;
}

std::vector<int> from_syms(const std::vector<Sym>& xs) {
    return std::vector<int>(xs.begin(), xs.end());
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "bounded-degree automata network toolkit";

    py::register_exception<input_error>(m, "InputError", PyExc_ValueError);
    py::register_exception<unsupported_error>(m, "UnsupportedError", PyExc_ValueError);
    py::register_exception<space_limit_error>(m, "SpaceLimitError", PyExc_RuntimeError);
    py::register_exception<budget_error>(m, "BudgetError", PyExc_RuntimeError);

    py::class_<AutomataNetwork>(m, "AutomataNetwork")
        .def_readonly("n", &AutomataNetwork::n)
        .def_readonly("q", &AutomataNetwork::q)
        .def("evaluate",
             [](const AutomataNetwork& net, const std::vector<int>& x) {
                 return from_syms(evaluate(net, to_syms(x)));
             })
        .def("global_map", [](const AutomataNetwork& net) { return global_map(net); })
        .def("degree", [](const AutomataNetwork& net) { return structure::degree(net); })
        .def("to_json", [](const AutomataNetwork& net) { return io::to_json(net).dump(); })
        .def_static("from_json",
                    [](const std::string& text) {
                        return io::network_from_json(nlohmann::json::parse(text));
                    })
        .def("__repr__", [](const AutomataNetwork& net) {
            return "<AutomataNetwork n=" + std::to_string(net.n) +
                   " q=" + std::to_string(net.q) + ">";
        });

    py::class_<GlobalMap>(m, "GlobalMap")
        .def(py::init([](int n, int q, const std::vector<Index>& images) {
                 GlobalMap map{n, q, images};
                 validate(map);
                 return map;
             }),
             py::arg("n"), py::arg("q"), py::arg("images"))
        .def_readonly("n", &GlobalMap::n)
        .def_readonly("q", &GlobalMap::q)
        .def_readonly("images", &GlobalMap::images)
        .def("to_json", [](const GlobalMap& map) { return io::to_json(map).dump(); })
        .def_static("from_json",
                    [](const std::string& text) {
                        return io::global_map_from_json(nlohmann::json::parse(text));
                    })
        .def("__repr__", [](const GlobalMap& map) {
            return "<GlobalMap n=" + std::to_string(map.n) + " q=" + std::to_string(map.q) + ">";
        });

    // constructions
    m.def("identity_network", &constructions::identity_network, py::arg("n"), py::arg("q"));
    m.def("circular_shift", &constructions::circular_shift, py::arg("n"), py::arg("q"));
    m.def("near_hamiltonian", &constructions::near_hamiltonian, py::arg("q"), py::arg("n"));
    m.def("rank_deficient_base", &constructions::rank_deficient_base, py::arg("q"));
    m.def("rank_q_n_minus_2", &constructions::rank_q_n_minus_2, py::arg("q"), py::arg("n"));
    m.def("fsr_with_max_cycle", &constructions::fsr_with_max_cycle, py::arg("q"), py::arg("n"),
          py::arg("k"));
    m.def("reflected_gray_successor", &constructions::reflected_gray_successor, py::arg("n"));
    m.def("from_global_map", &from_global_map, py::arg("map"));

    // dynamics
    m.def("cycle_lengths", [](const GlobalMap& map) {
        return dynamics::cycle_structure(map).cycle_lengths();
    });
    m.def("parity",
          [](const GlobalMap& map) { return dynamics::cycle_structure(map).parity; });
    m.def("fixed_points", [](const GlobalMap& map) {
        return dynamics::cycle_structure(map).fixed_points;
    });
    m.def("rank", [](const GlobalMap& map) { return dynamics::preimage_profile(map, 0).rank; });
    m.def("is_hamiltonian", &dynamics::is_hamiltonian_map);
    m.def("is_near_hamiltonian", &dynamics::is_near_hamiltonian_map);
    m.def("gray_metrics", [](const GlobalMap& map) {
        dynamics::GrayMetrics gm = dynamics::gray_metrics(map);
        py::dict out;
        out["is_gray"] = gm.is_gray;
        out["delta"] = gm.delta;
        out["trivial_components"] = gm.trivial_components;
        return out;
    });
    m.def("preimage_summary", [](const GlobalMap& map) {
        dynamics::PreimageProfile profile = dynamics::preimage_profile(map, 64);
        py::dict out;
        out["rank"] = profile.rank;
        out["orphan_count"] = profile.orphans().size();
        out["max_preimage_count"] = profile.max_preimage_count;
        out["collision_pair_count"] = profile.collision_pair_count;
        py::dict histogram;
        for (const auto& [k, members] : profile.classes)
            histogram[py::cast(k)] = members.size();
        out["preimage_histogram"] = histogram;
        return out;
    });
    m.def("certificate", [](const GlobalMap& map) {
        return py::bytes(dynamics::canonical_form(map).certificate);
    });
    m.def("isomorphic", &dynamics::isomorphic, py::arg("a"), py::arg("b"));

    // laws
    m.def("check_fixed_point_bound",
          [](const AutomataNetwork& net) { return verdict_dict(laws::check_fixed_point_bound(net)); });
    m.def("check_rank_bound",
          [](const AutomataNetwork& net) { return verdict_dict(laws::check_rank_bound(net)); });
    m.def("check_preimage_bound",
          [](const AutomataNetwork& net) { return verdict_dict(laws::check_preimage_bound(net)); });
    m.def("check_parity_theorem",
          [](const AutomataNetwork& net) { return verdict_dict(laws::check_parity_theorem(net)); });
    m.def("check_gray_degree",
          [](const AutomataNetwork& net) { return verdict_dict(laws::check_gray_degree(net)); });
    m.def("check_local_rigidity",
          [](const AutomataNetwork& net, int d) {
              return verdict_dict(laws::check_local_rigidity(net, d));
          },
          py::arg("net"), py::arg("d"));
    m.def("affine_hamiltonian_search", &laws::affine_hamiltonian_search, py::arg("q"),
          py::arg("n"));

    // search
    m.def("bdig", &search::bdig, py::arg("net"), py::arg("d"));
    m.def("bdd",
          [](const GlobalMap& target, int d, std::uint64_t max_candidates) {
              search::SearchBudget budget;
              budget.max_candidates = max_candidates;
              search::BddResult r = search::bdd(target, d, budget);
              py::dict out;
              out["status"] = search::to_string(r.status);
              out["candidates"] = r.candidates;
              out["distinct_maps"] = r.distinct_maps;
              if (r.witness) out["witness"] = *r.witness;
              return out;
          },
          py::arg("target"), py::arg("d"), py::arg("max_candidates") = 1'000'000);

    m.def("set_max_space", &set_max_space);
    m.def("max_space", &max_space);
}
