// anforge: construct, analyze, verify and search bounded-degree automata
// networks from the command line. JSON in, JSON out; see README.

#include <algorithm>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "anforge/constructions.hpp"
#include "anforge/core.hpp"
#include "anforge/dynamics.hpp"
#include "anforge/io.hpp"
#include "anforge/laws.hpp"
#include "anforge/search.hpp"
#include "anforge/structure.hpp"

namespace {

using anforge::AutomataNetwork;
using anforge::GlobalMap;
using nlohmann::json;

constexpr int kOk = 0;
constexpr int kViolated = 1;
constexpr int kUsage = 2;
constexpr int kResource = 3;

struct Options {
    int q = 2;
    int n = 2;
    int d = 1;
    std::uint64_t k = 1;
    int value = 0;
    int r = 1;
    int ell = 1;
    std::uint64_t budget = 1'000'000;
    int jobs = 1;
    std::string out;
    std::string network_path;
    std::string dynamics_path;
    std::string feedback_path;
    std::string cycle_spec;
    std::string swaps_spec;
    bool dot = false;
};

// "3,1,2" -> {3, 1, 2}
std::vector<int> parse_cycle(const std::string& spec) {
    std::vector<int> cycle;
    std::size_t at = 0;
    while (at < spec.size()) {
        std::size_t next = spec.find(',', at);
        if (next == std::string::npos) next = spec.size();
        cycle.push_back(std::stoi(spec.substr(at, next - at)));
        at = next + 1;
    }
    return cycle;
}

// "1:2,5:7" -> {{1,2},{5,7}}
anforge::constructions::SwapSequence parse_swaps(const std::string& spec) {
    anforge::constructions::SwapSequence swaps;
    std::size_t at = 0;
    while (at < spec.size()) {
        std::size_t next = spec.find(',', at);
        if (next == std::string::npos) next = spec.size();
        std::string pair = spec.substr(at, next - at);
        std::size_t colon = pair.find(':');
        if (colon == std::string::npos)
            throw anforge::input_error("swap pairs look like x:y, comma separated");
        swaps.pairs.emplace_back(static_cast<anforge::Index>(std::stoul(pair.substr(0, colon))),
                                 static_cast<anforge::Index>(std::stoul(pair.substr(colon + 1))));
        at = next + 1;
    }
    return swaps;
}

void emit(const json& j, const std::string& out) {
    std::string text = j.dump(2) + "\n";
    if (out.empty())
        std::cout << text;
    else
        anforge::io::save_text_file(out, text);
}

// Accepts either a network or a global-map file; maps are converted through
// from_global_map (all-input rules, later minimized where needed).
AutomataNetwork load_network(const std::string& path) {
    json j = anforge::io::load_json_file(path);
    if (anforge::io::looks_like_network(j)) return anforge::io::network_from_json(j);
    return anforge::from_global_map(anforge::io::global_map_from_json(j));
}

GlobalMap load_dynamics(const std::string& path, int jobs) {
    json j = anforge::io::load_json_file(path);
    if (anforge::io::looks_like_network(j))
        return anforge::global_map(anforge::io::network_from_json(j), jobs);
    return anforge::io::global_map_from_json(j);
}

int run_construct(const std::string& kind, const Options& opt) {
    std::optional<AutomataNetwork> net;
    std::optional<GlobalMap> map;
    if (kind == "identity") {
        net = anforge::constructions::identity_network(opt.n, opt.q);
    } else if (kind == "constant") {
        net = anforge::constructions::constant_network(opt.n, opt.q,
                                                       static_cast<anforge::Sym>(opt.value));
    } else if (kind == "shift") {
        net = anforge::constructions::circular_shift(opt.n, opt.q);
    } else if (kind == "near-hamiltonian") {
        net = anforge::constructions::near_hamiltonian(opt.q, opt.n);
    } else if (kind == "rank-deficient-base") {
        net = anforge::constructions::rank_deficient_base(opt.q);
    } else if (kind == "rank-deficient") {
        net = anforge::constructions::rank_q_n_minus_2(opt.q, opt.n);
    } else if (kind == "fsr-max-cycle") {
        net = anforge::constructions::fsr_with_max_cycle(opt.q, opt.n, opt.k);
    } else if (kind == "tight-fixed-point") {
        net = anforge::constructions::tight_fixed_point_example(opt.q, opt.n, opt.d);
    } else if (kind == "tight-preimage") {
        net = anforge::constructions::tight_preimage_example(opt.q, opt.n, opt.d);
    } else if (kind == "tight-rank-boolean") {
        net = anforge::constructions::tight_rank_example_boolean(opt.n);
    } else if (kind == "gray") {
        map = anforge::constructions::reflected_gray_successor(opt.n);
    } else if (kind == "shift-along") {
        net = anforge::constructions::shift_along(parse_cycle(opt.cycle_spec), opt.n, opt.q);
    } else if (kind == "fsr") {
        json j = anforge::io::load_json_file(opt.feedback_path);
        anforge::LocalRule g;
        for (const auto& v : j.at("inputs")) g.inputs.push_back(v.get<int>());
        for (const auto& v : j.at("table")) g.table.push_back(static_cast<anforge::Sym>(v.get<int>()));
        net = anforge::constructions::fsr_from_feedback(g, opt.n, opt.q);
    } else if (kind == "split") {
        net = anforge::constructions::split_alphabet(load_network(opt.network_path), opt.q, opt.ell);
    } else if (kind == "control") {
        net = anforge::constructions::control_extension(load_network(opt.network_path), opt.r);
    } else if (kind == "apply-swaps") {
        map = anforge::constructions::apply_swaps(load_dynamics(opt.network_path, opt.jobs),
                                                  parse_swaps(opt.swaps_spec));
    } else {
        std::cerr << "unknown construction \"" << kind << "\"\n";
        return kUsage;
    }

    json j = net ? anforge::io::to_json(*net) : anforge::io::to_json(*map);
    emit(j, opt.out);
    if (opt.dot) {
        if (opt.out.empty()) {
            std::cerr << "--dot needs --out to name the DOT files\n";
            return kUsage;
        }
        AutomataNetwork for_graph = net ? *net : anforge::from_global_map(*map);
        GlobalMap dynamics = map ? *map : anforge::global_map(*net, opt.jobs);
        anforge::io::save_text_file(
            opt.out + ".interaction.dot",
            anforge::io::interaction_graph_dot(anforge::structure::interaction_graph(for_graph)));
        anforge::io::save_text_file(opt.out + ".dynamics.dot",
                                    anforge::io::dynamics_dot(dynamics));
    }
    return kOk;
}

int run_analyze(const std::string& path, const Options& opt) {
    AutomataNetwork net = load_network(path);
    GlobalMap map = anforge::global_map(net, opt.jobs);
    anforge::ConfigSpace space(net.n, net.q);

    anforge::structure::InteractionGraph g = anforge::structure::interaction_graph(net);
    anforge::dynamics::PreimageProfile profile = anforge::dynamics::preimage_profile(map, 64);
    anforge::dynamics::CycleStructure cs = anforge::dynamics::cycle_structure(map);

    json report;
    report.update(anforge::io::to_json(profile));
    report.update(anforge::io::to_json(cs));
    report["n"] = net.n;
    report["q"] = net.q;
    report["degree"] = g.max_in_degree;
    report["arc_count"] = g.arc_count();
    json arcs = json::array();
    for (auto [i, j] : g.arcs) arcs.push_back({i, j});
    report["arcs"] = arcs;
    int max_out = 0;
    for (int v = 1; v <= g.n; ++v) max_out = std::max(max_out, g.out_degree(v));
    report["max_out_degree"] = max_out;
    report["almost_degree_one"] = anforge::structure::almost_degree_one(g);
    if (auto center = anforge::structure::is_centralized(g))
        report["center"] = *center;
    else
        report["center"] = nullptr;

    report["cycle_count"] = cs.cycle_count();
    report["fixed_point_count"] = cs.fixed_points.size();
    json fixed = json::array();
    for (std::size_t i = 0; i < cs.fixed_points.size() && i < 32; ++i)
        fixed.push_back(space.format(cs.fixed_points[i]));
    report["fixed_points"] = fixed; // capped sample, formatted
    report["hamiltonian"] = anforge::dynamics::is_hamiltonian_map(map);
    report["near_hamiltonian"] = anforge::dynamics::is_near_hamiltonian_map(map);

    if (net.q == 2) {
        anforge::dynamics::GrayMetrics gm = anforge::dynamics::gray_metrics(map);
        report["gray"] = {{"is_gray", gm.is_gray},
                          {"delta", gm.delta},
                          {"trivial_components", gm.trivial_components}};
    }
    if (map.images.size() <= 4096)
        report["certificate"] =
            anforge::io::certificate_hex(anforge::dynamics::canonical_form(map));

    emit(report, opt.out);
    return kOk;
}

int verdict_exit(const anforge::laws::Verdict& v, const Options& opt) {
    json j{{"law", v.law},
           {"status", anforge::laws::to_string(v.status)},
           {"detail", v.detail}};
    if (!v.witness.empty()) j["witness"] = v.witness;
    emit(j, opt.out);
    return v.status == anforge::laws::Status::violated ? kViolated : kOk;
}

int run_verify(const std::string& law, const Options& opt) {
    using anforge::laws::Status;
    if (law == "affine-hamiltonian") {
        std::uint64_t count = anforge::laws::affine_hamiltonian_search(opt.q, opt.n);
        Status status = opt.n >= 3 ? (count == 0 ? Status::holds : Status::violated)
                                   : Status::not_applicable;
        json j{{"law", law},
               {"status", anforge::laws::to_string(status)},
               {"count", count},
               {"q", opt.q},
               {"n", opt.n}};
        emit(j, opt.out);
        return status == Status::violated ? kViolated : kOk;
    }
    if (law == "balanced-affine")
        return verdict_exit(anforge::laws::check_balanced_affine(), opt);

    if (opt.network_path.empty()) {
        std::cerr << "verify " << law << " needs --network FILE\n";
        return kUsage;
    }
    AutomataNetwork net = load_network(opt.network_path);
    if (law == "local-rigidity")
        return verdict_exit(anforge::laws::check_local_rigidity(net, opt.d), opt);
    if (law == "fixed-point-bound")
        return verdict_exit(anforge::laws::check_fixed_point_bound(net), opt);
    if (law == "rank-bound")
        return verdict_exit(anforge::laws::check_rank_bound(net), opt);
    if (law == "preimage-bound")
        return verdict_exit(anforge::laws::check_preimage_bound(net), opt);
    if (law == "parity")
        return verdict_exit(anforge::laws::check_parity_theorem(net), opt);
    if (law == "gray-degree")
        return verdict_exit(anforge::laws::check_gray_degree(net), opt);
    if (law == "rank-bound-boolean")
        return verdict_exit(anforge::laws::check_rank_bound_boolean(net), opt);
    std::cerr << "unknown law \"" << law << "\"\n";
    return kUsage;
}

int run_bdig(const Options& opt) {
    AutomataNetwork net = load_network(opt.network_path);
    bool yes = anforge::search::bdig(net, opt.d);
    json j{{"problem", "bdig"}, {"degree", opt.d}, {"status", yes ? "yes" : "no"}};
    emit(j, opt.out);
    return yes ? kOk : kViolated;
}

int run_bdd(const Options& opt) {
    GlobalMap target = load_dynamics(opt.dynamics_path, opt.jobs);
    anforge::search::SearchBudget budget;
    budget.max_candidates = opt.budget;
    anforge::search::BddResult result = anforge::search::bdd(target, opt.d, budget);
    json j{{"problem", "bdd"},
           {"degree", opt.d},
           {"status", anforge::search::to_string(result.status)},
           {"candidates", result.candidates},
           {"distinct_maps", result.distinct_maps}};
    if (result.witness) j["witness"] = anforge::io::to_json(*result.witness);
    emit(j, opt.out);
    switch (result.status) {
        case anforge::search::BddStatus::found: return kOk;
        case anforge::search::BddStatus::no_exhausted: return kViolated;
        default: return kResource;
    }
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"bounded-degree automata network toolkit"};
    app.require_subcommand(1);
    app.fallthrough(); // global flags may follow the subcommand

    Options opt;
    std::uint64_t max_space_override = 0;
    app.add_option("--max-space", max_space_override, "override the q^n enumeration limit");
    app.add_option("--jobs", opt.jobs, "worker threads for whole-space scans");

    std::string construct_kind, analyze_path, verify_law;

    CLI::App* construct = app.add_subcommand("construct", "build a network and emit its JSON");
    construct->add_option("kind", construct_kind,
                          "identity|constant|shift|shift-along|near-hamiltonian|"
                          "rank-deficient-base|rank-deficient|fsr|fsr-max-cycle|split|control|"
                          "apply-swaps|tight-fixed-point|tight-preimage|tight-rank-boolean|gray")
        ->required();
    construct->add_option("--q", opt.q, "alphabet size");
    construct->add_option("--n", opt.n, "node count");
    construct->add_option("--d", opt.d, "block size for the tight examples");
    construct->add_option("--k", opt.k, "target cycle length");
    construct->add_option("--value", opt.value, "constant symbol");
    construct->add_option("--ell", opt.ell, "digits per node for split");
    construct->add_option("--r", opt.r, "control nodes for control (1 or 2)");
    construct->add_option("--network", opt.network_path, "input network for split/control/apply-swaps");
    construct->add_option("--feedback", opt.feedback_path, "feedback rule JSON for fsr");
    construct->add_option("--cycle", opt.cycle_spec, "node cycle for shift-along, e.g. 3,1,2");
    construct->add_option("--swaps", opt.swaps_spec, "configuration swaps, e.g. 1:2,5:7");
    construct->add_option("--out", opt.out, "output file (default stdout)");
    construct->add_flag("--dot", opt.dot, "also write interaction/dynamics DOT files");

    CLI::App* analyze = app.add_subcommand("analyze", "full report for a network or map file");
    analyze->add_option("file", analyze_path, "network or global-map JSON")->required();
    analyze->add_option("--out", opt.out, "output file (default stdout)");

    CLI::App* verify = app.add_subcommand("verify", "run one executable law check");
    verify->add_option("law", verify_law,
                       "local-rigidity|fixed-point-bound|rank-bound|preimage-bound|parity|"
                       "gray-degree|rank-bound-boolean|affine-hamiltonian|balanced-affine")
        ->required();
    verify->add_option("--network", opt.network_path, "network or map JSON file");
    verify->add_option("--q", opt.q, "alphabet size (affine-hamiltonian)");
    verify->add_option("--n", opt.n, "node count (affine-hamiltonian)");
    verify->add_option("--d", opt.d, "declared degree (local-rigidity)");
    verify->add_option("--out", opt.out, "output file (default stdout)");

    CLI::App* search = app.add_subcommand("search", "decision problems");
    search->require_subcommand(1);
    CLI::App* bdig = search->add_subcommand("bdig", "is the interaction degree <= d?");
    bdig->add_option("--network", opt.network_path, "network JSON")->required();
    bdig->add_option("--degree", opt.d, "degree bound")->required();
    bdig->add_option("--out", opt.out, "output file (default stdout)");
    CLI::App* bdd = search->add_subcommand("bdd", "is the dynamics realizable with degree <= d?");
    bdd->add_option("--dynamics", opt.dynamics_path, "global-map or network JSON")->required();
    bdd->add_option("--degree", opt.d, "degree bound")->required();
    bdd->add_option("--budget", opt.budget, "max candidates before giving up");
    bdd->add_option("--out", opt.out, "output file (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (max_space_override >= 2) anforge::set_max_space(max_space_override);
        if (construct->parsed()) return run_construct(construct_kind, opt);
        if (analyze->parsed()) return run_analyze(analyze_path, opt);
        if (verify->parsed()) return run_verify(verify_law, opt);
        if (search->parsed()) {
            if (bdig->parsed()) return run_bdig(opt);
            if (bdd->parsed()) return run_bdd(opt);
        }
        return kUsage;
    } catch (const anforge::space_limit_error& e) {
        std::cerr << "resource limit: " << e.what() << "\n";
        return kResource;
    } catch (const anforge::budget_error& e) {
        std::cerr << "resource limit: " << e.what() << "\n";
        return kResource;
    } catch (const anforge::input_error& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kUsage;
    } catch (const anforge::unsupported_error& e) {
        std::cerr << "unsupported: " << e.what() << "\n";
        return kUsage;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    }
}
