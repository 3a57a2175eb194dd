#include <doctest.h>

#include "anforge/constructions.hpp"
#include "anforge/structure.hpp"
#include "helpers.hpp"

using namespace anforge;
using namespace anforge::structure;
namespace tt = anforge::testing;

TEST_CASE("interaction graph of the identity is the self-loop graph") {
    auto g = interaction_graph(constructions::identity_network(3, 2));
    CHECK(g.arcs == std::vector<std::pair<int, int>>{{1, 1}, {2, 2}, {3, 3}});
    CHECK(g.max_in_degree == 1);
}

TEST_CASE("interaction graph of the degree-2 near-Hamiltonian network") {
    auto g = interaction_graph(constructions::near_hamiltonian(2, 3));
    CHECK(g.arcs == std::vector<std::pair<int, int>>{{1, 2}, {2, 3}, {3, 1}, {3, 2}});
    CHECK(g.max_in_degree == 2);
}

TEST_CASE("interaction graph of the odd-q base network") {
    auto g = interaction_graph(constructions::rank_deficient_base(3));
    CHECK(g.max_in_degree == 2);
    CHECK(g.in_degree(3) == 2);
    CHECK(g.has_arc(2, 3));
    CHECK(g.has_arc(3, 3));
}

TEST_CASE("arcs match the exhaustive dependency oracle and witnesses check out") {
    std::mt19937 rng(31);
    for (int sample = 0; sample < 30; ++sample) {
        int n = 2 + sample % 3;
        int q = 2 + sample % 2;
        auto net = tt::random_network(rng, n, q, n);
        auto g = interaction_graph(net);

        std::set<std::pair<int, int>> got(g.arcs.begin(), g.arcs.end());
        CHECK(got == tt::brute_dependencies(net));

        ConfigSpace space(n, q);
        for (std::size_t a = 0; a < g.arcs.size(); ++a) {
            const ArcWitness& w = g.witnesses[a];
            CHECK(w.source == g.arcs[a].first);
            CHECK(w.target == g.arcs[a].second);
            auto dx = space.decode(w.x);
            auto dy = space.decode(w.y);
            for (int node = 1; node <= n; ++node)
                if (node != w.source)
                    CHECK(dx[static_cast<std::size_t>(node) - 1] ==
                          dy[static_cast<std::size_t>(node) - 1]);
            CHECK(evaluate(net, dx)[static_cast<std::size_t>(w.target) - 1] !=
                  evaluate(net, dy)[static_cast<std::size_t>(w.target) - 1]);
        }
    }
}

TEST_CASE("minimized networks keep the same dynamics with essential inputs only") {
    std::mt19937 rng(37);
    for (int sample = 0; sample < 20; ++sample) {
        auto net = tt::random_network(rng, 3, 2, 3);
        auto min = minimized(net);
        CHECK(global_map(min).images == global_map(net).images);
        auto g = interaction_graph(net);
        for (int j = 1; j <= net.n; ++j)
            CHECK(static_cast<int>(min.rules[static_cast<std::size_t>(j) - 1].inputs.size()) ==
                  g.in_degree(j));
    }
}

TEST_CASE("degree of a power is at most the degree to the k-th power") {
    std::mt19937 rng(97);
    for (int sample = 0; sample < 15; ++sample) {
        int n = 2 + sample % 3;
        int q = 2 + sample % 2;
        auto net = minimized(tt::random_network(rng, n, q, 2));
        int d = degree(net);
        for (int k = 1; k <= 3; ++k) {
            std::uint64_t bound = 1;
            for (int t = 0; t < k; ++t) bound *= static_cast<std::uint64_t>(std::max(d, 1));
            CHECK(static_cast<std::uint64_t>(degree(power(net, k))) <=
                  std::min<std::uint64_t>(bound, static_cast<std::uint64_t>(n)));
        }
    }
}

TEST_CASE("hamiltonian cycle search respects its budget") {
    auto g = interaction_graph(constructions::circular_shift(4, 2));
    CHECK_THROWS_AS(hamiltonian_cycle(g, 1), budget_error);
}

TEST_CASE("degree: constants are 0, the paper constructions stay within 2") {
    CHECK(degree(constructions::constant_network(3, 2, 1)) == 0);
    CHECK(degree(constructions::near_hamiltonian(3, 2)) <= 2);
    CHECK(degree(constructions::near_hamiltonian(2, 4)) <= 2);
    auto gray = from_global_map(constructions::reflected_gray_successor(8));
    CHECK(degree(gray) >= 3); // ceil(log2 8)
}

TEST_CASE("out-degrees and the almost-degree-1 shape") {
    auto g = interaction_graph(constructions::near_hamiltonian(2, 3));
    // arcs {(1,2),(2,3),(3,1),(3,2)}
    CHECK(g.out_degree(1) == 1);
    CHECK(g.out_degree(2) == 1);
    CHECK(g.out_degree(3) == 2);
    CHECK(almost_degree_one(g)); // only node 2 has in-degree 2

    auto fsr = constructions::fsr_with_max_cycle(2, 3, 8);
    CHECK(almost_degree_one(interaction_graph(fsr)));

    auto base = interaction_graph(constructions::rank_deficient_base(3));
    CHECK_FALSE(almost_degree_one(base)); // every node reads two
}

TEST_CASE("centralization: shifts are centralized, split loops are not") {
    auto g_sigma = interaction_graph(constructions::circular_shift(3, 2));
    CHECK(is_centralized(g_sigma) == 1);

    // FSR whose feedback reads every node: only deleting the feedback node works
    LocalRule g;
    g.inputs = {1, 2, 3, 4};
    g.table.assign(16, 0);
    for (std::uint64_t p = 0; p < 16; ++p) g.table[p] = static_cast<Sym>((p ^ (p >> 3)) & 1);
    auto fsr = constructions::fsr_from_feedback(g, 4, 2);
    auto g_fsr = interaction_graph(fsr);
    CHECK(is_centralized(g_fsr) == 4);

    InteractionGraph loops;
    loops.n = 2;
    loops.arcs = {{1, 1}, {2, 2}};
    loops.in_degrees = {1, 1};
    loops.max_in_degree = 1;
    CHECK_FALSE(is_centralized(loops).has_value());
}

TEST_CASE("hamiltonian cycle search") {
    auto g_sigma = interaction_graph(constructions::circular_shift(4, 2));
    CHECK(hamiltonian_cycle(g_sigma) == std::vector<int>{1, 2, 3, 4});

    InteractionGraph loops;
    loops.n = 2;
    loops.arcs = {{1, 1}, {2, 2}};
    loops.in_degrees = {1, 1};
    loops.max_in_degree = 1;
    CHECK_FALSE(hamiltonian_cycle(loops).has_value());

    // centralized bijections always admit one
    std::mt19937 rng(41);
    for (int sample = 0; sample < 10; ++sample) {
        auto fsr = tt::random_bijective_fsr(rng, 5, 3);
        auto g = interaction_graph(fsr);
        REQUIRE(is_centralized(g).has_value());
        auto cycle = hamiltonian_cycle(g);
        REQUIRE(cycle.has_value());
        for (std::size_t t = 0; t < cycle->size(); ++t)
            CHECK(g.has_arc((*cycle)[t], (*cycle)[(t + 1) % cycle->size()]));
    }
}

TEST_CASE("affine detection: identity, the multiply-by-alpha network, and a non-affine map") {
    auto id = is_affine(constructions::identity_network(3, 2));
    REQUIRE(id.has_value());
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            CHECK(id->matrix[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] ==
                  (i == j ? 1 : 0));
    CHECK(id->offset == std::vector<Sym>{0, 0, 0});

    auto nh = is_affine(constructions::near_hamiltonian(2, 3));
    REQUIRE(nh.has_value());
    CHECK(nh->matrix == std::vector<std::vector<Sym>>{{0, 0, 1}, {1, 0, 1}, {0, 1, 0}});
    CHECK(nh->offset == std::vector<Sym>{0, 0, 0});

    CHECK_FALSE(is_affine(constructions::rank_deficient_base(3)).has_value());
    CHECK_THROWS_AS(is_affine(constructions::near_hamiltonian(4, 2)), unsupported_error);

    // multiplication by a field element is linear over any prime alphabet
    for (auto [q, n] : std::vector<std::pair<int, int>>{{2, 4}, {3, 3}, {5, 2}}) {
        auto affine = is_affine(constructions::near_hamiltonian(q, n));
        REQUIRE(affine.has_value());
        CHECK(affine->offset == std::vector<Sym>(static_cast<std::size_t>(n), 0));
    }
}

TEST_CASE("balance: projections yes, AND no, and balanced 2-input functions are affine") {
    AutomataNetwork proj{2, 2, {LocalRule{{1}, {0, 1}}, LocalRule{{2}, {0, 1}}}};
    CHECK(is_balanced(proj, 1));

    AutomataNetwork land{2, 2, {LocalRule{{1, 2}, {0, 0, 0, 1}}, LocalRule{{2}, {0, 1}}}};
    CHECK_FALSE(is_balanced(land, 1));

    int balanced_seen = 0;
    for (int table = 0; table < 16; ++table) {
        AutomataNetwork net{2, 2, {}};
        net.rules.push_back(LocalRule{{1, 2},
                                      {static_cast<Sym>(table & 1), static_cast<Sym>((table >> 1) & 1),
                                       static_cast<Sym>((table >> 2) & 1),
                                       static_cast<Sym>((table >> 3) & 1)}});
        net.rules.push_back(LocalRule{{2}, {0, 1}});
        if (!is_balanced(net, 1)) continue;
        ++balanced_seen;
        CHECK(is_affine(net).has_value());
    }
    CHECK(balanced_seen == 6);

    CHECK_THROWS_AS(is_balanced(constructions::identity_network(2, 3), 1), unsupported_error);
}
