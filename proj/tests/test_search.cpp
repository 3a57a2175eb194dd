#include <doctest.h>

#include <set>

#include "anforge/constructions.hpp"
#include "anforge/dynamics.hpp"
#include "anforge/io.hpp"
#include "anforge/search.hpp"
#include "anforge/structure.hpp"
#include "helpers.hpp"

using namespace anforge;
using namespace anforge::search;
namespace tt = anforge::testing;

TEST_CASE("enumeration: counts, distinct maps, and the closed form") {
    {
        NetworkEnumerator en(1, 2, 1);
        std::set<std::vector<Index>> maps;
        std::uint64_t declared = 0;
        while (auto net = en.next()) {
            ++declared;
            maps.insert(global_map(*net).images);
        }
        CHECK(declared == 6); // (empty hood: 2 tables) + ({1}: 4 tables)
        CHECK(maps.size() == 4);
        CHECK(NetworkEnumerator::count(1, 2, 1) == 6);
    }
    {
        NetworkEnumerator en(2, 2, 0);
        std::uint64_t declared = 0;
        while (en.next()) ++declared;
        CHECK(declared == 4); // constant networks only
    }
    {
        NetworkEnumerator en(2, 2, 2);
        std::uint64_t declared = 0;
        std::set<std::string> forms;
        while (auto net = en.next()) {
            ++declared;
            forms.insert(io::to_json(*net).dump());
            for (const auto& rule : net->rules) CHECK(rule.inputs.size() <= 2);
        }
        CHECK(declared == 676); // (2 + 2*4 + 16)^2
        CHECK(forms.size() == 676);
        CHECK(NetworkEnumerator::count(2, 2, 2) == 676);
    }
}

TEST_CASE("bdig decides the interaction-graph degree exactly") {
    CHECK(bdig(constructions::identity_network(3, 2), 1));
    auto nh = constructions::near_hamiltonian(2, 4);
    CHECK(bdig(nh, 2));
    CHECK_FALSE(bdig(nh, 1));
    CHECK_FALSE(bdig(constructions::rank_q_n_minus_2(3, 3), 1));
}

TEST_CASE("bdd finds the identity with degree 1") {
    auto target = global_map(constructions::identity_network(2, 2));
    auto result = bdd(target, 1);
    REQUIRE(result.status == BddStatus::found);
    REQUIRE(result.witness.has_value());
    CHECK(dynamics::isomorphic(global_map(*result.witness), target));
    CHECK(structure::degree(*result.witness) <= 1);
}

TEST_CASE("bdd proves no rank-3 dynamics is realizable with degree 1") {
    GlobalMap target{2, 2, {0, 0, 1, 2}}; // rank 3, one orphan
    auto result = bdd(target, 1);
    CHECK(result.status == BddStatus::no_exhausted);
    CHECK(result.candidates == 100); // (2 + 2*4)^2 declared candidates
}

TEST_CASE("bdd realizes the fixed point plus 3-cycle with degree 2") {
    GlobalMap target{2, 2, {0, 2, 3, 1}};
    auto result = bdd(target, 2);
    REQUIRE(result.status == BddStatus::found);
    CHECK(dynamics::isomorphic(global_map(*result.witness), target));
    CHECK(structure::degree(*result.witness) <= 2);
}

TEST_CASE("bdd rediscovers the near-Hamiltonian dynamics on 3 nodes") {
    auto target = global_map(constructions::near_hamiltonian(2, 3));
    auto result = bdd(target, 2);
    REQUIRE(result.status == BddStatus::found);
    CHECK(dynamics::isomorphic(global_map(*result.witness), target));
    CHECK(structure::degree(*result.witness) <= 2);
}

TEST_CASE("bdd reports budget exhaustion as a distinct outcome") {
    GlobalMap target{2, 2, {0, 0, 1, 2}};
    SearchBudget budget;
    budget.max_candidates = 5;
    CHECK(bdd(target, 1, budget).status == BddStatus::budget_exceeded);
}

TEST_CASE("bdd soundness on random targets") {
    std::mt19937 rng(79);
    for (int sample = 0; sample < 12; ++sample) {
        GlobalMap target = tt::random_map(rng, 2, 2);
        int d = sample % 2 + 1;
        auto result = bdd(target, d);
        if (result.status == BddStatus::found) {
            CHECK(dynamics::isomorphic(global_map(*result.witness), target));
            CHECK(structure::degree(*result.witness) <= d);
        }
    }
}

TEST_CASE("the doubly-vs-singly exponential gap at n = 2, q = 2") {
    // 5 isomorphism classes of bijective dynamics versus 676 declared
    // degree-<=2 networks
    std::set<std::string> classes;
    NetworkEnumerator en(2, 2, 2);
    while (auto net = en.next()) {
        auto map = global_map(*net);
        if (is_bijective(map)) classes.insert(dynamics::canonical_form(map).certificate);
    }
    CHECK(classes.size() == 5); // the partition number p(4)
    CHECK(NetworkEnumerator::count(2, 2, 2) == 676);
}
