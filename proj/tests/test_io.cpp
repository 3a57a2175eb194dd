#include <doctest.h>

#include "anforge/constructions.hpp"
#include "anforge/io.hpp"
#include "helpers.hpp"

using namespace anforge;
using anforge::io::json;
namespace tt = anforge::testing;

TEST_CASE("network JSON round trip") {
    std::mt19937 rng(83);
    for (int sample = 0; sample < 20; ++sample) {
        auto net = tt::random_network(rng, 3, 3, 2);
        auto back = io::network_from_json(io::to_json(net));
        CHECK(back.n == net.n);
        CHECK(back.q == net.q);
        CHECK(global_map(back).images == global_map(net).images);
        for (int j = 0; j < net.n; ++j) {
            CHECK(back.rules[static_cast<std::size_t>(j)].inputs ==
                  net.rules[static_cast<std::size_t>(j)].inputs);
            CHECK(back.rules[static_cast<std::size_t>(j)].table ==
                  net.rules[static_cast<std::size_t>(j)].table);
        }
    }
}

TEST_CASE("global map JSON round trip") {
    auto map = global_map(constructions::near_hamiltonian(2, 3));
    auto back = io::global_map_from_json(io::to_json(map));
    CHECK(back.images == map.images);
}

TEST_CASE("field spec JSON round trip") {
    auto spec = galois::find_primitive_polynomial(2, 3);
    auto back = io::field_spec_from_json(io::to_json(spec));
    CHECK(back.p == spec.p);
    CHECK(back.m == spec.m);
    CHECK(back.modulus == spec.modulus);
}

TEST_CASE("cycle structure and preimage profile JSON exports") {
    auto map = global_map(constructions::near_hamiltonian(2, 3));
    json cs = io::to_json(dynamics::cycle_structure(map));
    CHECK(cs["cycle_lengths"] == json::array({1, 7}));
    CHECK(cs["parity"] == 0);
    CHECK(cs["fixed_points"] == json::array({0}));

    json profile = io::to_json(dynamics::preimage_profile(global_map(
        constructions::rank_deficient_base(3))));
    CHECK(profile["rank"] == 25);
    CHECK(profile["collision_pair_count"] == 2);
    CHECK(profile["preimage_histogram"]["2"] == 2);
}

TEST_CASE("malformed JSON inputs are rejected") {
    json missing_rules = {{"n", 2}, {"q", 2}};
    CHECK_THROWS_AS(io::network_from_json(missing_rules), input_error);

    json bad_inputs = {{"n", 2},
                       {"q", 2},
                       {"rules", json::array({{{"inputs", {2, 1}}, {"table", {0, 1, 1, 0}}},
                                              {{"inputs", {2}}, {"table", {0, 1}}}})}};
    CHECK_THROWS_AS(io::network_from_json(bad_inputs), input_error);

    json short_table = {{"n", 1}, {"q", 2}, {"rules", json::array({{{"inputs", {1}}, {"table", {0}}}})}};
    CHECK_THROWS_AS(io::network_from_json(short_table), input_error);

    json bad_image = {{"n", 1}, {"q", 2}, {"images", {0, 2}}};
    CHECK_THROWS_AS(io::global_map_from_json(bad_image), input_error);

    json neither = {{"n", 1}, {"q", 2}};
    CHECK_THROWS_AS(io::looks_like_network(neither), input_error);
}

TEST_CASE("DOT exports") {
    auto g = structure::interaction_graph(constructions::identity_network(2, 2));
    std::string dot = io::interaction_graph_dot(g);
    CHECK(dot.find("digraph {") != std::string::npos);
    CHECK(dot.find("1 -> 1;") != std::string::npos);
    CHECK(dot.find("2 -> 2;") != std::string::npos);

    std::string dyn = io::dynamics_dot(global_map(constructions::identity_network(2, 2)));
    CHECK(dyn.find("\"00\" -> \"00\";") != std::string::npos);
    CHECK(dyn.find("\"10\" -> \"10\";") != std::string::npos);

    // the worked example renders with node 1 leftmost: 100 -> 010
    std::string nh = io::dynamics_dot(global_map(constructions::near_hamiltonian(2, 3)));
    CHECK(nh.find("\"100\" -> \"010\";") != std::string::npos);
}

TEST_CASE("certificates serialize to hex") {
    auto cert = dynamics::canonical_form(global_map(constructions::identity_network(1, 2)));
    std::string hex = io::certificate_hex(cert);
    CHECK(hex.size() == cert.certificate.size() * 2);
    for (char c : hex) CHECK(((c >= '0' && c <= '9') || (c >= 'a' && c <= 'f')));
}
