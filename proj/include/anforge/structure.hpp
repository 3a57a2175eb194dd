#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "anforge/core.hpp"

namespace anforge::structure {

// Witness for the essential dependency of node target on node source: the
// two configurations differ only at source and f_target differs on them.
struct ArcWitness {
    int source = 0;
    int target = 0;
    Index x = 0;
    Index y = 0;
};

// The minimal communication graph G(F): arc (i, j) iff node j essentially
// depends on node i.
struct InteractionGraph {
    int n = 0;
    std::vector<std::pair<int, int>> arcs; // sorted (source, target) pairs
    std::vector<ArcWitness> witnesses;     // parallel to arcs
    std::vector<int> in_degrees;           // in_degrees[j-1] for node j
    int max_in_degree = 0;

    bool has_arc(int i, int j) const;
    int in_degree(int node) const { return in_degrees[node - 1]; }
    int out_degree(int node) const;
    std::size_t arc_count() const { return arcs.size(); }
};

// All but at most one node have in-degree <= 1 (the FSR shape).
bool almost_degree_one(const InteractionGraph& g);

InteractionGraph interaction_graph(const AutomataNetwork& net);

// net with every rule rewritten to its minimal input list, retabulated.
AutomataNetwork minimized(const AutomataNetwork& net);

// Maximum in-degree of G(F).
int degree(const AutomataNetwork& net);

// Is the graph acyclic once the given node (0 = none) and its incident
// arcs are removed? Self-loops count as cycles.
bool acyclic_after_deleting(const InteractionGraph& g, int node);

// Smallest node whose deletion makes the graph acyclic, if any.
std::optional<int> is_centralized(const InteractionGraph& g);

// Lexicographically smallest directed Hamiltonian cycle, as the node
// sequence v_1, ..., v_n with arcs v_t -> v_{t+1} and v_n -> v_1. Plain
// backtracking; throws budget_error past the step budget.
std::optional<std::vector<int>> hamiltonian_cycle(const InteractionGraph& g,
                                                  std::uint64_t budget = 50'000'000);

struct AffineMap {
    int n = 0;
    int q = 0;
    std::vector<std::vector<Sym>> matrix; // row i = coefficients of f_i
    std::vector<Sym> offset;

    Index apply(const ConfigSpace& space, Index x) const;
};

// F(x) = Ax + v over GF(q), q prime. The candidate is built from the images
// of 0 and the unit vectors, then verified on all q^n configurations.
std::optional<AffineMap> is_affine(const GlobalMap& map);
std::optional<AffineMap> is_affine(const AutomataNetwork& net);

// |f_node^{-1}(0)| == 2^{n-1}, counted over all configurations. q = 2 only.
bool is_balanced(const AutomataNetwork& net, int node);

} // namespace anforge::structure
