#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "anforge/core.hpp"

namespace anforge::constructions {

AutomataNetwork identity_network(int n, int q);
AutomataNetwork constant_network(int n, int q, Sym value);

// sigma(x) = (x_n, x_1, ..., x_{n-1}): node i copies node i-1, node 1 copies
// node n.
AutomataNetwork circular_shift(int n, int q);

// sigma^C for a permutation cycle C over all nodes, given as the node
// sequence c_1, ..., c_n with arcs c_t -> c_{t+1}: each node copies its
// C-in-neighbor.
AutomataNetwork shift_along(const std::vector<int>& cycle, int n, int q);

// A cycle of length k in the de Bruijn graph of order n over q symbols:
// k distinct words, consecutive ones overlapping on n-1 symbols, cyclically.
struct DeBruijnCycle {
    int q = 0;
    int n = 0;
    std::uint64_t k = 0;
    std::vector<std::vector<Sym>> vertices;
};

// Depth-first backtracking, start vertices and successor symbols tried in
// increasing order; first cycle found is returned.
DeBruijnCycle de_bruijn_cycle(int q, int n, std::uint64_t k,
                              std::uint64_t budget = 50'000'000);

// F_g(x) = (x_2, ..., x_n, g(x)) for a feedback function g given as a rule
// over nodes of the register.
AutomataNetwork fsr_from_feedback(const LocalRule& g, int n, int q);

// FSR whose maximum limit cycle has length exactly k: the feedback follows
// a de Bruijn k-cycle and is 0 elsewhere, so the only other possible cycle
// is the fixed point 0^n.
AutomataNetwork fsr_with_max_cycle(int q, int n, std::uint64_t k);

// Multiplication by a primitive element of GF(q^n), tabulated as n local
// rules each reading at most 2 nodes. One fixed point 0^n plus a cycle of
// length q^n - 1. q must be a prime power.
AutomataNetwork near_hamiltonian(int q, int n);

// The 3-node network over odd q >= 3 with rank q^3 - 2 and degree 2; its
// only collisions are F(0,0,q-1) = F(0,1,0) and F(1,0,q-1) = F(1,q-1,0).
AutomataNetwork rank_deficient_base(int q);

// Recode a network over alphabet q^ell into ell base-q digit nodes per
// original node (little-endian digits). The packed global map is unchanged,
// so the dynamics are isomorphic; the degree grows by a factor of ell.
AutomataNetwork split_alphabet(const AutomataNetwork& net, int q, int ell);

// Add r in {1, 2} control nodes held fixed; the original nodes behave as F
// when the control block is all zero and as the identity otherwise.
AutomataNetwork control_extension(const AutomataNetwork& net, int r);

// Rank q^n - 2 with degree <= ceil(2n/3) for odd q >= 3, n >= 3: the base
// network over alphabet q^floor(n/3), split, plus a control extension when
// n is not a multiple of 3.
AutomataNetwork rank_q_n_minus_2(int q, int n);

struct SwapSequence {
    std::vector<std::pair<Index, Index>> pairs;
};

// F o (x1<->y1) o ... o (xk<->yk); the empty sequence returns F itself.
GlobalMap apply_swaps(const GlobalMap& map, const SwapSequence& swaps);

struct WeightedCycle {
    std::vector<int> cycle;
    std::vector<std::uint64_t> per_node_weight; // w_i, aligned with node ids 1..n
    std::uint64_t total = 0;
};

// w_i(F, C) = #{x : x_j = 0 and f_i(x) = 1} where j is the C-in-neighbor
// of i; q = 2 and C must be a Hamiltonian cycle of G(F).
WeightedCycle weight(const AutomataNetwork& net, const std::vector<int>& cycle);

// Constructive decomposition: exactly w(F, C) swaps whose application to F
// yields sigma^C. Requires q = 2, F bijective, G(F) centralized, C
// Hamiltonian in G(F).
SwapSequence swap_decomposition(const AutomataNetwork& net, const std::vector<int>& cycle);

// The three tightness constructions: the derangement-on-zero-block network
// with q^n - q^{n-d} fixed points, the near-constant map with a point of
// q^n - q^{n-d} preimages, and the Boolean AND network of rank 2^n - 2^{n-2}.
AutomataNetwork tight_fixed_point_example(int q, int n, int d);
AutomataNetwork tight_preimage_example(int q, int n, int d);
AutomataNetwork tight_rank_example_boolean(int n);

// Successor map of the n-bit reflected Gray code, as a global map.
GlobalMap reflected_gray_successor(int n);

} // namespace anforge::constructions
