#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "anforge/core.hpp"

namespace anforge::dynamics {

// Preimage structure of F: the partition Y_k of configurations by their
// number of preimages, the rank, orphans and collisions. The collision pair
// list is capped (the exact pair count is always reported) because a single
// k-preimage point contributes k(k-1)/2 pairs.
struct PreimageProfile {
    std::vector<std::uint32_t> counts;                      // |F^{-1}(y)| per y
    std::map<std::uint32_t, std::vector<Index>> classes;    // k -> Y_k, k = 0 included
    std::uint64_t rank = 0;                                 // |Y_{>=1}|
    std::uint32_t max_preimage_count = 0;
    std::vector<std::pair<Index, Index>> collision_pairs;   // (x, x'), x < x'
    std::uint64_t collision_pair_count = 0;                 // exact
    bool collisions_truncated = false;

    const std::vector<Index>& orphans() const;              // Y_0
    std::uint64_t class_size(std::uint32_t k) const;        // |Y_k|
};

PreimageProfile preimage_profile(const GlobalMap& map,
                                 std::uint64_t max_pairs = 1u << 20);

// |F^{-1}([u])| for the cylinder fixing pattern over the given node set.
std::uint64_t cylinder_preimage_count(const GlobalMap& map,
                                      const std::vector<int>& nodes,
                                      const std::vector<Sym>& pattern);

struct CycleInfo {
    std::uint64_t length = 0;
    std::uint64_t transient_size = 0; // non-cyclic configurations attracted
    Index representative = 0;         // smallest configuration on the cycle
};

struct CycleStructure {
    std::vector<CycleInfo> cycles; // sorted by (length, representative)
    std::vector<Index> fixed_points;
    int parity = 0; // number of limit cycles mod 2

    std::vector<std::uint64_t> cycle_lengths() const;
    std::uint64_t cycle_count() const { return cycles.size(); }
    std::uint64_t max_cycle_length() const;
};

// Iterative pointer-chasing with explicit visit states; no recursion.
CycleStructure cycle_structure(const GlobalMap& map);

// Single cycle of length q^n.
bool is_hamiltonian_map(const GlobalMap& map);
// One fixed point plus one cycle of length q^n - 1 (>= 2).
bool is_near_hamiltonian_map(const GlobalMap& map);

struct GrayMetrics {
    bool is_gray = false;
    std::uint64_t delta = 0;           // total Hamming displacement
    std::vector<int> trivial_components; // nodes with f_i constant or f_i = x_i
};

// q = 2 only; throws unsupported_error otherwise.
GrayMetrics gray_metrics(const GlobalMap& map);

// Sum over x of the digit-wise distance between x and F(x); any q.
std::uint64_t total_displacement(const GlobalMap& map);

// Certificate for the isomorphism class of the dynamics graph: rooted
// in-trees are canonized bottom-up with length-prefixed sorted child
// certificates, each cycle takes the least rotation of its tree-certificate
// sequence, and components are sorted. Equal certificates iff isomorphic.
struct CanonicalForm {
    std::string certificate;

    bool operator==(const CanonicalForm&) const = default;
};

CanonicalForm canonical_form(const GlobalMap& map);
bool isomorphic(const GlobalMap& a, const GlobalMap& b);

// pi o F o pi^{-1} for a permutation pi of the configuration set.
GlobalMap conjugate(const GlobalMap& map, const std::vector<Index>& pi);

// Least-rotation start index (Booth); exposed for testing.
std::size_t least_rotation(const std::vector<std::uint32_t>& seq);

} // namespace anforge::dynamics
