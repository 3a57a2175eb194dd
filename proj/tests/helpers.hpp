#pragma once

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <utility>
#include <vector>

#include "anforge/constructions.hpp"
#include "anforge/core.hpp"

namespace anforge::testing {

inline std::vector<Sym> digits(std::initializer_list<int> xs) {
    std::vector<Sym> out;
    for (int x : xs) out.push_back(static_cast<Sym>(x));
    return out;
}

// Parse "011" (node 1 leftmost) into a digit vector.
inline std::vector<Sym> digit_string(const std::string& s) {
    std::vector<Sym> out;
    for (char c : s) out.push_back(static_cast<Sym>(c - '0'));
    return out;
}

inline AutomataNetwork random_network(std::mt19937& rng, int n, int q, int d) {
    AutomataNetwork net{n, q, {}};
    std::uniform_int_distribution<int> size_dist(0, std::min(n, d));
    std::uniform_int_distribution<int> sym(0, q - 1);
    for (int j = 1; j <= n; ++j) {
        LocalRule rule;
        int size = size_dist(rng);
        std::vector<int> nodes(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) nodes[static_cast<std::size_t>(i)] = i + 1;
        std::shuffle(nodes.begin(), nodes.end(), rng);
        rule.inputs.assign(nodes.begin(), nodes.begin() + size);
        std::sort(rule.inputs.begin(), rule.inputs.end());
        std::uint64_t patterns = 1;
        for (int t = 0; t < size; ++t) patterns *= static_cast<std::uint64_t>(q);
        rule.table.resize(patterns);
        for (auto& v : rule.table) v = static_cast<Sym>(sym(rng));
        net.rules.push_back(std::move(rule));
    }
    return net;
}

inline GlobalMap random_map(std::mt19937& rng, int n, int q) {
    ConfigSpace space(n, q);
    GlobalMap map{n, q, std::vector<Index>(space.size())};
    std::uniform_int_distribution<Index> pick(0, static_cast<Index>(space.size() - 1));
    for (auto& y : map.images) y = pick(rng);
    return map;
}

inline GlobalMap random_permutation_map(std::mt19937& rng, int n, int q) {
    ConfigSpace space(n, q);
    GlobalMap map{n, q, std::vector<Index>(space.size())};
    for (std::size_t x = 0; x < map.images.size(); ++x) map.images[x] = static_cast<Index>(x);
    std::shuffle(map.images.begin(), map.images.end(), rng);
    return map;
}

inline std::vector<Index> random_permutation(std::mt19937& rng, std::size_t size) {
    std::vector<Index> pi(size);
    for (std::size_t i = 0; i < size; ++i) pi[i] = static_cast<Index>(i);
    std::shuffle(pi.begin(), pi.end(), rng);
    return pi;
}

// Bijective FSR over q = 2: g(x) = x_1 xor h(x_S) with S a subset of 2..n,
// so the feedback depends on at most 1 + |S| inputs.
inline AutomataNetwork random_bijective_fsr(std::mt19937& rng, int n, int max_extra_deps) {
    std::vector<int> rest;
    for (int i = 2; i <= n; ++i) rest.push_back(i);
    std::shuffle(rest.begin(), rest.end(), rng);
    int extra = std::uniform_int_distribution<int>(0, std::min<int>(max_extra_deps,
                                                                    static_cast<int>(rest.size())))(rng);
    std::vector<int> deps{1};
    deps.insert(deps.end(), rest.begin(), rest.begin() + extra);
    std::sort(deps.begin(), deps.end());

    LocalRule g;
    g.inputs = deps;
    std::uint64_t patterns = std::uint64_t{1} << deps.size();
    g.table.resize(patterns);
    std::uniform_int_distribution<int> bit(0, 1);
    // h over the non-x1 digits; x1 is digit 0 of the pattern
    std::vector<Sym> h(patterns >> 1);
    for (auto& v : h) v = static_cast<Sym>(bit(rng));
    for (std::uint64_t p = 0; p < patterns; ++p)
        g.table[p] = static_cast<Sym>((p & 1) ^ h[p >> 1]);
    return constructions::fsr_from_feedback(g, n, 2);
}

// Independent oracle: essential dependencies by scanning the whole
// configuration space and every single-digit change.
inline std::set<std::pair<int, int>> brute_dependencies(const AutomataNetwork& net) {
    ConfigSpace space(net.n, net.q);
    std::set<std::pair<int, int>> arcs;
    for (std::uint64_t x = 0; x < space.size(); ++x) {
        std::vector<Sym> dx = space.decode(static_cast<Index>(x));
        std::vector<Sym> fx = evaluate(net, dx);
        for (int i = 1; i <= net.n; ++i) {
            for (int delta = 1; delta < net.q; ++delta) {
                std::vector<Sym> dy = dx;
                dy[static_cast<std::size_t>(i) - 1] =
                    static_cast<Sym>((dx[static_cast<std::size_t>(i) - 1] + delta) % net.q);
                std::vector<Sym> fy = evaluate(net, dy);
                for (int j = 1; j <= net.n; ++j)
                    if (fx[static_cast<std::size_t>(j) - 1] != fy[static_cast<std::size_t>(j) - 1])
                        arcs.emplace(i, j);
            }
        }
    }
    return arcs;
}

// Independent oracle: limit cycle lengths by naive orbit walking.
inline std::multiset<std::uint64_t> brute_cycle_lengths(const GlobalMap& map) {
    std::size_t size = map.images.size();
    // a configuration is cyclic iff it reappears within size steps
    std::multiset<std::uint64_t> lengths;
    std::vector<char> counted(size, 0);
    for (std::size_t s = 0; s < size; ++s) {
        Index x = static_cast<Index>(s);
        for (std::size_t t = 0; t < size; ++t) x = map.images[x]; // deep inside the rho
        if (counted[x]) continue;
        std::uint64_t len = 0;
        Index v = x;
        do {
            counted[v] = 1;
            v = map.images[v];
            ++len;
        } while (v != x);
        lengths.insert(len);
    }
    return lengths;
}

inline std::size_t brute_least_rotation(const std::vector<std::uint32_t>& seq) {
    std::size_t best = 0;
    auto less_rot = [&](std::size_t a, std::size_t b) {
        for (std::size_t i = 0; i < seq.size(); ++i) {
            std::uint32_t va = seq[(a + i) % seq.size()];
            std::uint32_t vb = seq[(b + i) % seq.size()];
            if (va != vb) return va < vb;
        }
        return false;
    };
    for (std::size_t s = 1; s < seq.size(); ++s)
        if (less_rot(s, best)) best = s;
    return best;
}

} // namespace anforge::testing
