#include "anforge/structure.hpp"

#include <algorithm>

#include "anforge/galois.hpp"

namespace anforge::structure {

namespace {

// Essential inputs of one rule, found by scanning its own table: input t is
// essential iff two patterns differing only in digit t map to different
// values. Witnesses are materialized as full configurations with zeros
// outside the rule's inputs.
struct RuleScan {
    std::vector<int> essential;            // positions into rule.inputs
    std::vector<std::pair<std::uint64_t, std::uint64_t>> witness_patterns;
};

RuleScan scan_rule(const LocalRule& rule, int q) {
    RuleScan scan;
    std::uint64_t patterns = rule.table.size();
    std::uint64_t w = 1;
    for (std::size_t t = 0; t < rule.inputs.size(); ++t, w *= static_cast<std::uint64_t>(q)) {
        bool essential = false;
        std::uint64_t wx = 0, wy = 0;
        for (std::uint64_t base = 0; base < patterns && !essential; ++base) {
            if ((base / w) % static_cast<std::uint64_t>(q) != 0) continue;
            Sym v0 = rule.table[base];
            for (int d = 1; d < q; ++d) {
                if (rule.table[base + w * static_cast<std::uint64_t>(d)] != v0) {
                    essential = true;
                    wx = base;
                    wy = base + w * static_cast<std::uint64_t>(d);
                    break;
                }
            }
        }
        if (essential) {
            scan.essential.push_back(static_cast<int>(t));
            scan.witness_patterns.emplace_back(wx, wy);
        }
    }
    return scan;
}

Index pattern_to_config(const ConfigSpace& space, const LocalRule& rule, std::uint64_t pattern) {
    std::uint64_t x = 0;
    std::uint64_t v = pattern;
    for (int input : rule.inputs) {
        x += (v % static_cast<std::uint64_t>(space.alphabet())) * space.weight(input);
        v /= static_cast<std::uint64_t>(space.alphabet());
    }
    return static_cast<Index>(x);
}

} // namespace

bool InteractionGraph::has_arc(int i, int j) const {
    return std::binary_search(arcs.begin(), arcs.end(), std::make_pair(i, j));
}

int InteractionGraph::out_degree(int node) const {
    auto lo = std::lower_bound(arcs.begin(), arcs.end(), std::make_pair(node, 0));
    auto hi = std::lower_bound(arcs.begin(), arcs.end(), std::make_pair(node + 1, 0));
    return static_cast<int>(hi - lo);
}

bool almost_degree_one(const InteractionGraph& g) {
    int heavy = 0;
    for (int d : g.in_degrees)
        if (d >= 2) ++heavy;
    return heavy <= 1;
}

InteractionGraph interaction_graph(const AutomataNetwork& net) {
    validate(net);
    ConfigSpace space(net.n, net.q);
    InteractionGraph g;
    g.n = net.n;
    g.in_degrees.assign(static_cast<std::size_t>(net.n), 0);
    for (int j = 1; j <= net.n; ++j) {
        const LocalRule& rule = net.rules[static_cast<std::size_t>(j) - 1];
        RuleScan scan = scan_rule(rule, net.q);
        g.in_degrees[static_cast<std::size_t>(j) - 1] = static_cast<int>(scan.essential.size());
        for (std::size_t e = 0; e < scan.essential.size(); ++e) {
            int source = rule.inputs[static_cast<std::size_t>(scan.essential[e])];
            ArcWitness w;
            w.source = source;
            w.target = j;
            w.x = pattern_to_config(space, rule, scan.witness_patterns[e].first);
            w.y = pattern_to_config(space, rule, scan.witness_patterns[e].second);
            g.arcs.emplace_back(source, j);
            g.witnesses.push_back(w);
        }
    }
    std::vector<std::size_t> order(g.arcs.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return g.arcs[a] < g.arcs[b]; });
    std::vector<std::pair<int, int>> arcs;
    std::vector<ArcWitness> wits;
    arcs.reserve(order.size());
    wits.reserve(order.size());
    for (std::size_t i : order) {
        arcs.push_back(g.arcs[i]);
        wits.push_back(g.witnesses[i]);
    }
    g.arcs = std::move(arcs);
    g.witnesses = std::move(wits);
    g.max_in_degree = 0;
    for (int d : g.in_degrees) g.max_in_degree = std::max(g.max_in_degree, d);
    return g;
}

AutomataNetwork minimized(const AutomataNetwork& net) {
    validate(net);
    AutomataNetwork out{net.n, net.q, {}};
    out.rules.resize(static_cast<std::size_t>(net.n));
    for (int j = 1; j <= net.n; ++j) {
        const LocalRule& rule = net.rules[static_cast<std::size_t>(j) - 1];
        RuleScan scan = scan_rule(rule, net.q);
        LocalRule& min = out.rules[static_cast<std::size_t>(j) - 1];
        for (int t : scan.essential)
            min.inputs.push_back(rule.inputs[static_cast<std::size_t>(t)]);
        std::uint64_t patterns = checked_pow(static_cast<std::uint64_t>(net.q),
                                             static_cast<int>(min.inputs.size()));
        min.table.resize(patterns);
        // Retabulate with non-essential inputs pinned to 0.
        for (std::uint64_t pattern = 0; pattern < patterns; ++pattern) {
            std::uint64_t full = 0;
            std::uint64_t v = pattern;
            std::uint64_t w = 1;
            std::size_t next = 0;
            for (std::size_t t = 0; t < rule.inputs.size(); ++t, w *= static_cast<std::uint64_t>(net.q)) {
                if (next < scan.essential.size() &&
                    scan.essential[next] == static_cast<int>(t)) {
                    full += (v % static_cast<std::uint64_t>(net.q)) * w;
                    v /= static_cast<std::uint64_t>(net.q);
                    ++next;
                }
            }
            min.table[pattern] = rule.table[full];
        }
    }
    return out;
}

int degree(const AutomataNetwork& net) {
    return interaction_graph(net).max_in_degree;
}

// Kahn-style acyclicity test with one node (0 = none) removed.
bool acyclic_after_deleting(const InteractionGraph& g, int removed) {
    std::vector<std::vector<int>> out(static_cast<std::size_t>(g.n) + 1);
    std::vector<int> indeg(static_cast<std::size_t>(g.n) + 1, 0);
    for (auto [i, j] : g.arcs) {
        if (i == removed || j == removed) continue;
        if (i == j) return false; // surviving self-loop
        out[static_cast<std::size_t>(i)].push_back(j);
        ++indeg[static_cast<std::size_t>(j)];
    }
    std::vector<int> queue;
    int alive = 0;
    for (int v = 1; v <= g.n; ++v) {
        if (v == removed) continue;
        ++alive;
        if (indeg[static_cast<std::size_t>(v)] == 0) queue.push_back(v);
    }
    int seen = 0;
    while (!queue.empty()) {
        int v = queue.back();
        queue.pop_back();
        ++seen;
        for (int w : out[static_cast<std::size_t>(v)])
            if (--indeg[static_cast<std::size_t>(w)] == 0) queue.push_back(w);
    }
    return seen == alive;
}

std::optional<int> is_centralized(const InteractionGraph& g) {
    for (int v = 1; v <= g.n; ++v)
        if (acyclic_after_deleting(g, v)) return v;
    return std::nullopt;
}

std::optional<std::vector<int>> hamiltonian_cycle(const InteractionGraph& g, std::uint64_t budget) {
    if (g.n == 1) {
        if (g.has_arc(1, 1)) return std::vector<int>{1};
        return std::nullopt;
    }
    std::vector<std::vector<int>> out(static_cast<std::size_t>(g.n) + 1);
    for (auto [i, j] : g.arcs)
        if (i != j) out[static_cast<std::size_t>(i)].push_back(j);
    for (auto& next : out) std::sort(next.begin(), next.end());

    // Depth-first over paths from node 1, successors in ascending order, so
    // the first complete cycle found is the lexicographically smallest one.
    std::vector<int> path{1};
    std::vector<char> used(static_cast<std::size_t>(g.n) + 1, 0);
    used[1] = 1;
    std::vector<std::size_t> cursor{0}; // next successor to try, per frame
    std::uint64_t steps = 0;
    while (!path.empty()) {
        if (++steps > budget) throw budget_error("hamiltonian cycle search budget exceeded");
        if (static_cast<int>(path.size()) == g.n) {
            if (g.has_arc(path.back(), 1)) return path;
            used[static_cast<std::size_t>(path.back())] = 0;
            path.pop_back();
            cursor.pop_back();
            continue;
        }
        const auto& next = out[static_cast<std::size_t>(path.back())];
        std::size_t& c = cursor.back();
        bool pushed = false;
        while (c < next.size()) {
            int w = next[c++];
            if (!used[static_cast<std::size_t>(w)]) {
                path.push_back(w);
                used[static_cast<std::size_t>(w)] = 1;
                cursor.push_back(0);
                pushed = true;
                break;
            }
        }
        if (!pushed) {
            used[static_cast<std::size_t>(path.back())] = 0;
            path.pop_back();
            cursor.pop_back();
        }
    }
    return std::nullopt;
}

Index AffineMap::apply(const ConfigSpace& space, Index x) const {
    std::vector<Sym> digits = space.decode(x);
    std::vector<Sym> image(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        std::uint64_t acc = offset[static_cast<std::size_t>(i)];
        for (int j = 0; j < n; ++j)
            acc += static_cast<std::uint64_t>(matrix[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]) *
                   digits[static_cast<std::size_t>(j)];
        image[static_cast<std::size_t>(i)] = static_cast<Sym>(acc % static_cast<std::uint64_t>(q));
    }
    return space.encode(image);
}

std::optional<AffineMap> is_affine(const GlobalMap& map) {
    validate(map);
    if (!galois::is_prime(static_cast<std::uint64_t>(map.q)))
        throw unsupported_error("affine detection requires a prime alphabet");
    ConfigSpace space(map.n, map.q);

    AffineMap cand;
    cand.n = map.n;
    cand.q = map.q;
    std::vector<Sym> f0 = space.decode(map.images[0]);
    cand.offset = f0;
    cand.matrix.assign(static_cast<std::size_t>(map.n),
                       std::vector<Sym>(static_cast<std::size_t>(map.n), 0));
    for (int j = 1; j <= map.n; ++j) {
        Index ej = static_cast<Index>(space.weight(j));
        std::vector<Sym> fej = space.decode(map.images[ej]);
        for (int i = 0; i < map.n; ++i)
            cand.matrix[static_cast<std::size_t>(i)][static_cast<std::size_t>(j) - 1] =
                static_cast<Sym>((fej[static_cast<std::size_t>(i)] + map.q -
                                  f0[static_cast<std::size_t>(i)]) % map.q);
    }
    for (std::uint64_t x = 0; x < map.images.size(); ++x)
        if (cand.apply(space, static_cast<Index>(x)) != map.images[x]) return std::nullopt;
    return cand;
}

std::optional<AffineMap> is_affine(const AutomataNetwork& net) {
    return is_affine(global_map(net));
}

bool is_balanced(const AutomataNetwork& net, int node) {
    validate(net);
    if (net.q != 2) throw unsupported_error("balance is defined for q = 2 only");
    if (node < 1 || node > net.n) throw input_error("node id out of range");
    const LocalRule& rule = net.rules[static_cast<std::size_t>(node) - 1];
    std::uint64_t zeros = 0;
    for (Sym v : rule.table)
        if (v == 0) ++zeros;
    // each pattern extends to 2^{n - #inputs} configurations
    std::uint64_t scale = checked_pow(2, net.n - static_cast<int>(rule.inputs.size()));
    return zeros * scale == checked_pow(2, net.n) / 2;
}

} // namespace anforge::structure
