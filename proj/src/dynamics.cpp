#include "anforge/dynamics.hpp"

#include <algorithm>
#include <numeric>

namespace anforge::dynamics {

namespace {

const std::vector<Index> kEmpty{};

void append_u32(std::string& s, std::uint32_t v) {
    s.push_back(static_cast<char>((v >> 24) & 0xff));
    s.push_back(static_cast<char>((v >> 16) & 0xff));
    s.push_back(static_cast<char>((v >> 8) & 0xff));
    s.push_back(static_cast<char>(v & 0xff));
}

} // namespace

const std::vector<Index>& PreimageProfile::orphans() const {
    auto it = classes.find(0);
    return it == classes.end() ? kEmpty : it->second;
}

std::uint64_t PreimageProfile::class_size(std::uint32_t k) const {
    auto it = classes.find(k);
    return it == classes.end() ? 0 : it->second.size();
}

PreimageProfile preimage_profile(const GlobalMap& map, std::uint64_t max_pairs) {
    validate(map);
    PreimageProfile profile;
    std::size_t size = map.images.size();
    profile.counts.assign(size, 0);
    for (Index y : map.images) ++profile.counts[y];

    for (std::size_t y = 0; y < size; ++y) {
        std::uint32_t k = profile.counts[y];
        profile.classes[k].push_back(static_cast<Index>(y));
        if (k >= 1) ++profile.rank;
        profile.max_preimage_count = std::max(profile.max_preimage_count, k);
        if (k >= 2)
            profile.collision_pair_count += static_cast<std::uint64_t>(k) * (k - 1) / 2;
    }

    if (profile.collision_pair_count > 0) {
        // bucket preimages by image, in index order
        std::vector<Index> start(size + 1, 0);
        for (std::size_t y = 0; y < size; ++y)
            start[y + 1] = start[y] + profile.counts[y];
        std::vector<Index> bucket(size);
        std::vector<Index> fill(start.begin(), start.end() - 1);
        for (std::size_t x = 0; x < size; ++x)
            bucket[fill[map.images[x]]++] = static_cast<Index>(x);
        for (std::size_t y = 0; y < size && !profile.collisions_truncated; ++y) {
            std::uint32_t k = profile.counts[y];
            if (k < 2) continue;
            for (std::uint32_t a = 0; a < k && !profile.collisions_truncated; ++a)
                for (std::uint32_t b = a + 1; b < k; ++b) {
                    if (profile.collision_pairs.size() >= max_pairs) {
                        profile.collisions_truncated = true;
                        break;
                    }
                    profile.collision_pairs.emplace_back(bucket[start[y] + a],
                                                         bucket[start[y] + b]);
                }
        }
    }
    return profile;
}

std::uint64_t cylinder_preimage_count(const GlobalMap& map, const std::vector<int>& nodes,
                                      const std::vector<Sym>& pattern) {
    validate(map);
    if (nodes.size() != pattern.size())
        throw input_error("cylinder pattern must assign one symbol per node");
    ConfigSpace space(map.n, map.q);
    int prev = 0;
    for (std::size_t t = 0; t < nodes.size(); ++t) {
        if (nodes[t] < 1 || nodes[t] > map.n) throw input_error("cylinder node id out of range");
        if (nodes[t] <= prev) throw input_error("cylinder nodes must be strictly increasing");
        if (pattern[t] >= map.q) throw input_error("cylinder symbol out of range");
        prev = nodes[t];
    }
    std::uint64_t count = 0;
    for (Index y : map.images) {
        bool inside = true;
        for (std::size_t t = 0; t < nodes.size() && inside; ++t)
            inside = space.digit(y, nodes[t]) == pattern[t];
        if (inside) ++count;
    }
    return count;
}

namespace {

// Visit states for the pointer-chasing scan.
enum : std::uint8_t { kWhite = 0, kOnPath = 1, kDone = 2 };

struct RawComponents {
    std::vector<std::uint32_t> component;   // per configuration
    std::vector<char> cyclic;               // per configuration
    std::vector<std::uint64_t> cycle_length;
    std::vector<std::uint64_t> comp_size;
    std::vector<Index> representative;      // smallest on-cycle configuration
};

RawComponents raw_components(const GlobalMap& map) {
    std::size_t size = map.images.size();
    RawComponents rc;
    rc.component.assign(size, 0);
    rc.cyclic.assign(size, 0);
    std::vector<std::uint8_t> state(size, kWhite);
    std::vector<Index> path;

    for (std::size_t s = 0; s < size; ++s) {
        if (state[s] != kWhite) continue;
        path.clear();
        Index x = static_cast<Index>(s);
        while (state[x] == kWhite) {
            state[x] = kOnPath;
            path.push_back(x);
            x = map.images[x];
        }
        std::uint32_t comp;
        if (state[x] == kOnPath) {
            // new cycle: x is the first node of the cyclic suffix of path
            comp = static_cast<std::uint32_t>(rc.cycle_length.size());
            std::size_t at = path.size();
            while (path[at - 1] != x) --at;
            std::uint64_t len = path.size() - (at - 1);
            Index rep = x;
            for (std::size_t i = at - 1; i < path.size(); ++i) {
                rc.cyclic[path[i]] = 1;
                rep = std::min(rep, path[i]);
            }
            rc.cycle_length.push_back(len);
            rc.comp_size.push_back(0);
            rc.representative.push_back(rep);
        } else {
            comp = rc.component[x];
        }
        for (Index v : path) {
            state[v] = kDone;
            rc.component[v] = comp;
            ++rc.comp_size[comp];
        }
    }
    return rc;
}

} // namespace

std::vector<std::uint64_t> CycleStructure::cycle_lengths() const {
    std::vector<std::uint64_t> lengths;
    lengths.reserve(cycles.size());
    for (const CycleInfo& c : cycles) lengths.push_back(c.length);
    return lengths;
}

std::uint64_t CycleStructure::max_cycle_length() const {
    std::uint64_t best = 0;
    for (const CycleInfo& c : cycles) best = std::max(best, c.length);
    return best;
}

CycleStructure cycle_structure(const GlobalMap& map) {
    validate(map);
    RawComponents rc = raw_components(map);

    CycleStructure cs;
    cs.cycles.reserve(rc.cycle_length.size());
    for (std::size_t c = 0; c < rc.cycle_length.size(); ++c)
        cs.cycles.push_back(CycleInfo{rc.cycle_length[c], rc.comp_size[c] - rc.cycle_length[c],
                                      rc.representative[c]});
    std::sort(cs.cycles.begin(), cs.cycles.end(), [](const CycleInfo& a, const CycleInfo& b) {
        return std::tie(a.length, a.representative) < std::tie(b.length, b.representative);
    });
    for (std::size_t x = 0; x < map.images.size(); ++x)
        if (map.images[x] == x) cs.fixed_points.push_back(static_cast<Index>(x));
    cs.parity = static_cast<int>(cs.cycles.size() % 2);
    return cs;
}

bool is_hamiltonian_map(const GlobalMap& map) {
    CycleStructure cs = cycle_structure(map);
    return cs.cycles.size() == 1 && cs.cycles[0].length == map.images.size();
}

bool is_near_hamiltonian_map(const GlobalMap& map) {
    if (map.images.size() < 3) return false;
    CycleStructure cs = cycle_structure(map);
    return cs.cycles.size() == 2 && cs.cycles[0].length == 1 &&
           cs.cycles[1].length == map.images.size() - 1;
}

std::uint64_t total_displacement(const GlobalMap& map) {
    validate(map);
    ConfigSpace space(map.n, map.q);
    std::uint64_t delta = 0;
    for (std::size_t x = 0; x < map.images.size(); ++x) {
        Index y = map.images[x];
        for (int node = 1; node <= map.n; ++node)
            if (space.digit(static_cast<Index>(x), node) != space.digit(y, node)) ++delta;
    }
    return delta;
}

GrayMetrics gray_metrics(const GlobalMap& map) {
    validate(map);
    if (map.q != 2) throw unsupported_error("Gray metrics are defined for q = 2 only");
    GrayMetrics gm;
    std::size_t size = map.images.size();

    bool unit_steps = true;
    for (std::size_t x = 0; x < size; ++x) {
        std::uint32_t d = static_cast<std::uint32_t>(x ^ map.images[x]);
        gm.delta += static_cast<std::uint64_t>(__builtin_popcount(d));
        if (__builtin_popcount(d) != 1) unit_steps = false;
    }
    gm.is_gray = unit_steps && is_hamiltonian_map(map);

    ConfigSpace space(map.n, map.q);
    for (int node = 1; node <= map.n; ++node) {
        bool identity = true, constant = true;
        Sym first = space.digit(map.images[0], node);
        for (std::size_t x = 0; x < size && (identity || constant); ++x) {
            Sym v = space.digit(map.images[x], node);
            if (v != space.digit(static_cast<Index>(x), node)) identity = false;
            if (v != first) constant = false;
        }
        if (identity || constant) gm.trivial_components.push_back(node);
    }
    return gm;
}

std::size_t least_rotation(const std::vector<std::uint32_t>& seq) {
    // Booth's algorithm over the doubled sequence.
    std::size_t n = seq.size();
    if (n <= 1) return 0;
    auto at = [&](std::size_t i) { return seq[i % n]; };
    std::vector<std::ptrdiff_t> f(2 * n, -1);
    std::size_t k = 0;
    for (std::size_t j = 1; j < 2 * n; ++j) {
        std::uint32_t sj = at(j);
        std::ptrdiff_t i = f[j - k - 1];
        while (i != -1 && sj != at(k + static_cast<std::size_t>(i) + 1)) {
            if (sj < at(k + static_cast<std::size_t>(i) + 1)) k = j - static_cast<std::size_t>(i) - 1;
            i = f[static_cast<std::size_t>(i)];
        }
        if (sj != at(k + static_cast<std::size_t>(i) + 1)) {
            if (sj < at(k)) k = j;
            f[j - k] = -1;
        } else {
            f[j - k] = i + 1;
        }
    }
    return k;
}

namespace {

// Standalone tree certificate per cycle node: length-prefixed concatenation
// of the sorted child certificates, built bottom-up without recursion.
// Children strings are released as soon as the parent consumes them.
std::string tree_certificate(Index root, const std::vector<std::vector<Index>>& children,
                             std::vector<std::string>& scratch) {
    // post-order via explicit stack; child certs are computed before parents
    std::vector<std::pair<Index, bool>> stack{{root, false}};
    while (!stack.empty()) {
        auto [v, expanded] = stack.back();
        stack.pop_back();
        if (!expanded) {
            stack.emplace_back(v, true);
            for (Index c : children[v]) stack.emplace_back(c, false);
            continue;
        }
        std::vector<std::string> parts;
        parts.reserve(children[v].size());
        for (Index c : children[v]) parts.push_back(std::move(scratch[c]));
        std::sort(parts.begin(), parts.end());
        std::string payload;
        for (const std::string& p : parts) payload += p;
        std::string cert;
        append_u32(cert, static_cast<std::uint32_t>(payload.size()));
        cert += payload;
        scratch[v] = std::move(cert);
    }
    std::string result = std::move(scratch[root]);
    return result;
}

} // namespace

CanonicalForm canonical_form(const GlobalMap& map) {
    validate(map);
    RawComponents rc = raw_components(map);
    std::size_t size = map.images.size();

    // children: non-cyclic preimages (tree arcs point toward the cycle)
    std::vector<std::vector<Index>> children(size);
    for (std::size_t x = 0; x < size; ++x)
        if (!rc.cyclic[x]) children[map.images[x]].push_back(static_cast<Index>(x));

    std::vector<std::string> scratch(size);
    std::vector<std::string> component_certs;
    component_certs.reserve(rc.cycle_length.size());

    for (std::size_t comp = 0; comp < rc.cycle_length.size(); ++comp) {
        // walk the cycle once, collecting tree certificates in arc order
        Index start = rc.representative[comp];
        std::vector<std::string> tree_certs;
        tree_certs.reserve(static_cast<std::size_t>(rc.cycle_length[comp]));
        Index v = start;
        do {
            tree_certs.push_back(tree_certificate(v, children, scratch));
            v = map.images[v];
        } while (v != start);

        // least rotation over ranks of the certificates
        std::vector<std::string> sorted = tree_certs;
        std::sort(sorted.begin(), sorted.end());
        sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
        std::vector<std::uint32_t> ranks(tree_certs.size());
        for (std::size_t i = 0; i < tree_certs.size(); ++i)
            ranks[i] = static_cast<std::uint32_t>(
                std::lower_bound(sorted.begin(), sorted.end(), tree_certs[i]) - sorted.begin());
        std::size_t rot = least_rotation(ranks);

        std::string payload;
        append_u32(payload, static_cast<std::uint32_t>(tree_certs.size()));
        for (std::size_t i = 0; i < tree_certs.size(); ++i)
            payload += tree_certs[(rot + i) % tree_certs.size()];
        std::string cert;
        append_u32(cert, static_cast<std::uint32_t>(payload.size()));
        cert += payload;
        component_certs.push_back(std::move(cert));
    }

    std::sort(component_certs.begin(), component_certs.end());
    CanonicalForm form;
    for (const std::string& c : component_certs) form.certificate += c;
    return form;
}

bool isomorphic(const GlobalMap& a, const GlobalMap& b) {
    return canonical_form(a).certificate == canonical_form(b).certificate;
}

GlobalMap conjugate(const GlobalMap& map, const std::vector<Index>& pi) {
    validate(map);
    if (pi.size() != map.images.size())
        throw input_error("conjugating permutation has the wrong size");
    std::vector<bool> seen(pi.size(), false);
    for (Index v : pi) {
        if (v >= pi.size() || seen[v]) throw input_error("conjugation requires a permutation");
        seen[v] = true;
    }
    GlobalMap out{map.n, map.q, std::vector<Index>(map.images.size())};
    for (std::size_t x = 0; x < map.images.size(); ++x)
        out.images[pi[x]] = pi[map.images[x]];
    return out;
}

} // namespace anforge::dynamics
