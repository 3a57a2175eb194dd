#include "anforge/laws.hpp"

#include <algorithm>

#include "anforge/dynamics.hpp"
#include "anforge/galois.hpp"
#include "anforge/search.hpp"
#include "anforge/structure.hpp"

namespace anforge::laws {

namespace {

using nlohmann::json;

Verdict make(Status status, std::string law, std::string detail, json witness = json::object()) {
    return Verdict{status, std::move(law), std::move(detail), std::move(witness)};
}

json digits_json(const ConfigSpace& space, Index x) { return space.format(x); }

json sample_indices(const ConfigSpace& space, const std::vector<Index>& xs, std::size_t cap = 16) {
    json out = json::array();
    for (std::size_t i = 0; i < xs.size() && i < cap; ++i) out.push_back(digits_json(space, xs[i]));
    return out;
}

bool is_identity(const GlobalMap& map) {
    for (std::size_t x = 0; x < map.images.size(); ++x)
        if (map.images[x] != x) return false;
    return true;
}

bool is_constant(const GlobalMap& map) {
    for (Index y : map.images)
        if (y != map.images[0]) return false;
    return true;
}

// The paper states its degree-d bounds for communication graphs; a constant
// map has essential degree 0 but still lives in funs(n, q, 1), which is the
// smallest degree the case analyses cover.
int effective_degree(int essential) { return std::max(essential, 1); }

} // namespace

const char* to_string(Status s) {
    switch (s) {
        case Status::holds: return "holds";
        case Status::violated: return "violated";
        default: return "not-applicable";
    }
}

Verdict check_local_rigidity(const AutomataNetwork& net, int d, int max_subset) {
    validate(net);
    if (d < 0) throw input_error("declared degree must be >= 0");
    if (structure::degree(net) > d)
        throw input_error("declared degree must upper-bound the essential degree");
    GlobalMap map = global_map(net);
    ConfigSpace space(net.n, net.q);

    int limit = d == 0 ? net.n : net.n / d;
    limit = std::min(limit, max_subset);

    std::vector<int> nodes;
    for (int size = 1; size <= limit; ++size) {
        // lexicographic |size|-subsets of 1..n
        nodes.assign(static_cast<std::size_t>(size), 0);
        for (int i = 0; i < size; ++i) nodes[static_cast<std::size_t>(i)] = i + 1;
        while (true) {
            std::uint64_t exponent = net.n - static_cast<std::uint64_t>(size) * d;
            std::uint64_t divisor = d == 0 ? space.size()
                                           : checked_pow(static_cast<std::uint64_t>(net.q),
                                                         static_cast<int>(exponent));
            std::uint64_t patterns = checked_pow(static_cast<std::uint64_t>(net.q), size);
            std::vector<std::uint64_t> counts(patterns, 0);
            for (Index y : map.images) {
                std::uint64_t pat = 0, w = 1;
                for (int node : nodes) {
                    pat += static_cast<std::uint64_t>(space.digit(y, node)) * w;
                    w *= static_cast<std::uint64_t>(net.q);
                }
                ++counts[pat];
            }
            for (std::uint64_t pat = 0; pat < patterns; ++pat) {
                if (counts[pat] % divisor != 0) {
                    json pattern = json::array();
                    std::uint64_t v = pat;
                    for (int i = 0; i < size; ++i) {
                        pattern.push_back(v % static_cast<std::uint64_t>(net.q));
                        v /= static_cast<std::uint64_t>(net.q);
                    }
                    return make(Status::violated, "local-rigidity",
                                "a cylinder preimage count misses the divisibility",
                                {{"U", nodes},
                                 {"pattern", pattern},
                                 {"count", counts[pat]},
                                 {"divisor", divisor}});
                }
            }
            // next subset
            int i = size - 1;
            while (i >= 0 && nodes[static_cast<std::size_t>(i)] == net.n - size + 1 + i) --i;
            if (i < 0) break;
            ++nodes[static_cast<std::size_t>(i)];
            for (int t = i + 1; t < size; ++t)
                nodes[static_cast<std::size_t>(t)] = nodes[static_cast<std::size_t>(t) - 1] + 1;
        }
    }
    return make(Status::holds, "local-rigidity",
                "every cylinder preimage count is divisible by q^{n-|U|d}");
}

Verdict check_fixed_point_bound(const AutomataNetwork& net) {
    GlobalMap map = global_map(net);
    if (is_identity(map))
        return make(Status::holds, "fixed-point-bound", "identity map is excluded from the bound");
    ConfigSpace space(net.n, net.q);
    int d = effective_degree(structure::degree(net));
    std::uint64_t fp = 0;
    std::vector<Index> fixed;
    for (std::size_t x = 0; x < map.images.size(); ++x)
        if (map.images[x] == x) {
            ++fp;
            if (fixed.size() < 16) fixed.push_back(static_cast<Index>(x));
        }
    std::uint64_t bound = space.size() - space.size() / checked_pow(static_cast<std::uint64_t>(net.q), d);
    if (fp <= bound)
        return make(Status::holds, "fixed-point-bound",
                    std::to_string(fp) + " fixed points within q^n - q^{n-d} = " + std::to_string(bound));
    return make(Status::violated, "fixed-point-bound", "too many fixed points for the degree",
                {{"fixed_points", fp}, {"bound", bound}, {"degree", d},
                 {"sample", sample_indices(space, fixed)}});
}

namespace {

// y0 >= (n + log_q 2)/(d + log_q 2), as the exact integer comparison
// q^{y0 d} 2^{y0} >= 2 q^n.
bool orphan_bound_met(std::uint64_t y0, int d, int n, int q, std::uint64_t qn) {
    if (y0 * static_cast<std::uint64_t>(d) >= static_cast<std::uint64_t>(n)) return true;
    if (y0 >= 64) return true; // 2^{y0-1} alone already exceeds any q^n in range
    std::uint64_t lhs_exp = y0 * static_cast<std::uint64_t>(d);
    std::uint64_t lhs = checked_pow(static_cast<std::uint64_t>(q), static_cast<int>(lhs_exp));
    // lhs * 2^{y0-1} >= q^n, watching for overflow
    std::uint64_t shift = y0 - 1;
    if (shift >= 64 || lhs > (UINT64_MAX >> shift)) return true;
    return (lhs << shift) >= qn;
}

} // namespace

Verdict check_rank_bound(const AutomataNetwork& net) {
    GlobalMap map = global_map(net);
    dynamics::PreimageProfile profile = dynamics::preimage_profile(map, 0);
    ConfigSpace space(net.n, net.q);
    if (profile.rank == space.size())
        return make(Status::holds, "rank-bound", "bijective map is excluded from the bound");
    int d = effective_degree(structure::degree(net));
    std::uint64_t y0 = space.size() - profile.rank;
    if (!orphan_bound_met(y0, d, net.n, net.q, space.size()))
        return make(Status::violated, "rank-bound",
                    "rank exceeds q^n - (n + log_q 2)/(d + log_q 2)",
                    {{"rank", profile.rank}, {"orphans", y0}, {"degree", d},
                     {"sample", sample_indices(space, profile.orphans())}});
    if (d < net.n && y0 < 2)
        return make(Status::violated, "rank-bound", "degree < n forces rank <= q^n - 2",
                    {{"rank", profile.rank}, {"orphans", y0}, {"degree", d},
                     {"sample", sample_indices(space, profile.orphans())}});
    return make(Status::holds, "rank-bound",
                "rank " + std::to_string(profile.rank) + " respects the orphan bound with degree " +
                    std::to_string(d));
}

Verdict check_preimage_bound(const AutomataNetwork& net) {
    GlobalMap map = global_map(net);
    if (is_constant(map))
        return make(Status::holds, "preimage-bound", "constant map is excluded from the bound");
    ConfigSpace space(net.n, net.q);
    int d = effective_degree(structure::degree(net));
    dynamics::PreimageProfile profile = dynamics::preimage_profile(map, 0);
    std::uint64_t bound = space.size() - space.size() / checked_pow(static_cast<std::uint64_t>(net.q), d);
    if (profile.max_preimage_count <= bound)
        return make(Status::holds, "preimage-bound",
                    "max preimage count " + std::to_string(profile.max_preimage_count) +
                        " within q^n - q^{n-d} = " + std::to_string(bound));
    Index worst = 0;
    for (std::size_t y = 0; y < profile.counts.size(); ++y)
        if (profile.counts[y] == profile.max_preimage_count) {
            worst = static_cast<Index>(y);
            break;
        }
    return make(Status::violated, "preimage-bound", "a configuration has too many preimages",
                {{"configuration", space.format(worst)},
                 {"preimages", profile.max_preimage_count},
                 {"bound", bound},
                 {"degree", d}});
}

Verdict check_parity_theorem(const AutomataNetwork& net) {
    validate(net);
    if (net.q != 2)
        return make(Status::not_applicable, "parity", "the parity theorem is stated for q = 2");
    if (net.n < 3)
        return make(Status::not_applicable, "parity", "the parity theorem needs n >= 3");
    GlobalMap map = global_map(net);
    if (!is_bijective(map))
        return make(Status::not_applicable, "parity", "the parity theorem needs a bijection");
    structure::InteractionGraph g = structure::interaction_graph(net);
    if (g.max_in_degree >= net.n)
        return make(Status::not_applicable, "parity", "the parity theorem needs degree < n");
    if (!structure::is_centralized(g))
        return make(Status::not_applicable, "parity",
                    "the parity theorem needs a centralized interaction graph");
    dynamics::CycleStructure cs = dynamics::cycle_structure(map);
    if (cs.parity == 0)
        return make(Status::holds, "parity",
                    std::to_string(cs.cycle_count()) + " limit cycles, an even number");
    json lengths = json::array();
    for (std::uint64_t len : cs.cycle_lengths()) lengths.push_back(len);
    return make(Status::violated, "parity", "odd number of limit cycles", {{"cycle_lengths", lengths}});
}

namespace {

// 2^arcs >= n^n, exactly. Splitting n = 2^a m with m odd reduces the test
// to 2^{arcs - an} >= m^n; for odd m >= 3 the right side is never a power
// of two, so the comparison is an exact bit-length question.
bool pow2_at_least(std::uint64_t arcs, std::uint64_t n) {
    std::uint64_t m = n;
    std::uint64_t a = 0;
    while (m % 2 == 0) {
        m /= 2;
        ++a;
    }
    if (arcs < a * n) return false;
    if (m == 1) return true;
    std::uint64_t e = arcs - a * n;
    std::vector<std::uint32_t> big{1};
    for (std::uint64_t t = 0; t < n; ++t) {
        std::uint64_t carry = 0;
        for (auto& word : big) {
            std::uint64_t v = static_cast<std::uint64_t>(word) * m + carry;
            word = static_cast<std::uint32_t>(v & 0xffffffffu);
            carry = v >> 32;
        }
        while (carry) {
            big.push_back(static_cast<std::uint32_t>(carry & 0xffffffffu));
            carry >>= 32;
        }
    }
    std::uint64_t bits = 32 * (big.size() - 1);
    for (std::uint32_t top = big.back(); top; top >>= 1) ++bits;
    return e >= bits;
}

} // namespace

Verdict check_gray_degree(const AutomataNetwork& net) {
    validate(net);
    if (net.q != 2)
        return make(Status::not_applicable, "gray-degree", "Gray codes are stated for q = 2");
    GlobalMap map = global_map(net);
    dynamics::GrayMetrics gm = dynamics::gray_metrics(map);
    if (!gm.is_gray)
        return make(Status::not_applicable, "gray-degree", "the map is not a Gray code");
    structure::InteractionGraph g = structure::interaction_graph(net);
    int d = g.max_in_degree;
    // d >= log2 n as 2^d >= n
    if ((std::uint64_t{1} << std::min(d, 63)) < static_cast<std::uint64_t>(net.n))
        return make(Status::violated, "gray-degree", "degree below log2 n",
                    {{"degree", d}, {"n", net.n}});
    std::uint64_t arcs = g.arc_count();
    if (!pow2_at_least(arcs, static_cast<std::uint64_t>(net.n)))
        return make(Status::violated, "gray-degree", "fewer than n log2 n arcs",
                    {{"arcs", arcs}, {"n", net.n}});
    return make(Status::holds, "gray-degree",
                "degree " + std::to_string(d) + " and " + std::to_string(arcs) +
                    " arcs meet the Gray-code lower bounds");
}

Verdict check_rank_bound_boolean(const AutomataNetwork& net) {
    validate(net);
    if (net.q != 2)
        return make(Status::not_applicable, "rank-bound-boolean", "stated for q = 2 only");
    if (net.n < 2)
        return make(Status::not_applicable, "rank-bound-boolean", "needs n >= 2");
    if (structure::degree(net) > 2)
        return make(Status::not_applicable, "rank-bound-boolean", "needs degree <= 2");
    GlobalMap map = global_map(net);
    dynamics::PreimageProfile profile = dynamics::preimage_profile(map, 0);
    ConfigSpace space(net.n, net.q);
    if (profile.rank == space.size())
        return make(Status::holds, "rank-bound-boolean", "bijective map is excluded from the bound");
    std::uint64_t bound = space.size() - space.size() / 4;
    if (profile.rank <= bound)
        return make(Status::holds, "rank-bound-boolean",
                    "rank " + std::to_string(profile.rank) + " within 2^n - 2^{n-2} = " +
                        std::to_string(bound));
    return make(Status::violated, "rank-bound-boolean", "rank above 2^n - 2^{n-2}",
                {{"rank", profile.rank}, {"bound", bound}});
}

std::uint64_t affine_hamiltonian_search(int q, int n) {
    if (!galois::is_prime(static_cast<std::uint64_t>(q)))
        throw input_error("affine search requires a prime alphabet");
    std::uint64_t size = require_space(n, q);
    int cells = n * n + n;
    std::uint64_t total = checked_pow(static_cast<std::uint64_t>(q), cells);
    if (total > (std::uint64_t{1} << 32))
        throw space_limit_error("affine map family too large to enumerate");

    std::vector<Sym> coeff(static_cast<std::size_t>(cells), 0); // A row-major, then v
    std::vector<Sym> x(static_cast<std::size_t>(n)), y(static_cast<std::size_t>(n));
    std::uint64_t hamiltonian = 0;
    for (std::uint64_t packed = 0; packed < total; ++packed) {
        // orbit of 0 under x -> Ax + v returns to 0 after exactly q^n steps
        // iff the map is one big cycle
        std::fill(x.begin(), x.end(), 0);
        std::uint64_t period = 0;
        for (std::uint64_t step = 1; step <= size; ++step) {
            for (int i = 0; i < n; ++i) {
                std::uint64_t acc = coeff[static_cast<std::size_t>(n) * n + static_cast<std::size_t>(i)];
                const Sym* row = &coeff[static_cast<std::size_t>(i) * n];
                for (int j = 0; j < n; ++j)
                    acc += static_cast<std::uint64_t>(row[j]) * x[static_cast<std::size_t>(j)];
                y[static_cast<std::size_t>(i)] = static_cast<Sym>(acc % static_cast<std::uint64_t>(q));
            }
            x.swap(y);
            if (std::all_of(x.begin(), x.end(), [](Sym v) { return v == 0; })) {
                period = step;
                break;
            }
        }
        if (period == size) ++hamiltonian;

        // odometer step over the coefficients
        for (int c = 0; c < cells; ++c) {
            if (++coeff[static_cast<std::size_t>(c)] < q) break;
            coeff[static_cast<std::size_t>(c)] = 0;
        }
    }
    return hamiltonian;
}

Verdict check_balanced_affine() {
    // the 16 two-input Boolean functions, as truth tables
    int balanced_count = 0;
    for (int table = 0; table < 16; ++table) {
        int ones = __builtin_popcount(static_cast<unsigned>(table));
        if (ones != 2) continue;
        ++balanced_count;
        bool affine = false;
        for (int a0 = 0; a0 < 2 && !affine; ++a0)
            for (int a1 = 0; a1 < 2 && !affine; ++a1)
                for (int a2 = 0; a2 < 2 && !affine; ++a2) {
                    bool match = true;
                    for (int x = 0; x < 4; ++x) {
                        int x1 = x & 1, x2 = (x >> 1) & 1;
                        int f = (table >> x) & 1;
                        if (f != ((a1 * x1 + a2 * x2 + a0) & 1)) match = false;
                    }
                    affine = match;
                }
        if (!affine)
            return make(Status::violated, "balanced-affine", "a balanced 2-input function is not affine",
                        {{"table", table}});
    }
    if (balanced_count != 6)
        return make(Status::violated, "balanced-affine", "expected exactly 6 balanced functions",
                    {{"count", balanced_count}});

    // every permutation with declared degree <= 2 on 3 Boolean nodes is affine
    search::NetworkEnumerator en(3, 2, 2);
    std::uint64_t permutations = 0;
    while (auto net = en.next()) {
        GlobalMap map = global_map(*net);
        if (!is_bijective(map)) continue;
        ++permutations;
        if (!structure::is_affine(map)) {
            json rules = json::array();
            for (const LocalRule& r : net->rules)
                rules.push_back({{"inputs", r.inputs}, {"table", r.table}});
            return make(Status::violated, "balanced-affine",
                        "a degree-<=2 Boolean permutation is not affine", {{"rules", rules}});
        }
    }
    return make(Status::holds, "balanced-affine",
                "6 balanced 2-input functions, all affine; " + std::to_string(permutations) +
                    " degree-<=2 permutations on 3 nodes, all affine");
}

} // namespace anforge::laws
