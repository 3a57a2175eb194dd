#include "anforge/constructions.hpp"

#include <algorithm>
#include <set>

#include "anforge/dynamics.hpp"
#include "anforge/galois.hpp"
#include "anforge/structure.hpp"

namespace anforge::constructions {

namespace {

LocalRule copy_rule(int source, int q) {
    LocalRule rule;
    rule.inputs = {source};
    rule.table.resize(static_cast<std::size_t>(q));
    for (int v = 0; v < q; ++v) rule.table[static_cast<std::size_t>(v)] = static_cast<Sym>(v);
    return rule;
}

} // namespace

AutomataNetwork identity_network(int n, int q) {
    require_space(n, q);
    AutomataNetwork net{n, q, {}};
    for (int i = 1; i <= n; ++i) net.rules.push_back(copy_rule(i, q));
    return net;
}

AutomataNetwork constant_network(int n, int q, Sym value) {
    require_space(n, q);
    if (value >= q) throw input_error("constant symbol out of range");
    AutomataNetwork net{n, q, {}};
    for (int i = 1; i <= n; ++i) net.rules.push_back(LocalRule{{}, {value}});
    return net;
}

AutomataNetwork circular_shift(int n, int q) {
    require_space(n, q);
    AutomataNetwork net{n, q, {}};
    net.rules.push_back(copy_rule(n, q));
    for (int i = 2; i <= n; ++i) net.rules.push_back(copy_rule(i - 1, q));
    return net;
}

AutomataNetwork shift_along(const std::vector<int>& cycle, int n, int q) {
    require_space(n, q);
    if (static_cast<int>(cycle.size()) != n)
        throw input_error("cycle must visit every node exactly once");
    std::vector<int> in_neighbor(static_cast<std::size_t>(n) + 1, 0);
    std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
    for (std::size_t t = 0; t < cycle.size(); ++t) {
        int from = cycle[t];
        int to = cycle[(t + 1) % cycle.size()];
        if (from < 1 || from > n || seen[static_cast<std::size_t>(from)])
            throw input_error("cycle must visit every node exactly once");
        seen[static_cast<std::size_t>(from)] = true;
        in_neighbor[static_cast<std::size_t>(to)] = from;
    }
    AutomataNetwork net{n, q, {}};
    for (int i = 1; i <= n; ++i)
        net.rules.push_back(copy_rule(in_neighbor[static_cast<std::size_t>(i)], q));
    return net;
}

DeBruijnCycle de_bruijn_cycle(int q, int n, std::uint64_t k, std::uint64_t budget) {
    std::uint64_t size = require_space(n, q);
    if (k < 1 || k > size) throw input_error("cycle length must be in 1..q^n");
    ConfigSpace space(n, q);
    std::uint64_t shift = size / static_cast<std::uint64_t>(q); // q^{n-1}

    // word successor with symbol b: drop the first symbol, append b
    auto successor = [&](Index w, int b) {
        return static_cast<Index>(w / static_cast<std::uint64_t>(q) +
                                  static_cast<std::uint64_t>(b) * shift);
    };
    auto closes = [&](Index w, Index v0) { return v0 % shift == w / static_cast<std::uint64_t>(q); };

    std::vector<char> on_path(size, 0);
    std::uint64_t steps = 0;
    for (std::uint64_t s = 0; s < size; ++s) {
        Index v0 = static_cast<Index>(s);
        std::vector<Index> path{v0};
        std::vector<int> cursor{0}; // next symbol to try per frame
        on_path[v0] = 1;
        while (!path.empty()) {
            if (++steps > budget) throw budget_error("de Bruijn cycle search budget exceeded");
            if (path.size() == k) {
                if (closes(path.back(), v0)) {
                    DeBruijnCycle cycle{q, n, k, {}};
                    cycle.vertices.reserve(path.size());
                    for (Index w : path) cycle.vertices.push_back(space.decode(w));
                    for (Index w : path) on_path[w] = 0;
                    return cycle;
                }
                on_path[path.back()] = 0;
                path.pop_back();
                cursor.pop_back();
                continue;
            }
            int& b = cursor.back();
            bool pushed = false;
            while (b < q) {
                Index w = successor(path.back(), b++);
                if (!on_path[w]) {
                    path.push_back(w);
                    on_path[w] = 1;
                    cursor.push_back(0);
                    pushed = true;
                    break;
                }
            }
            if (!pushed) {
                on_path[path.back()] = 0;
                path.pop_back();
                cursor.pop_back();
            }
        }
    }
    throw input_error("no de Bruijn cycle of the requested length"); // unreachable for valid k
}

AutomataNetwork fsr_from_feedback(const LocalRule& g, int n, int q) {
    require_space(n, q);
    AutomataNetwork net{n, q, {}};
    for (int i = 1; i < n; ++i) net.rules.push_back(copy_rule(i + 1, q));
    net.rules.push_back(g);
    validate(net);
    return net;
}

AutomataNetwork fsr_with_max_cycle(int q, int n, std::uint64_t k) {
    DeBruijnCycle cycle = de_bruijn_cycle(q, n, k);
    ConfigSpace space(n, q);
    LocalRule g;
    for (int i = 1; i <= n; ++i) g.inputs.push_back(i);
    g.table.assign(space.size(), 0);
    for (std::size_t t = 0; t < cycle.vertices.size(); ++t) {
        Index w = space.encode(cycle.vertices[t]);
        Index next = space.encode(cycle.vertices[(t + 1) % cycle.vertices.size()]);
        g.table[w] = space.digit(next, n);
    }
    return fsr_from_feedback(g, n, q);
}

AutomataNetwork near_hamiltonian(int q, int n) {
    std::uint32_t p = 0, m = 0;
    if (!galois::prime_power(q, p, m)) throw input_error("alphabet size must be a prime power");
    if (n < 2) throw input_error("near-Hamiltonian construction needs n >= 2");
    require_space(n, q);

    galois::SymbolField field(q);
    std::vector<Sym> poly = galois::find_primitive_polynomial_over(field, n);

    AutomataNetwork net{n, q, {}};
    net.rules.resize(static_cast<std::size_t>(n));
    // f_1(x) = -p_0 x_n; f_i(x) = x_{i-1} - p_{i-1} x_n
    {
        LocalRule& rule = net.rules[0];
        rule.inputs = {n};
        rule.table.resize(static_cast<std::size_t>(q));
        for (int b = 0; b < q; ++b)
            rule.table[static_cast<std::size_t>(b)] =
                field.neg(field.mul(poly[0], static_cast<Sym>(b)));
    }
    for (int i = 2; i <= n; ++i) {
        LocalRule& rule = net.rules[static_cast<std::size_t>(i) - 1];
        Sym coeff = poly[static_cast<std::size_t>(i) - 1];
        if (coeff == 0) {
            rule = copy_rule(i - 1, q);
            continue;
        }
        rule.inputs = {i - 1, n};
        rule.table.resize(static_cast<std::size_t>(q) * q);
        for (int b = 0; b < q; ++b)
            for (int a = 0; a < q; ++a)
                rule.table[static_cast<std::size_t>(b) * q + a] =
                    field.sub(static_cast<Sym>(a), field.mul(coeff, static_cast<Sym>(b)));
    }
    return net;
}

AutomataNetwork rank_deficient_base(int q) {
    if (q < 3 || q % 2 == 0) throw input_error("base construction needs odd q >= 3");
    require_space(3, q);
    AutomataNetwork net{3, q, {}};
    net.rules.resize(3);

    LocalRule& f1 = net.rules[0];
    f1.inputs = {1, 3};
    f1.table.resize(static_cast<std::size_t>(q) * q);
    for (int x3 = 0; x3 < q; ++x3)
        for (int x1 = 0; x1 < q; ++x1)
            f1.table[static_cast<std::size_t>(x3) * q + x1] =
                static_cast<Sym>(x1 >= 2 ? x1 : (x1 + x3) % 2);

    LocalRule& f2 = net.rules[1];
    f2.inputs = {1, 2};
    f2.table.resize(static_cast<std::size_t>(q) * q);
    for (int x2 = 0; x2 < q; ++x2)
        for (int x1 = 0; x1 < q; ++x1) {
            int v;
            if (x1 >= 2)
                v = x2;
            else if (x2 != 0)
                v = (x1 + x2) % q;
            else
                v = x1 == 0 ? 1 : 0;
            f2.table[static_cast<std::size_t>(x2) * q + x1] = static_cast<Sym>(v);
        }

    LocalRule& f3 = net.rules[2];
    f3.inputs = {2, 3};
    f3.table.resize(static_cast<std::size_t>(q) * q);
    for (int x3 = 0; x3 < q; ++x3)
        for (int x2 = 0; x2 < q; ++x2)
            f3.table[static_cast<std::size_t>(x3) * q + x2] =
                static_cast<Sym>(x2 != 0 ? x3 : (x3 + 1) % q);

    return net;
}

AutomataNetwork split_alphabet(const AutomataNetwork& net, int q, int ell) {
    validate(net);
    if (q < 2 || ell < 1) throw input_error("split needs q >= 2 and ell >= 1");
    if (checked_pow(static_cast<std::uint64_t>(q), ell) != static_cast<std::uint64_t>(net.q))
        throw input_error("alphabet of the network must be exactly q^ell");
    int n_new = net.n * ell;
    require_space(n_new, q);

    AutomataNetwork out{n_new, q, {}};
    out.rules.resize(static_cast<std::size_t>(n_new));
    for (int j = 1; j <= net.n; ++j) {
        const LocalRule& rule = net.rules[static_cast<std::size_t>(j) - 1];
        std::vector<int> inputs;
        for (int i : rule.inputs)
            for (int t = 1; t <= ell; ++t) inputs.push_back((i - 1) * ell + t);
        std::uint64_t patterns = checked_pow(static_cast<std::uint64_t>(q),
                                             static_cast<int>(inputs.size()));
        if (patterns > max_space())
            throw space_limit_error("split rule table exceeds the enumeration limit");

        std::vector<Sym> digits(inputs.size());
        for (int t = 1; t <= ell; ++t) {
            LocalRule& split = out.rules[static_cast<std::size_t>((j - 1) * ell + t) - 1];
            split.inputs = inputs;
            split.table.resize(patterns);
        }
        for (std::uint64_t pattern = 0; pattern < patterns; ++pattern) {
            std::uint64_t v = pattern;
            for (std::size_t d = 0; d < digits.size(); ++d) {
                digits[d] = static_cast<Sym>(v % static_cast<std::uint64_t>(q));
                v /= static_cast<std::uint64_t>(q);
            }
            // reassemble the original symbols (little-endian digit blocks)
            std::uint64_t orig_pattern = 0;
            std::uint64_t w = 1;
            for (std::size_t block = 0; block < rule.inputs.size(); ++block) {
                std::uint64_t symbol = 0;
                for (int t = ell - 1; t >= 0; --t)
                    symbol = symbol * static_cast<std::uint64_t>(q) +
                             digits[block * static_cast<std::size_t>(ell) + static_cast<std::size_t>(t)];
                orig_pattern += symbol * w;
                w *= static_cast<std::uint64_t>(net.q);
            }
            std::uint64_t y = rule.table[orig_pattern];
            for (int t = 1; t <= ell; ++t) {
                out.rules[static_cast<std::size_t>((j - 1) * ell + t) - 1].table[pattern] =
                    static_cast<Sym>(y % static_cast<std::uint64_t>(q));
                y /= static_cast<std::uint64_t>(q);
            }
        }
    }
    return out;
}

AutomataNetwork control_extension(const AutomataNetwork& net, int r) {
    validate(net);
    if (r != 1 && r != 2) throw input_error("control extension needs r in {1, 2}");
    int n_new = net.n + r;
    require_space(n_new, net.q);

    AutomataNetwork out{n_new, net.q, {}};
    out.rules.resize(static_cast<std::size_t>(n_new));
    for (int j = 1; j <= net.n; ++j) {
        const LocalRule& rule = net.rules[static_cast<std::size_t>(j) - 1];
        LocalRule& ext = out.rules[static_cast<std::size_t>(j) - 1];
        std::set<int> inputs(rule.inputs.begin(), rule.inputs.end());
        inputs.insert(j);
        for (int c = net.n + 1; c <= n_new; ++c) inputs.insert(c);
        ext.inputs.assign(inputs.begin(), inputs.end());
        std::uint64_t patterns = checked_pow(static_cast<std::uint64_t>(net.q),
                                             static_cast<int>(ext.inputs.size()));
        ext.table.resize(patterns);

        std::vector<Sym> digits(ext.inputs.size());
        for (std::uint64_t pattern = 0; pattern < patterns; ++pattern) {
            std::uint64_t v = pattern;
            for (std::size_t d = 0; d < digits.size(); ++d) {
                digits[d] = static_cast<Sym>(v % static_cast<std::uint64_t>(net.q));
                v /= static_cast<std::uint64_t>(net.q);
            }
            auto digit_of = [&](int node) {
                auto it = std::lower_bound(ext.inputs.begin(), ext.inputs.end(), node);
                return digits[static_cast<std::size_t>(it - ext.inputs.begin())];
            };
            bool control_zero = true;
            for (int c = net.n + 1; c <= n_new; ++c)
                if (digit_of(c) != 0) control_zero = false;
            if (!control_zero) {
                ext.table[pattern] = digit_of(j);
            } else {
                std::uint64_t orig_pattern = 0;
                std::uint64_t w = 1;
                for (int i : rule.inputs) {
                    orig_pattern += static_cast<std::uint64_t>(digit_of(i)) * w;
                    w *= static_cast<std::uint64_t>(net.q);
                }
                ext.table[pattern] = rule.table[orig_pattern];
            }
        }
    }
    for (int c = net.n + 1; c <= n_new; ++c)
        out.rules[static_cast<std::size_t>(c) - 1] = copy_rule(c, net.q);
    return out;
}

AutomataNetwork rank_q_n_minus_2(int q, int n) {
    if (q < 3 || q % 2 == 0) throw input_error("rank construction needs odd q >= 3");
    if (n < 3) throw input_error("rank construction needs n >= 3");
    int ell = n / 3;
    int r = n % 3;
    std::uint64_t base_alphabet = checked_pow(static_cast<std::uint64_t>(q), ell);
    if (base_alphabet > 4096) throw input_error("q^(n/3) is too large to tabulate");
    AutomataNetwork base = rank_deficient_base(static_cast<int>(base_alphabet));
    AutomataNetwork split = split_alphabet(base, q, ell);
    return r == 0 ? split : control_extension(split, r);
}

GlobalMap apply_swaps(const GlobalMap& map, const SwapSequence& swaps) {
    validate(map);
    GlobalMap out = map;
    // F o (x1<->y1) o ... o (xk<->yk) applied left to right: composing with
    // one transposition on the right swaps the two image entries.
    for (auto [x, y] : swaps.pairs) {
        if (x == y) throw input_error("swap pair must name two distinct configurations");
        if (x >= out.images.size() || y >= out.images.size())
            throw input_error("swap pair out of range");
        std::swap(out.images[x], out.images[y]);
    }
    return out;
}

namespace {

std::vector<int> cycle_in_neighbors(const std::vector<int>& cycle, int n) {
    if (static_cast<int>(cycle.size()) != n)
        throw input_error("cycle must visit every node exactly once");
    std::vector<int> in_neighbor(static_cast<std::size_t>(n) + 1, 0);
    std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
    for (std::size_t t = 0; t < cycle.size(); ++t) {
        int from = cycle[t];
        int to = cycle[(t + 1) % cycle.size()];
        if (from < 1 || from > n || seen[static_cast<std::size_t>(from)])
            throw input_error("cycle must visit every node exactly once");
        seen[static_cast<std::size_t>(from)] = true;
        in_neighbor[static_cast<std::size_t>(to)] = from;
    }
    return in_neighbor;
}

void require_cycle_in_graph(const structure::InteractionGraph& g, const std::vector<int>& cycle) {
    for (std::size_t t = 0; t < cycle.size(); ++t) {
        int from = cycle[t];
        int to = cycle[(t + 1) % cycle.size()];
        if (!g.has_arc(from, to))
            throw input_error("cycle is not a Hamiltonian cycle of the interaction graph");
    }
}

std::vector<std::uint64_t> weights_against(const GlobalMap& map,
                                           const std::vector<int>& in_neighbor) {
    ConfigSpace space(map.n, map.q);
    std::vector<std::uint64_t> w(static_cast<std::size_t>(map.n) + 1, 0);
    for (std::size_t x = 0; x < map.images.size(); ++x)
        for (int i = 1; i <= map.n; ++i) {
            int j = in_neighbor[static_cast<std::size_t>(i)];
            if (space.digit(static_cast<Index>(x), j) == 0 &&
                space.digit(map.images[x], i) == 1)
                ++w[static_cast<std::size_t>(i)];
        }
    return w;
}

} // namespace

WeightedCycle weight(const AutomataNetwork& net, const std::vector<int>& cycle) {
    validate(net);
    if (net.q != 2) throw unsupported_error("weights are defined for q = 2 only");
    structure::InteractionGraph g = structure::interaction_graph(net);
    require_cycle_in_graph(g, cycle);
    std::vector<int> in_neighbor = cycle_in_neighbors(cycle, net.n);
    GlobalMap map = global_map(net);

    WeightedCycle wc;
    wc.cycle = cycle;
    std::vector<std::uint64_t> w = weights_against(map, in_neighbor);
    wc.per_node_weight.assign(w.begin() + 1, w.end());
    for (std::uint64_t v : wc.per_node_weight) wc.total += v;
    return wc;
}

SwapSequence swap_decomposition(const AutomataNetwork& net, const std::vector<int>& cycle) {
    validate(net);
    if (net.q != 2) throw unsupported_error("swap decomposition is defined for q = 2 only");
    GlobalMap current = global_map(net);
    if (!is_bijective(current)) throw input_error("swap decomposition needs a bijective network");
    structure::InteractionGraph g = structure::interaction_graph(net);
    if (!structure::is_centralized(g))
        throw input_error("swap decomposition needs a centralized interaction graph");
    require_cycle_in_graph(g, cycle);
    std::vector<int> in_neighbor = cycle_in_neighbors(cycle, net.n);

    ConfigSpace space(net.n, net.q);
    GlobalMap target = global_map(shift_along(cycle, net.n, net.q));

    SwapSequence swaps;
    std::vector<std::uint64_t> w = weights_against(current, in_neighbor);
    std::uint64_t remaining = 0;
    for (int i = 1; i <= net.n; ++i) remaining += w[static_cast<std::size_t>(i)];
    std::uint64_t guard = remaining;

    while (remaining > 0) {
        // node with positive weight whose deletion leaves the current
        // interaction graph acyclic; the decomposition argument guarantees
        // one exists
        structure::InteractionGraph gc =
            structure::interaction_graph(from_global_map(current));
        int pivot = 0;
        for (int i = 1; i <= net.n && pivot == 0; ++i)
            if (w[static_cast<std::size_t>(i)] > 0 && structure::acyclic_after_deleting(gc, i))
                pivot = i;
        if (pivot == 0) throw std::logic_error("swap decomposition lost its pivot node");
        int j = in_neighbor[static_cast<std::size_t>(pivot)];

        Index y = 0;
        bool found = false;
        for (std::uint64_t x = 0; x < current.images.size() && !found; ++x)
            if (space.digit(static_cast<Index>(x), j) == 0 &&
                space.digit(current.images[x], pivot) == 1) {
                y = static_cast<Index>(x);
                found = true;
            }
        if (!found) throw std::logic_error("swap decomposition lost its swap witness");
        Index y2 = space.with_digit(y, j, 1);
        swaps.pairs.emplace_back(y, y2);
        std::swap(current.images[y], current.images[y2]);

        w = weights_against(current, in_neighbor);
        std::uint64_t total = 0;
        for (int i = 1; i <= net.n; ++i) total += w[static_cast<std::size_t>(i)];
        if (total != remaining - 1)
            throw std::logic_error("swap decomposition did not reduce the weight by one");
        remaining = total;
        if (swaps.pairs.size() > guard)
            throw std::logic_error("swap decomposition exceeded its weight bound");
    }
    if (current.images != target.images)
        throw std::logic_error("swap decomposition did not reach the shift map");
    return swaps;
}

AutomataNetwork tight_fixed_point_example(int q, int n, int d) {
    require_space(n, q);
    if (d < 1 || d > n) throw input_error("block size d must be in 1..n");
    AutomataNetwork net{n, q, {}};
    net.rules.resize(static_cast<std::size_t>(n));
    LocalRule& f1 = net.rules[0];
    for (int i = 1; i <= d; ++i) f1.inputs.push_back(i);
    std::uint64_t patterns = checked_pow(static_cast<std::uint64_t>(q), d);
    f1.table.resize(patterns);
    // identity on x_1 unless the whole block is zero, then the derangement
    // s -> s+1 applied to x_1 = 0
    for (std::uint64_t pattern = 0; pattern < patterns; ++pattern)
        f1.table[pattern] = pattern == 0 ? static_cast<Sym>(1)
                                         : static_cast<Sym>(pattern % static_cast<std::uint64_t>(q));
    for (int i = 2; i <= n; ++i) net.rules[static_cast<std::size_t>(i) - 1] = copy_rule(i, q);
    return net;
}

AutomataNetwork tight_preimage_example(int q, int n, int d) {
    require_space(n, q);
    if (d < 1 || d > n) throw input_error("block size d must be in 1..n");
    AutomataNetwork net{n, q, {}};
    net.rules.resize(static_cast<std::size_t>(n));
    LocalRule& f1 = net.rules[0];
    for (int i = 1; i <= d; ++i) f1.inputs.push_back(i);
    std::uint64_t patterns = checked_pow(static_cast<std::uint64_t>(q), d);
    f1.table.resize(patterns);
    for (std::uint64_t pattern = 0; pattern < patterns; ++pattern)
        f1.table[pattern] = pattern == 0 ? 1 : 0;
    for (int i = 2; i <= n; ++i) net.rules[static_cast<std::size_t>(i) - 1] = LocalRule{{}, {0}};
    return net;
}

AutomataNetwork tight_rank_example_boolean(int n) {
    if (n < 2) throw input_error("the AND example needs n >= 2");
    require_space(n, 2);
    AutomataNetwork net{n, 2, {}};
    net.rules.resize(static_cast<std::size_t>(n));
    net.rules[0].inputs = {1, 2};
    net.rules[0].table = {0, 0, 0, 1};
    for (int i = 2; i <= n; ++i) net.rules[static_cast<std::size_t>(i) - 1] = copy_rule(i, 2);
    return net;
}

GlobalMap reflected_gray_successor(int n) {
    std::uint64_t size = require_space(n, 2);
    GlobalMap map{n, 2, std::vector<Index>(size)};
    auto gray = [](std::uint64_t t) { return t ^ (t >> 1); };
    for (std::uint64_t t = 0; t < size; ++t)
        map.images[gray(t)] = static_cast<Index>(gray((t + 1) % size));
    return map;
}

} // namespace anforge::constructions
