#include "anforge/core.hpp"

#include <algorithm>
#include <set>
#include <thread>

namespace anforge {

ConfigSpace::ConfigSpace(int n, int q) : n_(n), q_(q) {
    if (n < 1) throw input_error("node count must be >= 1");
    if (q < 2) throw input_error("alphabet size must be >= 2");
    pow_.resize(static_cast<std::size_t>(n) + 1);
    pow_[0] = 1;
    for (int i = 1; i <= n; ++i) {
        if (pow_[i - 1] > UINT64_MAX / static_cast<std::uint64_t>(q))
            throw input_error("q^n overflows 64 bits");
        pow_[i] = pow_[i - 1] * static_cast<std::uint64_t>(q);
    }
    size_ = pow_[static_cast<std::size_t>(n)];
    if (size_ > UINT32_MAX) throw input_error("q^n does not fit the packed index type");
}

Index ConfigSpace::encode(const std::vector<Sym>& digits) const {
    if (static_cast<int>(digits.size()) != n_)
        throw input_error("configuration has the wrong number of digits");
    std::uint64_t x = 0;
    for (int i = n_ - 1; i >= 0; --i) {
        if (digits[static_cast<std::size_t>(i)] >= q_)
            throw input_error("configuration digit out of range");
        x = x * static_cast<std::uint64_t>(q_) + digits[static_cast<std::size_t>(i)];
    }
    return static_cast<Index>(x);
}

std::vector<Sym> ConfigSpace::decode(Index x) const {
    if (x >= size_) throw input_error("configuration index out of range");
    std::vector<Sym> digits(static_cast<std::size_t>(n_));
    std::uint64_t v = x;
    for (int i = 0; i < n_; ++i) {
        digits[static_cast<std::size_t>(i)] = static_cast<Sym>(v % static_cast<std::uint64_t>(q_));
        v /= static_cast<std::uint64_t>(q_);
    }
    return digits;
}

Sym ConfigSpace::digit(Index x, int node) const {
    return static_cast<Sym>((x / pow_[static_cast<std::size_t>(node) - 1]) %
                            static_cast<std::uint64_t>(q_));
}

Index ConfigSpace::with_digit(Index x, int node, Sym value) const {
    std::uint64_t w = pow_[static_cast<std::size_t>(node) - 1];
    std::uint64_t old = digit(x, node);
    return static_cast<Index>(x - old * w + static_cast<std::uint64_t>(value) * w);
}

void ConfigSpace::increment(std::vector<Sym>& digits) const {
    for (int i = 0; i < n_; ++i) {
        auto& d = digits[static_cast<std::size_t>(i)];
        if (++d < q_) return;
        d = 0;
    }
}

std::string ConfigSpace::format(Index x) const {
    std::string s;
    for (int node = 1; node <= n_; ++node) {
        Sym d = digit(x, node);
        if (q_ <= 10) {
            s += static_cast<char>('0' + d);
        } else {
            if (node > 1) s += '.';
            s += std::to_string(d);
        }
    }
    return s;
}

void validate(const AutomataNetwork& net) {
    if (net.n < 1) throw input_error("network must have at least one node");
    if (net.q < 2) throw input_error("network alphabet must have at least two symbols");
    if (static_cast<int>(net.rules.size()) != net.n)
        throw input_error("network must carry exactly one rule per node");
    for (int j = 1; j <= net.n; ++j) {
        const LocalRule& rule = net.rules[static_cast<std::size_t>(j) - 1];
        int prev = 0;
        for (int i : rule.inputs) {
            if (i < 1 || i > net.n) throw input_error("rule input is not a valid node id");
            if (i <= prev) throw input_error("rule inputs must be strictly increasing");
            prev = i;
        }
        std::uint64_t expected = checked_pow(static_cast<std::uint64_t>(net.q),
                                             static_cast<int>(rule.inputs.size()));
        if (rule.table.size() != expected)
            throw input_error("rule table length must be q^{#inputs}");
        for (Sym v : rule.table)
            if (v >= net.q) throw input_error("rule table entry out of range");
    }
}

void validate(const GlobalMap& map) {
    if (map.n < 1) throw input_error("global map must have at least one node");
    if (map.q < 2) throw input_error("global map alphabet must have at least two symbols");
    std::uint64_t size = checked_pow(static_cast<std::uint64_t>(map.q), map.n);
    if (map.images.size() != size) throw input_error("global map must list q^n images");
    for (Index y : map.images)
        if (y >= size) throw input_error("global map image out of range");
}

namespace {

// Pattern of x restricted to the rule's inputs, packed base q.
inline std::uint64_t rule_pattern(const LocalRule& rule, const std::vector<Sym>& x, int q) {
    std::uint64_t pattern = 0;
    std::uint64_t w = 1;
    for (int input : rule.inputs) {
        pattern += w * x[static_cast<std::size_t>(input) - 1];
        w *= static_cast<std::uint64_t>(q);
    }
    return pattern;
}

} // namespace

std::vector<Sym> evaluate(const AutomataNetwork& net, const std::vector<Sym>& x) {
    if (static_cast<int>(x.size()) != net.n)
        throw input_error("configuration has the wrong number of digits");
    for (Sym d : x)
        if (d >= net.q) throw input_error("configuration digit out of range");
    std::vector<Sym> y(static_cast<std::size_t>(net.n));
    for (int j = 0; j < net.n; ++j) {
        const LocalRule& rule = net.rules[static_cast<std::size_t>(j)];
        y[static_cast<std::size_t>(j)] = rule.table[rule_pattern(rule, x, net.q)];
    }
    return y;
}

Index evaluate_packed(const AutomataNetwork& net, Index x) {
    ConfigSpace space(net.n, net.q);
    return space.encode(evaluate(net, space.decode(x)));
}

GlobalMap global_map(const AutomataNetwork& net, int jobs) {
    validate(net);
    std::uint64_t size = require_space(net.n, net.q);
    ConfigSpace space(net.n, net.q);

    GlobalMap map{net.n, net.q, std::vector<Index>(size)};
    auto tabulate_range = [&](std::uint64_t begin, std::uint64_t end) {
        std::vector<Sym> digits = space.decode(static_cast<Index>(begin));
        std::vector<Sym> image(static_cast<std::size_t>(net.n));
        for (std::uint64_t x = begin; x < end; ++x) {
            for (int j = 0; j < net.n; ++j) {
                const LocalRule& rule = net.rules[static_cast<std::size_t>(j)];
                image[static_cast<std::size_t>(j)] = rule.table[rule_pattern(rule, digits, net.q)];
            }
            map.images[x] = space.encode(image);
            space.increment(digits);
        }
    };

    if (jobs <= 1 || size < 4096) {
        tabulate_range(0, size);
    } else {
        std::uint64_t workers = std::min<std::uint64_t>(static_cast<std::uint64_t>(jobs), size);
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(workers));
        std::uint64_t chunk = (size + workers - 1) / workers;
        for (std::uint64_t w = 0; w < workers; ++w) {
            std::uint64_t begin = w * chunk;
            std::uint64_t end = std::min(size, begin + chunk);
            if (begin >= end) break;
            pool.emplace_back(tabulate_range, begin, end);
        }
        for (auto& t : pool) t.join();
    }
    return map;
}

AutomataNetwork from_global_map(const GlobalMap& map) {
    validate(map);
    require_space(map.n, map.q);
    ConfigSpace space(map.n, map.q);

    AutomataNetwork net{map.n, map.q, {}};
    net.rules.resize(static_cast<std::size_t>(map.n));
    std::vector<int> all(static_cast<std::size_t>(map.n));
    for (int i = 0; i < map.n; ++i) all[static_cast<std::size_t>(i)] = i + 1;
    for (int j = 1; j <= map.n; ++j) {
        LocalRule& rule = net.rules[static_cast<std::size_t>(j) - 1];
        rule.inputs = all;
        rule.table.resize(map.images.size());
        for (std::size_t x = 0; x < map.images.size(); ++x)
            rule.table[x] = space.digit(map.images[x], j);
    }
    return net;
}

AutomataNetwork power(const AutomataNetwork& net, int k) {
    validate(net);
    if (k < 1) throw input_error("power exponent must be >= 1");
    std::uint64_t size = require_space(net.n, net.q);
    (void)size;
    ConfigSpace space(net.n, net.q);

    // Nodes reachable to j by a length-k path in the declared graph.
    std::vector<std::set<int>> reach(static_cast<std::size_t>(net.n));
    for (int j = 0; j < net.n; ++j)
        reach[static_cast<std::size_t>(j)] = {net.rules[static_cast<std::size_t>(j)].inputs.begin(),
                                              net.rules[static_cast<std::size_t>(j)].inputs.end()};
    for (int step = 1; step < k; ++step) {
        std::vector<std::set<int>> next(static_cast<std::size_t>(net.n));
        for (int j = 0; j < net.n; ++j)
            for (int mid : net.rules[static_cast<std::size_t>(j)].inputs)
                next[static_cast<std::size_t>(j)].insert(reach[static_cast<std::size_t>(mid) - 1].begin(),
                                                         reach[static_cast<std::size_t>(mid) - 1].end());
        reach = std::move(next);
    }

    AutomataNetwork result{net.n, net.q, {}};
    result.rules.resize(static_cast<std::size_t>(net.n));
    for (int j = 1; j <= net.n; ++j) {
        LocalRule& rule = result.rules[static_cast<std::size_t>(j) - 1];
        rule.inputs.assign(reach[static_cast<std::size_t>(j) - 1].begin(),
                           reach[static_cast<std::size_t>(j) - 1].end());
        std::uint64_t patterns = checked_pow(static_cast<std::uint64_t>(net.q),
                                             static_cast<int>(rule.inputs.size()));
        if (patterns > max_space())
            throw space_limit_error("power rule table exceeds the enumeration limit");
        rule.table.resize(patterns);
        std::vector<Sym> x(static_cast<std::size_t>(net.n), 0);
        for (std::uint64_t pattern = 0; pattern < patterns; ++pattern) {
            std::uint64_t v = pattern;
            for (int input : rule.inputs) {
                x[static_cast<std::size_t>(input) - 1] = static_cast<Sym>(v % net.q);
                v /= static_cast<std::uint64_t>(net.q);
            }
            std::vector<Sym> y = x;
            for (int step = 0; step < k; ++step) y = evaluate(net, y);
            rule.table[pattern] = y[static_cast<std::size_t>(j) - 1];
        }
    }
    (void)space;
    return result;
}

bool is_bijective(const GlobalMap& map) {
    std::vector<bool> seen(map.images.size(), false);
    for (Index y : map.images) {
        if (seen[y]) return false;
        seen[y] = true;
    }
    return true;
}

} // namespace anforge
