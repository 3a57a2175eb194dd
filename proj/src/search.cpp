#include "anforge/search.hpp"

#include <algorithm>
#include <unordered_set>

#include "anforge/dynamics.hpp"
#include "anforge/structure.hpp"

namespace anforge::search {

namespace {

std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b) {
    if (a != 0 && b > UINT64_MAX / a) return UINT64_MAX;
    return a * b;
}

std::uint64_t saturating_pow(std::uint64_t base, std::uint64_t exp) {
    std::uint64_t r = 1;
    for (std::uint64_t i = 0; i < exp; ++i) {
        r = saturating_mul(r, base);
        if (r == UINT64_MAX) return r;
    }
    return r;
}

// all subsets of 1..n with size <= d, ordered by (size, lexicographic)
std::vector<std::vector<int>> neighborhood_choices(int n, int d) {
    std::vector<std::vector<int>> hoods;
    hoods.push_back({});
    for (int size = 1; size <= std::min(n, d); ++size) {
        std::vector<int> pick(static_cast<std::size_t>(size));
        for (int i = 0; i < size; ++i) pick[static_cast<std::size_t>(i)] = i + 1;
        while (true) {
            hoods.push_back(pick);
            int i = size - 1;
            while (i >= 0 && pick[static_cast<std::size_t>(i)] == n - size + 1 + i) --i;
            if (i < 0) break;
            ++pick[static_cast<std::size_t>(i)];
            for (int t = i + 1; t < size; ++t)
                pick[static_cast<std::size_t>(t)] = pick[static_cast<std::size_t>(t) - 1] + 1;
        }
    }
    return hoods;
}

} // namespace

NetworkEnumerator::NetworkEnumerator(int n, int q, int d) : n_(n), q_(q) {
    if (n < 1 || q < 2 || d < 0) throw input_error("enumeration needs n >= 1, q >= 2, d >= 0");
    neighborhoods = neighborhood_choices(n, d);
    table_count.resize(neighborhoods.size());
    for (std::size_t h = 0; h < neighborhoods.size(); ++h) {
        std::uint64_t patterns = saturating_pow(static_cast<std::uint64_t>(q),
                                                neighborhoods[h].size());
        std::uint64_t tables =
            patterns == UINT64_MAX ? UINT64_MAX
                                   : saturating_pow(static_cast<std::uint64_t>(q), patterns);
        if (tables == UINT64_MAX)
            throw space_limit_error("degree-" + std::to_string(d) +
                                    " network family too large to enumerate");
        table_count[h] = tables;
    }
    hood_at.assign(static_cast<std::size_t>(n), 0);
    table_at.assign(static_cast<std::size_t>(n), 0);
}

std::uint64_t NetworkEnumerator::count(int n, int q, int d) {
    std::uint64_t per_node = 0;
    for (const auto& hood : neighborhood_choices(n, d)) {
        std::uint64_t patterns = saturating_pow(static_cast<std::uint64_t>(q), hood.size());
        std::uint64_t tables = saturating_pow(static_cast<std::uint64_t>(q), patterns);
        per_node = per_node > UINT64_MAX - tables ? UINT64_MAX : per_node + tables;
    }
    return saturating_pow(per_node, static_cast<std::uint64_t>(n));
}

AutomataNetwork NetworkEnumerator::current() const {
    AutomataNetwork net{n_, q_, {}};
    net.rules.resize(static_cast<std::size_t>(n_));
    for (int j = 0; j < n_; ++j) {
        LocalRule& rule = net.rules[static_cast<std::size_t>(j)];
        rule.inputs = neighborhoods[hood_at[static_cast<std::size_t>(j)]];
        std::uint64_t patterns = checked_pow(static_cast<std::uint64_t>(q_),
                                             static_cast<int>(rule.inputs.size()));
        rule.table.resize(patterns);
        std::uint64_t v = table_at[static_cast<std::size_t>(j)];
        for (std::uint64_t p = 0; p < patterns; ++p) {
            rule.table[p] = static_cast<Sym>(v % static_cast<std::uint64_t>(q_));
            v /= static_cast<std::uint64_t>(q_);
        }
    }
    return net;
}

bool NetworkEnumerator::advance() {
    // odometer over (hood, table) per node, last node fastest
    for (int j = n_ - 1; j >= 0; --j) {
        auto sj = static_cast<std::size_t>(j);
        if (++table_at[sj] < table_count[hood_at[sj]]) return true;
        table_at[sj] = 0;
        if (++hood_at[sj] < neighborhoods.size()) return true;
        hood_at[sj] = 0;
    }
    return false;
}

std::optional<AutomataNetwork> NetworkEnumerator::next() {
    if (done_) return std::nullopt;
    if (fresh_) {
        fresh_ = false;
    } else if (!advance()) {
        done_ = true;
        return std::nullopt;
    }
    ++emitted_;
    return current();
}

bool bdig(const AutomataNetwork& net, int d) {
    if (d < 0) throw input_error("degree bound must be >= 0");
    return structure::degree(net) <= d;
}

const char* to_string(BddStatus s) {
    switch (s) {
        case BddStatus::found: return "found";
        case BddStatus::no_exhausted: return "no (exhausted)";
        default: return "unknown (budget exceeded)";
    }
}

BddResult bdd(const GlobalMap& target, int d, const SearchBudget& budget) {
    validate(target);
    dynamics::CanonicalForm wanted = dynamics::canonical_form(target);

    BddResult result;
    NetworkEnumerator en(target.n, target.q, d);
    std::unordered_set<std::string> seen_images; // dedup before canonizing
    std::uint64_t evaluations = 0;
    while (auto cand = en.next()) {
        if (result.candidates >= budget.max_candidates ||
            evaluations >= budget.max_evaluations) {
            result.status = BddStatus::budget_exceeded;
            return result;
        }
        ++result.candidates;
        GlobalMap map = global_map(*cand);
        evaluations += map.images.size();
        std::string key(reinterpret_cast<const char*>(map.images.data()),
                        map.images.size() * sizeof(Index));
        if (!seen_images.insert(std::move(key)).second) continue;
        ++result.distinct_maps;
        if (dynamics::canonical_form(map).certificate == wanted.certificate) {
            result.status = BddStatus::found;
            result.witness = std::move(*cand);
            return result;
        }
    }
    result.status = BddStatus::no_exhausted;
    return result;
}

} // namespace anforge::search
