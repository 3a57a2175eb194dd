#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "anforge/core.hpp"

namespace anforge::search {

struct SearchBudget {
    std::uint64_t max_candidates = 1'000'000;
    std::uint64_t max_evaluations = UINT64_MAX; // total tabulated configurations
};

// Deterministic stream of all networks with n nodes over q symbols and
// declared degree <= d: per node, in-neighborhoods ordered by (size, lex)
// and tables by packed value; the last node's choice varies fastest.
class NetworkEnumerator {
  public:
    NetworkEnumerator(int n, int q, int d);

    std::optional<AutomataNetwork> next();
    std::uint64_t emitted() const { return emitted_; }

    // Closed-form count (sum over neighborhood choices of q^{q^k}, to the
    // n-th power), saturating at UINT64_MAX.
    static std::uint64_t count(int n, int q, int d);

  private:
    AutomataNetwork current() const;
    bool advance();

    int n_;
    int q_;
    std::vector<std::vector<int>> neighborhoods; // ordered choices
    std::vector<std::size_t> hood_at;            // per node
    std::vector<std::uint64_t> table_at;         // per node, packed table value
    std::vector<std::uint64_t> table_count;      // per hood size, q^{q^k}
    bool done_ = false;
    bool fresh_ = true;
    std::uint64_t emitted_ = 0;
};

// Bounded-degree interaction graph: is the degree of G(F) at most d?
// Exact, by exhaustive dependency witness scan.
bool bdig(const AutomataNetwork& net, int d);

enum class BddStatus { found, no_exhausted, budget_exceeded };

const char* to_string(BddStatus s);

struct BddResult {
    BddStatus status = BddStatus::no_exhausted;
    std::optional<AutomataNetwork> witness;
    std::uint64_t candidates = 0;    // declared networks examined
    std::uint64_t distinct_maps = 0; // distinct global maps canonized
};

// Bounded-degree dynamics: search for a network of declared degree <= d
// whose dynamics graph is isomorphic to target, by canonical-form brute
// force over the candidate stream. "no" is reported only when the stream
// was fully exhausted within budget; running out of budget is a distinct
// verdict, never conflated with a proven no.
BddResult bdd(const GlobalMap& target, int d, const SearchBudget& budget = {});

} // namespace anforge::search
