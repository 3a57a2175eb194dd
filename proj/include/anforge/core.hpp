#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "anforge/config.hpp"
#include "anforge/errors.hpp"

namespace anforge {

using Sym = std::uint16_t;  // one alphabet symbol, 0..q-1
using Index = std::uint32_t; // packed configuration, < q^n

// Base-q positional codec for configurations over n nodes. Node 1 is the
// least significant digit of the packed index, so the digit string printed
// node-1-first reads like the tables in the literature.
class ConfigSpace {
  public:
    ConfigSpace(int n, int q);

    int nodes() const { return n_; }
    int alphabet() const { return q_; }
    std::uint64_t size() const { return size_; }

    Index encode(const std::vector<Sym>& digits) const;
    std::vector<Sym> decode(Index x) const;

    // node is 1-based
    Sym digit(Index x, int node) const;
    Index with_digit(Index x, int node, Sym value) const;
    std::uint64_t weight(int node) const { return pow_[node - 1]; }

    // odometer step over digit vectors, node 1 fastest
    void increment(std::vector<Sym>& digits) const;

    std::string format(Index x) const; // digit string, node 1 leftmost

  private:
    int n_;
    int q_;
    std::uint64_t size_;
    std::vector<std::uint64_t> pow_;
};

struct LocalRule {
    std::vector<int> inputs; // strictly increasing 1-based node ids
    std::vector<Sym> table;  // length q^{inputs.size()}, pattern packed base-q
};

// An automata network F: Q^n -> Q^n given by one lookup-table rule per node.
struct AutomataNetwork {
    int n = 0;
    int q = 0;
    std::vector<LocalRule> rules; // rules[j-1] updates node j
};

// The tabulated dynamics: images[x] = packed F(x) for every configuration.
struct GlobalMap {
    int n = 0;
    int q = 0;
    std::vector<Index> images;
};

void validate(const AutomataNetwork& net);
void validate(const GlobalMap& map);

std::vector<Sym> evaluate(const AutomataNetwork& net, const std::vector<Sym>& x);
Index evaluate_packed(const AutomataNetwork& net, Index x);

// Tabulates F on all q^n configurations (checked against max_space()).
// jobs > 1 splits the index range over that many threads.
GlobalMap global_map(const AutomataNetwork& net, int jobs = 1);

// Inverse of tabulation: every node initially depends on all n nodes;
// input minimization is structure::minimized's job.
AutomataNetwork from_global_map(const GlobalMap& map);

// k-fold composition F^k, k >= 1. The declared inputs of node j are the
// nodes reachable to j by a length-k path in F's declared communication
// graph, so the declared degree is at most d^k.
AutomataNetwork power(const AutomataNetwork& net, int k);

bool is_bijective(const GlobalMap& map);

} // namespace anforge
