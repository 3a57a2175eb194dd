#pragma once

#include <cstdint>
#include <string>

#include <json.hpp>

#include "anforge/core.hpp"

namespace anforge::laws {

enum class Status { holds, violated, not_applicable };

const char* to_string(Status s);

// Outcome of one executable check. On violation, witness carries enough
// data (the offending cylinder, fixed points, orphan, cycle list, ...) to
// reproduce the failure independently.
struct Verdict {
    Status status = Status::holds;
    std::string law;
    std::string detail;
    nlohmann::json witness;

    bool ok() const { return status != Status::violated; }
};

// Divisibility of every cylinder preimage count |F^{-1}([u])| by
// q^{n - |U| d}, over all U with |U| <= min(floor(n/d), max_subset).
// d must be an upper bound on the degree of F.
Verdict check_local_rigidity(const AutomataNetwork& net, int d, int max_subset = 3);

// fp(F) <= q^n - q^{n-d} for non-identity F, with d the essential degree
// (clamped to >= 1; a constant map still sits in funs(n,q,1)).
Verdict check_fixed_point_bound(const AutomataNetwork& net);

// rk(F) <= q^n - (n + log_q 2)/(d + log_q 2) for non-bijective F, checked
// by exact power comparison q^{y0 d} 2^{y0} >= 2 q^n; and rk(F) <= q^n - 2
// when d < n.
Verdict check_rank_bound(const AutomataNetwork& net);

// max_y |F^{-1}(y)| <= q^n - q^{n-d} for non-constant F.
Verdict check_preimage_bound(const AutomataNetwork& net);

// Centralized bijections over q = 2 with n >= 3 and degree < n have an
// even number of limit cycles.
Verdict check_parity_theorem(const AutomataNetwork& net);

// Gray code maps need degree >= log2 n and at least n log2 n arcs in G(F),
// checked as 2^degree >= n and 2^arcs >= n^n.
Verdict check_gray_degree(const AutomataNetwork& net);

// For q = 2 and degree <= 2: non-bijective F has rk(F) <= 2^n - 2^{n-2}.
Verdict check_rank_bound_boolean(const AutomataNetwork& net);

// Number of Hamiltonian maps among all affine F(x) = Ax + v over GF(q)^n,
// q prime. Hamiltonicity tested by orbit-walking from 0.
std::uint64_t affine_hamiltonian_search(int q, int n);

// Exactly 6 of the 16 two-input Boolean functions are balanced, each of
// them affine; and every permutation realizable with declared degree <= 2
// on n <= 3 Boolean nodes is an affine network.
Verdict check_balanced_affine();

} // namespace anforge::laws
