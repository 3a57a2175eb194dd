"""Bounded-degree automata network toolkit.

Thin wrapper around the compiled extension; the full feature set lives in
the C++ library and the `anforge` CLI.
"""

from anforge._core import (  # noqa: F401
    AutomataNetwork,
    BudgetError,
    GlobalMap,
    InputError,
    SpaceLimitError,
    UnsupportedError,
    affine_hamiltonian_search,
    bdd,
    bdig,
    certificate,
    check_fixed_point_bound,
    check_gray_degree,
    check_local_rigidity,
    check_parity_theorem,
    check_preimage_bound,
    check_rank_bound,
    circular_shift,
    cycle_lengths,
    fixed_points,
    from_global_map,
    fsr_with_max_cycle,
    gray_metrics,
    identity_network,
    is_hamiltonian,
    is_near_hamiltonian,
    isomorphic,
    max_space,
    near_hamiltonian,
    parity,
    preimage_summary,
    rank,
    rank_deficient_base,
    rank_q_n_minus_2,
    reflected_gray_successor,
    set_max_space,
)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
