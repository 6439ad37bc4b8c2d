"""Site-directed insertion on regular languages (C++ core)."""

from ._sdikit import (
    DecisionReport,
    InputError,
    Nfa,
    ResourceError,
    asdi,
    closed_under_finite,
    equivalent,
    find_insertion,
    finite_into_regular,
    fooling_bound,
    insert_word,
    intersection,
    is_asdi_free,
    is_asdi_independent,
    is_closed_under_sdi,
    is_sdi_free,
    is_sdi_independent,
    is_subset,
    oracle,
    sdi,
    solve,
    state_bound,
    two_var_solvable,
    union,
)

__all__ = [name for name in dir() if not name.startswith("_")]
