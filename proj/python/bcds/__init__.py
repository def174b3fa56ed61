"""Budgeted connected dominating set and edge-vertex domination solvers."""

from ._bcds import (
    CapacityError,
    DisconnectedError,
    InfeasibleError,
    InputError,
    closed_neighborhood,
    decompose_tree,
    greedy_dominating_set,
    oracle,
    qst_exact,
    random_connected,
    run_cli,
    solve_bcds,
    solve_bevd,
    solve_pevd,
)

__all__ = [
    "CapacityError",
    "DisconnectedError",
    "InfeasibleError",
    "InputError",
    "closed_neighborhood",
    "decompose_tree",
    "greedy_dominating_set",
    "oracle",
    "qst_exact",
    "random_connected",
    "run_cli",
    "solve_bcds",
    "solve_bevd",
    "solve_pevd",
]
