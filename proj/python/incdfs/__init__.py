"""Incremental DFS tree maintenance for undirected graphs, digraphs and DAGs."""

from ._core import (
    Dfs,
    DfsTree,
    StickProfile,
    StreamState,
    compute_pc,
    fit_exponent,
    gen_gnm,
    gen_gnp,
    max_edges,
    predict_stick,
    run_experiment,
    stick_profile,
)

ALGORITHMS = ("sdfs", "sdfs-int", "fdfs", "adfs1", "adfs2", "sdfs2", "sdfs3")

__all__ = [
    "ALGORITHMS",
    "Dfs",
    "DfsTree",
    "StickProfile",
    "StreamState",
    "compute_pc",
    "fit_exponent",
    "gen_gnm",
    "gen_gnp",
    "max_edges",
    "predict_stick",
    "run_experiment",
    "stick_profile",
]
