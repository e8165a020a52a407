"""Gravity-induced many-body entanglement of masses in spatial superposition."""

from ._gravent import (
    Bipartition,
    GraventError,
    PhaseMatrix,
    all_bipartitions,
    compare_engines,
    concurrence_three_body,
    concurrence_two_body,
    connectivity,
    entangling_phases_from_setup,
    genuine_entanglement,
    ghz_condition,
    iconcurrence,
    iconcurrence_oracle,
    lambda_series,
    meyer_wallach_qk,
    one_vs_rest_bipartitions,
    pair_concurrence_oracle,
    pairwise_concurrence,
    qk_oracle,
    report,
    run_config,
    separability_times,
    state_vector,
    three_tangle,
)

__all__ = [
    "Bipartition",
    "GraventError",
    "PhaseMatrix",
    "all_bipartitions",
    "compare_engines",
    "concurrence_three_body",
    "concurrence_two_body",
    "connectivity",
    "entangling_phases_from_setup",
    "genuine_entanglement",
    "ghz_condition",
    "iconcurrence",
    "iconcurrence_oracle",
    "lambda_series",
    "meyer_wallach_qk",
    "one_vs_rest_bipartitions",
    "pair_concurrence_oracle",
    "pairwise_concurrence",
    "qk_oracle",
    "report",
    "run_config",
    "separability_times",
    "state_vector",
    "three_tangle",
]
