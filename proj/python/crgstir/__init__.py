from ._core import (
    CapExceeded,
    alternating_sum,
    artin_hilbert,
    beta_phi,
    enumerate_partitions,
    inv,
    lattice,
    ordered_q_stirling,
    q_stirling1,
    q_stirling2,
    run_cli,
    run_suite,
    standard_form,
    stirling1,
    stirling2,
    suite_names,
    super_artin_hilbert,
    super_q_stirling,
    super_stirling_generating,
)

__all__ = [
    "CapExceeded",
    "alternating_sum",
    "artin_hilbert",
    "beta_phi",
    "enumerate_partitions",
    "inv",
    "lattice",
    "ordered_q_stirling",
    "q_stirling1",
    "q_stirling2",
    "run_cli",
    "run_suite",
    "standard_form",
    "stirling1",
    "stirling2",
    "suite_names",
    "super_artin_hilbert",
    "super_q_stirling",
    "super_stirling_generating",
]
