"""Hybrid simulated-annealing + Grover QUBO solver toolkit."""

from ._core import (  # noqa: F401
    Backend,
    BruteForceResult,
    CostCircuit,
    GroverBackend,
    HybridRuntime,
    MinFindResult,
    QuboModel,
    ReducedQubo,
    ResourceReport,
    RuntimeParams,
    SaConfig,
    SagroverError,
    SaResult,
    SaturationResult,
    SelfTestReport,
    SelfTestRow,
    SpeedupRow,
    __version__,
    advantage_threshold,
    assignment_from_string,
    assignment_to_string,
    brute_force_min,
    calibrate_tq,
    circuit_cost_table,
    classical_sa,
    demo_model,
    demo_reduced,
    durr_hoyer_min,
    evaluate,
    fix_variables,
    grover_probabilities,
    hybrid_runtime,
    hybrid_runtime_from_calls,
    hybrid_sa,
    optimal_iterations,
    oracle_marks,
    parse_model,
    random_instance,
    run_selftest,
    saturation_q,
    serialize_model,
    speedup_table,
    synthesize_cost_circuit,
)
