"""Statevector simulation of Grover search with phase-rotated diffusion schedules."""

__version__ = "0.1.0"

from .statevector import (
    HADAMARD,
    MAX_DENSE_QUBITS,
    MAX_QUBITS,
    PAULI_X,
    PAULI_Z,
    OneQubitGate,
    SizeLimitError,
    StateVector,
    apply_controlled_one_qubit_gate,
    apply_one_qubit_gate,
    basis_state,
    dense_operator_of,
    phase_flip_indices,
    target_probability,
    uniform_superposition,
)
from .grover import (
    GroverConfig,
    HybridOrder,
    IterationRecord,
    MarkedSet,
    RatioInterpretation,
    RunTrace,
    Schedule,
    ScheduleKind,
    adaptive_phase,
    apply_oracle,
    default_max_iterations,
    fixed_phase,
    gate_hr_y,
    gate_r_y,
    gate_ry_h,
    gate_zr_y,
    modified_diffusion,
    n_optimal_standard,
    run_grover,
    schedule_phase,
    standard_diffusion_gates,
    standard_diffusion_mean,
)
from .analysis import (
    ComparisonRow,
    RecurrenceState,
    SuccessModel,
    SweepReport,
    amplitude_ratio,
    find_peak_iteration,
    optimal_phase_search,
    recurrence_table,
    simulated_amplitude_series,
    success_probability_modified,
    success_probability_standard,
    sweep_compare,
    theoretical_complexity,
)

__all__ = [
    "__version__",
    # statevector
    "HADAMARD",
    "MAX_DENSE_QUBITS",
    "MAX_QUBITS",
    "PAULI_X",
    "PAULI_Z",
    "OneQubitGate",
    "SizeLimitError",
    "StateVector",
    "apply_controlled_one_qubit_gate",
    "apply_one_qubit_gate",
    "basis_state",
    "dense_operator_of",
    "phase_flip_indices",
    "target_probability",
    "uniform_superposition",
    # grover
    "GroverConfig",
    "HybridOrder",
    "IterationRecord",
    "MarkedSet",
    "RatioInterpretation",
    "RunTrace",
    "Schedule",
    "ScheduleKind",
    "adaptive_phase",
    "apply_oracle",
    "default_max_iterations",
    "fixed_phase",
    "gate_hr_y",
    "gate_r_y",
    "gate_ry_h",
    "gate_zr_y",
    "modified_diffusion",
    "n_optimal_standard",
    "run_grover",
    "schedule_phase",
    "standard_diffusion_gates",
    "standard_diffusion_mean",
    # analysis
    "ComparisonRow",
    "RecurrenceState",
    "SuccessModel",
    "SweepReport",
    "amplitude_ratio",
    "find_peak_iteration",
    "optimal_phase_search",
    "recurrence_table",
    "simulated_amplitude_series",
    "success_probability_modified",
    "success_probability_standard",
    "sweep_compare",
    "theoretical_complexity",
]
