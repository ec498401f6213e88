"""Teleportation-count optimization for circuits split across two partitions."""

from .circuits import (ATOL, Circuit, CnotGate, Gate, GateClass, QubitRef,
                       SingleQubitGate, Unitary2, Violation, classify,
                       gate_qubits, global_gates, is_local, named_gate,
                       single_gate, validate)
from .commute import (MAX_ORACLE_QUBITS, CommuteMode, commutes_with_x,
                      is_diagonal, matrix_commute_oracle, non_commute)
from .linalg import embed_gate, equal_up_to_phase
from .oracle import (MAX_ORACLE_GATES, MAX_ORACLE_GLOBAL, MAX_UNITARY_QUBITS,
                     OracleBudgetError, OracleResult, brute_force_min,
                     circuit_unitary, config_min_teleports, gate_unitaries,
                     phase_reorder_pairs, random_circuit, random_corpus,
                     verify_schedule)
from .schedule import (ConfigArr, MigrationState, ScheduleResult,
                       TeleportEvent, execution_site, min_teleportation,
                       non_execute, remote_qubit, replay_ok, site_assignment)
from .search import (DEFAULT_MAX_GLOBAL, ConfigOutcome, ConfigSpaceError,
                     OptimizationReport, config_from_index, optimize)
from .textio import (CircuitDocument, ParseError, format_event_sequence,
                     parse_circuit, render_report, report_from_json,
                     report_to_json, serialize_circuit)

__version__ = "0.1.0"

__all__ = [
    "ATOL", "Circuit", "CnotGate", "Gate", "GateClass", "QubitRef",
    "SingleQubitGate", "Unitary2", "Violation", "classify", "gate_qubits",
    "global_gates", "is_local", "named_gate", "single_gate", "validate",
    "MAX_ORACLE_QUBITS", "CommuteMode", "commutes_with_x", "is_diagonal",
    "matrix_commute_oracle", "non_commute",
    "embed_gate", "equal_up_to_phase",
    "MAX_ORACLE_GATES", "MAX_ORACLE_GLOBAL", "MAX_UNITARY_QUBITS",
    "OracleBudgetError", "OracleResult", "brute_force_min", "circuit_unitary",
    "config_min_teleports", "gate_unitaries", "phase_reorder_pairs",
    "random_circuit", "random_corpus", "verify_schedule",
    "ConfigArr", "MigrationState", "ScheduleResult", "TeleportEvent",
    "execution_site", "min_teleportation", "non_execute", "remote_qubit",
    "replay_ok", "site_assignment",
    "DEFAULT_MAX_GLOBAL", "ConfigOutcome", "ConfigSpaceError",
    "OptimizationReport", "config_from_index", "optimize",
    "CircuitDocument", "ParseError", "format_event_sequence", "parse_circuit",
    "render_report", "report_from_json", "report_to_json", "serialize_circuit",
    "__version__",
]
