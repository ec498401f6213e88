"""Pairwise gate commutation: structural rules plus a dense-matrix cross-check."""

from __future__ import annotations

from enum import Enum

from .circuits import ATOL, CnotGate, Gate, SingleQubitGate, Unitary2, gate_qubits
from .linalg import embed_gate, equal_up_to_phase

# Widest register the dense cross-check will embed.
MAX_ORACLE_QUBITS = 12


class CommuteMode(Enum):
    """Rule set for reordering gates.

    STRICT admits only swaps that leave the whole-circuit unitary unchanged up
    to a global phase.  PERMISSIVE additionally treats matrices that conjugate
    X to -X as commuting with a CNOT on their qubit; the sign there is
    control-conditioned, so permissive reorderings can change the circuit by a
    conditional phase.  Teleportation counts are comparable either way.
    """

    STRICT = "strict"
    PERMISSIVE = "paper"


def is_diagonal(u: Unitary2, atol: float = ATOL) -> bool:
    return abs(u.u01) <= atol and abs(u.u10) <= atol


def commutes_with_x(u: Unitary2, mode: CommuteMode = CommuteMode.STRICT, atol: float = ATOL) -> bool:
    """Does u pass a CNOT acting on its qubit as target?

    STRICT requires xu == ux exactly (second row is the first reversed).
    PERMISSIVE also accepts xu == -ux (second row is the first reversed and negated).
    """
    if abs(u.u10 - u.u01) <= atol and abs(u.u11 - u.u00) <= atol:
        return True
    if mode is CommuteMode.PERMISSIVE:
        return abs(u.u10 + u.u01) <= atol and abs(u.u11 + u.u00) <= atol
    return False


def _mats_commute_up_to_phase(a: Unitary2, b: Unitary2, atol: float) -> bool:
    am, bm = a.as_array(), b.as_array()
    return equal_up_to_phase(am @ bm, bm @ am, atol)


def non_commute(g: Gate, h: Gate, mode: CommuteMode = CommuteMode.STRICT, atol: float = ATOL) -> bool:
    """True iff g and h may not swap places.  Symmetric in its gate arguments.

    Gates on disjoint qubits always commute.  CNOT pairs collide exactly when
    the control of one is the target of the other.  A single-qubit gate passes
    a CNOT on its control iff it is diagonal, and passes a CNOT on its target
    per commutes_with_x.  Two single-qubit gates on one qubit commute when
    their matrices do, up to a scalar phase.
    """
    shared = set(gate_qubits(g)) & set(gate_qubits(h))
    if not shared:
        return False
    if isinstance(g, CnotGate) and isinstance(h, CnotGate):
        return g.control == h.target or h.control == g.target
    if isinstance(g, SingleQubitGate) and isinstance(h, SingleQubitGate):
        # same qubit; settle it at the matrix level
        return not _mats_commute_up_to_phase(g.matrix, h.matrix, atol)
    single, cnot = (g, h) if isinstance(g, SingleQubitGate) else (h, g)
    if single.target == cnot.control:
        return not is_diagonal(single.matrix, atol)
    return not commutes_with_x(single.matrix, mode, atol)


def matrix_commute_oracle(g: Gate, h: Gate, partition_sizes: tuple[int, int],
                          atol: float = ATOL) -> bool:
    """Dense ground truth: embed both gates over the full register and test
    whether the two products agree up to a global phase.

    partition_sizes fixes the wire order (partition 0 first); the total width
    is capped at MAX_ORACLE_QUBITS.
    """
    width = partition_sizes[0] + partition_sizes[1]
    if width > MAX_ORACLE_QUBITS:
        raise ValueError(f"width {width} exceeds the dense-check cap of {MAX_ORACLE_QUBITS} qubits")
    ug = embed_gate(g, partition_sizes)
    uh = embed_gate(h, partition_sizes)
    return equal_up_to_phase(ug @ uh, uh @ ug, atol)
