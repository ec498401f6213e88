"""Dense tensor-product embeddings and phase-insensitive matrix comparison."""

from __future__ import annotations

from typing import Iterable

import numpy as np

from .circuits import ATOL, Gate, QubitRef, SingleQubitGate, gate_qubits

_I2 = np.eye(2, dtype=complex)
_X = np.array([[0, 1], [1, 0]], dtype=complex)
_P0 = np.array([[1, 0], [0, 0]], dtype=complex)
_P1 = np.array([[0, 0], [0, 1]], dtype=complex)


def _kron_chain(factors: Iterable[np.ndarray]) -> np.ndarray:
    out = np.eye(1, dtype=complex)
    for f in factors:
        out = np.kron(out, f)
    return out


def embed_single(width: int, wire: int, u: np.ndarray) -> np.ndarray:
    """One-qubit operator on the given wire, identity elsewhere; wire 0 is the top factor."""
    return _kron_chain(u if k == wire else _I2 for k in range(width))


def embed_cnot(width: int, control: int, target: int) -> np.ndarray:
    a = _kron_chain(_P0 if k == control else _I2 for k in range(width))
    b = _kron_chain(_P1 if k == control else (_X if k == target else _I2) for k in range(width))
    return a + b


def wire_index(q: QubitRef, partition_sizes: tuple[int, int]) -> int:
    """Global wire number: partition 0 wires first, then partition 1."""
    return q.index if q.partition == 0 else partition_sizes[0] + q.index


def embed_gate(gate: Gate, partition_sizes: tuple[int, int]) -> np.ndarray:
    width = partition_sizes[0] + partition_sizes[1]
    for q in gate_qubits(gate):
        if q.partition not in (0, 1) or not 0 <= q.index < partition_sizes[q.partition]:
            raise ValueError(f"qubit {q} does not fit partitions of sizes {partition_sizes}")
    if isinstance(gate, SingleQubitGate):
        return embed_single(width, wire_index(gate.target, partition_sizes), gate.matrix.as_array())
    if gate.control == gate.target:
        raise ValueError("control and target must be distinct")
    return embed_cnot(width, wire_index(gate.control, partition_sizes),
                      wire_index(gate.target, partition_sizes))


def equal_up_to_phase(a: np.ndarray, b: np.ndarray, atol: float = ATOL) -> bool:
    """True iff a == e^{i theta} b; theta is read off a's largest-magnitude entry."""
    a = np.asarray(a, dtype=complex)
    b = np.asarray(b, dtype=complex)
    if a.shape != b.shape:
        return False
    pivot = np.argmax(np.abs(a))
    pa = a.flat[pivot]
    pb = b.flat[pivot]
    if abs(pb) <= atol:
        # b vanishes where a peaks: equal only if both are (numerically) zero there
        return bool(abs(pa) <= atol and np.max(np.abs(a - b)) <= atol)
    phase = pa / pb
    if abs(abs(phase) - 1.0) > atol:
        return False
    return bool(np.max(np.abs(a - phase * b)) <= atol)
