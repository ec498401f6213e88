"""Circuit IR for two-partition circuits: qubits, gates, classification, validation."""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from enum import Enum

import numpy as np

# Shared absolute tolerance for every matrix comparison in the package.
ATOL = 1e-9


@dataclass(frozen=True, order=True)
class QubitRef:
    """A qubit named by its home partition (0 or 1) and index within it."""

    partition: int
    index: int

    def __str__(self) -> str:
        return f"p{self.partition}:{self.index}"


@dataclass(frozen=True)
class Unitary2:
    """2x2 complex matrix, row-major entries."""

    u00: complex
    u01: complex
    u10: complex
    u11: complex

    def __post_init__(self) -> None:
        for name in ("u00", "u01", "u10", "u11"):
            object.__setattr__(self, name, complex(getattr(self, name)))

    @classmethod
    def from_array(cls, a: np.ndarray) -> "Unitary2":
        a = np.asarray(a, dtype=complex)
        if a.shape != (2, 2):
            raise ValueError(f"expected a 2x2 array, got shape {a.shape}")
        return cls(a[0, 0], a[0, 1], a[1, 0], a[1, 1])

    def as_array(self) -> np.ndarray:
        return np.array([[self.u00, self.u01], [self.u10, self.u11]], dtype=complex)

    def unitarity_defect(self) -> float:
        """Max-norm distance of U†U from the identity."""
        a = self.as_array()
        return float(np.max(np.abs(a.conj().T @ a - np.eye(2))))

    def is_unitary(self, atol: float = ATOL) -> bool:
        return self.unitarity_defect() <= atol


@dataclass(frozen=True)
class SingleQubitGate:
    """One-qubit gate; name is informational, the matrix is authoritative.

    angle is kept for rotation gates so they serialize back as rx/ry/rz lines.
    """

    id: int
    name: str
    matrix: Unitary2
    target: QubitRef
    angle: float | None = None


@dataclass(frozen=True)
class CnotGate:
    id: int
    control: QubitRef
    target: QubitRef


Gate = SingleQubitGate | CnotGate


class GateClass(Enum):
    SINGLE_QUBIT = "single"
    LOCAL_CNOT = "local-cnot"
    GLOBAL_CNOT = "global-cnot"


def classify(gate: Gate) -> GateClass:
    """Every gate lands in exactly one class; global means the CNOT spans both partitions."""
    if isinstance(gate, SingleQubitGate):
        return GateClass.SINGLE_QUBIT
    if gate.control.partition == gate.target.partition:
        return GateClass.LOCAL_CNOT
    return GateClass.GLOBAL_CNOT


def is_local(gate: Gate) -> bool:
    """True for anything that runs inside one partition (not a global CNOT)."""
    return classify(gate) is not GateClass.GLOBAL_CNOT


def gate_qubits(gate: Gate) -> tuple[QubitRef, ...]:
    if isinstance(gate, SingleQubitGate):
        return (gate.target,)
    return (gate.control, gate.target)


@dataclass(frozen=True)
class Circuit:
    """Gate list over two partitions; gate ids run 1..len(gates) in list order."""

    partition_sizes: tuple[int, int]
    gates: tuple[Gate, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "partition_sizes", tuple(self.partition_sizes))
        object.__setattr__(self, "gates", tuple(self.gates))

    @property
    def width(self) -> int:
        return self.partition_sizes[0] + self.partition_sizes[1]

    @property
    def size(self) -> int:
        return len(self.gates)


def global_gates(circuit: Circuit) -> tuple[CnotGate, ...]:
    """The global CNOTs in circuit order; empty when the circuit never crosses."""
    return tuple(g for g in circuit.gates if classify(g) is GateClass.GLOBAL_CNOT)


_SQ2 = 1.0 / math.sqrt(2.0)

_FIXED: dict[str, Unitary2] = {
    "I": Unitary2(1, 0, 0, 1),
    "X": Unitary2(0, 1, 1, 0),
    "Y": Unitary2(0, -1j, 1j, 0),
    "Z": Unitary2(1, 0, 0, -1),
    "H": Unitary2(_SQ2, _SQ2, _SQ2, -_SQ2),
    "T": Unitary2(1, 0, 0, cmath.exp(1j * math.pi / 4)),
}

_ROTATIONS = ("RX", "RY", "RZ")

GATE_NAMES = tuple(_FIXED) + _ROTATIONS


def named_gate(name: str, angle: float | None = None) -> Unitary2:
    """Matrix for a named gate; rotations take a half-turn angle in radians."""
    key = name.upper()
    if key in _FIXED:
        if angle is not None:
            raise ValueError(f"gate {key} takes no angle")
        return _FIXED[key]
    if key in _ROTATIONS:
        if angle is None:
            raise ValueError(f"gate {key} requires an angle")
        half = angle / 2.0
        c, s = math.cos(half), math.sin(half)
        if key == "RX":
            return Unitary2(c, -1j * s, -1j * s, c)
        if key == "RY":
            return Unitary2(c, -s, s, c)
        return Unitary2(cmath.exp(-1j * half), 0, 0, cmath.exp(1j * half))
    raise ValueError(f"unknown gate name {name!r}")


def single_gate(gate_id: int, name: str, target: QubitRef, angle: float | None = None) -> SingleQubitGate:
    """Convenience constructor: build a single-qubit gate from its name."""
    return SingleQubitGate(gate_id, name.upper(), named_gate(name, angle), target, angle)


@dataclass(frozen=True)
class Violation:
    """One validation finding; gate_id is None for circuit-level problems."""

    gate_id: int | None
    message: str


def validate(circuit: Circuit) -> list[Violation]:
    """Check structural invariants; a well-formed circuit returns []."""
    out: list[Violation] = []
    n0, n1 = circuit.partition_sizes
    if n0 < 1 or n1 < 1:
        out.append(Violation(None, f"partition sizes must be positive, got ({n0}, {n1})"))
    for pos, gate in enumerate(circuit.gates, start=1):
        if gate.id != pos:
            out.append(Violation(
                gate.id,
                f"gate id {gate.id} at position {pos}; ids must run 1..{circuit.size} in order"))
        for q in gate_qubits(gate):
            if q.partition not in (0, 1):
                out.append(Violation(gate.id, f"qubit {q} names partition {q.partition}; must be 0 or 1"))
            elif not 0 <= q.index < circuit.partition_sizes[q.partition]:
                out.append(Violation(
                    gate.id,
                    f"qubit {q} out of range for partition of size {circuit.partition_sizes[q.partition]}"))
        if isinstance(gate, CnotGate) and gate.control == gate.target:
            out.append(Violation(gate.id, "control and target must be distinct"))
        if isinstance(gate, SingleQubitGate) and not gate.matrix.is_unitary():
            out.append(Violation(
                gate.id, f"matrix is not unitary (defect {gate.matrix.unitarity_defect():.3g})"))
    return out
