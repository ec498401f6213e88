"""Shared generators and transforms for the test suite."""

from __future__ import annotations

import math

from hypothesis import strategies as st

from dqcopt import (Circuit, CnotGate, ConfigArr, QubitRef, SingleQubitGate,
                    TeleportEvent, Unitary2, named_gate, single_gate)

angles = st.floats(min_value=-2 * math.pi, max_value=2 * math.pi, allow_nan=False)


@st.composite
def unitary2s(draw) -> Unitary2:
    """Random 2x2 unitary built from Euler angles (well-conditioned floats)."""
    a, b, c = draw(angles), draw(angles), draw(angles)
    m = (named_gate("RZ", a).as_array()
         @ named_gate("RY", b).as_array()
         @ named_gate("RZ", c).as_array())
    return Unitary2.from_array(m)


@st.composite
def qubit_refs(draw, sizes: tuple[int, int]) -> QubitRef:
    p = draw(st.integers(0, 1))
    return QubitRef(p, draw(st.integers(0, sizes[p] - 1)))


@st.composite
def gates_at(draw, gate_id: int, sizes: tuple[int, int]):
    kinds = ["named", "rotation", "raw", "global_cnot"]
    if max(sizes) >= 2:
        kinds.append("local_cnot")
    kind = draw(st.sampled_from(kinds))
    if kind == "named":
        name = draw(st.sampled_from(["I", "X", "Y", "Z", "H", "T"]))
        return single_gate(gate_id, name, draw(qubit_refs(sizes)))
    if kind == "rotation":
        name = draw(st.sampled_from(["RX", "RY", "RZ"]))
        return single_gate(gate_id, name, draw(qubit_refs(sizes)), draw(angles))
    if kind == "raw":
        return SingleQubitGate(gate_id, "U", draw(unitary2s()), draw(qubit_refs(sizes)))
    if kind == "global_cnot":
        cp = draw(st.integers(0, 1))
        control = QubitRef(cp, draw(st.integers(0, sizes[cp] - 1)))
        target = QubitRef(1 - cp, draw(st.integers(0, sizes[1 - cp] - 1)))
        return CnotGate(gate_id, control, target)
    p = draw(st.sampled_from([p for p in (0, 1) if sizes[p] >= 2]))
    i = draw(st.integers(0, sizes[p] - 1))
    j = draw(st.integers(0, sizes[p] - 1).filter(lambda k: k != i))
    return CnotGate(gate_id, QubitRef(p, i), QubitRef(p, j))


@st.composite
def circuits(draw, max_qubits: int = 6, max_gates: int = 8) -> Circuit:
    n0 = draw(st.integers(1, max_qubits - 1))
    n1 = draw(st.integers(1, max_qubits - n0))
    sizes = (n0, n1)
    count = draw(st.integers(0, max_gates))
    gates = tuple(draw(gates_at(gid, sizes)) for gid in range(1, count + 1))
    return Circuit(sizes, gates)


def mirror_qubit(q: QubitRef) -> QubitRef:
    return QubitRef(1 - q.partition, q.index)


def mirror_circuit(c: Circuit) -> Circuit:
    """Swap the partition labels everywhere; gate ids keep their order."""
    gates = []
    for g in c.gates:
        if isinstance(g, CnotGate):
            gates.append(CnotGate(g.id, mirror_qubit(g.control), mirror_qubit(g.target)))
        else:
            gates.append(SingleQubitGate(g.id, g.name, g.matrix, mirror_qubit(g.target), g.angle))
    return Circuit((c.partition_sizes[1], c.partition_sizes[0]), tuple(gates))


def mirror_cfg(cfg: ConfigArr) -> ConfigArr:
    return ConfigArr(tuple(1 - b for b in cfg.bits))


def mirror_event(e: TeleportEvent) -> TeleportEvent:
    return TeleportEvent(e.gate_id, e.role, 1 - e.src, 1 - e.dst, e.kind)


def z_tail_circuit() -> Circuit:
    """Two unrelated global CNOTs followed by Z on the second target.

    Under the permissive rule set the Z hops over the still-waiting second
    CNOT in every configuration, so the best schedule always fails unitary
    verification; under the strict rules every schedule passes.
    """
    gates = (
        CnotGate(1, QubitRef(0, 0), QubitRef(1, 0)),
        CnotGate(2, QubitRef(0, 1), QubitRef(1, 1)),
        single_gate(3, "Z", QubitRef(1, 1)),
    )
    return Circuit((2, 2), gates)
