"""Independent checks: exhaustive schedule search and full-unitary equivalence."""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from functools import reduce
from typing import Sequence

import numpy as np

from .circuits import (ATOL, Circuit, CnotGate, GateClass, QubitRef, classify,
                       gate_qubits, global_gates, single_gate)
from .commute import CommuteMode, non_commute
from .linalg import embed_gate, equal_up_to_phase
from .schedule import ConfigArr, ScheduleResult, TeleportEvent
from .search import config_from_index

# Desk-scale caps for the exhaustive search and the dense unitary builder.
MAX_ORACLE_GATES = 12
MAX_ORACLE_GLOBAL = 6
MAX_UNITARY_QUBITS = 10

DEFAULT_STATE_LIMIT = 1_000_000


class OracleBudgetError(RuntimeError):
    """The exhaustive search hit its explored-state budget."""


@dataclass(frozen=True)
class OracleResult:
    min_n_t: int
    witness_schedule: ScheduleResult
    explored_states: int


def _check_scale(circuit: Circuit) -> None:
    if circuit.size > MAX_ORACLE_GATES:
        raise ValueError(f"{circuit.size} gates exceed the exhaustive-search cap of {MAX_ORACLE_GATES}")
    m_g = len(global_gates(circuit))
    if m_g > MAX_ORACLE_GLOBAL:
        raise ValueError(f"{m_g} global gates exceed the exhaustive-search cap of {MAX_ORACLE_GLOBAL}")


class _ConfigSearch:
    """Fewest teleports for one site assignment, by depth-first search.

    States are the set of gates still pending, held as a bitmask over list
    positions.  Executing an eligible gate never hurts (it can only unblock
    others), so eligible gates run eagerly: a single ascending pass reaches the
    closure because a gate is blocked only by pending gates earlier in the
    list.  The choice points are which (qubit, site) migration to buy next;
    each costs the migrate plus its return.  Memoized on the pending mask at
    round boundaries.
    """

    def __init__(self, circuit: Circuit, cfg: ConfigArr, mode: CommuteMode,
                 limit: int, counter: list[int]):
        gates = circuit.gates
        self.gates = gates
        self.m = len(gates)
        self.counter = counter
        self.limit = limit
        self.memo: dict[int, tuple[int, tuple[QubitRef, int]]] = {}
        self.qubits = [gate_qubits(g) for g in gates]
        self.blockers = [0] * self.m
        for i in range(self.m):
            for j in range(i):
                if non_commute(gates[i], gates[j], mode):
                    self.blockers[i] |= 1 << j
        positions = [k for k, g in enumerate(gates) if classify(g) is GateClass.GLOBAL_CNOT]
        if len(cfg.bits) != len(positions):
            raise ValueError(f"configuration has {len(cfg.bits)} bits for {len(positions)} global gates")
        self.site: dict[int, int] = {}
        self.remote: dict[int, QubitRef] = {}
        for pos, bit in zip(positions, cfg.bits):
            gate = gates[pos]
            assert isinstance(gate, CnotGate)
            self.site[pos] = bit
            self.remote[pos] = gate.control if gate.control.partition != bit else gate.target

    def _eligible(self, pos: int, mig: tuple[QubitRef, int] | None) -> bool:
        if pos in self.site:
            return mig is not None and mig == (self.remote[pos], self.site[pos])
        if mig is None:
            return True
        return mig[0] not in self.qubits[pos]

    def closure(self, mask: int, mig: tuple[QubitRef, int] | None) -> tuple[int, list[int]]:
        executed: list[int] = []
        for pos in range(self.m):
            bit = 1 << pos
            if not mask & bit:
                continue
            if mask & self.blockers[pos]:
                continue
            if not self._eligible(pos, mig):
                continue
            mask &= ~bit
            executed.append(pos)
        return mask, executed

    def _candidates(self, mask: int) -> list[tuple[QubitRef, int]]:
        out: list[tuple[QubitRef, int]] = []
        for pos in range(self.m):
            if mask & (1 << pos) and pos in self.site:
                c = (self.remote[pos], self.site[pos])
                if c not in out:
                    out.append(c)
        return out

    def solve(self, mask: int) -> int:
        mask, _ = self.closure(mask, None)
        if mask == 0:
            return 0
        hit = self.memo.get(mask)
        if hit is not None:
            return hit[0]
        self.counter[0] += 1
        if self.counter[0] > self.limit:
            raise OracleBudgetError(f"explored more than {self.limit} states")
        best = -1
        choice: tuple[QubitRef, int] | None = None
        for mig in self._candidates(mask):
            after, executed = self.closure(mask, mig)
            if not executed:
                continue
            cost = 2 + self.solve(after)
            if best < 0 or cost < best:
                best, choice = cost, mig
        if choice is None:
            raise RuntimeError("no migration makes progress; circuit is malformed")
        self.memo[mask] = (best, choice)
        return best

    def witness(self) -> ScheduleResult:
        """Rebuild one optimal schedule from the memo filled in by solve()."""
        events: list[TeleportEvent] = []
        order: list[int] = []
        mask, executed = self.closure((1 << self.m) - 1, None)
        order.extend(executed)
        while mask:
            _, (qubit, site) = self.memo[mask]
            anchor_pos = min(pos for pos in self.site
                             if mask & (1 << pos)
                             and self.site[pos] == site and self.remote[pos] == qubit)
            anchor = self.gates[anchor_pos]
            assert isinstance(anchor, CnotGate)
            role = "C" if qubit == anchor.control else "T"
            events.append(TeleportEvent(anchor.id, role, qubit.partition, site, "migrate"))
            mask, executed = self.closure(mask, (qubit, site))
            order.extend(executed)
            events.append(TeleportEvent(anchor.id, role, site, qubit.partition, "return"))
            mask, executed = self.closure(mask, None)
            order.extend(executed)
        return ScheduleResult(len(events), tuple(events),
                              tuple(self.gates[pos].id for pos in order))


def config_min_teleports(circuit: Circuit, cfg: ConfigArr,
                         mode: CommuteMode = CommuteMode.STRICT,
                         limit: int = DEFAULT_STATE_LIMIT) -> OracleResult:
    """Exhaustive minimum teleport count for one site assignment."""
    _check_scale(circuit)
    counter = [0]
    search = _ConfigSearch(circuit, cfg, mode, limit, counter)
    best = search.solve((1 << circuit.size) - 1)
    witness = search.witness()
    assert witness.n_t == best
    return OracleResult(best, witness, counter[0])


def brute_force_min(circuit: Circuit, mode: CommuteMode = CommuteMode.STRICT,
                    limit: int = DEFAULT_STATE_LIMIT) -> OracleResult:
    """Exhaustive minimum over all (configuration, interleaving, order) choices.

    Ties between configurations resolve to the lowest index.  explored_states
    sums the memoized states across configurations; limit caps that total.
    """
    _check_scale(circuit)
    m_g = len(global_gates(circuit))
    counter = [0]
    best: tuple[int, ScheduleResult] | None = None
    for index in range(1 << m_g):
        cfg = config_from_index(index, m_g)
        search = _ConfigSearch(circuit, cfg, mode, limit, counter)
        n_t = search.solve((1 << circuit.size) - 1)
        if best is None or n_t < best[0]:
            best = (n_t, search.witness())
    assert best is not None
    return OracleResult(best[0], best[1], counter[0])


def gate_unitaries(circuit: Circuit) -> dict[int, np.ndarray]:
    """Full-register unitary per gate id; width capped at MAX_UNITARY_QUBITS."""
    if circuit.width > MAX_UNITARY_QUBITS:
        raise ValueError(f"width {circuit.width} exceeds the dense cap of {MAX_UNITARY_QUBITS} qubits")
    return {g.id: embed_gate(g, circuit.partition_sizes) for g in circuit.gates}


def circuit_unitary(circuit: Circuit, order: Sequence[int] | None = None) -> np.ndarray:
    """Product of the embedded gates; later gates multiply on the left.

    order, when given, must be a permutation of the gate ids.
    """
    mats = gate_unitaries(circuit)
    ids = [g.id for g in circuit.gates]
    if order is None:
        order = ids
    elif sorted(order) != sorted(ids):
        raise ValueError("order must be a permutation of the circuit's gate ids")
    dim = 2 ** circuit.width
    return reduce(lambda acc, gid: mats[gid] @ acc, order, np.eye(dim, dtype=complex))


def verify_schedule(circuit: Circuit, result: ScheduleResult, atol: float = ATOL) -> bool:
    """Does executing in the schedule's order preserve the circuit unitary
    up to a global phase?"""
    reference = circuit_unitary(circuit)
    reordered = circuit_unitary(circuit, result.executed_order)
    return equal_up_to_phase(reference, reordered, atol)


def phase_reorder_pairs(circuit: Circuit, result: ScheduleResult) -> list[tuple[int, int]]:
    """Inverted pairs (earlier id, later id) in the executed order that the
    permissive rule set treats as commuting but the strict one does not.
    These are the only swaps that can break unitary equivalence."""
    position = {gid: k for k, gid in enumerate(result.executed_order)}
    out: list[tuple[int, int]] = []
    gates = circuit.gates
    for i, late in enumerate(gates):
        for j in range(i):
            early = gates[j]
            if (position[late.id] < position[early.id]
                    and non_commute(late, early, CommuteMode.STRICT)
                    and not non_commute(late, early, CommuteMode.PERMISSIVE)):
                out.append((early.id, late.id))
    return out


_CORPUS_KINDS = ("H", "T", "X", "Z", "RZ", "local_cnot", "global_cnot")


def random_circuit(rng: random.Random, max_qubits: int = 8, max_gates: int = 10,
                   max_global: int = 5) -> Circuit:
    """One random two-partition circuit; sizes, gate count and kinds all seeded."""
    n0 = rng.randint(1, max_qubits - 1)
    n1 = rng.randint(1, max_qubits - n0)
    sizes = (n0, n1)
    count = rng.randint(1, max_gates)
    gates = []
    n_global = 0
    for gate_id in range(1, count + 1):
        while True:
            kind = rng.choice(_CORPUS_KINDS)
            if kind == "global_cnot" and n_global >= max_global:
                continue
            if kind == "local_cnot" and max(sizes) < 2:
                continue
            break
        if kind == "global_cnot":
            cp = rng.randint(0, 1)
            control = QubitRef(cp, rng.randrange(sizes[cp]))
            target = QubitRef(1 - cp, rng.randrange(sizes[1 - cp]))
            gates.append(CnotGate(gate_id, control, target))
            n_global += 1
        elif kind == "local_cnot":
            p = rng.choice([p for p in (0, 1) if sizes[p] >= 2])
            i, j = rng.sample(range(sizes[p]), 2)
            gates.append(CnotGate(gate_id, QubitRef(p, i), QubitRef(p, j)))
        else:
            p = rng.randint(0, 1)
            target = QubitRef(p, rng.randrange(sizes[p]))
            angle = rng.uniform(-math.pi, math.pi) if kind == "RZ" else None
            gates.append(single_gate(gate_id, kind, target, angle))
    return Circuit(sizes, tuple(gates))


def random_corpus(seed: int, count: int, **kwargs) -> list[Circuit]:
    """Deterministic list of random circuits for a given seed."""
    rng = random.Random(seed)
    return [random_circuit(rng, **kwargs) for _ in range(count)]
