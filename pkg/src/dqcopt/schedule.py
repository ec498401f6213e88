"""Greedy one-migration-at-a-time scheduler for a fixed site assignment."""

from __future__ import annotations

from dataclasses import dataclass

from .circuits import (Circuit, CnotGate, Gate, GateClass, QubitRef, classify,
                       gate_qubits, global_gates, is_local)
from .commute import CommuteMode, non_commute


@dataclass(frozen=True)
class ConfigArr:
    """Execution site (0 or 1) per global gate, in circuit order of those gates."""

    bits: tuple[int, ...]

    def __post_init__(self) -> None:
        bits = tuple(int(b) for b in self.bits)
        if any(b not in (0, 1) for b in bits):
            raise ValueError(f"config bits must be 0 or 1, got {self.bits!r}")
        object.__setattr__(self, "bits", bits)

    def __len__(self) -> int:
        return len(self.bits)


@dataclass(frozen=True)
class MigrationState:
    """At most one qubit lives outside its home partition at any time."""

    qubit: QubitRef | None = None
    at_partition: int | None = None

    def __post_init__(self) -> None:
        if (self.qubit is None) != (self.at_partition is None):
            raise ValueError("qubit and at_partition must be set together")
        if self.qubit is not None and self.at_partition != 1 - self.qubit.partition:
            raise ValueError(f"{self.qubit} can only migrate to partition {1 - self.qubit.partition}")

    @property
    def empty(self) -> bool:
        return self.qubit is None


@dataclass(frozen=True)
class TeleportEvent:
    """One qubit teleportation.  role is 'C' when the moved qubit is the
    anchoring gate's control, 'T' when it is the target."""

    gate_id: int
    role: str
    src: int
    dst: int
    kind: str

    def __post_init__(self) -> None:
        if self.role not in ("C", "T"):
            raise ValueError(f"role must be 'C' or 'T', got {self.role!r}")
        if self.kind not in ("migrate", "return"):
            raise ValueError(f"kind must be 'migrate' or 'return', got {self.kind!r}")
        if self.src == self.dst:
            raise ValueError("teleportation must change partition")

    def label(self) -> str:
        return f"g{self.gate_id}({self.role})"


@dataclass(frozen=True)
class ScheduleResult:
    n_t: int
    events: tuple[TeleportEvent, ...]
    executed_order: tuple[int, ...]

    def migrations(self) -> tuple[TeleportEvent, ...]:
        return tuple(e for e in self.events if e.kind == "migrate")


def site_assignment(circuit: Circuit, cfg: ConfigArr) -> dict[int, int]:
    """Map gate id -> execution partition for every global gate under cfg."""
    gg = global_gates(circuit)
    if len(cfg.bits) != len(gg):
        raise ValueError(f"configuration has {len(cfg.bits)} bits for {len(gg)} global gates")
    return {g.id: bit for g, bit in zip(gg, cfg.bits)}


def execution_site(circuit: Circuit, gate: Gate, cfg: ConfigArr) -> int:
    """Partition where a global gate runs under cfg."""
    if classify(gate) is not GateClass.GLOBAL_CNOT:
        raise ValueError(f"gate {gate.id} is not a global CNOT; only global gates have a site")
    return site_assignment(circuit, cfg)[gate.id]


def remote_qubit(gate: CnotGate, site: int) -> QubitRef:
    """The operand of a global CNOT homed outside its execution site."""
    return gate.control if gate.control.partition != site else gate.target


def _non_execute(mig: MigrationState, anchor_site: int, candidate: Gate,
                 sites: dict[int, int]) -> bool:
    # Local gates are shut out only while they touch the migrated qubit.
    if is_local(candidate):
        return mig.qubit in gate_qubits(candidate)
    site = sites[candidate.id]
    if site != anchor_site:
        return True
    # Same site: rides along only if it needs exactly the qubit already moved.
    return remote_qubit(candidate, site) != mig.qubit


def non_execute(circuit: Circuit, mig: MigrationState, anchor: CnotGate,
                candidate: Gate, cfg: ConfigArr) -> bool:
    """Whether candidate is barred from running during anchor's migration round."""
    if mig.empty:
        raise ValueError("no qubit is migrated")
    sites = site_assignment(circuit, cfg)
    return _non_execute(mig, sites[anchor.id], candidate, sites)


def min_teleportation(circuit: Circuit, cfg: ConfigArr,
                      mode: CommuteMode = CommuteMode.STRICT,
                      final_return: bool = True) -> ScheduleResult:
    """Greedy schedule for one site assignment.

    Rounds repeat until the gate list drains: run leading local gates as they
    come; migrate the remote qubit of the first remaining (necessarily global)
    gate to its site; then sweep the rest of the list once, executing each gate
    that is not barred by the migration rules and commutes with every earlier
    gate still waiting.  Each round costs one migration plus one return
    teleport.  final_return=False drops the very last return (alternative
    accounting; the default always counts it).
    """
    sites = site_assignment(circuit, cfg)
    remaining: list[Gate] = list(circuit.gates)
    executed: list[int] = []
    events: list[TeleportEvent] = []
    n_t = 0
    while remaining:
        while remaining and is_local(remaining[0]):
            executed.append(remaining.pop(0).id)
        if not remaining:
            break
        anchor = remaining.pop(0)
        site = sites[anchor.id]
        moved = remote_qubit(anchor, site)
        role = "C" if moved == anchor.control else "T"
        mig = MigrationState(moved, site)
        n_t += 1
        events.append(TeleportEvent(anchor.id, role, moved.partition, site, "migrate"))
        executed.append(anchor.id)
        kept: list[Gate] = []
        for gate in remaining:
            barred = _non_execute(mig, site, gate, sites) or any(
                non_commute(gate, earlier, mode) for earlier in kept)
            if barred:
                kept.append(gate)
            else:
                executed.append(gate.id)
        remaining = kept
        if remaining or final_return:
            n_t += 1
            events.append(TeleportEvent(anchor.id, role, site, moved.partition, "return"))
    return ScheduleResult(n_t, tuple(events), tuple(executed))


def replay_ok(circuit: Circuit, cfg: ConfigArr, result: ScheduleResult,
              final_return: bool = True) -> bool:
    """Certificate check for a schedule.

    Replays executed_order against the event stream and confirms: events
    alternate migrate/return over one qubit at a time, every global gate runs
    at its configured site with its remote qubit present, and local gates
    never run while their qubit is away.
    """
    sites = site_assignment(circuit, cfg)
    by_id = {g.id: g for g in circuit.gates}
    if sorted(result.executed_order) != sorted(by_id):
        return False
    if result.n_t != len(result.events):
        return False
    mig = MigrationState()
    pending = list(result.events)

    def step() -> bool:
        nonlocal mig
        if not pending:
            return False
        e = pending.pop(0)
        gate = by_id.get(e.gate_id)
        if not isinstance(gate, CnotGate):
            return False
        qubit = gate.control if e.role == "C" else gate.target
        if e.kind == "migrate":
            if not mig.empty or e.src != qubit.partition or e.dst != 1 - qubit.partition:
                return False
            mig = MigrationState(qubit, e.dst)
        else:
            if mig.empty or mig.qubit != qubit or e.src != mig.at_partition or e.dst != qubit.partition:
                return False
            mig = MigrationState()
        return True

    for gid in result.executed_order:
        gate = by_id[gid]
        if is_local(gate):
            while not mig.empty and mig.qubit in gate_qubits(gate):
                if not step():
                    return False
        else:
            need = MigrationState(remote_qubit(gate, sites[gid]), sites[gid])
            while mig != need:
                if not step():
                    return False
    while pending:
        if not step():
            return False
    return mig.empty or not final_return
