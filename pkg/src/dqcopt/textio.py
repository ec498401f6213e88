"""Text format for two-partition circuits, plus report rendering.

Document grammar (one statement per line, '#' starts a comment, keywords are
case-insensitive):

    qubits <n0> <n1>            first statement, exactly once
    cnot p<P>:<j> p<P'>:<j'>    control first
    <name> p<P>:<j>             name in i x y z h t
    r<axis>(<radians>) p<P>:<j> axis in x y z
    u p<P>:<j> [a, b; c, d]     entries are complex literals like 1, -2.5i, 0.5+0.5i

Gate ids are assigned 1..m in line order.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass


from .circuits import (Circuit, CnotGate, Gate, QubitRef, SingleQubitGate,
                       Unitary2, single_gate)
from .schedule import ConfigArr, ScheduleResult, TeleportEvent
from .search import ConfigOutcome, OptimizationReport

REPORT_SCHEMA = "dqcopt-report/1"

_NAMED = ("i", "x", "y", "z", "h", "t")
_ROTS = ("rx", "ry", "rz")

_QUBIT_RE = re.compile(r"^p([01]):(\d+)$", re.IGNORECASE)
_CALL_RE = re.compile(r"^([a-z]+)\((.*)\)$", re.IGNORECASE)
_U_LINE_RE = re.compile(r"^\s*u\s+(\S+)\s+\[([^\[\]]*)\]\s*$", re.IGNORECASE)

_UFLOAT = r"(?:\d+(?:\.\d*)?|\.\d+)(?:[eE][-+]?\d+)?"
_IMAG_RE = re.compile(rf"^(?P<sign>[-+])?(?P<mag>{_UFLOAT})?i$")
_REAL_RE = re.compile(rf"^(?P<re>[-+]?{_UFLOAT})(?:(?P<isign>[-+])(?P<imag>{_UFLOAT})?i)?$")


class ParseError(ValueError):
    """Syntax or range error in a circuit document, with source position."""

    def __init__(self, message: str, line: int, column: int = 1):
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column


@dataclass(frozen=True)
class CircuitDocument:
    """Parsed circuit plus enough source information for diagnostics."""

    source: str
    circuit: Circuit
    gate_lines: tuple[int, ...]


def _parse_complex(token: str, line: int, col: int) -> complex:
    m = _IMAG_RE.match(token)
    if m:
        mag = float(m.group("mag")) if m.group("mag") else 1.0
        return complex(0.0, -mag if m.group("sign") == "-" else mag)
    m = _REAL_RE.match(token)
    if m:
        imag = 0.0
        if m.group("isign"):
            mag = float(m.group("imag")) if m.group("imag") else 1.0
            imag = -mag if m.group("isign") == "-" else mag
        return complex(float(m.group("re")), imag)
    raise ParseError(f"bad complex literal {token!r}", line, col)


def _parse_qubit(token: str, col: int, sizes: tuple[int, int], line: int) -> QubitRef:
    m = _QUBIT_RE.match(token)
    if not m:
        raise ParseError(f"expected a qubit like p0:1, got {token!r}", line, col)
    partition, index = int(m.group(1)), int(m.group(2))
    if index >= sizes[partition]:
        raise ParseError(
            f"qubit p{partition}:{index} out of range; partition {partition} has "
            f"{sizes[partition]} qubits", line, col)
    return QubitRef(partition, index)


def _parse_matrix(content: str, base_col: int, line: int) -> Unitary2:
    rows = content.split(";")
    if len(rows) != 2:
        raise ParseError("matrix needs exactly 2 rows separated by ';'", line, base_col)
    entries: list[complex] = []
    offset = 0
    for row in rows:
        cells = row.split(",")
        if len(cells) != 2:
            raise ParseError("each matrix row needs exactly 2 entries separated by ','",
                             line, base_col + offset)
        for cell in cells:
            stripped = re.sub(r"\s+", "", cell)
            col = base_col + offset + (len(cell) - len(cell.lstrip()))
            if not stripped:
                raise ParseError("empty matrix entry", line, col)
            entries.append(_parse_complex(stripped, line, col))
            offset += len(cell) + 1
    matrix = Unitary2(*entries)
    if not matrix.is_unitary():
        raise ParseError(f"matrix is not unitary (defect {matrix.unitarity_defect():.3g})",
                         line, base_col)
    return matrix


def _parse_gate(code: str, tokens: list[tuple[str, int]], gate_id: int,
                sizes: tuple[int, int], line: int) -> Gate:
    word, wcol = tokens[0]
    lower = word.lower()
    if lower == "cnot":
        if len(tokens) != 3:
            raise ParseError("expected 'cnot <control> <target>'", line, wcol)
        control = _parse_qubit(tokens[1][0], tokens[1][1], sizes, line)
        target = _parse_qubit(tokens[2][0], tokens[2][1], sizes, line)
        if control == target:
            raise ParseError("control and target must be distinct", line, tokens[2][1])
        return CnotGate(gate_id, control, target)
    if lower == "u":
        m = _U_LINE_RE.match(code)
        if not m:
            raise ParseError("expected 'u p<P>:<j> [a, b; c, d]'", line, wcol)
        target = _parse_qubit(m.group(1), m.start(1) + 1, sizes, line)
        matrix = _parse_matrix(m.group(2), m.start(2) + 1, line)
        return SingleQubitGate(gate_id, "U", matrix, target)
    call = _CALL_RE.match(word)
    if call:
        name, arg = call.group(1).lower(), call.group(2)
        if name in _NAMED:
            raise ParseError(f"gate {name} takes no angle", line, wcol)
        if name not in _ROTS:
            raise ParseError(f"unknown gate {name!r}", line, wcol)
        try:
            angle = float(arg)
        except ValueError:
            raise ParseError(f"bad angle {arg!r}", line, wcol + len(name) + 1) from None
        if len(tokens) != 2:
            raise ParseError(f"expected '{name}(<radians>) <qubit>'", line, wcol)
        target = _parse_qubit(tokens[1][0], tokens[1][1], sizes, line)
        return single_gate(gate_id, name, target, angle)
    if lower in _ROTS:
        raise ParseError(f"rotation needs an angle: {lower}(<radians>) <qubit>", line, wcol)
    if lower in _NAMED:
        if len(tokens) != 2:
            raise ParseError(f"expected '{lower} <qubit>'", line, wcol)
        target = _parse_qubit(tokens[1][0], tokens[1][1], sizes, line)
        return single_gate(gate_id, lower, target)
    raise ParseError(f"unknown gate {word!r}", line, wcol)


def parse_circuit(text: str) -> CircuitDocument:
    """Parse a circuit document; raises ParseError with line and column on any defect."""
    sizes: tuple[int, int] | None = None
    gates: list[Gate] = []
    gate_lines: list[int] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        code = raw.split("#", 1)[0]
        if not code.strip():
            continue
        tokens = [(m.group(0), m.start() + 1) for m in re.finditer(r"\S+", code)]
        word, wcol = tokens[0]
        if sizes is None:
            if word.lower() != "qubits":
                raise ParseError("expected 'qubits <n0> <n1>' as the first statement", lineno, wcol)
            if len(tokens) != 3 or not all(t[0].isdigit() for t in tokens[1:]):
                raise ParseError("expected 'qubits <n0> <n1>' with two non-negative integers",
                                 lineno, wcol)
            sizes = (int(tokens[1][0]), int(tokens[2][0]))
            if sizes[0] < 1 or sizes[1] < 1:
                raise ParseError(f"partition sizes must be positive, got {sizes}", lineno, wcol)
            continue
        if word.lower() == "qubits":
            raise ParseError("duplicate qubits statement", lineno, wcol)
        gates.append(_parse_gate(code, tokens, len(gates) + 1, sizes, lineno))
        gate_lines.append(lineno)
    if sizes is None:
        raise ParseError("missing 'qubits <n0> <n1>' statement", 1)
    return CircuitDocument(text, Circuit(sizes, tuple(gates)), tuple(gate_lines))


def _format_float(x: float) -> str:
    return repr(float(x))


def _format_complex(z: complex) -> str:
    if z.imag == 0.0:
        return _format_float(z.real)
    if z.real == 0.0:
        return f"{_format_float(z.imag)}i"
    if z.imag < 0.0:
        return f"{_format_float(z.real)}-{_format_float(-z.imag)}i"
    return f"{_format_float(z.real)}+{_format_float(z.imag)}i"


def serialize_circuit(circuit: Circuit) -> str:
    """Render a circuit back to document text; parse(serialize(c)).circuit == c
    for any circuit whose ids run 1..m in order."""
    lines = [f"qubits {circuit.partition_sizes[0]} {circuit.partition_sizes[1]}"]
    for gate in circuit.gates:
        if isinstance(gate, CnotGate):
            lines.append(f"cnot {gate.control} {gate.target}")
        elif gate.name.upper() in ("RX", "RY", "RZ") and gate.angle is not None:
            lines.append(f"{gate.name.lower()}({_format_float(gate.angle)}) {gate.target}")
        elif gate.name.upper() in ("I", "X", "Y", "Z", "H", "T"):
            lines.append(f"{gate.name.lower()} {gate.target}")
        else:
            m = gate.matrix
            lines.append(
                f"u {gate.target} [{_format_complex(m.u00)}, {_format_complex(m.u01)}; "
                f"{_format_complex(m.u10)}, {_format_complex(m.u11)}]")
    return "\n".join(lines) + "\n"


def format_event_sequence(events: tuple[TeleportEvent, ...]) -> str:
    """Migration labels in order, e.g. 'g2(T), g5(C)'; an em dash when empty."""
    migrations = [e for e in events if e.kind == "migrate"]
    if not migrations:
        return "—"
    return ", ".join(e.label() for e in migrations)


def _format_improvement(best_n_t: int, worst_n_t: int) -> str:
    if worst_n_t <= 0:
        return "0%"
    numerator = (worst_n_t - best_n_t) * 100
    if numerator % worst_n_t == 0:
        return f"{numerator // worst_n_t}%"
    return f"{numerator / worst_n_t:.2f}%"


def render_report(report: OptimizationReport, fmt: str = "table",
                  all_configs: bool = True) -> str:
    """Report as an aligned-enough text table or as machine-readable JSON."""
    if fmt == "machine":
        return report_to_json(report)
    if fmt != "table":
        raise ValueError(f"unknown report format {fmt!r}")
    rows = report.per_config if all_configs else (report.best,)
    lines = ["config | teleportations | n_t"]
    for oc in rows:
        lines.append(f"{oc.config_index} | {format_event_sequence(oc.result.events)} | {oc.result.n_t}")
    lines.append("")
    lines.append(f"best config: {report.best_index}")
    lines.append(f"best n_t: {report.best_n_t}")
    lines.append(f"worst n_t: {report.worst_n_t}")
    lines.append(f"improvement: {_format_improvement(report.best_n_t, report.worst_n_t)}")
    return "\n".join(lines) + "\n"


def _event_to_dict(e: TeleportEvent) -> dict:
    return {"gate_id": e.gate_id, "role": e.role, "kind": e.kind, "from": e.src, "to": e.dst}


def _event_from_dict(d: dict) -> TeleportEvent:
    return TeleportEvent(d["gate_id"], d["role"], d["from"], d["to"], d["kind"])


def report_to_json(report: OptimizationReport) -> str:
    doc = {
        "schema": REPORT_SCHEMA,
        "m_g": report.m_g,
        "per_config": [
            {
                "index": oc.config_index,
                "bits": list(oc.cfg.bits),
                "n_t": oc.result.n_t,
                "events": [_event_to_dict(e) for e in oc.result.events],
                "executed_order": list(oc.result.executed_order),
            }
            for oc in report.per_config
        ],
        "best_index": report.best_index,
        "worst_n_t": report.worst_n_t,
        "improvement": report.improvement,
    }
    return json.dumps(doc, indent=2) + "\n"


def report_from_json(text: str) -> OptimizationReport:
    """Inverse of the machine format; round-trips to an equal report."""
    doc = json.loads(text)
    schema = doc.get("schema")
    if schema != REPORT_SCHEMA:
        raise ValueError(f"unsupported report schema {schema!r}")
    per_config = tuple(
        ConfigOutcome(
            entry["index"],
            ConfigArr(tuple(entry["bits"])),
            ScheduleResult(
                entry["n_t"],
                tuple(_event_from_dict(e) for e in entry["events"]),
                tuple(entry["executed_order"]),
            ),
        )
        for entry in doc["per_config"]
    )
    return OptimizationReport(per_config, doc["best_index"], doc["worst_n_t"],
                              doc["improvement"])
