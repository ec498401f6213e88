import json
import math
from pathlib import Path

import pytest
from hypothesis import given

from dqcopt import (Circuit, CnotGate, ParseError, QubitRef, optimize,
                    parse_circuit, render_report, report_from_json,
                    serialize_circuit)
from dqcopt.textio import format_event_sequence

from helpers import circuits

FIXTURES = Path(__file__).parent / "fixtures"
SAMPLE_PATH = Path(__file__).parent.parent / "circuits" / "sample.dqc"


def test_parse_sample_file(sample_circuit):
    doc = parse_circuit(SAMPLE_PATH.read_text())
    assert doc.circuit == sample_circuit
    assert doc.gate_lines == (3, 4, 5, 6, 7, 8, 9, 10, 11)


def test_parse_is_case_insensitive_and_comment_friendly(sample_circuit):
    text = "\n".join([
        "# header comment",
        "QUBITS 2 2",
        "",
        "CNOT P0:0 P0:1  # inline comment",
        "Cnot p1:0 p0:0",
        "cnot p0:0 p1:1",
        "H p1:1",
        "cnot p1:1 p0:1",
        "h p0:1",
        "cnot p0:1 p1:1",
        "cnot p0:0 p0:1",
        "cnot p1:1 p0:0",
    ])
    assert parse_circuit(text).circuit == sample_circuit


def test_parse_rotation_and_raw_matrix():
    s = 1 / math.sqrt(2)
    text = "\n".join([
        "qubits 1 1",
        "rz(0.5) p0:0",
        f"u p1:0 [{s}, {s}; {s}, -{s}]",
        "u p1:0 [ 0.5+0.5i , 0.5 - 0.5i ; 0.5-0.5i, 0.5 +0.5i ]",
    ])
    c = parse_circuit(text).circuit
    assert c.gates[0].name == "RZ" and c.gates[0].angle == 0.5
    assert c.gates[1].name == "U"
    assert abs(c.gates[2].matrix.u01 - complex(0.5, -0.5)) < 1e-12


def test_complex_literal_forms():
    # Unit-magnitude literals so [0, z; 1, 0] stays unitary.
    s = 0.7071067811865476
    forms = {
        "1": 1, "-1": -1, "i": 1j, "-i": -1j, "+i": 1j, "1i": 1j,
        f"{s}+{s}i": complex(s, s), f"{s}-{s}i": complex(s, -s),
        ".6+.8i": complex(0.6, 0.8), "6e-1+8e-1i": complex(0.6, 0.8),
        "-.6-.8i": complex(-0.6, -0.8),
    }
    for token, want in forms.items():
        text = f"qubits 1 1\nu p0:0 [0, {token}; 1, 0]"
        got = parse_circuit(text).circuit.gates[0].matrix.u01
        assert abs(got - want) < 1e-12, token


@pytest.mark.parametrize("text, fragment, line", [
    ("cnot p0:0 p0:1", "expected 'qubits", 1),
    ("qubits 2 2\nqubits 2 2", "duplicate", 2),
    ("qubits 0 2", "positive", 1),
    ("qubits 2 2\nfoo p0:0", "unknown gate", 2),
    ("qubits 2 2\nh q0", "expected a qubit", 2),
    ("qubits 2 2\nh p0:5", "out of range", 2),
    ("qubits 2 2\ncnot p0:0 p0:0", "distinct", 2),
    ("qubits 2 2\ncnot p0:0", "expected 'cnot", 2),
    ("qubits 2 2\nrz p0:0", "rotation needs an angle", 2),
    ("qubits 2 2\nrz(abc) p0:0", "bad angle", 2),
    ("qubits 2 2\nh(0.5) p0:0", "takes no angle", 2),
    ("qubits 2 2\nu p0:0 [1, 0; 0]", "exactly 2 entries", 2),
    ("qubits 2 2\nu p0:0 [1, 0; 0, 2]", "not unitary", 2),
    ("qubits 2 2\nu p0:0 [1, 0; 0, 1x]", "bad complex literal", 2),
    ("", "missing 'qubits", 1),
])
def test_parse_errors(text, fragment, line):
    with pytest.raises(ParseError) as err:
        parse_circuit(text)
    assert fragment in str(err.value)
    assert err.value.line == line
    assert err.value.column >= 1


def test_parse_error_column_points_at_the_token():
    with pytest.raises(ParseError) as err:
        parse_circuit("qubits 2 2\ncnot p0:0 p9:0")
    assert err.value.line == 2
    assert err.value.column == 11


def test_serialize_round_trip_sample(sample_circuit):
    text = serialize_circuit(sample_circuit)
    assert parse_circuit(text).circuit == sample_circuit


@given(circuits())
def test_serialize_round_trip_generated(c):
    assert parse_circuit(serialize_circuit(c)).circuit == c


def test_render_report_table_matches_golden(sample_circuit):
    report = optimize(sample_circuit)
    golden = (FIXTURES / "sample_report.txt").read_text()
    assert render_report(report, "table", all_configs=True) == golden


def test_render_report_best_only(sample_circuit):
    report = optimize(sample_circuit)
    text = render_report(report, "table", all_configs=False)
    assert "24 | g2(T), g5(C) | 4" in text
    assert "\n0 | " not in text
    assert "improvement: 60%" in text


def test_render_report_empty_sequence_row():
    c = Circuit((2, 1), (CnotGate(1, QubitRef(0, 0), QubitRef(0, 1)),))
    text = render_report(optimize(c))
    assert "0 | — | 0" in text
    assert "improvement: 0%" in text


def test_render_report_rejects_unknown_format(sample_circuit):
    with pytest.raises(ValueError, match="format"):
        render_report(optimize(sample_circuit), "yaml")


def test_format_event_sequence_empty():
    assert format_event_sequence(()) == "—"


def test_machine_report_round_trip(sample_circuit):
    report = optimize(sample_circuit)
    text = render_report(report, "machine")
    doc = json.loads(text)
    assert doc["schema"] == "dqcopt-report/1"
    assert doc["best_index"] == 24
    assert doc["per_config"][24]["n_t"] == 4
    assert doc["per_config"][24]["events"][0] == {
        "gate_id": 2, "role": "T", "kind": "migrate", "from": 0, "to": 1}
    assert report_from_json(text) == report


def test_report_from_json_rejects_unknown_schema():
    with pytest.raises(ValueError, match="schema"):
        report_from_json('{"schema": "nope/9", "per_config": []}')
