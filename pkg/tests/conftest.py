import pytest
from hypothesis import settings

from dqcopt import Circuit, CnotGate, QubitRef, single_gate

settings.register_profile("suite", deadline=None)
settings.load_profile("suite")


def _q(p: int, i: int) -> QubitRef:
    return QubitRef(p, i)


@pytest.fixture(scope="session")
def sample_circuit() -> Circuit:
    """The nine-gate demo circuit shipped as circuits/sample.dqc: two qubits
    per partition, five global CNOTs."""
    gates = (
        CnotGate(1, _q(0, 0), _q(0, 1)),
        CnotGate(2, _q(1, 0), _q(0, 0)),
        CnotGate(3, _q(0, 0), _q(1, 1)),
        single_gate(4, "H", _q(1, 1)),
        CnotGate(5, _q(1, 1), _q(0, 1)),
        single_gate(6, "H", _q(0, 1)),
        CnotGate(7, _q(0, 1), _q(1, 1)),
        CnotGate(8, _q(0, 0), _q(0, 1)),
        CnotGate(9, _q(1, 1), _q(0, 0)),
    )
    return Circuit((2, 2), gates)
