import numpy as np
import pytest
from click.testing import CliRunner

from groversim import StateVector
from groversim.cli import main as cli_main


def random_state(n_qubits: int, rng: np.random.Generator) -> StateVector:
    """Haar-ish random normalized state (good enough for kernel checks)."""
    amps = rng.normal(size=1 << n_qubits) + 1j * rng.normal(size=1 << n_qubits)
    amps /= np.linalg.norm(amps)
    return StateVector(n_qubits, amps)


@pytest.fixture
def cli():
    runner = CliRunner()

    def invoke(*args):
        return runner.invoke(cli_main, [str(a) for a in args])

    return invoke


def csv_rows(text: str) -> tuple[list[str], list[dict]]:
    """Parse CSV output into (header, rows-as-string-dicts)."""
    lines = text.splitlines()
    header = lines[0].split(",")
    rows = [dict(zip(header, line.split(","))) for line in lines[1:] if line]
    return header, rows
