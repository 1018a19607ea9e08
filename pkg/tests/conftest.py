"""Shared fixtures: the circuit conformance corpus and example gadgets."""
from __future__ import annotations

import json
from pathlib import Path

import numpy as np
import pytest

from ldckit.fixtures import load_gadget
from ldckit.io import parse

ROOT = Path(__file__).resolve().parent.parent
CORPUS_DIR = ROOT / "fixtures"


def corpus_entries() -> list[tuple[str, dict]]:
    entries = []
    for path in sorted(CORPUS_DIR.glob("*.json")):
        entries.append((path.stem, json.loads(path.read_text())))
    return entries


@pytest.fixture(scope="session")
def corpus() -> list[tuple[str, object, bool]]:
    """(name, circuit, expected validity) for every conformance fixture."""
    out = []
    for name, doc in corpus_entries():
        circuit = parse(json.dumps(doc).encode())
        out.append((name, circuit, doc["expect"] == "valid"))
    return out


@pytest.fixture(scope="session")
def qubit_gadget():
    return load_gadget("qubit-zx")


@pytest.fixture(scope="session")
def weil_gadget():
    return load_gadget("weil")


@pytest.fixture(scope="session")
def quad4_gadget():
    return load_gadget("quad4")


@pytest.fixture(scope="session")
def quad4_flip_gadget():
    return load_gadget("quad4-flip")


def random_projector(rng: np.random.Generator, n: int, rank: int
                     ) -> np.ndarray:
    """A random idempotent of the given rank: a 0/1 diagonal conjugated by
    a random (well-conditioned) invertible matrix."""
    while True:
        p = rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))
        if n == 0 or np.linalg.cond(p) < 1e3:
            break
    d = np.zeros(n)
    d[:rank] = 1
    return p @ np.diag(d) @ np.linalg.inv(p)
