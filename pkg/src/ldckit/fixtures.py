"""Built-in example gadgets and the fixture loader.

The three algebra examples (weil, quad4, quad4-flip) ship with canonical
basis cups as their derived dual witnesses: the multiplication tables turn
out to satisfy the dagger-dual equations (or fail them, for quad4-flip)
with this choice already, so no twisted pairing is needed.
"""
from __future__ import annotations

import json
from importlib import resources
from pathlib import Path

import numpy as np

from .errors import SchemaError
from .gadget import Gadget, gadget_from_json, gadget_to_json
from .model import ModelEnv
from .objects import Atom


def _algebra_gadget(name: str, labels: list[str],
                    mult: dict[tuple[int, int], dict[int, complex]],
                    unit_idx: int) -> Gadget:
    """Linear monoid from a multiplication table, with canonical-basis
    cups/caps as the dual witness and the identity as the candidate
    coincidence isomorphism."""
    n = len(labels)
    m = np.zeros((n, n * n), dtype=complex)
    for (i, j), out in mult.items():
        for k, c in out.items():
            m[k, i * n + j] = c
    u = np.zeros((n, 1), dtype=complex)
    u[unit_idx, 0] = 1
    eps = np.eye(n, dtype=complex).reshape(1, n * n)
    eta = eps.conj().T
    A = Atom(name)
    env = ModelEnv.make({name: n})
    env.atoms[name] = (n, tuple(labels))
    morphs = {"m": m, "u": u, "alpha": np.eye(n, dtype=complex),
              "eta_L": eta.copy(), "eps_L": eps.copy(),
              "eta_R": eta.copy(), "eps_R": eps.copy()}
    return Gadget("linear_monoid", {"A": A, "B": A}, morphs, env)


def weil() -> Gadget:
    """Dual numbers C[x]/(x^2): commutative, passes the dagger linear
    monoid suite, fails the Frobenius coincidence suite."""
    mult = {(0, 0): {0: 1}, (0, 1): {1: 1}, (1, 0): {1: 1}, (1, 1): {}}
    return _algebra_gadget("W", ["1", "x"], mult, 0)


def _quad_mult(flip: bool) -> dict:
    mult: dict = {(0, k): {k: 1} for k in range(4)}
    mult.update({(k, 0): {k: 1} for k in range(1, 4)})
    mult[(1, 2)] = {3: -1j if flip else 1j}   # x*y
    mult[(2, 1)] = {3: -1j}                   # y*x
    # products of x, y, z not listed in the presentation vanish (x^2 =
    # y^2 = z^2 = 0, xz = zx = 0) and yz, zy are taken to be 0 as well,
    # consistent with assigning x, y degree 1 and z degree 2.
    for pair in [(1, 1), (2, 2), (3, 3), (1, 3), (3, 1), (2, 3), (3, 2)]:
        mult[pair] = {}
    return mult


def quad4() -> Gadget:
    """C<x,y,z> with x^2=y^2=z^2=0, xy=iz, yx=-iz, xz=zx=yz=zy=0:
    non-commutative, passes the dagger linear monoid suite, fails the
    Frobenius coincidence suite."""
    return _algebra_gadget("Q", ["1", "x", "y", "z"], _quad_mult(False), 0)


def quad4_flip() -> Gadget:
    """The xy=-iz variant of quad4: still a linear monoid, but the
    dagger linear monoid suite fails (comult-is-mult-dagger)."""
    return _algebra_gadget("Qf", ["1", "x", "y", "z"], _quad_mult(True), 0)


def qubit_zx() -> Gadget:
    """Self-linear bialgebra on the qubit: parity (XOR) monoid with the
    computational-basis copy/delete comonoid and canonical-basis duals.
    Passes the complementary and Hopf suites; the coincidence
    isomorphism is the identity."""
    m = np.array([[1, 0, 0, 1], [0, 1, 1, 0]], dtype=complex)
    u = np.array([[1], [0]], dtype=complex)
    d = np.zeros((4, 2), dtype=complex)
    d[0, 0] = 1
    d[3, 1] = 1
    k = np.array([[1, 1]], dtype=complex)
    cup = np.eye(2, dtype=complex).reshape(4, 1)
    cap = np.eye(2, dtype=complex).reshape(1, 4)
    Q = Atom("Q")
    env = ModelEnv.make({"Q": 2})
    env.atoms["Q"] = (2, ("0", "1"))
    morphs = {"m": m, "u": u, "d": d, "k": k,
              "alpha": np.eye(2, dtype=complex)}
    for r in ("eta_L", "eta_R", "tau_L", "tau_R"):
        morphs[r] = cup.copy()
    for r in ("eps_L", "eps_R", "gam_L", "gam_R"):
        morphs[r] = cap.copy()
    return Gadget("linear_bialgebra", {"A": Q, "B": Q}, morphs, env)


BUILTIN = {
    "weil": weil,
    "quad4": quad4,
    "quad4-flip": quad4_flip,
    "qubit-zx": qubit_zx,
}


def fixture_names() -> list[str]:
    return sorted(BUILTIN)


def load_gadget(name_or_path: str, degree: int = 3) -> Gadget:
    """Load a gadget by built-in name or from a JSON file path."""
    if name_or_path in BUILTIN:
        ref = resources.files("ldckit") / "fixtures" / f"{name_or_path}.json"
        with resources.as_file(ref) as p:
            doc = json.loads(p.read_text())
    else:
        path = Path(name_or_path)
        if not path.exists():
            raise SchemaError(f"no such gadget or fixture: {name_or_path}")
        doc = json.loads(path.read_text())
    return gadget_from_json(doc, degree=degree)


def write_builtin_fixtures(directory: str | Path) -> None:
    """Regenerate the shipped fixture files from the builders."""
    notes = {
        "weil": ("Dual numbers C[x]/(x^2). Dual witness: canonical basis "
                 "cup/cap; coincidence candidate alpha = identity."),
        "quad4": ("x^2=y^2=z^2=0, xy=iz, yx=-iz, xz=zx=0; yz=zy=0 by "
                  "the grading deg x = deg y = 1, deg z = 2. Dual "
                  "witness: canonical basis cup/cap."),
        "quad4-flip": ("quad4 with xy=-iz: commutes, remains a linear "
                       "monoid, fails the dagger-dualised comonoid "
                       "comparison."),
        "qubit-zx": ("Parity monoid + copy/delete comonoid on the "
                     "qubit with canonical-basis duals."),
    }
    directory = Path(directory)
    for name, build in BUILTIN.items():
        doc = gadget_to_json(build())
        doc["note"] = notes[name]
        path = directory / f"{name}.json"
        path.write_text(json.dumps(doc, indent=1) + "\n")
