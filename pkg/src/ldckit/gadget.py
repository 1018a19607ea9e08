"""Role-tagged bundles of objects and morphisms instantiating a structure."""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from .errors import MissingRole, SchemaError, ShapeMismatch
from .io import matrix_from_json, matrix_to_json
from .model import ModelEnv, interp
from .objects import ObjectExpr, type_from_json, type_to_json


@dataclass
class Gadget:
    kind: str
    objects: dict[str, ObjectExpr]
    morphisms: dict[str, np.ndarray]
    env: ModelEnv
    # Per-basis-vector degrees for truncated objects, keyed by object role;
    # present only on gadgets living over an exponential space.
    gradings: Optional[dict[str, list[int]]] = None

    def object(self, role: str) -> ObjectExpr:
        if role not in self.objects:
            raise MissingRole(role)
        return self.objects[role]

    def morphism(self, role: str) -> np.ndarray:
        if role not in self.morphisms:
            raise MissingRole(role)
        return self.morphisms[role]

    def has(self, *roles: str) -> bool:
        return all(r in self.morphisms for r in roles)

    def with_morphisms(self, **extra: np.ndarray) -> "Gadget":
        morphs = dict(self.morphisms)
        morphs.update({k: np.asarray(v, dtype=complex)
                       for k, v in extra.items()})
        return Gadget(self.kind, dict(self.objects), morphs, self.env,
                      self.gradings)

    def check_shapes(self, signature: dict[str, tuple[list[str], list[str]]]
                     ) -> None:
        """signature: role -> (dom object roles, cod object roles)."""
        for role, (dom, cod) in signature.items():
            if role not in self.morphisms:
                continue
            rows = int(np.prod([interp(self.objects[o], self.env)[0]
                                for o in cod])) if cod else 1
            cols = int(np.prod([interp(self.objects[o], self.env)[0]
                                for o in dom])) if dom else 1
            m = self.morphisms[role]
            if m.shape != (rows, cols):
                raise ShapeMismatch(
                    f"role {role!r}: expected {(rows, cols)}, got {m.shape}")


def gadget_to_json(g: Gadget) -> dict:
    doc = {
        "kind": g.kind,
        "objects": {role: type_to_json(t) for role, t in g.objects.items()},
        "morphisms": {role: matrix_to_json(m)
                      for role, m in g.morphisms.items()},
        "atoms": {name: {"dim": dim, "basis": list(labels)}
                  for name, (dim, labels) in g.env.atoms.items()},
    }
    if g.gradings is not None:
        doc["gradings"] = {role: list(map(int, vec))
                           for role, vec in g.gradings.items()}
    return doc


def gadget_from_json(doc: object, degree: int = 3) -> Gadget:
    if not isinstance(doc, dict):
        raise SchemaError("gadget document must be an object")
    for key in ("kind", "objects", "morphisms", "atoms"):
        if key not in doc:
            raise SchemaError(f"missing field {key!r}")
    atoms = {}
    for name, spec in doc["atoms"].items():
        if "dim" not in spec:
            raise SchemaError(f"atom {name!r} needs a dim")
        dim = int(spec["dim"])
        basis = tuple(spec.get("basis") or (str(i) for i in range(dim)))
        if len(basis) != dim:
            raise SchemaError(f"atom {name!r}: basis length != dim")
        atoms[name] = (dim, basis)
    env = ModelEnv(atoms=atoms, degree=degree)
    objects = {role: type_from_json(t)
               for role, t in doc["objects"].items()}
    morphisms = {role: matrix_from_json(m)
                 for role, m in doc["morphisms"].items()}
    gradings = None
    if "gradings" in doc:
        gradings = {role: [int(x) for x in vec]
                    for role, vec in doc["gradings"].items()}
    return Gadget(str(doc["kind"]), objects, morphisms, env, gradings)
