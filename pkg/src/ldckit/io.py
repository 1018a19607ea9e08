"""JSON formats for circuits and matrices."""
from __future__ import annotations

import json
from typing import Optional

import numpy as np

from .circuit import Circuit, Node
from .errors import CircuitSyntaxError, SchemaError
from .objects import type_from_json, type_to_json

_ARITY = {
    "tensor_intro": (2, 1), "tensor_elim": (1, 2),
    "par_intro": (2, 1), "par_elim": (1, 2),
    "top_intro": (0, 1), "top_elim": (1, 0),
    "bot_intro": (0, 1), "bot_elim": (1, 0),
    "swap": (2, 2),
}


def serialize(c: Circuit) -> bytes:
    order = c.topo_order()
    nodes = []
    for nid in order:
        n = c.nodes[nid]
        entry: dict = {"kind": n.kind, "ports": list(n.ins + n.outs)}
        if n.name is not None:
            entry["name"] = n.name
        if n.thin is not None:
            entry["thin"] = n.thin
        if n.inner is not None:
            entry["inner"] = json.loads(serialize(n.inner).decode())
        nodes.append(entry)
    doc = {
        "wires": [{"id": w, "type": type_to_json(t)}
                  for w, t in c.wires.items()],
        "nodes": nodes,
        "inputs": list(c.inputs),
        "outputs": list(c.outputs),
    }
    return json.dumps(doc, indent=2).encode()


def parse(text: bytes | str) -> Circuit:
    if isinstance(text, bytes):
        text = text.decode()
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise CircuitSyntaxError(f"line {exc.lineno}: {exc.msg}") from exc
    return _circuit_from_json(doc)


def _circuit_from_json(doc: object) -> Circuit:
    if not isinstance(doc, dict):
        raise SchemaError("circuit document must be an object")
    for key in ("wires", "nodes", "inputs", "outputs"):
        if key not in doc:
            raise SchemaError(f"missing field {key!r}")
    wires = {}
    for entry in doc["wires"]:
        if not isinstance(entry, dict) or "id" not in entry \
                or "type" not in entry:
            raise SchemaError(f"bad wire entry: {entry!r}")
        wid = entry["id"]
        if wid in wires:
            raise SchemaError(f"duplicate wire id {wid!r}")
        wires[wid] = type_from_json(entry["type"])

    inputs = list(doc["inputs"])
    outputs = list(doc["outputs"])
    for w in inputs + outputs:
        if w not in wires:
            raise SchemaError(f"boundary references dangling wire {w!r}")

    raw_nodes = doc["nodes"]
    if not isinstance(raw_nodes, list):
        raise SchemaError("nodes must be a list")
    for entry in raw_nodes:
        if not isinstance(entry, dict) or "kind" not in entry \
                or "ports" not in entry:
            raise SchemaError(f"bad node entry: {entry!r}")
        for w in entry["ports"]:
            if w not in wires:
                raise SchemaError(f"node references dangling wire {w!r}")

    # Wire directions: circuit inputs are produced by the boundary, outputs
    # consumed by it; fixed-arity kinds declare their port split.  Generator
    # ports are inferred from the opposite endpoint of each wire; a wire
    # between two generators is oriented from the earlier node in the list.
    produced: dict[str, tuple] = {}
    consumed: dict[str, tuple] = {}
    for w in inputs:
        produced[w] = ("boundary",)
    for w in outputs:
        consumed[w] = ("boundary",)
    gen_ports: list[tuple[int, list[str]]] = []
    split_nodes: dict[int, tuple[list[str], list[str]]] = {}
    for idx, entry in enumerate(raw_nodes):
        kind, ports = entry["kind"], list(entry["ports"])
        if kind in _ARITY:
            n_in, n_out = _ARITY[kind]
            if len(ports) != n_in + n_out:
                raise SchemaError(f"{kind} node takes {n_in + n_out} ports")
            ins, outs = ports[:n_in], ports[n_in:]
        elif kind == "dagger_box":
            if "inner" not in entry:
                raise SchemaError("dagger_box node needs an inner circuit")
            inner = _circuit_from_json(entry["inner"])
            n_in, n_out = len(inner.outputs), len(inner.inputs)
            if len(ports) != n_in + n_out:
                raise SchemaError("dagger_box port count does not match "
                                  "its inner circuit boundary")
            ins, outs = ports[:n_in], ports[n_in:]
        elif kind == "gen":
            gen_ports.append((idx, ports))
            continue
        else:
            raise SchemaError(f"unknown node kind {kind!r}")
        split_nodes[idx] = (ins, outs)
        for w in ins:
            _claim(consumed, w, ("node", idx))
        for w in outs:
            _claim(produced, w, ("node", idx))

    for idx, ports in gen_ports:
        ins, outs = [], []
        for w in ports:
            if w in produced and produced[w] != ("node", idx):
                ins.append(w)
            elif w in consumed and consumed[w] != ("node", idx):
                outs.append(w)
            else:
                # wire between two generators: earlier node produces
                other = [j for j, ps in gen_ports if j != idx and w in ps]
                if not other:
                    raise SchemaError(f"wire {w!r} has a dangling endpoint")
                (ins if other[0] < idx else outs).append(w)
        split_nodes[idx] = (ins, outs)
        for w in ins:
            _claim(consumed, w, ("node", idx))
        for w in outs:
            _claim(produced, w, ("node", idx))

    nodes = {}
    for idx, entry in enumerate(raw_nodes):
        ins, outs = split_nodes[idx]
        inner = None
        if entry["kind"] == "dagger_box":
            inner = _circuit_from_json(entry["inner"])
        nodes[f"n{idx}"] = Node(
            kind=entry["kind"], ins=tuple(ins), outs=tuple(outs),
            name=entry.get("name"), thin=entry.get("thin"), inner=inner)
    return Circuit(wires, nodes, inputs, outputs)


def _claim(table: dict, wire: str, endpoint: tuple) -> None:
    if wire in table:
        raise SchemaError(f"wire {wire!r} has two endpoints of the "
                          "same polarity")
    table[wire] = endpoint


# -- matrices --------------------------------------------------------------

def matrix_to_json(m: np.ndarray) -> dict:
    m = np.asarray(m, dtype=complex)
    if m.ndim != 2:
        raise SchemaError("matrix must be two-dimensional")
    return {
        "rows": m.shape[0],
        "cols": m.shape[1],
        "data": [[float(v.real), float(v.imag)] for v in m.reshape(-1)],
    }


def matrix_from_json(doc: object) -> np.ndarray:
    if not isinstance(doc, dict) or not {"rows", "cols", "data"} <= set(doc):
        raise SchemaError(f"bad matrix document: {doc!r}")
    rows, cols, data = doc["rows"], doc["cols"], doc["data"]
    if len(data) != rows * cols:
        raise SchemaError("matrix data length does not match rows*cols")
    vals = np.array([complex(re, im) for re, im in data], dtype=complex)
    m = vals.reshape(rows, cols)
    if not np.all(np.isfinite(m.view(float))):
        raise SchemaError("matrix entries must be finite")
    return m
