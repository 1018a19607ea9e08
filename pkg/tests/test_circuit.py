"""Circuit construction, well-formedness checks, and serialization."""
from __future__ import annotations

import json

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ldckit.circuit import (Circuit, compose, dagger_box, generator, identity,
                            isomorphic, par, permutation, seq, swap,
                            tensor_elim, tensor_intro)
from ldckit.errors import IllTyped, SchemaError, TypeMismatch
from ldckit.io import parse, serialize
from ldckit.objects import Atom, Bot, Par, Tensor, Top

A, B, C = Atom("A"), Atom("B"), Atom("C")

atoms = st.sampled_from([A, B, C, Top(), Bot()])
object_exprs = st.recursive(
    atoms,
    lambda inner: st.builds(Tensor, inner, inner) | st.builds(Par, inner, inner),
    max_leaves=4)


class TestConstruction:
    def test_identity_boundary(self):
        c = identity([A, B])
        assert c.input_types() == (A, B)
        assert c.output_types() == (A, B)
        assert not c.nodes

    def test_generator_boundary(self):
        c = generator("f", [A, B], [C])
        assert c.input_types() == (A, B)
        assert c.output_types() == (C,)
        (node,) = c.nodes.values()
        assert node.kind == "gen" and node.name == "f"

    def test_compose_type_mismatch(self):
        with pytest.raises(TypeMismatch):
            compose(generator("f", [A], [B]), generator("g", [C], [A]))

    def test_seq_threads_wires(self):
        c = seq(generator("f", [A], [B]), generator("g", [B], [C]))
        assert c.input_types() == (A,)
        assert c.output_types() == (C,)
        assert len(c.nodes) == 2

    def test_par_concatenates_boundaries(self):
        c = par(generator("f", [A], [B]), identity([C]))
        assert c.input_types() == (A, C)
        assert c.output_types() == (B, C)

    def test_swap_exchanges_types(self):
        c = swap(A, B)
        assert c.input_types() == (A, B)
        assert c.output_types() == (B, A)

    def test_permutation_rejects_non_bijection(self):
        with pytest.raises(ValueError):
            permutation([A, B], [0, 0])

    def test_structural_nodes_have_composite_boundary(self):
        c = tensor_intro(A, B)
        assert c.output_types() == (Tensor(A, B),)
        assert tensor_elim(A, B).input_types() == (Tensor(A, B),)

    def test_dagger_box_reverses_boundary(self):
        c = dagger_box(generator("f", [A], [B, C]))
        assert [type(t).__name__ for t in c.input_types()] == ["Dagger"] * 2
        assert len(c.input_types()) == 2
        assert len(c.output_types()) == 1

    def test_dangling_wire_rejected(self):
        g = generator("f", [A], [B])
        with pytest.raises(IllTyped):
            Circuit(dict(g.wires) | {"w_extra": C}, dict(g.nodes),
                    list(g.inputs), list(g.outputs))


class TestTopoOrder:
    def test_respects_dataflow(self):
        c = seq(generator("f", [A], [B]), generator("g", [B], [C]))
        order = c.topo_order()
        names = [c.nodes[nid].name for nid in order]
        assert names == ["f", "g"]


class TestIsomorphism:
    def test_renaming_invariance(self):
        c = seq(generator("f", [A], [B]), generator("g", [B], [C]))
        wire_map = {w: f"ren_{i}" for i, w in enumerate(c.wires)}
        node_map = {n: f"ren_{i}" for i, n in enumerate(c.nodes)}
        assert isomorphic(c, c.renamed(wire_map, node_map))

    def test_distinguishes_generator_names(self):
        assert not isomorphic(generator("f", [A], [B]),
                              generator("g", [A], [B]))

    def test_distinguishes_wiring(self):
        straight = identity([A, A])
        crossed = swap(A, A)
        assert not isomorphic(straight, crossed)


class TestSerialization:
    def test_corpus_round_trip(self, corpus):
        for name, circuit, _ in corpus:
            again = parse(serialize(circuit))
            assert isomorphic(circuit, again), name

    def test_schema_shape(self):
        doc = json.loads(serialize(generator("f", [A], [B])).decode())
        assert set(doc) >= {"wires", "nodes", "inputs", "outputs"}
        (node,) = doc["nodes"]
        assert node["kind"] == "gen" and node["name"] == "f"

    def test_rejects_unknown_kind(self):
        doc = json.loads(serialize(identity([A])).decode())
        doc["nodes"] = [{"kind": "mystery", "ports": []}]
        with pytest.raises(SchemaError):
            parse(json.dumps(doc).encode())

    @settings(max_examples=50, deadline=None)
    @given(dom=st.lists(object_exprs, max_size=3),
           cod=st.lists(object_exprs, max_size=3))
    def test_generator_round_trip(self, dom, cod):
        c = generator("f", dom, cod)
        assert isomorphic(c, parse(serialize(c)))

    @settings(max_examples=50, deadline=None)
    @given(types=st.lists(object_exprs, min_size=1, max_size=4))
    def test_identity_round_trip(self, types):
        c = identity(types)
        again = parse(serialize(c))
        assert again.input_types() == tuple(types)
        assert again.output_types() == tuple(types)
