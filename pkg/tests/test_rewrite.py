"""Reduction rewriting and wire expansion."""
from __future__ import annotations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ldckit.circuit import (Circuit, Node, generator, identity, isomorphic,
                            par, par_elim, par_intro, seq, tensor_elim,
                            tensor_intro, top_elim_on, top_intro)
from ldckit.errors import NotExpandable
from ldckit.objects import Atom, Bot, Par, Tensor, Top
from ldckit.rewrite import expand_wire, normalize
from ldckit.validity import validate

A, B, C = Atom("A"), Atom("B"), Atom("C")


class TestReduction:
    def test_tensor_intro_elim_cancels(self):
        c = seq(tensor_intro(A, B), tensor_elim(A, B))
        assert len(normalize(c).nodes) == 0

    def test_par_elim_intro_cancels(self):
        c = seq(par_elim(A, B), par_intro(A, B))
        assert len(normalize(c).nodes) == 0

    def test_unit_intro_elim_cancels(self):
        c = seq(par(top_intro(), identity([A])), top_elim_on(A))
        assert len(normalize(c).nodes) == 0

    def test_normal_forms_are_fixed_points(self, corpus):
        for name, circuit, _ in corpus:
            once = normalize(circuit)
            assert isomorphic(once, normalize(once)), name

    def test_node_count_never_increases(self, corpus):
        for name, circuit, _ in corpus:
            reduced = normalize(circuit)
            assert len(reduced.nodes) <= len(circuit.nodes), name
            # every reduction step erases an intro/elim pair
            assert (len(circuit.nodes) - len(reduced.nodes)) % 2 == 0, name

    def test_generators_block_reduction(self):
        c = seq(tensor_intro(A, B), generator("f", [Tensor(A, B)], [C]))
        assert len(normalize(c).nodes) == len(c.nodes)

    def test_thinning_anchor_blocks_unit_reduction(self):
        # the unit wire anchors a third node's thinning link, so erasing
        # the intro/elim pair would orphan that link
        c = Circuit(
            {"wt": Top(), "wb": Bot()},
            {"n1": Node(kind="top_intro", ins=(), outs=("wt",)),
             "n2": Node(kind="top_elim", ins=("wt",), outs=(), thin="wb"),
             "n3": Node(kind="bot_intro", ins=(), outs=("wb",), thin="wt")},
            [], ["wb"])
        assert len(normalize(c).nodes) == 3


class TestValiditySoundness:
    def test_verdict_stable_under_normalization(self, corpus):
        for name, circuit, _ in corpus:
            assert validate(circuit).valid \
                == validate(normalize(circuit)).valid, name


class TestExpansion:
    def test_unknown_wire_rejected(self):
        with pytest.raises(NotExpandable):
            expand_wire(identity([A]), "nonexistent")

    def test_atomic_wire_rejected(self):
        c = identity([A])
        (w,) = c.wires
        with pytest.raises(NotExpandable):
            expand_wire(c, w)

    def test_expand_inserts_elim_intro_pair(self):
        c = identity([Tensor(A, B)])
        (w,) = c.wires
        expanded = expand_wire(c, w)
        kinds = sorted(n.kind for n in expanded.nodes.values())
        assert kinds == ["tensor_elim", "tensor_intro"]

    def test_expand_then_normalize_round_trips(self, corpus):
        for name, circuit, _ in corpus:
            for w, t in circuit.wires.items():
                if not isinstance(t, (Tensor, Par, Top)):
                    continue
                expanded = expand_wire(circuit, w)
                assert isomorphic(normalize(expanded),
                                  normalize(circuit)), (name, w)

    @settings(max_examples=30, deadline=None)
    @given(depth=st.integers(min_value=1, max_value=3))
    def test_repeated_expansion_normalizes_back(self, depth):
        c = generator("f", [Tensor(A, B)], [Par(B, C)])
        current = c
        for _ in range(depth):
            composite = [w for w, t in current.wires.items()
                         if isinstance(t, (Tensor, Par))]
            current = expand_wire(current, composite[0])
        assert isomorphic(normalize(current), c)
