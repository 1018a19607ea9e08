"""Correctness checking by box merging."""
from __future__ import annotations

import pytest

from ldckit.circuit import (generator, identity, par, par_elim, par_intro,
                            seq, swap, tensor_elim, tensor_intro, top_elim_on,
                            top_intro)
from ldckit.objects import Atom
from ldckit.validity import validate, validate_all_orders

A, B, C = Atom("A"), Atom("B"), Atom("C")


class TestVerdicts:
    def test_corpus_verdicts(self, corpus):
        for name, circuit, expect in corpus:
            assert validate(circuit).valid is expect, name

    def test_single_generator_is_one_box(self):
        rep = validate(generator("f", [A], [B]))
        assert rep.valid and rep.stuck is None

    def test_two_components_are_stuck(self):
        rep = validate(identity([A, B]))
        assert not rep.valid
        assert rep.stuck is not None
        assert len(rep.stuck["boxes"]) == 2

    def test_double_attachment_never_merges(self):
        c = seq(generator("f", [A], [B, B]), generator("g", [B, B], [C]))
        rep = validate(c)
        assert not rep.valid
        # the stuck state records the two-attachment cut between the boxes
        assert any(cut["attachments"] == 2 for cut in rep.stuck["cuts"])


class TestTrace:
    def test_trace_records_every_rule_application(self):
        c = seq(tensor_elim(A, B), tensor_intro(A, B))
        rep = validate(c)
        rules = [step["rule"] for step in rep.trace]
        assert "a1" in rules      # introduction starts boxed
        assert "b1" in rules      # elimination absorbed into the box
        assert rules.count("c") >= 1

    def test_unit_absorption_rules(self):
        c = seq(par(top_intro(), identity([A])), top_elim_on(A))
        rep = validate(c)
        rules = [step["rule"] for step in rep.trace]
        assert rep.valid
        assert "d2" in rules and "e1" in rules


class TestOrderIndependence:
    def test_corpus_verdicts_are_order_independent(self, corpus):
        seeds = list(range(20))
        for name, circuit, _ in corpus:
            assert validate_all_orders(circuit, seeds), name


class TestSymmetryDissolution:
    def test_bare_swap_denotes_two_components(self):
        assert not validate(swap(A, B)).valid

    def test_swap_conjugated_by_tensor_is_valid(self):
        c = seq(tensor_elim(A, B), swap(A, B), tensor_intro(B, A))
        assert validate(c).valid

    def test_swap_chain_collapses_to_one_edge(self):
        c = seq(tensor_elim(A, A), swap(A, A), swap(A, A),
                tensor_intro(A, A))
        assert validate(c).valid


class TestParIntroBranches:
    def test_par_intro_needs_both_branches_in_one_box(self):
        # the two branch wires come from different generators, so the
        # par-introduction is never absorbed
        c = seq(par(generator("f", [], [A]), generator("g", [], [B])),
                par_intro(A, B))
        rep = validate(c)
        assert not rep.valid
        assert rep.stuck["unabsorbed"]

    def test_par_roundtrip_absorbs(self):
        assert validate(seq(par_elim(A, B), par_intro(A, B))).valid
