"""End-to-end acceptance gate.

One test class per headline guarantee: boxing validity, rewrite soundness,
the matrix kernel, idempotent splitting, the three algebra examples, the
qubit complementary system, the exponential laws, the retract pipeline, and
the metamorphic splitting lemmas.  Tolerances and runtime budgets are part
of the contract and are asserted explicitly.
"""
from __future__ import annotations

import time

import numpy as np
import pytest

from ldckit.circuit import generator, isomorphic, seq
from ldckit.errors import SuiteFailure
from ldckit.exponential import (bang_matrix, build_exp,
                                comonad_coassoc_report, comonoid_residual,
                                retract_idempotent)
from ldckit.gadget import Gadget
from ldckit.model import ModelEnv, evaluate, split_idempotent
from ldckit.objects import Atom, Par, Tensor, Top
from ldckit.rewrite import expand_wire, normalize
from ldckit.structures import (complementary_from_idempotent,
                               split_binary_idempotent, split_linear_comonoid,
                               split_linear_monoid)
from ldckit.suites import SUITES, check_suite
from ldckit.validity import validate, validate_all_orders

from conftest import random_projector
from test_structures import (E_BAD, E_GOOD, bell, copy_comonoid,
                             pointwise_monoid)


class TestBoxingValidity:
    def test_distributors_decide_quickly(self, corpus):
        circuits = dict((name, c) for name, c, _ in corpus)
        t0 = time.perf_counter()
        good = validate(circuits["left-distributor"])
        t1 = time.perf_counter()
        bad = validate(circuits["reverse-distributor"])
        t2 = time.perf_counter()
        assert good.valid and good.stuck is None
        assert not bad.valid and bad.stuck is not None
        assert t1 - t0 < 0.1
        assert t2 - t1 < 0.1

    def test_corpus_is_large_enough_and_order_independent(self, corpus):
        assert len(corpus) >= 15
        names = [name for name, _, _ in corpus]
        # unit and thinning cases are represented
        assert {"top-unit-elim", "bot-unit-intro", "top-intro-elim"} \
            <= set(names)
        seeds = list(range(20))
        for name, circuit, expect in corpus:
            assert validate(circuit).valid is expect, name
            assert validate_all_orders(circuit, seeds), name


class TestRewriteSoundness:
    def test_normalization_preserves_verdicts_and_shrinks(self, corpus):
        t0 = time.perf_counter()
        for name, circuit, _ in corpus:
            reduced = normalize(circuit)
            assert validate(circuit).valid == validate(reduced).valid, name
            assert len(reduced.nodes) <= len(circuit.nodes), name
            for w, t in circuit.wires.items():
                if isinstance(t, (Tensor, Par, Top)):
                    expanded = expand_wire(circuit, w)
                    assert len(expanded.nodes) == len(circuit.nodes) + 2
                    assert isomorphic(normalize(expanded), reduced), (name, w)
        assert time.perf_counter() - t0 < 1.0


class TestMatrixKernel:
    @pytest.mark.parametrize("n", [1, 2, 3, 4])
    def test_snake_equations(self, n):
        eta = np.eye(n, dtype=complex).reshape(n * n, 1)
        env = ModelEnv.make({"X": n})
        g = Gadget("dual", {"A": Atom("X"), "B": Atom("X")},
                   {"eta": eta, "eps": eta.conj().T}, env)
        assert check_suite(g, SUITES["dual"], 1e-12).worst() <= 1e-12

    def test_evaluation_is_compositional(self):
        A, B, C = Atom("A"), Atom("B"), Atom("C")
        rng = np.random.default_rng(2024)
        for _ in range(100):
            na, nb, nc = (int(x) for x in rng.integers(1, 5, size=3))
            f = rng.standard_normal((nb, na)) \
                + 1j * rng.standard_normal((nb, na))
            g = rng.standard_normal((nc, nb)) \
                + 1j * rng.standard_normal((nc, nb))
            env = ModelEnv.make({"A": na, "B": nb, "C": nc},
                                generators={"f": f, "g": g})
            got = evaluate(seq(generator("f", [A], [B]),
                               generator("g", [B], [C])), env)
            assert float(np.max(np.abs(got - g @ f))) <= 1e-10


class TestIdempotentSplitting:
    def test_random_conjugated_projectors(self):
        rng = np.random.default_rng(7)
        for _ in range(100):
            n = int(rng.integers(1, 7))
            rank = int(rng.integers(0, n + 1))
            e = random_projector(rng, n, rank)
            r, s = split_idempotent(e, tol=1e-8)
            scale = max(1.0, float(np.max(np.abs(e))))
            assert float(np.max(np.abs(s @ r - e))) <= 1e-8 * scale
            if rank:
                assert float(np.max(np.abs(r @ s - np.eye(rank)))) <= 1e-8

    def test_binary_splittings_are_isomorphic(self):
        rng = np.random.default_rng(8)
        for _ in range(20):
            na, nb = (int(x) for x in rng.integers(2, 7, size=2))
            u = rng.standard_normal((nb, na)) \
                + 1j * rng.standard_normal((nb, na))
            v = np.linalg.pinv(u)
            env = ModelEnv.make({"A": na, "B": nb})
            g = Gadget("binary_idempotent",
                       {"A": Atom("A"), "B": Atom("B")},
                       {"u": u, "v": v}, env)
            res = split_binary_idempotent(g, tol=1e-8)
            alpha, beta = res["alpha"], res["beta"]
            k = res["dim_e"]
            assert float(np.max(np.abs(alpha @ beta - np.eye(k)))) <= 1e-8
            assert float(np.max(np.abs(beta @ alpha - np.eye(k)))) <= 1e-8


class TestAlgebraExamples:
    def test_verdict_matrix(self, weil_gadget, quad4_gadget,
                            quad4_flip_gadget):
        tol = 1e-9
        t0 = time.perf_counter()
        for g in (weil_gadget, quad4_gadget, quad4_flip_gadget):
            assert check_suite(g, SUITES["linear-monoid"], tol).passed
        for g in (weil_gadget, quad4_gadget):
            assert check_suite(g, SUITES["dagger-linear-monoid"],
                               tol).passed
            report = check_suite(g, SUITES["frobenius-coincidence"], tol)
            assert not report.passed
            assert report.worst() >= 1e3 * tol
        flip = check_suite(quad4_flip_gadget,
                           SUITES["dagger-linear-monoid"], tol)
        assert not flip.passed
        frob = check_suite(quad4_flip_gadget,
                           SUITES["frobenius-coincidence"], tol)
        assert not frob.passed and frob.worst() >= 1e3 * tol
        assert time.perf_counter() - t0 < 1.0


class TestComplementarySystem:
    def test_qubit_passes_at_tight_tolerance(self, qubit_gadget):
        comp = check_suite(qubit_gadget, SUITES["complementary"], 1e-12)
        hopf = check_suite(qubit_gadget, SUITES["hopf"], 1e-12)
        assert comp.passed and comp.worst() <= 1e-12
        assert hopf.passed and hopf.worst() <= 1e-12

    @pytest.mark.parametrize("role", ["m", "u", "d", "k",
                                      "eta_L", "eps_L", "eta_R", "eps_R",
                                      "tau_L", "gam_L", "tau_R", "gam_R"])
    def test_every_structure_map_is_load_bearing(self, qubit_gadget, role):
        mat = qubit_gadget.morphism(role).copy()
        mat[0, 0] += 1e-3
        perturbed = qubit_gadget.with_morphisms(**{role: mat})
        assert not all(
            check_suite(perturbed, SUITES[name], 1e-9).passed
            for name in ("complementary", "hopf", "linear-bialgebra"))


class TestExponentialLaws:
    def test_laws_at_degree_three(self):
        t0 = time.perf_counter()
        exp = build_exp(2, 3)
        assert exp.dim == 10 and exp.outer.dim == 286
        # comonoid laws hold exactly on integer matrices
        assert np.array_equal(exp.Delta, exp.Delta.real.astype(int))
        assert comonoid_residual(exp.Delta, exp.counit_e) == 0.0
        # comonad coassociativity on the degree window
        ok, worst, checked = comonad_coassoc_report(2, 3, tol=1e-9)
        assert ok and worst <= 1e-9 and checked > 0
        # dagger coherence between the comonad and monad sides
        env = ModelEnv.make({"bA": 10, "A": 2, "bbA": 286})
        g = Gadget("exp_coherence",
                   {"X": Atom("bA"), "Y": Atom("A"), "Z": Atom("bbA")},
                   {"Delta": exp.Delta, "counit": exp.counit_e,
                    "eps": exp.eps, "delta": exp.delta,
                    "nabla": exp.nabla, "unit": exp.unit_u,
                    "eta": exp.eta, "mu": exp.mu}, env)
        assert check_suite(g, SUITES["dagger-bang-coherence"], 1e-9).passed
        # functoriality over 50 random composable pairs
        rng = np.random.default_rng(5)
        basis = exp.basis
        for _ in range(50):
            f = rng.standard_normal((2, 2)) + 1j * rng.standard_normal((2, 2))
            h = rng.standard_normal((2, 2)) + 1j * rng.standard_normal((2, 2))
            lhs = bang_matrix(h @ f, basis, basis)
            rhs = bang_matrix(h, basis, basis) @ bang_matrix(f, basis, basis)
            assert float(np.max(np.abs(lhs - rhs))) <= 1e-10
        assert time.perf_counter() - t0 < 30.0


class TestRetractPipeline:
    def test_exponential_retract_recovers_the_qubit(self, qubit_gadget):
        t0 = time.perf_counter()
        result = retract_idempotent(qubit_gadget, degree=3)
        eps, flat, sharp, eta = result["splitting"]
        # the section is exactly split by the dereliction
        assert np.array_equal(eps @ flat, np.eye(2))
        e_bang = result["e_bang"]
        assert np.array_equal(e_bang @ e_bang, e_bang)
        out = complementary_from_idempotent(
            result["gadget"], tol=1e-8, retractional=(True, False),
            splitting=result["splitting"])
        assert out["conditions"].passed
        assert out["conditions"].worst() <= 1e-8
        assert out["complementary"].passed
        recovered = out["split"]
        err = max(float(np.max(np.abs(recovered.morphism(role)
                                      - qubit_gadget.morphism(role))))
                  for role in recovered.morphisms
                  if role in qubit_gadget.morphisms)
        assert err <= 1e-8
        assert time.perf_counter() - t0 < 60.0


class TestSplittingLemmas:
    """For each splitting lemma, a generated passing instance and a
    generated counterexample: the compatibility verdict and the verdict on
    the split structure must agree in both directions."""

    def test_dual_lemma(self):
        env = ModelEnv.make({"X": 3})
        X = Atom("X")

        def split_dual(e_a, e_b):
            r, s = split_idempotent(e_a)
            r2, s2 = split_idempotent(e_b)
            senv = ModelEnv.make({"E": r.shape[0], "E2": r2.shape[0]})
            return Gadget("dual", {"A": Atom("E"), "B": Atom("E2")},
                          {"eta": np.kron(r, r2) @ bell(3),
                           "eps": bell(3).conj().T @ np.kron(s2, s)}, senv)

        e_small = np.diag([1.0, 0.0, 0.0]).astype(complex)
        for e_a, e_b, expect in [(E_GOOD, E_GOOD, True),
                                 (E_GOOD, e_small, False)]:
            probe = Gadget("dual_idempotent", {"A": X, "B": X},
                           {"eta": bell(3), "eps": bell(3).conj().T,
                            "e_a": e_a, "e_b": e_b}, env)
            compat = check_suite(probe, SUITES["dual-sectional"], 1e-9)
            split = check_suite(split_dual(e_a, e_b), SUITES["dual"], 1e-9)
            assert compat.passed is expect
            assert split.passed is expect

    def test_monoid_lemma(self):
        g = pointwise_monoid()
        split = split_linear_monoid(g, E_GOOD, E_GOOD, retractional=True)
        assert check_suite(split, SUITES["linear-monoid"], 1e-9).passed
        with pytest.raises(SuiteFailure):
            split_linear_monoid(g, E_BAD, E_BAD, retractional=True)
        forced = split_linear_monoid(g, E_BAD, E_BAD, check=False)
        assert not check_suite(forced, SUITES["linear-monoid"], 1e-9).passed

    def test_comonoid_lemma(self):
        g = copy_comonoid()
        split = split_linear_comonoid(g, E_GOOD, E_GOOD)
        assert check_suite(split, SUITES["linear-comonoid"], 1e-9).passed
        with pytest.raises(SuiteFailure):
            split_linear_comonoid(g, E_BAD, E_BAD)
        forced = split_linear_comonoid(g, E_BAD, E_BAD, check=False)
        assert not check_suite(forced, SUITES["linear-comonoid"],
                               1e-9).passed

    def test_bialgebra_lemma(self, qubit_gadget):
        # passing instance: the canonical retract of the degree-2
        # exponential splits back to a complementary system
        result = retract_idempotent(qubit_gadget, degree=2)
        out = complementary_from_idempotent(
            result["gadget"], tol=1e-9, retractional=(True, False),
            splitting=result["splitting"])
        assert out["conditions"].passed and out["complementary"].passed

        # counterexample: phase-twisted comonoid duals keep the linear
        # bialgebra intact but break complementarity; with the identity
        # idempotent the two reports must fail residual for residual
        phase = np.diag([1.0, -1.0]).astype(complex)
        eye = np.eye(2, dtype=complex)
        cup = np.kron(eye, phase) @ qubit_gadget.morphism("tau_L")
        cap = qubit_gadget.morphism("gam_L") @ np.kron(phase, eye)
        twisted = qubit_gadget.with_morphisms(
            tau_L=cup, tau_R=cup.copy(), gam_L=cap, gam_R=cap.copy(),
            ub=eye, vb=eye)
        assert check_suite(twisted, SUITES["linear-bialgebra"], 1e-9).passed
        bad = complementary_from_idempotent(twisted, tol=1e-9, check=False)
        assert not bad["conditions"].passed
        assert not bad["complementary"].passed
        assert list(bad["conditions"].residuals.values()) \
            == list(bad["complementary"].residuals.values())
