"""Matrix semantics: evaluation, duals, and idempotent factorization."""
from __future__ import annotations

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ldckit.circuit import (dagger_box, generator, identity, par, permutation,
                            seq, swap)
from ldckit.errors import (NotIdempotent, ShapeMismatch, UnassignedGenerator,
                           UnboundAtom)
from ldckit.gadget import Gadget
from ldckit.model import (ModelEnv, evaluate, interp, matrices_equal,
                          split_idempotent)
from ldckit.objects import Atom, Bang, Bot, Par, Tensor, Top
from ldckit.suites import SUITES, check_suite

from conftest import random_projector

A, B, C = Atom("A"), Atom("B"), Atom("C")


def env_with(dims: dict[str, int], **gens) -> ModelEnv:
    env = ModelEnv.make(dims)
    for name, mat in gens.items():
        env.assign(name, mat)
    return env


class TestInterp:
    def test_units_are_one_dimensional(self):
        env = ModelEnv.make({})
        assert interp(Top(), env)[0] == 1
        assert interp(Bot(), env)[0] == 1

    def test_both_tensors_multiply_dimensions(self):
        env = ModelEnv.make({"A": 2, "B": 3})
        assert interp(Tensor(A, B), env)[0] == 6
        assert interp(Par(A, B), env)[0] == 6

    def test_bang_counts_bounded_multisets(self):
        env = ModelEnv.make({"A": 2}, degree=3)
        # multisets of size <= 3 over 2 letters: 1 + 2 + 3 + 4
        assert interp(Bang(A), env)[0] == 10

    def test_unbound_atom_rejected(self):
        with pytest.raises(UnboundAtom):
            interp(Atom("missing"), ModelEnv.make({}))


class TestEvaluate:
    def test_generator_is_its_matrix(self):
        f = np.arange(6, dtype=complex).reshape(3, 2)
        env = env_with({"A": 2, "B": 3}, f=f)
        assert np.array_equal(evaluate(generator("f", [A], [B]), env), f)

    def test_unassigned_generator_rejected(self):
        with pytest.raises(UnassignedGenerator):
            evaluate(generator("mystery", [A], [A]), ModelEnv.make({"A": 2}))

    def test_wrong_shape_rejected(self):
        env = env_with({"A": 2, "B": 3}, f=np.eye(2, dtype=complex))
        with pytest.raises(ShapeMismatch):
            evaluate(generator("f", [A], [B]), env)

    def test_identity_wire(self):
        env = ModelEnv.make({"A": 3})
        assert np.array_equal(evaluate(identity([A]), env), np.eye(3))

    def test_parallel_is_kronecker(self):
        rng = np.random.default_rng(0)
        f = rng.standard_normal((3, 2)) + 0j
        g = rng.standard_normal((2, 2)) + 0j
        env = env_with({"A": 2, "B": 3}, f=f, g=g)
        c = par(generator("f", [A], [B]), generator("g", [A], [A]))
        assert np.allclose(evaluate(c, env), np.kron(f, g))

    def test_swap_is_the_commutation_matrix(self):
        env = ModelEnv.make({"A": 2, "B": 3})
        mat = evaluate(swap(A, B), env)
        x = np.arange(6)
        assert np.allclose(mat @ x, x.reshape(2, 3).T.reshape(-1))

    def test_permutation_matches_index_shuffle(self):
        env = ModelEnv.make({"A": 2, "B": 3, "C": 2})
        mat = evaluate(permutation([A, B, C], [2, 0, 1]), env)
        x = np.arange(12).reshape(2, 3, 2)
        assert np.allclose((mat @ x.reshape(-1)).reshape(2, 2, 3),
                           np.transpose(x, (2, 0, 1)))

    def test_dagger_box_is_conjugate_transpose(self):
        rng = np.random.default_rng(1)
        f = rng.standard_normal((3, 2)) + 1j * rng.standard_normal((3, 2))
        env = env_with({"A": 2, "B": 3}, f=f)
        mat = evaluate(dagger_box(generator("f", [A], [B])), env)
        assert np.allclose(mat, f.conj().T)

    def test_state_and_costate(self):
        v = np.array([[1.0], [2.0]], dtype=complex)
        env = env_with({"A": 2}, v=v)
        assert np.allclose(evaluate(generator("v", [], [A]), env), v)
        costate = evaluate(dagger_box(generator("v", [], [A])), env)
        assert costate.shape == (1, 2)
        assert np.allclose(costate @ v, np.array([[5.0]]))

    def test_compositional_on_random_pairs(self):
        rng = np.random.default_rng(7)
        for _ in range(100):
            na, nb, nc = rng.integers(1, 5, size=3)
            f = rng.standard_normal((nb, na)) \
                + 1j * rng.standard_normal((nb, na))
            g = rng.standard_normal((nc, nb)) \
                + 1j * rng.standard_normal((nc, nb))
            env = env_with({"A": int(na), "B": int(nb), "C": int(nc)},
                           f=f, g=g)
            got = evaluate(seq(generator("f", [A], [B]),
                               generator("g", [B], [C])), env)
            assert float(np.max(np.abs(got - g @ f))) <= 1e-10


class TestSnakes:
    @pytest.mark.parametrize("n", [1, 2, 3, 4])
    def test_canonical_dual_satisfies_snakes(self, n):
        eta = np.eye(n, dtype=complex).reshape(n * n, 1)
        env = ModelEnv.make({"X": n})
        g = Gadget("dual", {"A": Atom("X"), "B": Atom("X")},
                   {"eta": eta, "eps": eta.conj().T}, env)
        report = check_suite(g, SUITES["dual"], tol=1e-12)
        assert report.passed
        assert report.worst() <= 1e-12


class TestMatricesEqual:
    def test_exact_equality(self):
        a = np.eye(3, dtype=complex)
        ok, residual = matrices_equal(a, a.copy())
        assert ok and residual == 0.0

    def test_relative_scale(self):
        a = np.full((2, 2), 1e6, dtype=complex)
        ok, _ = matrices_equal(a, a + 1e-5)
        assert ok  # residual is measured relative to the matrix scale

    def test_shape_mismatch_rejected(self):
        with pytest.raises(ShapeMismatch):
            matrices_equal(np.eye(2), np.eye(3))


class TestSplitIdempotent:
    def test_non_idempotent_rejected(self):
        with pytest.raises(NotIdempotent):
            split_idempotent(np.array([[0.0, 1.0], [0.0, 0.0]]) + 0.5)

    def test_zero_rank(self):
        r, s = split_idempotent(np.zeros((3, 3)))
        assert r.shape == (0, 3) and s.shape == (3, 0)

    @settings(max_examples=60, deadline=None)
    @given(n=st.integers(min_value=1, max_value=6),
           seed=st.integers(min_value=0, max_value=2**32 - 1),
           data=st.data())
    def test_random_projector_factorization(self, n, seed, data):
        rank = data.draw(st.integers(min_value=0, max_value=n))
        rng = np.random.default_rng(seed)
        e = random_projector(rng, n, rank)
        r, s = split_idempotent(e, tol=1e-8)
        assert r.shape == (rank, n) and s.shape == (n, rank)
        assert float(np.max(np.abs(s @ r - e))) <= 1e-8 * max(
            1.0, float(np.max(np.abs(e))))
        if rank:
            assert float(np.max(np.abs(r @ s - np.eye(rank)))) <= 1e-8
