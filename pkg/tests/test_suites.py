"""Equation suites on the shipped example gadgets."""
from __future__ import annotations

import numpy as np
import pytest

from ldckit.errors import MissingRole
from ldckit.fixtures import fixture_names, load_gadget
from ldckit.gadget import Gadget
from ldckit.model import ModelEnv
from ldckit.objects import Atom
from ldckit.suites import SUITES, check_suite

TOL = 1e-9


class TestRegistry:
    def test_known_suites_present(self):
        expected = {"dual", "dual-morphism", "dual-sectional",
                    "dual-retractional", "binary-idempotent", "coring",
                    "linear-monoid", "monoid-actions",
                    "dagger-linear-monoid", "frobenius-coincidence",
                    "linear-comonoid", "dagger-linear-comonoid",
                    "linear-bialgebra", "complementary", "hopf",
                    "complementary-idempotent-cond", "preunitary",
                    "dagger-bang-coherence"}
        assert expected <= set(SUITES)

    def test_missing_role_is_loud(self, qubit_gadget):
        stripped = Gadget(qubit_gadget.kind, dict(qubit_gadget.objects),
                          {"m": qubit_gadget.morphism("m")},
                          qubit_gadget.env)
        with pytest.raises(MissingRole):
            check_suite(stripped, SUITES["linear-bialgebra"], TOL)

    def test_report_json_shape(self, qubit_gadget):
        report = check_suite(qubit_gadget, SUITES["complementary"], TOL)
        doc = report.to_json()
        assert doc["suite"] == "complementary"
        assert doc["pass"] is True
        assert doc["tol"] == TOL
        labels = {e["label"] for e in doc["equations"]}
        assert labels == {"comp.1-left", "comp.1-right", "comp.2-left",
                          "comp.2-right", "comp.3-left", "comp.3-right"}
        assert all(e["residual"] == 0.0 for e in doc["equations"])


class TestExampleVerdicts:
    """The shipped algebras behave as documented: all three are linear
    monoids, two are dagger linear monoids, none admits the identity as a
    Frobenius coincidence isomorphism, and the qubit gadget is a
    complementary Hopf system."""

    def test_all_fixtures_load(self):
        assert fixture_names() == ["quad4", "quad4-flip", "qubit-zx", "weil"]
        for name in fixture_names():
            load_gadget(name)

    @pytest.mark.parametrize("name", ["weil", "quad4", "quad4-flip"])
    def test_algebras_are_linear_monoids(self, name):
        g = load_gadget(name)
        assert check_suite(g, SUITES["linear-monoid"], TOL).passed

    @pytest.mark.parametrize("name", ["weil", "quad4"])
    def test_dagger_linear_monoids(self, name):
        g = load_gadget(name)
        assert check_suite(g, SUITES["dagger-linear-monoid"], TOL).passed

    def test_flip_breaks_the_dagger_comparison(self, quad4_flip_gadget):
        report = check_suite(quad4_flip_gadget,
                             SUITES["dagger-linear-monoid"], TOL)
        assert not report.passed
        assert report.residuals["comult-is-mult-dagger"] >= 1.0

    @pytest.mark.parametrize("name", ["weil", "quad4", "quad4-flip"])
    def test_no_frobenius_coincidence(self, name):
        g = load_gadget(name)
        report = check_suite(g, SUITES["frobenius-coincidence"], TOL)
        assert not report.passed
        assert report.worst() >= 1e3 * TOL

    def test_qubit_is_complementary_and_hopf(self, qubit_gadget):
        for suite in ("linear-bialgebra", "complementary", "hopf",
                      "frobenius-coincidence"):
            report = check_suite(qubit_gadget, SUITES[suite], TOL)
            assert report.passed, suite
            assert report.worst() == 0.0, suite

    def test_qubit_coring_idempotent(self, qubit_gadget):
        u = qubit_gadget.morphism("u")
        k = qubit_gadget.morphism("k")
        probe = Gadget("binary_idempotent", dict(qubit_gadget.objects),
                       {"u": u @ k, "v": u @ k}, qubit_gadget.env)
        assert check_suite(probe, SUITES["binary-idempotent"], TOL).passed
        assert check_suite(probe, SUITES["coring"], TOL).passed


class TestSensitivity:
    """Perturbing any structure map must trip at least one equation."""

    @pytest.mark.parametrize("role", ["m", "u", "d", "k",
                                      "eta_L", "eps_L", "eta_R", "eps_R",
                                      "tau_L", "gam_L", "tau_R", "gam_R"])
    def test_perturbation_detected(self, qubit_gadget, role):
        mat = qubit_gadget.morphism(role).copy()
        mat[0, 0] += 1e-3
        perturbed = qubit_gadget.with_morphisms(**{role: mat})
        verdicts = [check_suite(perturbed, SUITES[name], TOL).passed
                    for name in ("complementary", "hopf", "linear-bialgebra")]
        assert not all(verdicts)


class TestGradedMasking:
    def test_out_of_window_entries_are_ignored(self):
        """With a grading on the object, equations only constrain entries
        whose boundary degree stays within the environment's bound."""
        n = 3
        eta = np.eye(n, dtype=complex).reshape(n * n, 1)
        # spoil the snake exactly on the highest-degree basis vector
        eta_bad = eta.copy()
        eta_bad[(n - 1) * n + (n - 1), 0] = 0
        env = ModelEnv.make({"X": n}, degree=1)
        g = Gadget("dual", {"A": Atom("X"), "B": Atom("X")},
                   {"eta": eta_bad, "eps": eta.conj().T}, env,
                   gradings={"A": [0, 1, 2], "B": [0, 1, 2]})
        assert check_suite(g, SUITES["dual"], TOL).passed
        ungraded = Gadget("dual", g.objects, g.morphisms, env)
        assert not check_suite(ungraded, SUITES["dual"], TOL).passed
