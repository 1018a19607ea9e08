"""Degree-truncated free exponential on the matrix model.

The space !A has the multisets of basis labels of A of size at most d as
basis.  The comultiplication has coefficient 1 for every distinct ordered
pair of sub-multisets; the counit projects onto the empty multiset; the
dereliction projects onto singletons.  The monad side is given by conjugate
transposes.  Couniversal lifts are computed degree by degree from the
comonoid-morphism constraint and fail loudly when the constraints are
inconsistent, making cofreeness an executable contract.
"""
from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from typing import Optional, Sequence

import numpy as np

from .errors import LiftFailure, NotAComonoid, ShapeMismatch, SuiteFailure
from .gadget import Gadget
from .model import ModelEnv, interp
from .multiset import (MultisetBasis, distinct_orderings, multiset_union,
                       remove_one, sub_multiset_splits)
from .objects import Atom


# -- structure matrices ----------------------------------------------------

def comult_matrix(basis: MultisetBasis) -> np.ndarray:
    """Delta: !A -> !A (x) !A, coefficient 1 per ordered sub-multiset pair."""
    n = basis.dim
    out = np.zeros((n * n, n), dtype=complex)
    for i, m in enumerate(basis.elements):
        for m1, m2 in sub_multiset_splits(m):
            out[basis.index[m1] * n + basis.index[m2], i] += 1
    return out


def comult_apply(basis: MultisetBasis, f: np.ndarray) -> np.ndarray:
    """Delta . f computed without materializing Delta; result has shape
    (dim, dim, f.cols) indexed by (m1, m2, column)."""
    out = np.zeros((basis.dim, basis.dim, f.shape[1]), dtype=complex)
    for i1, m1 in enumerate(basis.elements):
        for i2, m2 in enumerate(basis.elements):
            if len(m1) + len(m2) > basis.degree:
                continue
            out[i1, i2, :] = f[basis.index[multiset_union(m1, m2)], :]
    return out


def counit_matrix(basis: MultisetBasis) -> np.ndarray:
    out = np.zeros((1, basis.dim), dtype=complex)
    out[0, basis.index[()]] = 1
    return out


def dereliction_matrix(basis: MultisetBasis) -> np.ndarray:
    """eps: !A -> A, projection onto singleton multisets."""
    out = np.zeros((len(basis.base), basis.dim), dtype=complex)
    for a in range(len(basis.base)):
        out[a, basis.index[(a,)]] = 1
    return out


def bang_matrix(f: np.ndarray, basis_a: MultisetBasis,
                basis_b: MultisetBasis) -> np.ndarray:
    """Functorial action !f: !A -> !B of f: A -> B, acting grade by grade
    as the symmetric power in the multiset basis."""
    if f.shape != (len(basis_b.base), len(basis_a.base)):
        raise ShapeMismatch(
            f"expected {(len(basis_b.base), len(basis_a.base))}, "
            f"got {f.shape}")
    out = np.zeros((basis_b.dim, basis_a.dim), dtype=complex)
    out[basis_b.index[()], basis_a.index[()]] = 1
    for n in range(1, min(basis_a.degree, basis_b.degree) + 1):
        for ia in basis_a.grade_indices(n):
            m = basis_a.elements[ia]
            orderings = distinct_orderings(m)
            for ib in basis_b.grade_indices(n):
                mp = basis_b.elements[ib]  # fixed ordering of the target
                coeff = 0
                for w in orderings:
                    prod = 1
                    for bi, ai in zip(mp, w):
                        prod *= f[bi, ai]
                        if prod == 0:
                            break
                    coeff += prod
                out[ib, ia] = coeff
    return out


# -- couniversal lifts -----------------------------------------------------

def comonoid_residual(delta_c: np.ndarray, e_c: np.ndarray) -> float:
    """Worst residual of coassociativity and the two counit laws."""
    dim = delta_c.shape[1]
    d3 = delta_c.reshape(dim, dim, dim)
    left = np.einsum("xyc,pqx->pqyc", d3, d3, optimize=True)
    right = np.einsum("xyc,pqy->xpqc", d3, d3, optimize=True)
    r1 = float(np.max(np.abs(left - right))) if dim else 0.0
    lhs = np.einsum("xyc,x->yc", d3, e_c[0])
    rhs = np.einsum("xyc,y->xc", d3, e_c[0])
    eye = np.eye(dim, dtype=complex)
    r2 = float(np.max(np.abs(lhs - eye)))
    r3 = float(np.max(np.abs(rhs - eye)))
    return max(r1, r2, r3)


def lift_flat(comonoid: tuple[np.ndarray, np.ndarray], f: np.ndarray,
              target: MultisetBasis, tol: float = 1e-9,
              verify: bool = True) -> np.ndarray:
    """Unique comonoid morphism F: C -> !A with F;eps = f, for a comonoid
    (C, delta_c, e_c) and f: C -> A.  Solved degree by degree; the grade-n
    row of F is forced by any single element of the multiset, and the
    remaining choices must agree (checked, with loud failure)."""
    delta_c, e_c = (np.asarray(x, dtype=complex) for x in comonoid)
    f = np.asarray(f, dtype=complex)
    dim_c = f.shape[1]
    if delta_c.shape != (dim_c * dim_c, dim_c) or e_c.shape != (1, dim_c):
        raise ShapeMismatch("comonoid data shapes do not match f")
    if f.shape[0] != len(target.base):
        raise ShapeMismatch("f must land in the base of the target")
    res = comonoid_residual(delta_c, e_c)
    if res > tol:
        raise NotAComonoid(res)
    d3 = delta_c.reshape(dim_c, dim_c, dim_c)
    big = np.zeros((target.dim, dim_c), dtype=complex)
    big[target.index[()], :] = e_c[0]
    for a in range(len(target.base)):
        big[target.index[(a,)], :] = f[a]
    scale = max(1.0, float(np.max(np.abs(f))) if f.size else 0.0)
    worst = 0.0
    for n in range(2, target.degree + 1):
        for i in target.grade_indices(n):
            m = target.elements[i]
            rows = []
            for a in sorted(set(m)):
                rest = target.index[remove_one(m, a)]
                rows.append(np.einsum("i,j,ijc->c", f[a], big[rest], d3))
            big[i, :] = rows[0]
            for other in rows[1:]:
                worst = max(worst, float(np.max(np.abs(other - rows[0]))))
    if worst > tol * scale:
        raise LiftFailure(
            f"degree-wise constraints are inconsistent (residual {worst:.3e})")
    if verify:
        # Compare only on the degree window: outside it the truncated
        # comultiplication cannot produce the term, by construction.
        lhs = comult_apply(target, big)
        rhs = np.einsum("mc,nd,cde->mne", big, big, d3, optimize=True)
        grades = np.array(target.degrees())
        mask = (grades[:, None] + grades[None, :]) <= target.degree
        r = float(np.max(np.abs((lhs - rhs) * mask[:, :, None])))
        if r > tol * max(1.0, float(np.max(np.abs(big)))):
            raise LiftFailure(f"comonoid morphism law fails ({r:.3e})")
    return big


def lift_sharp(monoid: tuple[np.ndarray, np.ndarray], g: np.ndarray,
               target: MultisetBasis, tol: float = 1e-9,
               verify: bool = True) -> np.ndarray:
    """Unique monoid morphism ?B -> M with eta;g# = g: the dagger dual of
    lift_flat applied to the daggered data."""
    mult, unit = (np.asarray(x, dtype=complex) for x in monoid)
    flat = lift_flat((mult.conj().T, unit.conj().T), g.conj().T, target,
                     tol=tol, verify=verify)
    return flat.conj().T


# -- bundled structure -----------------------------------------------------

@dataclass
class ExpStructure:
    basis: MultisetBasis
    outer: Optional[MultisetBasis]
    Delta: np.ndarray        # !A -> !A (x) !A
    counit_e: np.ndarray     # !A -> T
    eps: np.ndarray          # !A -> A
    delta: Optional[np.ndarray]  # !A -> !!A
    nabla: np.ndarray        # ?A (x) ?A -> ?A
    unit_u: np.ndarray       # _|_ -> ?A
    eta: np.ndarray          # A -> ?A
    mu: Optional[np.ndarray]     # ??A -> ?A
    s_iso: np.ndarray
    t_iso: np.ndarray

    @property
    def dim(self) -> int:
        return self.basis.dim


def build_exp(base: Sequence[str] | int, degree: int,
              with_duplication: bool = True) -> ExpStructure:
    if isinstance(base, int):
        base = [str(i) for i in range(base)]
    basis = MultisetBasis(base, degree)
    delta_mat = comult_matrix(basis)
    e_mat = counit_matrix(basis)
    eps_mat = dereliction_matrix(basis)
    outer = None
    dup = None
    if with_duplication:
        outer = MultisetBasis(basis.labels(), degree)
        dup = lift_flat((delta_mat, e_mat),
                        np.eye(basis.dim, dtype=complex), outer,
                        verify=basis.dim <= 64)
    eye = np.eye(basis.dim, dtype=complex)
    return ExpStructure(
        basis=basis, outer=outer,
        Delta=delta_mat, counit_e=e_mat, eps=eps_mat, delta=dup,
        nabla=delta_mat.conj().T, unit_u=e_mat.conj().T,
        eta=eps_mat.conj().T,
        mu=dup.conj().T if dup is not None else None,
        s_iso=eye, t_iso=eye)


# -- sparse column calculus ------------------------------------------------
#
# Iterated exponentials are too large to materialize densely, but every
# structure map has small per-column support.  Elements are represented
# structurally: a multiset is a sorted tuple of its elements.

def _orderings_count(m: tuple) -> int:
    n = math.factorial(len(m))
    for x in set(m):
        n //= math.factorial(m.count(x))
    return n


def delta_sparse(m: tuple, degree: int) -> dict:
    """Column of the duplication at a multiset m: all multisets of parts
    with union m, parts of size <= degree, at most degree parts including
    empty padding; coefficient 1 each."""
    found: set = set()

    def rec(remaining: tuple, acc: tuple) -> None:
        if len(acc) > degree:
            return
        if not remaining:
            for extra in range(degree - len(acc) + 1):
                found.add(tuple(sorted(acc + ((),) * extra)))
            return
        first = remaining[0]
        seen = set()
        for p1, rest in sub_multiset_splits(remaining):
            if not p1 or first not in p1 or len(p1) > degree:
                continue
            if (p1, rest) in seen:
                continue
            seen.add((p1, rest))
            rec(rest, tuple(sorted(acc + (p1,))))

    rec(tuple(m), ())
    return {key: 1 for key in found}


def bang_apply_sparse(f_col, m: tuple) -> dict:
    """Column of !f at the multiset m, where f_col(x) gives the sparse
    column of f at a base element x."""
    acc: dict = {}
    for w in set(itertools.permutations(m)):
        cols = [f_col(x) for x in w]
        for choice in itertools.product(*(c.items() for c in cols)):
            coeff = 1
            for _, c in choice:
                coeff *= c
            if coeff == 0:
                continue
            key = tuple(sorted(t for t, _ in choice))
            acc[key] = acc.get(key, 0) + coeff
    return {k: v / _orderings_count(k) for k, v in acc.items() if v != 0}


def _fits_degree(elt, degree: int) -> bool:
    """Whether a nested multiset element lies in the degree-d basis at
    every level."""
    if not isinstance(elt, tuple):
        return True
    return len(elt) <= degree and all(_fits_degree(x, degree) for x in elt)


def comonad_coassoc_report(base_dim: int, degree: int,
                           tol: float = 1e-9) -> tuple[bool, float, int]:
    """Check delta;!delta = delta;delta on the window where no intermediate
    value exceeds the degree bound.  For a target entry, the only
    contributing intermediate is the multiset of part-unions; the entry is
    in-window exactly when that multiset fits in degree d.  Returns
    (pass, worst residual on the window, entries compared)."""
    basis = MultisetBasis([str(i) for i in range(base_dim)], degree)

    def sides(m: tuple, d: int) -> tuple[dict, dict]:
        first = delta_sparse(m, d)
        lhs: dict = {}
        rhs: dict = {}
        for mm, c in first.items():
            for key, c2 in bang_apply_sparse(
                    lambda x, d=d: delta_sparse(x, d), mm).items():
                lhs[key] = lhs.get(key, 0) + c * c2
            for key, c2 in delta_sparse(mm, d).items():
                rhs[key] = rhs.get(key, 0) + c * c2
        return lhs, rhs

    worst = 0.0
    checked = 0
    ok = True
    for m in basis.elements:
        lhs, rhs = sides(m, degree)
        keys = {k for k in set(lhs) | set(rhs) if _fits_degree(k, degree)}
        for k in keys:
            if sum(len(part) for part in k) > degree:
                continue  # forced intermediate falls outside the bound
            checked += 1
            r = abs(lhs.get(k, 0) - rhs.get(k, 0))
            worst = max(worst, float(r))
            if r > tol:
                ok = False
    return ok, worst, checked


# -- monoidal structure ----------------------------------------------------

def monoidal_structure(exp_a: ExpStructure, exp_b: ExpStructure) \
        -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """(m_top, m_tensor, nu_tensor) at the common degree bound."""
    if exp_a.basis.degree != exp_b.basis.degree:
        raise ShapeMismatch("degree bounds differ")
    d = exp_a.basis.degree
    m_top = np.ones((d + 1, 1), dtype=complex)
    na, nb = exp_a.dim, exp_b.dim
    da3 = exp_a.Delta.reshape(na, na, na)
    db3 = exp_b.Delta.reshape(nb, nb, nb)
    delta_prod = np.einsum("xyi,zwj->xzywij", da3, db3) \
        .reshape(na * nb * na * nb, na * nb)
    e_prod = np.kron(exp_a.counit_e, exp_b.counit_e)
    f = np.kron(exp_a.eps, exp_b.eps)
    labels = [f"{x}{y}" for x in exp_a.basis.base for y in exp_b.basis.base]
    target = MultisetBasis(labels, d)
    m_tensor = lift_flat((delta_prod, e_prod), f, target,
                         verify=na * nb <= 256)
    return m_top, m_tensor, m_tensor.conj().T


def exp_top(degree: int) -> ExpStructure:
    return build_exp(["*"], degree)


# -- induced structure on the exponential ----------------------------------
#
# A linear monoid on the base space induces a linear bialgebra on the
# truncated exponential: the monoid is pushed through the monoidal
# structure, the cups and caps are lifted as states/costates of the
# exponential, and the comonoid is the free comultiplication/counit.

def _product_basis(exp_a: ExpStructure, exp_b: ExpStructure) -> MultisetBasis:
    labels = [f"{x}{y}" for x in exp_a.basis.base for y in exp_b.basis.base]
    return MultisetBasis(labels, exp_a.basis.degree)


def _top_basis(degree: int) -> MultisetBasis:
    return MultisetBasis(["*"], degree)


def lifted_cup(state: np.ndarray, exp_a: ExpStructure, exp_b: ExpStructure,
               m_tensor: Optional[np.ndarray] = None) -> np.ndarray:
    """Induced cup T -> !A (x) !B of a cup T -> A (x) B: the functorial
    image of the state, pushed back through the monoidal costructure."""
    d = exp_a.basis.degree
    if m_tensor is None:
        _, m_tensor, _ = monoidal_structure(exp_a, exp_b)
    banged = bang_matrix(np.asarray(state, dtype=complex).reshape(-1, 1),
                         _top_basis(d), _product_basis(exp_a, exp_b))
    m_top = np.ones((d + 1, 1), dtype=complex)
    return m_tensor.conj().T @ banged @ m_top


def lifted_cap(costate: np.ndarray, exp_a: ExpStructure,
               exp_b: ExpStructure,
               m_tensor: Optional[np.ndarray] = None) -> np.ndarray:
    """Induced cap !A (x) !B -> _|_ of a cap A (x) B -> _|_, built as the
    dagger of the lifted cup of the daggered costate.  (Pushing the costate
    forward with the functor instead would overcount each multiset by its
    number of distinct orderings and break the snake equations.)"""
    state = np.asarray(costate, dtype=complex).conj().reshape(-1, 1)
    return lifted_cup(state, exp_a, exp_b, m_tensor=m_tensor).conj().T


def _require_suite(g: Gadget, name: str, tol: float) -> None:
    from .suites import SUITES, check_suite
    report = check_suite(g, SUITES[name], tol)
    if not report.passed:
        raise SuiteFailure(name, f"worst residual {report.worst():.3e}")


def induce_bang_monoid(g: Gadget, degree: int = 3,
                       tol: float = 1e-9) -> Gadget:
    """Push a linear monoid on the base space to a linear bialgebra on the
    degree-truncated exponential.  The multiplication is the functorial
    image of the base multiplication composed with the monoidal structure,
    the comonoid is the free one, and all cups and caps are lifted states
    and costates.  When the input also carries comonoid-side cups and caps
    those are lifted for the comonoid; otherwise the monoid's are reused."""
    _require_suite(g, "linear-monoid", tol)
    na, labels_a = interp(g.object("A"), g.env)
    nb, labels_b = interp(g.object("B"), g.env)
    same = g.object("A") == g.object("B")
    exp_a = build_exp(list(labels_a), degree, with_duplication=False)
    exp_b = exp_a if same \
        else build_exp(list(labels_b), degree, with_duplication=False)
    _, mt_ab, nu_ab = monoidal_structure(exp_a, exp_b)
    if same:
        mt_ba, nu_ba = mt_ab, nu_ab
    else:
        _, mt_ba, nu_ba = monoidal_structure(exp_b, exp_a)
    mt_aa = mt_ab if same else monoidal_structure(exp_a, exp_a)[1]

    d = degree
    m_top = np.ones((d + 1, 1), dtype=complex)
    top = _top_basis(d)
    m_bang = bang_matrix(np.asarray(g.morphism("m"), dtype=complex),
                         _product_basis(exp_a, exp_a), exp_a.basis) @ mt_aa
    u_bang = bang_matrix(np.asarray(g.morphism("u"), dtype=complex),
                         top, exp_a.basis) @ m_top

    def cup(role_mat, ea, eb, mt):
        return lifted_cup(role_mat, ea, eb, m_tensor=mt)

    def cap(role_mat, ea, eb, mt):
        return lifted_cap(role_mat, ea, eb, m_tensor=mt)

    morphs = {
        "m": m_bang, "u": u_bang,
        "d": exp_a.Delta, "k": exp_a.counit_e,
        "eta_L": cup(g.morphism("eta_L"), exp_a, exp_b, mt_ab),
        "eps_L": cap(g.morphism("eps_L"), exp_b, exp_a, mt_ba),
        "eta_R": cup(g.morphism("eta_R"), exp_b, exp_a, mt_ba),
        "eps_R": cap(g.morphism("eps_R"), exp_a, exp_b, mt_ab),
    }
    com = (("tau_L", "gam_L", "tau_R", "gam_R")
           if g.has("tau_L", "gam_L", "tau_R", "gam_R")
           else ("eta_L", "eps_L", "eta_R", "eps_R"))
    morphs["tau_L"] = cup(g.morphism(com[0]), exp_a, exp_b, mt_ab)
    morphs["gam_L"] = cap(g.morphism(com[1]), exp_b, exp_a, mt_ba)
    morphs["tau_R"] = cup(g.morphism(com[2]), exp_b, exp_a, mt_ba)
    morphs["gam_R"] = cap(g.morphism(com[3]), exp_a, exp_b, mt_ab)

    atoms = {"bangA": (exp_a.dim, tuple(exp_a.basis.labels()))}
    objects = {"A": Atom("bangA"), "B": Atom("bangA")}
    if not same:
        atoms["bangB"] = (exp_b.dim, tuple(exp_b.basis.labels()))
        objects["B"] = Atom("bangB")
    env = ModelEnv(atoms=atoms, degree=degree)
    gradings = {"A": exp_a.basis.degrees(), "B": exp_b.basis.degrees()}
    return Gadget("linear_bialgebra", objects, morphs, env, gradings)


def retract_idempotent(g: Gadget, degree: int = 3,
                       tol: float = 1e-9) -> dict:
    """Exhibit the base space as a retract of its exponential.

    Returns the induced bialgebra on the exponential together with the
    binary idempotent (ub, vb) whose splitting recovers the base: the
    retraction is the dereliction, the section is the lift of the identity
    through the base comonoid, and the par-side pair is given dually by the
    unit lift through the base monoid.  The canonical splitting is returned
    so downstream splits can reproduce the base maps on the nose."""
    _require_suite(g, "linear-bialgebra", tol)
    if g.object("A") != g.object("B"):
        raise ShapeMismatch("retract requires a self-linear bialgebra")
    na, _ = interp(g.object("A"), g.env)
    induced = induce_bang_monoid(g, degree, tol)
    basis = MultisetBasis(list(interp(g.object("A"), g.env)[1]), degree)
    eye = np.eye(na, dtype=complex)
    flat = lift_flat((g.morphism("d"), g.morphism("k")), eye, basis, tol)
    sharp = lift_sharp((g.morphism("m"), g.morphism("u")), eye, basis, tol)
    eps = dereliction_matrix(basis)
    eta = eps.conj().T
    ub = eta @ eps       # !A -> ?A through the base
    vb = flat @ sharp    # ?A -> !A through the base
    gadget = induced.with_morphisms(ub=ub, vb=vb)
    return {
        "gadget": gadget,
        "e_bang": flat @ eps,
        "e_whim": eta @ sharp,
        "splitting": (eps, flat, sharp, eta),   # r, s, r', s'
        "flat": flat, "sharp": sharp,
    }
