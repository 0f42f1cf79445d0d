"""Representations: matrix actions, axiom checkers, duals, semidirect sums.

A representation stores one matrix per algebra basis element for each of its
actions (extended linearly), plus the module twist phi. Dual-space vectors
are written in the dual basis, so pairings are plain dot products and the
transpose of an action matrix is its dual action.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import product as iproduct
from typing import Optional, Sequence

from .algebras import HomAlgebra, HomFManifold, k_cyclic, leibnizator
from .errors import DimensionMismatch, PreconditionError
from .linalg import (BilinearMap, Matrix, Vector, basis_vector, vec_add,
                     vec_sub)
from .report import DEFAULT_MAX_WITNESSES, CheckReport, Counterexample


@dataclass(frozen=True)
class Representation:
    """(V; rho, mu, phi); rho or mu may be absent for single-action species."""

    alg_dim: int
    mod_dim: int
    rho: Optional[tuple[Matrix, ...]]
    mu: Optional[tuple[Matrix, ...]]
    phi: Matrix

    def __post_init__(self):
        for name, mats in (("rho", self.rho), ("mu", self.mu)):
            if mats is None:
                continue
            if len(mats) != self.alg_dim:
                raise DimensionMismatch(f"{name} needs one matrix per algebra basis element")
            if any((m.rows, m.cols) != (self.mod_dim, self.mod_dim) for m in mats):
                raise DimensionMismatch(f"{name} matrices must be {self.mod_dim}x{self.mod_dim}")
        if (self.phi.rows, self.phi.cols) != (self.mod_dim, self.mod_dim):
            raise DimensionMismatch("phi must act on the module")

    def rho_of(self, x: Sequence) -> Matrix:
        return _linear_ext(self.rho, x, self.mod_dim, "rho")

    def mu_of(self, x: Sequence) -> Matrix:
        return _linear_ext(self.mu, x, self.mod_dim, "mu")

    def require_invertible_phi(self):
        if not self.phi.is_invertible():
            raise PreconditionError("phi is not invertible")


def _linear_ext(mats: Optional[tuple[Matrix, ...]], x: Sequence, m: int, name: str) -> Matrix:
    if mats is None:
        raise PreconditionError(f"representation has no {name} action")
    out = Matrix.zero(m, m)
    for i, xi in enumerate(x):
        if xi != 0:
            out = out + mats[i].scale(xi)
    return out


def _action_mats(b: BilinearMap, left: bool) -> tuple[Matrix, ...]:
    """Matrices of v -> b(e_i, v) (left) or v -> b(v, e_i) (right)."""
    d = b.dim_left
    out = []
    for i in range(d):
        cols = []
        for j in range(d):
            cols.append(b.value(i, j) if left else b.value(j, i))
        out.append(Matrix.from_rows([[cols[j][k] for j in range(d)] for k in range(d)]))
    return tuple(out)


def adjoint_assoc(alg: HomAlgebra) -> Representation:
    """Left multiplication on the algebra itself, phi = twist."""
    return Representation(alg.dim, alg.dim, None, _action_mats(alg.product, True), alg.twist)


def adjoint_lie(alg: HomAlgebra) -> Representation:
    """Bracketing action on the algebra itself, phi = twist."""
    return Representation(alg.dim, alg.dim, _action_mats(alg.product, True), None, alg.twist)


def adjoint_pre_lie(alg: HomAlgebra) -> Representation:
    """(left multiplication, right multiplication, twist) for a pre-Lie product."""
    return Representation(alg.dim, alg.dim,
                          _action_mats(alg.product, True),
                          _action_mats(alg.product, False),
                          alg.twist)


def adjoint_f_manifold(fm: HomFManifold) -> Representation:
    """rho = bracketing, mu = product multiplication, phi = twist."""
    return Representation(fm.dim, fm.dim,
                          _action_mats(fm.bracket, True),
                          _action_mats(fm.dot, True),
                          fm.twist)


# ---------------------------------------------------------------------------
# checkers
# ---------------------------------------------------------------------------

def _flat(m: Matrix) -> Vector:
    return tuple(v for row in m.entries for v in row)


def _matrix_identity(name: str, dim: int, arity: int, lhs_fn, rhs_fn,
                     max_witnesses: int) -> CheckReport:
    bad: list[Counterexample] = []
    for idx in iproduct(range(dim), repeat=arity):
        lhs = lhs_fn(*idx)
        rhs = rhs_fn(*idx)
        if lhs != rhs:
            bad.append(Counterexample(name, idx, _flat(lhs), _flat(rhs)))
            if len(bad) >= max_witnesses:
                break
    return CheckReport.leaf(name, bad, max_witnesses)


def check_rep_comm_assoc(alg: HomAlgebra, rep: Representation,
                         max_witnesses: int = DEFAULT_MAX_WITNESSES) -> CheckReport:
    """mu(a(x)) phi = phi mu(x) and mu(x y) phi = mu(a(x)) mu(y)."""
    if rep.mu is None:
        raise PreconditionError("representation has no mu action")
    a, m, phi = alg.twist, alg.product, rep.phi

    one = _matrix_identity(
        "assoc-action-twist", alg.dim, 1,
        lambda i: rep.mu_of(a.apply(alg.basis(i))) @ phi,
        lambda i: phi @ rep.mu[i],
        max_witnesses)
    two = _matrix_identity(
        "assoc-action-product", alg.dim, 2,
        lambda i, j: rep.mu_of(m.value(i, j)) @ phi,
        lambda i, j: rep.mu_of(a.apply(alg.basis(i))) @ rep.mu[j],
        max_witnesses)
    return CheckReport.conjunction("rep-comm-assoc", [one, two])


def check_rep_hom_lie(alg: HomAlgebra, rep: Representation,
                      max_witnesses: int = DEFAULT_MAX_WITNESSES) -> CheckReport:
    """rho(a(x)) phi = phi rho(x) and rho([x,y]) phi = rho(a(x))rho(y) - rho(a(y))rho(x)."""
    if rep.rho is None:
        raise PreconditionError("representation has no rho action")
    a, br, phi = alg.twist, alg.product, rep.phi

    one = _matrix_identity(
        "lie-action-twist", alg.dim, 1,
        lambda i: rep.rho_of(a.apply(alg.basis(i))) @ phi,
        lambda i: phi @ rep.rho[i],
        max_witnesses)
    two = _matrix_identity(
        "lie-action-bracket", alg.dim, 2,
        lambda i, j: rep.rho_of(br.value(i, j)) @ phi,
        lambda i, j: (rep.rho_of(a.apply(alg.basis(i))) @ rep.rho[j])
        - (rep.rho_of(a.apply(alg.basis(j))) @ rep.rho[i]),
        max_witnesses)
    return CheckReport.conjunction("rep-hom-lie", [one, two])


def check_rep_hom_pre_lie(alg: HomAlgebra, rep: Representation,
                          max_witnesses: int = DEFAULT_MAX_WITNESSES) -> CheckReport:
    """rho represents the commutator bracket; mu satisfies its two identities."""
    if rep.rho is None or rep.mu is None:
        raise PreconditionError("pre-Lie representations need both actions")
    a, star, phi = alg.twist, alg.product, rep.phi
    sub = HomAlgebra(alg.dim, star.commutator(), a, alg.labels)

    lie = check_rep_hom_lie(sub, rep, max_witnesses)
    inter = _matrix_identity(
        "pre-lie-mu-twist", alg.dim, 1,
        lambda i: phi @ rep.mu[i],
        lambda i: rep.mu_of(a.apply(alg.basis(i))) @ phi,
        max_witnesses)
    mixed = _matrix_identity(
        "pre-lie-mixed", alg.dim, 2,
        lambda i, j: (rep.rho_of(a.apply(alg.basis(i))) @ rep.mu[j])
        - (rep.mu_of(a.apply(alg.basis(j))) @ rep.rho[i]),
        lambda i, j: (rep.mu_of(star.value(i, j)) @ phi)
        - (rep.mu_of(a.apply(alg.basis(j))) @ rep.mu[i]),
        max_witnesses)
    return CheckReport.conjunction("rep-hom-pre-lie", [lie, inter, mixed])


# trilinear compatibility maps

def eval_l1(fm: HomFManifold, rep: Representation,
            x: Sequence, y: Sequence, u: Sequence) -> Vector:
    """rho(a(x))mu(y)u - mu(a(y))rho(x)u - mu([x,y])phi(u)."""
    a = fm.twist
    return vec_sub(vec_sub(rep.rho_of(a.apply(x)).apply(rep.mu_of(y).apply(u)),
                           rep.mu_of(a.apply(y)).apply(rep.rho_of(x).apply(u))),
                   rep.mu_of(fm.bracket.apply(x, y)).apply(rep.phi.apply(u)))


def eval_l2(fm: HomFManifold, rep: Representation,
            x: Sequence, y: Sequence, u: Sequence) -> Vector:
    """mu(a(x))rho(y)u + mu(a(y))rho(x)u - rho(x y)phi(u)."""
    a = fm.twist
    return vec_sub(vec_add(rep.mu_of(a.apply(x)).apply(rep.rho_of(y).apply(u)),
                           rep.mu_of(a.apply(y)).apply(rep.rho_of(x).apply(u))),
                   rep.rho_of(fm.dot.apply(x, y)).apply(rep.phi.apply(u)))


def eval_l3(fm: HomFManifold, rep: Representation,
            x: Sequence, y: Sequence, u: Sequence) -> Vector:
    """rho(a(y))mu(x)u + rho(a(x))mu(y)u - rho(x y)phi(u)."""
    a = fm.twist
    return vec_sub(vec_add(rep.rho_of(a.apply(y)).apply(rep.mu_of(x).apply(u)),
                           rep.rho_of(a.apply(x)).apply(rep.mu_of(y).apply(u))),
                   rep.rho_of(fm.dot.apply(x, y)).apply(rep.phi.apply(u)))


def _vector_identity(name: str, alg_dim: int, alg_arity: int, mod_dim: int,
                     lhs_fn, rhs_fn, max_witnesses: int) -> CheckReport:
    """Scan algebra tuples x module basis; index tuple is (alg..., module)."""
    bad: list[Counterexample] = []
    for idx in iproduct(range(alg_dim), repeat=alg_arity):
        xs = [basis_vector(alg_dim, i) for i in idx]
        for uu in range(mod_dim):
            u = basis_vector(mod_dim, uu)
            lhs = lhs_fn(*xs, u)
            rhs = rhs_fn(*xs, u)
            if lhs != rhs:
                bad.append(Counterexample(name, idx + (uu,), lhs, rhs))
                if len(bad) >= max_witnesses:
                    return CheckReport.leaf(name, bad, max_witnesses)
    return CheckReport.leaf(name, bad, max_witnesses)


def check_rep_f_manifold(fm: HomFManifold, rep: Representation,
                         max_witnesses: int = DEFAULT_MAX_WITNESSES) -> CheckReport:
    """Both single-operation rep checks plus the two trilinear conditions."""
    if rep.rho is None or rep.mu is None:
        raise PreconditionError("need both actions")
    a, phi = fm.twist, rep.phi
    a2 = a @ a
    phi2 = phi @ phi

    def c1_lhs(x, y, z, u):
        return eval_l1(fm, rep, fm.dot.apply(x, y), a.apply(z), phi.apply(u))

    def c1_rhs(x, y, z, u):
        return vec_add(rep.mu_of(a2.apply(x)).apply(eval_l1(fm, rep, y, z, u)),
                       rep.mu_of(a2.apply(y)).apply(eval_l1(fm, rep, x, z, u)))

    def c2_lhs(x, y, z, u):
        return rep.mu_of(leibnizator(fm, x, y, z)).apply(phi2.apply(u))

    def c2_rhs(x, y, z, u):
        return vec_sub(eval_l2(fm, rep, a.apply(y), a.apply(z), rep.mu_of(x).apply(u)),
                       rep.mu_of(a2.apply(x)).apply(eval_l2(fm, rep, y, z, u)))

    return CheckReport.conjunction("rep-f-manifold", [
        check_rep_comm_assoc(fm.dot_algebra(), rep, max_witnesses),
        check_rep_hom_lie(fm.bracket_algebra(), rep, max_witnesses),
        _vector_identity("rep-trilinear-1", fm.dim, 3, rep.mod_dim,
                         c1_lhs, c1_rhs, max_witnesses),
        _vector_identity("rep-trilinear-2", fm.dim, 3, rep.mod_dim,
                         c2_lhs, c2_rhs, max_witnesses),
    ])


def check_dual_rep_conditions(fm: HomFManifold, rep: Representation,
                              max_witnesses: int = DEFAULT_MAX_WITNESSES) -> CheckReport:
    """The two extra identities under which the dual action is a representation."""
    if rep.rho is None or rep.mu is None:
        raise PreconditionError("need both actions")
    a, phi = fm.twist, rep.phi
    phi2 = phi @ phi

    def c1_lhs(x, y, z, u):
        return eval_l1(fm, rep, fm.dot.apply(x, y), z, phi.apply(u))

    def c1_rhs(x, y, z, u):
        return vec_add(eval_l1(fm, rep, a.apply(y), z, rep.mu_of(x).apply(u)),
                       eval_l1(fm, rep, a.apply(x), z, rep.mu_of(y).apply(u)))

    def c2_lhs(x, y, z, u):
        return rep.mu_of(leibnizator(fm, x, y, z)).apply(phi2.apply(u))

    def c2_rhs(x, y, z, u):
        return vec_sub(eval_l3(fm, rep, a.apply(y), a.apply(z), rep.mu_of(x).apply(u)),
                       rep.mu_of(a.apply(x)).apply(eval_l3(fm, rep, y, z, u)))

    return CheckReport.conjunction("dual-rep-conditions", [
        _vector_identity("dual-condition-1", fm.dim, 3, rep.mod_dim,
                         c1_lhs, c1_rhs, max_witnesses),
        _vector_identity("dual-condition-2", fm.dim, 3, rep.mod_dim,
                         c2_lhs, c2_rhs, max_witnesses),
    ])


def check_coherence(fm: HomFManifold,
                    max_witnesses: int = DEFAULT_MAX_WITNESSES) -> CheckReport:
    """The two algebra-level identities that make the coadjoint action work."""
    a = fm.twist
    a2 = a @ a
    dot = fm.dot
    d = fm.dim
    bad1: list[Counterexample] = []
    bad2: list[Counterexample] = []
    for idx in iproduct(range(d), repeat=4):
        x, y, z, w = (basis_vector(d, i) for i in idx)
        lhs1 = leibnizator(fm, dot.apply(x, y), z, a.apply(w))
        rhs1 = vec_add(leibnizator(fm, a.apply(y), z, dot.apply(x, w)),
                       leibnizator(fm, a.apply(x), z, dot.apply(y, w)))
        if lhs1 != rhs1 and len(bad1) < max_witnesses:
            bad1.append(Counterexample("coherence-1", idx, lhs1, rhs1))
        lhs2 = dot.apply(leibnizator(fm, x, y, z), a2.apply(w))
        rhs2 = vec_sub(k_cyclic(fm, a.apply(y), a.apply(z), dot.apply(x, w)),
                       dot.apply(a.apply(x), k_cyclic(fm, y, z, w)))
        if lhs2 != rhs2 and len(bad2) < max_witnesses:
            bad2.append(Counterexample("coherence-2", idx, lhs2, rhs2))
        if len(bad1) >= max_witnesses and len(bad2) >= max_witnesses:
            break
    return CheckReport.conjunction("coherence", [
        CheckReport.leaf("coherence-1", bad1, max_witnesses),
        CheckReport.leaf("coherence-2", bad2, max_witnesses),
    ])


# ---------------------------------------------------------------------------
# duals
# ---------------------------------------------------------------------------

def _star_mats(mats: tuple[Matrix, ...], alg_twist: Matrix, phi: Matrix) -> tuple[Matrix, ...]:
    """Starred dual action with the sign of the bracket convention:

    star(x) = -(phi^-2 m(a(x)))^T, one matrix per basis element.
    """
    phin2 = phi.power(-2)
    out = []
    d = len(mats)
    for i in range(d):
        ax = alg_twist.column(i)
        m = Matrix.zero(phi.rows, phi.rows)
        for j, c in enumerate(ax):
            if c != 0:
                m = m + mats[j].scale(c)
        out.append(-(phin2 @ m).transpose())
    return tuple(out)


def mu_star_matrices(alg_twist: Matrix, rep: Representation) -> tuple[Matrix, ...]:
    if rep.mu is None:
        raise PreconditionError("representation has no mu action")
    rep.require_invertible_phi()
    return _star_mats(rep.mu, alg_twist, rep.phi)


def rho_star_matrices(alg_twist: Matrix, rep: Representation) -> tuple[Matrix, ...]:
    if rep.rho is None:
        raise PreconditionError("representation has no rho action")
    rep.require_invertible_phi()
    return _star_mats(rep.rho, alg_twist, rep.phi)


def _dual_phi(phi: Matrix) -> Matrix:
    return phi.inverse().transpose()


def dual_rep_assoc(alg: HomAlgebra, rep: Representation) -> Representation:
    """Dual module of a commutative multiplicative action.

    The sign here is the one that satisfies the rep axioms: the action is
    minus the starred operator (equivalently +(phi^-2 mu(a(x)))^T).
    """
    stars = mu_star_matrices(alg.twist, rep)
    return Representation(alg.dim, rep.mod_dim, None,
                          tuple(-m for m in stars), _dual_phi(rep.phi))


def dual_rep_lie(alg: HomAlgebra, rep: Representation) -> Representation:
    stars = rho_star_matrices(alg.twist, rep)
    return Representation(alg.dim, rep.mod_dim, stars, None, _dual_phi(rep.phi))


def dual_rep_pre_lie(alg: HomAlgebra, rep: Representation) -> Representation:
    """(rho_star - mu_star, -mu_star, transpose-inverse phi)."""
    rs = rho_star_matrices(alg.twist, rep)
    ms = mu_star_matrices(alg.twist, rep)
    return Representation(alg.dim, rep.mod_dim,
                          tuple(r - m for r, m in zip(rs, ms)),
                          tuple(-m for m in ms),
                          _dual_phi(rep.phi))


def dual_rep_f_manifold(fm: HomFManifold, rep: Representation) -> Representation:
    """(rho_star, -mu_star, transpose-inverse phi), gated on the dual conditions."""
    if not fm.twist.is_invertible():
        raise PreconditionError("twist is not invertible")
    rep.require_invertible_phi()
    gate = check_dual_rep_conditions(fm, rep)
    if not gate.passed:
        raise PreconditionError("dual-representation conditions fail")
    rs = rho_star_matrices(fm.twist, rep)
    ms = mu_star_matrices(fm.twist, rep)
    return Representation(fm.dim, rep.mod_dim, rs, tuple(-m for m in ms),
                          _dual_phi(rep.phi))


def coadjoint_rep(fm: HomFManifold) -> Representation:
    """Dual of the adjoint representation; needs the coherence identities."""
    gate = check_coherence(fm)
    if not gate.passed:
        raise PreconditionError("coherence conditions fail")
    return dual_rep_f_manifold(fm, adjoint_f_manifold(fm))


def semidirect_product(fm: HomFManifold, rep: Representation) -> HomFManifold:
    """Structure on A + V; valid exactly when the representation is valid."""
    if rep.rho is None or rep.mu is None:
        raise PreconditionError("need both actions")
    if rep.alg_dim != fm.dim:
        raise DimensionMismatch("representation is not over this algebra")
    d, m = fm.dim, rep.mod_dim
    n = d + m
    dot_ent: dict[tuple[int, int, int], object] = {}
    br_ent: dict[tuple[int, int, int], object] = {}
    for i, j in iproduct(range(d), repeat=2):
        for k, v in enumerate(fm.dot.value(i, j)):
            if v:
                dot_ent[(i, j, k)] = v
        for k, v in enumerate(fm.bracket.value(i, j)):
            if v:
                br_ent[(i, j, k)] = v
    for i in range(d):
        for j in range(m):
            mv = rep.mu[i].column(j)
            rv = rep.rho[i].column(j)
            for k in range(m):
                if mv[k]:
                    dot_ent[(i, d + j, d + k)] = mv[k]
                    dot_ent[(d + j, i, d + k)] = mv[k]
                if rv[k]:
                    br_ent[(i, d + j, d + k)] = rv[k]
                    br_ent[(d + j, i, d + k)] = -rv[k]
    twist_rows = []
    for i in range(d):
        twist_rows.append(list(fm.twist.entries[i]) + [0] * m)
    for i in range(m):
        twist_rows.append([0] * d + list(rep.phi.entries[i]))
    labels = fm.labels + tuple(f"v{i + 1}" for i in range(m))
    return HomFManifold(n, BilinearMap.from_entries(n, dot_ent),
                        BilinearMap.from_entries(n, br_ent),
                        Matrix.from_rows(twist_rows), labels)
