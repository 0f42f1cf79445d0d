"""Structure-constant models of twisted algebras and their axiom checkers.

Every checker enumerates basis tuples in lexicographic order; multilinearity
of the identities makes that exhaustive. Checkers never raise on a failing
identity: they return a CheckReport with replayable counterexamples.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product as iproduct
from typing import Sequence

from .errors import DimensionMismatch
from .linalg import (BilinearMap, Matrix, Vector, basis_vector, vec_add,
                     vec_is_zero, vec_sub)
from .report import DEFAULT_MAX_WITNESSES, CheckReport, Counterexample


def default_labels(dim: int) -> tuple[str, ...]:
    return tuple(f"e{i + 1}" for i in range(dim))


@dataclass(frozen=True)
class HomAlgebra:
    """A single bilinear product together with a twist map on the same space."""

    dim: int
    product: BilinearMap
    twist: Matrix
    labels: tuple[str, ...] = ()

    def __post_init__(self):
        if (self.product.dim_left, self.product.dim_right, self.product.dim_out) != \
                (self.dim, self.dim, self.dim):
            raise DimensionMismatch("product tensor does not match algebra dimension")
        if (self.twist.rows, self.twist.cols) != (self.dim, self.dim):
            raise DimensionMismatch("twist matrix does not match algebra dimension")
        if not self.labels:
            object.__setattr__(self, "labels", default_labels(self.dim))
        elif len(self.labels) != self.dim:
            raise DimensionMismatch("label count does not match dimension")

    def basis(self, i: int) -> Vector:
        return basis_vector(self.dim, i)


@dataclass(frozen=True)
class HomFManifold:
    """Commutative product, antisymmetric bracket, shared twist."""

    dim: int
    dot: BilinearMap
    bracket: BilinearMap
    twist: Matrix
    labels: tuple[str, ...] = ()

    def __post_init__(self):
        for name, b in (("dot", self.dot), ("bracket", self.bracket)):
            if (b.dim_left, b.dim_right, b.dim_out) != (self.dim, self.dim, self.dim):
                raise DimensionMismatch(f"{name} tensor does not match dimension")
        if (self.twist.rows, self.twist.cols) != (self.dim, self.dim):
            raise DimensionMismatch("twist matrix does not match dimension")
        if not self.dot.is_symmetric():
            raise ValueError("dot product must be symmetric")
        if not self.bracket.is_antisymmetric():
            raise ValueError("bracket must be antisymmetric")
        if not self.labels:
            object.__setattr__(self, "labels", default_labels(self.dim))
        elif len(self.labels) != self.dim:
            raise DimensionMismatch("label count does not match dimension")

    def basis(self, i: int) -> Vector:
        return basis_vector(self.dim, i)

    def dot_algebra(self) -> HomAlgebra:
        return HomAlgebra(self.dim, self.dot, self.twist, self.labels)

    def bracket_algebra(self) -> HomAlgebra:
        return HomAlgebra(self.dim, self.bracket, self.twist, self.labels)


@dataclass(frozen=True)
class HomPreF:
    """A splitting pair (diamond, star) with a shared twist."""

    dim: int
    diamond: BilinearMap
    star: BilinearMap
    twist: Matrix
    labels: tuple[str, ...] = ()

    def __post_init__(self):
        for name, b in (("diamond", self.diamond), ("star", self.star)):
            if (b.dim_left, b.dim_right, b.dim_out) != (self.dim, self.dim, self.dim):
                raise DimensionMismatch(f"{name} tensor does not match dimension")
        if (self.twist.rows, self.twist.cols) != (self.dim, self.dim):
            raise DimensionMismatch("twist matrix does not match dimension")
        if not self.labels:
            object.__setattr__(self, "labels", default_labels(self.dim))
        elif len(self.labels) != self.dim:
            raise DimensionMismatch("label count does not match dimension")

    def basis(self, i: int) -> Vector:
        return basis_vector(self.dim, i)


# ---------------------------------------------------------------------------
# evaluators (all multilinear in the vector arguments)
# ---------------------------------------------------------------------------

def hom_associator(alg: HomAlgebra, x: Sequence, y: Sequence, z: Sequence) -> Vector:
    """(x y) a(z) - a(x) (y z)."""
    m, a = alg.product, alg.twist
    return vec_sub(m.apply(m.apply(x, y), a.apply(z)),
                   m.apply(a.apply(x), m.apply(y, z)))


def jacobi_sum(alg: HomAlgebra, x: Sequence, y: Sequence, z: Sequence) -> Vector:
    """Cyclic sum of [a(x), [y, z]]."""
    br, a = alg.product, alg.twist
    out = (0,) * alg.dim
    for (p, q, r) in ((x, y, z), (y, z, x), (z, x, y)):
        out = vec_add(out, br.apply(a.apply(p), br.apply(q, r)))
    return out


def admissibility_sum(alg: HomAlgebra, x: Sequence, y: Sequence, z: Sequence) -> Vector:
    """Cyclic sum of as(x,y,z) - as(y,x,z)."""
    out = (0,) * alg.dim
    for (p, q, r) in ((x, y, z), (y, z, x), (z, x, y)):
        out = vec_add(out, vec_sub(hom_associator(alg, p, q, r),
                                   hom_associator(alg, q, p, r)))
    return out


def zinbiel_defect(alg: HomAlgebra, x: Sequence, y: Sequence, z: Sequence) -> Vector:
    """a(x)<>(y<>z) - (y<>x)<>a(z) - (x<>y)<>a(z)."""
    d, a = alg.product, alg.twist
    return vec_sub(d.apply(a.apply(x), d.apply(y, z)),
                   vec_add(d.apply(d.apply(y, x), a.apply(z)),
                           d.apply(d.apply(x, y), a.apply(z))))


def leibnizator(fm: HomFManifold, x: Sequence, y: Sequence, z: Sequence) -> Vector:
    """[a(x), y z] - [x, y] a(z) - a(y) [x, z]: failure of the Leibniz rule."""
    dot, br, a = fm.dot, fm.bracket, fm.twist
    return vec_sub(vec_sub(br.apply(a.apply(x), dot.apply(y, z)),
                           dot.apply(br.apply(x, y), a.apply(z))),
                   dot.apply(a.apply(y), br.apply(x, z)))


def k_cyclic(fm: HomFManifold, x: Sequence, y: Sequence, z: Sequence) -> Vector:
    """Cyclic sum of [a(x), y z] (used by the coherence conditions)."""
    dot, br, a = fm.dot, fm.bracket, fm.twist
    out = (0,) * fm.dim
    for (p, q, r) in ((x, y, z), (y, z, x), (z, x, y)):
        out = vec_add(out, br.apply(a.apply(p), dot.apply(q, r)))
    return out


def admissible_compat_side(dot: BilinearMap, star: BilinearMap, twist: Matrix,
                           x: Sequence, y: Sequence, z: Sequence) -> Vector:
    """a(x)*(y z) - (x*y) a(z) - a(y) (x*z); the compatibility is its x<->y symmetry."""
    a = twist
    return vec_sub(vec_sub(star.apply(a.apply(x), dot.apply(y, z)),
                           dot.apply(star.apply(x, y), a.apply(z))),
                   dot.apply(a.apply(y), star.apply(x, z)))


def f1(pf: HomPreF, x: Sequence, y: Sequence, z: Sequence) -> Vector:
    """a(x)*(y<>z) - a(y)<>(x*z) - [x,y]<>a(z)."""
    dia, st, a = pf.diamond, pf.star, pf.twist
    br = st.commutator()
    return vec_sub(vec_sub(st.apply(a.apply(x), dia.apply(y, z)),
                           dia.apply(a.apply(y), st.apply(x, z))),
                   dia.apply(br.apply(x, y), a.apply(z)))


def f2(pf: HomPreF, x: Sequence, y: Sequence, z: Sequence) -> Vector:
    """a(x)<>(y*z) + a(y)<>(x*z) - (x y)*a(z) with x y = x<>y + y<>x."""
    dia, st, a = pf.diamond, pf.star, pf.twist
    dot = dia.symmetrized()
    return vec_sub(vec_add(dia.apply(a.apply(x), st.apply(y, z)),
                           dia.apply(a.apply(y), st.apply(x, z))),
                   st.apply(dot.apply(x, y), a.apply(z)))


def subadjacent_pair(pf: HomPreF) -> tuple[BilinearMap, BilinearMap]:
    """(symmetrized diamond, commutator of star)."""
    return pf.diamond.symmetrized(), pf.star.commutator()


# ---------------------------------------------------------------------------
# checkers
# ---------------------------------------------------------------------------

def _scan(name: str, dim: int, arity: int, defect, max_witnesses: int) -> CheckReport:
    """Collect basis tuples where defect(*basis vectors) != 0, lexicographically."""
    bad: list[Counterexample] = []
    for idx in iproduct(range(dim), repeat=arity):
        v = defect(*(basis_vector(dim, i) for i in idx))
        if not vec_is_zero(v):
            bad.append(Counterexample(name, idx, tuple(v), (Fraction(0),) * len(v)))
            if len(bad) >= max_witnesses:
                break
    return CheckReport.leaf(name, bad, max_witnesses)


def _scan_two_sided(name: str, dim: int, arity: int, lhs_fn, rhs_fn,
                    max_witnesses: int) -> CheckReport:
    bad: list[Counterexample] = []
    for idx in iproduct(range(dim), repeat=arity):
        vs = [basis_vector(dim, i) for i in idx]
        lhs = lhs_fn(*vs)
        rhs = rhs_fn(*vs)
        if lhs != rhs:
            bad.append(Counterexample(name, idx, tuple(lhs), tuple(rhs)))
            if len(bad) >= max_witnesses:
                break
    return CheckReport.leaf(name, bad, max_witnesses)


def _symmetry_report(name: str, b: BilinearMap, sign: int,
                     max_witnesses: int) -> CheckReport:
    bad: list[Counterexample] = []
    for i, j in iproduct(range(b.dim_left), repeat=2):
        lhs = b.value(i, j)
        rhs = tuple(sign * v for v in b.value(j, i))
        if lhs != rhs:
            bad.append(Counterexample(name, (i, j), lhs, rhs))
            if len(bad) >= max_witnesses:
                break
    return CheckReport.leaf(name, bad, max_witnesses)


def check_comm_hom_assoc(alg: HomAlgebra,
                         max_witnesses: int = DEFAULT_MAX_WITNESSES) -> CheckReport:
    """Symmetric product with vanishing twisted associator."""
    sym = _symmetry_report("commutativity", alg.product, +1, max_witnesses)
    assoc = _scan("hom-associativity", alg.dim, 3,
                  lambda x, y, z: hom_associator(alg, x, y, z), max_witnesses)
    return CheckReport.conjunction("comm-hom-assoc", [sym, assoc])


def check_hom_lie(alg: HomAlgebra,
                  max_witnesses: int = DEFAULT_MAX_WITNESSES) -> CheckReport:
    """Antisymmetric bracket satisfying the twisted Jacobi identity."""
    anti = _symmetry_report("antisymmetry", alg.product, -1, max_witnesses)
    jac = _scan("hom-jacobi", alg.dim, 3,
                lambda x, y, z: jacobi_sum(alg, x, y, z), max_witnesses)
    return CheckReport.conjunction("hom-lie", [anti, jac])


def check_hom_zinbiel(alg: HomAlgebra,
                      max_witnesses: int = DEFAULT_MAX_WITNESSES) -> CheckReport:
    return CheckReport.conjunction("hom-zinbiel", [
        _scan("zinbiel", alg.dim, 3,
              lambda x, y, z: zinbiel_defect(alg, x, y, z), max_witnesses)])


def check_hom_pre_lie(alg: HomAlgebra,
                      max_witnesses: int = DEFAULT_MAX_WITNESSES) -> CheckReport:
    """Twisted associator symmetric in its first two arguments."""
    rep = _scan_two_sided("pre-lie", alg.dim, 3,
                          lambda x, y, z: hom_associator(alg, x, y, z),
                          lambda x, y, z: hom_associator(alg, y, x, z),
                          max_witnesses)
    return CheckReport.conjunction("hom-pre-lie", [rep])


def check_hom_lie_admissible(alg: HomAlgebra,
                             max_witnesses: int = DEFAULT_MAX_WITNESSES) -> CheckReport:
    rep = _scan("lie-admissible", alg.dim, 3,
                lambda x, y, z: admissibility_sum(alg, x, y, z), max_witnesses)
    return CheckReport.conjunction("hom-lie-admissible", [rep])


def check_hertling_manin(fm: HomFManifold,
                         max_witnesses: int = DEFAULT_MAX_WITNESSES) -> CheckReport:
    """L(x y, a(z), a(w)) = a^2(x) L(y,z,w) + a^2(y) L(x,z,w) on all 4-tuples."""
    a = fm.twist
    a2 = a @ a
    dot = fm.dot

    def lhs(x, y, z, w):
        return leibnizator(fm, dot.apply(x, y), a.apply(z), a.apply(w))

    def rhs(x, y, z, w):
        return vec_add(dot.apply(a2.apply(x), leibnizator(fm, y, z, w)),
                       dot.apply(a2.apply(y), leibnizator(fm, x, z, w)))

    rep = _scan_two_sided("hertling-manin", fm.dim, 4, lhs, rhs, max_witnesses)
    return CheckReport.conjunction("hertling-manin", [rep])


def check_hom_f_manifold(fm: HomFManifold,
                         max_witnesses: int = DEFAULT_MAX_WITNESSES) -> CheckReport:
    return CheckReport.conjunction("hom-f-manifold", [
        check_comm_hom_assoc(fm.dot_algebra(), max_witnesses),
        check_hom_lie(fm.bracket_algebra(), max_witnesses),
        check_hertling_manin(fm, max_witnesses),
    ])


def check_hom_leibniz(fm: HomFManifold,
                      max_witnesses: int = DEFAULT_MAX_WITNESSES) -> CheckReport:
    """Leibnizator vanishes identically (the Poisson-compatibility condition)."""
    rep = _scan("hom-leibniz", fm.dim, 3,
                lambda x, y, z: leibnizator(fm, x, y, z), max_witnesses)
    return CheckReport.conjunction("hom-leibniz", [rep])


def check_hom_poisson(fm: HomFManifold,
                      max_witnesses: int = DEFAULT_MAX_WITNESSES) -> CheckReport:
    return CheckReport.conjunction("hom-poisson", [
        check_comm_hom_assoc(fm.dot_algebra(), max_witnesses),
        check_hom_lie(fm.bracket_algebra(), max_witnesses),
        check_hom_leibniz(fm, max_witnesses),
    ])


def check_f_admissible(alg_dot: HomAlgebra, alg_star: HomAlgebra,
                       max_witnesses: int = DEFAULT_MAX_WITNESSES) -> CheckReport:
    """Commutative product + admissible star + the mixed compatibility identity."""
    if alg_dot.dim != alg_star.dim:
        raise DimensionMismatch("the two products live on different spaces")
    if alg_dot.twist != alg_star.twist:
        raise DimensionMismatch("the two products must share one twist")
    dot, star, a = alg_dot.product, alg_star.product, alg_dot.twist

    compat = _scan_two_sided(
        "admissible-compat", alg_dot.dim, 3,
        lambda x, y, z: admissible_compat_side(dot, star, a, x, y, z),
        lambda x, y, z: admissible_compat_side(dot, star, a, y, x, z),
        max_witnesses)
    return CheckReport.conjunction("f-admissible", [
        check_comm_hom_assoc(alg_dot, max_witnesses),
        check_hom_lie_admissible(alg_star, max_witnesses),
        compat,
    ])


def check_pre_f_manifold(pf: HomPreF,
                         max_witnesses: int = DEFAULT_MAX_WITNESSES) -> CheckReport:
    """Zinbiel diamond, pre-Lie star, and the two compatibility identities."""
    a = pf.twist
    a2 = a @ a
    dia = pf.diamond
    dot, br = subadjacent_pair(pf)
    sub = HomFManifold(pf.dim, dot, br, a, pf.labels)

    def c1_lhs(x, y, z, w):
        return f1(pf, dot.apply(x, y), a.apply(z), a.apply(w))

    def c1_rhs(x, y, z, w):
        return vec_add(dia.apply(a2.apply(x), f1(pf, y, z, w)),
                       dia.apply(a2.apply(y), f1(pf, x, z, w)))

    def c2_lhs(x, y, z, w):
        return dia.apply(leibnizator(sub, x, y, z), a2.apply(w))

    def c2_rhs(x, y, z, w):
        return vec_sub(f2(pf, a.apply(y), a.apply(z), dia.apply(x, w)),
                       dia.apply(a2.apply(x), f2(pf, y, z, w)))

    return CheckReport.conjunction("pre-f-manifold", [
        check_hom_zinbiel(HomAlgebra(pf.dim, pf.diamond, a, pf.labels), max_witnesses),
        check_hom_pre_lie(HomAlgebra(pf.dim, pf.star, a, pf.labels), max_witnesses),
        _scan_two_sided("splitting-compat-1", pf.dim, 4, c1_lhs, c1_rhs, max_witnesses),
        _scan_two_sided("splitting-compat-2", pf.dim, 4, c2_lhs, c2_rhs, max_witnesses),
    ])
