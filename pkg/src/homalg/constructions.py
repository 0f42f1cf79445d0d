"""Builders that derive new twisted structures from old ones."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product as iproduct

from .algebras import (HomAlgebra, HomFManifold, HomPreF, check_f_admissible,
                       check_pre_f_manifold, subadjacent_pair)
from .errors import DimensionMismatch, PreconditionError
from .linalg import BilinearMap, Matrix, basis_vector, scalar, vec_add
from .report import DEFAULT_MAX_WITNESSES, CheckReport, Counterexample


@dataclass(frozen=True)
class Morphism:
    """Linear map between structures; weak maps are exempt from the product law."""

    map: Matrix
    weak: bool = False


def check_derivation(alg: HomAlgebra, d: Matrix,
                     max_witnesses: int = DEFAULT_MAX_WITNESSES) -> CheckReport:
    """d commutes with the twist and satisfies the Leibniz rule for the product."""
    if (d.rows, d.cols) != (alg.dim, alg.dim):
        raise DimensionMismatch("derivation candidate has wrong shape")
    bad_twist = []
    da, ad = d @ alg.twist, alg.twist @ d
    for i in range(alg.dim):
        if da.column(i) != ad.column(i):
            bad_twist.append(Counterexample("twist-commute", (i,),
                                            da.column(i), ad.column(i)))
            if len(bad_twist) >= max_witnesses:
                break
    bad_leib = []
    m = alg.product
    for i, j in iproduct(range(alg.dim), repeat=2):
        x, y = alg.basis(i), alg.basis(j)
        lhs = d.apply(m.apply(x, y))
        rhs = vec_add(m.apply(d.apply(x), y), m.apply(x, d.apply(y)))
        if lhs != rhs:
            bad_leib.append(Counterexample("leibniz", (i, j), lhs, rhs))
            if len(bad_leib) >= max_witnesses:
                break
    return CheckReport.conjunction("derivation", [
        CheckReport.leaf("twist-commute", bad_twist, max_witnesses),
        CheckReport.leaf("leibniz", bad_leib, max_witnesses),
    ])


def derivation_product(alg: HomAlgebra, d: Matrix, lam=0) -> HomAlgebra:
    """The product x*y = x.d(y) + lam x.y on the same space and twist."""
    rep = check_derivation(alg, d)
    if not rep.passed:
        raise PreconditionError("map is not a derivation of the product")
    lam = scalar(lam)
    m = alg.product
    star = BilinearMap.from_function(
        alg.dim,
        lambda i, j: vec_add(m.apply(alg.basis(i), d.apply(alg.basis(j))),
                             tuple(lam * v for v in m.value(i, j))))
    return HomAlgebra(alg.dim, star, alg.twist, alg.labels)


def commutator_bracket(star: BilinearMap) -> BilinearMap:
    if star.dim_left != star.dim_right or star.dim_left != star.dim_out:
        raise DimensionMismatch("commutator needs a square bilinear map")
    return star.commutator()


def symmetrized_product(diamond: BilinearMap) -> BilinearMap:
    if diamond.dim_left != diamond.dim_right or diamond.dim_left != diamond.dim_out:
        raise DimensionMismatch("symmetrization needs a square bilinear map")
    return diamond.symmetrized()


def subadjacent_from_admissible(alg_dot: HomAlgebra, alg_star: HomAlgebra) -> HomFManifold:
    rep = check_f_admissible(alg_dot, alg_star)
    if not rep.passed:
        raise PreconditionError("pair is not admissible")
    return HomFManifold(alg_dot.dim, alg_dot.product,
                        commutator_bracket(alg_star.product),
                        alg_dot.twist, alg_dot.labels)


def subadjacent_from_pre_f(pf: HomPreF) -> HomFManifold:
    rep = check_pre_f_manifold(pf)
    if not rep.passed:
        raise PreconditionError("splitting pair fails its axioms")
    dot, br = subadjacent_pair(pf)
    return HomFManifold(pf.dim, dot, br, pf.twist, pf.labels)


def check_morphism(src: HomFManifold, dst: HomFManifold, m: Morphism,
                   max_witnesses: int = DEFAULT_MAX_WITNESSES) -> CheckReport:
    """Twist intertwining, bracket preservation, product preservation unless weak."""
    p = m.map
    if (p.rows, p.cols) != (dst.dim, src.dim):
        raise DimensionMismatch("morphism matrix has wrong shape")
    bad_twist = []
    lhs_m, rhs_m = p @ src.twist, dst.twist @ p
    for i in range(src.dim):
        if lhs_m.column(i) != rhs_m.column(i):
            bad_twist.append(Counterexample("twist-intertwine", (i,),
                                            lhs_m.column(i), rhs_m.column(i)))
            if len(bad_twist) >= max_witnesses:
                break
    parts = [CheckReport.leaf("twist-intertwine", bad_twist, max_witnesses)]
    pairs = [("bracket", src.bracket, dst.bracket)]
    if not m.weak:
        pairs.insert(0, ("product", src.dot, dst.dot))
    for name, bsrc, bdst in pairs:
        bad = []
        for i, j in iproduct(range(src.dim), repeat=2):
            x, y = src.basis(i), src.basis(j)
            lhs = p.apply(bsrc.apply(x, y))
            rhs = bdst.apply(p.apply(x), p.apply(y))
            if lhs != rhs:
                bad.append(Counterexample(name, (i, j), lhs, rhs))
                if len(bad) >= max_witnesses:
                    break
        parts.append(CheckReport.leaf(name, bad, max_witnesses))
    return CheckReport.conjunction("morphism", parts)


def yau_twist(fm: HomFManifold, phi: Morphism) -> HomFManifold:
    """Twist both operations through a self-morphism; new twist = phi o old twist."""
    p = phi.map
    if (p.rows, p.cols) != (fm.dim, fm.dim):
        raise DimensionMismatch("twisting morphism must be an endomorphism")
    if phi.weak:
        raise PreconditionError("twisting by a weak morphism is not defined")
    rep = check_morphism(fm, fm, phi)
    if not rep.passed:
        raise PreconditionError("map is not a self-morphism")
    dot = BilinearMap.from_function(
        fm.dim, lambda i, j: fm.dot.apply(p.column(i), p.column(j)))
    br = BilinearMap.from_function(
        fm.dim, lambda i, j: fm.bracket.apply(p.column(i), p.column(j)))
    return HomFManifold(fm.dim, dot, br, p @ fm.twist, fm.labels)


def direct_sum(fm1: HomFManifold, fm2: HomFManifold) -> HomFManifold:
    """Block-diagonal product, bracket and twist; left summand first."""
    d1, d2 = fm1.dim, fm2.dim
    n = d1 + d2

    def block(b1: BilinearMap, b2: BilinearMap) -> BilinearMap:
        ent = {}
        for i, j in iproduct(range(d1), repeat=2):
            for k, v in enumerate(b1.value(i, j)):
                if v:
                    ent[(i, j, k)] = v
        for i, j in iproduct(range(d2), repeat=2):
            for k, v in enumerate(b2.value(i, j)):
                if v:
                    ent[(d1 + i, d1 + j, d1 + k)] = v
        return BilinearMap.from_entries(n, ent)

    twist_rows = []
    for i in range(d1):
        twist_rows.append(list(fm1.twist.entries[i]) + [Fraction(0)] * d2)
    for i in range(d2):
        twist_rows.append([Fraction(0)] * d1 + list(fm2.twist.entries[i]))
    labels = tuple(f"a.{l}" for l in fm1.labels) + tuple(f"b.{l}" for l in fm2.labels)
    return HomFManifold(n, block(fm1.dot, fm2.dot), block(fm1.bracket, fm2.bracket),
                        Matrix.from_rows(twist_rows), labels)


def tensor_product(fm1: HomFManifold, fm2: HomFManifold) -> HomFManifold:
    """Product of products; bracket via the two-term Leibniz-style formula.

    Basis e_i (x) f_j ordered with the left index major. The output is
    constructed unconditionally; validity is a theorem for untwisted inputs
    and must be rechecked for genuinely twisted ones.
    """
    d1, d2 = fm1.dim, fm2.dim
    n = d1 * d2

    def ix(i1: int, i2: int) -> int:
        return i1 * d2 + i2

    dot_ent: dict[tuple[int, int, int], Fraction] = {}
    br_ent: dict[tuple[int, int, int], Fraction] = {}
    for i1, j1 in iproduct(range(d1), repeat=2):
        dot1 = fm1.dot.value(i1, j1)
        br1 = fm1.bracket.value(i1, j1)
        for i2, j2 in iproduct(range(d2), repeat=2):
            dot2 = fm2.dot.value(i2, j2)
            br2 = fm2.bracket.value(i2, j2)
            for k1 in range(d1):
                for k2 in range(d2):
                    dv = dot1[k1] * dot2[k2]
                    if dv:
                        dot_ent[(ix(i1, i2), ix(j1, j2), ix(k1, k2))] = dv
                    bv = br1[k1] * dot2[k2] + dot1[k1] * br2[k2]
                    if bv:
                        br_ent[(ix(i1, i2), ix(j1, j2), ix(k1, k2))] = bv
    twist_rows = [[fm1.twist.entries[k1][i1] * fm2.twist.entries[k2][i2]
                   for i1 in range(d1) for i2 in range(d2)]
                  for k1 in range(d1) for k2 in range(d2)]
    labels = tuple(f"{l1}(x){l2}" for l1 in fm1.labels for l2 in fm2.labels)
    return HomFManifold(n, BilinearMap.from_entries(n, dot_ent),
                        BilinearMap.from_entries(n, br_ent),
                        Matrix.from_rows(twist_rows), labels)
