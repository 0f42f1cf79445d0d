"""Truncated multiplicative deformations of a commutative twisted algebra.

A deformation of order n is the base product plus bilinear correction terms
mu_1..mu_n; validity means the order-k compatibility rule holds for every
k <= n (coefficients of the truncated parameter).
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product as iproduct
from typing import Optional, Sequence

from .algebras import HomAlgebra, HomFManifold
from .cohomology import (Cochain, ComplexContext, coboundary,
                         cochain_from_bilinear, cochain_from_function)
from .errors import DimensionMismatch, PreconditionError
from .linalg import (BilinearMap, Matrix, Vector, basis_vector,
                     solve_linear_system, vec_add, vec_is_zero, vec_scale,
                     vec_sub)
from .report import DEFAULT_MAX_WITNESSES, CheckReport, Counterexample
from .representations import adjoint_pre_lie


@dataclass(frozen=True)
class Deformation:
    """Base algebra plus ordered correction terms; order = len(terms)."""

    base: HomAlgebra
    terms: tuple[BilinearMap, ...]

    def __post_init__(self):
        d = self.base.dim
        for t in self.terms:
            if (t.dim_left, t.dim_right, t.dim_out) != (d, d, d):
                raise DimensionMismatch("deformation term has wrong shape")

    @property
    def order(self) -> int:
        return len(self.terms)

    def mus(self) -> tuple[BilinearMap, ...]:
        return (self.base.product,) + self.terms


def rule_defect(mus: Sequence[BilinearMap], twist: Matrix, k: int,
                x: Sequence, y: Sequence, z: Sequence) -> Vector:
    """Order-k rule: the symmetrized-in-(x,y) defect that must vanish."""
    def side(p, q, r) -> Vector:
        tot = (Fraction(0),) * mus[0].dim_out
        for a in range(k + 1):
            b = k - a
            if a >= len(mus) or b >= len(mus):
                continue
            tot = vec_add(tot, vec_sub(
                mus[a].apply(mus[b].apply(p, q), twist.apply(r)),
                mus[a].apply(twist.apply(p), mus[b].apply(q, r))))
        return tot

    return vec_sub(side(x, y, z), side(y, x, z))


def check_n_deformation(dfm: Deformation,
                        max_witnesses: int = DEFAULT_MAX_WITNESSES) -> CheckReport:
    """The rule at every order 0..n on all basis triples; indices are (k, i, j, l)."""
    d = dfm.base.dim
    a = dfm.base.twist
    mus = dfm.mus()
    bad: list[Counterexample] = []
    for k in range(dfm.order + 1):
        for idx in iproduct(range(d), repeat=3):
            x, y, z = (basis_vector(d, i) for i in idx)
            v = rule_defect(mus, a, k, x, y, z)
            if not vec_is_zero(v):
                bad.append(Counterexample("deformation-rule", (k,) + idx,
                                          tuple(v), (Fraction(0),) * d))
                if len(bad) >= max_witnesses:
                    return CheckReport.leaf("n-deformation", bad, max_witnesses)
    return CheckReport.leaf("n-deformation", bad, max_witnesses)


def semiclassical_limit(dfm: Deformation) -> HomFManifold:
    """Base product with the commutator of the first correction term."""
    if dfm.order < 1:
        raise PreconditionError("need at least one correction term")
    rep = check_n_deformation(dfm)
    if not rep.passed:
        raise PreconditionError("deformation fails its order checks")
    return HomFManifold(dfm.base.dim, dfm.base.product,
                        dfm.terms[0].commutator(), dfm.base.twist,
                        dfm.base.labels)


def check_infinitesimal_cocycle(base: HomAlgebra, mu1: BilinearMap,
                                max_witnesses: int = DEFAULT_MAX_WITNESSES
                                ) -> CheckReport:
    """Order-1 condition, i.e. the rule at k = 1."""
    d = base.dim
    mus = (base.product, mu1)
    bad: list[Counterexample] = []
    for idx in iproduct(range(d), repeat=3):
        x, y, z = (basis_vector(d, i) for i in idx)
        v = rule_defect(mus, base.twist, 1, x, y, z)
        if not vec_is_zero(v):
            bad.append(Counterexample("infinitesimal-cocycle", idx,
                                      tuple(v), (Fraction(0),) * d))
            if len(bad) >= max_witnesses:
                break
    return CheckReport.leaf("infinitesimal-cocycle", bad, max_witnesses)


def check_infinitesimal_variant(base: HomAlgebra, mu1: BilinearMap,
                                max_witnesses: int = DEFAULT_MAX_WITNESSES
                                ) -> CheckReport:
    """Diagnostic variant with the twist moved inside the first-term slots.

    Coincides with the order-1 rule when the twist is the identity; kept so
    divergence under a nontrivial twist can be reported, never used as the
    acceptance condition.
    """
    d = base.dim
    a = base.twist
    dot = base.product
    bad: list[Counterexample] = []
    for idx in iproduct(range(d), repeat=3):
        x, y, z = (basis_vector(d, i) for i in idx)
        lhs = vec_sub(vec_sub(dot.apply(mu1.apply(x, y), a.apply(z)),
                              dot.apply(a.apply(x), mu1.apply(y, z))),
                      mu1.apply(x, dot.apply(y, a.apply(z))))
        rhs = vec_sub(vec_sub(dot.apply(mu1.apply(y, x), a.apply(z)),
                              dot.apply(a.apply(y), mu1.apply(x, z))),
                      mu1.apply(a.apply(y), dot.apply(x, z)))
        if lhs != rhs:
            bad.append(Counterexample("infinitesimal-variant", idx, lhs, rhs))
            if len(bad) >= max_witnesses:
                break
    return CheckReport.leaf("infinitesimal-variant", bad, max_witnesses)


def base_complex_context(base: HomAlgebra) -> ComplexContext:
    """The base product viewed as a pre-Lie algebra with its self-action."""
    return ComplexContext(base, adjoint_pre_lie(base))


def complex_coboundary_of_bilinear(base: HomAlgebra, mu1: BilinearMap) -> Cochain:
    """The differential of mu1 in the base's own complex."""
    return coboundary(base_complex_context(base), cochain_from_bilinear(mu1))


def infinitesimal_diagnostics(base: HomAlgebra, mu1: BilinearMap) -> dict:
    """Compare the order-1 rule against the complex differential and the variant."""
    rule = check_infinitesimal_cocycle(base, mu1)
    variant = check_infinitesimal_variant(base, mu1)
    try:
        dmu = complex_coboundary_of_bilinear(base, mu1)
        complex_zero = dmu.is_zero()
        complex_err = None
    except PreconditionError as exc:
        complex_zero = None
        complex_err = str(exc)
    return {
        "rule_passed": rule.passed,
        "variant_passed": variant.passed,
        "variant_agrees": variant.passed == rule.passed,
        "complex_coboundary_zero": complex_zero,
        "complex_agrees": (complex_zero == rule.passed) if complex_zero is not None else None,
        "complex_error": complex_err,
    }


def equivalence_witness(base: HomAlgebra, mu1: BilinearMap,
                        mu1_prime: BilinearMap) -> Optional[Matrix]:
    """Solve mu1 - mu1' = x.phi(y) + phi(x).y - phi(x.y) for a linear phi."""
    d = base.dim
    dot = base.product
    diff = mu1 - mu1_prime

    def unk(r: int, c: int) -> int:
        return r * d + c

    rows: list[list[Fraction]] = []
    rhs: list[Fraction] = []
    for i, j in iproduct(range(d), repeat=2):
        prod_ij = dot.value(i, j)
        for out in range(d):
            row = [Fraction(0)] * (d * d)
            # x.phi(y): phi(e_j) = sum_r phi[r][j] e_r
            for r in range(d):
                v = dot.value(i, r)
                if v[out]:
                    row[unk(r, j)] += v[out]
                v = dot.value(r, j)
                if v[out]:
                    row[unk(r, i)] += v[out]
            # -phi(x.y)
            for b, coeff in enumerate(prod_ij):
                if coeff:
                    row[unk(out, b)] -= coeff
            rows.append(row)
            rhs.append(diff.value(i, j)[out])
    sol = solve_linear_system(Matrix.from_rows(rows), tuple(rhs))
    if sol is None:
        return None
    x, _ = sol
    return Matrix.from_rows([[x[unk(r, c)] for c in range(d)] for r in range(d)])


def obstruction_theta(dfm: Deformation) -> Cochain:
    """Degree-3 obstruction cochain of an order-n deformation."""
    rep = check_n_deformation(dfm)
    if not rep.passed:
        raise PreconditionError("deformation fails its order checks")
    if dfm.order < 1:
        raise PreconditionError("need at least one correction term")
    d = dfm.base.dim
    a = dfm.base.twist
    n = dfm.order
    terms = dfm.terms

    def fn(idx):
        x, y, z = (basis_vector(d, i) for i in idx)
        tot = (Fraction(0),) * d
        for i in range(1, n + 1):
            j = n + 1 - i
            if j < 1 or j > n:
                continue
            mi, mj = terms[i - 1], terms[j - 1]
            tot = vec_add(tot, vec_sub(mi.apply(mj.apply(x, y), a.apply(z)),
                                       mi.apply(a.apply(x), mj.apply(y, z))))
            tot = vec_sub(tot, vec_sub(mi.apply(mj.apply(y, x), a.apply(z)),
                                       mi.apply(a.apply(y), mj.apply(x, z))))
        return tot

    return cochain_from_function(d, d, 3, fn)


def extend_deformation(dfm: Deformation) -> Optional[BilinearMap]:
    """Find the next correction term exactly, or report the obstruction.

    Solves the order-(n+1) rule for mu_{n+1} as a linear system over all
    bilinear maps; returns None iff the system is infeasible.
    """
    theta = obstruction_theta(dfm)
    d = dfm.base.dim
    a = dfm.base.twist
    dot = dfm.base.product

    def unk(p: int, q: int, k: int) -> int:
        return (p * d + q) * d + k

    rows: list[list[Fraction]] = []
    rhs: list[Fraction] = []
    for idx in iproduct(range(d), repeat=3):
        i, j, l = idx
        x, y, z = (basis_vector(d, t) for t in idx)
        ax, ay, az = a.apply(x), a.apply(y), a.apply(z)
        yz, xz = dot.apply(y, z), dot.apply(x, z)
        th = theta.value_at(idx)
        for out in range(d):
            row = [Fraction(0)] * (d ** 3)
            for k in range(d):
                ek = basis_vector(d, k)
                v = dot.apply(ek, az)
                if v[out]:
                    row[unk(i, j, k)] += v[out]
                    row[unk(j, i, k)] -= v[out]
                v = dot.apply(ax, ek)
                if v[out]:
                    row[unk(j, l, k)] -= v[out]
                v = dot.apply(ay, ek)
                if v[out]:
                    row[unk(i, l, k)] += v[out]
            for p, cp in enumerate(ax):
                if cp == 0:
                    continue
                for q, cq in enumerate(yz):
                    if cq:
                        row[unk(p, q, out)] -= cp * cq
            for p, cp in enumerate(ay):
                if cp == 0:
                    continue
                for q, cq in enumerate(xz):
                    if cq:
                        row[unk(p, q, out)] += cp * cq
            rows.append(row)
            rhs.append(-th[out])
    sol = solve_linear_system(Matrix.from_rows(rows), tuple(rhs))
    if sol is None:
        return None
    x, _ = sol
    return BilinearMap.from_entries(
        d, {(p, q, k): x[unk(p, q, k)]
            for p, q, k in iproduct(range(d), repeat=3) if x[unk(p, q, k)]})
