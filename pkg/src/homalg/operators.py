"""Relative Rota-Baxter machinery: operator checks and induced structures."""
from __future__ import annotations

from dataclasses import dataclass
from itertools import product as iproduct

from fractions import Fraction

from .algebras import HomAlgebra, HomFManifold, HomPreF
from .errors import DimensionMismatch, PreconditionError
from .linalg import (BilinearMap, Matrix, basis_vector, solve_many, vec_add,
                     vec_sub)
from .report import DEFAULT_MAX_WITNESSES, CheckReport, Counterexample
from .representations import Representation, adjoint_f_manifold, check_coherence

__all__ = [
    "check_o_operator_assoc", "check_o_operator_lie", "check_o_operator_f_manifold",
    "induced_pre_f", "rota_baxter_induced", "compatible_from_invertible_o",
    "SymplecticForm", "check_symplectic", "pre_f_from_symplectic",
]


def _intertwine_report(t: Matrix, twist: Matrix, phi: Matrix,
                       max_witnesses: int) -> CheckReport:
    bad = []
    lhs, rhs = t @ phi, twist @ t
    for j in range(t.cols):
        if lhs.column(j) != rhs.column(j):
            bad.append(Counterexample("operator-intertwine", (j,),
                                      lhs.column(j), rhs.column(j)))
            if len(bad) >= max_witnesses:
                break
    return CheckReport.leaf("operator-intertwine", bad, max_witnesses)


def check_o_operator_assoc(t: Matrix, alg: HomAlgebra, rep: Representation,
                           max_witnesses: int = DEFAULT_MAX_WITNESSES) -> CheckReport:
    """T(u).T(v) = T(mu(Tu)v + mu(Tv)u) plus the intertwining condition."""
    if rep.mu is None:
        raise PreconditionError("need a mu action")
    if (t.rows, t.cols) != (alg.dim, rep.mod_dim):
        raise DimensionMismatch("operator shape must be algebra x module")
    m = rep.mod_dim
    bad = []
    for i, j in iproduct(range(m), repeat=2):
        u, v = basis_vector(m, i), basis_vector(m, j)
        tu, tv = t.apply(u), t.apply(v)
        lhs = alg.product.apply(tu, tv)
        rhs = t.apply(vec_add(rep.mu_of(tu).apply(v), rep.mu_of(tv).apply(u)))
        if lhs != rhs:
            bad.append(Counterexample("operator-product", (i, j), lhs, rhs))
            if len(bad) >= max_witnesses:
                break
    return CheckReport.conjunction("o-operator-assoc", [
        _intertwine_report(t, alg.twist, rep.phi, max_witnesses),
        CheckReport.leaf("operator-product", bad, max_witnesses),
    ])


def check_o_operator_lie(t: Matrix, alg: HomAlgebra, rep: Representation,
                         max_witnesses: int = DEFAULT_MAX_WITNESSES) -> CheckReport:
    """[Tu, Tv] = T(rho(Tu)v - rho(Tv)u) plus the intertwining condition."""
    if rep.rho is None:
        raise PreconditionError("need a rho action")
    if (t.rows, t.cols) != (alg.dim, rep.mod_dim):
        raise DimensionMismatch("operator shape must be algebra x module")
    m = rep.mod_dim
    bad = []
    for i, j in iproduct(range(m), repeat=2):
        u, v = basis_vector(m, i), basis_vector(m, j)
        tu, tv = t.apply(u), t.apply(v)
        lhs = alg.product.apply(tu, tv)
        rhs = t.apply(vec_sub(rep.rho_of(tu).apply(v), rep.rho_of(tv).apply(u)))
        if lhs != rhs:
            bad.append(Counterexample("operator-bracket", (i, j), lhs, rhs))
            if len(bad) >= max_witnesses:
                break
    return CheckReport.conjunction("o-operator-lie", [
        _intertwine_report(t, alg.twist, rep.phi, max_witnesses),
        CheckReport.leaf("operator-bracket", bad, max_witnesses),
    ])


def check_o_operator_f_manifold(t: Matrix, fm: HomFManifold, rep: Representation,
                                max_witnesses: int = DEFAULT_MAX_WITNESSES) -> CheckReport:
    return CheckReport.conjunction("o-operator", [
        check_o_operator_assoc(t, fm.dot_algebra(), rep, max_witnesses),
        check_o_operator_lie(t, fm.bracket_algebra(), rep, max_witnesses),
    ])


def induced_pre_f(t: Matrix, fm: HomFManifold, rep: Representation) -> HomPreF:
    """On the module: u<>v = mu(Tu)v, u*v = rho(Tu)v, twist phi."""
    gate = check_o_operator_f_manifold(t, fm, rep)
    if not gate.passed:
        raise PreconditionError("map is not an operator for this structure")
    m = rep.mod_dim
    dia = BilinearMap.from_function(
        m, lambda i, j: rep.mu_of(t.column(i)).column(j))
    star = BilinearMap.from_function(
        m, lambda i, j: rep.rho_of(t.column(i)).column(j))
    return HomPreF(m, dia, star, rep.phi)


def rota_baxter_induced(r: Matrix, fm: HomFManifold) -> HomPreF:
    """x<>y = R(x).y and x*y = [R(x), y]; the module is the algebra itself."""
    return induced_pre_f(r, fm, adjoint_f_manifold(fm))


def compatible_from_invertible_o(t: Matrix, fm: HomFManifold,
                                 rep: Representation) -> HomPreF:
    """x<>y = T(mu(x)(T^-1 y)), x*y = T(rho(x)(T^-1 y)) on the algebra itself."""
    if t.rows != t.cols or not t.is_invertible():
        raise PreconditionError("operator is not invertible")
    gate = check_o_operator_f_manifold(t, fm, rep)
    if not gate.passed:
        raise PreconditionError("map is not an operator for this structure")
    tinv = t.inverse()
    dia = BilinearMap.from_function(
        fm.dim, lambda i, j: t.apply(rep.mu_of(fm.basis(i)).apply(tinv.column(j))))
    star = BilinearMap.from_function(
        fm.dim, lambda i, j: t.apply(rep.rho_of(fm.basis(i)).apply(tinv.column(j))))
    return HomPreF(fm.dim, dia, star, fm.twist, fm.labels)


@dataclass(frozen=True)
class SymplecticForm:
    """Antisymmetric pairing given by its Gram matrix omega[i][j] = w(e_i, e_j)."""

    gram: Matrix

    def __post_init__(self):
        if not self.gram.is_square():
            raise DimensionMismatch("form matrix must be square")
        if self.gram.transpose() != -self.gram:
            raise ValueError("form must be antisymmetric")

    @property
    def dim(self) -> int:
        return self.gram.rows

    def value(self, x, y) -> Fraction:
        acc = Fraction(0)
        for i, xi in enumerate(x):
            if xi == 0:
                continue
            row = self.gram.entries[i]
            for j, yj in enumerate(y):
                if yj != 0 and row[j] != 0:
                    acc += xi * row[j] * yj
        return acc

    @property
    def sharp(self) -> Matrix:
        """Matrix of x -> w(x, .) into the dual basis."""
        return self.gram.transpose()


def check_symplectic(fm: HomFManifold, omega: SymplecticForm,
                     max_witnesses: int = DEFAULT_MAX_WITNESSES) -> CheckReport:
    """Twist invariance plus the cyclic condition for both operations."""
    if omega.dim != fm.dim:
        raise DimensionMismatch("form does not act on this algebra")
    a = fm.twist
    d = fm.dim
    bad_inv = []
    for i, j in iproduct(range(d), repeat=2):
        x, y = fm.basis(i), fm.basis(j)
        lhs = omega.value(a.apply(x), a.apply(y))
        rhs = omega.value(x, y)
        if lhs != rhs:
            bad_inv.append(Counterexample("form-invariance", (i, j), (lhs,), (rhs,)))
            if len(bad_inv) >= max_witnesses:
                break
    parts = [CheckReport.leaf("form-invariance", bad_inv, max_witnesses)]
    for name, op in (("cyclic-product", fm.dot), ("cyclic-bracket", fm.bracket)):
        bad = []
        for idx in iproduct(range(d), repeat=3):
            x, y, z = (basis_vector(d, i) for i in idx)
            acc = Fraction(0)
            for (p, q, r) in ((x, y, z), (y, z, x), (z, x, y)):
                acc += omega.value(op.apply(p, q), a.apply(r))
            if acc != 0:
                bad.append(Counterexample(name, idx, (acc,), (Fraction(0),)))
                if len(bad) >= max_witnesses:
                    break
        parts.append(CheckReport.leaf(name, bad, max_witnesses))
    return CheckReport.conjunction("symplectic", parts)


def pre_f_from_symplectic(fm: HomFManifold, omega: SymplecticForm) -> HomPreF:
    """Solve w(x<>y, a(z)) = w(a(y), x.z) and w(x*y, a(z)) = w(a(y), [z,x]).

    One elimination is shared across all right-hand sides.
    """
    coh = check_coherence(fm)
    if not coh.passed:
        raise PreconditionError("coherence conditions fail")
    sym = check_symplectic(fm, omega)
    if not sym.passed:
        raise PreconditionError("form is not symplectic for this structure")
    if not omega.sharp.is_invertible():
        raise PreconditionError("form is degenerate")
    if not fm.twist.is_invertible():
        raise PreconditionError("twist is not invertible")
    d = fm.dim
    a = fm.twist
    # row z of the system: w(u, a(e_z)) = rhs_z, i.e. (A^T gram^T) u = rhs
    system = a.transpose() @ omega.gram.transpose()
    rhs_all = []
    for i, j in iproduct(range(d), repeat=2):
        x, y = fm.basis(i), fm.basis(j)
        ay = a.apply(y)
        rhs_dia = tuple(omega.value(ay, fm.dot.apply(x, basis_vector(d, z)))
                        for z in range(d))
        rhs_star = tuple(omega.value(ay, fm.bracket.apply(basis_vector(d, z), x))
                         for z in range(d))
        rhs_all.append(rhs_dia)
        rhs_all.append(rhs_star)
    sols = solve_many(system, rhs_all)
    dia_vals = {}
    star_vals = {}
    pos = 0
    for i, j in iproduct(range(d), repeat=2):
        dia_vals[(i, j)] = sols[pos]
        star_vals[(i, j)] = sols[pos + 1]
        pos += 2
    dia = BilinearMap.from_function(d, lambda i, j: dia_vals[(i, j)])
    star = BilinearMap.from_function(d, lambda i, j: star_vals[(i, j)])
    return HomPreF(d, dia, star, a, fm.labels)
