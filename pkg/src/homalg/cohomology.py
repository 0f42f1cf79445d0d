"""The cochain complex of a twisted pre-Lie algebra with coefficients.

Degree-n cochains are multilinear maps with n algebra slots and one module
output, antisymmetric in the first n-1 slots. The differential uses the
inverse twist, so contexts require invertible twist maps.
"""
from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, permutations, product as iproduct

from .algebras import HomAlgebra
from .errors import DimensionMismatch, PreconditionError
from .linalg import (BilinearMap, Matrix, MultiTensor, Vector, rank, vec_add,
                     vec_is_zero, vec_scale, vec_sub)
from .report import DEFAULT_MAX_WITNESSES, CheckReport, Counterexample
from .representations import Representation, check_rep_hom_pre_lie


@dataclass(frozen=True)
class Cochain:
    degree: int
    alg_dim: int
    mod_dim: int
    tensor: MultiTensor

    def __post_init__(self):
        if self.degree < 1:
            raise PreconditionError("cochain degree must be >= 1")
        dims = (self.alg_dim,) * self.degree + (self.mod_dim,)
        if self.tensor.dims != dims:
            raise DimensionMismatch("tensor shape does not match declared degree")
        # antisymmetry in the first degree-1 slots; adjacent swaps suffice
        for p in range(self.degree - 2):
            for idx in iproduct(*(range(d) for d in dims[:-1])):
                sw = list(idx)
                sw[p], sw[p + 1] = sw[p + 1], sw[p]
                lhs = self.tensor.vector_at(idx)
                rhs = self.tensor.vector_at(tuple(sw))
                if lhs != tuple(-v for v in rhs):
                    raise ValueError(
                        f"cochain not antisymmetric in slots {p},{p + 1} at {idx}")

    def value_at(self, idx: tuple[int, ...]) -> Vector:
        return self.tensor.vector_at(idx)

    def eval(self, vectors) -> Vector:
        """Full multilinear evaluation at arbitrary vectors."""
        if len(vectors) != self.degree:
            raise DimensionMismatch("wrong number of arguments")
        out = [Fraction(0)] * self.mod_dim
        for idx in iproduct(*(range(self.alg_dim) for _ in range(self.degree))):
            coef = Fraction(1)
            zero = False
            for s, i in enumerate(idx):
                coef *= vectors[s][i]
                if coef == 0:
                    zero = True
                    break
            if zero:
                continue
            v = self.tensor.vector_at(idx)
            for k in range(self.mod_dim):
                if v[k] != 0:
                    out[k] += coef * v[k]
        return tuple(out)

    def is_zero(self) -> bool:
        return self.tensor.is_zero()

    def __add__(self, other: "Cochain") -> "Cochain":
        return Cochain(self.degree, self.alg_dim, self.mod_dim,
                       self.tensor + other.tensor)

    def __sub__(self, other: "Cochain") -> "Cochain":
        return Cochain(self.degree, self.alg_dim, self.mod_dim,
                       self.tensor - other.tensor)

    def scale(self, k) -> "Cochain":
        return Cochain(self.degree, self.alg_dim, self.mod_dim, self.tensor.scale(k))


def zero_cochain(alg_dim: int, mod_dim: int, degree: int) -> Cochain:
    return Cochain(degree, alg_dim, mod_dim,
                   MultiTensor.zero((alg_dim,) * degree + (mod_dim,)))


def cochain_from_bilinear(b: BilinearMap) -> Cochain:
    """View a bilinear map A x A -> V as a degree-2 cochain."""
    t = MultiTensor.from_function(
        (b.dim_left, b.dim_right, b.dim_out),
        lambda idx: b.value(idx[0], idx[1])[idx[2]])
    return Cochain(2, b.dim_left, b.dim_out, t)


def cochain_from_function(alg_dim: int, mod_dim: int, degree: int, fn) -> Cochain:
    """fn(basis index tuple) -> output vector."""
    dims = (alg_dim,) * degree + (mod_dim,)
    cache = {}

    def entry(idx):
        pre = idx[:-1]
        if pre not in cache:
            cache[pre] = tuple(fn(pre))
        return cache[pre][idx[-1]]

    return Cochain(degree, alg_dim, mod_dim, MultiTensor.from_function(dims, entry))


def random_cochain(alg_dim: int, mod_dim: int, degree: int,
                   rng: random.Random) -> Cochain:
    """Seeded random cochain; degree >= 3 is antisymmetrized over a basis."""
    if degree <= 2:
        dims = (alg_dim,) * degree + (mod_dim,)
        data = tuple(Fraction(rng.randint(-3, 3), rng.choice((1, 1, 2)))
                     for _ in range(_size(dims)))
        return Cochain(degree, alg_dim, mod_dim, MultiTensor(dims, data))
    coords = {}
    for s in combinations(range(alg_dim), degree - 1):
        for j in range(alg_dim):
            coords[s + (j,)] = tuple(Fraction(rng.randint(-3, 3), rng.choice((1, 1, 2)))
                                     for _ in range(mod_dim))

    def fn(idx):
        head, j = idx[:-1], idx[-1]
        if len(set(head)) != len(head):
            return (Fraction(0),) * mod_dim
        order = tuple(sorted(head))
        sign = _perm_sign_of(head)
        return vec_scale(Fraction(sign), coords[order + (j,)])

    return cochain_from_function(alg_dim, mod_dim, degree, fn)


def _size(dims) -> int:
    n = 1
    for d in dims:
        n *= d
    return n


def _perm_sign_of(seq) -> int:
    """Sign of the permutation sorting seq (distinct entries)."""
    s = 1
    lst = list(seq)
    for i in range(len(lst)):
        for j in range(i + 1, len(lst)):
            if lst[i] > lst[j]:
                s = -s
    return s


@dataclass(frozen=True)
class ComplexContext:
    """A twisted pre-Lie algebra with an invertible twist plus a module."""

    algebra: HomAlgebra
    rep: Representation

    def __post_init__(self):
        if self.rep.alg_dim != self.algebra.dim:
            raise DimensionMismatch("representation is not over this algebra")
        if not self.algebra.twist.is_invertible():
            raise PreconditionError("twist is not invertible")
        if not self.rep.phi.is_invertible():
            raise PreconditionError("phi is not invertible")
        if self.rep.rho is None or self.rep.mu is None:
            raise PreconditionError("context needs both actions")
        if not check_rep_hom_pre_lie(self.algebra, self.rep).passed:
            raise PreconditionError("module is not a representation of the algebra")

    @property
    def alg_dim(self) -> int:
        return self.algebra.dim

    @property
    def mod_dim(self) -> int:
        return self.rep.mod_dim


def coboundary(ctx: ComplexContext, f: Cochain) -> Cochain:
    """The degree-raising differential; output antisymmetry is verified."""
    d, m = ctx.alg_dim, ctx.mod_dim
    if (f.alg_dim, f.mod_dim) != (d, m):
        raise DimensionMismatch("cochain does not live in this context")
    n = f.degree
    a = ctx.algebra.twist
    star = ctx.algebra.product
    rho, mu, phi = ctx.rep.rho, ctx.rep.mu, ctx.rep.phi

    ainv = a.inverse()
    a2inv = ainv @ ainv
    # arguments of the last-slot composites, precomputed per basis pair
    star2 = [[star.apply(a2inv.column(i), a2inv.column(j)) for j in range(d)]
             for i in range(d)]
    brk = star.commutator()
    brk2 = [[brk.apply(a2inv.column(i), a2inv.column(j)) for j in range(d)]
            for i in range(d)]

    fa = f.tensor
    for s in range(n):
        fa = fa.compose_slot(s, ainv)
    fb = f.tensor
    for s in range(n - 1):
        fb = fb.compose_slot(s, ainv)
    fc = f.tensor
    for s in range(1, n):
        fc = fc.compose_slot(s, ainv)

    zero = (Fraction(0),) * m
    out_entries: list[Fraction] = []
    for idx in iproduct(*(range(d) for _ in range(n + 1))):
        total = list(zero)

        for i in range(1, n + 1):
            sign = 1 if i % 2 == 1 else -1
            rest = idx[:i - 1] + idx[i:]
            v = fa.vector_at(rest)
            if not vec_is_zero(v):
                t1 = rho[idx[i - 1]].apply(v)
                for k in range(m):
                    total[k] += sign * t1[k]

            head = idx[:i - 1] + idx[i:n]
            v = fa.vector_at(head + (idx[i - 1],))
            if not vec_is_zero(v):
                t2 = mu[idx[n]].apply(v)
                for k in range(m):
                    total[k] += sign * t2[k]

            w = star2[idx[i - 1]][idx[n]]
            acc = list(zero)
            hit = False
            for kk, wk in enumerate(w):
                if wk == 0:
                    continue
                v = fb.vector_at(head + (kk,))
                if not vec_is_zero(v):
                    hit = True
                    for k in range(m):
                        acc[k] += wk * v[k]
            if hit:
                t3 = phi.apply(acc)
                for k in range(m):
                    total[k] -= sign * t3[k]

        for i in range(1, n + 1):
            for j in range(i + 1, n + 1):
                sign = 1 if (i + j) % 2 == 0 else -1
                w = brk2[idx[i - 1]][idx[j - 1]]
                rest = tuple(idx[t] for t in range(n + 1) if t not in (i - 1, j - 1))
                acc = list(zero)
                hit = False
                for kk, wk in enumerate(w):
                    if wk == 0:
                        continue
                    v = fc.vector_at((kk,) + rest)
                    if not vec_is_zero(v):
                        hit = True
                        for k in range(m):
                            acc[k] += wk * v[k]
                if hit:
                    t4 = phi.apply(acc)
                    for k in range(m):
                        total[k] += sign * t4[k]

        out_entries.extend(total)

    t = MultiTensor((d,) * (n + 1) + (m,), tuple(out_entries))
    return Cochain(n + 1, d, m, t)


def check_d_squared(ctx: ComplexContext, f: Cochain,
                    max_witnesses: int = DEFAULT_MAX_WITNESSES) -> CheckReport:
    g = coboundary(ctx, coboundary(ctx, f))
    bad: list[Counterexample] = []
    if not g.is_zero():
        d = ctx.alg_dim
        for idx in iproduct(*(range(d) for _ in range(g.degree))):
            v = g.value_at(idx)
            if not vec_is_zero(v):
                bad.append(Counterexample("d-squared", idx, tuple(v),
                                          (Fraction(0),) * ctx.mod_dim))
                if len(bad) >= max_witnesses:
                    break
    return CheckReport.leaf("d-squared", bad, max_witnesses)


def cochain_space_dim(alg_dim: int, mod_dim: int, degree: int) -> int:
    from math import comb
    return comb(alg_dim, degree - 1) * alg_dim * mod_dim


def _basis_cochain(alg_dim: int, mod_dim: int, degree: int,
                   s: tuple[int, ...], j: int, v: int) -> Cochain:
    entries: dict[tuple[int, ...], Vector] = {}
    for perm in permutations(range(degree - 1)):
        sign = _perm_sign_of(perm)
        key = tuple(s[p] for p in perm) + (j,)
        vec = [Fraction(0)] * mod_dim
        vec[v] = Fraction(sign)
        entries[key] = tuple(vec)

    zero = (Fraction(0),) * mod_dim

    def fn(idx):
        return entries.get(idx, zero)

    return cochain_from_function(alg_dim, mod_dim, degree, fn)


def coboundary_matrix(ctx: ComplexContext, degree: int) -> Matrix:
    """Matrix of the differential from degree to degree+1 in the sorted bases."""
    d, m = ctx.alg_dim, ctx.mod_dim
    src = [(s, j, v) for s in combinations(range(d), degree - 1)
           for j in range(d) for v in range(m)]
    dst = [(s, j, v) for s in combinations(range(d), degree)
           for j in range(d) for v in range(m)]
    cols = []
    for (s, j, v) in src:
        f = _basis_cochain(d, m, degree, s, j, v)
        g = coboundary(ctx, f)
        cols.append([g.value_at(s2 + (j2,))[v2] for (s2, j2, v2) in dst])
    return Matrix.from_rows([[cols[c][r] for c in range(len(src))]
                             for r in range(len(dst))])


def cohomology_dims(ctx: ComplexContext, degree: int) -> tuple[int, int, int]:
    """(dim closed, dim exact, dim quotient) at the given degree; degree >= 1."""
    if degree < 1:
        raise PreconditionError("degree must be >= 1")
    cn = cochain_space_dim(ctx.alg_dim, ctx.mod_dim, degree)
    if cn == 0:
        return (0, 0, 0)
    if cochain_space_dim(ctx.alg_dim, ctx.mod_dim, degree + 1) == 0:
        z = cn
    else:
        z = cn - rank(coboundary_matrix(ctx, degree))
    if degree == 1:
        b = 0
    elif cochain_space_dim(ctx.alg_dim, ctx.mod_dim, degree - 1) == 0:
        b = 0
    else:
        b = rank(coboundary_matrix(ctx, degree - 1))
    return (z, b, z - b)
