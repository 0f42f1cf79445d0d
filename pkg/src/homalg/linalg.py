"""Exact linear algebra over the rationals.

Scalars are ``fractions.Fraction`` (always lowest terms, positive
denominator, exact arithmetic). Vectors are plain tuples of Fractions.
Everything here is immutable and pure.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product as iproduct
from typing import Iterable, Optional, Sequence

from .errors import DimensionMismatch, PreconditionError

Scalar = Fraction
Vector = tuple[Fraction, ...]


def scalar(x) -> Fraction:
    """Coerce ints, strings like "p/q", and Fractions to an exact scalar."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return parse_scalar(x)
    raise TypeError(f"cannot build an exact scalar from {type(x).__name__}")


def parse_scalar(text: str) -> Fraction:
    """Parse the wire form "p" or "p/q" (ASCII, q > 0 after normalization)."""
    s = text.strip()
    try:
        f = Fraction(s)
    except (ValueError, ZeroDivisionError) as exc:
        raise ValueError(f"malformed scalar {text!r}") from exc
    return f


def format_scalar(x: Fraction) -> str:
    """Inverse of parse_scalar; lowest terms, no spaces."""
    return str(x)


def vector(entries: Iterable) -> Vector:
    return tuple(scalar(e) for e in entries)


def vec_zero(n: int) -> Vector:
    return (Fraction(0),) * n


def basis_vector(n: int, i: int) -> Vector:
    return tuple(Fraction(1 if j == i else 0) for j in range(n))


def vec_add(u: Sequence[Fraction], v: Sequence[Fraction]) -> Vector:
    if len(u) != len(v):
        raise DimensionMismatch(f"vector lengths {len(u)} != {len(v)}")
    return tuple(a + b for a, b in zip(u, v))


def vec_sub(u: Sequence[Fraction], v: Sequence[Fraction]) -> Vector:
    if len(u) != len(v):
        raise DimensionMismatch(f"vector lengths {len(u)} != {len(v)}")
    return tuple(a - b for a, b in zip(u, v))


def vec_scale(c: Fraction, v: Sequence[Fraction]) -> Vector:
    return tuple(c * a for a in v)


def vec_is_zero(v: Sequence[Fraction]) -> bool:
    return all(a == 0 for a in v)


def pair(xi: Sequence[Fraction], u: Sequence[Fraction]) -> Fraction:
    """Dual pairing: plain dot product of coordinates."""
    if len(xi) != len(u):
        raise DimensionMismatch(f"pairing lengths {len(xi)} != {len(u)}")
    return sum((a * b for a, b in zip(xi, u)), Fraction(0))


@dataclass(frozen=True)
class Matrix:
    """Dense matrix over Q; column j is the image of source basis vector j."""

    rows: int
    cols: int
    entries: tuple[tuple[Fraction, ...], ...]

    def __post_init__(self):
        if len(self.entries) != self.rows or any(len(r) != self.cols for r in self.entries):
            raise DimensionMismatch("matrix entry grid does not match declared shape")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence]) -> "Matrix":
        ents = tuple(tuple(scalar(x) for x in row) for row in rows)
        if not ents:
            return cls(0, 0, ())
        return cls(len(ents), len(ents[0]), ents)

    @classmethod
    def identity(cls, n: int) -> "Matrix":
        return cls(n, n, tuple(basis_vector(n, i) for i in range(n)))

    @classmethod
    def zero(cls, rows: int, cols: int) -> "Matrix":
        return cls(rows, cols, tuple(vec_zero(cols) for _ in range(rows)))

    @classmethod
    def diagonal(cls, diag: Sequence) -> "Matrix":
        d = [scalar(x) for x in diag]
        n = len(d)
        return cls(n, n, tuple(tuple(d[i] if i == j else Fraction(0) for j in range(n))
                               for i in range(n)))

    def apply(self, v: Sequence[Fraction]) -> Vector:
        if len(v) != self.cols:
            raise DimensionMismatch(f"matrix is {self.rows}x{self.cols}, vector has length {len(v)}")
        out = [Fraction(0)] * self.rows
        for j, vj in enumerate(v):
            if vj == 0:
                continue
            for i in range(self.rows):
                e = self.entries[i][j]
                if e != 0:
                    out[i] += e * vj
        return tuple(out)

    def column(self, j: int) -> Vector:
        return tuple(self.entries[i][j] for i in range(self.rows))

    def __matmul__(self, other: "Matrix") -> "Matrix":
        if self.cols != other.rows:
            raise DimensionMismatch(f"cannot compose {self.rows}x{self.cols} with {other.rows}x{other.cols}")
        ents = tuple(tuple(sum((self.entries[i][t] * other.entries[t][j] for t in range(self.cols)),
                               Fraction(0))
                           for j in range(other.cols))
                     for i in range(self.rows))
        return Matrix(self.rows, other.cols, ents)

    def __add__(self, other: "Matrix") -> "Matrix":
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise DimensionMismatch("matrix shapes differ")
        return Matrix(self.rows, self.cols,
                      tuple(tuple(a + b for a, b in zip(r1, r2))
                            for r1, r2 in zip(self.entries, other.entries)))

    def __sub__(self, other: "Matrix") -> "Matrix":
        return self + (-other)

    def __neg__(self) -> "Matrix":
        return Matrix(self.rows, self.cols,
                      tuple(tuple(-a for a in r) for r in self.entries))

    def scale(self, c) -> "Matrix":
        c = scalar(c)
        return Matrix(self.rows, self.cols,
                      tuple(tuple(c * a for a in r) for r in self.entries))

    def transpose(self) -> "Matrix":
        return Matrix(self.cols, self.rows,
                      tuple(tuple(self.entries[i][j] for i in range(self.rows))
                            for j in range(self.cols)))

    def is_square(self) -> bool:
        return self.rows == self.cols

    def is_identity(self) -> bool:
        return self.is_square() and self == Matrix.identity(self.rows)

    def det(self) -> Fraction:
        if not self.is_square():
            raise DimensionMismatch("determinant of a non-square matrix")
        m = [list(r) for r in self.entries]
        n = self.rows
        d = Fraction(1)
        for c in range(n):
            piv = next((i for i in range(c, n) if m[i][c] != 0), None)
            if piv is None:
                return Fraction(0)
            if piv != c:
                m[c], m[piv] = m[piv], m[c]
                d = -d
            d *= m[c][c]
            inv = 1 / m[c][c]
            for i in range(c + 1, n):
                if m[i][c] != 0:
                    f = m[i][c] * inv
                    for j in range(c, n):
                        m[i][j] -= f * m[c][j]
        return d

    def is_invertible(self) -> bool:
        return self.is_square() and self.det() != 0

    def inverse(self) -> "Matrix":
        if not self.is_square():
            raise DimensionMismatch("inverse of a non-square matrix")
        n = self.rows
        m = [list(r) + list(basis_vector(n, i)) for i, r in enumerate(self.entries)]
        r = 0
        for c in range(n):
            piv = next((i for i in range(r, n) if m[i][c] != 0), None)
            if piv is None:
                raise PreconditionError("matrix is singular")
            m[r], m[piv] = m[piv], m[r]
            p = m[r][c]
            m[r] = [x / p for x in m[r]]
            for i in range(n):
                if i != r and m[i][c] != 0:
                    f = m[i][c]
                    m[i] = [a - f * b for a, b in zip(m[i], m[r])]
            r += 1
        return Matrix.from_rows([row[n:] for row in m])

    def power(self, k: int) -> "Matrix":
        """Iterated composition; negative powers use the exact inverse."""
        base = self if k >= 0 else self.inverse()
        out = Matrix.identity(self.rows)
        for _ in range(abs(k)):
            out = out @ base
        return out


def _rref(rows: list[list[Fraction]], pivot_limit: Optional[int] = None
          ) -> tuple[list[list[Fraction]], list[int]]:
    """In-place reduced row echelon form; returns (matrix, pivot columns).

    pivot_limit restricts pivot search to the first that many columns
    (used to keep augmented right-hand-side columns passive).
    """
    nrows = len(rows)
    ncols = len(rows[0]) if nrows else 0
    limit = ncols if pivot_limit is None else pivot_limit
    pivots: list[int] = []
    r = 0
    for c in range(limit):
        piv = next((i for i in range(r, nrows) if rows[i][c] != 0), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        p = rows[r][c]
        rows[r] = [x / p for x in rows[r]]
        for i in range(nrows):
            if i != r and rows[i][c] != 0:
                f = rows[i][c]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    return rows, pivots


def rank(a: Matrix) -> int:
    if a.rows == 0 or a.cols == 0:
        return 0
    _, pivots = _rref([list(r) for r in a.entries])
    return len(pivots)


def kernel_basis(a: Matrix) -> tuple[Vector, ...]:
    """Exact basis of ker(a); size is cols - rank."""
    if a.cols == 0:
        return ()
    if a.rows == 0:
        return tuple(basis_vector(a.cols, i) for i in range(a.cols))
    red, pivots = _rref([list(r) for r in a.entries])
    free = [c for c in range(a.cols) if c not in pivots]
    out = []
    for fc in free:
        v = [Fraction(0)] * a.cols
        v[fc] = Fraction(1)
        for r_i, c in enumerate(pivots):
            v[c] = -red[r_i][fc]
        out.append(tuple(v))
    return tuple(out)


def solve_linear_system(a: Matrix, b: Sequence[Fraction]
                        ) -> Optional[tuple[Vector, tuple[Vector, ...]]]:
    """Solve a x = b exactly.

    Returns (particular solution, kernel basis), or None iff b is not in
    the image of a.
    """
    if len(b) != a.rows:
        raise DimensionMismatch(f"matrix has {a.rows} rows, rhs has length {len(b)}")
    sols = solve_many(a, (tuple(scalar(x) for x in b),))
    if sols[0] is None:
        return None
    return sols[0], kernel_basis(a)


def solve_many(a: Matrix, rhs: Sequence[Sequence[Fraction]]
               ) -> list[Optional[Vector]]:
    """Solve a x = b for several right-hand sides with one elimination."""
    k = len(rhs)
    for b in rhs:
        if len(b) != a.rows:
            raise DimensionMismatch("rhs length does not match row count")
    if a.rows == 0:
        return [vec_zero(a.cols) for _ in range(k)]
    aug = [list(a.entries[i]) + [b[i] for b in rhs] for i in range(a.rows)]
    red, pivots = _rref(aug, pivot_limit=a.cols)
    out: list[Optional[Vector]] = []
    for t in range(k):
        col = a.cols + t
        consistent = all(any(red[i][c] != 0 for c in range(a.cols)) or red[i][col] == 0
                         for i in range(len(red)))
        if not consistent:
            out.append(None)
            continue
        x = [Fraction(0)] * a.cols
        for r_i, c in enumerate(pivots):
            x[c] = red[r_i][col]
        out.append(tuple(x))
    return out


@dataclass(frozen=True)
class BilinearMap:
    """Structure-constant tensor c with (e_i, e_j) -> sum_k c[i][j][k] e_k."""

    dim_left: int
    dim_right: int
    dim_out: int
    c: tuple[tuple[tuple[Fraction, ...], ...], ...]

    def __post_init__(self):
        if len(self.c) != self.dim_left or any(len(r) != self.dim_right for r in self.c) \
                or any(len(v) != self.dim_out for r in self.c for v in r):
            raise DimensionMismatch("structure-constant tensor does not match declared dims")

    @classmethod
    def zero(cls, dim: int, dim_out: Optional[int] = None) -> "BilinearMap":
        do = dim if dim_out is None else dim_out
        return cls(dim, dim, do,
                   tuple(tuple(vec_zero(do) for _ in range(dim)) for _ in range(dim)))

    @classmethod
    def from_entries(cls, dim: int, entries: dict, dim_out: Optional[int] = None) -> "BilinearMap":
        """entries: {(i, j, k): scalar-like}; unspecified entries are zero."""
        do = dim if dim_out is None else dim_out
        grid = [[[Fraction(0)] * do for _ in range(dim)] for _ in range(dim)]
        for (i, j, k), v in entries.items():
            grid[i][j][k] = scalar(v)
        return cls(dim, dim, do,
                   tuple(tuple(tuple(col) for col in row) for row in grid))

    @classmethod
    def from_function(cls, dim: int, fn, dim_out: Optional[int] = None) -> "BilinearMap":
        """fn(i, j) -> output vector for the basis pair."""
        do = dim if dim_out is None else dim_out
        grid = []
        for i in range(dim):
            row = []
            for j in range(dim):
                v = tuple(scalar(x) for x in fn(i, j))
                if len(v) != do:
                    raise DimensionMismatch("from_function produced a vector of wrong length")
                row.append(v)
            grid.append(tuple(row))
        return cls(dim, dim, do, tuple(grid))

    def value(self, i: int, j: int) -> Vector:
        return self.c[i][j]

    def apply(self, x: Sequence[Fraction], y: Sequence[Fraction]) -> Vector:
        if len(x) != self.dim_left or len(y) != self.dim_right:
            raise DimensionMismatch("bilinear map applied to vectors of wrong length")
        out = [Fraction(0)] * self.dim_out
        for i, xi in enumerate(x):
            if xi == 0:
                continue
            row = self.c[i]
            for j, yj in enumerate(y):
                if yj == 0:
                    continue
                coef = xi * yj
                for k, e in enumerate(row[j]):
                    if e != 0:
                        out[k] += coef * e
        return tuple(out)

    def is_symmetric(self) -> bool:
        return all(self.c[i][j] == self.c[j][i]
                   for i in range(self.dim_left) for j in range(i + 1, self.dim_right))

    def is_antisymmetric(self) -> bool:
        return all(self.c[i][j] == tuple(-v for v in self.c[j][i])
                   for i in range(self.dim_left) for j in range(i, self.dim_right))

    def __add__(self, other: "BilinearMap") -> "BilinearMap":
        self._same_shape(other)
        return BilinearMap(self.dim_left, self.dim_right, self.dim_out,
                           tuple(tuple(vec_add(a, b) for a, b in zip(r1, r2))
                                 for r1, r2 in zip(self.c, other.c)))

    def __sub__(self, other: "BilinearMap") -> "BilinearMap":
        self._same_shape(other)
        return BilinearMap(self.dim_left, self.dim_right, self.dim_out,
                           tuple(tuple(vec_sub(a, b) for a, b in zip(r1, r2))
                                 for r1, r2 in zip(self.c, other.c)))

    def scale(self, k) -> "BilinearMap":
        k = scalar(k)
        return BilinearMap(self.dim_left, self.dim_right, self.dim_out,
                           tuple(tuple(vec_scale(k, v) for v in row) for row in self.c))

    def swap_args(self) -> "BilinearMap":
        return BilinearMap(self.dim_right, self.dim_left, self.dim_out,
                           tuple(tuple(self.c[i][j] for i in range(self.dim_left))
                                 for j in range(self.dim_right)))

    def commutator(self) -> "BilinearMap":
        """(x, y) -> m(x, y) - m(y, x)."""
        return self - self.swap_args()

    def symmetrized(self) -> "BilinearMap":
        """(x, y) -> m(x, y) + m(y, x)."""
        return self + self.swap_args()

    def is_zero(self) -> bool:
        return all(vec_is_zero(v) for row in self.c for v in row)

    def _same_shape(self, other: "BilinearMap"):
        if (self.dim_left, self.dim_right, self.dim_out) != \
                (other.dim_left, other.dim_right, other.dim_out):
            raise DimensionMismatch("bilinear map shapes differ")


@dataclass(frozen=True)
class MultiTensor:
    """Dense multilinear array; entry count equals the product of dims."""

    dims: tuple[int, ...]
    data: tuple[Fraction, ...]

    def __post_init__(self):
        n = 1
        for d in self.dims:
            n *= d
        if len(self.data) != n:
            raise DimensionMismatch("tensor data does not match dims")

    @classmethod
    def zero(cls, dims: Sequence[int]) -> "MultiTensor":
        n = 1
        for d in dims:
            n *= d
        return cls(tuple(dims), (Fraction(0),) * n)

    @classmethod
    def from_function(cls, dims: Sequence[int], fn) -> "MultiTensor":
        dims = tuple(dims)
        data = [scalar(fn(idx)) for idx in iproduct(*(range(d) for d in dims))]
        return cls(dims, tuple(data))

    def _offset(self, idx: tuple[int, ...]) -> int:
        off = 0
        for d, i in zip(self.dims, idx):
            off = off * d + i
        return off

    def get(self, idx: tuple[int, ...]) -> Fraction:
        if len(idx) != len(self.dims):
            raise DimensionMismatch("index arity does not match tensor arity")
        return self.data[self._offset(idx)]

    def vector_at(self, prefix: tuple[int, ...]) -> Vector:
        """Slice along the last axis at a fixed prefix index."""
        if len(prefix) != len(self.dims) - 1:
            raise DimensionMismatch("prefix arity must leave exactly the last axis free")
        m = self.dims[-1]
        off = 0
        for d, i in zip(self.dims[:-1], prefix):
            off = off * d + i
        off *= m
        return self.data[off:off + m]

    def __add__(self, other: "MultiTensor") -> "MultiTensor":
        if self.dims != other.dims:
            raise DimensionMismatch("tensor dims differ")
        return MultiTensor(self.dims, tuple(a + b for a, b in zip(self.data, other.data)))

    def __sub__(self, other: "MultiTensor") -> "MultiTensor":
        if self.dims != other.dims:
            raise DimensionMismatch("tensor dims differ")
        return MultiTensor(self.dims, tuple(a - b for a, b in zip(self.data, other.data)))

    def scale(self, k) -> "MultiTensor":
        k = scalar(k)
        return MultiTensor(self.dims, tuple(k * a for a in self.data))

    def is_zero(self) -> bool:
        return all(a == 0 for a in self.data)

    def compose_slot(self, slot: int, m: Matrix) -> "MultiTensor":
        """Precompose slot with the linear map m: new(e_i at slot) = old(m e_i)."""
        if m.rows != self.dims[slot]:
            raise DimensionMismatch("matrix does not act on the chosen slot")
        if m.is_identity():
            return self
        dims_new = self.dims[:slot] + (m.cols,) + self.dims[slot + 1:]
        inner = 1
        for d in self.dims[slot + 1:]:
            inner *= d
        outer = 1
        for d in self.dims[:slot]:
            outer *= d
        dold = self.dims[slot]
        dnew = m.cols
        data = [Fraction(0)] * (outer * dnew * inner)
        src = self.data
        for o in range(outer):
            base_src = o * dold * inner
            base_dst = o * dnew * inner
            for a in range(dold):
                row = m.entries[a]
                block = base_src + a * inner
                for i in range(dnew):
                    coef = row[i]
                    if coef == 0:
                        continue
                    dst = base_dst + i * inner
                    for t in range(inner):
                        v = src[block + t]
                        if v != 0:
                            data[dst + t] += coef * v
        return MultiTensor(dims_new, tuple(data))
