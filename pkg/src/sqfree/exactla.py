"""Exact dense linear algebra over Q or GF(p).

Matrices are immutable, row-major, and tiny (component dimensions stay
well under ~100), so everything is dense Gaussian elimination.  All
basis choices are deterministic: pivot columns ascending, free columns
ascending, complements made of standard vectors with the smallest
possible indices.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from . import gfkernels
from .errors import InternalCheckError
from .field import Field


@dataclass(frozen=True)
class Matrix:
    field: Field
    rows: int
    cols: int
    entries: tuple  # row-major, length rows*cols

    def __post_init__(self):
        assert len(self.entries) == self.rows * self.cols

    # -- constructors ---------------------------------------------------
    @staticmethod
    def from_rows(field: Field, rows):
        rows = [list(r) for r in rows]
        nr = len(rows)
        nc = len(rows[0]) if rows else 0
        flat = []
        for r in rows:
            assert len(r) == nc
            flat.extend(field.coerce(x) for x in r)
        return Matrix(field, nr, nc, tuple(flat))

    @staticmethod
    def zeros(field: Field, rows: int, cols: int) -> "Matrix":
        return Matrix(field, rows, cols, (field.zero(),) * (rows * cols))

    @staticmethod
    def identity(field: Field, n: int) -> "Matrix":
        z, o = field.zero(), field.one()
        flat = [z] * (n * n)
        for i in range(n):
            flat[i * n + i] = o
        return Matrix(field, n, n, tuple(flat))

    # -- access ---------------------------------------------------------
    def __getitem__(self, rc):
        r, c = rc
        return self.entries[r * self.cols + c]

    def row(self, r):
        return self.entries[r * self.cols : (r + 1) * self.cols]

    def col(self, c):
        return tuple(self.entries[r * self.cols + c] for r in range(self.rows))

    def to_lists(self):
        return [list(self.row(r)) for r in range(self.rows)]

    @property
    def is_zero(self) -> bool:
        return not any(self.entries)

    # -- arithmetic -----------------------------------------------------
    def __add__(self, other: "Matrix") -> "Matrix":
        assert (self.rows, self.cols) == (other.rows, other.cols)
        add = self.field.add
        return Matrix(
            self.field,
            self.rows,
            self.cols,
            tuple(add(a, b) for a, b in zip(self.entries, other.entries)),
        )

    def __neg__(self) -> "Matrix":
        neg = self.field.neg
        return Matrix(self.field, self.rows, self.cols, tuple(neg(a) for a in self.entries))

    def __sub__(self, other: "Matrix") -> "Matrix":
        return self + (-other)

    def scale(self, c) -> "Matrix":
        c = self.field.coerce(c)
        mul = self.field.mul
        return Matrix(self.field, self.rows, self.cols, tuple(mul(c, a) for a in self.entries))

    def __matmul__(self, other: "Matrix") -> "Matrix":
        assert self.cols == other.rows, f"{self.cols} != {other.rows}"
        f = self.field
        n, k, m = self.rows, self.cols, other.cols
        a, b = self.entries, other.entries
        out = []
        if f.p:
            p = f.p
            for i in range(n):
                base = i * k
                for j in range(m):
                    s = 0
                    for t in range(k):
                        s += a[base + t] * b[t * m + j]
                    out.append(s % p)
        else:
            for i in range(n):
                base = i * k
                for j in range(m):
                    s = Fraction(0)
                    for t in range(k):
                        s += a[base + t] * b[t * m + j]
                    out.append(s)
        return Matrix(f, n, m, tuple(out))

    def transpose(self) -> "Matrix":
        return Matrix(
            self.field,
            self.cols,
            self.rows,
            tuple(self.entries[r * self.cols + c] for c in range(self.cols) for r in range(self.rows)),
        )

    def hstack(self, other: "Matrix") -> "Matrix":
        assert self.rows == other.rows
        flat = []
        for r in range(self.rows):
            flat.extend(self.row(r))
            flat.extend(other.row(r))
        return Matrix(self.field, self.rows, self.cols + other.cols, tuple(flat))

    def select_columns(self, idxs) -> "Matrix":
        flat = []
        for r in range(self.rows):
            row = self.row(r)
            flat.extend(row[c] for c in idxs)
        return Matrix(self.field, self.rows, len(idxs), tuple(flat))


def hstack_all(field: Field, rows: int, mats) -> Matrix:
    mats = list(mats)
    if not mats:
        return Matrix.zeros(field, rows, 0)
    out = mats[0]
    for m in mats[1:]:
        out = out.hstack(m)
    return out


# -- elimination ---------------------------------------------------------


def rref(m: Matrix) -> tuple[Matrix, list[int]]:
    """Reduced row echelon form and its pivot columns."""
    if m.rows == 0 or m.cols == 0:
        return m, []
    f = m.field
    if f.p:
        a = np.array(m.entries, dtype=np.int64).reshape(m.rows, m.cols)
        piv = gfkernels.rref_mod(a, f.p)
        flat = tuple(int(x) for x in a.ravel())
        return Matrix(f, m.rows, m.cols, flat), [int(c) for c in piv]
    rows = [list(m.row(r)) for r in range(m.rows)]
    piv = []
    r = 0
    for c in range(m.cols):
        if r == len(rows):
            break
        pr = next((i for i in range(r, len(rows)) if rows[i][c]), None)
        if pr is None:
            continue
        rows[r], rows[pr] = rows[pr], rows[r]
        inv = 1 / rows[r][c]
        rows[r] = [x * inv for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c]:
                fac = rows[i][c]
                rows[i] = [x - fac * y for x, y in zip(rows[i], rows[r])]
        piv.append(c)
        r += 1
    flat = tuple(x for row in rows for x in row)
    return Matrix(f, m.rows, m.cols, flat), piv


def rank(m: Matrix) -> int:
    return len(rref(m)[1])


def kernel_basis(m: Matrix) -> Matrix:
    """Columns form the deterministic null-space basis (free columns ascending)."""
    f = m.field
    if m.rows == 0:
        return Matrix.identity(f, m.cols)
    r, piv = rref(m)
    pivset = set(piv)
    free = [c for c in range(m.cols) if c not in pivset]
    z, o = f.zero(), f.one()
    cols = []
    for fc in free:
        v = [z] * m.cols
        v[fc] = o
        for ri, pc in enumerate(piv):
            v[pc] = f.neg(r[ri, fc])
        cols.append(v)
    flat = tuple(cols[j][i] for i in range(m.cols) for j in range(len(cols)))
    return Matrix(f, m.cols, len(free), flat)


def image_basis(m: Matrix) -> Matrix:
    """The pivot columns of ``m`` (deterministic column-space basis)."""
    _, piv = rref(m)
    return m.select_columns(piv)


def solve(a: Matrix, b: Matrix) -> Matrix | None:
    """Solve ``a @ x = b`` exactly; free variables set to 0; None if inconsistent."""
    assert a.rows == b.rows
    aug, piv = rref(a.hstack(b))
    # consistency: no pivot in the b-part
    for c in piv:
        if c >= a.cols:
            return None
    f = a.field
    z = f.zero()
    flat = [z] * (a.cols * b.cols)
    for ri, pc in enumerate(piv):
        for j in range(b.cols):
            flat[pc * b.cols + j] = aug[ri, a.cols + j]
    return Matrix(f, a.cols, b.cols, tuple(flat))


def complement_pivots(base: Matrix, cand: Matrix) -> list[int]:
    """Indices of columns of ``cand`` extending span(base) to span(base)+span(cand).

    Deterministic: rref of [base | cand]; pivots falling in the cand part.
    """
    _, piv = rref(base.hstack(cand))
    return [c - base.cols for c in piv if c >= base.cols]


def induced_map(
    sub_src: Matrix,
    quot_src: Matrix,
    f: Matrix,
    sub_dst: Matrix,
    quot_dst: Matrix,
) -> Matrix:
    """Matrix of the map induced by ``f`` on span(sub)/span(quot), source to target.

    Bases are the deterministic complements of the quot columns inside the
    sub columns.  Raises :class:`InternalCheckError` if ``f`` does not
    carry span(sub_src) into span(sub_dst) modulo span(quot_dst).
    """
    sel_src = complement_pivots(quot_src, sub_src)
    sel_dst = complement_pivots(quot_dst, sub_dst)
    src_basis = sub_src.select_columns(sel_src)
    dst_basis = sub_dst.select_columns(sel_dst)
    target = f @ src_basis
    sol = solve(dst_basis.hstack(quot_dst), target)
    if sol is None:
        raise InternalCheckError("map does not descend to the subquotient")
    # keep only the coordinates along the chosen complement basis
    flat = []
    for r in range(len(sel_dst)):
        flat.extend(sol.row(r))
    return Matrix(f.field, len(sel_dst), src_basis.cols, tuple(flat))
