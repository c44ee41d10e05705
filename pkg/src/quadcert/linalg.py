"""Exact dense linear algebra over GF(p^k): rank, kernel basis, row reduction.

Everything reduces to one Gauss-Jordan routine with the pivot fixed as the
first nonzero entry of each column, so echelon forms (and therefore every
serialized certificate) are reproducible. The routine runs over one of three
scalar representations with identical pivoting logic: plain residues for prime
fields, indices into cached operation tables for small extension fields, and
FieldElement objects otherwise. A property test pins the paths to each other.
"""

from __future__ import annotations

from .errors import DimensionMismatchError
from .gf import FieldCtx, FieldElement


class Matrix:
    """Immutable row-major matrix of FieldElements over one context."""

    __slots__ = ("rows", "cols", "entries", "ctx")

    def __init__(self, rows: int, cols: int, entries, ctx: FieldCtx | None = None):
        entries = tuple(entries)
        if rows < 1 or cols < 1:
            raise DimensionMismatchError("matrix must have positive dimensions")
        if len(entries) != rows * cols:
            raise DimensionMismatchError(
                f"expected {rows * cols} entries, got {len(entries)}"
            )
        self.ctx = ctx if ctx is not None else entries[0].ctx
        for e in entries:
            if e.ctx != self.ctx:
                raise ValueError("matrix entries from different fields")
        self.rows = rows
        self.cols = cols
        self.entries = entries

    @classmethod
    def from_rows(cls, rows_list) -> "Matrix":
        rows_list = [list(r) for r in rows_list]
        ncols = len(rows_list[0])
        for r in rows_list:
            if len(r) != ncols:
                raise DimensionMismatchError("ragged rows")
        flat = [e for r in rows_list for e in r]
        return cls(len(rows_list), ncols, flat)

    def row(self, i: int) -> tuple:
        return self.entries[i * self.cols : (i + 1) * self.cols]

    def row_lists(self) -> list[list]:
        return [list(self.row(i)) for i in range(self.rows)]

    def transpose(self) -> "Matrix":
        flat = [self.entries[i * self.cols + j] for j in range(self.cols) for i in range(self.rows)]
        return Matrix(self.cols, self.rows, flat, self.ctx)

    def __eq__(self, other):
        if isinstance(other, Matrix):
            return (self.rows, self.cols, self.entries) == (
                other.rows,
                other.cols,
                other.entries,
            )
        return NotImplemented

    def __hash__(self):
        return hash((self.rows, self.cols, self.entries))

    def __repr__(self):
        return f"Matrix({self.rows}x{self.cols} over {self.ctx!r})"

    def to_json(self) -> list:
        return [[e.to_json() for e in self.row(i)] for i in range(self.rows)]


def matvec(m: Matrix, v) -> tuple:
    v = tuple(v)
    if len(v) != m.cols:
        raise DimensionMismatchError("vector length does not match column count")
    out = []
    for i in range(m.rows):
        acc = m.ctx.zero
        for a, x in zip(m.row(i), v):
            if not a.is_zero():
                acc = acc + a * x
        out.append(acc)
    return tuple(out)


# --- scalar representations -------------------------------------------------


class _ObjOps:
    """FieldElement scalars; the always-available path."""

    def __init__(self, ctx: FieldCtx):
        self.ctx = ctx

    def encode(self, e):
        return e

    def decode(self, s):
        return s

    def is_nz(self, s):
        return not s.is_zero()

    def inv(self, s):
        return s.inverse()

    def scale(self, row, f):
        return [f * x for x in row]

    def axpy(self, row, c, prow):
        return [x - c * y for x, y in zip(row, prow)]

    def neg(self, s):
        return -s

    def dot(self, row, col):
        acc = self.ctx.zero
        for x, y in zip(row, col):
            if not x.is_zero():
                acc = acc + x * y
        return acc


class _PrimeOps:
    """Plain residues mod p for k = 1."""

    def __init__(self, ctx: FieldCtx):
        self.ctx = ctx
        self.p = ctx.p

    def encode(self, e):
        return e.coeffs[0]

    def decode(self, s):
        return FieldElement(self.ctx, (s,))

    def is_nz(self, s):
        return s != 0

    def inv(self, s):
        return pow(s, self.p - 2, self.p)

    def scale(self, row, f):
        p = self.p
        return [(f * x) % p for x in row]

    def axpy(self, row, c, prow):
        p = self.p
        return [(x - c * y) % p for x, y in zip(row, prow)]

    def neg(self, s):
        return (-s) % self.p

    def dot(self, row, col):
        return sum(x * y for x, y in zip(row, col) if x) % self.p


class _TableOps:
    """Canonical element indices with cached tables; small extension fields."""

    def __init__(self, ctx: FieldCtx):
        self.ctx = ctx
        self.add_t, self.mul_t, self.neg_t, self.inv_t = ctx.tables()

    def encode(self, e):
        return self.ctx.element_index(e)

    def decode(self, s):
        return self.ctx.element_at(s)

    def is_nz(self, s):
        return s != 0

    def inv(self, s):
        return self.inv_t[s]

    def scale(self, row, f):
        mf = self.mul_t[f]
        return [mf[x] for x in row]

    def axpy(self, row, c, prow):
        add_t, neg_t, mc = self.add_t, self.neg_t, self.mul_t[c]
        return [add_t[x][neg_t[mc[y]]] for x, y in zip(row, prow)]

    def neg(self, s):
        return self.neg_t[s]

    def dot(self, row, col):
        acc = 0
        add_t, mul_t = self.add_t, self.mul_t
        for x, y in zip(row, col):
            if x:
                acc = add_t[acc][mul_t[x][y]]
        return acc


def _ops_for(ctx: FieldCtx):
    if ctx.k == 1:
        return _PrimeOps(ctx)
    if ctx.tables() is not None:
        return _TableOps(ctx)
    return _ObjOps(ctx)


def _rref(rows, ncols, ops) -> list[int]:
    """In-place Gauss-Jordan; returns pivot columns. Pivot = first row with a
    nonzero entry in the column, scanning top to bottom."""
    is_nz, inv, scale, axpy = ops.is_nz, ops.inv, ops.scale, ops.axpy
    pivots = []
    pr = 0
    nrows = len(rows)
    for col in range(ncols):
        sel = -1
        for i in range(pr, nrows):
            if is_nz(rows[i][col]):
                sel = i
                break
        if sel < 0:
            continue
        rows[pr], rows[sel] = rows[sel], rows[pr]
        rows[pr] = scale(rows[pr], inv(rows[pr][col]))
        prow = rows[pr]
        for i in range(nrows):
            if i != pr:
                c = rows[i][col]
                if is_nz(c):
                    rows[i] = axpy(rows[i], c, prow)
        pivots.append(col)
        pr += 1
        if pr == nrows:
            break
    return pivots


def _encode_rows(m: Matrix, ops) -> list[list]:
    enc = ops.encode
    return [[enc(e) for e in m.row(i)] for i in range(m.rows)]


def rank(m: Matrix, force_generic: bool = False) -> int:
    """Rank over the field, by exact elimination."""
    ops = _ObjOps(m.ctx) if force_generic else _ops_for(m.ctx)
    rows = _encode_rows(m, ops)
    return len(_rref(rows, m.cols, ops))


def rref(m: Matrix) -> tuple[Matrix, list[int]]:
    """Reduced row echelon form and its pivot columns."""
    ops = _ops_for(m.ctx)
    rows = _encode_rows(m, ops)
    pivots = _rref(rows, m.cols, ops)
    dec = ops.decode
    flat = [dec(s) for row in rows for s in row]
    return Matrix(m.rows, m.cols, flat, m.ctx), pivots


def kernel_basis(m: Matrix, force_generic: bool = False) -> list[tuple]:
    """Echelon-normalized basis of the right null space {v : m v = 0}.

    One basis vector per free column, carrying 1 there, 0 at the other free
    columns, and the negated reduced-echelon entry at each pivot column.
    """
    ops = _ObjOps(m.ctx) if force_generic else _ops_for(m.ctx)
    rows = _encode_rows(m, ops)
    pivots = _rref(rows, m.cols, ops)
    pivot_set = set(pivots)
    dec, neg = ops.decode, ops.neg
    zero, one = m.ctx.zero, m.ctx.one
    basis = []
    for free in range(m.cols):
        if free in pivot_set:
            continue
        v = [zero] * m.cols
        v[free] = one
        for j, pc in enumerate(pivots):
            v[pc] = dec(neg(rows[j][free]))
        basis.append(tuple(v))
    return basis


def restricted_rank(m: Matrix, basis, force_generic: bool = False) -> int:
    """Rank of m composed with the inclusion of span(basis): the rank of the
    matrix whose columns are m b for b in basis."""
    basis = [tuple(b) for b in basis]
    for b in basis:
        if len(b) != m.cols:
            raise DimensionMismatchError(
                f"basis vector of length {len(b)}, expected {m.cols}"
            )
    if not basis:
        return 0
    ops = _ObjOps(m.ctx) if force_generic else _ops_for(m.ctx)
    enc = ops.encode
    cols = [[enc(e) for e in b] for b in basis]
    rows = []
    for i in range(m.rows):
        mrow = [enc(e) for e in m.row(i)]
        rows.append([ops.dot(mrow, c) for c in cols])
    return len(_rref(rows, len(basis), ops))
