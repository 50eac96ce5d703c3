"""Exact dense linear algebra over a finite field.

Matrices store packed element values row-major in a flat list.  Row
reduction is deterministic (leftmost pivot column, topmost pivot row), so
reduced forms and nullspace bases are reproducible across runs.
"""

from __future__ import annotations

from .gf import FieldCtx, FieldError


class MatrixGF:
    """Dense matrix of field elements (packed values, row-major)."""

    __slots__ = ("ctx", "rows", "cols", "data")

    def __init__(self, ctx: FieldCtx, rows: int, cols: int, data: list[int]):
        if len(data) != rows * cols:
            raise ValueError(f"need {rows * cols} entries, got {len(data)}")
        self.ctx = ctx
        self.rows = rows
        self.cols = cols
        self.data = data

    @classmethod
    def from_rows(cls, ctx: FieldCtx, rows: list[list[int]]) -> "MatrixGF":
        nrows = len(rows)
        ncols = len(rows[0]) if rows else 0
        flat: list[int] = []
        for r in rows:
            if len(r) != ncols:
                raise ValueError("ragged rows")
            flat.extend(int(x) for x in r)
        return cls(ctx, nrows, ncols, flat)

    @classmethod
    def zeros(cls, ctx: FieldCtx, rows: int, cols: int) -> "MatrixGF":
        return cls(ctx, rows, cols, [0] * (rows * cols))

    @classmethod
    def identity(cls, ctx: FieldCtx, n: int) -> "MatrixGF":
        m = cls.zeros(ctx, n, n)
        for i in range(n):
            m.data[i * n + i] = 1
        return m

    def __getitem__(self, idx: tuple[int, int]) -> int:
        i, j = idx
        return self.data[i * self.cols + j]

    def row(self, i: int) -> list[int]:
        return self.data[i * self.cols : (i + 1) * self.cols]

    def to_rows(self) -> list[list[int]]:
        return [self.row(i) for i in range(self.rows)]

    def copy(self) -> "MatrixGF":
        return MatrixGF(self.ctx, self.rows, self.cols, self.data[:])

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, MatrixGF)
            and self.ctx == other.ctx
            and self.rows == other.rows
            and self.cols == other.cols
            and self.data == other.data
        )

    def __repr__(self) -> str:
        return f"MatrixGF({self.rows}x{self.cols} over {self.ctx!r})"

    def is_zero(self) -> bool:
        return all(x == 0 for x in self.data)


def transpose(mat: MatrixGF) -> MatrixGF:
    out = [0] * (mat.rows * mat.cols)
    for i in range(mat.rows):
        base = i * mat.cols
        for j in range(mat.cols):
            out[j * mat.rows + i] = mat.data[base + j]
    return MatrixGF(mat.ctx, mat.cols, mat.rows, out)


def mat_mul(a: MatrixGF, b: MatrixGF) -> MatrixGF:
    if a.ctx != b.ctx:
        raise FieldError("matrix context mismatch")
    if a.cols != b.rows:
        raise ValueError(f"dimension mismatch: {a.rows}x{a.cols} times {b.rows}x{b.cols}")
    ctx = a.ctx
    mul, add = ctx.mul, ctx.add
    out = [0] * (a.rows * b.cols)
    for i in range(a.rows):
        arow = a.data[i * a.cols : (i + 1) * a.cols]
        obase = i * b.cols
        for l, av in enumerate(arow):
            if av == 0:
                continue
            brow = b.data[l * b.cols : (l + 1) * b.cols]
            for j, bv in enumerate(brow):
                if bv:
                    out[obase + j] = add(out[obase + j], mul(av, bv))
    return MatrixGF(ctx, a.rows, b.cols, out)


def vec_mat(vec: list[int], mat: MatrixGF) -> list[int]:
    """Row vector times matrix."""
    if len(vec) != mat.rows:
        raise ValueError("vector length must equal row count")
    ctx = mat.ctx
    mul, add = ctx.mul, ctx.add
    out = [0] * mat.cols
    for i, x in enumerate(vec):
        if x == 0:
            continue
        row = mat.data[i * mat.cols : (i + 1) * mat.cols]
        for j, y in enumerate(row):
            if y:
                out[j] = add(out[j], mul(x, y))
    return out


def rref(mat: MatrixGF) -> tuple[MatrixGF, int, list[int]]:
    """Reduced row echelon form.

    Returns (R, rank, pivot column indices).  Pivoting is deterministic:
    scan columns left to right, take the topmost available nonzero entry.
    """
    ctx = mat.ctx
    work = [mat.row(i) for i in range(mat.rows)]
    nrows, ncols = mat.rows, mat.cols
    mul, sub, inv = ctx.mul, ctx.sub, ctx.inv
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, nrows) if work[i][c] != 0), None)
        if piv is None:
            continue
        if piv != r:
            work[r], work[piv] = work[piv], work[r]
        factor = inv(work[r][c])
        if factor != 1:
            work[r] = [mul(factor, x) for x in work[r]]
        prow = work[r]
        for i in range(nrows):
            if i != r and work[i][c] != 0:
                f = work[i][c]
                wrow = work[i]
                work[i] = [sub(x, mul(f, y)) for x, y in zip(wrow, prow)]
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    flat = [x for row in work for x in row]
    return MatrixGF(ctx, nrows, ncols, flat), len(pivots), pivots


def rank(mat: MatrixGF) -> int:
    return rref(mat)[1]


def nullspace(mat: MatrixGF) -> MatrixGF:
    """Basis of the right kernel {x : M x^T = 0}, one basis vector per row.

    Free variables are set to 1 one at a time in ascending column order, so
    the basis is deterministic.  Returns a 0-row matrix at full column rank.
    """
    ctx = mat.ctx
    red, rk, pivots = rref(mat)
    free = [c for c in range(mat.cols) if c not in pivots]
    rows = []
    for fcol in free:
        vec = [0] * mat.cols
        vec[fcol] = 1
        for rix, pcol in enumerate(pivots):
            vec[pcol] = ctx.neg(red[rix, fcol])
        rows.append(vec)
    if not rows:
        return MatrixGF(ctx, 0, mat.cols, [])
    return MatrixGF.from_rows(ctx, rows)


def row_space_equal(a: MatrixGF, b: MatrixGF) -> bool:
    """Whether two matrices generate the same row space."""
    if a.ctx != b.ctx:
        raise FieldError("matrix context mismatch")
    if a.cols != b.cols:
        raise ValueError("column count mismatch")
    ra, rka, _ = rref(a)
    rb, rkb, _ = rref(b)
    if rka != rkb:
        return False
    return ra.data[: rka * a.cols] == rb.data[: rkb * b.cols]
