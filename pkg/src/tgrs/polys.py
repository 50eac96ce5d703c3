"""Univariate polynomials over a finite field.

Coefficients are packed element values, constant term first, trimmed so
that the last coefficient is nonzero except for the zero polynomial, which
is stored as a single zero coefficient.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .gf import ENUM_CAP, Fe, FieldCtx, FieldError


@dataclass(frozen=True, slots=True)
class PolyGF:
    ctx: FieldCtx
    coeffs: tuple[int, ...]

    @staticmethod
    def make(ctx: FieldCtx, coeffs: Sequence[int]) -> "PolyGF":
        cl = [int(c) for c in coeffs] or [0]
        while len(cl) > 1 and cl[-1] == 0:
            cl.pop()
        return PolyGF(ctx, tuple(cl))

    @property
    def degree(self) -> int:
        """Degree, with the zero polynomial assigned -1."""
        if len(self.coeffs) == 1 and self.coeffs[0] == 0:
            return -1
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return self.degree == -1

    def coeff(self, j: int) -> int:
        """Coefficient of x^j, zero outside the stored range."""
        if j < 0 or j >= len(self.coeffs):
            return 0
        return self.coeffs[j]

    def evaluate(self, x: int) -> int:
        ctx = self.ctx
        acc = 0
        for c in reversed(self.coeffs):
            acc = ctx.add(ctx.mul(acc, x), c)
        return acc

    def __add__(self, other: "PolyGF") -> "PolyGF":
        self._same(other)
        ctx = self.ctx
        n = max(len(self.coeffs), len(other.coeffs))
        out = [ctx.add(self.coeff(i), other.coeff(i)) for i in range(n)]
        return PolyGF.make(ctx, out)

    def __sub__(self, other: "PolyGF") -> "PolyGF":
        self._same(other)
        ctx = self.ctx
        n = max(len(self.coeffs), len(other.coeffs))
        out = [ctx.sub(self.coeff(i), other.coeff(i)) for i in range(n)]
        return PolyGF.make(ctx, out)

    def __mul__(self, other: "PolyGF") -> "PolyGF":
        self._same(other)
        ctx = self.ctx
        if self.is_zero() or other.is_zero():
            return PolyGF.make(ctx, [0])
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    if b:
                        out[i + j] = ctx.add(out[i + j], ctx.mul(a, b))
        return PolyGF.make(ctx, out)

    def scale(self, c: int) -> "PolyGF":
        ctx = self.ctx
        return PolyGF.make(ctx, [ctx.mul(c, x) for x in self.coeffs])

    def _same(self, other: "PolyGF") -> None:
        if self.ctx != other.ctx:
            raise FieldError("polynomial context mismatch")

    def __repr__(self) -> str:
        return f"PolyGF({list(self.coeffs)} over {self.ctx!r})"


def poly_from_roots(ctx: FieldCtx, roots: Sequence[int | Fe]) -> PolyGF:
    """The monic polynomial whose root multiset is the given distinct roots.

    Coefficient j of the result is the signed elementary symmetric value
    that standard root expansion produces.  Duplicate roots are rejected.
    """
    vals = [int(r) for r in roots]
    if len(set(vals)) != len(vals):
        raise ValueError("duplicate roots")
    coeffs = [1]
    for r in vals:
        nr = ctx.neg(r)
        nxt = [0] * (len(coeffs) + 1)
        for i, c in enumerate(coeffs):
            if c:
                nxt[i] = ctx.add(nxt[i], ctx.mul(c, nr))
                nxt[i + 1] = ctx.add(nxt[i + 1], c)
        coeffs = nxt
    return PolyGF.make(ctx, coeffs)


def poly_derivative(f: PolyGF) -> PolyGF:
    """Formal derivative with characteristic-p coefficient wraparound."""
    ctx = f.ctx
    if f.degree <= 0:
        return PolyGF.make(ctx, [0])
    out = []
    for j in range(1, len(f.coeffs)):
        out.append(ctx.mul(ctx.scalar(j), f.coeffs[j]))
    return PolyGF.make(ctx, out)


def poly_gcd(f: PolyGF, g: PolyGF) -> PolyGF:
    """Monic greatest common divisor."""
    f._same(g)
    ctx = f.ctx
    a, b = list(f.coeffs), list(g.coeffs)

    def trim(c: list[int]) -> list[int]:
        while len(c) > 1 and c[-1] == 0:
            c.pop()
        return c

    def pmod(num: list[int], den: list[int]) -> list[int]:
        num = num[:]
        dd = len(den) - 1
        ilead = ctx.inv(den[-1])
        for d in range(len(num) - 1, dd - 1, -1):
            c = num[d]
            if c:
                factor = ctx.mul(c, ilead)
                for i in range(dd + 1):
                    num[d - dd + i] = ctx.sub(num[d - dd + i], ctx.mul(factor, den[i]))
        del num[dd:]
        return trim(num if num else [0])

    a, b = trim(a), trim(b)
    while b != [0]:
        a, b = b, pmod(a, b)
    if a != [0]:
        ilead = ctx.inv(a[-1])
        a = [ctx.mul(ilead, c) for c in a]
    return PolyGF.make(ctx, a)


def distinct_roots_in_field(f: PolyGF, ctx: FieldCtx | None = None, require_simple: bool = False) -> list[int]:
    """All roots of f in its field, in packed order, by exhaustive scan.

    With ``require_simple`` the polynomial must be squarefree, i.e.
    gcd(f, f') constant; a repeated root raises ``ValueError``.  The field
    must be small enough to enumerate.
    """
    if ctx is None:
        ctx = f.ctx
    if ctx != f.ctx:
        raise FieldError("polynomial context mismatch")
    if f.is_zero():
        raise ValueError("zero polynomial has every element as a root")
    if ctx.q > ENUM_CAP:
        raise FieldError(f"field too large to scan (q={ctx.q} > {ENUM_CAP})")
    if require_simple:
        g = poly_gcd(f, poly_derivative(f))
        if g.degree > 0:
            raise ValueError("repeated root detected: gcd(f, f') is not constant")
    return _roots_scan(ctx, f)


def _roots_scan(ctx: FieldCtx, f: PolyGF) -> list[int]:
    try:
        import numpy as np
    except ImportError:  # pragma: no cover
        return [x for x in range(ctx.q) if f.evaluate(x) == 0]
    if ctx.q <= 512 or ctx.m == 1 and ctx.q <= 4096:
        return [x for x in range(ctx.q) if f.evaluate(x) == 0]
    p, m, q = ctx.p, ctx.m, ctx.q
    if m == 1:
        xs = np.arange(q, dtype=np.int64)
        acc = np.zeros(q, dtype=np.int64)
        for c in reversed(f.coeffs):
            acc = (acc * xs + c) % p
        return [int(x) for x in np.nonzero(acc == 0)[0]]
    # coefficient-matrix Horner over the extension field, chunked
    reduce_rows = np.array([list(r) for r in ctx._reduce_rows], dtype=np.int64)
    red = np.vstack([np.eye(m, dtype=np.int64), reduce_rows[: m - 1]])  # (2m-1) x m
    coeff_vecs = [np.array(ctx.unpack(c), dtype=np.int64) for c in f.coeffs]
    roots: list[int] = []
    chunk = 1 << 15
    powers = p ** np.arange(m, dtype=np.int64)
    for start in range(0, q, chunk):
        stop = min(start + chunk, q)
        vals = np.arange(start, stop, dtype=np.int64)
        digits = (vals[:, None] // powers[None, :]) % p  # N x m
        acc = np.zeros_like(digits)
        for cv in reversed(coeff_vecs):
            conv = np.einsum("ni,nj->nij", acc, digits)
            flat = np.zeros((digits.shape[0], 2 * m - 1), dtype=np.int64)
            for i in range(m):
                for j in range(m):
                    flat[:, i + j] += conv[:, i, j]
            acc = (flat % p) @ red % p
            acc[:, 0] += cv[0]
            acc[:, 1:] += cv[1:]
            acc %= p
        hit = np.nonzero(~acc.any(axis=1))[0]
        roots.extend(int(vals[i]) for i in hit)
    return roots
