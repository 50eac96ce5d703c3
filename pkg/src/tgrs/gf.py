"""Exact arithmetic in GF(p^m).

Elements are represented canonically by their coefficient vector in the
polynomial basis, packed into a single integer: the element with
coefficients (c0, c1, ..., c_{m-1}), constant term first, is the integer
c0 + c1*p + ... + c_{m-1}*p^(m-1).  Packed integers run over 0 .. q-1 with
q = p^m, and all ordering conventions (element enumeration, canonical
square roots, default moduli) refer to this packing.

A :class:`FieldCtx` carries the modulus and exposes arithmetic directly on
packed integers, which is what the linear-algebra and enumeration kernels
use.  :class:`Fe` is a thin immutable wrapper with operator overloading for
formula-heavy callers.

The modulus, when not supplied, is the monic irreducible polynomial of
degree m over GF(p) with the smallest packed value, found by deterministic
search, so the same (p, m) always denotes a bit-identical field.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence

DEFAULT_MODULUS_CAP = 1 << 20  # largest q for which a default modulus is searched
ENUM_CAP = 1 << 20  # largest q for which full-field enumeration is allowed
TABLE_CAP = 2048  # largest q for which q x q scalar tables may be built

_MR_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


class FieldError(ValueError):
    """Invalid field construction or misuse of field arithmetic."""


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin, valid for all n below 3.3e24."""
    if n < 2:
        return False
    for small in _MR_WITNESSES:
        if n % small == 0:
            return n == small
    d = n - 1
    r = 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for a in _MR_WITNESSES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(r - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


# ----------------------------------------------------------------------
# Dense polynomial helpers over GF(p), used for modulus validation.
# Coefficients are lists of ints, constant term first.
# ----------------------------------------------------------------------

def _ptrim(f: list[int]) -> list[int]:
    while len(f) > 1 and f[-1] == 0:
        f.pop()
    return f


def _pmul(f: list[int], g: list[int], p: int) -> list[int]:
    out = [0] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        if a:
            for j, b in enumerate(g):
                out[i + j] = (out[i + j] + a * b) % p
    return _ptrim(out)


def _pmod(f: list[int], mod: list[int], p: int) -> list[int]:
    f = f[:]
    dm = len(mod) - 1
    inv_lead = pow(mod[-1], p - 2, p)
    for d in range(len(f) - 1, dm - 1, -1):
        c = f[d]
        if c:
            factor = c * inv_lead % p
            for i in range(dm + 1):
                f[d - dm + i] = (f[d - dm + i] - factor * mod[i]) % p
    del f[dm:]
    return _ptrim(f if f else [0])


def _ppowmod(f: list[int], e: int, mod: list[int], p: int) -> list[int]:
    result = [1]
    base = _pmod(f, mod, p)
    while e:
        if e & 1:
            result = _pmod(_pmul(result, base, p), mod, p)
        base = _pmod(_pmul(base, base, p), mod, p)
        e >>= 1
    return result


def _pgcd(f: list[int], g: list[int], p: int) -> list[int]:
    f, g = _ptrim(f[:]), _ptrim(g[:])
    while g != [0]:
        f, g = g, _pmod(f, g, p)
    if f != [0]:
        inv = pow(f[-1], p - 2, p)
        f = [c * inv % p for c in f]
    return f


def _prime_factors(n: int) -> list[int]:
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def _frobenius_iterate(base: list[int], times: int, mod: list[int], p: int) -> list[int]:
    out = base
    for _ in range(times):
        out = _ppowmod(out, p, mod, p)
    return out


def _is_irreducible(mod: Sequence[int], p: int) -> bool:
    """Rabin irreducibility test for a monic polynomial over GF(p)."""
    m = len(mod) - 1
    if m < 1:
        return False
    modl = list(mod)
    x = [0, 1]
    xq = _frobenius_iterate(x, m, modl, p)
    if _pmod(_poly_sub(xq, x, p), modl, p) != [0]:
        return False
    for r in _prime_factors(m):
        xe = _frobenius_iterate(x, m // r, modl, p)
        diff = _poly_sub(xe, x, p)
        if _pgcd(diff, modl, p) != [1]:
            return False
    return True


def _poly_sub(f: list[int], g: list[int], p: int) -> list[int]:
    size = max(len(f), len(g))
    out = [0] * size
    for i, c in enumerate(f):
        out[i] = c % p
    for i, c in enumerate(g):
        out[i] = (out[i] - c) % p
    return _ptrim(out)


@lru_cache(maxsize=None)
def default_modulus(p: int, m: int) -> tuple[int, ...]:
    """The monic irreducible of degree m over GF(p) with least packed value."""
    if m == 1:
        return (0, 1)
    if p**m > DEFAULT_MODULUS_CAP:
        raise FieldError(
            f"no built-in modulus for p={p}, m={m}: field order exceeds {DEFAULT_MODULUS_CAP}"
        )
    for low in range(p**m):
        coeffs = []
        x = low
        for _ in range(m):
            coeffs.append(x % p)
            x //= p
        cand = coeffs + [1]
        if _is_irreducible(cand, p):
            return tuple(cand)
    raise FieldError(f"no irreducible polynomial found for p={p}, m={m}")


class FieldCtx:
    """A finite field GF(p^m) with a fixed monic irreducible modulus.

    Arithmetic methods operate on packed integers in [0, q).  Contexts are
    immutable after construction and hashable; two contexts compare equal
    iff they share (p, m, modulus).
    """

    __slots__ = (
        "p", "m", "q", "modulus", "_reduce_rows", "_mul_tab", "_add_tab",
        "_sqrt_nonresidue",
    )

    def __init__(self, p: int, m: int = 1, modulus: Sequence[int] | None = None):
        if not is_prime(p):
            raise FieldError(f"characteristic {p} is not prime")
        if m < 1:
            raise FieldError(f"extension degree must be >= 1, got {m}")
        if modulus is None:
            modulus = default_modulus(p, m)
        modulus = tuple(int(c) % p for c in modulus)
        if len(modulus) != m + 1:
            raise FieldError(f"modulus must have degree {m}, got degree {len(modulus) - 1}")
        if modulus[-1] != 1:
            raise FieldError("modulus must be monic")
        if m > 1 and not _is_irreducible(modulus, p):
            raise FieldError(f"modulus {list(modulus)} is reducible over GF({p})")
        self.p = p
        self.m = m
        self.q = p**m
        self.modulus = modulus
        self._reduce_rows = self._build_reduce_rows() if m > 1 else []
        self._mul_tab: list | None = None
        self._add_tab: list | None = None
        self._sqrt_nonresidue: int | None = None

    def _build_reduce_rows(self) -> list[tuple[int, ...]]:
        """Coefficient rows of x^(m+i) mod modulus for i = 0 .. m-2."""
        p, m = self.p, self.m
        rows: list[tuple[int, ...]] = []
        cur = [(-c) % p for c in self.modulus[:-1]]  # x^m
        for _ in range(m - 1):
            rows.append(tuple(cur))
            lead = cur[-1]
            cur = [0] + cur[:-1]
            if lead:
                first = rows[0]
                cur = [(a + lead * b) % p for a, b in zip(cur, first)]
        rows.append(tuple(cur))
        return rows

    # -- identity ------------------------------------------------------------

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, FieldCtx)
            and self.p == other.p
            and self.m == other.m
            and self.modulus == other.modulus
        )

    def __hash__(self) -> int:
        return hash((self.p, self.m, self.modulus))

    def __repr__(self) -> str:
        return f"GF({self.p})" if self.m == 1 else f"GF({self.p}^{self.m})"

    # -- packing -------------------------------------------------------------

    def pack(self, coeffs: Sequence[int]) -> int:
        if len(coeffs) != self.m:
            raise FieldError(f"expected {self.m} coefficients, got {len(coeffs)}")
        val = 0
        for c in reversed(coeffs):
            val = val * self.p + (int(c) % self.p)
        return val

    def unpack(self, a: int) -> tuple[int, ...]:
        if not 0 <= a < self.q:
            raise FieldError(f"packed value {a} out of range for {self!r}")
        out = []
        for _ in range(self.m):
            out.append(a % self.p)
            a //= self.p
        return tuple(out)

    def scalar(self, c: int) -> int:
        """The prime-subfield element c * 1, as a packed value."""
        return c % self.p

    # -- arithmetic on packed values -------------------------------------------

    def add(self, a: int, b: int) -> int:
        if self.m == 1:
            return (a + b) % self.p
        t = self._add_tab
        if t is not None:
            return t[a][b]
        p = self.p
        out = 0
        mult = 1
        while a or b:
            out += (a % p + b % p) % p * mult
            a //= p
            b //= p
            mult *= p
        return out

    def neg(self, a: int) -> int:
        if self.m == 1:
            return (-a) % self.p
        p = self.p
        out = 0
        mult = 1
        while a:
            out += (-(a % p)) % p * mult
            a //= p
            mult *= p
        return out

    def sub(self, a: int, b: int) -> int:
        if self.m == 1:
            return (a - b) % self.p
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        if self.m == 1:
            return a * b % self.p
        t = self._mul_tab
        if t is not None:
            return t[a][b]
        return self._mul_slow(a, b)

    def _mul_slow(self, a: int, b: int) -> int:
        p, m = self.p, self.m
        ca = self.unpack(a)
        cb = self.unpack(b)
        prod = [0] * (2 * m - 1)
        for i, x in enumerate(ca):
            if x:
                for j, y in enumerate(cb):
                    prod[i + j] = (prod[i + j] + x * y) % p
        out = list(prod[:m])
        for i in range(m, 2 * m - 1):
            c = prod[i]
            if c:
                row = self._reduce_rows[i - m]
                for j in range(m):
                    out[j] = (out[j] + c * row[j]) % p
        return self.pack(out)

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError(f"zero has no inverse in {self!r}")
        if self.m == 1:
            return pow(a, self.p - 2, self.p)
        return self.pow(a, self.q - 2)

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def pow(self, a: int, e: int) -> int:
        """a**e on packed values, with 0**0 == 1; negative e inverts first."""
        if e < 0:
            return self.pow(self.inv(a), -e)
        if self.m == 1:
            return pow(a, e, self.p)
        result = 1
        base = a
        while e:
            if e & 1:
                result = self.mul(result, base)
            base = self.mul(base, base)
            e >>= 1
        return result

    def sqrt(self, a: int) -> int | None:
        """A canonical square root of a, or None for a non-residue.

        In characteristic 2 every element has the unique root a^(2^(m-1)).
        In odd characteristic the returned root is the one with the smaller
        packed value; exactly (q+1)/2 elements (zero included) have roots.
        """
        if a == 0:
            return 0
        if self.p == 2:
            return self.pow(a, 1 << (self.m - 1))
        q = self.q
        if self.pow(a, (q - 1) // 2) != 1:
            return None
        r = self._tonelli_shanks(a)
        return min(r, self.neg(r))

    def _nonresidue(self) -> int:
        z = self._sqrt_nonresidue
        if z is None:
            half = (self.q - 1) // 2
            z = next(c for c in range(2, self.q) if self.pow(c, half) != 1)
            self._sqrt_nonresidue = z
        return z

    def _tonelli_shanks(self, a: int) -> int:
        q = self.q
        s = 0
        d = q - 1
        while d % 2 == 0:
            d //= 2
            s += 1
        if s == 1:
            return self.pow(a, (q + 1) // 4)
        c = self.pow(self._nonresidue(), d)
        x = self.pow(a, (d + 1) // 2)
        t = self.pow(a, d)
        mexp = s
        while t != 1:
            t2 = t
            i = 0
            while t2 != 1:
                t2 = self.mul(t2, t2)
                i += 1
            b = c
            for _ in range(mexp - i - 1):
                b = self.mul(b, b)
            x = self.mul(x, b)
            c = self.mul(b, b)
            t = self.mul(t, c)
            mexp = i
        return x

    # -- enumeration and subfields ----------------------------------------------

    def elements(self) -> list[Fe]:
        """All q elements in packed order."""
        if self.q > ENUM_CAP:
            raise FieldError(f"field too large to enumerate (q={self.q} > {ENUM_CAP})")
        return [Fe(self, v) for v in range(self.q)]

    def subfield(self, s: int) -> list[Fe]:
        """The p^s elements fixed by x -> x^(p^s), in packed order.

        Computed as the kernel of (Frobenius^s - identity) on the coefficient
        space over GF(p), so no full-field scan is required.
        """
        if self.m % s != 0:
            raise FieldError(f"subfield degree {s} does not divide {self.m}")
        p, m = self.p, self.m
        if s == m:
            return self.elements()
        # columns of Frobenius^s: images of the basis monomials x^j
        cols = []
        for j in range(m):
            basis_el = self.pack([0] * j + [1] + [0] * (m - 1 - j))
            cols.append(list(self.unpack(self.pow(basis_el, p**s))))
        # system rows: (F^s - I) applied to coefficient vectors
        sys_rows = [[(cols[j][i] - (1 if i == j else 0)) % p for j in range(m)] for i in range(m)]
        basis = _kernel_mod_p(sys_rows, m, p)
        out = set()
        for idx in range(p ** len(basis)):
            x = idx
            vec = [0] * m
            for b in basis:
                cmult = x % p
                x //= p
                if cmult:
                    for i in range(m):
                        vec[i] = (vec[i] + cmult * b[i]) % p
            out.add(self.pack(vec))
        vals = sorted(out)
        if len(vals) != p**s:
            raise FieldError("subfield computation produced wrong cardinality")
        return [Fe(self, v) for v in vals]

    def in_subfield(self, a: int, s: int) -> bool:
        if self.m % s != 0:
            raise FieldError(f"subfield degree {s} does not divide {self.m}")
        return self.pow(a, self.p**s) == a

    # -- scalar tables ------------------------------------------------------------

    def enable_tables(self) -> None:
        """Build q x q add/mul lookup tables (no-op for prime fields or above cap)."""
        if self.q > TABLE_CAP or self._mul_tab is not None or self.m == 1:
            return
        self._add_tab = [[self.add(a, b) for b in range(self.q)] for a in range(self.q)]
        self._mul_tab = [[self._mul_slow(a, b) for b in range(self.q)] for a in range(self.q)]

    # -- element construction -------------------------------------------------------

    def fe(self, value: int | Sequence[int]) -> Fe:
        """Wrap a packed integer, or a coefficient sequence, as an element."""
        if isinstance(value, int):
            if not 0 <= value < self.q:
                raise FieldError(f"packed value {value} out of range for {self!r}")
            return Fe(self, value)
        return Fe(self, self.pack(value))

    @property
    def zero(self) -> Fe:
        return Fe(self, 0)

    @property
    def one(self) -> Fe:
        return Fe(self, 1)


def _kernel_mod_p(rows: list[list[int]], ncols: int, p: int) -> list[list[int]]:
    """Basis of the right kernel of a small integer matrix over GF(p)."""
    mat = [row[:] for row in rows]
    nrows = len(mat)
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, nrows) if mat[i][c] % p), None)
        if piv is None:
            continue
        mat[r], mat[piv] = mat[piv], mat[r]
        inv = pow(mat[r][c], p - 2, p)
        mat[r] = [x * inv % p for x in mat[r]]
        for i in range(nrows):
            if i != r and mat[i][c] % p:
                f = mat[i][c] % p
                mat[i] = [(x - f * y) % p for x, y in zip(mat[i], mat[r])]
        pivots.append(c)
        r += 1
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fcol in free:
        vec = [0] * ncols
        vec[fcol] = 1
        for row, pc in zip(mat, pivots):
            vec[pc] = (-row[fcol]) % p
        basis.append(vec)
    return basis


@dataclass(frozen=True, slots=True)
class Fe:
    """A field element bound to its context.

    Wraps the canonical packed-integer representation; arithmetic between
    elements of different contexts raises :class:`FieldError`.
    """

    ctx: FieldCtx
    value: int

    def _other(self, other: Fe) -> int:
        if not isinstance(other, Fe):
            raise TypeError(f"cannot combine Fe with {type(other).__name__}")
        if other.ctx != self.ctx:
            raise FieldError("field context mismatch")
        return other.value

    def __add__(self, other: Fe) -> Fe:
        return Fe(self.ctx, self.ctx.add(self.value, self._other(other)))

    def __sub__(self, other: Fe) -> Fe:
        return Fe(self.ctx, self.ctx.sub(self.value, self._other(other)))

    def __mul__(self, other: Fe) -> Fe:
        return Fe(self.ctx, self.ctx.mul(self.value, self._other(other)))

    def __truediv__(self, other: Fe) -> Fe:
        return Fe(self.ctx, self.ctx.div(self.value, self._other(other)))

    def __neg__(self) -> Fe:
        return Fe(self.ctx, self.ctx.neg(self.value))

    def __pow__(self, e: int) -> Fe:
        return Fe(self.ctx, self.ctx.pow(self.value, e))

    def inverse(self) -> Fe:
        return Fe(self.ctx, self.ctx.inv(self.value))

    def sqrt(self) -> Fe | None:
        r = self.ctx.sqrt(self.value)
        return None if r is None else Fe(self.ctx, r)

    @property
    def coeffs(self) -> tuple[int, ...]:
        return self.ctx.unpack(self.value)

    def __bool__(self) -> bool:
        return self.value != 0

    def __int__(self) -> int:
        return self.value

    def __repr__(self) -> str:
        return f"Fe({self.value} in {self.ctx!r})"


def field(p: int, m: int = 1, modulus: Sequence[int] | None = None) -> FieldCtx:
    """Create the field GF(p^m).

    With ``modulus`` omitted the deterministic default for (p, m) is used,
    available while p^m stays within the built-in search cap.
    """
    return FieldCtx(p, m, modulus)
