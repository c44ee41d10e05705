"""Exact arithmetic in GF(p^k) for odd p with deterministic construction.

Elements are dense coefficient vectors in a fixed polynomial basis, low degree
first, every coefficient reduced mod p. For fixed (p, k) the defining modulus
is always the lexicographically smallest monic irreducible of degree k, with
coefficient lists compared low-to-high, so two runs (or two implementations)
agree on every serialized value.

The canonical order on elements compares coefficient tuples lexicographically
(constant coefficient first). The integer index of an element under that order
is sum(a_i * p^(k-1-i)); `FieldCtx.element_at` and `FieldCtx.element_index`
convert both ways. The solver, the sampler and the sqrt tie-break all use this
one order.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Iterator, Optional

from .errors import EvenCharacteristicError, NotPrimeError

SIZE_LIMIT = 1 << 20  # refuse fields larger than this; nothing here needs more
_TABLE_LIMIT = 256  # index tables are cached for fields up to this size


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


# Polynomials over F_p are coefficient lists, low degree first, fixed length
# where it matters. These helpers are only used during field construction.


def _poly_trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _poly_mulmod(a: list[int], b: list[int], f: list[int], p: int) -> list[int]:
    prod = [0] * (len(a) + len(b) - 1) if a and b else []
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                prod[i + j] = (prod[i + j] + ai * bj) % p
    return _poly_divmod_rem(prod, f, p)


def _poly_divmod_rem(a: list[int], f: list[int], p: int) -> list[int]:
    # f is monic; returns a mod f
    a = a[:]
    deg_f = len(f) - 1
    for d in range(len(a) - 1, deg_f - 1, -1):
        c = a[d]
        if c:
            a[d] = 0
            for i in range(deg_f):
                a[d - deg_f + i] = (a[d - deg_f + i] - c * f[i]) % p
    del a[deg_f:]
    while len(a) < deg_f:
        a.append(0)
    return a


def _poly_powmod_x(e: int, f: list[int], p: int) -> list[int]:
    """x^e mod f by square and multiply."""
    result = [1] + [0] * (len(f) - 2)
    base = ([0, 1] + [0] * (len(f) - 3))[: len(f) - 1]
    while e:
        if e & 1:
            result = _poly_mulmod(result, base, f, p)
        base = _poly_mulmod(base, base, f, p)
        e >>= 1
    return result


def _poly_gcd(a: list[int], b: list[int], p: int) -> list[int]:
    a, b = _poly_trim(a[:]), _poly_trim(b[:])
    while b:
        inv_lead = pow(b[-1], p - 2, p)
        monic_b = [(c * inv_lead) % p for c in b]
        deg_b = len(monic_b) - 1
        r = a[:]
        for d in range(len(r) - 1, deg_b - 1, -1):
            c = r[d]
            if c:
                r[d] = 0
                for i in range(deg_b):
                    r[d - deg_b + i] = (r[d - deg_b + i] - c * monic_b[i]) % p
        a, b = b, _poly_trim(r[:deg_b] if deg_b else [])
    return a


def _is_irreducible(f: list[int], p: int, k: int) -> bool:
    """Rabin test: x^(p^k) = x mod f, and gcd(x^(p^(k/l)) - x, f) = 1 for
    every prime l dividing k."""
    xq = _poly_powmod_x(p**k, f, p)
    x = ([0, 1] + [0] * (k - 2))[:k]
    if xq != x:
        return False
    for ell in _prime_factors(k):
        d = k // ell
        g = _poly_powmod_x(p**d, f, p)
        diff = [(gi - xi) % p for gi, xi in zip(g, x)]
        if len(_poly_gcd(diff, f, p)) - 1 > 0:
            return False
    return True


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


def _smallest_irreducible(p: int, k: int) -> tuple[int, ...]:
    if k == 1:
        return (0, 1)  # the polynomial x
    # Monic f = c_0 + c_1 x + ... + x^k; candidates in lex order of
    # (c_0, ..., c_{k-1}), c_0 compared first.
    counters = [0] * k
    while True:
        if counters[0] != 0:  # c_0 = 0 makes x a factor
            f = counters + [1]
            if _is_irreducible(f, p, k):
                return tuple(f)
        i = k - 1
        while i >= 0 and counters[i] == p - 1:
            counters[i] = 0
            i -= 1
        if i < 0:
            raise RuntimeError(f"no irreducible of degree {k} over GF({p})")
        counters[i] += 1


class FieldElement:
    """Element of GF(p^k): an immutable coefficient tuple plus its context."""

    __slots__ = ("ctx", "coeffs")

    def __init__(self, ctx: "FieldCtx", coeffs: tuple[int, ...]):
        self.ctx = ctx
        self.coeffs = coeffs

    def _coerce(self, other) -> Optional["FieldElement"]:
        if isinstance(other, FieldElement):
            if other.ctx is self.ctx or other.ctx == self.ctx:
                return other
            raise ValueError("elements belong to different fields")
        if isinstance(other, int):
            return self.ctx.el(other)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        p = self.ctx.p
        return FieldElement(
            self.ctx, tuple((a + b) % p for a, b in zip(self.coeffs, o.coeffs))
        )

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        p = self.ctx.p
        return FieldElement(
            self.ctx, tuple((a - b) % p for a, b in zip(self.coeffs, o.coeffs))
        )

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __neg__(self):
        p = self.ctx.p
        return FieldElement(self.ctx, tuple((-a) % p for a in self.coeffs))

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.ctx._mul(self, o)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, e: int):
        if not isinstance(e, int):
            return NotImplemented
        base = self
        if e < 0:
            base, e = self.inverse(), -e
        result = self.ctx.one
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def inverse(self) -> "FieldElement":
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero")
        return self.ctx._inverse(self)

    def sqrt(self) -> Optional["FieldElement"]:
        """Square root with a deterministic choice between the two roots, or
        None when the element is a nonsquare (the no-root signal)."""
        return self.ctx._sqrt(self)

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    def __eq__(self, other):
        if isinstance(other, FieldElement):
            return self.coeffs == other.coeffs and self.ctx == other.ctx
        if isinstance(other, int):
            return self == self.ctx.el(other)
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __bool__(self):
        return not self.is_zero()

    def __repr__(self):
        if self.ctx.k == 1:
            return f"{self.coeffs[0]}#GF({self.ctx.p})"
        return f"{list(self.coeffs)}#GF({self.ctx.p}^{self.ctx.k})"

    def to_json(self) -> list[int]:
        return list(self.coeffs)


class FieldCtx:
    """Fixed field GF(p^k) with its deterministic modulus.

    Use `field_make`, not the constructor; `field_make` caches one context
    per (p, k) so element contexts can be compared by identity.
    """

    __slots__ = (
        "p",
        "k",
        "modulus",
        "size",
        "zero",
        "one",
        "_reductions",
        "_nonresidue",
        "_tables",
    )

    def __init__(self, p: int, k: int, modulus: tuple[int, ...]):
        self.p = p
        self.k = k
        self.modulus = modulus
        self.size = p**k
        self.zero = FieldElement(self, (0,) * k)
        self.one = FieldElement(self, (1,) + (0,) * (k - 1))
        # x^(k+j) mod modulus for j in [0, k-1), used to fold products back
        reds = []
        if k > 1:
            cur = [(-c) % p for c in modulus[:k]]  # x^k mod f
            reds.append(tuple(cur))
            for _ in range(k - 2):
                shifted = [0] + cur[:-1]
                top = cur[-1]
                if top:
                    for i in range(k):
                        shifted[i] = (shifted[i] - top * modulus[i]) % p
                cur = shifted
                reds.append(tuple(cur))
        self._reductions = tuple(reds)
        self._nonresidue = None
        self._tables = None

    # --- construction helpers ---

    def el(self, value) -> FieldElement:
        """Make an element from an int (the prime-subfield embedding) or a
        coefficient list, low degree first."""
        if isinstance(value, FieldElement):
            if value.ctx == self:
                return value
            raise ValueError("element from a different field")
        if isinstance(value, int):
            return FieldElement(self, (value % self.p,) + (0,) * (self.k - 1))
        coeffs = tuple(int(c) % self.p for c in value)
        if len(coeffs) > self.k:
            raise ValueError(f"coefficient list longer than degree {self.k}")
        return FieldElement(self, coeffs + (0,) * (self.k - len(coeffs)))

    def element_index(self, a: FieldElement) -> int:
        """Position of a in the canonical order (coefficient-tuple lex)."""
        acc = 0
        for c in a.coeffs:
            acc = acc * self.p + c
        return acc

    def element_at(self, index: int) -> FieldElement:
        if not 0 <= index < self.size:
            raise ValueError(f"index {index} out of range for size {self.size}")
        digits = []
        for _ in range(self.k):
            digits.append(index % self.p)
            index //= self.p
        return FieldElement(self, tuple(reversed(digits)))

    def elements(self) -> Iterator[FieldElement]:
        """All elements in canonical order."""
        for j in range(self.size):
            yield self.element_at(j)

    # --- arithmetic kernels ---

    def _mul(self, a: FieldElement, b: FieldElement) -> FieldElement:
        p, k = self.p, self.k
        if k == 1:
            return FieldElement(self, ((a.coeffs[0] * b.coeffs[0]) % p,))
        ac, bc = a.coeffs, b.coeffs
        prod = [0] * (2 * k - 1)
        for i, ai in enumerate(ac):
            if ai:
                for j, bj in enumerate(bc):
                    prod[i + j] = (prod[i + j] + ai * bj) % p
        out = prod[:k]
        for d in range(k, 2 * k - 1):
            c = prod[d]
            if c:
                red = self._reductions[d - k]
                for i in range(k):
                    out[i] = (out[i] + c * red[i]) % p
        return FieldElement(self, tuple(out))

    def _inverse(self, a: FieldElement) -> FieldElement:
        p, k = self.p, self.k
        if k == 1:
            return FieldElement(self, (pow(a.coeffs[0], p - 2, p),))
        # extended Euclid in F_p[x] against the (irreducible) modulus
        r0, r1 = list(self.modulus), _poly_trim(list(a.coeffs))
        t0, t1 = [], [1]
        while len(r1) > 1:
            inv_lead = pow(r1[-1], p - 2, p)
            q = [0] * (len(r0) - len(r1) + 1)
            rem = r0[:]
            for d in range(len(rem) - 1, len(r1) - 2, -1):
                c = (rem[d] * inv_lead) % p
                if c:
                    q[d - len(r1) + 1] = c
                    for i, ri in enumerate(r1):
                        rem[d - len(r1) + 1 + i] = (rem[d - len(r1) + 1 + i] - c * ri) % p
            rem = _poly_trim(rem)
            qt1 = [0] * (len(q) + len(t1) - 1) if q and t1 else []
            for i, qi in enumerate(q):
                if qi:
                    for j, tj in enumerate(t1):
                        qt1[i + j] = (qt1[i + j] + qi * tj) % p
            new_t = [
                ((t0[i] if i < len(t0) else 0) - (qt1[i] if i < len(qt1) else 0)) % p
                for i in range(max(len(t0), len(qt1), 1))
            ]
            r0, r1 = r1, rem
            t0, t1 = t1, _poly_trim(new_t)
        if not r1:
            raise ZeroDivisionError("inverse of zero")
        scale = pow(r1[0], p - 2, p)
        coeffs = [(c * scale) % p for c in t1]
        return self.el(coeffs)

    def _sqrt(self, a: FieldElement) -> Optional[FieldElement]:
        if a.is_zero():
            return self.zero
        q = self.size
        if a ** ((q - 1) // 2) != self.one:
            return None
        if q % 4 == 3:
            r = a ** ((q + 1) // 4)
        else:
            r = self._tonelli_shanks(a)
        neg = -r
        return r if r.coeffs <= neg.coeffs else neg

    def _tonelli_shanks(self, a: FieldElement) -> FieldElement:
        q = self.size
        qq, s = q - 1, 0
        while qq % 2 == 0:
            qq //= 2
            s += 1
        z = self._find_nonresidue()
        m, c, t, r = s, z**qq, a**qq, a ** ((qq + 1) // 2)
        while t != self.one:
            i, t2 = 0, t
            while t2 != self.one:
                t2 = t2 * t2
                i += 1
            b = c ** (1 << (m - i - 1))
            r = r * b
            c = b * b
            t = t * c
            m = i
        return r

    def _find_nonresidue(self) -> FieldElement:
        if self._nonresidue is None:
            exp = (self.size - 1) // 2
            for j in range(1, self.size):
                z = self.element_at(j)
                if z**exp != self.one:
                    self._nonresidue = z
                    break
            else:
                raise RuntimeError("no nonresidue found; field of size 1?")
        return self._nonresidue

    # --- index tables for the linear-algebra fast path ---

    def tables(self):
        """(add, mul, neg, inv) tables over canonical indices, or None when
        the field is too large to cache. inv[0] is -1."""
        if self.size > _TABLE_LIMIT:
            return None
        if self._tables is None:
            els = list(self.elements())
            idx = self.element_index
            add = [[idx(a + b) for b in els] for a in els]
            mul = [[idx(a * b) for b in els] for a in els]
            neg = [idx(-a) for a in els]
            inv = [-1] + [idx(a.inverse()) for a in els[1:]]
            self._tables = (add, mul, neg, inv)
        return self._tables

    # --- identity plumbing ---

    def __eq__(self, other):
        if isinstance(other, FieldCtx):
            return (self.p, self.k, self.modulus) == (other.p, other.k, other.modulus)
        return NotImplemented

    def __hash__(self):
        return hash((self.p, self.k, self.modulus))

    def __repr__(self):
        if self.k == 1:
            return f"GF({self.p})"
        return f"GF({self.p}^{self.k})"

    def to_json(self) -> dict:
        return {"p": self.p, "k": self.k, "modulus": list(self.modulus)}


@lru_cache(maxsize=None)
def field_make(p: int, k: int = 1) -> FieldCtx:
    """The deterministic context for GF(p^k).

    p must be an odd prime and p^k at most 2^20 (documented implementation
    limit; the search spaces used here stay far below it).
    """
    if not isinstance(p, int) or not isinstance(k, int):
        raise TypeError("p and k must be integers")
    if p == 2:
        raise EvenCharacteristicError("characteristic 2 is not supported")
    if p < 2 or not _is_prime(p):
        raise NotPrimeError(f"{p} is not prime")
    if k < 1:
        raise ValueError("extension degree must be at least 1")
    if p**k > SIZE_LIMIT:
        raise ValueError(f"field size {p}^{k} exceeds the limit {SIZE_LIMIT}")
    return FieldCtx(p, k, _smallest_irreducible(p, k))
