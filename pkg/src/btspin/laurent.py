"""Integer Laurent polynomials in one variable ``t``.

Values are immutable.  A polynomial is stored densely as the exponent of its
lowest term plus a coefficient tuple whose first and last entries are
nonzero; the zero polynomial has an empty tuple.
"""

from __future__ import annotations

import math
from functools import reduce
from typing import Iterable, Mapping


def _trim(coeffs: list[int]) -> tuple[int, list[int]]:
    lo = 0
    while lo < len(coeffs) and coeffs[lo] == 0:
        lo += 1
    hi = len(coeffs)
    while hi > lo and coeffs[hi - 1] == 0:
        hi -= 1
    return lo, coeffs[lo:hi]


class LaurentPoly:
    __slots__ = ("low", "coeffs", "_hash")

    def __init__(self, coeffs: Iterable[int] = (), low: int = 0):
        shift, body = _trim([int(c) for c in coeffs])
        self.coeffs: tuple[int, ...] = tuple(body)
        self.low: int = low + shift if body else 0
        self._hash = None

    # -- construction -------------------------------------------------
    @classmethod
    def from_dict(cls, terms: Mapping[int, int]) -> "LaurentPoly":
        terms = {int(e): int(c) for e, c in terms.items() if c}
        if not terms:
            return cls()
        lo, hi = min(terms), max(terms)
        return cls([terms.get(e, 0) for e in range(lo, hi + 1)], lo)

    @classmethod
    def monomial(cls, exponent: int, coeff: int = 1) -> "LaurentPoly":
        return cls([coeff], exponent)

    @classmethod
    def const(cls, c: int) -> "LaurentPoly":
        return cls([c])

    # -- basic accessors ----------------------------------------------
    @property
    def coefficients(self) -> dict[int, int]:
        """Exponent -> nonzero coefficient."""
        return {self.low + i: c for i, c in enumerate(self.coeffs) if c}

    @property
    def high(self) -> int:
        return self.low + len(self.coeffs) - 1

    @property
    def span(self) -> int:
        """Difference between the top and bottom exponents (-1 for zero)."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_unit(self) -> bool:
        return len(self.coeffs) == 1 and abs(self.coeffs[0]) == 1

    def leading(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def content(self) -> int:
        return reduce(math.gcd, self.coeffs, 0)

    # -- arithmetic ---------------------------------------------------
    def __add__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        if self.is_zero():
            return other
        if other.is_zero():
            return self
        lo = min(self.low, other.low)
        hi = max(self.high, other.high)
        out = [0] * (hi - lo + 1)
        for i, c in enumerate(self.coeffs):
            out[self.low - lo + i] += c
        for i, c in enumerate(other.coeffs):
            out[other.low - lo + i] += c
        return LaurentPoly(out, lo)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly([-c for c in self.coeffs], self.low)

    def __sub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        if self.is_zero() or other.is_zero():
            return LaurentPoly()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return LaurentPoly(out, self.low + other.low)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            if not self.is_unit():
                raise ValueError("only units have Laurent inverses")
            return LaurentPoly([self.coeffs[0] ** (-k)], self.low * k)
        result = LaurentPoly.const(1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def shift(self, k: int) -> "LaurentPoly":
        """Multiply by ``t**k``."""
        if self.is_zero():
            return self
        return LaurentPoly(self.coeffs, self.low + k)

    def divexact(self, other: "LaurentPoly") -> "LaurentPoly":
        """Exact quotient; raises ``ArithmeticError`` if ``other`` does not divide."""
        other = _coerce(other)
        if other.is_zero():
            raise ZeroDivisionError("division by zero polynomial")
        if self.is_zero():
            return self
        q = _dense_divexact(list(self.coeffs), list(other.coeffs))
        return LaurentPoly(q, self.low - other.low)

    def __floordiv__(self, other):
        return self.divexact(other)

    def __call__(self, x):
        """Evaluate at ``x``; an integer ``x`` with negative exponents gives a Fraction."""
        if self.is_zero():
            return 0
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        if self.low >= 0:
            return acc * x ** self.low
        if isinstance(x, int):
            from fractions import Fraction
            return Fraction(acc, x ** (-self.low))
        return acc / x ** (-self.low)

    # -- normal form --------------------------------------------------
    def normalized(self) -> "LaurentPoly":
        """Representative up to units ``±t^k``: lowest exponent 0, leading coefficient positive."""
        if self.is_zero():
            return self
        sign = -1 if self.coeffs[-1] < 0 else 1
        return LaurentPoly([sign * c for c in self.coeffs], 0)

    def reversed(self) -> "LaurentPoly":
        """Substitute ``t -> 1/t``."""
        if self.is_zero():
            return self
        return LaurentPoly(self.coeffs[::-1], -self.high)

    def associated(self, other: "LaurentPoly") -> bool:
        return self.normalized() == _coerce(other).normalized()

    # -- comparison / display ------------------------------------------
    def __eq__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return self.low == other.low and self.coeffs == other.coeffs

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.low, self.coeffs))
        return self._hash

    def __bool__(self):
        return bool(self.coeffs)

    def __repr__(self):
        return f"LaurentPoly({self})"

    def __str__(self):
        if self.is_zero():
            return "0"
        parts = []
        for e in range(self.high, self.low - 1, -1):
            c = self.coeffs[e - self.low]
            if not c:
                continue
            mag = abs(c)
            if e == 0:
                body = str(mag)
            else:
                var = "t" if e == 1 else f"t^{e}"
                body = var if mag == 1 else f"{mag}*{var}"
            if not parts:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(("+ " if c > 0 else "- ") + body)
        return " ".join(parts)

    def to_json(self) -> dict[str, int]:
        return {str(e): c for e, c in sorted(self.coefficients.items())}

    @classmethod
    def from_json(cls, data: Mapping[str, int]) -> "LaurentPoly":
        return cls.from_dict({int(k): v for k, v in data.items()})


def _coerce(x):
    if isinstance(x, LaurentPoly):
        return x
    if isinstance(x, int):
        return LaurentPoly.const(x)
    return NotImplemented


T = LaurentPoly.monomial(1)
ONE = LaurentPoly.const(1)
ZERO = LaurentPoly()


# -- dense integer polynomial helpers (coefficient lists, low degree first) --

def _dense_divexact(num: list[int], den: list[int]) -> list[int]:
    num = num[:]
    dn = len(den) - 1
    lead = den[-1]
    if len(num) < len(den):
        raise ArithmeticError("divisor does not divide")
    q = [0] * (len(num) - dn)
    for k in range(len(num) - 1, dn - 1, -1):
        c = num[k]
        if c == 0:
            continue
        if c % lead:
            raise ArithmeticError("divisor does not divide")
        f = c // lead
        q[k - dn] = f
        for i, d in enumerate(den):
            num[k - dn + i] -= f * d
    if any(num[:dn]):
        raise ArithmeticError("divisor does not divide")
    return q


def _prem(a: list[int], b: list[int]) -> list[int]:
    """Pseudo-remainder of ``a`` by ``b`` (both trimmed, ``b`` nonzero)."""
    a = a[:]
    db = len(b) - 1
    lead = b[-1]
    while len(a) - 1 >= db and a:
        c = a[-1]
        shift = len(a) - 1 - db
        a = [lead * x for x in a]
        for i, d in enumerate(b):
            a[shift + i] -= c * d
        while a and a[-1] == 0:
            a.pop()
    return a


def _primitive(a: list[int]) -> list[int]:
    g = reduce(math.gcd, a, 0)
    if g == 0:
        return []
    if a[-1] < 0:
        g = -g
    return [x // g for x in a]


def poly_gcd(a: LaurentPoly, b: LaurentPoly) -> LaurentPoly:
    """Greatest common divisor in Z[t, 1/t], returned in normal form."""
    if a.is_zero():
        return b.normalized()
    if b.is_zero():
        return a.normalized()
    x, y = list(a.normalized().coeffs), list(b.normalized().coeffs)
    c = math.gcd(reduce(math.gcd, x, 0), reduce(math.gcd, y, 0))
    x, y = _primitive(x), _primitive(y)
    if len(x) < len(y):
        x, y = y, x
    while y:
        r = _prem(x, y)
        x, y = y, _primitive(r)
    return LaurentPoly([c * v for v in _primitive(x)]).normalized()


def gcd_all(polys: Iterable[LaurentPoly]) -> LaurentPoly:
    g = ZERO
    for p in polys:
        g = poly_gcd(g, p)
        if g.is_unit():
            break
    return g


def int_det(rows: list[list[int]]) -> int:
    """Determinant of a square integer matrix by fraction-free elimination."""
    n = len(rows)
    if n == 0:
        return 1
    m = [r[:] for r in rows]
    sign, prev = 1, 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for i in range(k + 1, n):
                if m[i][k]:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
        prev = m[k][k]
    return sign * m[n - 1][n - 1]


def poly_det(rows: list[list[LaurentPoly]]) -> LaurentPoly:
    """Determinant of a square matrix of Laurent polynomials (Bareiss)."""
    n = len(rows)
    if n == 0:
        return ONE
    m = [r[:] for r in rows]
    sign, prev = 1, ONE
    for k in range(n - 1):
        if m[k][k].is_zero():
            for i in range(k + 1, n):
                if not m[i][k].is_zero():
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return ZERO
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]).divexact(prev)
        prev = m[k][k]
    return m[n - 1][n - 1] * sign


def resultant(f: LaurentPoly, g: LaurentPoly) -> int:
    """Resultant of the polynomials obtained by shifting ``f`` and ``g`` to lowest exponent 0.

    Computed as the determinant of the Sylvester matrix.
    """
    a, b = list(f.normalized().coeffs), list(g.normalized().coeffs)
    if not a or not b:
        return 0
    da, db = len(a) - 1, len(b) - 1
    size = da + db
    if size == 0:
        return 1
    rows = []
    for i in range(db):
        row = [0] * size
        for j, c in enumerate(reversed(a)):
            row[i + j] = c
        rows.append(row)
    for i in range(da):
        row = [0] * size
        for j, c in enumerate(reversed(b)):
            row[i + j] = c
        rows.append(row)
    return int_det(rows)
