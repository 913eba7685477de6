"""
Exact arithmetic for Lipschitz (integer) quaternions and the commutative
subring H(K1) = {a + b*w : a, b in Z}, where w = i + j + k and w^2 = -3.

Every arithmetic result is checked against the signed 64-bit range; leaving
it raises OverflowError instead of silently producing a huge integer.
"""

from __future__ import annotations

import math
import re
from typing import NamedTuple, Optional

from .errors import ParseError

INT64_MIN = -(1 << 63)
INT64_MAX = (1 << 63) - 1


def _checked(value: int) -> int:
    if value < INT64_MIN or value > INT64_MAX:
        raise OverflowError(f"integer {value} leaves the signed 64-bit range")
    return value


class QuaternionInt(NamedTuple):
    """a0 + a1*i + a2*j + a3*k with integer components."""

    a0: int
    a1: int
    a2: int
    a3: int

    def __mul__(self, other):  # type: ignore[override]
        if not isinstance(other, QuaternionInt):
            return NotImplemented
        return hamilton_mul(self, other)

    def __add__(self, other):  # type: ignore[override]
        if not isinstance(other, QuaternionInt):
            return NotImplemented
        return QuaternionInt(*(_checked(x + y) for x, y in zip(self, other)))

    def __neg__(self) -> QuaternionInt:
        return QuaternionInt(*(_checked(-x) for x in self))

    def __sub__(self, other: QuaternionInt) -> QuaternionInt:
        return self + (-other)

    __rmul__ = None  # type: ignore[assignment]

    @property
    def complete_part(self) -> int:
        return self.a0

    @property
    def vector_part(self) -> tuple[int, int, int]:
        return (self.a1, self.a2, self.a3)


ONE_Q = QuaternionInt(1, 0, 0, 0)


def hamilton_mul(q: QuaternionInt, r: QuaternionInt) -> QuaternionInt:
    """Hamilton product with i^2 = j^2 = k^2 = -1, ij = k, jk = i, ki = j."""
    a0, a1, a2, a3 = q
    b0, b1, b2, b3 = r
    return QuaternionInt(
        _checked(a0 * b0 - a1 * b1 - a2 * b2 - a3 * b3),
        _checked(a0 * b1 + a1 * b0 + a2 * b3 - a3 * b2),
        _checked(a0 * b2 - a1 * b3 + a2 * b0 + a3 * b1),
        _checked(a0 * b3 + a1 * b2 - a2 * b1 + a3 * b0),
    )


def conjugate(q: QuaternionInt) -> QuaternionInt:
    return QuaternionInt(q.a0, -q.a1, -q.a2, -q.a3)


def norm(q: QuaternionInt) -> int:
    return _checked(q.a0 * q.a0 + q.a1 * q.a1 + q.a2 * q.a2 + q.a3 * q.a3)


class K1Element(NamedTuple):
    """a + b*(i + j + k). Multiplication in this subring is commutative."""

    a: int
    b: int

    def __add__(self, other):  # type: ignore[override]
        if not isinstance(other, K1Element):
            return NotImplemented
        return _k1_checked(self[0] + other[0], self[1] + other[1])

    def __sub__(self, other: K1Element) -> K1Element:
        return _k1_checked(self[0] - other[0], self[1] - other[1])

    def __neg__(self) -> K1Element:
        return K1Element(-self.a, -self.b)

    def __mul__(self, other):  # type: ignore[override]
        if not isinstance(other, K1Element):
            return NotImplemented
        a, b = self
        c, d = other
        return _k1_checked(a * c - 3 * b * d, a * d + b * c)

    __rmul__ = None  # type: ignore[assignment]

    def conjugate(self) -> K1Element:
        return K1Element(self.a, -self.b)

    def norm(self) -> int:
        return _checked(self.a * self.a + 3 * self.b * self.b)

    def embed(self) -> QuaternionInt:
        return QuaternionInt(self.a, self.b, self.b, self.b)

    def __str__(self) -> str:
        return format_element(self)


def _k1_checked(a: int, b: int) -> K1Element:
    if INT64_MIN <= a <= INT64_MAX and INT64_MIN <= b <= INT64_MAX:
        return K1Element(a, b)
    raise OverflowError(f"({a}, {b}) leaves the signed 64-bit range")


K1_ZERO = K1Element(0, 0)
K1_ONE = K1Element(1, 0)


def from_quaternion(q: QuaternionInt) -> K1Element:
    if not q.a1 == q.a2 == q.a3:
        raise ValueError(f"{q} does not lie in H(K1): vector components differ")
    return K1Element(q.a0, q.a1)


def qm_weight(x: K1Element) -> int:
    """Quaternion Mannheim weight |a| + 3|b|."""
    return abs(x.a) + 3 * abs(x.b)


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0 or n % 3 == 0:
        return False
    f = 5
    while f * f <= n:
        if n % f == 0 or n % (f + 2) == 0:
            return False
        f += 6
    return True


def is_k1_prime(x: K1Element) -> bool:
    return is_prime(x.norm())


def represent_prime(p: int) -> Optional[K1Element]:
    """
    Return (a, b) with a^2 + 3b^2 = p, b > 0 and a > 0 (smallest a first), or None.

    p = 3 is the one case needing a = 0; it is returned as (0, 1) so callers
    can see it is representable, and rejected later when a modulus is built.
    """
    if p < 2:
        raise ValueError("p must be at least 2")
    best = None
    b = 1
    while 3 * b * b <= p:
        rest = p - 3 * b * b
        a = math.isqrt(rest)
        if a * a == rest and (a > 0 or p == 3) and (best is None or a < best.a):
            best = K1Element(a, b)
        b += 1
    return best


# Element text format: "a", "a+bw", "a-bw"; parser also takes "(a,b)" and "a,b".
_ELEMENT_RE = re.compile(
    r"^(?:(?P<a>[+-]?\d+)(?P<b>[+-]\d*)w|(?P<bonly>[+-]?\d*)w|(?P<aonly>[+-]?\d+))$"
)


def format_element(x: K1Element) -> str:
    if x.b == 0:
        return str(x.a)
    return f"{x.a}{x.b:+d}w"


def parse_element(text: str) -> K1Element:
    s = text.strip().replace(" ", "")
    if s.startswith("(") and s.endswith(")"):
        s = s[1:-1]
    if "," in s:
        parts = s.split(",")
        if len(parts) != 2:
            raise ParseError(f"bad element literal {text!r}")
        second = parts[1][:-1] if parts[1].endswith("w") else parts[1]
        try:
            return K1Element(int(parts[0]), int(second))
        except ValueError:
            raise ParseError(f"bad element literal {text!r}") from None
    m = _ELEMENT_RE.match(s)
    if not s or m is None:
        raise ParseError(f"bad element literal {text!r}")
    a_txt = m.group("a") or m.group("aonly") or "0"
    b_txt = m.group("b") if m.group("a") is not None else m.group("bonly")
    if b_txt is None:
        b = 0
    elif b_txt in ("", "+"):
        b = 1
    elif b_txt == "-":
        b = -1
    else:
        b = int(b_txt)
    return K1Element(int(a_txt), b)
