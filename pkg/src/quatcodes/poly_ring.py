"""Dense univariate polynomials over a residue ring H(K1)_m."""

from __future__ import annotations

from typing import Iterable, Optional, Sequence

from .errors import (
    DivisionByZeroPoly,
    ModulusMismatch,
    NonUnitLeadingCoefficient,
    ParseError,
    RootCheckFailed,
)
from .quat_core import parse_element
from .residue_ring import Modulus, Residue, inverse, is_unit, power, reduce


class Poly:
    """
    Coefficients are stored constant-first with trailing zeros stripped, so
    the zero polynomial has an empty coefficient tuple and degree None.
    """

    __slots__ = ("coeffs", "modulus")

    def __init__(self, coeffs: Iterable[Residue], modulus: Modulus):
        cs = list(coeffs)
        for c in cs:
            if c.modulus is not modulus and c.modulus != modulus:
                raise ModulusMismatch(f"coefficient {c!r} is not in {modulus}")
        while cs and cs[-1].is_zero():
            cs.pop()
        self.coeffs: tuple[Residue, ...] = tuple(cs)
        self.modulus = modulus

    @classmethod
    def from_elements(cls, elements: Iterable, modulus: Modulus) -> Poly:
        from .residue_ring import residue

        return cls((residue(e, modulus) for e in elements), modulus)

    @classmethod
    def monomial(cls, degree: int, coeff: Residue) -> Poly:
        M = coeff.modulus
        return cls([M.zero()] * degree + [coeff], M)

    @classmethod
    def x_pow_plus(cls, n: int, sign: int, modulus: Modulus) -> Poly:
        """x^n + sign."""
        from .residue_ring import from_integer

        return cls([from_integer(sign, modulus)] + [modulus.zero()] * (n - 1) + [modulus.one()], modulus)

    @property
    def degree(self) -> Optional[int]:
        return len(self.coeffs) - 1 if self.coeffs else None

    def is_zero(self) -> bool:
        return not self.coeffs

    def coeff(self, i: int) -> Residue:
        return self.coeffs[i] if i < len(self.coeffs) else self.modulus.zero()

    def lead(self) -> Residue:
        if not self.coeffs:
            raise DivisionByZeroPoly("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def padded(self, length: int) -> tuple[Residue, ...]:
        if len(self.coeffs) > length:
            raise ValueError(f"degree {self.degree} does not fit in {length} coefficients")
        return self.coeffs + (self.modulus.zero(),) * (length - len(self.coeffs))

    def _same(self, other: Poly) -> None:
        if other.modulus != self.modulus:
            raise ModulusMismatch(f"{self.modulus} vs {other.modulus}")

    def __add__(self, other: Poly) -> Poly:
        self._same(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return Poly((self.coeff(i) + other.coeff(i) for i in range(n)), self.modulus)

    def __neg__(self) -> Poly:
        return Poly((-c for c in self.coeffs), self.modulus)

    def __sub__(self, other: Poly) -> Poly:
        return self + (-other)

    def __mul__(self, other: Poly) -> Poly:
        self._same(other)
        if not self.coeffs or not other.coeffs:
            return Poly((), self.modulus)
        M = self.modulus
        out = [M.zero()] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a.is_zero():
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] = out[i + j] + a * b
        return Poly(out, M)

    def scale(self, c: Residue) -> Poly:
        return Poly((c * a for a in self.coeffs), self.modulus)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Poly):
            return NotImplemented
        return self.modulus == other.modulus and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __call__(self, at: Residue) -> Residue:
        return poly_eval(self, at)

    def __repr__(self) -> str:
        return f"Poly[{format_poly(self)}]"


def poly_divmod(a: Poly, b: Poly) -> tuple[Poly, Poly]:
    """Long division by b; b's leading coefficient must be a unit."""
    a._same(b)
    if b.is_zero():
        raise DivisionByZeroPoly("division by the zero polynomial")
    lead = b.lead()
    if not is_unit(lead):
        raise NonUnitLeadingCoefficient(f"leading coefficient {lead} is not a unit")
    lead_inv = inverse(lead)
    M = a.modulus
    rem = list(a.coeffs)
    db = len(b.coeffs) - 1
    if len(rem) <= db:
        return Poly((), M), a
    quot = [M.zero()] * (len(rem) - db)
    for k in range(len(rem) - 1, db - 1, -1):
        c = rem[k] * lead_inv
        if c.is_zero():
            continue
        quot[k - db] = c
        for j, bj in enumerate(b.coeffs):
            rem[k - db + j] = rem[k - db + j] - c * bj
    return Poly(quot, M), Poly(rem[:db], M)


def poly_eval(p: Poly, at: Residue) -> Residue:
    """Horner evaluation."""
    if at.modulus != p.modulus:
        raise ModulusMismatch(f"{at!r} is not in {p.modulus}")
    acc = p.modulus.zero()
    for c in reversed(p.coeffs):
        acc = acc * at + c
    return acc


def eval_coeffs(coeffs: Sequence[Residue], at: Residue) -> Residue:
    """Horner evaluation of a constant-first coefficient vector."""
    M = at.modulus
    acc = M.zero()
    for c in reversed(coeffs):
        if c.modulus is not M and c.modulus != M:
            raise ModulusMismatch(f"{c!r} is not in {M}")
        acc = acc * at + c
    return acc


def divide_by_linear(n: int, sign: int, root: Residue) -> Poly:
    """
    Quotient Q with (x - root) * Q = x^n + sign, by synthetic division.

    Q = sum_i root^(n-1-i) x^i. Raises RootCheckFailed when root^n != -sign.
    """
    if sign not in (1, -1):
        raise ValueError(f"sign must be +1 or -1, got {sign}")
    M = root.modulus
    s = M.one() if sign == 1 else -M.one()
    if power(root, n) + s != M.zero():
        raise RootCheckFailed(f"{root}^{n} + ({sign}) is not zero")
    # high to low: b_{n-1} = 1, b_{k-1} = root * b_k (inner coefficients of x^n + sign are 0)
    high_first = [M.one()]
    for _ in range(n - 1):
        high_first.append(root * high_first[-1])
    remainder = s + root * high_first[-1]
    if not remainder.is_zero():
        raise RootCheckFailed(f"synthetic division left remainder {remainder}")
    return Poly(reversed(high_first), M)


def linear_factor(root: Residue) -> Poly:
    """x - root."""
    return Poly([-root, root.modulus.one()], root.modulus)


# Polynomial text format: comma-separated coefficients, constant term first.
def format_coeffs(coeffs: Sequence[Residue]) -> str:
    return ",".join(str(c) for c in coeffs) if coeffs else "0"


def format_poly(p: Poly) -> str:
    return format_coeffs(p.coeffs)


def parse_coeffs(text: str, modulus: Modulus) -> list[Residue]:
    parts = [t for t in text.strip().split(",")]
    if not text.strip() or any(not t.strip() for t in parts):
        raise ParseError(f"bad polynomial literal {text!r}")
    out = []
    for t in parts:
        if "(" in t or ")" in t:
            raise ParseError(f"pair form is not allowed inside a polynomial literal: {t!r}")
        out.append(reduce(parse_element(t), modulus))
    return out


def parse_poly(text: str, modulus: Modulus) -> Poly:
    return Poly(parse_coeffs(text, modulus), modulus)
