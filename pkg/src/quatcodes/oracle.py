"""
Brute-force reference implementations.

These share only K1Element arithmetic and reduce() with the fast paths. They
use successive multiplication instead of square-and-multiply, linear scans
instead of factorization, and exhaustive trial instead of table lookup.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

from .decoder import DEFAULT_ERROR_SET, DecodeResult, Status
from .errors import GuardExceeded, InternalContradiction, LengthMismatch, NotAUnit, NotFound
from .quat_core import K1_ONE, K1Element
from .residue_ring import (
    Modulus,
    PrimePower,
    Residue,
    from_integer,
    make_modulus,
    reduce,
    reduce_components,
    to_integer,
)

GUARD = 10_000


def _mul(x: K1Element, y: K1Element, M: Modulus) -> K1Element:
    return reduce(x * y, M).rep


def brute_order(r: Residue) -> int:
    """Least d >= 1 with r^d = 1, by repeated multiplication."""
    M = r.modulus
    one = reduce(K1_ONE, M).rep
    x = r.rep
    limit = M.ring_norm
    for d in range(1, limit + 1):
        if x == one:
            return d
        x = _mul(x, r.rep, M)
    n = M.ring_norm
    raise NotAUnit(f"{r} never reaches 1", gcd=math.gcd(to_integer(r), n))


@dataclass(frozen=True)
class IsoReport:
    ring_norm: int
    residues: int
    pairs: int
    add_ok: int
    mul_ok: int
    roundtrip_ok: int

    @property
    def passed(self) -> bool:
        return (
            self.residues == self.ring_norm
            and self.add_ok == self.pairs
            and self.mul_ok == self.pairs
            and self.roundtrip_ok == self.ring_norm
        )


def exhaustive_iso_check(M: Modulus) -> IsoReport:
    """Check a + b*w -> a + b*t (mod N) over every residue and every pair of residues."""
    n = M.ring_norm
    if n > GUARD:
        raise GuardExceeded(f"N = {n} exceeds the exhaustive-check guard {GUARD}")
    reps = [from_integer(g, M) for g in range(n)]
    distinct = len({r.rep for r in reps})
    roundtrip = sum(
        1 for g, r in enumerate(reps) if to_integer(r) == g and from_integer(to_integer(r), M) == r
    )
    images = [to_integer(r) for r in reps]
    add_ok = mul_ok = 0
    for x, ix in zip(reps, images):
        for y, iy in zip(reps, images):
            if to_integer(reduce(x.rep + y.rep, M)) == (ix + iy) % n:
                add_ok += 1
            if to_integer(reduce(x.rep * y.rep, M)) == (ix * iy) % n:
                mul_ok += 1
    return IsoReport(n, distinct, n * n, add_ok, mul_ok, roundtrip)


def brute_search_element(
    M: Modulus,
    order: int,
    congruent_one_mod: Sequence[K1Element] = (),
) -> Residue:
    """
    First integer g = 1, 2, ... whose image has the given order and is
    congruent to 1 modulo every listed prime.
    """
    n = M.ring_norm
    if n > GUARD:
        raise GuardExceeded(f"N = {n} exceeds the search guard {GUARD}")
    subs = [make_modulus(PrimePower(K1Element(*pi), 1)) for pi in congruent_one_mod]
    for g in range(1, n):
        r = from_integer(g, M)
        if any(not reduce(r.rep - K1_ONE, sub).is_zero() for sub in subs):
            continue
        if math.gcd(g, n) != 1:
            continue
        if brute_order(r) == order:
            return r
    raise NotFound(f"no element of order {order} modulo {n}")


def _naive_eval(word: Sequence[Residue], root: Residue) -> tuple[int, int]:
    # Horner with the H(K1) product written out: (a + bw)(c + dw) = (ac - 3bd) + (ad + bc)w
    M = root.modulus
    c, d = root.rep
    a = b = 0
    for coeff in reversed(word):
        ca, cb = coeff.rep
        a, b = reduce_components(a * c - 3 * b * d + ca, a * d + b * c + cb, M)
    return a, b


def reference_decode(code, received: Sequence[Residue], error_set=DEFAULT_ERROR_SET) -> DecodeResult:
    """Try the no-error case and every single-error subtraction; demand a unique codeword."""
    if len(received) != code.length:
        raise LengthMismatch(f"received word has length {len(received)}, expected {code.length}")
    M = code.modulus
    received = tuple(received)
    zero = (0, 0)
    if _naive_eval(received, code.root) == zero:
        return DecodeResult(received, None, Status.CLEAN)
    values = [v if isinstance(v, Residue) else reduce(K1Element(*v), M) for v in error_set]
    hits = []
    for pos in range(code.length):
        for v in values:
            trial = list(received)
            trial[pos] = reduce(trial[pos].rep - v.rep, M)
            if _naive_eval(trial, code.root) == zero:
                hits.append((pos, v, tuple(trial)))
    if not hits:
        return DecodeResult(received, None, Status.UNCORRECTABLE)
    if len(hits) > 1:
        raise InternalContradiction(
            "several single-error corrections give codewords: "
            + ", ".join(f"{v} @ {p}" for p, v, _ in hits)
        )
    pos, v, word = hits[0]
    return DecodeResult(word, (pos, v), Status.CORRECTED)


def brute_power_table(root: Residue, count: int) -> list[Residue]:
    """root^0 .. root^(count-1) by successive multiplication."""
    M = root.modulus
    out = [reduce(K1_ONE, M)]
    for _ in range(count - 1):
        out.append(reduce(out[-1].rep * root.rep, M))
    return out
