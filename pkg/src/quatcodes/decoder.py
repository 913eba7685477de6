"""
Single-error syndrome decoding.

The syndrome of a received word r is r(root). A single error of value v at
position l has syndrome v * root^l, so a table keyed by those values decodes
every configured error pattern as long as the keys are pairwise distinct and
nonzero. The default error set {+1, -1} is exactly the set of errors of
quaternion Mannheim weight one.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Optional, Sequence

from .code_builder import PRIME_SQUARE, CodeSpec, is_codeword
from .errors import LengthMismatch, SyndromeCollision
from .poly_ring import eval_coeffs
from .quat_core import K1Element
from .residue_ring import Residue, inverse, is_unit, reduce

DEFAULT_ERROR_SET = (K1Element(1, 0), K1Element(-1, 0))


class Status(enum.Enum):
    CLEAN = "clean"
    CORRECTED = "corrected"
    UNCORRECTABLE = "uncorrectable"


@dataclass(frozen=True)
class DecodeResult:
    corrected: tuple[Residue, ...]
    error: Optional[tuple[int, Residue]]
    status: Status


@dataclass(frozen=True)
class SyndromeTable:
    entries: dict  # syndrome representative (K1Element) -> (position, error value)
    error_set: tuple[Residue, ...]

    def lookup(self, s: Residue) -> Optional[tuple[int, Residue]]:
        return self.entries.get(s.rep)

    def __len__(self) -> int:
        return len(self.entries)


def _root_powers(code: CodeSpec, count: int) -> list[Residue]:
    out = [code.modulus.one()]
    for _ in range(count - 1):
        out.append(out[-1] * code.root)
    return out


def build_syndrome_table(code: CodeSpec, error_set: Sequence = DEFAULT_ERROR_SET) -> SyndromeTable:
    M = code.modulus
    values = tuple(v if isinstance(v, Residue) else reduce(K1Element(*v), M) for v in error_set)
    for v in values:
        if v.is_zero():
            raise ValueError("error values must be nonzero")
    powers = _root_powers(code, code.length)
    entries: dict = {}
    for l in range(code.length):
        for v in values:
            s = v * powers[l]
            if s.is_zero():
                raise SyndromeCollision(f"error {v} at position {l} has zero syndrome", (l, v), None)
            if s.rep in entries:
                l0, v0 = entries[s.rep]
                raise SyndromeCollision(_collision_message(l0, v0, l, v, s), (l0, v0), (l, v))
            entries[s.rep] = (l, v)
    return SyndromeTable(entries, values)


def _collision_message(l0: int, v0: Residue, l1: int, v1: Residue, s: Residue) -> str:
    msg = f"syndrome {s} is shared by error {v0} @ {l0} and error {v1} @ {l1}"
    if is_unit(v1):
        # v0 * root^l0 = v1 * root^l1  =>  v0 / v1 = root^(l1 - l0)
        ratio = v0 * inverse(v1)
        msg += f"; this means {ratio} = root^{l1 - l0}"
    return msg


def syndrome(code: CodeSpec, received: Sequence[Residue]) -> Residue:
    if len(received) != code.length:
        raise LengthMismatch(f"received word has length {len(received)}, expected {code.length}")
    return eval_coeffs(received, code.root)


def _apply(received: Sequence[Residue], pos: int, value: Residue) -> tuple[Residue, ...]:
    word = list(received)
    word[pos] = word[pos] - value
    return tuple(word)


def decode(code: CodeSpec, table: SyndromeTable, received: Sequence[Residue]) -> DecodeResult:
    s = syndrome(code, received)
    received = tuple(received)
    if s.is_zero():
        return DecodeResult(received, None, Status.CLEAN)
    hit = table.lookup(s)
    if hit is None:
        return DecodeResult(received, None, Status.UNCORRECTABLE)
    pos, value = hit
    corrected = _apply(received, pos, value)
    if not is_codeword(code, corrected):  # pragma: no cover - table entries are exact syndromes
        return DecodeResult(received, None, Status.UNCORRECTABLE)
    return DecodeResult(corrected, (pos, value), Status.CORRECTED)


class DlogDecoder:
    """
    Cross-check decoder for prime-square codes.

    root has order 2n with root^n = -1, so every syndrome of a +-1 error is
    root^d for a unique d in [0, 2n): d < n means +1 at d, otherwise -1 at d - n.
    """

    def __init__(self, code: CodeSpec):
        if code.family != PRIME_SQUARE:
            raise ValueError("the discrete-log decoder needs a prime-square code")
        self.code = code
        self.log = {p.rep: d for d, p in enumerate(_root_powers(code, 2 * code.length))}
        M = code.modulus
        self.plus = M.one()
        self.minus = -M.one()

    def decode(self, received: Sequence[Residue]) -> DecodeResult:
        code = self.code
        s = syndrome(code, received)
        received = tuple(received)
        if s.is_zero():
            return DecodeResult(received, None, Status.CLEAN)
        d = self.log.get(s.rep)
        if d is None:
            return DecodeResult(received, None, Status.UNCORRECTABLE)
        if d < code.length:
            pos, value = d, self.plus
        else:
            pos, value = d - code.length, self.minus
        corrected = _apply(received, pos, value)
        if not is_codeword(code, corrected):  # pragma: no cover
            return DecodeResult(received, None, Status.UNCORRECTABLE)
        return DecodeResult(corrected, (pos, value), Status.CORRECTED)


def dlog_decode(code: CodeSpec, received: Sequence[Residue]) -> DecodeResult:
    return DlogDecoder(code).decode(received)
