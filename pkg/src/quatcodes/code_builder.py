"""
The two code families over H(K1)_m, each generated by a monic linear
polynomial x - root:

* prime-square codes over H(K1)_{pi^2}: length phi(p^2)/2, living in the
  quotient by x^n + 1 because the primitive root satisfies g^n = -1;
* two-prime codes over H(K1)_{pi1*pi2}: length phi(p_target), living in the
  quotient by x^n - 1, with root a partial generator e.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Optional, Sequence

from .errors import LengthMismatch, RootCheckFailed
from .poly_ring import Poly, divide_by_linear, eval_coeffs, linear_factor, poly_divmod
from .quat_core import K1Element
from .residue_ring import (
    Modulus,
    PrimePower,
    Residue,
    euler_phi,
    find_partial_generator,
    find_primitive_root,
    make_modulus,
    power,
    reduce,
    residue,
    two_primes,
)

PRIME_SQUARE = "prime_square"
TWO_PRIMES = "two_primes"


@dataclass(frozen=True)
class CodeSpec:
    modulus: Modulus
    length: int
    quotient_sign: int
    root: Residue
    family: str
    target: Optional[int] = None

    @property
    def gen_poly(self) -> Poly:
        return linear_factor(self.root)

    @property
    def ambient(self) -> Poly:
        return Poly.x_pow_plus(self.length, self.quotient_sign, self.modulus)

    @property
    def dimension(self) -> int:
        return self.length - 1

    def check(self) -> None:
        """Raise RootCheckFailed unless root annihilates x^n + sign and g(x) divides it."""
        M = self.modulus
        sign = M.one() if self.quotient_sign == 1 else -M.one()
        if power(self.root, self.length) + sign != M.zero():
            raise RootCheckFailed(
                f"root {self.root} does not satisfy root^{self.length} = {-self.quotient_sign}"
            )
        _, rem = poly_divmod(self.ambient, self.gen_poly)
        if not rem.is_zero():
            raise RootCheckFailed(f"x - {self.root} does not divide the ambient polynomial")

    def to_json(self) -> str:
        prov = self.modulus.provenance
        if self.family == PRIME_SQUARE:
            head = {"family": PRIME_SQUARE, "pi": list(prov.pi), "power": prov.k}
        else:
            pi1, pi2 = prov.primes
            head = {"family": TWO_PRIMES, "pi1": list(pi1), "pi2": list(pi2), "target": self.target}
        body = {
            "modulus": list(self.modulus.m),
            "ring_norm": self.modulus.ring_norm,
            "length": self.length,
            "quotient_sign": self.quotient_sign,
            "root": list(self.root.rep),
        }
        return json.dumps({**head, **body}, separators=(",", ":")) + "\n"

    @classmethod
    def from_json(cls, text: str, validate: bool = True) -> CodeSpec:
        d = json.loads(text)
        family = d["family"]
        if family == PRIME_SQUARE:
            M = make_modulus(PrimePower(K1Element(*d["pi"]), int(d["power"])))
            target = None
        elif family == TWO_PRIMES:
            M = make_modulus(two_primes(K1Element(*d["pi1"]), K1Element(*d["pi2"])))
            target = int(d["target"])
        else:
            raise ValueError(f"unknown code family {family!r}")
        if list(M.m) != d["modulus"] or M.ring_norm != d["ring_norm"]:
            raise ValueError(
                f"file modulus {d['modulus']} (N={d['ring_norm']}) disagrees with the "
                f"recomputed {list(M.m)} (N={M.ring_norm})"
            )
        root = reduce(K1Element(*d["root"]), M)
        if list(root.rep) != d["root"]:
            raise ValueError(f"root {d['root']} is not a canonical representative")
        code = cls(M, int(d["length"]), int(d["quotient_sign"]), root, family, target)
        if validate:
            code.check()
        return code


def build_pi2_code(pi, root_candidate=None, k: int = 2) -> CodeSpec:
    """Code of length phi(p^k)/2 over H(K1)_{pi^k} generated by x - g, g primitive."""
    M = make_modulus(PrimePower(K1Element(*pi), k))
    if root_candidate is not None and not isinstance(root_candidate, Residue):
        root_candidate = residue(root_candidate, M)
    g = find_primitive_root(M, root_candidate)
    n = euler_phi(M.ring_norm) // 2
    divide_by_linear(n, 1, g)
    code = CodeSpec(M, n, 1, g, PRIME_SQUARE)
    code.check()
    return code


def build_crt_code(pi1, pi2, target: int) -> CodeSpec:
    """Code of length phi(p_target) over H(K1)_{pi1*pi2} generated by x - e."""
    if target not in (1, 2):
        raise ValueError(f"target must be 1 or 2, got {target}")
    M = make_modulus(two_primes(K1Element(*pi1), K1Element(*pi2)))
    e = find_partial_generator(M, target)
    n = M.prime_norms[target - 1] - 1
    divide_by_linear(n, -1, e)
    code = CodeSpec(M, n, -1, e, TWO_PRIMES, target)
    code.check()
    return code


def generator_matrix(code: CodeSpec) -> list[list[Residue]]:
    """(n-1) x n band matrix; row i holds the coefficients of x^i * g(x)."""
    M = code.modulus
    n = code.length
    neg_root = -code.root
    rows = []
    for i in range(n - 1):
        row = [M.zero()] * n
        row[i] = neg_root
        row[i + 1] = M.one()
        rows.append(row)
    return rows


def _check_length(word: Sequence[Residue], n: int, what: str) -> None:
    if len(word) != n:
        raise LengthMismatch(f"{what} has length {len(word)}, expected {n}")


def encode(code: CodeSpec, message: Sequence[Residue]) -> tuple[Residue, ...]:
    """c(x) = m(x) * (x - root). deg m <= n - 2, so no ambient reduction is needed."""
    _check_length(message, code.dimension, "message")
    M = code.modulus
    n = code.length
    neg_root = -code.root
    out = [M.zero()] * n
    for i, m in enumerate(message):
        if m.is_zero():
            continue
        out[i] = out[i] + m * neg_root
        out[i + 1] = out[i + 1] + m
    return tuple(out)


def matrix_encode(code: CodeSpec, message: Sequence[Residue]) -> tuple[Residue, ...]:
    """Row-vector times generator matrix; must agree with encode."""
    _check_length(message, code.dimension, "message")
    M = code.modulus
    G = generator_matrix(code)
    out = []
    for j in range(code.length):
        acc = M.zero()
        for i, m in enumerate(message):
            acc = acc + m * G[i][j]
        out.append(acc)
    return tuple(out)


def is_codeword(code: CodeSpec, word: Sequence[Residue]) -> bool:
    _check_length(word, code.length, "word")
    return eval_coeffs(word, code.root).is_zero()


def shift(code: CodeSpec, word: Sequence[Residue]) -> tuple[Residue, ...]:
    """Multiply by x in the ambient quotient; the wrapped symbol is negated when the sign is +1."""
    _check_length(word, code.length, "word")
    last = word[-1]
    wrapped = -last if code.quotient_sign == 1 else last
    return (wrapped,) + tuple(word[:-1])


def zero_word(code: CodeSpec) -> tuple[Residue, ...]:
    return (code.modulus.zero(),) * code.length


def default_code() -> CodeSpec:
    """pi = 2 + w, alpha = 1 - w over H(K1)_{pi^2}: the length-21 code used as the default verification target."""
    return build_pi2_code(K1Element(2, 1), K1Element(1, -1))

