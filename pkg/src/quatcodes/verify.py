"""
Verification harness behind the ``verify`` command.

Every check pairs a fast path with a brute-force oracle or with a defining
identity, and reports ``name: passed/total``. Randomness comes from a single
``random.Random(seed)``: messages are drawn coefficient by coefficient as
``rng.randrange(N)`` mapped into the ring, zero message first.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Callable, Optional, Sequence

from .code_builder import (
    PRIME_SQUARE,
    CodeSpec,
    encode,
    generator_matrix,
    is_codeword,
    matrix_encode,
    shift,
)
from .decoder import DlogDecoder, Status, build_syndrome_table, decode
from .oracle import (
    GUARD,
    brute_order,
    brute_power_table,
    brute_search_element,
    exhaustive_iso_check,
    reference_decode,
)
from .poly_ring import Poly, poly_divmod
from .quat_core import represent_prime
from .residue_ring import (
    Residue,
    euler_phi,
    find_partial_generator,
    find_primitive_root,
    from_integer,
    order,
    power,
    prime_power_modulus,
    two_prime_modulus,
)

CERT_PRIMES = (7, 13, 19, 31, 37, 43)
PARTIAL_GEN_PAIRS = (((2, 1), (1, 2)), ((2, 1), (4, 1)))


@dataclass
class Check:
    name: str
    passed: int
    total: int
    detail: str = ""

    @property
    def ok(self) -> bool:
        return self.total > 0 and self.passed == self.total

    def line(self) -> str:
        tail = f"  ({self.detail})" if self.detail else ""
        return f"{self.name}: {self.passed}/{self.total}{tail}"


def random_message(code: CodeSpec, rng: random.Random) -> tuple[Residue, ...]:
    M = code.modulus
    return tuple(from_integer(rng.randrange(M.ring_norm), M) for _ in range(code.dimension))


def seeded_messages(code: CodeSpec, count: int, seed: int) -> list[tuple[Residue, ...]]:
    """The zero message followed by ``count`` random messages."""
    rng = random.Random(seed)
    zero = (code.modulus.zero(),) * code.dimension
    return [zero] + [random_message(code, rng) for _ in range(count)]


def error_patterns(code: CodeSpec) -> list[Optional[tuple[int, Residue]]]:
    """None (no error) followed by +1 and -1 at each position."""
    M = code.modulus
    out: list = [None]
    for pos in range(code.length):
        out.append((pos, M.one()))
        out.append((pos, -M.one()))
    return out


def decode_roundtrip(code: CodeSpec, messages: Sequence[Sequence[Residue]]) -> tuple[int, int, list[str]]:
    """
    Inject every single +-1 error (and no error) into every encoded message.

    A trial passes when the table decoder restores the codeword, reports the
    injected error, and agrees with reference_decode (and with the
    discrete-log decoder for prime-square codes).
    """
    table = build_syndrome_table(code)
    dlog = DlogDecoder(code) if code.family == PRIME_SQUARE else None
    patterns = error_patterns(code)
    ok = total = 0
    failures: list[str] = []
    for mi, m in enumerate(messages):
        cw = encode(code, m)
        for pat in patterns:
            word = list(cw)
            if pat is not None:
                word[pat[0]] = word[pat[0]] + pat[1]
            total += 1
            res = decode(code, table, word)
            want = Status.CLEAN if pat is None else Status.CORRECTED
            good = res.status is want and res.corrected == cw and res.error == pat
            good = good and reference_decode(code, word) == res
            if dlog is not None:
                good = good and dlog.decode(word) == res
            if good:
                ok += 1
            elif len(failures) < 5:
                failures.append(f"message #{mi}, pattern {pat}: got {res.status.value}")
    return ok, total, failures


def _guarded(name: str, fn: Callable[[], Check]) -> Check:
    try:
        return fn()
    except Exception as exc:  # noqa: BLE001 - every failure becomes a report line
        return Check(name, 0, 1, f"{type(exc).__name__}: {exc}")


def code_checks(code: CodeSpec, trials: int, seed: int) -> list[Check]:
    M = code.modulus
    n = code.length
    checks: list[Check] = []

    def annihilation() -> Check:
        sign = M.one() if code.quotient_sign == 1 else -M.one()
        good = (power(code.root, n) + sign).is_zero()
        return Check("root annihilation", int(good), 1, f"root^{n} = {power(code.root, n)}")

    def divides() -> Check:
        _, rem = poly_divmod(Poly.x_pow_plus(n, code.quotient_sign, M), code.gen_poly)
        return Check("generator divides ambient", int(rem.is_zero()), 1)

    def root_order() -> Check:
        fast = order(code.root)
        slow = brute_order(code.root)
        expected = 2 * n if code.family == PRIME_SQUARE else n
        return Check("root order vs oracle", int(fast == slow == expected), 1, f"order {slow}, expected {expected}")

    def power_table() -> Check:
        slow = brute_power_table(code.root, 2 * n)
        good = sum(1 for d, r in enumerate(slow) if power(code.root, d) == r)
        return Check("root powers vs oracle", good, 2 * n)

    def iso() -> Check:
        if M.ring_norm > GUARD:
            return Check("isomorphism", 1, 1, f"skipped, N = {M.ring_norm} > {GUARD}")
        rep = exhaustive_iso_check(M)
        good = rep.add_ok + rep.mul_ok + rep.roundtrip_ok + (rep.residues == rep.ring_norm)
        return Check(f"isomorphism (N={rep.ring_norm})", good, 2 * rep.pairs + rep.ring_norm + 1)

    def table() -> Check:
        t = build_syndrome_table(code)
        return Check("syndrome table", int(len(t) == 2 * n), 1, f"{len(t)} distinct nonzero syndromes")

    checks += [_guarded(f.__name__, f) for f in (annihilation, divides, root_order, power_table, iso, table)]
    if not checks[0].ok:
        checks.append(Check("decode round-trip", 0, 1, "skipped: root does not annihilate the ambient polynomial"))
        return checks

    messages = seeded_messages(code, trials, seed)

    def matrix() -> Check:
        G = generator_matrix(code)
        good = sum(1 for m in messages if encode(code, m) == matrix_encode(code, m))
        band = all(row[i] == -code.root and row[i + 1] == M.one() for i, row in enumerate(G))
        return Check("encoder vs generator matrix", good + int(band), len(messages) + 1)

    def closure() -> Check:
        good = total = 0
        for m in messages:
            c = encode(code, m)
            total += 1
            good += int(is_codeword(code, c) and is_codeword(code, shift(code, c)))
        return Check("codeword and shift closure", good, total)

    def roundtrip() -> Check:
        ok, total, failures = decode_roundtrip(code, messages)
        return Check("decode round-trip", ok, total, "; ".join(failures))

    checks += [_guarded(f.__name__, f) for f in (matrix, closure, roundtrip)]
    return checks


def primitive_root_check() -> Check:
    good = 0
    details = []
    for p in CERT_PRIMES:
        M = prime_power_modulus(represent_prime(p), 2)
        g = find_primitive_root(M)
        phi = euler_phi(M.ring_norm)
        if power(g, phi // 2) == -M.one() and brute_order(g) == phi == p * (p - 1):
            good += 1
        else:
            details.append(f"p={p}")
    return Check("primitive-root certificates (g^(phi/2) = -1)", good, len(CERT_PRIMES), ", ".join(details))


def partial_generator_check() -> Check:
    good = total = 0
    for pi1, pi2 in PARTIAL_GEN_PAIRS:
        M = two_prime_modulus(pi1, pi2)
        for target in (1, 2):
            total += 1
            e = find_partial_generator(M, target)
            other = (pi2,) if target == 1 else (pi1,)
            want = M.prime_norms[target - 1] - 1
            oracle = brute_search_element(M, want, other)
            if e == oracle and brute_order(e) == want:
                good += 1
    return Check("partial-generator certificates", good, total)


def run_verification(code: CodeSpec, trials: int = 200, seed: int = 42) -> list[Check]:
    checks = code_checks(code, trials, seed)
    checks.append(_guarded("primitive roots", primitive_root_check))
    checks.append(_guarded("partial generators", partial_generator_check))
    return checks


def format_report(code: CodeSpec, checks: Sequence[Check]) -> str:
    lines = [
        f"code: {code.family}, length {code.length}, {code.modulus}, root {code.root}",
    ]
    lines += [c.line() for c in checks]
    lines.append("result: " + ("PASS" if all(c.ok for c in checks) else "FAIL"))
    return "\n".join(lines) + "\n"
