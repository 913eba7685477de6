"""
Finite rings H(K1)_m = H(K1)/<m> for m = pi^k or m = pi1*pi2.

Canonical representatives come from rounded division by m: for x in H(K1),

    reduce(x) = x - round(x * conj(m) / N(m)) * m

with componentwise nearest-integer rounding. When the complete part and the
vector coefficient of m are coprime the ring is isomorphic to Z_N, N = N(m),
through a + b*w -> a + b*t (mod N) where t = -a_m / b_m (mod N) satisfies
t^2 = -3 (mod N). Inverses and orders go through that isomorphism, never
through a Euclidean algorithm in H(K1) (Z[sqrt(-3)] is not Euclidean).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Optional, Union

from .errors import (
    CandidateNotPrimitive,
    EqualPrimes,
    InternalContradiction,
    ModulusMismatch,
    NotAUnit,
    NotFound,
    NotPrime,
    PartsNotCoprime,
    Unrepresentable,
)
from .quat_core import INT64_MAX, INT64_MIN, K1_ONE, K1Element, format_element, is_k1_prime


@dataclass(frozen=True)
class PrimePower:
    pi: K1Element
    k: int


@dataclass(frozen=True)
class PrimeProduct:
    """Product of distinct primes. Two primes is the supported case; more is experimental."""

    primes: tuple[K1Element, ...]


def two_primes(pi1: K1Element, pi2: K1Element) -> PrimeProduct:
    return PrimeProduct((K1Element(*pi1), K1Element(*pi2)))


Provenance = Union[PrimePower, PrimeProduct]


@dataclass(frozen=True)
class Modulus:
    m: K1Element
    ring_norm: int
    v_image: int
    provenance: Provenance
    # rational primes under each prime factor, in provenance order
    prime_norms: tuple[int, ...] = field(compare=False)

    @property
    def unit_count(self) -> int:
        return euler_phi(self.ring_norm)

    def one(self) -> Residue:
        return Residue(K1_ONE, self)

    def zero(self) -> Residue:
        return Residue(K1Element(0, 0), self)

    def __str__(self) -> str:
        return f"H(K1)/<{format_element(self.m)}> (N={self.ring_norm})"


def make_modulus(provenance: Provenance) -> Modulus:
    if isinstance(provenance, PrimePower):
        if provenance.k < 1:
            raise ValueError(f"exponent must be positive, got {provenance.k}")
        primes = (K1Element(*provenance.pi),)
        provenance = PrimePower(primes[0], provenance.k)
    else:
        primes = tuple(K1Element(*p) for p in provenance.primes)
        if len(primes) < 2:
            raise ValueError("a prime product needs at least two primes")
        provenance = PrimeProduct(primes)

    for pi in primes:
        if not is_k1_prime(pi):
            raise NotPrime(f"{format_element(pi)} has norm {pi.norm()}, which is not a rational prime")
    norms = tuple(pi.norm() for pi in primes)
    if len(set(norms)) != len(norms):
        raise EqualPrimes(f"prime factors must have distinct norms, got {norms}")

    if isinstance(provenance, PrimePower):
        m = K1_ONE
        for _ in range(provenance.k):
            m = m * primes[0]
    else:
        m = K1_ONE
        for pi in primes:
            m = m * pi

    a, b = m
    if b == 0 or math.gcd(a, b) != 1:
        raise PartsNotCoprime(
            f"modulus {format_element(m)} has parts with gcd {math.gcd(a, b)}; "
            "the ring is not isomorphic to Z_N"
        )
    if 3 in norms:
        raise Unrepresentable("p = 3 is excluded: pi = w gives a degenerate ring of characteristic 3")

    n = m.norm()
    if math.gcd(b, n) != 1:
        raise PartsNotCoprime(f"vector coefficient {b} is not invertible mod {n}")
    t = (-a * pow(b, -1, n)) % n
    if (t * t + 3) % n or (a + b * t) % n:
        raise InternalContradiction(f"v-image {t} fails t^2 = -3 (mod {n})")
    return Modulus(m, n, t, provenance, norms)


def prime_power_modulus(pi, k: int = 2) -> Modulus:
    return make_modulus(PrimePower(K1Element(*pi), k))


def two_prime_modulus(pi1, pi2) -> Modulus:
    return make_modulus(two_primes(pi1, pi2))


def reduce_components(a: int, b: int, M: Modulus) -> tuple[int, int]:
    """
    Canonical representative of a + b*w modulo M.m, as a plain pair.

    Quotient components are round(num / N) with ties toward +inf, computed as
    floor((2*num + N) / 2N); a zero remainder there is exactly a tie, which
    cannot happen for odd N and is treated as an internal error if it does.
    """
    ma, mb = M.m
    n = M.ring_norm
    n2 = n + n
    # x * conj(m)
    qa, ra = divmod(2 * (a * ma + 3 * b * mb) + n, n2)
    qb, rb = divmod(2 * (b * ma - a * mb) + n, n2)
    if (ra == 0 or rb == 0) and n & 1:
        raise ArithmeticError(f"rounding tie while reducing {a}{b:+d}w modulo N={n}")
    ya = a - (qa * ma - 3 * qb * mb)
    yb = b - (qa * mb + qb * ma)
    if not (INT64_MIN <= ya <= INT64_MAX and INT64_MIN <= yb <= INT64_MAX):
        raise OverflowError(f"reduction of {a}{b:+d}w leaves the signed 64-bit range")
    return ya, yb


def reduce(x: K1Element, M: Modulus) -> Residue:
    """Canonical representative of x modulo M.m."""
    return Residue(K1Element(*reduce_components(x[0], x[1], M)), M)


class Residue:
    """A class of H(K1)_m held by its canonical representative."""

    __slots__ = ("rep", "modulus")

    def __init__(self, rep: K1Element, modulus: Modulus):
        self.rep = rep
        self.modulus = modulus

    def _same(self, other: Residue) -> None:
        if other.modulus is not self.modulus and other.modulus != self.modulus:
            raise ModulusMismatch(f"{self.modulus} vs {other.modulus}")

    def __add__(self, other: Residue) -> Residue:
        self._same(other)
        return reduce(self.rep + other.rep, self.modulus)

    def __sub__(self, other: Residue) -> Residue:
        self._same(other)
        return reduce(self.rep - other.rep, self.modulus)

    def __neg__(self) -> Residue:
        return reduce(-self.rep, self.modulus)

    def __mul__(self, other: Residue) -> Residue:
        self._same(other)
        return reduce(self.rep * other.rep, self.modulus)

    def __pow__(self, exponent: int) -> Residue:
        return power(self, exponent)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Residue):
            return NotImplemented
        return self.rep == other.rep and (
            self.modulus is other.modulus or self.modulus == other.modulus
        )

    def __hash__(self) -> int:
        return hash((self.rep, self.modulus.m))

    def __bool__(self) -> bool:
        return self.rep != (0, 0)

    def is_zero(self) -> bool:
        return self.rep == (0, 0)

    def __repr__(self) -> str:
        return f"Residue({format_element(self.rep)} mod {format_element(self.modulus.m)})"

    def __str__(self) -> str:
        return format_element(self.rep)


def residue(x, M: Modulus) -> Residue:
    """Reduce an element given as K1Element, (a, b) pair or plain integer."""
    if isinstance(x, int):
        return from_integer(x, M)
    return reduce(K1Element(*x), M)


def to_integer(r: Residue) -> int:
    M = r.modulus
    return (r.rep.a + r.rep.b * M.v_image) % M.ring_norm


def from_integer(g: int, M: Modulus) -> Residue:
    return reduce(K1Element(g % M.ring_norm, 0), M)


def inverse(r: Residue) -> Residue:
    n = r.modulus.ring_norm
    x = to_integer(r)
    g = math.gcd(x, n)
    if g != 1:
        raise NotAUnit(f"{r} is not a unit (gcd with {n} is {g})", gcd=g)
    return from_integer(pow(x, -1, n), r.modulus)


def power(r: Residue, exponent: int) -> Residue:
    if exponent < 0:
        return power(inverse(r), -exponent)
    result = r.modulus.one()
    base = r
    while exponent:
        if exponent & 1:
            result = result * base
        base = base * base
        exponent >>= 1
    return result


def factorize(n: int) -> dict[int, int]:
    """Trial-division factorization of a positive integer."""
    out: dict[int, int] = {}
    d = 2
    while d * d <= n:
        while n % d == 0:
            out[d] = out.get(d, 0) + 1
            n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def euler_phi(n: int) -> int:
    result = n
    for p in factorize(n):
        result = result // p * (p - 1)
    return result


def is_unit(r: Residue) -> bool:
    return math.gcd(to_integer(r), r.modulus.ring_norm) == 1


def order(r: Residue) -> int:
    """Multiplicative order, found by stripping prime factors off phi(N)."""
    if not is_unit(r):
        n = r.modulus.ring_norm
        raise NotAUnit(f"{r} is not a unit", gcd=math.gcd(to_integer(r), n))
    one = r.modulus.one()
    d = euler_phi(r.modulus.ring_norm)
    for q in factorize(d):
        while d % q == 0 and power(r, d // q) == one:
            d //= q
    return d


def _integer_order(x: int, n: int, group_order: int, factors) -> int:
    d = group_order
    for q in factors:
        while d % q == 0 and pow(x, d // q, n) == 1:
            d //= q
    return d


def find_primitive_root(M: Modulus, candidate: Optional[Residue] = None) -> Residue:
    """
    Generator of the unit group of H(K1)_{pi^k}.

    With no candidate, scans the integers 2, 3, 4, ... and returns the image of
    the first primitive root. Before returning, g^(phi/2) = -1 is checked.
    """
    if not isinstance(M.provenance, PrimePower):
        raise ValueError("primitive roots are only defined here for prime-power moduli")
    if M.prime_norms[0] < 7:
        raise ValueError("prime-power moduli need p >= 7")
    phi = euler_phi(M.ring_norm)

    if candidate is not None:
        g = candidate if isinstance(candidate, Residue) else residue(candidate, M)
        if g.modulus != M:
            raise ModulusMismatch("candidate lives in a different ring")
        if not is_unit(g):
            raise CandidateNotPrimitive(f"{g} is not a unit modulo {format_element(M.m)}")
        d = order(g)
        if d != phi:
            raise CandidateNotPrimitive(f"{g} has order {d}, not {phi}")
    else:
        factors = list(factorize(phi))
        for x in range(2, M.ring_norm):
            if math.gcd(x, M.ring_norm) == 1 and _integer_order(x, M.ring_norm, phi, factors) == phi:
                g = from_integer(x, M)
                break
        else:  # pragma: no cover - cyclic unit group always has a generator
            raise NotFound(f"no primitive root modulo {M.ring_norm}")

    if power(g, phi // 2) != -M.one():
        raise InternalContradiction(f"g^(phi/2) != -1 for g = {g}")
    return g


def find_partial_generator(M: Modulus, target: int) -> Residue:
    """
    Unit e with e = 1 modulo every prime factor except the target one, and
    multiplicative order exactly p_target - 1.

    target is 1-based. Moduli with more than two primes are experimental.
    """
    if not isinstance(M.provenance, PrimeProduct):
        raise ValueError("partial generators need a product of distinct primes")
    primes = M.provenance.primes
    if not 1 <= target <= len(primes):
        raise ValueError(f"target must be in 1..{len(primes)}, got {target}")
    p_target = M.prime_norms[target - 1]
    others = [p for i, p in enumerate(M.prime_norms) if i != target - 1]
    want = p_target - 1
    n = M.ring_norm
    phi = euler_phi(n)
    factors = list(factorize(phi))

    for x in range(1, n):
        if any(x % p != 1 for p in others):
            continue
        if math.gcd(x, n) != 1:
            continue
        if _integer_order(x, n, phi, factors) == want:
            e = from_integer(x, M)
            break
    else:  # pragma: no cover - existence is guaranteed for distinct primes
        raise NotFound(f"no partial generator for target {target} modulo {n}")

    if power(e, want) != M.one():
        raise InternalContradiction(f"e^{want} != 1 for e = {e}")
    for i, pi in enumerate(primes):
        if i == target - 1:
            continue
        sub = prime_power_modulus(pi, 1)
        if not reduce(e.rep - K1_ONE, sub).is_zero():
            raise InternalContradiction(f"{e} is not 1 modulo {format_element(pi)}")
    return e
