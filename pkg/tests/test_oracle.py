import random

import pytest

from quatcodes.code_builder import encode, zero_word
from quatcodes.decoder import Status, build_syndrome_table, decode
from quatcodes.errors import GuardExceeded, InternalContradiction, LengthMismatch, NotAUnit
from quatcodes.oracle import (
    brute_order,
    brute_power_table,
    brute_search_element,
    exhaustive_iso_check,
    reference_decode,
)
from quatcodes.quat_core import K1Element
from quatcodes.residue_ring import from_integer, power, prime_power_modulus, residue, to_integer, two_prime_modulus
from quatcodes.verify import random_message


def test_brute_order(sq):
    assert brute_order(residue((1, -1), sq)) == 42
    assert brute_order(sq.one()) == 1
    assert brute_order(-sq.one()) == 2
    with pytest.raises(NotAUnit):
        brute_order(from_integer(7, sq))


@pytest.mark.parametrize("pi1, pi2, k, n", [((2, 1), None, 1, 7), ((2, 1), None, 2, 49), ((2, 1), (1, 2), None, 91)])
def test_exhaustive_iso(pi1, pi2, k, n):
    M = prime_power_modulus(pi1, k) if pi2 is None else two_prime_modulus(pi1, pi2)
    rep = exhaustive_iso_check(M)
    assert rep.ring_norm == n and rep.pairs == n * n and rep.passed


def test_guard():
    M = prime_power_modulus((1, 2), 4)  # N = 13^4 > 10^4
    with pytest.raises(GuardExceeded):
        exhaustive_iso_check(M)


def test_brute_search(crt, sq):
    assert to_integer(brute_search_element(crt, 12, [K1Element(2, 1)])) == 15
    f = brute_search_element(crt, 6, [K1Element(1, 2)])
    assert to_integer(f) % 13 == 1 and brute_order(f) == 6
    assert to_integer(brute_search_element(sq, 42)) == 3


def test_power_table(sq):
    alpha = residue((1, -1), sq)
    table = brute_power_table(alpha, 42)
    assert all(table[d] == power(alpha, d) for d in range(42))


def test_reference_decode(ex1):
    M = ex1.modulus
    table = build_syndrome_table(ex1)
    rng = random.Random(99)
    for _ in range(1000):
        c = list(encode(ex1, random_message(ex1, rng)))
        if rng.random() < 0.8:
            pos = rng.randrange(21)
            c[pos] = c[pos] + rng.choice((M.one(), -M.one()))
        assert reference_decode(ex1, c) == decode(ex1, table, c)
    assert reference_decode(ex1, zero_word(ex1)).status is Status.CLEAN
    seven = [from_integer(7, M)] + [M.zero()] * 20
    assert reference_decode(ex1, seven).status is Status.UNCORRECTABLE
    with pytest.raises(LengthMismatch):
        reference_decode(ex1, seven[:3])


def test_reference_decode_detects_ambiguity(ex1):
    M = ex1.modulus
    w = [from_integer(2, M)] + [M.zero()] * 20  # 2 = alpha^8: fixable as +2 @ 0 and as +1 @ 8
    with pytest.raises(InternalContradiction):
        reference_decode(ex1, w, error_set=[(1, 0), (2, 0)])
