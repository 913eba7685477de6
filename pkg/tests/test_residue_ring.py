import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from quatcodes.errors import (
    CandidateNotPrimitive,
    EqualPrimes,
    ModulusMismatch,
    NotAUnit,
    NotPrime,
    PartsNotCoprime,
    Unrepresentable,
)
from quatcodes.oracle import brute_order, exhaustive_iso_check
from quatcodes.quat_core import K1Element, represent_prime
from quatcodes.residue_ring import (
    PrimePower,
    PrimeProduct,
    euler_phi,
    find_partial_generator,
    find_primitive_root,
    from_integer,
    inverse,
    make_modulus,
    order,
    power,
    prime_power_modulus,
    reduce,
    residue,
    to_integer,
    two_prime_modulus,
)

TABLE_I = {
    2: (-1, 2), 5: (0, 1), 8: (2, 0), 10: (-3, 0), 16: (4, 0), 20: (-3, 1), 21: (-1, 0),
}


def test_prime_square_modulus(sq, derived):
    fx = derived["pi2_modulus"]
    assert list(sq.m) == fx["m"] == [1, 4]
    assert sq.ring_norm == fx["N"] == 49
    assert sq.v_image == fx["t"] == 12


def test_two_prime_modulus(crt, derived):
    fx = derived["crt_modulus"]
    assert list(crt.m) == fx["m"] == [-4, 5]
    assert crt.ring_norm == fx["N"] == 91
    assert crt.v_image == fx["t"] == 19


def test_p3_rejected():
    with pytest.raises(PartsNotCoprime):
        prime_power_modulus((0, 1), 2)
    with pytest.raises(Unrepresentable):
        prime_power_modulus((0, 1), 1)


def test_modulus_errors():
    with pytest.raises(NotPrime):
        prime_power_modulus((1, 1), 2)
    with pytest.raises(EqualPrimes):
        two_prime_modulus((2, 1), (2, 1))
    with pytest.raises(EqualPrimes):
        two_prime_modulus((2, 1), (2, -1))
    with pytest.raises(ValueError):
        make_modulus(PrimePower(K1Element(2, 1), 0))


@pytest.mark.parametrize("x, rep", [((23, 0), (-1, 2)), ((4, 0), (4, 0)), ((38, 0), (1, -1))])
def test_reduce_examples(sq, x, rep):
    assert reduce(K1Element(*x), sq).rep == rep


def test_ring_arithmetic_against_table(sq):
    alpha = residue((1, -1), sq)
    assert (alpha * alpha).rep == TABLE_I[2]
    x = residue((3, -2), sq)
    assert (x + (-x)).is_zero()
    a10 = residue((-3, 0), sq)
    assert (a10 * a10).rep == TABLE_I[20]


def test_modulus_mismatch(sq, crt):
    with pytest.raises(ModulusMismatch):
        residue((1, 0), sq) + residue((1, 0), crt)


def test_to_from_integer_examples(sq, crt):
    assert to_integer(residue((0, 1), sq)) == 12
    assert to_integer(residue((-1, 0), sq)) == 48
    assert to_integer(residue((1, -1), sq)) == 38
    assert from_integer(38, sq).rep == (1, -1)
    assert from_integer(0, sq).rep == (0, 0)
    assert from_integer(15, crt).rep == (-4, 1)
    assert to_integer(from_integer(15, crt)) == 15


def test_inverse(sq, derived):
    alpha = residue((1, -1), sq)
    inv = inverse(alpha)
    assert to_integer(inv) == derived["alpha_inverse_integer"] == 40
    assert inv == power(alpha, 41)
    assert (alpha * inv) == sq.one()
    assert inverse(sq.one()) == sq.one()
    with pytest.raises(NotAUnit) as err:
        inverse(residue((7, 0), sq))
    assert err.value.gcd == 7


def test_power_and_order(sq):
    alpha = residue((1, -1), sq)
    assert power(alpha, 21).rep == (-1, 0)
    assert order(alpha) == 42 == brute_order(alpha)
    assert euler_phi(91) == 72
    assert euler_phi(49) == 42
    assert power(alpha, -1) == inverse(alpha)
    with pytest.raises(NotAUnit):
        order(residue((7, 0), sq))


def test_table_i_powers(sq):
    alpha = residue((1, -1), sq)
    for s, rep in TABLE_I.items():
        assert power(alpha, s).rep == rep


def test_primitive_root(sq, derived):
    alpha = residue((1, -1), sq)
    assert find_primitive_root(sq, alpha) == alpha
    g = find_primitive_root(sq)
    assert to_integer(g) == derived["least_primitive_root_49"] == 3
    assert g == from_integer(3, sq)
    with pytest.raises(CandidateNotPrimitive):
        find_primitive_root(sq, residue((7, 0), sq))
    with pytest.raises(CandidateNotPrimitive):
        find_primitive_root(sq, power(alpha, 2))


@pytest.mark.parametrize("p", [7, 13, 19, 31, 37, 43])
def test_primitive_root_certificate(p, derived):
    M = prime_power_modulus(represent_prime(p), 2)
    g = find_primitive_root(M)
    phi = p * (p - 1)
    assert euler_phi(M.ring_norm) == phi
    assert power(g, phi // 2) == -M.one()
    assert order(g) == brute_order(g) == phi
    assert list(g.rep) == derived["least_primitive_roots"][str(p)]["rep"]


def test_partial_generators(crt, derived):
    fx = derived["partial_generators"]["2,1|1,2"]
    e = find_partial_generator(crt, 2)
    assert e.rep == (-4, 1) == tuple(fx["target2"]["rep"])
    assert order(e) == brute_order(e) == 12
    assert power(e, 12) == crt.one()
    f = find_partial_generator(crt, 1)
    assert to_integer(f) == fx["target1"]["integer"]
    assert power(f, 6) == crt.one() and brute_order(f) == 6
    sub = prime_power_modulus((1, 2), 1)
    assert reduce(f.rep - K1Element(1, 0), sub).is_zero()


def test_partial_generators_second_pair(derived):
    M = two_prime_modulus((2, 1), (4, 1))
    fx = derived["partial_generators"]["2,1|4,1"]
    for target, p in ((1, 7), (2, 19)):
        e = find_partial_generator(M, target)
        assert list(e.rep) == fx[f"target{target}"]["rep"]
        assert brute_order(e) == p - 1
        other = M.provenance.primes[2 - target]
        assert reduce(e.rep - K1Element(1, 0), prime_power_modulus(other, 1)).is_zero()


def test_partial_generator_three_primes_experimental():
    M = make_modulus(PrimeProduct((K1Element(2, 1), K1Element(1, 2), K1Element(4, 1))))
    for target, p in enumerate(M.prime_norms, start=1):
        e = find_partial_generator(M, target)
        assert brute_order(e) == p - 1


@pytest.mark.parametrize("pi, k", [((2, 1), 1), ((2, 1), 2)])
def test_isomorphism_exhaustive(pi, k):
    rep = exhaustive_iso_check(prime_power_modulus(pi, k))
    assert rep.passed


@pytest.fixture(scope="module", params=[((2, 1), 1), ((2, 1), 2), ((1, 2), 2), "crt"])
def modulus(request):
    if request.param == "crt":
        return two_prime_modulus((2, 1), (1, 2))
    return prime_power_modulus(*request.param)


big = st.integers(-10**6, 10**6)


@settings(max_examples=300)
@given(a=big, b=big, ta=st.integers(-1000, 1000), tb=st.integers(-1000, 1000))
def test_reduce_properties(modulus, a, b, ta, tb):
    x = K1Element(a, b)
    r = reduce(x, modulus)
    assert reduce(r.rep, modulus) == r
    assert reduce(x + K1Element(ta, tb) * modulus.m, modulus) == r
    assert r.rep.norm() < modulus.ring_norm
    assert to_integer(r) == (a + b * modulus.v_image) % modulus.ring_norm


def test_ring_axioms_random(modulus):
    rng = random.Random(7)
    n = modulus.ring_norm
    for _ in range(300):
        x, y, z = (from_integer(rng.randrange(n), modulus) for _ in range(3))
        assert (x * y) * z == x * (y * z)
        assert x * (y + z) == x * y + x * z
        assert x * y == y * x
        assert x - y == x + (-y)
