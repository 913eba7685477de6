"""
Regenerate tests/fixtures/derived_constants.json from brute-force oracles only.

Nothing here calls the fast paths (find_primitive_root, find_partial_generator,
order, inverse, divide_by_linear); every value comes from a linear scan or an
exhaustive check.
"""

import json
from pathlib import Path

from quatcodes.oracle import brute_order, brute_search_element, exhaustive_iso_check
from quatcodes.quat_core import K1Element
from quatcodes.residue_ring import from_integer, prime_power_modulus, residue, to_integer, two_prime_modulus

OUT = Path(__file__).resolve().parent.parent / "tests" / "fixtures" / "derived_constants.json"


def scan_v_image(m, n):
    """t in [0, n) with a_m + b_m*t = 0 and t^2 = -3 (mod n), by scanning."""
    hits = [t for t in range(n) if (m[0] + m[1] * t) % n == 0 and (t * t + 3) % n == 0]
    assert len(hits) == 1, hits
    return hits[0]


def scan_inverse(x, n):
    return next(y for y in range(1, n) if x * y % n == 1)


def main():
    pi = K1Element(2, 1)
    sq = prime_power_modulus(pi, 2)
    crt = two_prime_modulus((2, 1), (1, 2))
    crt2 = two_prime_modulus((2, 1), (4, 1))
    alpha = residue((1, -1), sq)

    data = {
        "_generated_by": "scripts/gen_fixtures.py via quatcodes.oracle (brute_order, "
        "brute_search_element, exhaustive_iso_check) and linear scans",
        "pi2_modulus": {"m": list(sq.m), "N": sq.ring_norm, "t": scan_v_image(sq.m, sq.ring_norm)},
        "crt_modulus": {"m": list(crt.m), "N": crt.ring_norm, "t": scan_v_image(crt.m, crt.ring_norm)},
        "alpha_integer": to_integer(alpha),
        "alpha_order": brute_order(alpha),
        "alpha_inverse_integer": scan_inverse(to_integer(alpha), sq.ring_norm),
        "least_primitive_root_49": to_integer(brute_search_element(sq, 42)),
        "partial_generators": {},
        "least_primitive_roots": {},
        "iso_pairs": {},
    }
    for M, pair in ((crt, "2,1|1,2"), (crt2, "2,1|4,1")):
        p1, p2 = M.prime_norms
        pis = M.provenance.primes
        e2 = brute_search_element(M, p2 - 1, (pis[0],))
        e1 = brute_search_element(M, p1 - 1, (pis[1],))
        data["partial_generators"][pair] = {
            "target1": {"integer": to_integer(e1), "rep": list(e1.rep)},
            "target2": {"integer": to_integer(e2), "rep": list(e2.rep)},
        }
    for p, pi_p in ((7, (2, 1)), (13, (1, 2)), (19, (4, 1)), (31, (2, 3)), (37, (5, 2)), (43, (4, 3))):
        M = prime_power_modulus(pi_p, 2)
        g = brute_search_element(M, p * (p - 1))
        data["least_primitive_roots"][str(p)] = {"integer": to_integer(g), "rep": list(g.rep)}
    for label, M in (("7", prime_power_modulus(pi, 1)), ("49", sq), ("91", crt)):
        rep = exhaustive_iso_check(M)
        assert rep.passed
        data["iso_pairs"][label] = rep.pairs
    # sanity: the integer images above map back to the representatives recorded
    assert from_integer(15, crt).rep == (-4, 1)

    OUT.write_text(json.dumps(data, indent=2) + "\n", encoding="utf-8")
    print(f"wrote {OUT}")


if __name__ == "__main__":
    main()
