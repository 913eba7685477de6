"""Cyclic codes over the finite quaternion integer rings H(K1)_{pi^2} and H(K1)_{pi1*pi2}."""

from .code_builder import CodeSpec, build_crt_code, build_pi2_code, encode, generator_matrix, is_codeword, shift
from .decoder import DecodeResult, Status, build_syndrome_table, decode, dlog_decode, syndrome
from .quat_core import K1Element, QuaternionInt, hamilton_mul, qm_weight, represent_prime
from .residue_ring import (
    Modulus,
    PrimePower,
    PrimeProduct,
    Residue,
    find_partial_generator,
    find_primitive_root,
    from_integer,
    make_modulus,
    reduce,
    to_integer,
    two_primes,
)

__version__ = "0.1.0"

__all__ = [
    "CodeSpec",
    "build_crt_code",
    "build_pi2_code",
    "encode",
    "generator_matrix",
    "is_codeword",
    "shift",
    "DecodeResult",
    "Status",
    "build_syndrome_table",
    "decode",
    "dlog_decode",
    "syndrome",
    "K1Element",
    "QuaternionInt",
    "hamilton_mul",
    "qm_weight",
    "represent_prime",
    "Modulus",
    "PrimePower",
    "PrimeProduct",
    "Residue",
    "find_partial_generator",
    "find_primitive_root",
    "from_integer",
    "make_modulus",
    "reduce",
    "to_integer",
    "two_primes",
]
