"""
quatcodes command line.

Exit codes: 0 ok, 1 usage/parse/precondition error, 2 uncorrectable word,
3 verification failure. All randomness is drawn from random.Random(--seed).
"""

from __future__ import annotations

import argparse
import random
import sys
from pathlib import Path
from typing import Optional, Sequence

from .code_builder import CodeSpec, build_crt_code, build_pi2_code, encode, default_code
from .decoder import Status, build_syndrome_table, decode
from .errors import ParseError, QuatCodeError
from .poly_ring import format_coeffs, parse_coeffs
from .quat_core import K1Element, format_element, parse_element, represent_prime
from .residue_ring import Residue, find_primitive_root, prime_power_modulus
from .verify import format_report, run_verification

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_UNCORRECTABLE = 2
EXIT_VERIFY = 3


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):  # exit 1 instead of argparse's 2, which means "uncorrectable" here
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


class UsageError(Exception):
    pass


def _element(text: str) -> K1Element:
    return parse_element(text)


def _sign(text: str) -> int:
    t = text.strip()
    if t in ("+", "+1", "1"):
        return 1
    if t in ("-", "-1"):
        return -1
    raise argparse.ArgumentTypeError(f"sign must be +1 or -1, got {text!r}")


def _load_code(path: str, validate: bool = True) -> CodeSpec:
    return CodeSpec.from_json(Path(path).read_text(encoding="utf-8"), validate=validate)


def _word(code: CodeSpec, text: str, length: int, what: str) -> list[Residue]:
    coeffs = parse_coeffs(text, code.modulus)
    if len(coeffs) > length:
        raise UsageError(f"{what} has {len(coeffs)} coefficients, at most {length} allowed")
    return coeffs + [code.modulus.zero()] * (length - len(coeffs))


def _format_error_value(v: Residue) -> str:
    if v.rep.b == 0:
        return f"{v.rep.a:+d}"
    return format_element(v.rep)


def _emit_code(code: CodeSpec, out: Optional[str]) -> None:
    text = code.to_json()
    if out is None:
        sys.stdout.write(text)
    else:
        Path(out).write_text(text, encoding="utf-8")
        print(f"wrote {out}: length {code.length}, modulus {format_element(code.modulus.m)}, "
              f"root {code.root}")


def cmd_prime(args) -> int:
    pi = represent_prime(args.p)
    if pi is None:
        print(f"no H(K1) representation for {args.p}", file=sys.stderr)
        return EXIT_USAGE
    print(f"pi = {format_element(pi)}  (norm {pi.norm()})")
    return EXIT_OK


def cmd_table(args) -> int:
    M = prime_power_modulus(args.pi, args.power)
    g = find_primitive_root(M, args.alpha)
    lines = []
    x = M.one()
    for s in range(args.limit):
        lines.append(f"{s}\t{x}")
        x = x * g
    sys.stdout.write("\n".join(lines) + ("\n" if lines else ""))
    return EXIT_OK


def cmd_build(args) -> int:
    _emit_code(build_pi2_code(args.pi, args.alpha, args.power), args.out)
    return EXIT_OK


def cmd_build_crt(args) -> int:
    _emit_code(build_crt_code(args.pi1, args.pi2, args.target), args.out)
    return EXIT_OK


def cmd_encode(args) -> int:
    code = _load_code(args.code)
    msg = _word(code, args.msg, code.dimension, "message")
    print(format_coeffs(encode(code, msg)))
    return EXIT_OK


def cmd_corrupt(args) -> int:
    code = _load_code(args.code)
    word = _word(code, args.word, code.length, "word")
    rng = random.Random(args.seed)
    pos = args.pos if args.pos is not None else rng.randrange(code.length)
    sign = args.sign if args.sign is not None else rng.choice((1, -1))
    if not 0 <= pos < code.length:
        raise UsageError(f"--pos must be in 0..{code.length - 1}")
    M = code.modulus
    word[pos] = word[pos] + (M.one() if sign == 1 else -M.one())
    print(f"injected {sign:+d} @ {pos}", file=sys.stderr)
    print(format_coeffs(word))
    return EXIT_OK


def cmd_decode(args) -> int:
    code = _load_code(args.code)
    word = _word(code, args.word, code.length, "word")
    res = decode(code, build_syndrome_table(code), word)
    if res.status is Status.CLEAN:
        print("clean")
    elif res.status is Status.CORRECTED:
        pos, value = res.error
        print(f"corrected: yes  error: {_format_error_value(value)} @ {pos}")
    else:
        print("corrected: no  uncorrectable")
    print(f"word: {format_coeffs(res.corrected)}")
    return EXIT_UNCORRECTABLE if res.status is Status.UNCORRECTABLE else EXIT_OK


def cmd_verify(args) -> int:
    code = _load_code(args.code, validate=False) if args.code else default_code()
    checks = run_verification(code, trials=args.trials, seed=args.seed)
    sys.stdout.write(format_report(code, checks))
    return EXIT_OK if all(c.ok for c in checks) else EXIT_VERIFY


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="quatcodes", description="Cyclic codes over finite quaternion integer rings.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("prime", help="canonical a + b*w of norm p")
    p.add_argument("--p", type=int, required=True)
    p.set_defaults(func=cmd_prime)

    p = sub.add_parser("table", help="powers of the primitive root, as TSV")
    p.add_argument("--pi", type=_element, required=True)
    p.add_argument("--power", type=int, default=2)
    p.add_argument("--alpha", type=_element, default=None)
    p.add_argument("--limit", type=int, default=24)
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("build", help="code of length phi(p^k)/2 over H(K1)_{pi^k}")
    p.add_argument("--pi", type=_element, required=True)
    p.add_argument("--power", type=int, default=2)
    p.add_argument("--alpha", type=_element, default=None)
    p.add_argument("--out")
    p.set_defaults(func=cmd_build)

    p = sub.add_parser("build-crt", help="code of length phi(p_target) over H(K1)_{pi1*pi2}")
    p.add_argument("--pi1", type=_element, required=True)
    p.add_argument("--pi2", type=_element, required=True)
    p.add_argument("--target", type=int, choices=(1, 2), required=True)
    p.add_argument("--out")
    p.set_defaults(func=cmd_build_crt)

    p = sub.add_parser("encode", help="encode a message polynomial")
    p.add_argument("--code", required=True)
    p.add_argument("--msg", required=True)
    p.set_defaults(func=cmd_encode)

    p = sub.add_parser("corrupt", help="add +-1 at one position")
    p.add_argument("--code", required=True)
    p.add_argument("--word", required=True)
    p.add_argument("--pos", type=int)
    p.add_argument("--sign", type=_sign)
    p.add_argument("--seed", type=int, default=42)
    p.set_defaults(func=cmd_corrupt)

    p = sub.add_parser("decode", help="syndrome-decode a received word")
    p.add_argument("--code", required=True)
    p.add_argument("--word", required=True)
    p.set_defaults(func=cmd_decode)

    p = sub.add_parser("verify", help="oracle cross-checks and round-trip decoding")
    p.add_argument("--code")
    p.add_argument("--trials", type=int, default=200)
    p.add_argument("--seed", type=int, default=42)
    p.set_defaults(func=cmd_verify)
    return parser


# literals such as "-1+1w,1" would otherwise be taken for option flags
_LITERAL_FLAGS = {"--pi", "--pi1", "--pi2", "--alpha", "--msg", "--word", "--sign"}


def _glue_literals(argv: Sequence[str]) -> list[str]:
    out: list[str] = []
    it = iter(argv)
    for tok in it:
        if tok in _LITERAL_FLAGS:
            nxt = next(it, None)
            out.append(tok if nxt is None else f"{tok}={nxt}")
        else:
            out.append(tok)
    return out


def main(argv: Optional[Sequence[str]] = None) -> int:
    argv = sys.argv[1:] if argv is None else argv
    args = build_parser().parse_args(_glue_literals(argv))
    try:
        return args.func(args)
    except (QuatCodeError, UsageError, ParseError, ValueError, KeyError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
