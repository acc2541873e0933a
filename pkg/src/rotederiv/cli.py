"""Command-line interface.

Exit codes: 0 ok, 2 bad arguments, 3 invalid mathematical input,
4 a cross-check or verification disagreed.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Any, Sequence

from .iet import iet3_code, iet3_params
from .morphisms import DirectiveParseError, DirectiveSpec, InvalidDirective, is_primitive
from .oracle import derived_scan
from .rote import generate_rote, prefix_matrix, prefix_type, rote_derived, rote_prefix, rote_return_words
from .sturmian import SturmianContext, adaptive_text, bispecial_prefix, generate, return_words
from .substitutive import derived_inventory, fixing_morphisms, four_letter_sides, verify_fixing

EXIT_OK, EXIT_USAGE, EXIT_INVALID, EXIT_MISMATCH = 0, 2, 3, 4

DEFAULT_WORD_LENGTH = 40
DEFAULT_VERIFY_LENGTH = 200


class CheckFailed(Exception):
    def __init__(self, message: str, payload: dict[str, Any]) -> None:
        super().__init__(message)
        self.payload = payload


def _non_negative(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"{text!r} is not an integer") from None
    if value < 0:
        raise argparse.ArgumentTypeError("must be non-negative")
    return value


def _at_least(minimum: int):
    def parse(text: str) -> int:
        value = _non_negative(text)
        if value < minimum:
            raise argparse.ArgumentTypeError(f"must be at least {minimum}")
        return value

    return parse


def _context(text: str) -> SturmianContext:
    return SturmianContext(DirectiveSpec.parse(text))


def oracle_derived(ctx: SturmianContext, n: int, length: int) -> str:
    """``d_v(x^(n))`` by scanning a Rote prefix, named by the structural triple."""
    x = rote_prefix(ctx, n)
    naming = {w: name for name, w in rote_return_words(ctx, n).as_dict().items()}
    longest = max(map(len, naming))
    size = length * longest + len(x) + 1
    while True:
        text = adaptive_text(lambda m: generate_rote(ctx, m), x, size, min_occurrences=length + 1)
        word = derived_scan(x, text, naming)
        if len(word) >= length:
            return word[:length]
        size = 2 * len(text)


def cmd_generate(args: argparse.Namespace) -> dict[str, Any]:
    ctx = _context(args.directive)
    make = generate if args.kind == "sturmian" else generate_rote
    return {"kind": args.kind, "length": args.length, "word": make(ctx, args.length)}


def cmd_analyze(args: argparse.Namespace) -> dict[str, Any]:
    ctx = _context(args.directive)
    n = args.index
    pair = return_words(ctx, n)
    triple = rote_return_words(ctx, n)
    return {
        "index": n,
        "w": bispecial_prefix(ctx, n),
        "r": pair.r,
        "s": pair.s,
        "P": prefix_matrix(ctx, n).to_list(),
        "type": str(prefix_type(ctx, n)),
        "x": rote_prefix(ctx, n),
        "A": triple.A,
        "B": triple.B,
        "C": triple.C,
    }


def cmd_derive(args: argparse.Namespace) -> dict[str, Any]:
    ctx = _context(args.directive)
    word = rote_derived(ctx, args.index, args.length)
    payload: dict[str, Any] = {"index": args.index, "length": args.length, "word": word, "check": args.check}
    if args.check == "none":
        return payload
    if args.check == "oracle":
        other = oracle_derived(ctx, args.index, args.length)
    else:
        other = iet3_code(iet3_params(ctx, args.index), args.length)
    payload["reference"] = other
    payload["agreement"] = other == word
    if other != word:
        raise CheckFailed(f"{args.check} cross-check disagrees", payload)
    return payload


def cmd_fix(args: argparse.Namespace) -> dict[str, Any]:
    fixing = fixing_morphisms(args.z)
    inventory = derived_inventory(args.z, fingerprint_length=1)
    ctx = SturmianContext(DirectiveSpec.periodic(args.z))
    entries = []
    ok = True
    for i, sigma in enumerate(fixing.sigmas):
        prefix = rote_derived(ctx, i, args.verify_length)
        primitive = is_primitive(sigma)
        verified = verify_fixing(sigma, prefix)
        ok = ok and primitive and verified
        entries.append(
            {
                "i": i,
                "type": str(inventory.entries[i].type),
                "sigma": {a: sigma[a] for a in sigma.alphabet},
                "duplicate_of": fixing.duplicates.get(i),
                "primitive": primitive,
                "verified": verified,
            }
        )
    payload = {
        "z": args.z,
        "q": fixing.q,
        "period": len(fixing.sigmas),
        "distinct": inventory.count,
        "verify_length": args.verify_length,
        "morphisms": entries,
        "ok": ok,
    }
    if not ok:
        raise CheckFailed("a fixing morphism failed verification", payload)
    return payload


def cmd_rote7(args: argparse.Namespace) -> dict[str, Any]:
    left, right = four_letter_sides(args.n, args.length)
    payload = {"n": args.n, "length": args.length, "pi": left, "rho": right, "agreement": left == right}
    if left != right:
        raise CheckFailed("projections disagree", payload)
    return payload


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="rotederiv", description=__doc__.splitlines()[0])
    parser.add_argument("--format", choices=("text", "json"), default="text")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("generate", help="prefix of the Sturmian or Rote sequence")
    p.add_argument("--directive", required=True, help='eventually periodic directive, e.g. "|bB" or "b|bB"')
    p.add_argument("--kind", choices=("sturmian", "rote"), default="sturmian")
    p.add_argument("--length", type=_non_negative, default=DEFAULT_WORD_LENGTH)
    p.set_defaults(func=cmd_generate)

    p = sub.add_parser("analyze", help="bispecial prefix, return words and type at one index")
    p.add_argument("--directive", required=True)
    p.add_argument("--index", type=_non_negative, default=0)
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("derive", help="derivated Rote sequence with optional cross-check")
    p.add_argument("--directive", required=True)
    p.add_argument("--index", type=_non_negative, default=0)
    p.add_argument("--length", type=_non_negative, default=DEFAULT_WORD_LENGTH)
    p.add_argument("--check", choices=("none", "oracle", "iet"), default="none")
    p.set_defaults(func=cmd_derive)

    p = sub.add_parser("fix", help="morphisms fixing the derivated sequences of z^inf")
    p.add_argument("--z", required=True, help="finite period over {b, B}")
    p.add_argument("--verify-length", type=_at_least(2), default=DEFAULT_VERIFY_LENGTH)
    p.set_defaults(func=cmd_fix)

    p = sub.add_parser("rote7", help="compare the two four-letter constructions")
    p.add_argument("--n", type=_non_negative, default=0)
    p.add_argument("--length", type=_at_least(1), default=DEFAULT_VERIFY_LENGTH)
    p.set_defaults(func=cmd_rote7)
    return parser


def _text_value(value: Any) -> str:
    if value == "":
        return "(empty)"
    if isinstance(value, dict):
        return ", ".join(f"{k}->{_text_value(v)}" for k, v in value.items())
    if isinstance(value, list) and value and isinstance(value[0], list):
        return "[" + ",".join("[" + ",".join(map(str, row)) + "]" for row in value) + "]"
    if value is None:
        return "-"
    if isinstance(value, bool):
        return str(value).lower()
    return str(value)


def render_text(envelope: dict[str, Any]) -> str:
    lines = [f"command: {envelope['command']}"]
    if envelope["directive"] is not None:
        lines.append(f"directive: {envelope['directive']}")
    for key, value in envelope["payload"].items():
        if isinstance(value, list) and value and isinstance(value[0], dict):
            lines.append(f"{key}:")
            for item in value:
                lines.append("  " + "; ".join(f"{k}: {_text_value(v)}" for k, v in item.items()))
        else:
            lines.append(f"{key}: {_text_value(value)}")
    return "\n".join(lines)


def render(envelope: dict[str, Any], fmt: str) -> str:
    if fmt == "json":
        return json.dumps(envelope, sort_keys=False)
    return render_text(envelope)


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    directive = getattr(args, "directive", None) or getattr(args, "z", None)
    envelope: dict[str, Any] = {"command": args.command, "directive": directive}
    code = EXIT_OK
    try:
        envelope["payload"] = args.func(args)
    except DirectiveParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except InvalidDirective as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except CheckFailed as exc:
        print(f"error: {exc}", file=sys.stderr)
        envelope["payload"] = exc.payload
        code = EXIT_MISMATCH
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    print(render(envelope, args.format))
    return code


if __name__ == "__main__":
    sys.exit(main())
