"""Command line: ``jackkernel <subcommand> ...``; JSON on stdout or to ``--output``.

Exit codes: 0 success, 1 verification failure, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from typing import List, Sequence

from .arith import ALPHA, SQRT, MultiPolyLoc, RatFunc, UniPoly, _format_sparse, scalar_to_json
from .config import LIMITS
from .jack import jack_character, jack_polynomial, normalized_character, specialize_alpha
from .ribbon import product_expansion
from .spectral import alpha_moments, cumulant_convert
from .stanley import lassalle_check, stanley_theta
from .suites import SUITES
from .symfun import Partition, PSPoly, make_partition


class UsageError(Exception):
    pass


# ---------------------------------------------------------------------------
# Serialization
# ---------------------------------------------------------------------------


def scalar_json(x) -> dict:
    if isinstance(x, UniPoly):
        terms = {(i,): c for i, c in enumerate(x.coeffs) if c}
        return {"num": _format_sparse(terms, (x.symbol,)), "den": "1"}
    return scalar_to_json(x)


def pspoly_json(f: PSPoly) -> dict:
    return {"basis": "powersum",
            "terms": [{"partition": list(k), "coeff": scalar_json(v)} for k, v in f.sorted_terms()]}


def stanley_json(p: MultiPolyLoc) -> dict:
    return {
        "symbols": list(p.symbols),
        "denominator_exponent": p.e,
        "monomials": [{"exponents": list(k), "coeff": scalar_json(v)} for k, v in p.sorted_terms()],
    }


def to_json(value):
    if isinstance(value, PSPoly):
        return pspoly_json(value)
    if isinstance(value, MultiPolyLoc) and len(value.symbols) > 1:
        return stanley_json(value)
    if isinstance(value, (RatFunc, MultiPolyLoc, UniPoly, Fraction)):
        return scalar_json(value)
    if isinstance(value, dict):
        return {str(k): to_json(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [to_json(v) for v in value]
    return value


def dumps(value) -> str:
    return json.dumps(to_json(value), sort_keys=True, separators=(",", ":"))


def json_export(value, path: str | None = None) -> str:
    text = dumps(value)
    if path:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
    else:
        print(text)
    return text


# ---------------------------------------------------------------------------
# Argument parsing
# ---------------------------------------------------------------------------


def parse_partition(text: str) -> Partition:
    text = text.strip()
    if not text:
        return ()
    try:
        parts = [int(x) for x in text.split(",")]
    except ValueError:
        raise UsageError(f"malformed partition {text!r}: expected comma-separated positive integers")
    try:
        return make_partition(parts)
    except ValueError as exc:
        raise UsageError(str(exc))


def parse_lengths(text: str) -> List[int]:
    try:
        out = [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise UsageError(f"malformed length list {text!r}")
    if not out or any(x < 2 for x in out):
        raise UsageError("lengths must be integers >= 2")
    return out


def _guard(value: int, limit: int, what: str) -> None:
    if value > limit:
        raise UsageError(f"{what} = {value} exceeds the guard {limit}")


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="jackkernel", description="Jack polynomials and characters with exact arithmetic.")
    p.add_argument("--output", "-o", help="write JSON to this file instead of stdout")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    j = sub.add_parser("jack", help="Jack polynomial in the power-sum basis")
    j.add_argument("partition")
    j.add_argument("--ring", choices=["alpha", "sqrt"], default="alpha")
    j.add_argument("--alpha", help="specialize alpha to a rational p/q")

    c = sub.add_parser("character", help="theta_mu(lambda) and Ch_mu(lambda)")
    c.add_argument("mu")
    c.add_argument("lam")

    s = sub.add_parser("stanley", help="character in multirectangular coordinates")
    s.add_argument("mu")
    s.add_argument("--rects", type=int, required=True)
    s.add_argument("--check", action="store_true", help="exit 1 unless the positivity audit passes")

    m = sub.add_parser("moments", help="transition-measure moments or cumulants")
    m.add_argument("lam")
    m.add_argument("--lmax", type=int, required=True)
    kind = m.add_mutually_exclusive_group()
    kind.add_argument("--boolean", action="store_true")
    kind.add_argument("--free", action="store_true")

    e = sub.add_parser("expand", help="ribbon-path expansion in normalized characters")
    e.add_argument("lengths")
    e.add_argument("--moment", action="store_true")

    v = sub.add_parser("verify", help="run a named verification suite")
    v.add_argument("suite", choices=sorted(SUITES))
    v.add_argument("--max-size", type=int)
    return p


# ---------------------------------------------------------------------------
# Commands
# ---------------------------------------------------------------------------


def _cmd_jack(args) -> tuple:
    lam = parse_partition(args.partition)
    _guard(sum(lam), LIMITS.max_weight, "|lambda|")
    if args.alpha is not None:
        try:
            a = Fraction(args.alpha)
        except (ValueError, ZeroDivisionError):
            raise UsageError(f"malformed rational {args.alpha!r}")
        return specialize_alpha(jack_polynomial(lam), a), 0
    ring = SQRT if args.ring == "sqrt" else ALPHA
    return jack_polynomial(lam, ring), 0


def _cmd_character(args) -> tuple:
    mu = parse_partition(args.mu)
    lam = parse_partition(args.lam)
    _guard(sum(lam), LIMITS.max_weight, "|lambda|")
    return {"theta": jack_character(mu, lam), "ch": normalized_character(mu, lam)}, 0


def _cmd_stanley(args) -> tuple:
    mu = parse_partition(args.mu)
    _guard(sum(mu), LIMITS.max_weight, "|mu|")
    if args.rects < 0:
        raise UsageError("--rects must be nonnegative")
    _guard(args.rects, max(LIMITS.max_rects, 3), "k")
    rep = lassalle_check(mu, args.rects)
    out = {
        "theta": stanley_json(stanley_theta(mu, args.rects)),
        "lassalle": {
            "polynomial": stanley_json(rep.polynomial),
            "variables": ["b"] + [f"-s{i}" for i in range(1, args.rects + 1)]
                         + [f"r{i}" for i in range(1, args.rects + 1)],
            "nonnegative": rep.nonnegative,
            "integral": rep.integral,
            "witnesses": list(rep.witnesses),
        },
    }
    code = 1 if args.check and not rep.passed else 0
    return out, code


def _cmd_moments(args) -> tuple:
    lam = parse_partition(args.lam)
    _guard(sum(lam), LIMITS.max_weight, "|lambda|")
    if args.lmax < 0:
        raise UsageError("--lmax must be nonnegative")
    mom = alpha_moments(lam, args.lmax)
    if args.boolean or args.free:
        cum = cumulant_convert(mom, "boolean" if args.boolean else "free")
        return {"kind": cum.kind, "values": {str(k): v for k, v in sorted(cum.values.items())}}, 0
    return {"kind": "moments", "values": list(mom.values)}, 0


def _cmd_expand(args) -> tuple:
    lengths = parse_lengths(args.lengths)
    _guard(sum(lengths), LIMITS.max_ribbon_length, "sum of lengths")
    exp = product_expansion(lengths, "moment" if args.moment else "boolean")
    return {"mode": "moment" if args.moment else "boolean",
            "terms": [{"partition": list(k), "coeff": scalar_json(v)}
                      for k, v in sorted(exp.items(), key=lambda kv: (sum(kv[0]), [-x for x in kv[0]]))]}, 0


def _cmd_verify(args) -> tuple:
    fn = SUITES[args.suite]
    kwargs = {}
    if args.max_size is not None:
        if args.max_size < 0:
            raise UsageError("--max-size must be nonnegative")
        _guard(args.max_size, max(LIMITS.max_weight, LIMITS.max_ribbon_length), "--max-size")
        kwargs["max_size"] = args.max_size
    res = fn(**kwargs)
    return res.as_dict(), 0 if res.passed else 1


COMMANDS = {
    "jack": _cmd_jack,
    "character": _cmd_character,
    "stanley": _cmd_stanley,
    "moments": _cmd_moments,
    "expand": _cmd_expand,
    "verify": _cmd_verify,
}


def cli_run(argv: Sequence[str] | None = None) -> int:
    try:
        args = build_parser().parse_args(list(argv) if argv is not None else None)
        value, code = COMMANDS[args.command](args)
    except UsageError as exc:
        print(f"jackkernel: error: {exc}", file=sys.stderr)
        return 2
    try:
        json_export(value, args.output)
    except OSError as exc:
        print(f"jackkernel: cannot write output: {exc}", file=sys.stderr)
        return 2
    return code


def main() -> None:
    sys.exit(cli_run())


if __name__ == "__main__":
    main()
