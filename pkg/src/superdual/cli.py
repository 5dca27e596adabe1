"""Command-line front end: ``superdual <command> [flags]``.

Exit codes: 0 success, 1 a verification suite failed, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import cinfty, glroots, superweyl, tensor
from .dualmaps import TailWeight
from .labels import Weight
from .partitions import FrobeniusCoordinates, Partition, conjugate, is_hook, modified_frobenius, natural_weight, osp_labels, rectangle_atypicality
from .polyring import LaurentSeries, render_text
from .suites import SUITES
from .symfunc import hook_schur
from .tableaux import character_via_tableaux


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _jsonable(obj):
    if isinstance(obj, LaurentSeries):
        return obj.to_json()
    if isinstance(obj, TailWeight):
        return obj.to_json()
    if isinstance(obj, Fraction):
        return str(obj) if obj.denominator != 1 else obj.numerator
    if isinstance(obj, (Partition, Weight)):
        return str(obj)
    if isinstance(obj, (set, frozenset)):
        return sorted(obj, key=repr)
    return str(obj)


def _text(value) -> str:
    if isinstance(value, LaurentSeries):
        return render_text(value)
    if isinstance(value, bool):
        return "true" if value else "false"
    if value is None:
        return "-"
    if isinstance(value, (list, tuple)) and not isinstance(value, (Partition, FrobeniusCoordinates)):
        return "[" + ", ".join(_text(v) for v in value) + "]"
    if isinstance(value, dict):
        return json.dumps(value, sort_keys=True, default=_jsonable)
    return str(value)


def emit(report, fmt: str = "text") -> str:
    """Render a report deterministically as text or JSON."""
    if fmt == "json":
        return json.dumps(report, sort_keys=True, indent=2, default=_jsonable)
    if isinstance(report, dict):
        return "\n".join(f"{key}: {_text(value)}" for key, value in report.items())
    return _text(report)


# -- argument helpers --------------------------------------------------------

def _partition(text: str) -> Partition:
    try:
        return Partition.parse(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from exc


def _nonneg(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}") from None
    if value < 0:
        raise argparse.ArgumentTypeError(f"expected a nonnegative integer, got {value}")
    return value


def _add_partition(p):
    p.add_argument("partition", nargs="?", type=_partition, help="partition such as 7,5,4,3,1")
    p.add_argument("--lambda", dest="lam", type=_partition, help="partition (alternative to the positional form)")


def _lam(args) -> Partition:
    if args.partition is not None and args.lam is not None and args.partition != args.lam:
        raise UsageError("partition given twice with different values")
    lam = args.lam if args.lam is not None else args.partition
    if lam is None:
        raise UsageError("a partition is required (positional or --lambda)")
    return lam


def _need(args, *names):
    for name in names:
        if getattr(args, name) is None:
            raise UsageError(f"--{name} is required for {args.command}")


def _hook(args, lam):
    if not is_hook(lam, args.m, args.n):
        raise UsageError(f"--lambda {lam} is not a ({args.m}|{args.n})-hook partition")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="superdual", description="Hook partitions, gl(m|n) and osp(2m|2n) characters, and super duality.")
    sub = parser.add_subparsers(dest="command", parser_class=_Parser)

    def command(name, help_text, partition=True, dims=("m", "n")):
        p = sub.add_parser(name, help=help_text)
        if partition:
            _add_partition(p)
        for dim in dims:
            p.add_argument(f"--{dim}", type=_nonneg)
        p.add_argument("--format", choices=("text", "json"), default="text")
        return p

    command("conjugate", "conjugate partition", dims=())
    command("frobenius", "modified Frobenius coordinates", dims=())
    command("hook-check", "is the partition an (m|n)-hook")
    command("hs", "hook Schur polynomial")
    command("char-tableaux", "character summed over hook tableaux")
    command("kac-char", "Kac module character of the natural weight")
    command("typicality", "typicality and degree of atypicality")
    p = command("extremal", "highest weight for another Borel subalgebra", dims=())
    p.add_argument("--word", required=True, help="Borel word over d/e, e.g. dede")
    command("osp-labels", "the two osp labels of a hook partition")
    command("hwv", "highest-weight vector and its checks", dims=("m", "n", "d"))
    command("decompose", "decompose the d-th tensor power", partition=False, dims=("m", "n", "d"))
    command("cinf-char", "c-infinity character", dims=("d", "cutoff", "kmax", "nvars"))
    command("osp-char", "osp(2m|2n) character", dims=("m", "n", "ell", "cutoff", "kmax"))
    p = sub.add_parser("verify", help="run a verification suite")
    p.add_argument("suite", choices=sorted(SUITES))
    for dim in ("m", "n", "d", "ell", "cutoff", "kmax"):
        p.add_argument(f"--{dim}", type=_nonneg)
    p.add_argument("--format", choices=("text", "json"), default="text")
    return parser


# -- commands ------------------------------------------------------------------

def _series_report(series, fmt):
    return series if fmt == "text" else {"series": series}


def _dispatch(args):
    cmd = args.command
    if cmd == "conjugate":
        return conjugate(_lam(args))
    if cmd == "frobenius":
        coords = modified_frobenius(_lam(args))
        return coords if args.format == "text" else {"p": list(coords.p), "q": list(coords.q)}
    if cmd == "decompose":
        _need(args, "m", "n", "d")
        return tensor.decompose(args.m, args.n, args.d)
    if cmd == "verify":
        options = {k: getattr(args, k) for k in ("m", "n", "d", "ell", "cutoff", "kmax")}
        return SUITES[args.suite](**options)
    lam = _lam(args)
    if cmd == "extremal":
        word = glroots.BorelWord(args.word)
        if not is_hook(lam, word.m, word.n):
            raise UsageError(f"--lambda {lam} is not a ({word.m}|{word.n})-hook partition")
        return glroots.extremal_weight(lam, word)
    if cmd == "cinf-char":
        _need(args, "d", "cutoff")
        return _series_report(cinfty.cinf_character(lam, args.d, args.cutoff, args.kmax, args.nvars), args.format)
    if cmd == "osp-char":
        _need(args, "m", "n", "ell", "cutoff")
        return _series_report(cinfty.osp_character(lam, args.m, args.n, args.ell, args.cutoff, args.kmax), args.format)
    _need(args, "m", "n")
    if cmd == "hook-check":
        return is_hook(lam, args.m, args.n)
    _hook(args, lam)
    if cmd == "hs":
        return _series_report(hook_schur(lam, (args.m, args.n)), args.format)
    if cmd == "char-tableaux":
        return _series_report(character_via_tableaux(lam, args.m, args.n), args.format)
    if cmd == "kac-char":
        return _series_report(glroots.kac_character(natural_weight(lam, args.m, args.n), args.m, args.n), args.format)
    if cmd == "typicality":
        typical, degree = glroots.typicality(natural_weight(lam, args.m, args.n), args.m, args.n)
        return {"typical": typical, "degree": degree, "rectangle": rectangle_atypicality(lam, args.m, args.n)}
    if cmd == "osp-labels":
        plus, minus = osp_labels(lam, args.m, args.n)
        return {"plus": plus, "minus": minus}
    if cmd == "hwv":
        _need(args, "d")
        return superweyl.hwv_report(lam, (args.m, args.n, args.d))
    raise UsageError(f"unknown command {cmd}")


def run(argv) -> tuple[int, str]:
    """Parse and execute; returns (exit status, rendered output)."""
    parser = build_parser()
    try:
        args = parser.parse_args(list(argv))
        if args.command is None:
            raise UsageError("a command is required")
        result = _dispatch(args)
    except SystemExit as exc:
        # --help already printed
        return int(exc.code or 0), ""
    except (UsageError, argparse.ArgumentTypeError) as exc:
        return 2, f"usage error: {exc}"
    except (ValueError, cinfty.RankError) as exc:
        return 2, f"error: {exc}"
    output = emit(result, args.format)
    if args.command == "verify" and not result["status"]:
        return 1, output
    return 0, output


def main(argv=None) -> int:
    code, output = run(sys.argv[1:] if argv is None else argv)
    stream = sys.stderr if code == 2 else sys.stdout
    print(output, file=stream)
    return code


if __name__ == "__main__":
    sys.exit(main())
