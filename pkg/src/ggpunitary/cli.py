"""Command-line interface: ``ggp-unitary <subcommand> ...``.

Exit status is 0 on success, 1 when a verification fails and 2 for usage or
domain errors.
"""

from __future__ import annotations

import argparse
import json
import sys
import warnings

from .classes import enumerate_class_types, orbit_count
from .multiplicity import (
    SmallFieldWarning,
    check_field_size,
    extended_multiplicity,
    ggp_model,
    unipotent_multiplicity,
)
from .partitions import format_partition, parse_partition
from .qseries import is_odd_prime_power, require_odd_prime_power, unipotent_degree
from .spectral import restriction_decomposition, verify_dimension_identity, weil_decomposition
from .theta import theta_set
from .verify import SUITES, run_suites


class UsageError(Exception):
    pass


def _partition_arg(text):
    try:
        return parse_partition(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _bool_arg(text):
    value = text.strip().lower()
    if value in ("1", "true", "yes", "y", "on"):
        return True
    if value in ("0", "false", "no", "n", "off"):
        return False
    raise argparse.ArgumentTypeError(f"expected a boolean, got {text!r}")


def _int_list(text):
    try:
        return [int(tok) for tok in text.split(",") if tok]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected integers, got {text!r}") from None


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        raise UsageError(f"{self.prog}: error: {message}")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="ggp-unitary", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("mult", help="GGP multiplicity of a unipotent pair")
    p.add_argument("--lam", type=_partition_arg, required=True)
    p.add_argument("--lamp", type=_partition_arg, required=True)
    p.add_argument("--ell", type=int, default=0,
                   help="rank of the extra factor carrying pi in E(U_ell, s), 1 not in s")
    p.add_argument("--regular", type=_bool_arg, default=True,
                   help="whether pi is the regular character of its series")
    p.add_argument("--q", type=int, default=None)
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("theta", help="unipotent theta lift")
    p.add_argument("--lam", type=_partition_arg, required=True)
    p.add_argument("--target", type=int, required=True)
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("degree", help="degree of a unipotent character")
    p.add_argument("--lam", type=_partition_arg, required=True)
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("classes", help="semisimple class types of U_k(F_q)")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--allow-one", action="store_true", help="keep eigenvalue 1")
    p.add_argument("--census-only", action="store_true", help="only print orbit counts")
    p.add_argument("--json", action="store_true")

    for name, text in (("branch", "restriction to U_{n-1}"), ("weil", "tensor with the Weil representation")):
        p = sub.add_parser(name, help=f"decomposition of the {text}")
        p.add_argument("--lam", type=_partition_arg, required=True)
        p.add_argument("--q", type=int, required=True)
        p.add_argument("--json", action="store_true")

    p = sub.add_parser("verify", help="run verification suites")
    p.add_argument("--suite", action="append", default=None,
                   help=f"suite name (repeatable or comma separated): all, {', '.join(SUITES)}")
    p.add_argument("--q", type=_int_list, action="append", default=None,
                   help="field sizes for the dimension suite")
    p.add_argument("--max-n", type=int, default=None)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--out", default=None, help="also write the report to this file")
    p.add_argument("--json", action="store_true")
    return parser


def _emit(args, payload, text_lines):
    if args.json:
        print(json.dumps(payload, sort_keys=True))
    else:
        for line in text_lines:
            print(line)


def _cmd_mult(args):
    lam, mu = args.lam, args.lamp
    warned = False
    if args.q is not None:
        require_odd_prime_power(args.q)
        with warnings.catch_warnings(record=True) as caught:
            warnings.simplefilter("always", SmallFieldWarning)
            warned = check_field_size(args.q)
        for w in caught:
            print(f"warning: {w.message}", file=sys.stderr)
    if args.ell:
        value = extended_multiplicity(lam, mu, args.ell, args.regular)
        small = args.ell + mu.size
    else:
        value = unipotent_multiplicity(lam, mu)
        small = mu.size
    big = lam.size
    model = ggp_model(max(big, small), min(big, small))
    payload = {"lam": list(lam), "lamp": list(mu), "ell": args.ell,
               "model": model.value, "multiplicity": value}
    if warned:
        payload["warning"] = "small-q"
    _emit(args, payload, [f"model={model.value} multiplicity={value}"])
    return 0


def _cmd_theta(args):
    ts = theta_set(args.lam, args.target)
    payload = {"members": [list(mu) for mu in ts.members]}
    _emit(args, payload, [format_partition(mu) for mu in ts.members] or ["(empty)"])
    return 0


def _cmd_degree(args):
    require_odd_prime_power(args.q)
    deg = unipotent_degree(args.lam, args.q)
    _emit(args, {"lambda": list(args.lam), "q": args.q, "degree": str(deg)}, [f"degree={deg}"])
    return 0


def _cmd_classes(args):
    if args.census_only:
        if args.q < 2:
            raise ValueError("q must be at least 2")
        counts = {d: orbit_count(d, args.q) for d in range(1, args.k + 1)}
        payload = {"q": args.q, "orbits": {str(d): str(c) for d, c in counts.items()}}
        _emit(args, payload, [f"d={d} orbits={c}" for d, c in counts.items()])
        return 0
    if not is_odd_prime_power(args.q):
        raise ValueError(f"q={args.q} must be an odd prime power (use --census-only for other q)")
    families = enumerate_class_types(args.k, args.q, exclude_one=not args.allow_one)
    rows = []
    lines = [f"{'type':<28} {'centralizer':>16} {'count':>10}"]
    for fam in families:
        order = fam.class_type.centralizer_order(args.q).total
        rows.append({"class_type": fam.class_type.to_json(),
                     "centralizer_order": str(order), "count": str(fam.count)})
        lines.append(f"{fam.class_type.label():<28} {order:>16} {fam.count:>10}")
    total = sum(f.count for f in families)
    lines.append(f"total classes: {total}")
    _emit(args, {"k": args.k, "q": args.q, "exclude_one": not args.allow_one,
                 "families": rows, "total": str(total)}, lines)
    return 0


def _cmd_decompose(args):
    build = restriction_decomposition if args.command == "branch" else weil_decomposition
    dec = build(args.lam, args.q)
    report = verify_dimension_identity(dec)
    payload = {
        "source": list(dec.source),
        "q": dec.q,
        "kind": dec.kind.value,
        "terms": [t.to_json() for t in dec.terms],
        "summary": {"total": str(report.total), "expected": str(report.expected), "ok": report.ok},
    }
    _emit(args, payload, report.lines())
    return 0 if report.ok else 1


def _cmd_verify(args):
    selection = []
    for item in args.suite or ["all"]:
        selection += [s for s in item.split(",") if s]
    qs = [q for chunk in args.q for q in chunk] if args.q else None
    if qs:
        for q in qs:
            require_odd_prime_power(q)
    reports = run_suites(selection, max_n=args.max_n, qs=qs, jobs=max(1, args.jobs))
    ok = all(r.ok for r in reports)
    if args.json:
        text = json.dumps({"ok": ok, "suites": [r.to_json() for r in reports]}, sort_keys=True)
    else:
        lines = []
        for r in reports:
            lines.append(r.line())
            lines += [f"    {i}: expected {e}, got {g}" for i, e, g in r.failures]
        lines.append("OK" if ok else "FAILED")
        text = "\n".join(lines)
    print(text)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text + "\n")
    return 0 if ok else 1


COMMANDS = {
    "mult": _cmd_mult,
    "theta": _cmd_theta,
    "degree": _cmd_degree,
    "classes": _cmd_classes,
    "branch": _cmd_decompose,
    "weil": _cmd_decompose,
    "verify": _cmd_verify,
}


def run_cli(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except UsageError as exc:
        print(exc, file=sys.stderr)
        return 2
    except SystemExit as exc:  # --help
        return int(exc.code or 0)
    try:
        return COMMANDS[args.command](args)
    except (ValueError, ArithmeticError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run_cli())


if __name__ == "__main__":
    main()
