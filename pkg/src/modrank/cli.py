"""``modrank`` command-line interface.

Every command builds a JSON-serializable report; ``--json`` prints it
verbatim (sorted keys), otherwise it is rendered as indented text.

Exit codes: 0 success, 2 verdict "no", 3 verdict unknown or budget
exceeded, 64 usage error, 65 bad input or unmet precondition.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time
from math import gcd
from pathlib import Path

from . import __version__
from .chop import chop, frattini, semisimple_decompose, socle
from .errors import BudgetExceeded, ModrankError, UnknownFixture
from .fgmod import quotient_module, restrict
from .field import field_of_order
from .fixtures import fixture, fixture_names, sample_planted
from .genprop import (
    DEFAULT_BUDGET,
    brauer_count,
    d_min,
    has_r_gen_property,
    nns_count,
    theorem2_report,
    theorem3_series,
)
from .grpalg import regular_module
from .instance import Instance, instance_from_module, load_instance
from . import oracle

EXIT_OK = 0
EXIT_NO = 2
EXIT_UNKNOWN = 3
EXIT_USAGE = 64
EXIT_DATA = 65


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # argparse would exit with status 2
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _default_seed() -> int:
    raw = os.environ.get("MODRANK_SEED")
    if raw is None or raw == "":
        return 0
    try:
        return int(raw)
    except ValueError:
        raise UsageError(f"MODRANK_SEED must be an integer, got {raw!r}") from None


def resolve_instance(arg: str) -> Instance:
    """A path to an instance file, or the name of a bundled fixture."""
    path = Path(arg)
    if path.is_file():
        return load_instance(path)
    name = path.name[:-5] if path.name.endswith(".json") else arg
    try:
        return fixture(name)
    except UnknownFixture:
        raise UnknownFixture(f"{arg}: no such file or fixture") from None


def _basis(U) -> list:
    return U.basis.tolist()


def _dmin_block(M, seed, comp=None) -> tuple[dict, list]:
    res = d_min(M, seed, comp)
    findings = []
    if res.divergent:
        findings.append({
            "kind": "width_divergence",
            "d": res.d,
            "paper_width_d": res.paper_d,
            "detail": "largest homogeneous width of the Frattini quotient differs from the generator count",
        })
    return res.to_dict(), findings


def cmd_analyze(inst: Instance, args) -> tuple[dict, list, int]:
    M = inst.module
    comp = chop(M, args.seed)
    fr = frattini(M, args.seed, comp)
    soc = socle(M, args.seed, comp)
    N, _, _ = quotient_module(M, fr.space)
    dec = semisimple_decompose(N, args.seed, comp, check=False)
    dm, findings = _dmin_block(M, args.seed, comp)
    results = {
        "dim": M.dim,
        "group_order": M.group.order,
        "field_order": M.field.q,
        "composition": comp.to_dict(),
        "frattini": {"dim": fr.dim, "basis": _basis(fr.space)},
        "socle": {"dim": soc.submodule.dim, "basis": _basis(soc.submodule.space)},
        "frattini_quotient": dec.to_dict(),
        "dmin": dm,
    }
    return results, findings, EXIT_OK


def _target(inst: Instance, args):
    if getattr(args, "submodule", None):
        if args.submodule not in inst.submodules:
            raise UsageError(f"instance has no submodule named {args.submodule!r}")
        return restrict(inst.module, inst.submodules[args.submodule])
    return inst.module


def cmd_dmin(inst: Instance, args) -> tuple[dict, list, int]:
    M = _target(inst, args)
    results, findings = _dmin_block(M, args.seed)
    if args.submodule:
        results["submodule"] = args.submodule
    if M.dim and oracle.feasible(M, args.budget):
        ex = oracle.d_exhaustive(M, args.budget)
        results["oracle"] = {"d_exhaustive": ex, "agrees": ex == results["d"]}
        if ex != results["d"]:
            findings.append({"kind": "oracle_mismatch", "d": results["d"], "d_exhaustive": ex})
    else:
        results["oracle"] = None
    return results, findings, EXIT_OK


def cmd_rgen(inst: Instance, args) -> tuple[dict, list, int]:
    M = _target(inst, args)
    exact = True if args.exact else (False if args.bound else None)
    try:
        v = has_r_gen_property(M, args.r, args.budget, args.seed, exact)
    except BudgetExceeded as exc:
        lb, ub = exc.interval
        return {"r": args.r, "verdict": "unknown", "reason": str(exc), "rstar": {"lb": lb, "ub": ub}}, [], EXIT_UNKNOWN
    code = {"yes": EXIT_OK, "no": EXIT_NO, "unknown": EXIT_UNKNOWN}[v.answer]
    return v.to_dict(), [], code


def cmd_decompose(inst: Instance, args) -> tuple[dict, list, int]:
    M = inst.module
    findings = []
    if gcd(M.field.q, M.group.order) == 1:
        rep = theorem2_report(M, args.seed)
        results = rep.to_dict()
        results["semisimple_algebra"] = True
        if not all(rep.checks["group_order_le_width"]):
            findings.append({
                "kind": "informational",
                "check": "group_order_le_width",
                "values": rep.checks["group_order_le_width"],
            })
    else:
        dec = semisimple_decompose(M, args.seed)
        results = {"semisimple_algebra": False, "n": dec.n, "widths": dec.widths, "decomposition": dec.to_dict()}
    return results, findings, EXIT_OK


def _is_power_of(n: int, p: int) -> bool:
    while n % p == 0:
        n //= p
    return n == 1


def cmd_series(inst: Instance, args) -> tuple[dict, list, int]:
    M = inst.module
    rep = theorem3_series(M, args.seed)
    results = rep.to_dict()
    findings = []
    for i, f in enumerate(rep.factors):
        if not _is_power_of(f.image_order, M.field.p):
            findings.append({"kind": "factor_image_not_p_group", "factor": i, "image_order": f.image_order})
    return results, findings, EXIT_OK


def cmd_nns(inst: Instance, args) -> tuple[dict, list, int]:
    G = inst.group
    q = args.q if args.q is not None else inst.field.q
    F = field_of_order(q)
    return {"q": q, "group_order": G.order, "nns": nns_count(G, q), "p_regular_classes": brauer_count(G, F.p)}, [], EXIT_OK


def cmd_regular(inst: Instance, args) -> tuple[dict, list, int]:
    q = args.q if args.q is not None else inst.field.q
    R = regular_module(field_of_order(q), inst.group)
    comp = chop(R, args.seed)
    reg = instance_from_module(R, name=f"regular_{inst.group.name or 'G'}_{q}")
    return {"instance": reg.to_dict(), "composition": comp.to_dict()}, [], EXIT_OK


def cmd_oracle(inst: Instance, args) -> tuple[dict, list, int]:
    M = inst.module
    try:
        lat = oracle.enumerate_submodules(M, args.budget)
    except BudgetExceeded as exc:
        return {"what": args.what, "error": str(exc)}, [], EXIT_UNKNOWN
    findings = []
    if args.what == "lattice":
        results = {
            "size": len(lat),
            "members": [{"dim": U.dim, "d": d, "basis": _basis(U)} for U, d in zip(lat.members, lat.d)],
            "hasse": [list(e) for e in lat.hasse()],
            "maximal": lat.maximal(),
        }
    elif args.what == "dmin":
        results = {"d_exhaustive": oracle.d_exhaustive(M, lattice=lat), "max_member_d": max(lat.d)}
    elif args.what == "frattini":
        fr = oracle.frattini_bruteforce(M, lattice=lat)
        results = {"dim": fr.dim, "basis": _basis(fr), "maximal_count": len(lat.maximal())}
    else:
        scan = oracle.factor_scan(M, seed=args.seed, lattice=lat)
        rs = max(lat.d)
        results = {
            "width": scan.width,
            "pairs_scanned": scan.scanned,
            "witness": None if scan.witness is None else {"lower": _basis(scan.witness[0]), "upper": _basis(scan.witness[1])},
            "rstar": rs,
        }
        if scan.width != rs:
            findings.append({"kind": "factor_width_vs_rstar", "factor_width": scan.width, "rstar": rs})
    results["what"] = args.what
    return results, findings, EXIT_OK


def cmd_gen(args) -> int:
    out = Path(args.out) if args.out else None
    if out is None and args.count != 1:
        raise UsageError("--count > 1 needs --out")
    written = []
    for i in range(args.count):
        s = args.seed + i
        p = sample_planted(s)
        inst = instance_from_module(p.module, name=f"planted_{s}")
        if out is None:
            sys.stdout.write(inst.dumps())
            return EXIT_OK
        out.mkdir(parents=True, exist_ok=True)
        path = out / f"planted_{s}.json"
        path.write_text(inst.dumps(), encoding="utf-8")
        written.append({"path": str(path), "label": p.label, "digest": inst.digest})
    report = {"command": "gen", "seed": args.seed, "results": {"written": written}, "findings": []}
    _emit(report, args.json)
    return EXIT_OK


def cmd_fixture(args) -> int:
    if args.list or not args.name:
        for n in fixture_names():
            print(n)
        return EXIT_OK
    sys.stdout.write(fixture(args.name).dumps())
    return EXIT_OK


COMMANDS = {
    "analyze": cmd_analyze,
    "dmin": cmd_dmin,
    "rgen": cmd_rgen,
    "decompose": cmd_decompose,
    "series": cmd_series,
    "nns": cmd_nns,
    "regular": cmd_regular,
    "oracle": cmd_oracle,
}


def render(obj, indent: int = 0) -> str:
    """Plain-text rendering of a report."""
    pad = "  " * indent
    lines = []
    if isinstance(obj, dict):
        for k in sorted(obj):
            v = obj[k]
            if isinstance(v, (dict, list)) and v and not _flat(v):
                lines.append(f"{pad}{k}:")
                lines.append(render(v, indent + 1))
            else:
                lines.append(f"{pad}{k}: {json.dumps(v)}")
    elif isinstance(obj, list):
        for v in obj:
            if isinstance(v, (dict, list)) and not _flat(v):
                lines.append(f"{pad}-")
                lines.append(render(v, indent + 1))
            else:
                lines.append(f"{pad}- {json.dumps(v)}")
    else:
        lines.append(f"{pad}{json.dumps(obj)}")
    return "\n".join(lines)


def _flat(v) -> bool:
    """Lists of scalars or of short scalar lists print on one line."""
    if isinstance(v, list):
        return all(not isinstance(x, (dict, list)) or (isinstance(x, list) and all(not isinstance(y, (dict, list)) for y in x)) for x in v)
    return False


def _emit(report: dict, as_json: bool) -> None:
    if as_json:
        sys.stdout.write(json.dumps(report, sort_keys=True, indent=2) + "\n")
    else:
        sys.stdout.write(render(report) + "\n")


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--seed", type=int, default=None, help="random seed (default: $MODRANK_SEED or 0)")
    common.add_argument("--json", action="store_true", help="print the report as JSON")
    common.add_argument("--budget", type=int, default=DEFAULT_BUDGET, help="largest q^dim for exhaustive searches")
    common.add_argument("--timing", action="store_true", help="add wall-clock time to the report")

    parser = _Parser(prog="modrank", description="Generator counts for modules over finite group algebras.")
    parser.add_argument("--version", action="version", version=f"modrank {__version__}")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def with_instance(name, help_text):
        sp = sub.add_parser(name, parents=[common], help=help_text)
        sp.add_argument("instance", help="instance file or bundled fixture name")
        return sp

    with_instance("analyze", "composition factors, Frattini submodule, socle and d")
    sp = with_instance("dmin", "least number of generators with an explicit generating set")
    sp.add_argument("--submodule", help="work inside a named submodule of the instance")
    sp = with_instance("rgen", "decide the r-generator property")
    sp.add_argument("--r", type=int, required=True)
    sp.add_argument("--submodule", help="work inside a named submodule of the instance")
    mode = sp.add_mutually_exclusive_group()
    mode.add_argument("--exact", action="store_true", help="enumerate all submodules")
    mode.add_argument("--bound", action="store_true", help="use bounds only")
    with_instance("decompose", "homogeneous decomposition of a semisimple module")
    with_instance("series", "ascending series along the augmentation ideal of the normal Sylow subgroup")
    sp = with_instance("nns", "number of simple modules over GF(q)")
    sp.add_argument("--q", type=int, default=None)
    sp = with_instance("regular", "regular module of the instance group")
    sp.add_argument("--q", type=int, default=None)
    sp = sub.add_parser("oracle", parents=[common], help="brute-force ground truth")
    sp.add_argument("what", choices=["lattice", "dmin", "frattini", "factorscan"])
    sp.add_argument("instance", help="instance file or bundled fixture name")
    sp = sub.add_parser("gen", parents=[common], help="sample planted instances")
    sp.add_argument("--count", type=int, default=1)
    sp.add_argument("--out", help="directory for the generated files")
    sp = sub.add_parser("fixture", parents=[common], help="print a bundled fixture")
    sp.add_argument("name", nargs="?")
    sp.add_argument("--list", action="store_true")
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.seed is None:
            args.seed = _default_seed()
        if args.budget < 1:
            raise UsageError("--budget must be positive")
        if getattr(args, "q", None) is not None:
            try:
                field_of_order(args.q)
            except ModrankError as exc:
                raise UsageError(f"--q: {exc}") from None
        if args.command == "gen":
            return cmd_gen(args)
        if args.command == "fixture":
            return cmd_fixture(args)
        inst = resolve_instance(args.instance)
        start = time.perf_counter()
        results, findings, code = COMMANDS[args.command](inst, args)
        report = {
            "command": args.command,
            "instance": {"name": inst.name, "digest": inst.digest},
            "seed": args.seed,
            "budget": args.budget,
            "results": results,
            "findings": findings,
        }
        if args.timing:
            report["timing"] = {"seconds": round(time.perf_counter() - start, 6)}
        _emit(report, args.json)
        return code
    except UsageError as exc:
        parser.print_usage(sys.stderr)
        print(f"modrank: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except BudgetExceeded as exc:
        print(f"modrank: budget exceeded: {exc}", file=sys.stderr)
        return EXIT_UNKNOWN
    except ModrankError as exc:
        print(f"modrank: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_DATA
    except OSError as exc:
        print(f"modrank: {exc}", file=sys.stderr)
        return EXIT_DATA


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
