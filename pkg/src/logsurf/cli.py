"""Command-line front end.

Every command reads JSON files in the documented formats, computes with
exact rationals, and prints either a plain-text report or (with --json)
a machine report with all numbers as reduced "p/q" strings.  Output is
byte-stable across runs for identical inputs.

Exit codes: 0 success, 1 domain error (the error code is printed to
stderr), 2 malformed input.
"""
from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction as Q

from . import birational, boundary, catalog, lattice, zariski
from .lattice import LatticeError, QDivisor, rational, rational_str


def _read_json(path: str):
    with open(path, "r", encoding="utf-8") as handle:
        return json.load(handle)


def _load_config(path: str) -> lattice.CurveConfig:
    return lattice.config_from_json(_read_json(path))


def _load_divisor(path: str, config: lattice.CurveConfig) -> QDivisor:
    return lattice.divisor_from_json(_read_json(path), config)


def _emit(text: str, out: str | None) -> None:
    if out:
        with open(out, "w", encoding="utf-8") as handle:
            handle.write(text)
    else:
        sys.stdout.write(text)


def _emit_json(payload: dict, args) -> None:
    _emit(lattice.dumps(payload), args.out)


def _divisor_text(d: QDivisor) -> str:
    if not d.coeffs:
        return "0"
    return " + ".join(f"{rational_str(v)}*{k}" for k, v in sorted(d.items()))


def _parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="logsurf", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name: str, help_text: str, config_arg: bool = True):
        p = sub.add_parser(name, help=help_text)
        if config_arg:
            p.add_argument("config", help="curve configuration JSON file")
        p.add_argument("-d", "--divisor", help="divisor JSON file")
        p.add_argument("-s", "--script", help="blow-up script JSON file")
        p.add_argument("-o", "--out", help="write output to a file")
        p.add_argument("--delta", help="comma-separated curve names")
        p.add_argument("--pg", type=int, help="geometric genus annotation")
        p.add_argument("--vol", help='rational value as "p/q"')
        p.add_argument("--json", action="store_true", help="machine-readable output")
        return p

    add("validate", "check configuration invariants")
    add("zariski", "Zariski decomposition of an effective divisor")
    add("volume", "volume of an effective divisor")
    add("blowup", "apply a blow-up script")
    p = add("contract", "contract a (-1)-curve")
    p.add_argument("name", help="curve to contract")
    add("mmp", "contraction loop: --delta marks curves, -d supplies a log class")
    add("semistable", "semistable part of a boundary set")
    p = add("tower", "volume-decreasing tower over a boundary intersection")
    p.add_argument("n", type=int, help="number of blow-ups")
    p = add("catalog", "dump a catalog entry (no id: list ids)", config_arg=False)
    p.add_argument("id", nargs="?", help="catalog entry id")
    add("table1", "compute the bundled reference table", config_arg=False)
    p = add("example", "run a worked example", config_arg=False)
    p.add_argument("which", choices=["143", "25-84", "rational"])
    add("noether", "stable Noether-type bound for a given pg", config_arg=False)
    return parser


def _cmd_validate(args) -> int:
    config = _load_config(args.config)
    violations = lattice.validate(config)
    if args.json:
        _emit_json({"violations": violations, "valid": not violations}, args)
    else:
        lines = [f"curves: {config.n}"]
        lines.append(f"tracked-completeness assumed: {config.assume_tracked_complete}")
        lines += [f"violation: {v}" for v in violations]
        lines.append("valid" if not violations else f"{len(violations)} violation(s)")
        _emit("\n".join(lines) + "\n", args.out)
    return 0


def _cmd_zariski(args) -> int:
    config = _load_config(args.config)
    d = _load_divisor(args.divisor, config)
    result = zariski.zariski_decompose(config, d)
    if args.json:
        _emit_json(result.to_json(), args)
    else:
        lines = [
            f"positive: {_divisor_text(result.positive)}",
            f"negative: {_divisor_text(result.negative)}",
            f"support: {', '.join(sorted(result.support)) or '-'}",
            f"big: {str(result.big).lower()}",
            f"volume: {rational_str(result.volume)}",
        ]
        _emit("\n".join(lines) + "\n", args.out)
    return 0


def _cmd_volume(args) -> int:
    config = _load_config(args.config)
    d = _load_divisor(args.divisor, config)
    value = zariski.volume(config, d)
    if args.json:
        _emit_json({"volume": rational_str(value)}, args)
    else:
        _emit(rational_str(value) + "\n", args.out)
    return 0


def _cmd_blowup(args) -> int:
    config = _load_config(args.config)
    steps = birational.script_from_json(_read_json(args.script))
    history = birational.apply_script(config, steps)
    _emit_json(lattice.config_to_json(history.top), args)
    return 0


def _cmd_contract(args) -> int:
    config = _load_config(args.config)
    _emit_json(lattice.config_to_json(birational.contract_minus_one(config, args.name)), args)
    return 0


def _cmd_mmp(args) -> int:
    config = _load_config(args.config)
    if args.divisor:
        cls = _load_divisor(args.divisor, config)
        cfg, cls, contracted = birational.mmp_contract_log(config, cls)
        payload = {
            "config": lattice.config_to_json(cfg),
            "log_class": lattice.divisor_to_json(cls),
            "contracted": contracted,
        }
    elif args.delta is not None:
        marked = [s for s in args.delta.split(",") if s]
        cfg, contracted = birational.mmp_contract_disjoint(config, marked)
        payload = {"config": lattice.config_to_json(cfg), "contracted": contracted}
    else:
        raise LatticeError("bad-invocation", "mmp needs --delta or -d")
    _emit_json(payload, args)
    return 0


def _cmd_semistable(args) -> int:
    config = _load_config(args.config)
    delta = [s for s in (args.delta or "").split(",") if s]
    split = boundary.semistable_part(config, delta)
    payload = {
        "C": sorted(split.C),
        "E": sorted(split.E),
        "component_genera": [
            {"component": sorted(comp), "pa": rational_str(pa)}
            for comp, pa in split.component_genera
        ],
    }
    _emit_json(payload, args)
    return 0


def _cmd_tower(args) -> int:
    config = _load_config(args.config)
    cls = _load_divisor(args.divisor, config)
    names = [s for s in (args.delta or "").split(",") if s]
    if len(names) != 2:
        raise LatticeError("bad-invocation", "--delta must name the two curves C,E")
    b = rational(args.vol) if args.vol else Q(0)
    history, new_class = boundary.tower(config, names[0], names[1], cls, b, args.n)
    payload = {
        "history": birational.history_to_json(history),
        "log_class": lattice.divisor_to_json(new_class),
        "volume": rational_str(zariski.volume(history.top, new_class)),
    }
    _emit_json(payload, args)
    return 0


def _cmd_catalog(args) -> int:
    if not args.id:
        _emit("\n".join(catalog.catalog_ids()) + "\n", args.out)
        return 0
    _emit_json(catalog.entry(args.id).to_json(), args)
    return 0


def _cmd_table1(args) -> int:
    report = catalog.table1()
    if args.json:
        _emit_json(report, args)
    else:
        _emit(catalog.table1_text(report), args.out)
    return 0


def _cmd_example(args) -> int:
    if args.which == "143":
        report = catalog.example_143()
    elif args.which == "25-84":
        report = catalog.example_25_84()
    else:
        report = catalog.example_rational_shape()
    _emit_json(_jsonable(report), args)
    return 0


def _cmd_noether(args) -> int:
    if args.pg is None:
        raise LatticeError("bad-invocation", "noether needs --pg")
    bound = catalog.noether_stable_bound(args.pg)
    payload = {"pg": args.pg, "bound": rational_str(bound)}
    if args.vol is not None:
        vol = rational(args.vol)
        payload["volume"] = rational_str(vol)
        payload["ok"] = vol >= bound
    _emit_json(payload, args)
    return 0


def _jsonable(value):
    if isinstance(value, Q):
        return rational_str(value)
    if isinstance(value, QDivisor):
        return lattice.divisor_to_json(value)
    if isinstance(value, dict):
        return {str(k): _jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_jsonable(v) for v in value]
    if isinstance(value, frozenset):
        return sorted(value)
    return value


_COMMANDS = {
    "validate": _cmd_validate,
    "zariski": _cmd_zariski,
    "volume": _cmd_volume,
    "blowup": _cmd_blowup,
    "contract": _cmd_contract,
    "mmp": _cmd_mmp,
    "semistable": _cmd_semistable,
    "tower": _cmd_tower,
    "catalog": _cmd_catalog,
    "table1": _cmd_table1,
    "example": _cmd_example,
    "noether": _cmd_noether,
}


def run(argv: list[str]) -> int:
    """Dispatch a command line; returns the process exit code."""
    try:
        args = _parser().parse_args(argv)
    except SystemExit as exc:  # argparse reports usage problems itself
        return int(exc.code or 0)
    try:
        return _COMMANDS[args.command](args)
    except LatticeError as exc:
        print(f"error[{exc.code}]: {exc}", file=sys.stderr)
        return 1
    except (OSError, json.JSONDecodeError, KeyError, TypeError, ValueError) as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
