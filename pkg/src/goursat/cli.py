"""Command-line front end: ``goursat {convert,puiseux,curve,info,census,verify}``.

Exit codes: 0 success, 1 bad input (including I/O failure), 2 when the two
routes to the Puiseux characteristic disagree or the census finds a failure.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
from dataclasses import asdict, dataclass
from pathlib import Path

from . import __version__
from .census import CATALOG_FIELDS, catalog, cross_validate
from .codes import RvtCode, derived_to_rvt, rvt_to_derived, validate_rvt
from .curves import BranchSupport, puiseux_from_exponents
from .errors import GoursatError, MalformedBranch, NotCritical
from .invariants import DerivedVector, SmallGrowthVector, derived_to_sgv, sgv_to_derived
from .mz import puiseux_from_rvt
from .theorem import divisibility_points, puiseux_from_derived

SCHEMA_VERSION = 1
KINDS = ("sgv", "der", "blocks", "rvt")
IMMERSED = "immersed: normal form (t, 0)"


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    # argparse exits with 2 by default; 2 is reserved for identity violations
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def parse_input(kind: str, value: str) -> tuple[DerivedVector, RvtCode]:
    """Resolve any of the four representations to a (derived vector, code) pair."""
    if kind == "rvt":
        code = validate_rvt(value.strip().upper())
        return rvt_to_derived(code), code
    if kind == "sgv":
        der = sgv_to_derived(SmallGrowthVector.parse(value))
    elif kind == "der":
        der = DerivedVector.parse_flat(value)
    elif kind == "blocks":
        der = DerivedVector.parse_blocks(value)
    else:
        raise UsageError(f"unknown input kind {kind!r}")
    return der, derived_to_rvt(der)


def render(der: DerivedVector, code: RvtCode, kind: str) -> str:
    if kind == "rvt":
        return code.letters
    if kind == "sgv":
        return str(derived_to_sgv(der))
    if kind == "der":
        return der.format_flat()
    return der.format_blocks()


@dataclass
class InfoRecord:
    code: str
    sgv: list[int]
    der: list[int]
    der_blocks: list[list[int]]
    critical: bool
    puiseux: list[int] | None
    puiseux_reason: str | None
    level: int
    dim: int
    sgv_length: int
    g: int
    schema: int = SCHEMA_VERSION

    @classmethod
    def build(cls, der: DerivedVector, code: RvtCode) -> InfoRecord:
        pc = puiseux_from_derived(der) if der.is_critical else None
        return cls(
            code=code.letters,
            sgv=list(derived_to_sgv(der).dims),
            der=list(der.flat),
            der_blocks=[list(b) for b in der.blocks],
            critical=code.is_critical,
            puiseux=None if pc is None else list(pc.as_tuple()),
            puiseux_reason=None if pc is not None else IMMERSED,
            level=der.N,
            dim=der.N + 2,
            sgv_length=der.total + 1,
            g=divisibility_points(der).g,
        )

    def to_json(self) -> str:
        d = asdict(self)
        schema = d.pop("schema")
        return json.dumps({"schema": schema, **d})

    @classmethod
    def from_json(cls, text: str) -> InfoRecord:
        d = json.loads(text)
        if d.get("schema") != SCHEMA_VERSION:
            raise ValueError(f"unsupported schema {d.get('schema')!r}")
        return cls(**d)

    def to_text(self) -> str:
        pc = "null (" + (self.puiseux_reason or "") + ")" if self.puiseux is None else (
            f"[{self.puiseux[0]}; {', '.join(map(str, self.puiseux[1:]))}]"
        )
        blocks = " ".join(str(M) if m == 1 else f"{M}^{m}" for M, m in self.der_blocks)
        rows = [
            ("code", self.code),
            ("sgv", ",".join(map(str, self.sgv))),
            ("der", ",".join(map(str, self.der))),
            ("blocks", blocks),
            ("critical", str(self.critical).lower()),
            ("puiseux", pc),
            ("level", self.level),
            ("dim", self.dim),
            ("sgv_length", self.sgv_length),
            ("g", self.g),
        ]
        return "\n".join(f"{k:<11}{v}" for k, v in rows)


def _add_input(p: argparse.ArgumentParser) -> None:
    grp = p.add_mutually_exclusive_group(required=True)
    for kind in KINDS:
        grp.add_argument(f"--{kind}", metavar="VALUE")


def _input_of(args) -> tuple[DerivedVector, RvtCode]:
    for kind in KINDS:
        val = getattr(args, kind)
        if val is not None:
            return parse_input(kind, val)
    raise UsageError("no input given")


def cmd_convert(args) -> int:
    der, code = parse_input(args.src, args.value)
    print(render(der, code, args.dst))
    return 0


def cmd_puiseux(args) -> int:
    der, code = _input_of(args)
    if not code.is_critical:
        raise NotCritical(IMMERSED)
    results = {}
    if args.method in ("theorem", "both"):
        results["theorem"] = puiseux_from_derived(der)
    if args.method in ("mz", "both"):
        results["mz"] = puiseux_from_rvt(code)
    if args.json:
        print(json.dumps({"schema": SCHEMA_VERSION, "code": code.letters,
                          **{k: list(v.as_tuple()) for k, v in results.items()}}))
    elif len(results) == 1:
        print(next(iter(results.values())))
    else:
        for k, v in results.items():
            print(f"{k + ':':<9}{v}")
    if len(set(results.values())) > 1:
        print("error: theorem and mz disagree", file=sys.stderr)
        return 2
    return 0


def cmd_curve(args) -> int:
    try:
        exps = [int(x) for x in args.exponents.split(",") if x.strip()]
    except ValueError:
        raise MalformedBranch(f"bad exponent list {args.exponents!r}") from None
    pc = puiseux_from_exponents(BranchSupport(args.multiplicity, tuple(exps)))
    print(json.dumps({"schema": SCHEMA_VERSION, "puiseux": list(pc.as_tuple())}) if args.json else pc)
    return 0


def cmd_info(args) -> int:
    rec = InfoRecord.build(*_input_of(args))
    print(rec.to_json() if args.json else rec.to_text())
    return 0


def _csv_row(rec: dict) -> dict:
    row = dict(rec)
    row["sgv"] = ",".join(map(str, rec["sgv"]))
    row["der"] = ",".join(map(str, rec["der"]))
    row["der_blocks"] = " ".join(str(M) if m == 1 else f"{M}^{m}" for M, m in rec["der_blocks"])
    row["critical"] = "true" if rec["critical"] else "false"
    pc = rec["puiseux"]
    row["puiseux"] = "" if pc is None else f"[{pc[0]}; {', '.join(map(str, pc[1:]))}]"
    return row


def write_catalog(max_level: int, fmt: str, path: Path) -> int:
    n = 0
    with open(path, "w", newline="", encoding="utf-8") as fh:
        if fmt == "csv":
            writer = csv.DictWriter(fh, fieldnames=CATALOG_FIELDS)
            writer.writeheader()
            for rec in catalog(max_level):
                writer.writerow(_csv_row(rec))
                n += 1
        else:
            for rec in catalog(max_level):
                fh.write(json.dumps(rec) + "\n")
                n += 1
    return n


def _run_census(args, write: bool) -> int:
    if args.max_level < 3:
        raise UsageError(f"--max-level must be at least 3, got {args.max_level}")
    report = cross_validate(args.max_level, jobs=args.jobs)
    if write:
        ext = "csv" if args.format == "csv" else "jsonl"
        out = Path(args.output or f"census-L{args.max_level}.{ext}")
        try:
            n = write_catalog(args.max_level, args.format, out)
        except OSError as exc:
            print(f"error: cannot write {out}: {exc}", file=sys.stderr)
            return 1
        print(f"wrote {n} records to {out}")
    print(report.summary())
    return 0 if report.ok else 2


def cmd_census(args) -> int:
    return _run_census(args, write=True)


def cmd_verify(args) -> int:
    return _run_census(args, write=False)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="goursat", description="Invariants of Goursat germs: sgv, derived vector, RVT code, Puiseux characteristic.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("convert", help="convert between sgv, der, blocks and rvt")
    p.add_argument("--from", dest="src", choices=KINDS, required=True)
    p.add_argument("--to", dest="dst", choices=KINDS, required=True)
    p.add_argument("value")
    p.set_defaults(func=cmd_convert)

    p = sub.add_parser("puiseux", help="Puiseux characteristic of a critical germ")
    _add_input(p)
    p.add_argument("--method", choices=("theorem", "mz", "both"), default="theorem")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_puiseux)

    p = sub.add_parser("curve", help="Puiseux characteristic of (t^m, sum a_k t^k) from its exponents")
    p.add_argument("-m", "--multiplicity", type=int, required=True)
    p.add_argument("-e", "--exponents", required=True, help="comma-separated exponents k with a_k != 0")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_curve)

    p = sub.add_parser("info", help="all invariants of one germ")
    _add_input(p)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_info)

    for name, func in (("census", cmd_census), ("verify", cmd_verify)):
        p = sub.add_parser(name, help="exhaustive cross-validation" + (" with catalog export" if name == "census" else ""))
        p.add_argument("--max-level", type=int, default=14)
        p.add_argument("--jobs", type=int, default=1)
        if name == "census":
            p.add_argument("--format", choices=("csv", "jsonl"), default="csv")
            p.add_argument("--output", "-o")
        p.set_defaults(func=func)
    return parser


def main(argv: list[str] | None = None) -> int:
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 1
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except GoursatError as exc:
        msg = str(exc)
        name = type(exc).__name__
        if type(exc) is GoursatError or msg.startswith(name):
            print(f"error: {msg}", file=sys.stderr)
        else:
            print(f"error: {name}: {msg}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
