"""Command-line front end.

Subcommands: ``field``, ``cuspidals``, ``bessel``, ``epsilon``, ``transfer``,
``verify``.  Data goes to stdout (or --out), diagnostics to stderr.  Exit
codes: 0 success (and all selected verification suites passing), 1
verification failure, 2 usage error.  Output is byte-stable for fixed
arguments: enumeration orders are fixed and JSON keys are sorted.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from fractions import Fraction

from . import verify
from .bessel import build_table
from .cusp import list_cuspidals
from .epsilon import (
    LevelZeroRep,
    RootOfUnity,
    SMonomial,
    TransferData,
    epsilon_pair,
    epsilon_transfer,
    l_factor_pair,
    zeta_tilde_oracle,
)
from .ffield import AdditiveChar, build_field
from .glq import FULL, MIRABOLIC, UNIPOTENT, gl_group


class UsageError(Exception):
    pass


def _complex_dict(z: complex) -> dict:
    return {"re": z.real, "im": z.imag}


def _emit(rows, fmt: str, out_path: str | None, csv_headers=None):
    """Write rows as JSON (one document) or CSV with fixed headers."""
    if fmt == "json":
        text = json.dumps(rows, sort_keys=True, indent=1)
        data = text + "\n"
    elif fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(csv_headers)
        for row in rows:
            writer.writerow([_csv_cell(row.get(h)) for h in csv_headers])
        data = buf.getvalue()
    else:
        raise UsageError(f"unknown format {fmt!r}")
    if out_path is None:
        sys.stdout.write(data)
    else:
        try:
            with open(out_path, "w", encoding="utf-8") as fh:
                fh.write(data)
        except OSError as exc:
            raise UsageError(f"cannot write {out_path}: {exc}") from exc


def _csv_cell(value):
    if isinstance(value, (dict, list)):
        return json.dumps(value, sort_keys=True)
    return value


def _parse_root(text: str) -> RootOfUnity:
    try:
        return RootOfUnity.parse(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise UsageError(f"bad root of unity {text!r}; use j/m for zeta_m^j") from exc


def _group_psi(args):
    group = gl_group(args.q, args.r)
    psi = AdditiveChar(group.field, args.a)
    if not psi.nontrivial:
        raise UsageError("additive character shift must be nonzero")
    return group, psi


def _cuspidal(group, exponent: int):
    for sigma in list_cuspidals(group):
        if exponent % (group.big_field.q - 1) in sigma.orbit:
            return sigma
    raise UsageError(
        f"exponent {exponent} is not regular for q={group.q}, r={group.r}"
    )


def cmd_field(args):
    F = build_field(args.p, args.k)
    if args.format == "json":
        doc = {
            "p": F.p,
            "k": F.k,
            "q": F.q,
            "modulus": list(F.modulus),
            "zech": list(F.zech),
        }
        _emit(doc, "json", args.out)
    else:
        rows = [{"l": l, "zech": z} for l, z in enumerate(F.zech)]
        _emit(rows, "csv", args.out, csv_headers=["l", "zech"])
    return 0


def cmd_cuspidals(args):
    group, _ = _group_psi(args)
    rows = []
    for sigma in list_cuspidals(group):
        values = []
        for key, (count, _rep) in group.class_map().items():
            val = sigma.char_value(key)
            values.append(
                {
                    "key": key.serialize(),
                    "count": count,
                    "value": val.to_dict(),
                    "complex": _complex_dict(val.embed()),
                }
            )
        rows.append({"orbit": list(sigma.orbit), "dim": sigma.dim(), "values": values})
    if args.format == "json":
        _emit(rows, "json", args.out)
    else:
        flat = []
        for row in rows:
            for v in row["values"]:
                flat.append(
                    {
                        "orbit": "+".join(map(str, row["orbit"])),
                        "dim": row["dim"],
                        "key": v["key"],
                        "count": v["count"],
                        "value": v["value"],
                        "re": v["complex"]["re"],
                        "im": v["complex"]["im"],
                    }
                )
        _emit(flat, "csv", args.out, csv_headers=["orbit", "dim", "key", "count", "value", "re", "im"])
    return 0


_DOMAINS = {"full": FULL, "mirabolic": MIRABOLIC, "u": UNIPOTENT}


def cmd_bessel(args):
    group, psi = _group_psi(args)
    sigma = _cuspidal(group, args.theta)
    table = build_table(sigma, psi, _DOMAINS[args.domain])
    rows = []
    for g, val in table.values.items():
        rows.append(
            {
                "g": g.serialize(),
                "value": val.to_dict(),
                "complex": _complex_dict(val.embed()),
            }
        )
    if args.format == "json":
        _emit(rows, "json", args.out)
    else:
        flat = [
            {
                "g": row["g"],
                "value": row["value"],
                "re": row["complex"]["re"],
                "im": row["complex"]["im"],
            }
            for row in rows
        ]
        _emit(flat, "csv", args.out, csv_headers=["g", "value", "re", "im"])
    return 0


def cmd_epsilon(args):
    group, psi = _group_psi(args)
    tau1 = LevelZeroRep(_cuspidal(group, args.theta1), _parse_root(args.t1))
    tau2 = LevelZeroRep(_cuspidal(group, args.theta2), _parse_root(args.t2))
    eps = epsilon_pair(tau1, tau2, psi)
    lfac = l_factor_pair(tau1, tau2)
    doc = {
        "epsilon": eps.to_dict(),
        "epsilon_at_half": _complex_dict(eps.value_at(Fraction(1, 2))),
        "modulus": eps.modulus_at_half(),
        "l_factor": lfac.to_dict(),
    }
    if args.oracle:
        oracle = zeta_tilde_oracle(tau1, tau2, psi)
        doc["oracle"] = oracle.to_dict()
        doc["oracle_agrees"] = oracle == eps
    if args.format == "json":
        _emit(doc, "json", args.out)
    else:
        row = {
            "epsilon": doc["epsilon"],
            "re": doc["epsilon_at_half"]["re"],
            "im": doc["epsilon_at_half"]["im"],
            "modulus": doc["modulus"],
            "l_factor": doc["l_factor"],
        }
        _emit([row], "csv", args.out, csv_headers=["epsilon", "re", "im", "modulus", "l_factor"])
    return 0


def cmd_transfer(args):
    if args.input == "-":
        raw = sys.stdin.read()
    else:
        try:
            with open(args.input, "r", encoding="utf-8") as fh:
                raw = fh.read()
        except OSError as exc:
            raise UsageError(f"cannot read {args.input}: {exc}") from exc
    try:
        tame = SMonomial.from_dict(json.loads(raw))
    except (ValueError, KeyError) as exc:
        raise UsageError(f"bad epsilon JSON on input: {exc}") from exc
    data = TransferData(
        r=args.r,
        N=args.N,
        e=args.e,
        vnu=args.vnu,
        w1=_parse_root(args.w1),
        w2=_parse_root(args.w2),
        zeta=_parse_root(args.zeta),
    )
    out = epsilon_transfer(tame, data)
    doc = {
        "epsilon": out.to_dict(),
        "epsilon_at_half": _complex_dict(out.value_at(Fraction(1, 2))),
        "modulus": out.modulus_at_half(),
    }
    _emit(doc, "json", args.out)
    return 0


def cmd_verify(args):
    names = list(verify.SUITES) if args.suite == "all" else [args.suite]
    try:
        checks = verify.run_suites(names, seed=args.seed, q=args.q, r=args.r)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    for check in checks:
        sys.stdout.write(check.line() + "\n")
    failed = [c for c in checks if not c.ok]
    sys.stdout.write(f"{len(checks) - len(failed)}/{len(checks)} checks passed\n")
    return 1 if failed else 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cuspeps",
        description="Exact cuspidal characters, Bessel functions and epsilon factors for GL_r(F_q).",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p, with_group=True):
        p.add_argument("--format", choices=("json", "csv"), default="json")
        p.add_argument("--out", default=None, help="output path (default stdout)")
        if with_group:
            p.add_argument("--q", type=int, required=True, help="residue field size (prime power)")
            p.add_argument("--r", type=int, required=True, help="matrix size")
            p.add_argument("--a", type=int, default=0, help="log of the additive-character shift")

    p_field = sub.add_parser("field", help="build a finite field and emit its tables")
    p_field.add_argument("--p", type=int, required=True)
    p_field.add_argument("--k", type=int, default=1)
    add_common(p_field, with_group=False)
    p_field.set_defaults(func=cmd_field)

    p_cusp = sub.add_parser("cuspidals", help="list cuspidal representations with character values")
    add_common(p_cusp)
    p_cusp.set_defaults(func=cmd_cuspidals)

    p_bessel = sub.add_parser("bessel", help="tabulate a Bessel function")
    add_common(p_bessel)
    p_bessel.add_argument("--theta", type=int, required=True, help="regular character exponent")
    p_bessel.add_argument("--domain", choices=sorted(_DOMAINS), default="full")
    p_bessel.set_defaults(func=cmd_bessel)

    p_eps = sub.add_parser("epsilon", help="epsilon factor of a pair of level-zero representations")
    add_common(p_eps)
    p_eps.add_argument("--theta1", type=int, required=True)
    p_eps.add_argument("--theta2", type=int, required=True)
    p_eps.add_argument("--t1", default="1", help="unramified parameter as j/m (zeta_m^j)")
    p_eps.add_argument("--t2", default="1")
    p_eps.add_argument("--oracle", action="store_true", help="also run the zeta-integral oracle")
    p_eps.set_defaults(func=cmd_epsilon)

    p_tr = sub.add_parser("transfer", help="apply the tame transfer to an epsilon monomial")
    p_tr.add_argument("--vnu", type=int, required=True)
    p_tr.add_argument("--N", type=int, required=True)
    p_tr.add_argument("--e", type=int, required=True)
    p_tr.add_argument("--r", type=int, required=True)
    p_tr.add_argument("--w1", default="1")
    p_tr.add_argument("--w2", default="1")
    p_tr.add_argument("--zeta", default="1")
    p_tr.add_argument("--input", default="-", help="epsilon JSON (file or - for stdin)")
    p_tr.add_argument("--out", default=None)
    p_tr.set_defaults(func=cmd_transfer)

    p_ver = sub.add_parser("verify", help="run verification suites")
    p_ver.add_argument("--suite", default="all", help="suite name or 'all'")
    p_ver.add_argument("--seed", type=int, default=verify.DEFAULT_SEED)
    p_ver.add_argument("--q", type=int, default=None, help="restrict to one field size")
    p_ver.add_argument("--r", type=int, default=None, help="restrict to one matrix size")
    p_ver.set_defaults(func=cmd_verify)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code not in (0, None) else 0
    try:
        return args.func(args)
    except UsageError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 2
    except ValueError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 2


if __name__ == "__main__":
    sys.exit(main())
