"""Command-line interface: ``modunits <command> ...``.

Exit status is 0 on success, 1 on usage errors and 2 when a computation
fails (rank deficiency, insufficient precision, internal contradiction).
"""

from __future__ import annotations

import argparse
import json
import sys
from concurrent.futures import ProcessPoolExecutor

from .config import Config
from .delta import delta_unit
from .dims import dim_E, dim_M, dim_S, profile
from .errors import ModunitsError
from .etaquot import EtaQuotient, search_eta_units
from .forms import precision_policy, structured_basis

SCHEMA = 1
EXIT_OK, EXIT_USAGE, EXIT_COMPUTE = 0, 1, 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _positive(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}") from None
    if v < 1:
        raise argparse.ArgumentTypeError(f"expected an integer >= 1, got {v}")
    return v


def _pair(text: str) -> tuple[int, int]:
    m, sep, a = text.partition(":")
    try:
        if not sep:
            raise ValueError
        return int(m), int(a)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected m:a, got {text!r}") from None


def _emit_json(payload: dict) -> None:
    json.dump({"schema": SCHEMA, **payload}, sys.stdout)
    sys.stdout.write("\n")


def _config(args) -> Config:
    return Config.from_env(output_format="json" if getattr(args, "json", False) else "text",
                           parallelism=getattr(args, "jobs", None))


# -- commands -------------------------------------------------------------------


def cmd_delta(args) -> int:
    D = delta_unit(args.N)
    series = D.expand(args.expand) if args.expand else None
    if _config(args).output_format == "json":
        payload = {"delta": D.to_json()}
        if series is not None:
            payload["expansion"] = {"prec": series.prec, "coefficients": series.to_strings()}
        _emit_json(payload)
        return EXIT_OK
    print(f"Delta_{D.level} = {D.quotient}")
    print(f"rho = {D.rho}")
    print(f"nu = {D.nu}")
    if D.dilation > 1:
        print(f"core = {D.core} at level {D.core.level}, dilated by {D.dilation}")
    if series is not None:
        print(series)
    return EXIT_OK


def _dim_row(N: int, k: int) -> dict:
    return {"k": k, "weight": 2 * k, "M": dim_M(N, k), "S": dim_S(N, k), "E": dim_E(N, k)}


def cmd_dim(args) -> int:
    row = _dim_row(args.N, args.k)
    if _config(args).output_format == "json":
        _emit_json({"level": args.N, **row})
        return EXIT_OK
    print(f"N={args.N} weight={2 * args.k}: M:{row['M']} S:{row['S']} E:{row['E']}")
    return EXIT_OK


def _dim_row_star(nk):
    return _dim_row(*nk)


def cmd_dim_table(args) -> int:
    cfg = _config(args)
    N = args.N
    profile(N)
    step = delta_unit(N).rho // 2
    keys = [(N, k) for k in range(1, args.kmax + step + 1)]
    if cfg.parallelism > 1:
        with ProcessPoolExecutor(max_workers=cfg.parallelism) as pool:
            rows = list(pool.map(_dim_row_star, keys, chunksize=16))
    else:
        rows = [_dim_row(*key) for key in keys]
    by_k = {r["k"]: r for r in rows}
    table = []
    for k in range(1, args.kmax + 1):
        r = dict(by_k[k])
        r["delta_step"] = by_k[k + step]["M"] - r["M"]
        table.append(r)
    if cfg.output_format == "json":
        _emit_json({"level": N, "rho": 2 * step, "nu": delta_unit(N).nu, "rows": table})
        return EXIT_OK
    print(f"N={N} rho={2 * step} nu={delta_unit(N).nu}")
    print(f"{'k':>4} {'2k':>4} {'M':>6} {'S':>6} {'E':>6} {'dM(k+rho/2)-dM(k)':>18}")
    for r in table:
        print(f"{r['k']:>4} {r['weight']:>4} {r['M']:>6} {r['S']:>6} {r['E']:>6} {r['delta_step']:>18}")
    return EXIT_OK


def cmd_basis(args) -> int:
    prec = args.prec if args.prec is not None else precision_policy(args.N, args.k)
    b = structured_basis(args.N, args.k, prec)
    if _config(args).output_format == "json":
        _emit_json(b.to_json())
        return EXIT_OK
    print(f"M_{2 * args.k}(Gamma0({args.N})): dim {len(b)}, prec {b.prec}")
    for line in b.lines():
        print(line)
    return EXIT_OK


def cmd_check_unit(args) -> int:
    if args.level is not None:
        if not args.items:
            raise UsageError("--level needs at least one m:a exponent")
        pairs = []
        for item in args.items:
            try:
                pairs.append(_pair(item))
            except argparse.ArgumentTypeError as e:
                raise UsageError(str(e)) from None
        f = EtaQuotient(args.level, pairs)
    else:
        if len(args.items) != 1:
            raise UsageError("give N, or --level L followed by m:a exponents")
        try:
            N = _positive(args.items[0])
        except argparse.ArgumentTypeError as e:
            raise UsageError(str(e)) from None
        f = delta_unit(N).quotient
    report = f.is_strong_unit()
    if _config(args).output_format == "json":
        _emit_json({
            "quotient": f.to_json(),
            "passed": report.passed,
            "failed": report.failed_conditions,
            "valuation": str(report.valuation),
            "infinite_order": str(report.infinite_order),
            "cusp_sums": {str(c): str(s) for c, s in report.cusp_sums},
        })
        return EXIT_OK
    print(f"{f} at level {f.level}")
    for line in report.lines():
        print(line)
    if report.passed:
        print("PASS")
    else:
        print("FAIL at condition " + ", ".join(report.failed_conditions))
    return EXIT_OK


def cmd_search_units(args) -> int:
    hits = search_eta_units(args.N, args.max_weight, args.bound)
    if _config(args).output_format == "json":
        _emit_json({
            "level": args.N,
            "max_weight": args.max_weight,
            "bound": args.bound,
            "units": [
                {**f.to_json(), "weight": f.weight_times_two(), "valuation": int(f.valuation())} for f in hits
            ],
        })
        return EXIT_OK
    print(f"{len(hits)} strong unit(s) at level {args.N} with weight <= {args.max_weight}, |a_m| <= {args.bound}")
    for f in hits:
        print(f"weight {f.weight_times_two()} nu {f.valuation()}: {f}")
    return EXIT_OK


# -- entry point ----------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="modunits", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add(name, func, help_):
        sp = sub.add_parser(name, help=help_)
        sp.set_defaults(func=func)
        sp.add_argument("--json", action="store_true", help="machine-readable output")
        return sp

    sp = add("delta", cmd_delta, "the strong unit Delta_N")
    sp.add_argument("N", type=_positive)
    sp.add_argument("--expand", type=_positive, metavar="PREC", help="also print the q-expansion to O(q^PREC)")

    sp = add("dim", cmd_dim, "dimensions of M, S and E at weight 2k")
    sp.add_argument("N", type=_positive)
    sp.add_argument("k", type=_positive)

    sp = add("dim-table", cmd_dim_table, "dimension table for k = 1..KMAX")
    sp.add_argument("N", type=_positive)
    sp.add_argument("--kmax", type=_positive, required=True)
    sp.add_argument("--jobs", type=_positive, default=None, help="worker processes")

    sp = add("basis", cmd_basis, "unitary upper-triangular basis of M_2k(Gamma0(N))")
    sp.add_argument("N", type=_positive)
    sp.add_argument("k", type=_positive)
    sp.add_argument("--prec", type=_positive, default=None)

    sp = add("check-unit", cmd_check_unit, "strong-unit test for Delta_N or an explicit eta quotient")
    sp.add_argument("--level", type=_positive, default=None)
    sp.add_argument("items", nargs="*", metavar="N | m:a", help="a level N, or m:a exponents with --level")

    sp = add("search-units", cmd_search_units, "exhaustive search for strong eta units")
    sp.add_argument("N", type=_positive)
    sp.add_argument("--max-weight", type=_positive, required=True)
    sp.add_argument("--bound", type=_positive, required=True)
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as e:
        print(f"modunits: error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except ModunitsError as e:
        print(f"modunits: {e}", file=sys.stderr)
        return EXIT_COMPUTE
    except ValueError as e:
        print(f"modunits: error: {e}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
