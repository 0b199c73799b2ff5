"""Command-line entry point: ``mckay table|op|macdonald|adams|verify``."""

import argparse
import os
import sys
from dataclasses import dataclass
from typing import Optional

from . import emit

DEFAULT_MAX_N = 7


class UsageError(Exception):
    pass


@dataclass(frozen=True)
class Config:
    n: int = 2
    A_override: Optional[int] = None
    basis: str = "p"
    format: str = "latex"
    max_n_verify: int = 4
    seed: int = 0


def max_n():
    raw = os.environ.get("MCKAY_MAX_N")
    if raw is None:
        return DEFAULT_MAX_N
    try:
        return int(raw)
    except ValueError:
        raise UsageError(f"MCKAY_MAX_N must be an integer, got {raw!r}") from None


def check_config(cfg):
    cap = max_n()
    if not 1 <= cfg.n <= cap:
        raise UsageError(f"n must lie in 1..{cap} (set MCKAY_MAX_N to raise the cap)")
    if cfg.A_override is not None and cfg.A_override <= cfg.n:
        raise UsageError("--A must exceed n")
    return cfg


def cmd_table(args, cfg, out):
    from .product import odot_table

    table = odot_table(cfg.n, cfg.basis, cfg.A_override)
    if cfg.format == "latex":
        out.write(emit.latex_table(table))
    elif cfg.format == "json":
        out.write(emit.dumps(emit.table_json(table)))
    else:
        out.write(emit.table_csv(table))


def cmd_op(args, cfg, out):
    from .operators import op_D, op_E, op_Gamma

    op = {"D": op_D, "E": op_E, "Gamma": op_Gamma}[args.name](cfg.n).to_basis(cfg.basis)
    if cfg.format == "latex":
        out.write(emit.operator_latex(op))
    elif cfg.format == "json":
        out.write(emit.dumps(emit.operator_json(op, args.name)))
    else:
        out.write(emit.operator_csv(op))


def cmd_macdonald(args, cfg, out):
    from .macdonald import Specialization, macdonald_basis
    from .partitions import partitions_of

    spec = Specialization(cfg.n, cfg.A_override or cfg.n + 2)
    mb = macdonald_basis(cfg.n, spec)
    parts = partitions_of(cfg.n)
    if cfg.format == "json":
        out.write(
            emit.dumps(
                {
                    "n": cfg.n,
                    "A": spec.A,
                    "rows": [list(lam) for lam in parts],
                    "cols": [list(mu) for mu in parts],
                    "K": [[str(x) for x in row] for row in mb.K],
                }
            )
        )
        return
    out.write(f"K~ at q = t^{spec.A}; rows s_lam, columns H~_mu\n")
    for mu_i, mu in enumerate(parts):
        out.write(f"H~_{mu.label()} =")
        terms = [f" ({mb.K[i][mu_i]}) s_{lam.label()}" for i, lam in enumerate(parts) if mb.K[i][mu_i]]
        out.write(" +".join(terms) + "\n")


def cmd_adams(args, cfg, out):
    from .product import adams_conjecture_check

    rows = adams_conjecture_check(cfg.n, args.j_max)
    if cfg.format == "json":
        out.write(emit.dumps(rows))
        return
    for r in rows:
        verdict = "EQUAL" if r["equal"] else "NOT EQUAL  <-- counterexample"
        note = f"  ({r['note']})" if r["note"] else ""
        out.write(f"n={r['n']} j={r['j']}: {verdict}{note}\n")


def cmd_verify(args, cfg, out):
    from . import verify

    rep = verify.run(cfg.max_n_verify, cfg.seed)
    out.write(emit.dumps(rep.to_json()))
    return 0 if rep.ok else 1


def build_parser():
    ap = argparse.ArgumentParser(prog="mckay", description="Exact computations in the ring (Lambda^n, odot).")
    sub = ap.add_subparsers(dest="command", required=True)

    def common(p, formats=("latex", "json", "csv"), default="latex"):
        p.add_argument("--n", type=int, required=True)
        p.add_argument("--A", type=int, default=None, help="exponent of the curve q = t^A (default n+2)")
        p.add_argument("--format", choices=formats, default=default)

    p = sub.add_parser("table", help="full product table")
    common(p)
    p.add_argument("--basis", choices=("p", "s"), default="p")

    p = sub.add_parser("op", help="matrix of D, E or Gamma")
    common(p)
    p.add_argument("--name", choices=("D", "E", "Gamma"), required=True)
    p.add_argument("--basis", choices=("p", "s"), default="p")

    p = sub.add_parser("macdonald", help="specialized q,t-Kostka matrix")
    common(p, ("text", "json"), "text")

    p = sub.add_parser("adams", help="Adams-power conjecture report up to n")
    common(p, ("text", "json"), "text")
    p.add_argument("--j-max", type=int, default=4)

    p = sub.add_parser("verify", help="run the invariant suite")
    p.add_argument("--max-n", type=int, default=4)
    p.add_argument("--seed", type=int, default=0)
    return ap


def config_from_args(args):
    if args.command == "verify":
        cfg = Config(n=max(args.max_n, 1), max_n_verify=args.max_n, seed=args.seed, format="json")
    else:
        cfg = Config(
            n=args.n,
            A_override=args.A,
            basis=getattr(args, "basis", "s"),
            format=args.format,
        )
    return check_config(cfg)


COMMANDS = {
    "table": cmd_table,
    "op": cmd_op,
    "macdonald": cmd_macdonald,
    "adams": cmd_adams,
    "verify": cmd_verify,
}


def main(argv=None, out=None):
    out = out or sys.stdout
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        cfg = config_from_args(args)
        return COMMANDS[args.command](args, cfg, out) or 0
    except UsageError as exc:
        parser.error(str(exc))
    except ArithmeticError as exc:
        print(f"{type(exc).__name__}: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
