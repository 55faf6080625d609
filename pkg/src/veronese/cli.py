"""Command-line front end.

Every flag can also come from an environment variable named VERONESE_<FLAG>
(for example VERONESE_ALPHA=1,4,4,5,7 or VERONESE_TIE_BREAK=last-lex).  An
explicit flag always wins over the environment.

Exit codes: 0 success, 2 usage error, 3 invalid configuration,
4 a theorem-level check failed (non-linear quotient, sweep failure).
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from dataclasses import dataclass
from typing import Optional

from . import ideal, invariants, order, sweep
from .cliques import enumerate_maximal_cliques, equivalence_classes, relative_signature
from .lattice import Config, ConfigError, enumerate_points

COMMANDS = (
    "points", "cliques", "classes", "order", "verify",
    "invariants", "bounds", "groebner", "dual", "sweep",
)
OUTPUTS = ("json", "csv", "text")
CSV_COMMANDS = ("points", "invariants", "bounds", "sweep")
ENV_PREFIX = "VERONESE_"

EXIT_OK, EXIT_USAGE, EXIT_CONFIG, EXIT_THEOREM = 0, 2, 3, 4


class UsageError(Exception):
    pass


@dataclass(frozen=True)
class RunRequest:
    command: str
    config: Optional[Config] = None
    output: str = "json"
    tie_break: str = "first-lex"
    max_n: int = 5
    max_d: int = 8
    max_t: int = 400
    seed: Optional[int] = None
    sample: Optional[int] = None
    oracle: bool = True


def _env(name: str, default=None):
    return os.environ.get(ENV_PREFIX + name.upper().replace("-", "_"), default)


def parse_alpha(text: str) -> tuple[tuple[int, ...], bool]:
    """Parse '1,4,4,5,7'; returns the sorted caps and whether sorting changed them."""
    try:
        caps = tuple(int(x) for x in text.replace(" ", "").split(",") if x != "")
    except ValueError:
        raise UsageError(f"--alpha must be a comma-separated list of integers, got {text!r}") from None
    if not caps:
        raise UsageError("--alpha is empty")
    ordered = tuple(sorted(caps))
    return ordered, ordered != caps


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="veronese",
        description="Sortedness graphs, maximal cliques and invariants of Veronese-type algebras.",
    )
    parser.add_argument("command", choices=COMMANDS)
    parser.add_argument("--n", type=int, default=_env("n"))
    parser.add_argument("--d", type=int, default=_env("d"))
    parser.add_argument("--alpha", default=_env("alpha"), help="comma-separated caps, e.g. 1,4,4,5,7")
    parser.add_argument("--output", choices=OUTPUTS, default=_env("output", "json"))
    parser.add_argument("--tie-break", choices=order.TIE_BREAKS, default=_env("tie_break", "first-lex"))
    parser.add_argument("--max-n", type=int, default=_env("max_n", 5))
    parser.add_argument("--max-d", type=int, default=_env("max_d", 8))
    parser.add_argument("--max-t", type=int, default=_env("max_t", 400))
    parser.add_argument("--seed", type=int, default=_env("seed"))
    parser.add_argument("--sample", type=int, default=_env("sample"),
                        help="sweep only this many configs, drawn with --seed")
    parser.add_argument("--no-oracle", action="store_true",
                        help="sweep without the monomial colon oracle")
    return parser


def request_from_args(args: argparse.Namespace) -> RunRequest:
    if args.output == "csv" and args.command not in CSV_COMMANDS:
        raise UsageError(f"csv output is only available for {', '.join(CSV_COMMANDS)}")
    config = None
    if args.command != "sweep":
        if args.n is None or args.d is None or args.alpha is None:
            raise UsageError(f"{args.command} needs --n, --d and --alpha")
        alpha, reordered = parse_alpha(args.alpha)
        if reordered:
            print(f"warning: alpha sorted to {','.join(map(str, alpha))}", file=sys.stderr)
        config = Config(int(args.n), int(args.d), alpha)
    seed = None if args.seed is None else int(args.seed)
    sample = None if args.sample is None else int(args.sample)
    if sample is not None and seed is None:
        seed = 0
    return RunRequest(
        command=args.command,
        config=config,
        output=args.output,
        tie_break=args.tie_break,
        max_n=int(args.max_n),
        max_d=int(args.max_d),
        max_t=int(args.max_t),
        seed=seed,
        sample=sample,
        oracle=not args.no_oracle,
    )


# --------------------------------------------------------------------------
# rendering
# --------------------------------------------------------------------------

def _json(doc) -> str:
    return json.dumps(doc, indent=2) + "\n"


def _csv(rows: list[dict]) -> str:
    buf = io.StringIO()
    if rows:
        writer = csv.DictWriter(buf, fieldnames=list(rows[0]), lineterminator="\n")
        writer.writeheader()
        writer.writerows(rows)
    return buf.getvalue()


def _text_table(rows: list[dict]) -> str:
    if not rows:
        return ""
    keys = list(rows[0])
    cells = [keys] + [[str(r[k]) for k in keys] for r in rows]
    widths = [max(len(row[i]) for row in cells) for i in range(len(keys))]
    return "".join("  ".join(c.ljust(w) for c, w in zip(row, widths)).rstrip() + "\n" for row in cells)


def _render(rows: list[dict], output: str, doc=None) -> str:
    if output == "json":
        return _json(rows if doc is None else doc)
    if output == "csv":
        return _csv(rows)
    return _text_table(rows)


def _point_rows(config: Config) -> list[dict]:
    rows = []
    for i, p in enumerate(enumerate_points(config)):
        row = {"index": i}
        row.update({f"c{k}": x for k, x in enumerate(p, start=1)})
        rows.append(row)
    return rows


def _cmd_points(req: RunRequest) -> tuple[int, str]:
    c = req.config
    if req.output == "text":
        return EXIT_OK, ideal.export_cas(c, "ideal")
    if req.output == "csv":
        return EXIT_OK, _csv(_point_rows(c))
    return EXIT_OK, _json(ideal.ideal_to_json(c))


def _cmd_cliques(req: RunRequest) -> tuple[int, str]:
    cl = enumerate_maximal_cliques(req.config)
    if req.output == "text":
        lines = [" > ".join("".join(map(str, p)) for p in c.chain) + f"   sgn {c.signature}" for c in cl]
        return EXIT_OK, "\n".join(lines) + "\n"
    return EXIT_OK, _json([c.to_json() for c in cl])


def _cmd_classes(req: RunRequest) -> tuple[int, str]:
    rows = []
    for cls in equivalence_classes(req.config):
        doc = cls.to_json()
        doc["poset"] = cls.poset.to_json()
        doc["signatures"] = [list(s) for s in cls.signatures]
        rows.append(doc)
    if req.output == "text":
        flat = [
            {"first": r["first"], "rank": r["rank"], "size": r["size"],
             "kappa": r["kappa"], "L": r["L"], "poset": r["poset"]}
            for r in rows
        ]
        return EXIT_OK, _text_table(flat)
    return EXIT_OK, _json(rows)


def _cmd_order(req: RunRequest) -> tuple[int, str]:
    o = order.build_order(req.config, req.tie_break)
    ws = order.omegas(o)
    rows = []
    for pos, (clique, k, w) in enumerate(zip(o.sequence, o.class_of, ws)):
        cls = o.classes[k]
        rows.append({
            "position": pos,
            "class": k,
            "rank": cls.rank,
            "first": list(clique.first),
            "signature": list(clique.signature),
            "relative": list(relative_signature(clique.signature, cls.marked_L)),
            "omega": w,
        })
    return EXIT_OK, _render(rows, req.output)


def _cmd_verify(req: RunRequest) -> tuple[int, str]:
    o = order.build_order(req.config, req.tie_break)
    try:
        report = order.verify_linear_quotients(req.config, o)
    except order.TheoremViolation as exc:
        return EXIT_THEOREM, _json({"linear": False, "error": str(exc)})
    p, beta = report.top_betti()
    doc = {
        "config": req.config.to_dict(),
        "tie_break": req.tie_break,
        "linear": report.linear,
        "max_omega": p,
        "top_count": beta,
        "records": report.to_json(),
    }
    if req.output == "text":
        return EXIT_OK, f"linear quotients: {report.linear}\nmax omega: {p}\ncount at max: {beta}\n"
    return EXIT_OK, _json(doc)


def _cmd_invariants(req: RunRequest) -> tuple[int, str]:
    try:
        rep = invariants.invariant_report(req.config)
    except invariants.DegenerateConfigError as exc:
        raise ConfigError(str(exc)) from None
    doc = rep.to_json()
    doc["bounds"] = [rep.lower_bound, rep.upper_bound]
    if req.output == "json":
        return EXIT_OK, _json(doc)
    flat = {k: v for k, v in doc.items() if k != "bounds"}
    return EXIT_OK, _render([flat], req.output)


def _cmd_bounds(req: RunRequest) -> tuple[int, str]:
    try:
        b = invariants.bound_terms(req.config)
    except invariants.DegenerateConfigError as exc:
        raise ConfigError(str(exc)) from None
    row = {
        "lower": b.lower,
        "upper": b.upper,
        "mult": invariants.multiplicity(req.config),
        "cliques_term": b.cliques,
        "d1_power": b.d1_power,
        "d2_power": b.d2_power,
        "binomial_term": b.binomial,
    }
    return EXIT_OK, _render([row], req.output, doc=row)


def _cmd_groebner(req: RunRequest) -> tuple[int, str]:
    if req.output == "text":
        return EXIT_OK, ideal.export_cas(req.config, "groebner")
    return EXIT_OK, _json(ideal.groebner_to_json(req.config))


def _cmd_dual(req: RunRequest) -> tuple[int, str]:
    if req.output == "text":
        return EXIT_OK, ideal.export_cas(req.config, "dual")
    return EXIT_OK, _json(ideal.dual_to_json(req.config))


def _cmd_sweep(req: RunRequest) -> tuple[int, str]:
    family = sweep.configs(req.max_n, req.max_d, req.max_t)
    if req.sample is not None:
        family = sweep.sample_configs(family, req.sample, req.seed)
    report = sweep.run_sweep(family, oracle=req.oracle)
    rows = [r.to_row() for r in report.results]
    status = EXIT_OK if not report.failures() else EXIT_THEOREM
    if req.output == "json":
        summary = report.summary()
        # wall time is the one nondeterministic field; keep it out of the document
        summary.pop("seconds")
        return status, _json({"summary": summary, "configs": rows})
    return status, _render(rows, req.output)


HANDLERS = {
    "points": _cmd_points,
    "cliques": _cmd_cliques,
    "classes": _cmd_classes,
    "order": _cmd_order,
    "verify": _cmd_verify,
    "invariants": _cmd_invariants,
    "bounds": _cmd_bounds,
    "groebner": _cmd_groebner,
    "dual": _cmd_dual,
    "sweep": _cmd_sweep,
}


def run(req: RunRequest) -> tuple[int, str]:
    """Dispatch one request; returns (exit status, document)."""
    try:
        return HANDLERS[req.command](req)
    except order.TheoremViolation as exc:
        return EXIT_THEOREM, _json({"error": str(exc)})


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        req = request_from_args(args)
        status, doc = run(req)
    except UsageError as exc:
        parser.print_usage(sys.stderr)
        print(f"veronese: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ConfigError as exc:
        print(f"veronese: invalid configuration: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    sys.stdout.write(doc)
    return status


if __name__ == "__main__":
    sys.exit(main())
