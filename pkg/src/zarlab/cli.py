"""Command-line front end.

Exit status: 0 success, 1 invalid input or domain error, 2 search budget
exhausted (partial result printed), 3 internal inconsistency.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import os
import sys
import time
from dataclasses import dataclass, field

from . import bounds as B
from . import constructions as C
from .errors import ConstructionError, DomainError, GraphFormatError, TooLargeError
from .graphio import read_graph, write_graph, write_matrix
from .spectral import CERT_TOL, certify, find_kst, spectral_radius, srg_profile
from .zexact import Status, zarankiewicz_exact

EXIT_OK, EXIT_INPUT, EXIT_BUDGET, EXIT_INCONSISTENT = 0, 1, 2, 3

CSV_HEADERS = {
    "bound": ["family", "k", "value", "best"],
    "spectral-bound": ["family", "k", "value"],
    "edge-bound": ["family", "k", "value"],
    "exact": ["m", "n", "s", "t", "value", "status", "nodes_explored", "bound_k", "bound_value"],
    "construct": ["name", "n", "e", "verified_s", "verified_t", "free"],
    "certify": ["n", "e", "s", "t", "free", "mu", "family", "k", "bound", "observed", "slack", "equality"],
    "srg": ["n", "regular", "degree", "lambda", "mu_param", "is_srg", "uniform_pairs", "c",
            "mu", "in0_s", "in0_bound", "in0_equality"],
    "scan": ["m", "n_lo", "n_hi"],
}


class CliError(Exception):
    def __init__(self, message, code=EXIT_INPUT):
        super().__init__(message)
        self.code = code


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise CliError(f"{self.prog}: {message}")


@dataclass
class RunConfig:
    command: str
    args: dict
    report: str = "table"
    output: str | None = None
    ns: argparse.Namespace | None = field(default=None, repr=False)


@dataclass
class Outcome:
    code: int
    stdout: str = ""
    stderr: str = ""


def _kvalue(text):
    if text == "auto":
        return "auto"
    try:
        return int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer or 'auto', got {text!r}") from None


def _int_list(text):
    try:
        vals = [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None
    if not vals or any(v < 1 for v in vals):
        raise argparse.ArgumentTypeError(f"expected positive integers, got {text!r}")
    return vals


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--report", choices=["table", "csv", "json"], default="table",
                        help="report format")
    common.add_argument("--output", metavar="PATH", help="write the report here instead of stdout")
    common.add_argument("--seed", type=int, default=0, help="seed for any randomness (none in use)")

    def report_alias(p):
        p.add_argument("--format", dest="report", choices=["table", "csv", "json"],
                       help="same as --report")

    parser = _Parser(prog="zarlab", description="Zarankiewicz bounds, exact values and certificates.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("bound", parents=[common], help="closed-form bounds on z(m,n,s,t)")
    for name in ("m", "n", "s", "t"):
        p.add_argument(f"--{name}", type=int, required=True)
    p.add_argument("--k", type=_kvalue, default="auto")
    p.add_argument("--family", choices=["kst", "furedi", "generic", "bg", "all"], default="generic")
    report_alias(p)

    p = sub.add_parser("spectral-bound", parents=[common], help="bounds on the spectral radius")
    for name in ("n", "s", "t"):
        p.add_argument(f"--{name}", type=int, required=True)
    p.add_argument("--k", type=_kvalue, default="auto")
    report_alias(p)

    p = sub.add_parser("edge-bound", parents=[common], help="edge bound for K_{s,t}-free graphs")
    for name in ("n", "s", "t"):
        p.add_argument(f"--{name}", type=int, required=True)
    report_alias(p)

    p = sub.add_parser("exact", parents=[common], help="exact z(m,n,s,t) by branch and bound")
    for name in ("m", "n", "s", "t"):
        p.add_argument(f"--{name}", type=int, required=True)
    p.add_argument("--time-limit", type=float, metavar="S")
    p.add_argument("--node-limit", type=int, metavar="N")
    p.add_argument("--witness-out", metavar="PATH")
    report_alias(p)

    p = sub.add_parser("construct", help="build a witness graph")
    csub = p.add_subparsers(dest="kind", required=True, parser_class=_Parser)
    graph_out = _Parser(add_help=False)
    graph_out.add_argument("--out", metavar="PATH", help="graph file; stdout if omitted")
    graph_out.add_argument("--format", choices=["edgelist", "graph6"], default="edgelist",
                           help="graph file format")
    c = csub.add_parser("friendship", parents=[common, graph_out])
    c.add_argument("--f", type=int, required=True)
    c = csub.add_parser("polarity", parents=[common, graph_out])
    c.add_argument("--q", type=int, required=True)
    c = csub.add_parser("norm", parents=[common, graph_out])
    c.add_argument("--q", type=int, required=True)
    c.add_argument("--t", type=int, required=True)
    c = csub.add_parser("brown", parents=[common, graph_out])
    c.add_argument("--q", type=int, required=True)
    c.add_argument("--delta", type=int)
    c = csub.add_parser("paley", parents=[common, graph_out])
    c.add_argument("--q", type=int, required=True)

    p = sub.add_parser("certify", parents=[common], help="certify a graph against the bounds")
    p.add_argument("--graph", required=True, metavar="PATH")
    p.add_argument("--s", type=int, required=True)
    p.add_argument("--t", type=int, required=True)
    p.add_argument("--graph-format", choices=["edgelist", "graph6", "auto"], default="auto")
    p.add_argument("--tol", type=float, default=CERT_TOL)
    report_alias(p)

    p = sub.add_parser("srg", parents=[common], help="strongly-regular profile of a graph")
    p.add_argument("--graph", required=True, metavar="PATH")
    p.add_argument("--graph-format", choices=["edgelist", "graph6", "auto"], default="auto")
    p.add_argument("--tol", type=float, default=CERT_TOL)
    report_alias(p)

    p = sub.add_parser("scan", parents=[common], help="where k gives the best generic bound")
    p.add_argument("--s", type=int, required=True)
    p.add_argument("--t", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--m", type=_int_list, required=True, metavar="M1,M2,...")
    p.add_argument("--points", type=int, default=200)
    report_alias(p)
    return parser


_META = {"report", "output", "command"}


def parse_args(argv) -> RunConfig:
    ns = build_parser().parse_args(argv)
    command = ns.command if ns.command != "construct" else f"construct {ns.kind}"
    args = {k: v for k, v in vars(ns).items() if k not in _META and k != "kind"}
    return RunConfig(command, args, ns.report or "table", ns.output, ns)


# -- commands ----------------------------------------------------------------
# each returns (results, rows, status, code)

def _bound(a):
    inst = B.ZInstance(a["m"], a["n"], a["s"], a["t"])
    fam, k = a["family"], a["k"]
    if k != "auto" and fam not in ("generic", "all"):
        raise CliError("--k applies only to --family generic or all")
    kb, _ = B.best_k(inst)
    chosen = kb if k == "auto" else k
    rows = []
    if fam in ("kst", "all"):
        rows.append({"family": B.BoundFamily.KST.value, "k": None, "value": B.kst_bound(inst)})
    if fam in ("furedi", "all") and (fam == "furedi" or inst.s >= inst.t):
        rows.append({"family": B.BoundFamily.FUREDI.value, "k": None, "value": B.furedi_bound(inst)})
    if fam == "generic":
        rows.append({"family": B.BoundFamily.GENERIC_K.value, "k": chosen,
                     "value": B.generic_bound(inst, chosen)})
    if fam == "all":
        for i in range(inst.s - 1):
            rows.append({"family": B.BoundFamily.GENERIC_K.value, "k": i,
                         "value": B.generic_bound(inst, i)})
    if fam in ("bg", "all") and (fam == "bg" or inst.s >= inst.t):
        rows.append({"family": B.BoundFamily.BABAI_GUIDULI_MAIN.value, "k": None,
                     "value": B.babai_guiduli_main_term(inst.n, inst.s, inst.t)})
    for r in rows:
        r["best"] = r["family"] == B.BoundFamily.GENERIC_K.value and r["k"] == chosen
    results = {"bounds": rows, "k_used": chosen, "degenerate": inst.degenerate}
    return results, rows, "ok", EXIT_OK


def _spectral_bound(a):
    n, s, t, k = a["n"], a["s"], a["t"], a["k"]
    rows = []
    if t == 2:
        if k not in ("auto", 0):
            raise CliError("--k is not used when t = 2")
        rows.append({"family": B.SpectralFamily.IN0.value, "k": None,
                     "value": B.spectral_bound_t2(n, s)})
    else:
        ks = range(0, min(s, t) - 1)
        if k == "auto":
            vals = [(B.spectral_bound_generic(n, s, t, i), i) for i in ks]
            best = vals[0]
            for v, i in vals[1:]:
                if v < best[0] - B.REL_TOL * best[0]:
                    best = (v, i)
            k = best[1]
        value = B.spectral_bound_generic(n, s, t, k)
        fam = B.SpectralFamily.IN1 if (k == t - 2 and s >= t) else B.SpectralFamily.GENERIC_SPECTRAL_K
        rows.append({"family": fam.value, "k": k, "value": value})
    if s >= t:
        rows.append({"family": B.BoundFamily.BABAI_GUIDULI_MAIN.value, "k": None,
                     "value": B.babai_guiduli_main_term(n, s, t)})
    return {"bounds": rows, "k_used": rows[0]["k"]}, rows, "ok", EXIT_OK


def _edge_bound(a):
    value = B.edge_bound(a["n"], a["s"], a["t"])
    rows = [{"family": B.SpectralFamily.EDGE_BOUND_IN2.value, "k": a["t"] - 2, "value": value}]
    return {"bounds": rows}, rows, "ok", EXIT_OK


def _exact(a):
    m, n, s, t = a["m"], a["n"], a["s"], a["t"]
    res = zarankiewicz_exact(m, n, s, t, time_limit=a["time_limit"], node_limit=a["node_limit"])
    kb, vb = B.best_k(B.ZInstance(m, n, s, t))
    witness = res.witness.to_strings()
    if a["witness_out"]:
        with open(a["witness_out"], "w") as fh:
            fh.write(write_matrix(witness, f"z({m},{n},{s},{t}) >= {res.value} [{res.status.value}]"))
    results = {"value": res.value, "status": res.status.value, "nodes_explored": res.nodes_explored,
               "witness": witness, "bound_k": kb, "bound_value": vb}
    row = {"m": m, "n": n, "s": s, "t": t, "value": res.value, "status": res.status.value,
           "nodes_explored": res.nodes_explored, "bound_k": kb, "bound_value": vb}
    if res.status is Status.EXACT:
        return results, [row], "ok", EXIT_OK
    return results, [row], "lower_bound_only", EXIT_BUDGET


def _construct(a, kind):
    if kind == "friendship":
        G, st = C.friendship_graph(a["f"]), (2, 2)
    elif kind == "polarity":
        G, st = C.polarity_graph(a["q"]), (2, 2)
    elif kind == "norm":
        G, st = C.norm_graph(a["q"], a["t"]), (math.factorial(a["t"] - 1) + 1, a["t"])
    elif kind == "brown":
        G, st = C.brown_graph(a["q"], a["delta"]), (3, 3)
    else:
        G, st = C.paley_graph(a["q"]), None
    free = None
    if st is not None:
        try:
            free = find_kst(G, *st) is None
        except TooLargeError:
            free = None
        if free is False and not (kind == "brown" and a["delta"] is not None):
            raise CliError(f"{G.name} contains K_{{{st[0]},{st[1]}}}", EXIT_INCONSISTENT)
    text = write_graph(G, a["format"])
    if a["out"]:
        with open(a["out"], "w") as fh:
            fh.write(text)
    row = {"name": G.name, "n": G.n, "e": G.e, "verified_s": st[0] if st else None,
           "verified_t": st[1] if st else None, "free": free}
    results = dict(row)
    if not a["out"]:
        results["graph"] = text
    return results, [row], "ok", EXIT_OK


def _load(a):
    try:
        return read_graph(a["graph"], a["graph_format"])
    except OSError as exc:
        raise CliError(f"--graph: cannot read {a['graph']}: {exc.strerror}") from None
    except GraphFormatError as exc:
        raise CliError(f"--graph {a['graph']}: {exc}") from None


def _certify(a):
    G = _load(a)
    rep = certify(G, a["s"], a["t"], tol=a["tol"])
    problems = rep.inconsistencies()
    if problems:
        raise CliError("inconsistent certificate: " + "; ".join(problems), EXIT_INCONSISTENT)
    checks = [{"family": b.family.value, "k": b.k, "bound": b.value, "observed": b.observed,
               "slack": b.slack, "equality": b.equality} for b in rep.bounds]
    results = {"n": rep.n, "e": rep.e, "s": rep.s, "t": rep.t, "free": rep.free,
               "witness": None if rep.witness is None else {"S": rep.witness[0], "T": rep.witness[1]},
               "mu": rep.mu, "mu_residual": rep.mu_residual, "mu_converged": rep.mu_converged,
               "bounds": checks}
    rows = [{"n": rep.n, "e": rep.e, "s": rep.s, "t": rep.t, "free": rep.free, "mu": rep.mu, **c}
            for c in checks]
    return results, rows, "ok", EXIT_OK


def _srg(a):
    G = _load(a)
    prof = srg_profile(G)
    mu = spectral_radius(G).mu
    in0_s = in0 = eq = None
    if prof.uniform_pairs and prof.c >= 1:
        in0_s = prof.c + 1
        in0 = B.spectral_bound_t2(G.n, in0_s)
        eq = abs(mu - in0) <= a["tol"]
    row = {"n": prof.n, "regular": prof.regular, "degree": prof.degree, "lambda": prof.lambda_,
           "mu_param": prof.mu_param, "is_srg": prof.is_srg, "uniform_pairs": prof.uniform_pairs,
           "c": prof.c, "mu": mu, "in0_s": in0_s, "in0_bound": in0, "in0_equality": eq}
    return dict(row), [row], "ok", EXIT_OK


def _scan(a):
    rep = B.dominance_scan(a["s"], a["t"], a["k"], a["m"], a["points"])
    rows = [{"m": m, "n_lo": lo, "n_hi": hi} for m, (lo, hi) in rep.boundary_summary.items()]
    results = {"s": rep.s, "t": rep.t, "k": rep.k, "intervals": rows,
               "grid": [{"m": m, "n": n, "winner": w} for m, n, w in rep.grid]}
    return results, rows, "ok", EXIT_OK


# -- rendering ---------------------------------------------------------------

def _fmt(v):
    if v is None:
        return ""
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, float):
        return repr(v)
    return str(v)


def render(config: RunConfig, results, rows, status, elapsed_ms) -> str:
    cmd = config.command.split()[0]
    if config.report == "json":
        doc = {"command": config.command, "inputs": config.args, "results": results,
               "status": status, "elapsed_ms": elapsed_ms}
        return json.dumps(doc, indent=2, sort_keys=True) + "\n"
    header = CSV_HEADERS[cmd]
    if config.report == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(header)
        for r in rows:
            w.writerow([_fmt(r.get(h)) for h in header])
        return buf.getvalue()
    table = [header] + [[_fmt(r.get(h)) for h in header] for r in rows]
    widths = [max(len(row[i]) for row in table) for i in range(len(header))]
    lines = ["  ".join(c.ljust(wd) for c, wd in zip(row, widths)).rstrip() for row in table]
    lines.append(f"status: {status}")
    return "\n".join(lines) + "\n"


def run(config: RunConfig) -> Outcome:
    start = time.monotonic()
    a = config.args
    cmd = config.command
    try:
        if cmd == "bound":
            out = _bound(a)
        elif cmd == "spectral-bound":
            out = _spectral_bound(a)
        elif cmd == "edge-bound":
            out = _edge_bound(a)
        elif cmd == "exact":
            out = _exact(a)
        elif cmd.startswith("construct"):
            out = _construct(a, cmd.split()[1])
        elif cmd == "certify":
            out = _certify(a)
        elif cmd == "srg":
            out = _srg(a)
        elif cmd == "scan":
            out = _scan(a)
        else:  # pragma: no cover - argparse restricts choices
            raise CliError(f"unknown command {cmd!r}")
    except CliError as exc:
        return Outcome(exc.code, stderr=f"error: {exc}\n")
    except (DomainError, GraphFormatError, TooLargeError) as exc:
        return Outcome(EXIT_INPUT, stderr=f"error: {exc}\n")
    except ConstructionError as exc:
        return Outcome(EXIT_INCONSISTENT, stderr=f"error: {exc}\n")
    except OSError as exc:
        return Outcome(EXIT_INPUT, stderr=f"error: {exc.filename}: {exc.strerror}\n")
    results, rows, status, code = out
    if cmd.startswith("construct") and not a["out"] and config.report == "table" and not config.output:
        return Outcome(code, stdout=results["graph"])
    elapsed_ms = round((time.monotonic() - start) * 1000.0, 3)
    text = render(config, results, rows, status, elapsed_ms)
    if config.output:
        with open(config.output, "w") as fh:
            fh.write(text)
        text = ""
    return Outcome(code, stdout=text)


def execute(argv) -> Outcome:
    """Parse ``argv`` and run it; never raises for bad input."""
    try:
        config = parse_args(argv)
    except CliError as exc:
        return Outcome(exc.code, stderr=f"error: {exc}\n")
    threads = os.environ.get("ZARLAB_THREADS")
    if threads is not None and not (threads.isdigit() and int(threads) > 0):
        return Outcome(EXIT_INPUT, stderr=f"error: ZARLAB_THREADS must be a positive integer, got {threads!r}\n")
    return run(config)


def main(argv=None) -> int:
    argv = sys.argv[1:] if argv is None else argv
    try:
        outcome = execute(argv)
    except SystemExit as exc:  # --help
        return int(exc.code or 0)
    sys.stdout.write(outcome.stdout)
    sys.stderr.write(outcome.stderr)
    sys.stdout.flush()
    return outcome.code


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
