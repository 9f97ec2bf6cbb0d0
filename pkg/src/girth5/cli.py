"""Command-line entry point: ``girth5 <command> ...``.

Exit codes: 0 success, 1 usage error, 2 verification or table failure.
Wall-clock timings go to stderr so stdout is reproducible.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import analysis, augment, bipartite, exact
from .errors import FreenessViolation, Girth5Error, TableMismatch
from .finite_geometry import incidence_graph, prime_power
from .graph import (
    Graph,
    from_edge_list,
    girth,
    graph6_decode,
    graph6_encode,
    is_girth5_free,
    to_edge_list,
)

EXIT_OK, EXIT_USAGE, EXIT_FAIL = 0, 1, 2


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def parse_subset(spec: str) -> list[int]:
    """``"0-6,10,12-13"`` -> [0, ..., 6, 10, 12, 13]."""
    out = []
    for chunk in spec.split(","):
        chunk = chunk.strip()
        if not chunk:
            continue
        if "-" in chunk:
            lo, hi = chunk.split("-", 1)
            out.extend(range(int(lo), int(hi) + 1))
        else:
            out.append(int(chunk))
    return out


def read_graph(path: str) -> Graph:
    data = Path(path).read_bytes()
    if path.endswith((".txt", ".edges", ".el")):
        return from_edge_list(data.decode())
    return graph6_decode(data.strip())


def write_graph(g: Graph, path: str | None, out):
    if path is None:
        out.write(graph6_encode(g).decode() + "\n")
    elif path.endswith((".txt", ".edges", ".el")):
        Path(path).write_text(to_edge_list(g))
    else:
        Path(path).write_bytes(graph6_encode(g) + b"\n")


def cmd_construct(args, out):
    if args.method == "incidence":
        q = args.q
        if q is None:
            raise _UsageError("construct --method incidence needs --q")
        g = incidence_graph(q)
    elif args.n is None:
        raise _UsageError(f"construct --method {args.method} needs --n")
    elif args.method == "zlower":
        g = bipartite.z_lower_construct(args.n)
    elif args.method == "augmented":
        g = augment.dense_girth5(args.n, args.eps)
    else:
        g = exact.exact_ex(args.n, exact.SearchConfig(extended=args.budget == "extended")).witness
    check = is_girth5_free(g)
    out.write(f"n={g.n} m={g.m} girth5_free={'yes' if check else 'no'}\n")
    write_graph(g, args.out, out)
    if args.method != "incidence" and not check:
        return EXIT_FAIL
    return EXIT_OK


def cmd_verify(args, out):
    g = read_graph(args.file)
    check = is_girth5_free(g)
    out.write(f"n={g.n} m={g.m}\n")
    out.write(f"girth5_free={'yes' if check else 'no'}\n")
    status = EXIT_OK
    if not check:
        out.write("witness=" + " ".join(map(str, check.witness)) + "\n")
        status = EXIT_FAIL
    if args.girth:
        gi = girth(g)
        out.write(f"girth={'inf' if gi == float('inf') else int(gi)}\n")
    if args.certificate:
        cert = analysis.path2_certificate(g, parse_subset(args.certificate))
        out.write(
            f"certificate |A|={len(cert.subset)} sigma={cert.sigma} budget={cert.budget} "
            f"slack={cert.slack} m_star={cert.max_insertable} verdict={'pass' if cert.verdict else 'fail'}\n"
        )
        if cert.witness:
            out.write("c4_witness=" + " ".join(map(str, cert.witness)) + "\n")
        if not cert.verdict:
            status = EXIT_FAIL
    return status


def cmd_exact(args, out):
    cfg = exact.SearchConfig(extended=args.budget == "extended", threads=args.threads)
    if args.table:
        report = exact.verify_small_table(cfg, raise_on_mismatch=False)
        out.write("\n".join(report.lines()) + "\n")
        return EXIT_OK if report.ok else EXIT_FAIL
    if args.n is None:
        raise _UsageError("exact needs --n or --table")
    res = exact.exact_z(args.n, cfg) if args.bipartite else exact.exact_ex(args.n, cfg)
    out.write(f"mode={res.mode} n={res.n} value={res.value}\n")
    out.write(f"witness={res.witness_g6}\n")
    out.write(f"nodes={res.nodes}\n")
    print(f"wall_time={res.elapsed:.3f}s", file=sys.stderr)
    ref = (exact.REFERENCE_Z if args.bipartite else exact.REFERENCE_EX).get(args.n)
    if ref is not None and ref != res.value:
        out.write(f"MISMATCH reference={ref}\n")
        return EXIT_FAIL
    return EXIT_OK


def cmd_bounds(args, out):
    out.write("\n".join(analysis.bounds_report(args.n).lines()) + "\n")
    return EXIT_OK


def cmd_sweep(args, out):
    qs = [int(x) for x in args.q.split(",") if x.strip()]
    for q in qs:
        prime_power(q)
    rows = analysis.sweep(qs, args.eps)
    text = analysis.sweep_csv(rows, timing=args.timing)
    if args.csv:
        Path(args.csv).write_text(text)
    else:
        out.write(text)
    return EXIT_OK


def cmd_probe(args, out):
    g = incidence_graph(args.q)
    rep = analysis.remark_probe(g, args.part, args.delta, args.trials, args.seed)
    out.write(f"q={args.q} n={g.n} part={rep.part} delta={rep.delta} |A|={rep.size} trials={len(rep.trials)} seed={rep.seed}\n")
    out.write("trial e(A,Y) sigma1_lb sigma_A budget m_star m_star/|A|^1.5 verdict\n")
    for i, t in enumerate(rep.trials):
        c = t.certificate
        out.write(f"{i} {t.cross_edges} {t.sigma1_lower:.3f} {c.sigma} {c.budget} {c.max_insertable} "
                  f"{t.ratio:.6f} {'pass' if c.verdict else 'fail'}\n")
    lo, med, hi = rep.ratio_stats()
    out.write(f"ratio min={lo:.6f} median={med:.6f} max={hi:.6f} all_pass={'yes' if rep.all_pass else 'no'}\n")
    return EXIT_OK if rep.all_pass else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="girth5", description="Dense graphs of girth at least five.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    c = sub.add_parser("construct", help="build a graph and emit graph6")
    c.add_argument("--n", type=int)
    c.add_argument("--method", choices=["incidence", "zlower", "augmented", "exact"], default="augmented")
    c.add_argument("--q", type=int)
    c.add_argument("--eps", type=float, default=augment.DEFAULT_EPS)
    c.add_argument("--budget", choices=["default", "extended"], default="default")
    c.add_argument("--out", help="output file (.g6, or .txt/.edges for an edge list)")
    c.set_defaults(func=cmd_construct)

    v = sub.add_parser("verify", help="check a graph6 or edge-list file")
    v.add_argument("file")
    v.add_argument("--girth", action="store_true")
    v.add_argument("--certificate", metavar="A-SPEC", help="subset such as 0-6,10")
    v.set_defaults(func=cmd_verify)

    e = sub.add_parser("exact", help="exact ex(n) or z(n) by branch and bound")
    e.add_argument("--n", type=int)
    e.add_argument("--bipartite", action="store_true")
    e.add_argument("--budget", choices=["default", "extended"], default="default")
    e.add_argument("--threads", type=int, default=1)
    e.add_argument("--table", action="store_true", help="run the small-case table instead")
    e.set_defaults(func=cmd_exact)

    b = sub.add_parser("bounds", help="bounds and achieved edge counts at one n")
    b.add_argument("--n", type=int, required=True)
    b.set_defaults(func=cmd_bounds)

    s = sub.add_parser("sweep", help="augment PG(2,q) incidence graphs, CSV out")
    s.add_argument("--q", required=True, help="comma-separated prime powers")
    s.add_argument("--csv")
    s.add_argument("--eps", type=float, default=augment.DEFAULT_EPS)
    s.add_argument("--timing", action="store_true", help="fill the runtime column")
    s.set_defaults(func=cmd_sweep)

    r = sub.add_parser("probe", help="path certificates on random subsets of one part")
    r.add_argument("--q", type=int, required=True)
    r.add_argument("--delta", type=float, default=0.25)
    r.add_argument("--trials", type=int, default=20)
    r.add_argument("--seed", type=int, default=0)
    r.add_argument("--part", choices=["X", "Y"], default="X")
    r.set_defaults(func=cmd_probe)
    return p


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    args = build_parser().parse_args(argv)
    try:
        return args.func(args, out)
    except _UsageError as exc:
        print(f"girth5: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (TableMismatch, FreenessViolation) as exc:
        print(f"girth5: {exc}", file=sys.stderr)
        return EXIT_FAIL
    except (Girth5Error, ValueError, OSError) as exc:
        print(f"girth5: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
