"""Command-line front end.

Exit codes: 0 success, 1 invalid input, 2 size-limit refusal.  Exact values
are printed as "p/q" strings; reports are JSON.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
import warnings
from fractions import Fraction
from pathlib import Path

from . import acceptance
from .bounds import epsilon, epsilon_table
from .embedding import (
    EmbeddedGraph,
    euler_genus,
    format_embedding,
    is_edge_maximal_embedding,
    m_value,
    parse_embedding,
    trace_faces,
)
from .exact import ell, kappa_rho, max_induced_forest
from .generators import (
    diamond_cycle,
    k5_minus_e_projective,
    k7_torus,
    levi,
    random_4connected_triangulation,
    random_flip_triangulation,
    random_planar_triangulation,
    triakis_tetrahedron,
    triangle_blowup,
)
from .graph import Graph, GraphError, SizeLimitError, format_graph, parse_graph
from .greedy import greedy_reduce, theorem6_pipeline

THREADS_ENV = "ROBUSTCONN_THREADS"


class InputError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    # Usage errors count as invalid input.
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def frac_str(x) -> str:
    x = Fraction(x)
    return f"{x.numerator}/{x.denominator}"


def _read_text(path: str) -> str:
    try:
        return sys.stdin.read() if path == "-" else Path(path).read_text()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None


def _load(args, need_embedding: bool = False) -> tuple[Graph, EmbeddedGraph | None]:
    if getattr(args, "embedding", None):
        emb = parse_embedding(_read_text(args.embedding))
        return emb.base, emb
    if need_embedding:
        raise InputError("this subcommand needs --embedding")
    if not getattr(args, "graph", None):
        raise InputError("one of --graph or --embedding is required")
    return parse_graph(_read_text(args.graph)), None


def _parse_R(text: str | None, g: Graph) -> list[int]:
    if text is None:
        return list(range(g.n))
    try:
        R = sorted({int(t) for t in text.split(",") if t.strip()})
    except ValueError:
        raise InputError(f"--R must be comma-separated integers, got {text!r}") from None
    if not R:
        raise InputError("--R is empty")
    if R[0] < 0 or R[-1] >= g.n:
        raise InputError(f"--R has vertices outside 0..{g.n - 1}")
    return R


def _emit(args, payload, text: str | None = None) -> None:
    if args.format == "text" and text is not None:
        out = text + "\n"
    elif args.format == "csv":
        raise InputError("csv output is only available for bounds tables")
    else:
        out = json.dumps(payload, indent=2) + "\n"
    _write(args, out)


def _write(args, out: str) -> None:
    if getattr(args, "out", None):
        Path(args.out).write_text(out)
    else:
        sys.stdout.write(out)


# -- compute subcommands -----------------------------------------------------

def cmd_ell(args) -> int:
    g, _ = _load(args)
    R = _parse_R(args.R, g)
    rep = ell(g, R, force=args.force, timeout_ms=args.timeout_ms)
    _emit(args, rep.to_json())
    return 0


def cmd_kappa(args) -> int:
    g, _ = _load(args)
    rep = kappa_rho(g, force=args.force)
    _emit(args, rep.to_json())
    return 0


def cmd_maxleaf(args) -> int:
    g, _ = _load(args)
    rep = ell(g, range(g.n), force=args.force, timeout_ms=args.timeout_ms)
    payload = rep.to_json()
    payload["maxleaf"] = len(rep.witness)
    _emit(args, payload)
    return 0


def cmd_forest(args) -> int:
    g, _ = _load(args)
    size, witness = max_induced_forest(g, force=args.force)
    _emit(args, {"size": size, "witness": sorted(witness), "ratio": frac_str(Fraction(size, g.n))}, str(size))
    return 0


def cmd_m_value(args) -> int:
    _, emb = _load(args, need_embedding=True)
    m, witness = m_value(emb, force=args.force)
    _emit(args, {"m": m, "witness": sorted(witness), "ratio": frac_str(Fraction(m, emb.n))}, str(m))
    return 0


def cmd_genus(args) -> int:
    _, emb = _load(args, need_embedding=True)
    faces = trace_faces(emb)
    gamma = euler_genus(emb, faces)
    payload = {
        "euler_genus": gamma,
        "faces": len(faces),
        "orientable": emb.is_orientable(),
        "edge_maximal": is_edge_maximal_embedding(emb, faces),
    }
    _emit(args, payload, str(gamma))
    return 0


def cmd_greedy(args) -> int:
    g, _ = _load(args)
    if args.R is None:
        raise InputError("greedy needs --R")
    rest, trace = greedy_reduce(g, _parse_R(args.R, g))
    out = trace.to_json_lines() + json.dumps({"final": True, "remaining": sorted(rest)}) + "\n"
    _write(args, out)
    return 0


def cmd_pipeline(args) -> int:
    g, emb = _load(args)
    gamma = args.gamma
    if gamma is None:
        gamma = euler_genus(emb) if emb is not None else 0
    res = theorem6_pipeline(g, _parse_R(args.R, g), gamma)
    payload = {
        "ratio": frac_str(res.ratio),
        "strategy": res.strategy,
        "leaves": sorted(res.certificate.leaves_in_R),
        "tree_edges": [list(e) for e in res.certificate.tree.edges()],
        "dropped": res.dropped,
    }
    _emit(args, payload, frac_str(res.ratio))
    return 0


def _fraction_arg(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not a rational number: {text!r}") from None


def _range_arg(text: str) -> list[Fraction]:
    """'3', '3,4,5', '2..10' or '2..10:2'."""
    out = []
    for part in text.split(","):
        if ".." in part:
            lo, _, hi = part.partition("..")
            hi, _, step = hi.partition(":")
            a, b, s = _fraction_arg(lo), _fraction_arg(hi), _fraction_arg(step or "1")
            while a <= b:
                out.append(a)
                a += s
        else:
            out.append(_fraction_arg(part))
    return out


def cmd_bounds(args) -> int:
    if any(r.denominator != 1 for r in args.r):
        raise InputError("--r must be integers")
    rs = [int(r) for r in args.r]
    if args.eps and len(rs) == 1 and len(args.d) == 1:
        e = epsilon(rs[0], args.d[0])
        _emit(args, {"r": rs[0], "d": frac_str(args.d[0]), "eps": frac_str(e), "half_eps": frac_str(e / 2)}, frac_str(e))
        return 0
    rows = epsilon_table(rs, args.d)
    if args.format == "csv":
        buf = io.StringIO()
        writer = csv.DictWriter(buf, fieldnames=list(rows[0]), lineterminator="\n")
        writer.writeheader()
        writer.writerows(rows)
        _write(args, buf.getvalue())
    elif args.format == "json":
        _write(args, json.dumps(rows, indent=2) + "\n")
    else:
        _write(args, "".join(f"r={x['r']} d={x['d']} eps={x['eps']} ({x['eps_decimal']:.6f})\n" for x in rows))
    return 0


# -- generators --------------------------------------------------------------

def cmd_gen(args) -> int:
    fam = args.family
    if fam == "levi":
        inst = levi(args.n, args.r)
    elif fam == "diamond":
        inst = diamond_cycle(args.k, args.c)
    elif fam == "triakis":
        inst = triakis_tetrahedron()
    elif fam == "blowup":
        inst = triangle_blowup(parse_graph(_read_text(args.input)))
    elif fam == "k7torus":
        inst = k7_torus()
    elif fam == "k5me":
        inst = k5_minus_e_projective()
    elif fam == "triangulation":
        maker = {
            "stacked": random_planar_triangulation,
            "flip": random_flip_triangulation,
            "4conn": random_4connected_triangulation,
        }[args.kind]
        inst = maker(args.n, args.seed)
    else:  # pragma: no cover - argparse restricts choices
        raise InputError(f"unknown family {fam}")
    sidecar = {
        "name": inst.name,
        "n": inst.graph.n,
        "m": inst.graph.m,
        "designated_R": None if inst.designated_R is None else sorted(inst.designated_R),
        "legend": {str(k): v for k, v in sorted(inst.legend.items())},
    }
    if args.out:
        prefix = Path(args.out)
        prefix.with_suffix(".graph").write_text(format_graph(inst.graph))
        if inst.embedding is not None:
            prefix.with_suffix(".emb").write_text(format_embedding(inst.embedding))
        prefix.with_suffix(".legend.json").write_text(json.dumps(sidecar, indent=2) + "\n")
    else:
        text = format_embedding(inst.embedding) if inst.embedding is not None else format_graph(inst.graph)
        sys.stdout.write(text)
    return 0


# -- acceptance runner -------------------------------------------------------

def cmd_verify(args) -> int:
    only = None
    if args.only:
        only = [k.strip() for part in args.only for k in part.split(",") if k.strip()]
        unknown = [k for k in only if k not in acceptance.CRITERIA]
        if unknown:
            raise InputError(f"unknown criteria {unknown}; choose from {', '.join(acceptance.CRITERIA)}")
    results = acceptance.run(only, threads=args.threads, echo=lambda line: print(line, flush=True))
    passed = sum(r.passed for r in results)
    print(f"{passed}/{len(results)} criteria passed")
    if args.out:
        rows = [
            {"criterion": r.key, "passed": r.passed, "measured": r.measured, "seconds": round(r.seconds, 3)}
            for r in results
        ]
        Path(args.out).write_text(json.dumps(rows, indent=2) + "\n")
    return 0 if passed == len(results) else 1


def _default_threads() -> int:
    try:
        return max(int(os.environ.get(THREADS_ENV, "1")), 1)
    except ValueError:
        return 1


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--format", choices=["json", "csv", "text"], default="text",
                        help="text prints bare values where one exists, else JSON")
    common.add_argument("--out", help="write the report here instead of stdout")
    common.add_argument("--threads", type=int, default=_default_threads(),
                        help=f"worker count (default from ${THREADS_ENV}, else 1)")

    source = _Parser(add_help=False)
    source.add_argument("--graph", help="graph text file, '-' for stdin")
    source.add_argument("--embedding", help="embedding text file, '-' for stdin")
    source.add_argument("--force", action="store_true", help="run past size limits (may be very slow)")
    source.add_argument("--timeout-ms", type=float, default=None)

    p = _Parser(prog="robustconn", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add(name, fn, help_, parents=(common, source)):
        sp = sub.add_parser(name, parents=list(parents), help=help_)
        sp.set_defaults(func=fn)
        return sp

    add("ell", cmd_ell, "exact l(G, R)").add_argument("--R", help="comma-separated vertex ids (default: all)")
    add("kappa", cmd_kappa, "exact robust connectivity")
    add("maxleaf", cmd_maxleaf, "maximum leaf number")
    add("forest", cmd_forest, "maximum induced forest")
    add("m-value", cmd_m_value, "largest non-separating vertex set of an embedding")
    add("genus", cmd_genus, "Euler genus of an embedding")
    add("greedy", cmd_greedy, "greedy reduction trace as JSON lines").add_argument("--R")
    pl = add("pipeline", cmd_pipeline, "certified lower bound on l(G, R) for 3-connected graphs")
    pl.add_argument("--R")
    pl.add_argument("--gamma", type=int, default=None, help="Euler genus (default: from --embedding, else 0)")

    b = add("bounds", cmd_bounds, "eps_r(d) values and tables", parents=(common,))
    b.add_argument("--eps", action="store_true", help="print a single eps_r(d) value")
    b.add_argument("--r", type=_range_arg, default=[Fraction(3)])
    b.add_argument("--d", type=_range_arg, default=[Fraction(6)])

    g = sub.add_parser("gen", help="write a named instance")
    gsub = g.add_subparsers(dest="family", required=True, parser_class=_Parser)
    for name, opts in {
        "levi": [("--n", int, 5), ("--r", int, 3)],
        "diamond": [("--k", int, 3), ("--c", int, 4)],
        "triakis": [],
        "blowup": [("--input", str, None)],
        "k7torus": [],
        "k5me": [],
        "triangulation": [("--n", int, 10), ("--seed", int, 0)],
    }.items():
        fp = gsub.add_parser(name)
        fp.add_argument("--out", help="file prefix; writes .graph, .emb and .legend.json")
        for flag, typ, default in opts:
            fp.add_argument(flag, type=typ, default=default, required=default is None)
        if name == "triangulation":
            fp.add_argument("--kind", choices=["stacked", "flip", "4conn"], default="stacked")
        fp.set_defaults(func=cmd_gen)

    v = add("verify-paper", cmd_verify, "run the acceptance criteria", parents=(common,))
    v.add_argument("--only", action="append", help="criterion keys, comma-separated or repeated")
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "force", False):
        print("WARNING: --force disables size limits; exact solvers may run for a very long time",
              file=sys.stderr)
    try:
        with warnings.catch_warnings():
            warnings.simplefilter("always")
            return args.func(args)
    except SizeLimitError as exc:
        print(f"size limit: {exc} (use --force to override)", file=sys.stderr)
        return 2
    except (InputError, GraphError, ValueError, ArithmeticError, KeyError) as exc:
        print(f"invalid input: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
