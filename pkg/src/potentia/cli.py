"""Command-line front end.

Exit codes: 0 success / true, 1 false or negative verdict, 2 inapplicable
or failed precondition, 3 unknown or conditional, 64 usage error.
Sequences may be given inline (``"8^6 7^4 4^3"``) or as a file with one
sequence per line; patterns as an edge-list file or a name such as ``K4``,
``C5``, ``paw``.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Sequence

from . import layoff as layoff_mod
from .graphs import GraphFormatError, LabeledGraph, named_graph, parse_edge_list
from .oracle import OracleCapError, enumerate_realizations, find_potential_realization, sigma_scan
from .potential import as_pattern, is_potentially_H, pi_tilde
from .realize import realize
from .seqcore import (
    DegreeSequence,
    SequenceFormatError,
    format_sequence,
    is_close,
    is_graphic,
    parse_sequence,
    read_sequences,
)
from .witness import (
    CONDITIONAL,
    CertificateError,
    CertificateInapplicable,
    thm15_certificate,
    thm41_certificate,
)
from .potential import degree_sufficient

EXIT_OK, EXIT_FALSE, EXIT_INAPPLICABLE, EXIT_UNKNOWN, EXIT_USAGE = 0, 1, 2, 3, 64


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _dump(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2)


def _sequences(args) -> list[tuple[int, ...]]:
    raw = getattr(args, "seq_opt", None) or " ".join(getattr(args, "seq", None) or ())
    if not raw:
        raise UsageError("a sequence is required (inline or a file path)")
    if os.path.isfile(raw):
        with open(raw) as fh:
            seqs = read_sequences(fh.read())
        if not seqs:
            raise UsageError(f"{raw}: no sequences found")
        return seqs
    return [parse_sequence(raw)]


def _one_sequence(args) -> tuple[int, ...]:
    seqs = _sequences(args)
    if len(seqs) != 1:
        raise UsageError("this command takes exactly one sequence")
    return seqs[0]


def _degree_sequence(seq) -> DegreeSequence:
    try:
        return DegreeSequence(seq)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc


def _pattern(spec: str) -> LabeledGraph:
    if os.path.isfile(spec):
        with open(spec) as fh:
            return parse_edge_list(fh.read())
    try:
        return named_graph(spec)
    except (ValueError, IndexError) as exc:
        raise UsageError(f"pattern {spec!r} is neither a file nor a known name") from exc


def _add_seq(p: argparse.ArgumentParser) -> None:
    p.add_argument("seq", nargs="*", help="sequence terms, quoted text or a file")
    p.add_argument("--seq", dest="seq_opt", help="sequence text or file")


# ---------------------------------------------------------------------------
# commands
# ---------------------------------------------------------------------------


def cmd_check(args) -> int:
    results = []
    for s in _sequences(args):
        try:
            ok = is_graphic(s)
        except ValueError:
            ok = is_graphic(sorted(s, reverse=True))
        results.append({"sequence": list(s), "graphic": ok})
    if args.json:
        print(_dump(results if len(results) > 1 else results[0]))
    else:
        for r in results:
            print(f"{format_sequence(r['sequence'])}: {'graphic' if r['graphic'] else 'not graphic'}")
    return EXIT_OK if all(r["graphic"] for r in results) else EXIT_FALSE


def cmd_realize(args) -> int:
    seq = _degree_sequence(_one_sequence(args))
    if not is_graphic(seq):
        print("not graphic", file=sys.stderr)
        return EXIT_FALSE
    g = realize(seq)
    if args.json:
        print(_dump({"n": g.n, "edges": [list(e) for e in g.sorted_edges()]}))
    else:
        sys.stdout.write(g.to_edge_list())
    return EXIT_OK


def cmd_layoff(args) -> int:
    seq = _degree_sequence(_one_sequence(args))
    if args.no_check:
        trace = layoff_mod.LayoffTrace(tuple(seq), args.k, args.r)
        try:
            for step, _ in layoff_mod.laying_off(seq, args.k, args.r, max_steps=args.steps):
                trace.steps.append(step)
        except layoff_mod.LayoffError as exc:
            print(f"stopped: {exc}", file=sys.stderr)
        graph = None
    else:
        try:
            trace, witness = layoff_mod.run_layoff(seq, args.k, args.r)
        except layoff_mod.LayoffHypothesisError as exc:
            print(f"hypothesis fails: {exc}", file=sys.stderr)
            return EXIT_INAPPLICABLE
        graph = witness.host
    if args.json:
        out = trace.to_dict()
        if graph is not None:
            out["edges"] = [list(e) for e in graph.sorted_edges()]
        print(_dump(out))
        return EXIT_OK
    if args.trace or args.no_check:
        for s in trace.steps:
            print(f"pi_{s.p} = ({format_sequence(s.residual)})")
    print(trace.table())
    if graph is not None and args.graph:
        sys.stdout.write(graph.to_edge_list())
    return EXIT_OK


def cmd_analyze(args) -> int:
    P = as_pattern(_pattern(args.pattern))
    out = P.to_dict()
    if args.n is not None:
        try:
            pt = pi_tilde(P, args.n)
        except ValueError as exc:
            print(str(exc), file=sys.stderr)
            return EXIT_INAPPLICABLE
        out["n"] = args.n
        out["pi_tilde"] = list(pt)
        out["sigma"] = sum(pt)
    if args.json:
        print(_dump(out))
    else:
        print(f"k        {P.k}")
        print(f"alpha    {P.alpha}")
        print("nabla    " + " ".join(f"{i}:{v}" for i, v in sorted(P.nabla.items())))
        print(f"i*       {P.i_star}")
        print(f"ell*     {P.ell_star}")
        print(f"f(H)     {P.f}")
        if "pi_tilde" in out:
            print(f"pi_tilde ({format_sequence(out['pi_tilde'])})")
            print(f"sigma    {out['sigma']}")
    return EXIT_OK


def cmd_pitilde(args) -> int:
    P = as_pattern(_pattern(args.pattern))
    try:
        pt = pi_tilde(P, args.n, args.i)
    except ValueError as exc:
        print(str(exc), file=sys.stderr)
        return EXIT_INAPPLICABLE
    i = P.i_star if args.i is None else args.i
    if args.json:
        print(_dump({"i": i, "n": args.n, "sequence": list(pt), "sigma": sum(pt)}))
    else:
        print(format_sequence(pt))
    return EXIT_OK


def cmd_potential(args) -> int:
    seq = _degree_sequence(_one_sequence(args))
    H = _pattern(args.pattern)
    if not is_graphic(seq):
        print("not graphic", file=sys.stderr)
        return EXIT_INAPPLICABLE
    v = is_potentially_H(seq, H, jobs=args.jobs)
    if args.json:
        print(_dump(v.to_dict()))
    else:
        print(f"{v.status} route={v.route}")
    return {"potentially_H": EXIT_OK, "not_potentially_H": EXIT_FALSE}.get(v.status, EXIT_UNKNOWN)


def cmd_certify(args) -> int:
    seq = _degree_sequence(_one_sequence(args))
    H = _pattern(args.pattern)
    if not is_graphic(seq):
        print("not graphic", file=sys.stderr)
        return EXIT_INAPPLICABLE
    kind = args.kind
    if kind == "auto":
        kind = "sufficient" if degree_sufficient(seq, H)[0] else "insufficient"
    try:
        if kind == "insufficient":
            cert = thm15_certificate(seq, H)
        else:
            cert = thm41_certificate(seq, H, jobs=args.jobs)
    except CertificateInapplicable as exc:
        print(f"inapplicable: {exc}", file=sys.stderr)
        return EXIT_INAPPLICABLE
    except CertificateError as exc:
        print(f"certificate failed: {exc}", file=sys.stderr)
        return EXIT_FALSE
    if args.json:
        print(_dump(cert.to_dict()))
    else:
        line = f"{cert.status}: {cert.mode}"
        if cert.closeness is not None:
            w = cert.closeness
            line += f" [{w.a1},{w.a2}] edit {w.total_edit}"
        if cert.target is not None:
            line += f" target ({format_sequence(cert.target)})"
        print(line)
    return EXIT_UNKNOWN if cert.status == CONDITIONAL else EXIT_OK


def cmd_oracle(args) -> int:
    try:
        if args.sigma:
            name, n = args.sigma
            scan = sigma_scan(_pattern(name), int(n), min_term=args.min_term, jobs=args.jobs)
            out = {"n": scan.n, "sigma": scan.value, "checked": scan.checked,
                   "failures": len(scan.failures), "min_term": scan.min_term}
            print(_dump(out) if args.json else f"sigma = {scan.value} ({scan.checked} sequences, {len(scan.failures)} not potentially H)")
            return EXIT_OK
        seq = _degree_sequence(_one_sequence(args))
        if args.potential:
            found = find_potential_realization(seq, _pattern(args.potential), jobs=args.jobs)
            if args.json:
                out = {"potentially_H": found is not None}
                if found is not None:
                    out["edges"] = [list(e) for e in found[0].sorted_edges()]
                    out["pattern_map"] = {str(u): v for u, v in sorted(found[1].items())}
                print(_dump(out))
            else:
                print("potentially H-graphic" if found else "not potentially H-graphic")
            return EXIT_OK if found else EXIT_FALSE
        count = 0
        graphs = []
        for g in enumerate_realizations(seq, jobs=args.jobs):
            if args.limit is not None and count >= args.limit:
                break
            count += 1
            if args.json:
                graphs.append([list(e) for e in g.sorted_edges()])
            else:
                sys.stdout.write(g.to_edge_list() + "\n")
        if args.json:
            print(_dump({"count": count, "graphs": graphs}))
        return EXIT_OK if count else EXIT_FALSE
    except OracleCapError as exc:
        print(str(exc), file=sys.stderr)
        return EXIT_INAPPLICABLE


def cmd_closeness(args) -> int:
    seq = _one_sequence(args)
    target = parse_sequence(args.target)
    try:
        ok, w = is_close(seq, target, args.a1, args.a2, args.b)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    if args.json:
        out = w.to_dict()
        out["close"] = ok
        print(_dump(out))
    else:
        print(f"{'close' if ok else 'not close'}: edit {w.total_edit} (budget {args.b})")
    return EXIT_OK if ok else EXIT_FALSE


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="potentia", description="Degree sequences and potentially H-graphic sequences.")
    p.add_argument("--json", action="store_true", help="structured output")
    p.add_argument("--jobs", type=int, default=1, help="worker processes for exhaustive search")
    sub = p.add_subparsers(dest="command", parser_class=_Parser)

    s = sub.add_parser("check", help="graphicality")
    _add_seq(s)
    s.set_defaults(func=cmd_check)

    s = sub.add_parser("realize", help="build one realization")
    _add_seq(s)
    s.set_defaults(func=cmd_realize)

    s = sub.add_parser("layoff", help="run the laying-off algorithm")
    _add_seq(s)
    s.add_argument("--k", type=int, required=True)
    s.add_argument("--r", type=int, required=True)
    s.add_argument("--trace", action="store_true", help="print residual sequences too")
    s.add_argument("--steps", type=int, default=None, help="step limit with --no-check")
    s.add_argument("--no-check", action="store_true", help="skip hypotheses and claim checks")
    s.add_argument("--graph", action="store_true", help="print the final edge list")
    s.set_defaults(func=cmd_layoff)

    s = sub.add_parser("analyze-pattern", help="alpha, nabla, i*, ell*, f(H)")
    s.add_argument("--pattern", required=True)
    s.add_argument("--n", type=int, default=None)
    s.set_defaults(func=cmd_analyze)

    s = sub.add_parser("pitilde", help="extremal sequence")
    s.add_argument("--pattern", required=True)
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--i", type=int, default=None)
    s.set_defaults(func=cmd_pitilde)

    s = sub.add_parser("potential", help="is the sequence potentially H-graphic")
    _add_seq(s)
    s.add_argument("--pattern", required=True)
    s.set_defaults(func=cmd_potential)

    s = sub.add_parser("certify", help="closeness certificate")
    _add_seq(s)
    s.add_argument("--pattern", required=True)
    s.add_argument("--kind", choices=["auto", "insufficient", "sufficient"], default="auto")
    s.set_defaults(func=cmd_certify)

    s = sub.add_parser("oracle", help="exhaustive search")
    _add_seq(s)
    g = s.add_mutually_exclusive_group()
    g.add_argument("--realizations", action="store_true", help="list realizations (default)")
    g.add_argument("--potential", metavar="PATTERN")
    g.add_argument("--sigma", nargs=2, metavar=("PATTERN", "N"))
    s.add_argument("--limit", type=int, default=None)
    s.add_argument("--min-term", type=int, default=0)
    s.set_defaults(func=cmd_oracle)

    s = sub.add_parser("closeness", help="([a1,a2],b)-closeness to a target")
    _add_seq(s)
    s.add_argument("--target", required=True)
    s.add_argument("--a1", type=int, required=True)
    s.add_argument("--a2", type=int, required=True)
    s.add_argument("--b", type=int, default=0)
    s.set_defaults(func=cmd_closeness)
    return p


def _hoist_globals(argv: list[str]) -> list[str]:
    # allow --json / --jobs after the subcommand too
    front, rest = [], []
    it = iter(argv)
    for a in it:
        if a == "--json":
            front.append(a)
        elif a == "--jobs":
            front += [a, next(it, "")]
        elif a.startswith("--jobs="):
            front.append(a)
        else:
            rest.append(a)
    return front + rest


def main(argv: Sequence[str] | None = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    try:
        args = parser.parse_args(_hoist_globals(argv))
        if not getattr(args, "func", None):
            raise UsageError("a command is required")
        return args.func(args)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (SequenceFormatError, GraphFormatError) as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
