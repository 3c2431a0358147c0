"""Command-line front end: params, construct, verify, search, export.

Exit codes: 0 success, 1 verification failure, 2 usage or parse error.
Graphs go to stdout (or --output); the JSON run report goes to stderr
(or --report) and is the only place timing appears.
"""

import argparse
import hashlib
import json
import sys
import time

import numpy as np

from . import io
from .core import GraphError, SignedMatrix, complete_positive, square
from .doubling import chain
from .jacobi import OFFDIAG_TOL, cluster, eigenvalues_float
from .linegraph import line_graph, neg_line_complete, verify_line_spectrum
from .params import admissible_triples, feasible_orders
from .qext import QExt
from .spectra import is_weighing, ramanujan_check, verification_report, verify_ste_exact
from .starcomp import SingularBlockError, is_star_set, verify_partition
from .weighing import assemble_block, block8, search_m4_pairs

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _csv_ints(text):
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise UsageError(f"expected comma-separated integers, got {text!r}") from None


def parse_mu(text, root="plus"):
    """'t,b' means (t + sqrt(b))/2 (or the minus root); a bare integer is itself."""
    parts = text.split(",")
    try:
        if len(parts) == 1:
            return QExt(int(parts[0]))
        t, b = int(parts[0]), int(parts[1])
    except ValueError:
        raise UsageError(f"cannot parse eigenvalue {text!r}; use 't,b' or an integer") from None
    if b < 0:
        raise UsageError("b must be non-negative")
    return QExt.quadratic_root(t, b, 1 if root == "plus" else -1)


def _digest(data):
    return hashlib.sha256(data).hexdigest()[:16]


def _read_graph(args):
    try:
        with open(args.graph, "rb") as fh:
            raw = fh.read()
        one = True if args.one_indexed else None
        return io.parse_graph(raw.decode(), one_indexed=one), _digest(raw)
    except OSError as exc:
        raise UsageError(str(exc)) from None


def _emit_graph(sigma, args):
    text = io.dump_graph(sigma, args.format, one_indexed=args.one_indexed)
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _emit_report(report, args):
    text = json.dumps(report, indent=2, default=str) + "\n"
    if getattr(args, "report", None):
        with open(args.report, "w") as fh:
            fh.write(text)
    else:
        sys.stderr.write(text)


def cmd_params(args):
    ks = args.k
    if any(k < 1 for k in ks):
        raise UsageError("k must be >= 1")
    rows = []
    for k in ks:
        for tr in admissible_triples(k):
            row = {"k": k, "t": tr.t, "lambda1": str(tr.lambda1),
                   "lambda2": str(tr.lambda2), "type": tr.type_tag}
            if args.n_max:
                row["orders"] = feasible_orders(tr, args.n_max)
            rows.append((tr, row))
    if args.json:
        print(json.dumps([r for _, r in rows], indent=2))
        return EXIT_OK
    for k in ks:
        triples = [tr for tr, r in rows if r["k"] == k]
        print(f"k={k:<3}| " + ", ".join(str(tr) for tr in triples))
        if args.n_max:
            for tr in triples:
                print(f"      {tr} {tr.type_tag}: n <= {args.n_max} in {feasible_orders(tr, args.n_max)}")
    return EXIT_OK


def _construct(args):
    if args.family == "line-complete":
        if args.n < 3:
            raise UsageError("--n must be >= 3")
        sigma = line_graph(complete_positive(args.n))
        return neg_line_complete(args.n) if args.negate else sigma
    if args.family == "block8":
        return block8(args.m, residues=args.residues)
    if args.family == "chain":
        seed = args.seed
        if args.seed_file:
            seed = "file:" + args.seed_file
        return chain(seed, args.k)
    raise UsageError(f"unknown family {args.family}")


def cmd_construct(args):
    t0 = time.perf_counter()
    try:
        sigma = _construct(args)
    except (ValueError, GraphError) as exc:
        raise UsageError(str(exc)) from None
    _emit_graph(sigma, args)
    report = {
        "command": args.command_line,
        "input_digest": _digest(io.to_json(sigma).encode()),
        "n": sigma.n,
        "verification": verification_report(sigma, tol=args.tolerance),
    }
    ste = report["verification"]["ste"]
    if args.family == "chain":
        k = args.k
        ok = bool(np.array_equal(square(sigma), k * np.eye(sigma.n, dtype=np.int64)))
        report["square_identity"] = f"A^2 = {k}I" if ok else "failed"
    else:
        ok = ste is not None
    report["timing_s"] = round(time.perf_counter() - t0, 4)
    _emit_report(report, args)
    return EXIT_OK if ok else EXIT_FAIL


def cmd_verify(args):
    t0 = time.perf_counter()
    kind = args.kind
    report = {"command": "verify " + kind}
    if kind == "weighing":
        try:
            with open(args.graph, "rb") as fh:
                raw = fh.read()
        except OSError as exc:
            raise UsageError(str(exc)) from None
        M = read_signed_matrix(raw.decode())
        report["input_digest"] = _digest(raw)
        ok = is_weighing(M, args.alpha)
        report.update({"order": M.rows, "alpha": args.alpha, "weighing": ok})
    else:
        sigma, digest = _read_graph(args)
        report["input_digest"] = digest
        if kind == "ste":
            ste = verify_ste_exact(sigma)
            rep = verification_report(sigma, tol=args.tolerance)
            report.update(rep)
            ok = ste is not None
            if ste:
                report["spectrum"] = str(ste)
        elif kind == "ramanujan":
            try:
                rep = ramanujan_check(sigma, tol=args.tolerance)
            except ValueError as exc:
                raise UsageError(str(exc)) from None
            report["ramanujan"] = rep
            ok = rep["pass"]
        elif kind == "line-spectrum":
            try:
                rep = verify_line_spectrum(sigma)
            except ValueError as exc:
                raise UsageError(str(exc)) from None
            report["line_spectrum"] = rep
            ok = rep["pass"]
        elif kind == "star":
            if not args.set or not args.mu:
                raise UsageError("verify star needs --mu and --set")
            mu = parse_mu(args.mu, args.root)
            try:
                ok = is_star_set(sigma, _csv_ints(args.set), mu)
            except SingularBlockError as exc:
                ok = False
                report["error"] = str(exc)
            except ValueError as exc:
                raise UsageError(str(exc)) from None
            report.update({"mu": str(mu), "star_set": ok})
        elif kind == "partition":
            if not args.x:
                raise UsageError("verify partition needs --x")
            X = _csv_ints(args.x)
            Y = [v for v in range(sigma.n) if v not in set(X)]
            if args.lambda1 and args.lambda2:
                l1, l2 = parse_mu(args.lambda1), parse_mu(args.lambda2, "minus")
            else:
                ste = verify_ste_exact(sigma)
                if ste is None:
                    raise UsageError("graph is not an STE; pass --lambda1 and --lambda2")
                l1, l2 = ste.lambda1, ste.lambda2
            try:
                ok = verify_partition(sigma, X, Y, l1, l2)
            except SingularBlockError as exc:
                ok = False
                report["error"] = str(exc)
            except ValueError as exc:
                raise UsageError(str(exc)) from None
            report.update({"lambda1": str(l1), "lambda2": str(l2), "X": X, "partition": ok})
        else:
            raise UsageError(f"unknown verification {kind}")
    report["pass"] = ok
    report["timing_s"] = round(time.perf_counter() - t0, 4)
    print(json.dumps(report, indent=2, default=str))
    return EXIT_OK if ok else EXIT_FAIL


def read_signed_matrix(text):
    rows = [line.split() for line in text.splitlines() if line.strip() and not line.startswith("#")]
    try:
        return SignedMatrix([[int(x) for x in row] for row in rows])
    except (ValueError, GraphError) as exc:
        raise io.ParseError(str(exc)) from None


def cmd_search(args):
    t0 = time.perf_counter()
    pairs = search_m4_pairs(limit=args.limit)
    report = {"command": "search block8-m4", "pairs_found": len(pairs)}
    ok = bool(pairs)
    if pairs:
        pair = pairs[0]
        sigma = assemble_block(pair)
        ste = verify_ste_exact(sigma)
        ok = ste is not None
        report["W1"] = pair.W1.entries.tolist()
        report["W2"] = pair.W2.entries.tolist()
        report["spectrum"] = str(ste) if ste else None
        _emit_graph(sigma, args)
    report["timing_s"] = round(time.perf_counter() - t0, 4)
    _emit_report(report, args)
    return EXIT_OK if ok else EXIT_FAIL


def cmd_export(args):
    sigma, _ = _read_graph(args)
    _emit_graph(sigma, args)
    return EXIT_OK


def cmd_spectrum(args):
    sigma, _ = _read_graph(args)
    lam = eigenvalues_float(sigma.adj, tol=args.tolerance)
    for value, mult in cluster(lam):
        print(f"{value:.12g} x{mult}")
    return EXIT_OK


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=io.FORMATS, default="json")
    common.add_argument("--tolerance", type=float, default=OFFDIAG_TOL,
                        help="Jacobi off-diagonal convergence threshold")
    common.add_argument("--one-indexed", action="store_true",
                        help="read/write 1-indexed vertices in JSON files")
    common.add_argument("--output", "-o", help="write the graph here instead of stdout")
    common.add_argument("--report", help="write the run report here instead of stderr")

    parser = argparse.ArgumentParser(prog="signed-ste", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("params", help="admissible (t, lambda1, lambda2) triples")
    p.add_argument("--k", type=int, action="append", required=True)
    p.add_argument("--n-max", type=int, default=0)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_params)

    p = sub.add_parser("construct", help="build a family member and verify it")
    csub = p.add_subparsers(dest="family", required=True)
    c = csub.add_parser("line-complete", parents=[common])
    c.add_argument("--n", type=int, required=True)
    c.add_argument("--negate", action="store_true")
    c = csub.add_parser("block8", parents=[common])
    c.add_argument("--m", type=int, required=True)
    c.add_argument("--residues", choices=("displayed", "formula"), default="displayed")
    c = csub.add_parser("chain", parents=[common])
    c.add_argument("--seed", default="k2", help="k2, pentagon or file:<path>")
    c.add_argument("--seed-file")
    c.add_argument("--k", type=int, required=True)
    for c in csub.choices.values():
        c.set_defaults(func=cmd_construct)

    p = sub.add_parser("verify", help="check a graph or matrix file")
    p.add_argument("kind", choices=("ste", "weighing", "ramanujan", "star", "partition", "line-spectrum"))
    p.add_argument("graph")
    p.add_argument("--one-indexed", action="store_true")
    p.add_argument("--tolerance", type=float, default=OFFDIAG_TOL)
    p.add_argument("--alpha", type=int, default=4)
    p.add_argument("--mu")
    p.add_argument("--root", choices=("plus", "minus"), default="plus")
    p.add_argument("--set")
    p.add_argument("--x")
    p.add_argument("--lambda1")
    p.add_argument("--lambda2")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("search", parents=[common], help="computer search for small instances")
    p.add_argument("target", choices=("block8-m4",))
    p.add_argument("--limit", type=int)
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("export", parents=[common], help="convert a graph file")
    p.add_argument("graph")
    p.set_defaults(func=cmd_export)

    p = sub.add_parser("spectrum", parents=[common], help="float eigenvalues with multiplicities")
    p.add_argument("graph")
    p.set_defaults(func=cmd_spectrum)
    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    args.command_line = " ".join(sys.argv[1:] if argv is None else argv)
    try:
        return args.func(args)
    except (UsageError, io.ParseError, GraphError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
