"""adjlabel command line.

Exit codes: 0 success, 1 usage, 2 format or I/O error, 3 verification failure.
Errors go to stderr as a single line starting with ``error:``.
"""

from __future__ import annotations

import argparse
import sys
from collections import Counter
from typing import Sequence

from .combinat import FAMILIES, lower_bound
from .graphio import GraphFormatError, LabelFileError, parse_graph, random_graph, read_labels, write_labels
from .schemes import MODE_CHOICES, LabelError, SchemeError, encode, params_for, params_for_graph
from .universal import universal_size, write_universal


class UsageError(Exception):
    pass


class FormatError(Exception):
    pass


class VerifyError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):
        raise UsageError(message)


def _read_bytes(path: str) -> bytes:
    try:
        with open(path, "rb") as fh:
            return fh.read()
    except OSError as exc:
        raise FormatError(f"cannot read {path}: {exc.strerror}") from None


def _write(path: str, data: bytes | str) -> None:
    try:
        with open(path, "wb" if isinstance(data, bytes) else "w") as fh:
            fh.write(data)
    except OSError as exc:
        raise FormatError(f"cannot write {path}: {exc.strerror}") from None


def _load_labels(path: str):
    try:
        labels, header = read_labels(_read_bytes(path))
        params = header.params()
    except (LabelFileError, SchemeError) as exc:
        raise FormatError(str(exc)) from None
    if params.L != header.L:
        raise FormatError(f"header says L={header.L}, parameters give {params.L}")
    return labels, params


def cmd_encode(args) -> None:
    text = _read_bytes(args.input).decode("utf-8", errors="replace")
    try:
        graph = parse_graph(text)
    except GraphFormatError as exc:
        raise FormatError(str(exc)) from None
    if graph.family != args.family:
        raise FormatError(f"input holds a {graph.family} graph, not {args.family}")
    params = params_for_graph(graph, args.mode)
    _, labels = encode(graph, params)
    _write(args.output, write_labels(labels, params))
    print(f"family={params.family}\tn={params.n}\tmode={params.mode}\tL={params.L}")


def cmd_query(args) -> None:
    labels, params = _load_labels(args.labels)
    for name, v in (("--u", args.u), ("--v", args.v)):
        if not 0 <= v < params.n:
            raise UsageError(f"{name} {v} outside [0, {params.n})")
    try:
        answer = params.engine.edge(labels[args.u], labels[args.v])
    except LabelError as exc:
        raise FormatError(f"malformed label: {exc}") from None
    if params.family == "tournament" and args.u != args.v:
        print("u->v" if answer else "v->u")
    else:
        print(answer)


def cmd_stats(args) -> None:
    labels, params = _load_labels(args.labels)
    try:
        contents = [params.engine.content_length(lab) for lab in labels]
        indices = {params.engine.index_of(lab) for lab in labels}
    except (LabelError, ValueError) as exc:
        raise FormatError(f"malformed label: {exc}") from None
    lb = lower_bound(params.family, params.n, indexing=True)
    fields = [
        ("family", params.family), ("n", params.n), ("mode", params.mode), ("L", params.L),
        ("lower_bound", lb), ("gap", params.L - lb), ("k", params.k), ("delta", params.delta),
        ("index_code", params.index_code), ("max_content", max(contents, default=0)),
        ("distinct_indices", len(indices)),
    ]
    if params.family == "bipartite":
        fields += [("n_u", params.n_u), ("regime", params.regime or "-"), ("constant", params.constant)]
    for key, value in fields:
        print(f"{key}\t{value}")
    print("content_bits\tvertices")
    for bits, count in sorted(Counter(contents).items()):
        print(f"{bits}\t{count}")
    if args.figure:
        from .report import plot_label_contents
        plot_label_contents(contents, params, args.figure)


def cmd_bounds(args) -> None:
    print(lower_bound(args.family, args.n, indexing=args.indexing))
    if args.figure:
        from .report import length_table, plot_length_gaps
        start = max(2, args.n // 8)
        step = max(1, (args.n - start) // 40)
        rows = length_table(args.family, range(start, args.n + 1, step))
        print("n\tlower_bound\tstandard\ttight\tnaive")
        for r in rows:
            cells = ["-" if r[m] is None else str(r[m]) for m in ("standard", "tight", "naive")]
            print(f"{r['n']}\t{r['lower_bound']}\t" + "\t".join(cells))
        plot_length_gaps(args.family, rows, args.figure)


def cmd_universal(args) -> None:
    params = params_for(args.family, args.n, args.mode)
    size = universal_size(params)
    print(f"2^{params.L}")
    try:
        with open(args.output, "w") as fh:
            done = write_universal(params, fh, args.materialize_max_bits)
    except OSError as exc:
        raise FormatError(f"cannot write {args.output}: {exc.strerror}") from None
    print(f"vertices\t{size}" if done else "materialized\t0", file=sys.stderr)


def cmd_verify(args) -> None:
    pairs = 0
    for trial in range(args.trials):
        graph = random_graph(args.family, args.n, args.p, args.seed + trial)
        params = params_for_graph(graph, args.mode)
        _, labels = encode(graph, params)
        full = graph.full_matrix()
        edge = params.engine.edge
        for u in range(args.n):
            for v in range(args.n):
                if u == v:
                    continue
                if edge(labels[u], labels[v]) != full[u, v]:
                    raise VerifyError(f"mismatch trial={trial} u={u} v={v}")
                pairs += 1
        if len({params.engine.index_of(lab) for lab in labels}) != args.n:
            raise VerifyError(f"indices not distinct in trial={trial}")
    print(f"ok trials={args.trials} pairs={pairs}")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="adjlabel", description="Adjacency labeling schemes.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("encode", help="label every vertex of an edge-list graph")
    p.add_argument("--family", choices=FAMILIES, required=True)
    p.add_argument("--mode", choices=MODE_CHOICES, default="auto")
    p.add_argument("--input", required=True)
    p.add_argument("--output", required=True)
    p.set_defaults(func=cmd_encode)

    p = sub.add_parser("query", help="adjacency of two vertices from a label file")
    p.add_argument("--labels", required=True)
    p.add_argument("--u", type=int, required=True)
    p.add_argument("--v", type=int, required=True)
    p.set_defaults(func=cmd_query)

    p = sub.add_parser("stats", help="layout summary of a label file")
    p.add_argument("--labels", required=True)
    p.add_argument("--figure", help="also write a histogram of label contents (PNG)")
    p.set_defaults(func=cmd_stats)

    p = sub.add_parser("bounds", help="lower bound on label length")
    p.add_argument("--family", choices=FAMILIES, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--indexing", action="store_true")
    p.add_argument("--figure", help="also tabulate and plot achieved lengths up to n (PNG)")
    p.set_defaults(func=cmd_bounds)

    p = sub.add_parser("universal", help="induced-universal graph of a scheme")
    p.add_argument("--family", choices=FAMILIES, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--mode", choices=MODE_CHOICES, default="auto")
    p.add_argument("--output", required=True)
    p.add_argument("--materialize-max-bits", type=int, default=24)
    p.set_defaults(func=cmd_universal)

    p = sub.add_parser("verify", help="round-trip random graphs through the scheme")
    p.add_argument("--family", choices=FAMILIES, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--trials", type=int, required=True)
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--p", type=float, default=0.5)
    p.add_argument("--mode", choices=MODE_CHOICES, default="auto")
    p.set_defaults(func=cmd_verify)
    return parser


def run(argv: Sequence[str] | None = None) -> int:
    try:
        args = build_parser().parse_args(argv)
        if getattr(args, "n", 1) < 1:
            raise UsageError("--n must be at least 1")
        if hasattr(args, "p") and not 0 <= args.p <= 1:
            raise UsageError("--p must lie in [0, 1]")
        args.func(args)
    except (UsageError, SchemeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except FormatError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except VerifyError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    return 0


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
