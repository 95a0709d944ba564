"""Edge-list text, the binary label file, and seeded random graphs."""

from __future__ import annotations

import struct
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .bitcore import BitString
from .combinat import FAMILIES
from .graph import Graph, GraphError
from .schemes import MODES, SchemeParams, params_for

MAGIC = b"ALS1"
_HEADER = struct.Struct("<BBQQI")
HEADER_SIZE = len(MAGIC) + _HEADER.size


class GraphFormatError(ValueError):
    pass


class LabelFileError(ValueError):
    pass


# -- edge-list text -----------------------------------------------------------

def _ints(tokens: list[str], lineno: int) -> list[int]:
    try:
        return [int(t) for t in tokens]
    except ValueError:
        raise GraphFormatError(f"line {lineno}: expected integers, got {' '.join(tokens)!r}") from None


def parse_graph(text: str) -> Graph:
    header = None
    edges: list[tuple[int, int, int]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tokens = line.split()
        if header is None:
            family = tokens[0]
            if family not in FAMILIES:
                raise GraphFormatError(f"line {lineno}: unknown family {family!r}")
            want = 3 if family == "bipartite" else 2
            if len(tokens) != want:
                raise GraphFormatError(f"line {lineno}: header needs {want} fields")
            sizes = _ints(tokens[1:], lineno)
            if min(sizes) < 0 or sum(sizes) < 1:
                raise GraphFormatError(f"line {lineno}: bad vertex count")
            header = (family, sizes)
            continue
        if len(tokens) != 2:
            raise GraphFormatError(f"line {lineno}: edge lines hold exactly two vertices")
        u, v = _ints(tokens, lineno)
        edges.append((lineno, u, v))
    if header is None:
        raise GraphFormatError("missing header line")
    family, sizes = header
    if family == "bipartite":
        n_u, n_v = sizes
        adj = np.zeros((n_u, n_v), dtype=bool)
        for lineno, u, v in edges:
            if not (0 <= u < n_u and 0 <= v < n_v):
                raise GraphFormatError(f"line {lineno}: edge ({u}, {v}) outside sides {n_u} x {n_v}")
            adj[u, v] = True
        return Graph("bipartite", n_u + n_v, adj, n_u)
    n = sizes[0]
    adj = np.zeros((n, n), dtype=bool)
    for lineno, u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise GraphFormatError(f"line {lineno}: vertex out of range for n={n}")
        if u == v:
            raise GraphFormatError(f"line {lineno}: self-loop on {u}")
        adj[u, v] = True
        if family == "undirected":
            adj[v, u] = True
    try:
        return Graph(family, n, adj)
    except GraphError as exc:
        raise GraphFormatError(str(exc)) from None


def write_graph(graph: Graph) -> str:
    if graph.family == "bipartite":
        lines = [f"bipartite {graph.n_u} {graph.n_v}"]
    else:
        lines = [f"{graph.family} {graph.n}"]
    adj = np.triu(graph.adj, 1) if graph.family == "undirected" else graph.adj
    for u, v in zip(*np.nonzero(adj)):
        lines.append(f"{u} {v}")
    return "\n".join(lines) + "\n"


# -- random graphs ------------------------------------------------------------

_GOLDEN = np.uint64(0x9E3779B97F4A7C15)
_MIX1 = np.uint64(0xBF58476D1CE4E5B9)
_MIX2 = np.uint64(0x94D049BB133111EB)


def splitmix64(seed: int, counters: np.ndarray) -> np.ndarray:
    """Output number ``counters[i]`` (0-based) of a splitmix64 stream started at ``seed``."""
    with np.errstate(over="ignore"):
        z = np.uint64(seed & (2**64 - 1)) + (counters.astype(np.uint64) + np.uint64(1)) * _GOLDEN
        z = (z ^ (z >> np.uint64(30))) * _MIX1
        z = (z ^ (z >> np.uint64(27))) * _MIX2
        return z ^ (z >> np.uint64(31))


def _threshold_draws(draws: np.ndarray, p: float) -> np.ndarray:
    if not 0 <= p <= 1:
        raise ValueError("p must lie in [0, 1]")
    limit = int(Fraction(p) * 2**64)
    if limit >= 2**64:
        return np.ones(draws.shape, dtype=bool)
    return draws < np.uint64(limit)


def random_graph(family: str, n: int, p: float = 0.5, seed: int = 0, n_u: int | None = None) -> Graph:
    """Seeded random graph; pair (u, v) uses stream position u * width + v.

    For bipartite graphs ``n`` is the total and ``n_u`` the U side (default
    n // 2).  Tournaments orient each pair u < v as u -> v when the top bit of
    its draw is set, so ``p`` does not affect them.
    """
    if family == "bipartite":
        n_u = n // 2 if n_u is None else n_u
        n_v = n - n_u
        ids = np.arange(n_u * n_v, dtype=np.uint64).reshape(n_u, n_v)
        return Graph("bipartite", n, _threshold_draws(splitmix64(seed, ids), p), n_u)
    ids = np.arange(n * n, dtype=np.uint64).reshape(n, n)
    draws = splitmix64(seed, ids)
    off = ~np.eye(n, dtype=bool)
    if family == "tournament":
        upper = np.triu((draws >> np.uint64(63)).astype(bool), 1)
        lower_pairs = np.triu(off, 1) & ~upper
        return Graph(family, n, upper | lower_pairs.T)
    present = _threshold_draws(draws, p) & off
    if family == "undirected":
        present = np.triu(present, 1)
        present = present | present.T
    return Graph(family, n, present)


# -- binary label file --------------------------------------------------------

@dataclass(frozen=True)
class LabelHeader:
    family: str
    mode: str
    n: int
    n_u: int
    L: int

    def params(self) -> SchemeParams:
        return params_for(self.family, self.n, self.mode, self.n_u if self.family == "bipartite" else None)


def write_labels(labels: list[BitString], params: SchemeParams) -> bytes:
    if len(labels) != params.n:
        raise LabelFileError(f"{len(labels)} labels for n={params.n}")
    out = bytearray(MAGIC)
    n_u = params.n_u if params.family == "bipartite" else 0
    out += _HEADER.pack(params.family_code, params.mode_code, params.n, n_u, params.L)
    for lab in labels:
        if lab.length != params.L:
            raise LabelFileError(f"label of {lab.length} bits, expected {params.L}")
        out += lab.to_bytes()
    return bytes(out)


def read_labels(data: bytes) -> tuple[list[BitString], LabelHeader]:
    if len(data) < HEADER_SIZE:
        raise LabelFileError("truncated file: header incomplete")
    if data[:4] != MAGIC:
        raise LabelFileError("bad magic")
    fam, mode, n, n_u, L = _HEADER.unpack_from(data, 4)
    if fam >= len(FAMILIES) or mode >= len(MODES):
        raise LabelFileError("unknown family or mode code")
    header = LabelHeader(FAMILIES[fam], MODES[mode], n, n_u, L)
    width = -(-L // 8)
    body = data[HEADER_SIZE:]
    if len(body) < n * width:
        raise LabelFileError(f"truncated file: {len(body)} record bytes, expected {n * width}")
    if len(body) > n * width:
        raise LabelFileError("trailing bytes after the last record")
    labels = [BitString.from_bytes(body[i * width:(i + 1) * width], L) for i in range(n)]
    return labels, header
