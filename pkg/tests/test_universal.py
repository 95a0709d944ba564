import io
import itertools

import numpy as np
import pytest

from adjlabel.graph import Graph
from adjlabel.graphio import parse_graph, random_graph
from adjlabel.schemes import encode, params_for
from adjlabel.universal import (
    EmbeddingError,
    UniversalTooLarge,
    universal_adjacent,
    universal_edges,
    universal_size,
    verify_induced,
    write_universal,
)


def all_undirected(n: int):
    pairs = list(itertools.combinations(range(n), 2))
    for mask in range(2 ** len(pairs)):
        a = np.zeros((n, n), dtype=bool)
        for b, (u, v) in enumerate(pairs):
            if mask >> b & 1:
                a[u, v] = a[v, u] = True
        yield Graph("undirected", n, a)


def test_sizes():
    assert universal_size(params_for("undirected", 4)) == 16
    assert universal_size(params_for("undirected", 400, "standard")) == 2**206
    assert universal_size(params_for("directed", 2)) == 2 ** params_for("directed", 2).L


def test_self_and_out_of_range_are_isolated():
    p = params_for("undirected", 4)
    assert all(universal_adjacent(x, x, p) == 0 for x in range(16))
    assert universal_adjacent(0, 99, p) == 0


def test_all_four_vertex_graphs_embed():
    p = params_for("undirected", 4)
    count = 0
    for g in all_undirected(4):
        phi = verify_induced(g, p)
        assert len(set(phi)) == 4
        count += 1
    assert count == 64


def test_all_four_vertex_tournaments_embed():
    p = params_for("tournament", 4)
    pairs = list(itertools.combinations(range(4), 2))
    for mask in range(2 ** len(pairs)):
        a = np.zeros((4, 4), dtype=bool)
        for b, (u, v) in enumerate(pairs):
            if mask >> b & 1:
                a[u, v] = True
            else:
                a[v, u] = True
        verify_induced(Graph("tournament", 4, a), p)


def test_random_directed_embeds_under_standard():
    g = random_graph("directed", 100, 0.5, 2)
    verify_induced(g, params_for("directed", 100, "standard"))


@pytest.mark.parametrize("family", ["directed", "undirected", "tournament", "bipartite"])
def test_empty_graphs_embed(family):
    n = 6
    g = random_graph(family, n, 0.0, 0)
    verify_induced(g, params_for(family, n, n_u=3 if family == "bipartite" else None))


def test_symmetry_sample(rng):
    p = params_for("undirected", 400, "standard")
    g = random_graph("undirected", 400, 0.5, 3)
    _, labels = encode(g, p)
    ids = [lab.value for lab in labels]
    for _ in range(2000):
        x, y = rng.choice(ids, 2)
        assert universal_adjacent(int(x), int(y), p) == universal_adjacent(int(y), int(x), p)
    for _ in range(2000):
        x, y = (int(v) for v in rng.integers(0, 2**62, 2))
        x <<= p.L - 62
        y <<= p.L - 62
        assert universal_adjacent(x, y, p) == universal_adjacent(y, x, p)


def test_materialized_matches_queries():
    p = params_for("undirected", 4)
    buf = io.StringIO()
    assert write_universal(p, buf)
    g = parse_graph(buf.getvalue())
    assert g.n == 16
    for x in range(16):
        for y in range(16):
            assert g.adj[x, y] == universal_adjacent(x, y, p)


def test_tournament_universal_written_as_digraph():
    buf = io.StringIO()
    write_universal(params_for("tournament", 3), buf)
    assert parse_graph(buf.getvalue()).family == "directed"


def test_materialization_cap():
    p = params_for("undirected", 400, "standard")
    with pytest.raises(UniversalTooLarge):
        next(universal_edges(p))
    buf = io.StringIO()
    assert not write_universal(p, buf)
    assert "2^206" in buf.getvalue()


def test_embedding_failure_reports_pair():
    p = params_for("undirected", 4)
    g = next(all_undirected(4))

    class Liar:
        def __init__(self, engine):
            self.engine = engine

        def __getattr__(self, name):
            return getattr(self.engine, name)

        def edge(self, x, y):
            return 1

    import dataclasses
    broken = dataclasses.replace(p, engine=Liar(p.engine))
    with pytest.raises(EmbeddingError) as info:
        verify_induced(g, broken)
    assert info.value.pair == (0, 1)
