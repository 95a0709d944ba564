import itertools

import numpy as np
import pytest

from adjlabel.bitcore import BitString
from adjlabel.schemes.moon import MoonError, moon_edge, moon_encode, moon_tag_len


def path4():
    a = np.zeros((4, 4), dtype=bool)
    for u in range(3):
        a[u, u + 1] = a[u + 1, u] = True
    return a


def test_path_example():
    tags = moon_encode(path4())
    assert [str(t) for t in tags] == ["10", "10", "10", "00"]
    assert moon_edge(2, tags[2], 3, tags[3], 4) == 1
    assert moon_edge(0, tags[0], 3, tags[3], 4) == 0


def test_all_graphs_on_five_and_six_vertices_small_sample(rng):
    for n in (5, 6, 7):
        pairs = list(itertools.combinations(range(n), 2))
        for _ in range(40):
            a = np.zeros((n, n), dtype=bool)
            for (u, v), b in zip(pairs, rng.random(len(pairs)) < 0.5):
                a[u, v] = a[v, u] = b
            ind = rng.permutation(n)
            tags = moon_encode(a, ind)
            assert all(t.length == moon_tag_len(n) for t in tags)
            for u, v in itertools.permutations(range(n), 2):
                assert moon_edge(ind[u], tags[u], ind[v], tags[v], n) == a[u, v]


def test_empty_graph():
    for n in range(1, 9):
        tags = moon_encode(np.zeros((n, n), dtype=bool))
        assert all(moon_edge(i, tags[i], j, tags[j], n) == 0 for i in range(n) for j in range(n))


def test_dropped_antipodal_bit(rng):
    n = 8
    a = np.triu(rng.random((n, n)) < 0.5, 1)
    a = a | a.T
    drop = [i >= n // 2 for i in range(n)]
    tags = moon_encode(a, drop=drop)
    assert [t.length for t in tags] == [4] * 4 + [3] * 4
    for u, v in itertools.permutations(range(n), 2):
        assert moon_edge(u, tags[u], v, tags[v], n) == a[u, v]


def test_tag_length_mismatch():
    with pytest.raises(MoonError):
        moon_edge(0, BitString.from_str("1"), 1, BitString.from_str("10"), 5)
    with pytest.raises(MoonError):
        moon_encode(np.zeros((5, 5), dtype=bool), drop=[True] * 5)
