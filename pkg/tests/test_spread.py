import numpy as np
import pytest
from hypothesis import given, strategies as st

from adjlabel.bitcore import BitCursor, BitString
from adjlabel.spread import (
    SpreadError,
    index_code_len,
    index_decode,
    index_encode,
    make_plan,
    spread_apply,
    spread_locate,
    spread_read,
)


def test_plan_examples():
    p = make_plan((2, 3), 4)
    assert p.s[:2] == (0, 2) and p.L == 2
    z = make_plan((0, 0, 0), 5)
    assert z.L == 0 and z.moved == 0
    c = make_plan((2, 3), 4, C=2)
    assert c.s[:2] == (2, 0) and c.L == 1
    assert [c.v_capacity(j) for j in range(4)] == [1, 1, 2, 2]


def test_plan_rejects_out_of_range():
    with pytest.raises(SpreadError):
        make_plan((5,), 4)
    with pytest.raises(SpreadError):
        make_plan((1,), 4, C=5)


def test_apply_example_trace():
    plan = make_plan((2, 3), 4)
    block = np.array([[1, 0, 1, 1], [0, 1, 1, 0]], dtype=bool)
    u, v = spread_apply(block, plan)
    # row 0 sends columns 0,1; row 1 sends columns 2,3,0
    assert str(u[0]) == "11"
    assert str(u[1]) == "1"
    assert str(v[0]) == "10"
    assert str(v[1]) == "00"
    assert str(v[2]) == "10"
    assert str(v[3]) == "00"


def test_locate_examples():
    plan = make_plan((2, 3), 4)
    assert tuple(spread_locate(1, 0, plan)) == ("V", 1)
    assert tuple(spread_locate(0, 3, plan)) == ("U", 1)
    flat = make_plan((0, 0), 4)
    assert all(tuple(spread_locate(i, j, flat)) == ("U", j) for i in range(2) for j in range(4))


def test_all_zero_block():
    plan = make_plan((3, 1, 4), 6, C=1)
    u, v = spread_apply(np.zeros((3, 6), dtype=bool), plan)
    assert [t.length for t in u] == [3, 5, 2]
    assert [t.length for t in v] == [plan.v_capacity(j) for j in range(6)]
    assert all(t.value == 0 for t in u + v)


def test_reassembly_large(rng):
    ell = rng.integers(0, 96, size=5)
    plan = make_plan(ell, 95)
    block = rng.random((5, 95)) < 0.5
    u, v = spread_apply(block, plan)
    for i in range(5):
        for j in range(95):
            assert spread_read(i, j, plan, u[i], v[j]) == block[i, j]


@st.composite
def plans(draw):
    k = draw(st.integers(0, 6))
    m = draw(st.integers(1, 40))
    ell = draw(st.lists(st.integers(0, m), min_size=k, max_size=k))
    if draw(st.booleans()):
        fill = draw(st.lists(st.integers(0, 1), min_size=m, max_size=m))
        plan = make_plan(ell, m, fill=fill)
    else:
        plan = make_plan(ell, m, C=draw(st.integers(0, m)))
    seed = draw(st.integers(0, 2**32 - 1))
    block = np.random.default_rng(seed).random((k, m)) < 0.5
    return plan, block


@given(plans())
def test_locate_agrees_with_apply(case):
    plan, block = case
    u, v = spread_apply(block, plan)
    k, m = block.shape
    assert sum(t.length for t in u) + plan.moved == k * m
    for j in range(m):
        assert v[j].length == plan.v_capacity(j)
    seen = set()
    for i in range(k):
        for j in range(m):
            loc = spread_locate(i, j, plan)
            tag = u[i] if loc.side == "U" else v[j]
            assert loc.position < tag.length
            assert tag[loc.position] == block[i, j]
            key = (loc.side, i if loc.side == "U" else j, loc.position)
            assert key not in seen
            seen.add(key)


@given(st.lists(st.integers(0, 30), min_size=1, max_size=8), st.integers(1, 30))
def test_zero_offset_bound_exact(ell, m):
    ell = [min(x, m) for x in ell]
    assert make_plan(ell, m).L == -(-sum(ell) // m)


def test_index_code_examples():
    assert [str(index_encode(i, 5)) for i in range(5)] == ["000", "001", "01", "10", "11"]
    assert [str(index_encode(i, 6)) for i in range(6)] == ["000", "001", "010", "011", "10", "11"]
    assert {index_encode(i, 64).length for i in range(64)} == {6}
    with pytest.raises(SpreadError):
        index_encode(5, 5)


def test_index_code_bijective_prefix_free():
    for n in range(1, 513):
        codes = [index_encode(i, n) for i in range(n)]
        for i, c in enumerate(codes):
            assert c.length == index_code_len(i, n)
            assert index_decode(BitCursor(c + BitString.from_str("1011")), n) == i
        if n > 1:
            # prefix-free: sorted as strings, no code is a prefix of its successor
            texts = sorted(str(c) for c in codes)
            assert all(not b.startswith(a) for a, b in zip(texts, texts[1:]))
