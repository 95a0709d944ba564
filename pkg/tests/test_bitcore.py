import pytest
from hypothesis import given, strategies as st

from adjlabel.bitcore import BitCursor, BitError, BitString, BitWriter, count_runs, from_natural, to_natural

bitstrings = st.text(alphabet="01", max_size=80).map(BitString.from_str)


@pytest.mark.parametrize("text, runs", [("", 0), ("0000", 1), ("00110", 3), ("0101", 4)])
def test_count_runs(text, runs):
    assert count_runs(BitString.from_str(text)) == runs


def test_natural_examples():
    assert to_natural(BitString.from_str("101")) == 5
    assert str(from_natural(0, 3)) == "000"
    assert str(from_natural(5, 4)) == "0101"
    with pytest.raises(BitError):
        from_natural(8, 3)


def test_slicing_and_concat():
    s = BitString.from_str("110100")
    assert s[0] == 1 and s[2] == 0 and s[-1] == 0
    assert str(s[1:4]) == "101"
    assert str(s + BitString.from_str("1")) == "1101001"
    assert list(BitString.from_str("011")) == [0, 1, 1]
    assert len(BitString()) == 0


def test_bytes_msb_first_with_zero_pad():
    assert BitString.from_str("1").to_bytes() == b"\x80"
    assert BitString.from_str("101000001").to_bytes() == b"\xa0\x80"
    assert BitString().to_bytes() == b""


def test_cursor_reads_and_bounds():
    cur = BitCursor(BitString.from_str("10110"))
    assert cur.read_int(2) == 2
    assert str(cur.read(2)) == "11"
    assert cur.remaining == 1
    assert cur.read_bit() == 0
    with pytest.raises(BitError):
        cur.read_bit()


def test_writer_builds_concatenation():
    w = BitWriter()
    w.write_int(3, 2)
    w.write(BitString.from_str("001"))
    assert str(w.getvalue()) == "11001"
    assert len(w) == 5


@given(bitstrings)
def test_natural_round_trip(s):
    assert from_natural(to_natural(s), s.length) == s


@given(bitstrings)
def test_runs_at_most_length(s):
    runs = count_runs(s)
    assert runs <= s.length
    alternating = all(s[i] != s[i + 1] for i in range(s.length - 1))
    assert (runs == s.length) == alternating


@given(bitstrings)
def test_bytes_round_trip(s):
    assert BitString.from_bytes(s.to_bytes(), s.length) == s
