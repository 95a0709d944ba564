"""Immutable bit strings and a sequential reader.

A :class:`BitString` stores its bits in a Python int, most significant bit
first, together with an explicit length so that leading zeros survive.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable


class BitError(ValueError):
    """Raised on malformed bit-level input."""


@dataclass(frozen=True)
class BitString:
    value: int = 0
    length: int = 0

    def __post_init__(self) -> None:
        if self.length < 0:
            raise BitError("negative length")
        if self.value < 0 or self.value >> self.length:
            raise BitError(f"value {self.value} does not fit in {self.length} bits")

    @classmethod
    def from_str(cls, text: str) -> BitString:
        text = text.strip()
        if text and set(text) - {"0", "1"}:
            raise BitError(f"not a bit string: {text!r}")
        return cls(int(text, 2) if text else 0, len(text))

    @classmethod
    def from_bits(cls, bits: Iterable[int]) -> BitString:
        value = 0
        length = 0
        for b in bits:
            value = (value << 1) | (1 if b else 0)
            length += 1
        return cls(value, length)

    @classmethod
    def zeros(cls, length: int) -> BitString:
        return cls(0, length)

    def __len__(self) -> int:
        return self.length

    def __str__(self) -> str:
        return format(self.value, f"0{self.length}b") if self.length else ""

    def __getitem__(self, index):
        if isinstance(index, slice):
            start, stop, step = index.indices(self.length)
            if step != 1:
                return BitString.from_bits(list(self)[index])
            if stop <= start:
                return BitString()
            width = stop - start
            return BitString((self.value >> (self.length - stop)) & ((1 << width) - 1), width)
        if index < 0:
            index += self.length
        if not 0 <= index < self.length:
            raise IndexError("bit index out of range")
        return (self.value >> (self.length - 1 - index)) & 1

    def __iter__(self):
        for i in range(self.length):
            yield (self.value >> (self.length - 1 - i)) & 1

    def __add__(self, other: BitString) -> BitString:
        return BitString((self.value << other.length) | other.value, self.length + other.length)

    def pad_to(self, length: int) -> BitString:
        """Append zero bits up to ``length``."""
        if length < self.length:
            raise BitError(f"cannot pad {self.length} bits down to {length}")
        return BitString(self.value << (length - self.length), length)

    def to_bytes(self) -> bytes:
        """MSB-first, final byte zero-padded."""
        nbytes = (self.length + 7) // 8
        return (self.value << (8 * nbytes - self.length)).to_bytes(nbytes, "big")

    @classmethod
    def from_bytes(cls, data: bytes, length: int) -> BitString:
        nbytes = (length + 7) // 8
        if len(data) != nbytes:
            raise BitError(f"expected {nbytes} bytes for {length} bits, got {len(data)}")
        raw = int.from_bytes(data, "big")
        return cls(raw >> (8 * nbytes - length), length)

    def to_natural(self) -> int:
        return self.value


def to_natural(s: BitString) -> int:
    return s.value


def from_natural(value: int, width: int) -> BitString:
    if value < 0 or value >> width:
        raise BitError(f"value {value} too wide for {width} bits")
    return BitString(value, width)


def count_runs(s: BitString) -> int:
    """Number of maximal constant blocks in ``s``."""
    if s.length == 0:
        return 0
    return count_runs_int(s.value, s.length)


def count_runs_int(value: int, length: int) -> int:
    if length == 0:
        return 0
    # a run boundary sits wherever adjacent bits differ
    changes = (value ^ (value >> 1)) & ((1 << (length - 1)) - 1)
    return bin(changes).count("1") + 1


class BitCursor:
    """Sequential reader over a :class:`BitString`."""

    def __init__(self, target: BitString, position: int = 0) -> None:
        if not 0 <= position <= target.length:
            raise BitError("cursor position out of range")
        self.target = target
        self.position = position

    @property
    def remaining(self) -> int:
        return self.target.length - self.position

    def read_int(self, width: int) -> int:
        if width > self.remaining:
            raise BitError(f"read of {width} bits past end ({self.remaining} left)")
        t = self.target
        shift = t.length - self.position - width
        self.position += width
        return (t.value >> shift) & ((1 << width) - 1)

    def read(self, width: int) -> BitString:
        return BitString(self.read_int(width), width)

    def read_bit(self) -> int:
        return self.read_int(1)


class BitWriter:
    """Append-only builder; ``getvalue`` returns the accumulated BitString."""

    def __init__(self) -> None:
        self._value = 0
        self._length = 0

    def __len__(self) -> int:
        return self._length

    def write_int(self, value: int, width: int) -> None:
        if value < 0 or value >> width:
            raise BitError(f"value {value} too wide for {width} bits")
        self._value = (self._value << width) | value
        self._length += width

    def write(self, bits: BitString) -> None:
        self._value = (self._value << bits.length) | bits.value
        self._length += bits.length

    def getvalue(self) -> BitString:
        return BitString(self._value, self._length)
