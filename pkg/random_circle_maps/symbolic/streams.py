# -*- coding: utf-8 -*-
#
# This file is part of Random-Circle-Maps.
# Copyright (C) 2026 Random-Circle-Maps contributors.
#
# Random-Circle-Maps is free software; you can redistribute it and/or modify
# it under the terms of the MIT License; see LICENSE file for more details.

"""Finite words and lazily evaluated one-sided symbol streams.

Streams are never materialised: every stream answers :meth:`SymbolStream.at`
for an arbitrary array of indices, so a shifted view or a block-composite
sequence millions of symbols long costs nothing until it is read.
"""

import math
from abc import ABC, abstractmethod
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

import numpy as np

from ..errors import InvalidStream


def _check_symbols(symbols, k):
    if k < 2:
        raise InvalidStream(f"alphabet size must be at least 2, got {k}")
    for s in symbols:
        if not 0 <= s < k:
            raise InvalidStream(f"symbol {s} outside 0..{k - 1}")


@dataclass(frozen=True)
class SymbolWord:
    """Finite word over ``{0, ..., k-1}``."""

    symbols: tuple
    k: int = 2

    def __post_init__(self):
        """Normalise and check the symbols."""
        symbols = tuple(int(s) for s in self.symbols)
        _check_symbols(symbols, self.k)
        object.__setattr__(self, "symbols", symbols)

    def __len__(self):
        """Word length."""
        return len(self.symbols)

    def __iter__(self):
        """Iterate over the symbols."""
        return iter(self.symbols)

    def __getitem__(self, item):
        """Symbol (or tuple of symbols) at a position."""
        return self.symbols[item]

    def slice(self, m, n):
        """``(s_m, ..., s_n)``, both ends included."""
        if not 0 <= m <= n < len(self):
            raise IndexError(f"slice [{m}, {n}] outside a word of length {len(self)}")
        return SymbolWord(self.symbols[m:n + 1], self.k)

    def concat(self, other):
        """Word followed by ``other``."""
        return SymbolWord(self.symbols + tuple(other), self.k)

    @property
    def index(self):
        """k-adic index, most significant symbol first."""
        value = 0
        for s in self.symbols:
            value = value * self.k + s
        return value

    def as_array(self):
        """Symbols as an integer array."""
        return np.asarray(self.symbols, dtype=np.int64)

    def __str__(self):
        """Compact digit string (``.`` separated for ``k > 10``)."""
        sep = "" if self.k <= 10 else "."
        return sep.join(str(s) for s in self.symbols)


class SymbolStream(ABC):
    """One-sided infinite sequence over ``{0, ..., k-1}``."""

    kind = None

    def __init__(self, k):
        """Initialise the alphabet size."""
        if k < 2:
            raise InvalidStream(f"alphabet size must be at least 2, got {k}")
        self.k = k

    @abstractmethod
    def at(self, indices):
        """Symbols at an array of non-negative indices."""

    @abstractmethod
    def to_dict(self):
        """Serializable description ``{"kind": ..., ...}``."""

    def __getitem__(self, index):
        """Single symbol."""
        if index < 0:
            raise IndexError("streams are one-sided")
        return int(self.at(np.array([index]))[0])

    def symbols(self, start, count):
        """``count`` consecutive symbols from ``start`` as an array."""
        return self.at(np.arange(start, start + count, dtype=np.int64))

    def word(self, n, start=0):
        """First ``n`` symbols of ``sigma^start`` as a :class:`SymbolWord`."""
        return SymbolWord(tuple(self.symbols(start, n)), self.k)

    def shift(self, m=1):
        """The shifted stream ``sigma^m``."""
        if m == 0:
            return self
        return ShiftedStream(self, m)

    def __repr__(self):
        """Description as a call."""
        return f"{type(self).__name__}({self.to_dict()})"


class PeriodicStream(SymbolStream):
    """Repetition of a finite word."""

    kind = "periodic"

    def __init__(self, word, k=2):
        """Initialise stream."""
        super().__init__(k)
        word = tuple(int(s) for s in word)
        if not word:
            raise InvalidStream("periodic word must be non-empty")
        _check_symbols(word, k)
        self.word_ = word
        self._period = np.asarray(word, dtype=np.int64)

    def at(self, indices):
        """Symbols at ``indices``."""
        indices = np.asarray(indices, dtype=np.int64)
        return self._period[indices % self._period.size]

    def to_dict(self):
        """Serializable description."""
        return {"kind": self.kind, "k": self.k, "word": list(self.word_)}


def _as_fraction(x):
    if isinstance(x, Fraction):
        return x
    if isinstance(x, str):
        return Fraction(x)
    if isinstance(x, int):
        return Fraction(x)
    # shortest decimal repr, so 0.3 reads as 3/10
    return Fraction(repr(float(x)))


class DigitsStream(SymbolStream):
    """Base-``k`` digits of a rational point, i.e. its ``E_k`` itinerary.

    Digits come from exact long division of the fraction; once a remainder
    repeats the expansion is known to be eventually periodic and no more
    division is needed.
    """

    kind = "digits"

    def __init__(self, x, k=2):
        """Initialise stream.

        :param x: a :class:`fractions.Fraction`, a fraction string such as
            ``"3/10"``, or a float (read through its shortest decimal form).
        """
        super().__init__(k)
        value = _as_fraction(x)
        self.x = value - math.floor(value)
        self._q = self.x.denominator
        self._remainder = self.x.numerator
        self._digits = []
        self._seen = {}
        self._cycle_start = None

    def _extend(self, n):
        k, q = self.k, self._q
        while self._cycle_start is None and len(self._digits) < n:
            r = self._remainder
            if r in self._seen:
                self._cycle_start = self._seen[r]
                break
            self._seen[r] = len(self._digits)
            digit, self._remainder = divmod(k * r, q)
            self._digits.append(digit)

    def at(self, indices):
        """Symbols at ``indices``."""
        indices = np.asarray(indices, dtype=np.int64)
        if indices.size == 0:
            return np.zeros(0, dtype=np.int64)
        self._extend(int(indices.max()) + 1)
        digits = np.asarray(self._digits, dtype=np.int64)
        if self._cycle_start is None:
            return digits[indices]
        head = self._cycle_start
        period = len(self._digits) - head
        folded = np.where(indices < head, indices, head + (indices - head) % period)
        return digits[folded]

    def point(self):
        """The encoded point as a float."""
        return float(self.x)

    def to_dict(self):
        """Serializable description."""
        return {"kind": self.kind, "k": self.k, "x": str(self.x)}


@lru_cache(maxsize=512)
def _digit_block(seed, k, block, size):
    rng = np.random.default_rng((seed, block))
    digits = rng.integers(0, k, size=size, dtype=np.int64)
    digits.setflags(write=False)
    return digits


class SeededDigitsStream(SymbolStream):
    """Digits of a uniformly random point drawn from a seed.

    Digits are i.i.d. uniform, which is the law of the base-``k`` expansion
    of a Lebesgue-random point. They are drawn in fixed blocks, each from its
    own generator, so any index can be read without the prefix.
    """

    kind = "seeded"

    def __init__(self, seed, k=2, block_size=4096):
        """Initialise stream."""
        super().__init__(k)
        if seed < 0:
            raise InvalidStream("seed must be non-negative")
        self.seed = int(seed)
        self.block_size = int(block_size)

    def at(self, indices):
        """Symbols at ``indices``."""
        indices = np.asarray(indices, dtype=np.int64)
        out = np.empty(indices.shape, dtype=np.int64)
        blocks = indices // self.block_size
        for block in np.unique(blocks):
            mask = blocks == block
            digits = _digit_block(self.seed, self.k, int(block), self.block_size)
            out[mask] = digits[indices[mask] - block * self.block_size]
        return out

    def point(self):
        """The encoded point to double precision."""
        n = math.ceil(60 / math.log2(self.k))
        digits = self.symbols(0, n)
        return math.fsum(float(d) * float(self.k) ** -(j + 1) for j, d in enumerate(digits))

    def to_dict(self):
        """Serializable description."""
        return {
            "kind": self.kind,
            "k": self.k,
            "seed": self.seed,
            "block_size": self.block_size,
        }


class ShiftedStream(SymbolStream):
    """``sigma^m`` of another stream."""

    kind = "shifted"

    def __init__(self, stream, m):
        """Initialise stream."""
        super().__init__(stream.k)
        if m < 0:
            raise InvalidStream("shift must be non-negative")
        # collapse nested shifts
        if isinstance(stream, ShiftedStream):
            stream, m = stream.stream, stream.m + m
        self.stream = stream
        self.m = int(m)

    def at(self, indices):
        """Symbols at ``indices``."""
        return self.stream.at(np.asarray(indices, dtype=np.int64) + self.m)

    def to_dict(self):
        """Serializable description."""
        return {"kind": self.kind, "m": self.m, "stream": self.stream.to_dict()}


class BlockCompositeStream(SymbolStream):
    """Splice of two streams along block boundaries ``N_0 = 0 < N_1 < ...``.

    Index ``i`` in block ``j`` (``N_{j-1} <= i < N_j``) reads ``first`` when
    ``j`` is odd and ``second`` when ``j`` is even, at offset
    ``i - N_{j-1}``. Past the last boundary the final block's source keeps
    going.
    """

    kind = "composite"

    def __init__(self, boundaries, first, second):
        """Initialise stream."""
        if first.k != second.k:
            raise InvalidStream("both sources must share the alphabet")
        super().__init__(first.k)
        boundaries = tuple(int(n) for n in boundaries)
        if len(boundaries) < 2 or boundaries[0] != 0:
            raise InvalidStream("boundaries must start at 0 and hold a block")
        if any(b >= c for b, c in zip(boundaries, boundaries[1:])):
            raise InvalidStream("boundaries must increase strictly")
        self.boundaries = boundaries
        self.first = first
        self.second = second
        self._edges = np.asarray(boundaries, dtype=np.int64)

    @property
    def blocks(self):
        """Number of blocks."""
        return len(self.boundaries) - 1

    def block_of(self, indices):
        """Block number (1-based) of each index."""
        indices = np.asarray(indices, dtype=np.int64)
        return np.minimum(np.searchsorted(self._edges, indices, side="right"), self.blocks)

    def at(self, indices):
        """Symbols at ``indices``."""
        indices = np.asarray(indices, dtype=np.int64)
        block = self.block_of(indices)
        offset = indices - self._edges[block - 1]
        odd = block % 2 == 1
        out = np.empty(indices.shape, dtype=np.int64)
        if np.any(odd):
            out[odd] = self.first.at(offset[odd])
        if np.any(~odd):
            out[~odd] = self.second.at(offset[~odd])
        return out

    def to_dict(self):
        """Serializable description."""
        return {
            "kind": self.kind,
            "boundaries": list(self.boundaries),
            "first": self.first.to_dict(),
            "second": self.second.to_dict(),
        }


def stream_from_dict(data):
    """Rebuild a stream from :meth:`SymbolStream.to_dict` output."""
    try:
        kind = data["kind"]
        if kind == PeriodicStream.kind:
            return PeriodicStream(data["word"], data.get("k", 2))
        if kind == DigitsStream.kind:
            return DigitsStream(Fraction(data["x"]), data.get("k", 2))
        if kind == SeededDigitsStream.kind:
            return SeededDigitsStream(
                data["seed"], data.get("k", 2), data.get("block_size", 4096)
            )
        if kind == ShiftedStream.kind:
            return ShiftedStream(stream_from_dict(data["stream"]), data["m"])
        if kind == BlockCompositeStream.kind:
            return BlockCompositeStream(
                data["boundaries"],
                stream_from_dict(data["first"]),
                stream_from_dict(data["second"]),
            )
    except (KeyError, TypeError, ValueError) as e:
        raise InvalidStream(f"cannot read {data!r}: {e}") from e
    raise InvalidStream(f"unknown stream kind {data.get('kind')!r}")
