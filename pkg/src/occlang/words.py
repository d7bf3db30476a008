"""Core combinatorics on words: occurrence counting, borders, periodicity.

Words are plain ``str`` values whose characters are symbols of an explicit
:class:`Alphabet`.  The alphabet fixes the symbol order used everywhere a
deterministic tie-break is needed (witness search, serialization).  Window
arithmetic that mirrors the usual 1-based inclusive ``w[i..j]`` convention
goes through :func:`segment`.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterable, Iterator

from .errors import (
    AlphabetTooSmallError,
    EmptyPatternError,
    EmptyWordError,
    ForeignSymbolError,
    InconsistentDecompositionError,
    NotBorderedError,
)

Word = str


class Alphabet:
    """Ordered set of distinct single-character symbols."""

    __slots__ = ("symbols", "_index")

    def __init__(self, symbols: Iterable[str]):
        syms = tuple(symbols)
        if not syms:
            raise AlphabetTooSmallError("an alphabet needs at least one symbol")
        for s in syms:
            if not isinstance(s, str) or len(s) != 1:
                raise ValueError(f"alphabet symbols must be single characters, got {s!r}")
        if len(set(syms)) != len(syms):
            raise ValueError(f"alphabet symbols must be distinct, got {syms!r}")
        self.symbols = syms
        self._index = {s: i for i, s in enumerate(syms)}

    def index(self, symbol: str) -> int:
        try:
            return self._index[symbol]
        except KeyError:
            raise ForeignSymbolError(f"symbol {symbol!r} is not in alphabet {self}") from None

    def require(self, word: Word) -> None:
        """Raise ForeignSymbolError unless every letter of word is in the alphabet."""
        for ch in word:
            if ch not in self._index:
                raise ForeignSymbolError(f"symbol {ch!r} of {word!r} is not in alphabet {self}")

    def words_of_length(self, length: int) -> Iterator[Word]:
        """All words of the given length, in lexicographic order of the symbol order."""
        if length == 0:
            yield ""
            return
        for prefix in self.words_of_length(length - 1):
            for s in self.symbols:
                yield prefix + s

    def __contains__(self, symbol: str) -> bool:
        return symbol in self._index

    def __iter__(self) -> Iterator[str]:
        return iter(self.symbols)

    def __len__(self) -> int:
        return len(self.symbols)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Alphabet) and self.symbols == other.symbols

    def __hash__(self) -> int:
        return hash(self.symbols)

    def __repr__(self) -> str:
        return "Alphabet({!r})".format("".join(self.symbols))


def segment(w: Word, i: int, j: int) -> Word:
    """The slice w[i..j] with 1-based inclusive endpoints (empty when j < i)."""
    return w[i - 1 : j]


def count_occurrences(w: Word, p: Word) -> int:
    """Number of possibly overlapping occurrences of p in w."""
    if not p:
        raise EmptyPatternError("occurrence counting needs a nonempty pattern")
    n = 0
    i = w.find(p)
    while i != -1:
        n += 1
        i = w.find(p, i + 1)
    return n


def border_lengths(w: Word) -> list[int]:
    """All lengths b with 1 <= b < |w| such that w[1..b] is also a suffix of w."""
    if not w:
        raise EmptyWordError("the empty word has no borders")
    return [b for b in range(1, len(w)) if w[:b] == w[-b:]]


class Borderedness(enum.Enum):
    NOT_BORDERED = "not-bordered"
    DISJOINT = "disjoint"
    OVERLAPPING = "overlapping"


def classify_bordered(z: Word, y: Word) -> Borderedness:
    """Whether z is y-bordered, and if so whether the two copies of y overlap.

    z is y-bordered when z != y and y is both a prefix and a suffix of z; the
    copies are disjoint when |y| <= |z|/2 and overlapping otherwise.
    """
    if not y:
        raise EmptyPatternError("borders must be nonempty")
    if z == y or not (z.startswith(y) and z.endswith(y)):
        return Borderedness.NOT_BORDERED
    if 2 * len(y) <= len(z):
        return Borderedness.DISJOINT
    return Borderedness.OVERLAPPING


@dataclass(frozen=True)
class BorderDecomposition:
    """Periodic decomposition of a bordered word: border = (uv)^e u, word = (uv)^{e+1} u."""

    u: Word
    v: Word
    e: int

    def period_word(self) -> Word:
        return self.u + self.v

    def border(self) -> Word:
        return (self.u + self.v) * self.e + self.u

    def bordered_word(self) -> Word:
        return (self.u + self.v) * (self.e + 1) + self.u


@dataclass(frozen=True)
class PowerCountParams:
    """Occurrence growth of a border inside rising powers of its period word.

    c counts the border in (uv)^{e+1}; d is the increase from (uv)^{e+1} to
    (uv)^{e+2}.  Both are >= 1, and the count in (uv)^i is (i-e)d + c - d for
    every i > e.
    """

    c: int
    d: int


def decompose_bordered(z: Word, y: Word) -> BorderDecomposition:
    """The unique decomposition (u, v, e) of a y-bordered z with u nonempty and e maximal.

    Deterministic choice: the period is |z| - |y|, e = floor((|y|-1)/period),
    and u is the prefix of y of length |y| - e*period.
    """
    if classify_bordered(z, y) is Borderedness.NOT_BORDERED:
        raise NotBorderedError(f"{z!r} is not {y!r}-bordered")
    period = len(z) - len(y)
    e = (len(y) - 1) // period
    ulen = len(y) - e * period
    dec = BorderDecomposition(u=y[:ulen], v=z[ulen:period], e=e)
    # z is period-periodic because its y-prefix and y-suffix overlap it entirely,
    # so both reconstruction identities hold by construction.
    assert dec.border() == y and dec.bordered_word() == z
    return dec


def power_count_params(dec: BorderDecomposition, y: Word) -> PowerCountParams:
    """Count the border y inside (uv)^{e+1} and (uv)^{e+2} of the decomposition."""
    if dec.border() != y:
        raise InconsistentDecompositionError(
            f"(u, v, e) = ({dec.u!r}, {dec.v!r}, {dec.e}) does not reconstruct {y!r}"
        )
    uv = dec.period_word()
    c = count_occurrences(uv * (dec.e + 1), y)
    d = count_occurrences(uv * (dec.e + 2), y) - c
    return PowerCountParams(c=c, d=d)


def primitive_root(w: Word) -> tuple[Word, int]:
    """Shortest word r and exponent k >= 1 with w = r^k."""
    if not w:
        raise EmptyWordError("the empty word has no primitive root")
    n = len(w)
    for d in range(1, n + 1):
        if n % d == 0 and w[:d] * (n // d) == w:
            return w[:d], n // d
    raise AssertionError("unreachable: every word is a power of itself")


def commutes(x: Word, y: Word) -> bool:
    """Whether xy = yx; for nonempty words this holds iff they share a primitive root."""
    return x + y == y + x
