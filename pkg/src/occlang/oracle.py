"""Brute-force reference procedures backing the test suites.

Everything here is deliberately direct: a streaming counter scan for
membership, exhaustive word enumeration for censuses and bounded DFA
equivalence, and closed-form enumeration of bordered words.  Budgets are
explicit; exceeding one raises instead of truncating silently.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, Sequence

from .automata import Dfa, MatcherMode, matcher_automaton
from .errors import BudgetExceededError, EmptyPatternError
from .regularity import Relation
from .words import Alphabet, Word, border_lengths


@dataclass(frozen=True)
class CensusReport:
    """Membership counts of a language restricted to words up to max_length."""

    max_length: int
    per_length_counts: tuple[int, ...]
    members: tuple[Word, ...] | None

    def to_json_dict(self) -> dict:
        doc: dict = {"max_length": self.max_length, "counts": list(self.per_length_counts)}
        if self.members is not None:
            doc["members"] = list(self.members)
        return doc


@lru_cache(maxsize=256)
def _counting_matcher(pattern: Word, symbols: tuple[str, ...]) -> Dfa:
    return matcher_automaton(pattern, Alphabet(symbols), MatcherMode.COUNTING)


def _count_with_matcher(z: Word, pattern: Word, symbols: tuple[str, ...]) -> int:
    m = _counting_matcher(pattern, symbols)
    hit = len(pattern)
    state = 0
    trans = m.transitions
    index = m.alphabet.index
    total = 0
    for ch in z:
        state = trans[state][index(ch)]
        if state == hit:
            total += 1
    return total


def counter_membership(z: Word, x: Word, y: Word, rel: Relation) -> bool:
    """Whether |z|_x rel |z|_y, by a single left-to-right counter scan."""
    if not x or not y:
        raise EmptyPatternError("counter membership needs nonempty patterns")
    symbols = tuple(sorted(set(z) | set(x) | set(y)))
    cx = _count_with_matcher(z, x, symbols)
    cy = _count_with_matcher(z, y, symbols)
    return rel.holds(cx, cy)


def _default_budget(alphabet: Alphabet) -> int:
    return 16 if len(alphabet) <= 2 else 10


def _walk_counts(
    patterns: Sequence[Word], alphabet: Alphabet, max_length: int
) -> Iterator[tuple[Word, tuple[int, ...]]]:
    """Every word of length <= max_length with its per-pattern occurrence counts.

    Depth-first over the prefix tree in symbol order, extending matcher states
    incrementally, so the whole sweep costs one transition per tree edge per
    pattern.
    """
    machines = [matcher_automaton(p, alphabet, MatcherMode.COUNTING) for p in patterns]
    tables = [m.transitions for m in machines]
    hits = [len(p) for p in patterns]
    nsym = len(alphabet.symbols)

    def rec(word: Word, states: tuple[int, ...], counts: tuple[int, ...]):
        yield word, counts
        if len(word) == max_length:
            return
        for si in range(nsym):
            nstates = tuple(t[s][si] for t, s in zip(tables, states))
            ncounts = tuple(
                c + (1 if s2 == h else 0) for c, s2, h in zip(counts, nstates, hits)
            )
            yield from rec(word + alphabet.symbols[si], nstates, ncounts)

    zero = (0,) * len(patterns)
    yield from rec("", zero, zero)


def _census(
    patterns: Sequence[Word],
    alphabet: Alphabet,
    max_length: int,
    member,
    budget: int | None,
    member_limit: int,
) -> CensusReport:
    if any(not p for p in patterns):
        raise EmptyPatternError("census patterns must be nonempty")
    for p in patterns:
        alphabet.require(p)
    cap = budget if budget is not None else _default_budget(alphabet)
    if max_length > cap:
        raise BudgetExceededError(
            f"census to length {max_length} exceeds the budget of {cap}"
        )
    counts = [0] * (max_length + 1)
    buckets: list[list[Word]] = [[] for _ in range(max_length + 1)]
    for word, occ in _walk_counts(patterns, alphabet, max_length):
        if member(occ):
            counts[len(word)] += 1
            buckets[len(word)].append(word)
    members: tuple[Word, ...] | None = None
    if sum(counts) <= member_limit:
        members = tuple(w for bucket in buckets for w in bucket)
    return CensusReport(max_length, tuple(counts), members)


def bounded_census(
    x: Word,
    y: Word,
    alphabet: Alphabet,
    rel: Relation,
    max_length: int,
    budget: int | None = None,
    member_limit: int = 512,
) -> CensusReport:
    """Census of { z : |z|_x rel |z|_y } over all words of length <= max_length.

    Words are visited in length-lexicographic order; the explicit member list
    is included only while it stays within member_limit.
    """
    return _census(
        [x, y], alphabet, max_length, lambda occ: rel.holds(occ[0], occ[1]), budget, member_limit
    )


def bounded_equal_census(
    patterns: Sequence[Word],
    alphabet: Alphabet,
    max_length: int,
    budget: int | None = None,
    member_limit: int = 512,
) -> CensusReport:
    """Census of the words in which all given patterns occur equally often."""
    if not patterns:
        raise ValueError("at least one pattern is required")
    return _census(
        patterns,
        alphabet,
        max_length,
        lambda occ: len(set(occ)) == 1,
        budget,
        member_limit,
    )


def bounded_equivalence(a: Dfa, x: Word, y: Word, rel: Relation, max_length: int) -> Word | None:
    """First word (length-lexicographic) where a's verdict differs from the counter scan.

    Returns None when the DFA and the oracle agree on every word of length up
    to max_length.
    """
    alphabet = a.alphabet
    alphabet.require(x)
    alphabet.require(y)
    symbols = alphabet.symbols
    mx = matcher_automaton(x, alphabet, MatcherMode.COUNTING)
    my = matcher_automaton(y, alphabet, MatcherMode.COUNTING)
    hit_x, hit_y = len(x), len(y)
    # a mismatch hides only words extending it, all length-lexicographically
    # later, so the minimum over the sweep is the global first mismatch
    mismatches: list[Word] = []

    def sweep(word, sa, sx, sy, cx, cy):
        if (sa in a.accepting) != rel.holds(cx, cy):
            mismatches.append(word)
            return
        if len(word) == max_length:
            return
        for si, sym in enumerate(symbols):
            na = a.transitions[sa][si]
            nx = mx.transitions[sx][si]
            ny = my.transitions[sy][si]
            sweep(
                word + sym,
                na,
                nx,
                ny,
                cx + (1 if nx == hit_x else 0),
                cy + (1 if ny == hit_y else 0),
            )

    sweep("", a.start, 0, 0, 0, 0)
    if not mismatches:
        return None
    return min(mismatches, key=lambda w: (len(w), [alphabet.index(ch) for ch in w]))


def enumerate_bordered(y: Word, alphabet: Alphabet, max_length: int) -> list[Word]:
    """All y-bordered words of length <= max_length, in length-lexicographic order.

    Overlapping-border lengths L with |y| < L < 2|y| admit exactly one word,
    and only when 2|y| - L is a border length of y; longer words are y,
    filler, y for every filler.
    """
    if not y:
        raise EmptyPatternError("border must be nonempty")
    alphabet.require(y)
    m = len(y)
    borders = set(border_lengths(y))
    out: list[Word] = []
    for length in range(m + 1, max_length + 1):
        if length < 2 * m:
            b = 2 * m - length
            if b in borders:
                out.append(y + y[b:])
        else:
            for mid in alphabet.words_of_length(length - 2 * m):
                out.append(y + mid + y)
    return out
