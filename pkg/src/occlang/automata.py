"""Complete DFAs over explicit alphabets: pattern matchers, bordered-word
recognizers, boolean products, minimization, emptiness with shortest witness,
and DOT/JSON serialization."""

from __future__ import annotations

import enum
import json
from collections import deque
from dataclasses import dataclass, replace
from typing import Iterator

from .errors import (
    AlphabetMismatchError,
    AlphabetTooSmallError,
    EmptyPatternError,
    MalformedJsonError,
)
from .words import Alphabet, Word


@dataclass(frozen=True)
class Dfa:
    """Complete deterministic automaton.

    transitions[state][symbol_index] gives the successor state; every state
    has a transition for every symbol.  match_mark optionally flags the states
    where a full pattern occurrence has just ended (used for occurrence
    counting, independent of acceptance).  Instances are immutable and safe to
    share between threads.
    """

    alphabet: Alphabet
    transitions: tuple[tuple[int, ...], ...]
    start: int
    accepting: frozenset[int]
    match_mark: frozenset[int] | None = None

    def __post_init__(self):
        n = len(self.transitions)
        k = len(self.alphabet)
        if n < 1:
            raise ValueError("a DFA needs at least one state")
        for row in self.transitions:
            if len(row) != k or any(not (0 <= t < n) for t in row):
                raise ValueError("transition table is not total over the state set")
        if not 0 <= self.start < n:
            raise ValueError("start state out of range")
        if not all(0 <= s < n for s in self.accepting):
            raise ValueError("accepting state out of range")
        if self.match_mark is not None and not all(0 <= s < n for s in self.match_mark):
            raise ValueError("match mark state out of range")

    @property
    def state_count(self) -> int:
        return len(self.transitions)

    def step(self, state: int, symbol: str) -> int:
        return self.transitions[state][self.alphabet.index(symbol)]

    def run(self, word: Word) -> Iterator[int]:
        """States visited after each symbol of word (start state not included)."""
        state = self.start
        index = self.alphabet.index
        for ch in word:
            state = self.transitions[state][index(ch)]
            yield state

    def final_state(self, word: Word) -> int:
        state = self.start
        for state in self.run(word):
            pass
        return state

    def accepts(self, word: Word) -> bool:
        return self.final_state(word) in self.accepting

    def count_marks(self, word: Word) -> int:
        """How many times a run over word enters a match-marked state."""
        marks = self.match_mark or frozenset()
        return sum(1 for state in self.run(word) if state in marks)


class MatcherMode(enum.Enum):
    COUNTING = "counting"
    ABSORBING_SUBWORD = "absorbing-subword"
    SUFFIX_ONLY = "suffix-only"


class BoolOp(enum.Enum):
    AND = "and"
    AND_NOT = "and-not"


def kmp_failure(p: Word) -> list[int]:
    """fail[i] = length of the longest proper border of p[:i] (fail[0] = 0)."""
    fail = [0] * (len(p) + 1)
    k = 0
    for i in range(1, len(p)):
        while k and p[i] != p[k]:
            k = fail[k]
        if p[i] == p[k]:
            k += 1
        fail[i + 1] = k
    return fail


def matcher_automaton(p: Word, alphabet: Alphabet, mode: MatcherMode = MatcherMode.COUNTING) -> Dfa:
    """Failure-function pattern matcher with |p|+1 states.

    State i asserts that the longest suffix of the input matching a prefix of
    p has length i.  COUNTING keeps matching through overlaps after a full
    match and marks state |p| (one mark visit per occurrence);
    ABSORBING_SUBWORD turns state |p| into an accepting sink, recognizing the
    words that contain p; SUFFIX_ONLY accepts exactly the words ending in p.
    """
    if not p:
        raise EmptyPatternError("matcher pattern must be nonempty")
    alphabet.require(p)
    m = len(p)
    fail = kmp_failure(p)
    rows: list[tuple[int, ...]] = [tuple(1 if p[0] == a else 0 for a in alphabet.symbols)]
    for i in range(1, m + 1):
        if i == m and mode is MatcherMode.ABSORBING_SUBWORD:
            rows.append(tuple(m for _ in alphabet.symbols))
            continue
        fallback = rows[fail[i]]
        rows.append(
            tuple(
                i + 1 if i < m and p[i] == a else fallback[ai]
                for ai, a in enumerate(alphabet.symbols)
            )
        )
    if mode is MatcherMode.COUNTING:
        return Dfa(alphabet, tuple(rows), 0, frozenset(), match_mark=frozenset({m}))
    return Dfa(alphabet, tuple(rows), 0, frozenset({m}))


def grafted_bordered_automaton(y: Word, alphabet: Alphabet) -> Dfa:
    """DFA with exactly 2|y|+3 states accepting the y-bordered words.

    Built by grafting the recognizer for "starts with y, then at least one
    symbol" onto the suffix tracker for "ends with y": the strict-prefix
    states feed, after y is consumed, straight into the failure-function
    states of the suffix matcher, so the former final state and the latter
    initial state disappear from the construction.
    """
    if not y:
        raise EmptyPatternError("border must be nonempty")
    alphabet.require(y)
    m = len(y)
    kmp = matcher_automaton(y, alphabet, MatcherMode.COUNTING).transitions
    dead = m + 1
    base = m + 2  # suffix-tracker states occupy base .. base+m
    rows: list[tuple[int, ...]] = []
    for i in range(m):
        rows.append(tuple(i + 1 if a == y[i] else dead for a in alphabet.symbols))
    # consumed exactly y: continue in the suffix tracker via y's border transition
    rows.append(tuple(base + t for t in kmp[m]))
    rows.append(tuple(dead for _ in alphabet.symbols))
    for j in range(m + 1):
        rows.append(tuple(base + t for t in kmp[j]))
    return Dfa(alphabet, tuple(rows), 0, frozenset({base + m}))


def combine(a: Dfa, b: Dfa, op: BoolOp) -> Dfa:
    """Product automaton over the reachable state pairs, accepting per op."""
    if a.alphabet != b.alphabet:
        raise AlphabetMismatchError(f"cannot combine DFAs over {a.alphabet} and {b.alphabet}")
    k = len(a.alphabet)
    ta, tb = a.transitions, b.transitions
    nb = b.state_count
    index = {a.start * nb + b.start: 0}
    pairs = [(a.start, b.start)]
    rows: list[tuple[int, ...]] = []
    qi = 0
    while qi < len(pairs):
        sa, sb = pairs[qi]
        qi += 1
        ra, rb = ta[sa], tb[sb]
        row = []
        for si in range(k):
            na, nbb = ra[si], rb[si]
            key = na * nb + nbb
            t = index.get(key)
            if t is None:
                t = len(pairs)
                index[key] = t
                pairs.append((na, nbb))
            row.append(t)
        rows.append(tuple(row))
    if op is BoolOp.AND:
        acc = frozenset(
            i for i, (sa, sb) in enumerate(pairs) if sa in a.accepting and sb in b.accepting
        )
    else:
        acc = frozenset(
            i for i, (sa, sb) in enumerate(pairs) if sa in a.accepting and sb not in b.accepting
        )
    return Dfa(a.alphabet, tuple(rows), 0, acc)


def complement(a: Dfa) -> Dfa:
    """Invert the accepting set; the DFA is complete, so this is exact."""
    return replace(a, accepting=frozenset(range(a.state_count)) - a.accepting)


def minimize(a: Dfa) -> Dfa:
    """Unique minimal complete DFA for L(a), states numbered by BFS in symbol order.

    Moore partition refinement: start from the accepting/rejecting split and
    refine blocks by successor-block signatures until stable.
    """
    k = len(a.alphabet)
    trans = a.transitions
    reach = [a.start]
    seen = {a.start}
    for s in reach:
        for t in trans[s]:
            if t not in seen:
                seen.add(t)
                reach.append(t)
    block = {s: 1 if s in a.accepting else 0 for s in reach}
    nblocks = len(set(block.values()))
    while True:
        remap: dict[tuple, int] = {}
        new = {}
        for s in reach:
            row = trans[s]
            key = (block[s], tuple(block[row[i]] for i in range(k)))
            b = remap.setdefault(key, len(remap))
            new[s] = b
        block = new
        if len(remap) == nblocks:
            break
        nblocks = len(remap)
    rep: dict[int, int] = {}
    for s in reach:
        rep.setdefault(block[s], s)
    order = [block[a.start]]
    position = {block[a.start]: 0}
    rows = []
    i = 0
    while i < len(order):
        b = order[i]
        i += 1
        row = []
        src = trans[rep[b]]
        for si in range(k):
            tb = block[src[si]]
            j = position.get(tb)
            if j is None:
                j = len(order)
                position[tb] = j
                order.append(tb)
            row.append(j)
        rows.append(tuple(row))
    acc = frozenset(position[block[s]] for s in reach if s in a.accepting)
    return Dfa(a.alphabet, tuple(rows), 0, acc)


def shortest_accepted(a: Dfa) -> Word | None:
    """The length-lexicographically smallest accepted word, or None if L(a) is empty.

    Breadth-first search trying symbols in alphabet order; any returned word
    has length at most state_count - 1.
    """
    if a.start in a.accepting:
        return ""
    syms = a.alphabet.symbols
    k = len(syms)
    trans = a.transitions
    parent: dict[int, tuple[int, int] | None] = {a.start: None}
    queue = deque([a.start])
    while queue:
        s = queue.popleft()
        row = trans[s]
        for si in range(k):
            t = row[si]
            if t in parent:
                continue
            parent[t] = (s, si)
            if t in a.accepting:
                out = []
                cur = t
                while parent[cur] is not None:
                    prev, pi = parent[cur]  # type: ignore[misc]
                    out.append(syms[pi])
                    cur = prev
                return "".join(reversed(out))
            queue.append(t)
    return None


def to_json(a: Dfa) -> str:
    """Schema-stable JSON with transitions sorted by (state, symbol order)."""
    doc: dict = {
        "alphabet": list(a.alphabet.symbols),
        "state_count": a.state_count,
        "start": a.start,
        "accepting": sorted(a.accepting),
    }
    if a.match_mark is not None:
        doc["match_mark"] = sorted(a.match_mark)
    doc["transitions"] = [
        [s, sym, a.transitions[s][si]]
        for s in range(a.state_count)
        for si, sym in enumerate(a.alphabet.symbols)
    ]
    return json.dumps(doc, indent=2)


def from_json(text: str) -> Dfa:
    """Parse the JSON produced by to_json, validating the schema."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise MalformedJsonError(f"not valid JSON: {exc}") from None
    if not isinstance(doc, dict):
        raise MalformedJsonError("top-level JSON value must be an object")
    try:
        alphabet = Alphabet(doc["alphabet"])
        n = doc["state_count"]
        start = doc["start"]
        accepting = frozenset(doc["accepting"])
        mark = frozenset(doc["match_mark"]) if "match_mark" in doc else None
        triples = doc["transitions"]
    except (KeyError, TypeError, ValueError, AlphabetTooSmallError) as exc:
        raise MalformedJsonError(f"bad DFA document: {exc}") from None
    if not isinstance(n, int) or n < 1:
        raise MalformedJsonError("state_count must be a positive integer")
    k = len(alphabet)
    table: list[list[int | None]] = [[None] * k for _ in range(n)]
    if not isinstance(triples, list) or len(triples) != n * k:
        raise MalformedJsonError("transitions must list every (state, symbol) pair exactly once")
    for item in triples:
        if not (isinstance(item, list) and len(item) == 3):
            raise MalformedJsonError(f"bad transition entry: {item!r}")
        src, sym, dst = item
        if not (isinstance(src, int) and 0 <= src < n and isinstance(dst, int) and 0 <= dst < n):
            raise MalformedJsonError(f"transition state out of range: {item!r}")
        if sym not in alphabet:
            raise MalformedJsonError(f"transition symbol {sym!r} not in alphabet")
        si = alphabet.index(sym)
        if table[src][si] is not None:
            raise MalformedJsonError(f"duplicate transition for state {src}, symbol {sym!r}")
        table[src][si] = dst
    try:
        return Dfa(
            alphabet,
            tuple(tuple(row) for row in table),  # type: ignore[arg-type]
            start,
            accepting,
            match_mark=mark,
        )
    except (TypeError, ValueError) as exc:
        raise MalformedJsonError(f"bad DFA document: {exc}") from None


def to_dot(a: Dfa) -> str:
    """Graphviz rendering: doublecircle accepting states, edges merged per target."""
    lines = ["digraph dfa {", "  rankdir=LR;", "  __start [shape=point];", f"  __start -> {a.start};"]
    for s in range(a.state_count):
        shape = "doublecircle" if s in a.accepting else "circle"
        lines.append(f"  {s} [shape={shape}];")
    for s in range(a.state_count):
        by_target: dict[int, list[str]] = {}
        for si, sym in enumerate(a.alphabet.symbols):
            by_target.setdefault(a.transitions[s][si], []).append(sym)
        for t in sorted(by_target):
            label = ",".join(by_target[t])
            lines.append(f'  {s} -> {t} [label="{label}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"


def serialize(a: Dfa, fmt: str) -> str:
    """Render the DFA as "dot" or "json" text."""
    if fmt == "dot":
        return to_dot(a)
    if fmt == "json":
        return to_json(a)
    raise ValueError(f"unknown serialization format {fmt!r}")
