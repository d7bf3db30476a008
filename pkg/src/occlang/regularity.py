"""Regularity of the languages comparing occurrence counts of two patterns.

For patterns x, y over an alphabet, the language of words z with
|z|_x rel |z|_y (rel one of <, <=, =, >, >=, !=) is regular exactly when x is
interlaced by y or y is interlaced by x.  In the regular case a minimal DFA is
synthesized from the two pattern matchers and a saturating difference
tracker; otherwise a machine-checkable certificate is produced that pins the
occurrence arithmetic a pumping argument consumes.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .automata import (
    Dfa,
    MatcherMode,
    complement,
    matcher_automaton,
    minimize,
    shortest_accepted,
)
from .errors import (
    CertificateError,
    CriterionHoldsError,
    EmptyPatternError,
    NotRegularError,
)
from .interlace import avoider_automaton, is_interlaced_by
from .words import (
    Alphabet,
    BorderDecomposition,
    PowerCountParams,
    Word,
    commutes,
    count_occurrences,
    decompose_bordered,
    power_count_params,
    segment,
)


class Relation(enum.Enum):
    LT = "lt"
    LE = "le"
    EQ = "eq"
    GT = "gt"
    GE = "ge"
    NE = "ne"

    def holds(self, a: int, b: int) -> bool:
        return _HOLDS[self](a, b)

    def complemented(self) -> "Relation":
        """The relation on the complement language (GT, GE, NE complement LE, LT, EQ)."""
        return _COMPLEMENT[self]

    def mirrored(self) -> "Relation":
        """The relation with both sides swapped: a rel b iff b mirrored(rel) a."""
        return _MIRROR[self]


_HOLDS = {
    Relation.LT: lambda a, b: a < b,
    Relation.LE: lambda a, b: a <= b,
    Relation.EQ: lambda a, b: a == b,
    Relation.GT: lambda a, b: a > b,
    Relation.GE: lambda a, b: a >= b,
    Relation.NE: lambda a, b: a != b,
}
_COMPLEMENT = {
    Relation.LT: Relation.GE,
    Relation.GE: Relation.LT,
    Relation.LE: Relation.GT,
    Relation.GT: Relation.LE,
    Relation.EQ: Relation.NE,
    Relation.NE: Relation.EQ,
}
_MIRROR = {
    Relation.LT: Relation.GT,
    Relation.GT: Relation.LT,
    Relation.LE: Relation.GE,
    Relation.GE: Relation.LE,
    Relation.EQ: Relation.EQ,
    Relation.NE: Relation.NE,
}


class Direction(enum.Enum):
    X_INTERLACED_BY_Y = "x-interlaced-by-y"
    Y_INTERLACED_BY_X = "y-interlaced-by-x"
    BOTH = "both"


@dataclass(frozen=True)
class NonRegularityCertificate:
    """Witness data from which non-regularity follows by pumping.

    r is a y-bordered word avoiding x, s an x-bordered word avoiding y, both
    length-lexicographically smallest.  Their decompositions give
    y = (uv)^e u, r = (uv)^{e+1} u and x = (pq)^f p, s = (pq)^{f+1} p.  The
    counts satisfy, for all i > e and j > f,

        |(uv)^i (pq)^j|_x = (j-f) d' + c' - d' + m
        |(uv)^i (pq)^j|_y = (i-e) d  + c  - d  + n

    where m, n count the occurrences straddling the block boundary, and uv
    and pq do not commute.
    """

    r: Word
    s: Word
    dec_r: BorderDecomposition
    dec_s: BorderDecomposition
    c: int
    d: int
    c_prime: int
    d_prime: int
    m: int
    n: int

    def to_json_dict(self) -> dict:
        return {
            "r": self.r,
            "s": self.s,
            "dec_r": {"u": self.dec_r.u, "v": self.dec_r.v, "e": self.dec_r.e},
            "dec_s": {"u": self.dec_s.u, "v": self.dec_s.v, "e": self.dec_s.e},
            "c": self.c,
            "d": self.d,
            "c_prime": self.c_prime,
            "d_prime": self.d_prime,
            "m": self.m,
            "n": self.n,
        }


@dataclass(frozen=True)
class RegularityOutcome:
    regular: bool
    direction: Direction | None
    certificate: NonRegularityCertificate | None


def straddle_count(left: Word, right: Word, pattern: Word) -> int:
    """Occurrences of pattern in left+right that start in left and reach into right.

    Counts the start positions k (1-based) with |left|+2-|pattern| <= k <= |left|
    at which pattern occurs in the concatenation; occurrences lying entirely
    inside either block are excluded, so the count composes with per-block
    occurrence counts without double counting.
    """
    if not pattern:
        raise EmptyPatternError("straddle counting needs a nonempty pattern")
    w = left + right
    lo = max(1, len(left) + 2 - len(pattern))
    hi = min(len(left), len(w) - len(pattern) + 1)
    return sum(1 for k in range(lo, hi + 1) if segment(w, k, k + len(pattern) - 1) == pattern)


def decide_regularity(x: Word, y: Word, alphabet: Alphabet) -> RegularityOutcome:
    """Whether the comparison languages for x, y over the alphabet are regular.

    The criterion is the same for every comparison relation: regular iff x is
    interlaced by y or y is interlaced by x.
    """
    if not x or not y:
        raise EmptyPatternError("regularity needs nonempty patterns")
    alphabet.require(x)
    alphabet.require(y)
    x_by_y = is_interlaced_by(x, y, alphabet)
    y_by_x = is_interlaced_by(y, x, alphabet)
    if x_by_y.holds and y_by_x.holds:
        return RegularityOutcome(True, Direction.BOTH, None)
    if x_by_y.holds:
        return RegularityOutcome(True, Direction.X_INTERLACED_BY_Y, None)
    if y_by_x.holds:
        return RegularityOutcome(True, Direction.Y_INTERLACED_BY_X, None)
    return RegularityOutcome(False, None, non_regularity_certificate(x, y, alphabet))


def non_regularity_certificate(x: Word, y: Word, alphabet: Alphabet) -> NonRegularityCertificate:
    """Build and verify the certificate for a pair where neither interlacing holds."""
    if not x or not y:
        raise EmptyPatternError("certificates need nonempty patterns")
    r = shortest_accepted(avoider_automaton(x, y, alphabet))
    s = shortest_accepted(avoider_automaton(y, x, alphabet))
    if r is None or s is None:
        raise CriterionHoldsError(
            "an interlacing direction holds, so the comparison languages are regular"
        )
    dec_r = decompose_bordered(r, y)
    dec_s = decompose_bordered(s, x)
    cd = power_count_params(dec_r, y)
    cd_prime = power_count_params(dec_s, x)
    left = dec_r.period_word() * (dec_r.e + 1)
    right = dec_s.period_word() * (dec_s.e + 1)
    cert = NonRegularityCertificate(
        r=r,
        s=s,
        dec_r=dec_r,
        dec_s=dec_s,
        c=cd.c,
        d=cd.d,
        c_prime=cd_prime.c,
        d_prime=cd_prime.d,
        m=straddle_count(left, right, x),
        n=straddle_count(left, right, y),
    )
    _verify_certificate(cert, x, y)
    return cert


def _verify_certificate(cert: NonRegularityCertificate, x: Word, y: Word) -> None:
    problems = []
    if not (cert.r != y and cert.r.startswith(y) and cert.r.endswith(y)):
        problems.append("r is not y-bordered")
    if not (cert.s != x and cert.s.startswith(x) and cert.s.endswith(x)):
        problems.append("s is not x-bordered")
    if count_occurrences(cert.r, x):
        problems.append("r contains x")
    if count_occurrences(cert.s, y):
        problems.append("s contains y")
    uv = cert.dec_r.period_word()
    pq = cert.dec_s.period_word()
    if commutes(uv, pq):
        problems.append("uv and pq commute")
    e, f = cert.dec_r.e, cert.dec_s.e
    for i in range(e + 1, e + 4):
        if count_occurrences(uv * i + cert.dec_r.u, x):
            problems.append(f"x occurs in (uv)^{i} u")
    for j in range(f + 1, f + 4):
        if count_occurrences(pq * j + cert.dec_s.u, y):
            problems.append(f"y occurs in (pq)^{j} p")
    for i in range(e + 1, e + 4):
        for j in range(f + 1, f + 4):
            z = uv * i + pq * j
            if count_occurrences(z, x) != (j - f) * cert.d_prime + cert.c_prime - cert.d_prime + cert.m:
                problems.append(f"x-count formula fails at i={i}, j={j}")
            if count_occurrences(z, y) != (i - e) * cert.d + cert.c - cert.d + cert.n:
                problems.append(f"y-count formula fails at i={i}, j={j}")
    if problems:
        raise CertificateError("invalid certificate: " + "; ".join(problems))


_STICKY = -2


def _tracker_dfa(x: Word, y: Word, alphabet: Alphabet, rel: Relation) -> Dfa:
    """Product of the two counting matchers with a saturating difference tracker.

    Assumes x is interlaced by y, which caps |z|_x - |z|_y at +1 and makes
    every difference of -2 or below permanent; the tracker therefore only
    needs the values +1, 0, -1 and a sticky "forever below" state.
    """
    mx = matcher_automaton(x, alphabet, MatcherMode.COUNTING)
    my = matcher_automaton(y, alphabet, MatcherMode.COUNTING)
    tx, ty = mx.transitions, my.transitions
    hit_x, hit_y = len(x), len(y)
    k = len(alphabet)
    states: list[tuple[int, int, int]] = [(0, 0, 0)]
    index = {(0, 0, 0): 0}
    rows: list[tuple[int, ...]] = []
    qi = 0
    while qi < len(states):
        sx, sy, diff = states[qi]
        qi += 1
        row = []
        for si in range(k):
            nx, ny = tx[sx][si], ty[sy][si]
            if diff == _STICKY:
                nd = _STICKY
            else:
                nd = diff + (1 if nx == hit_x else 0) - (1 if ny == hit_y else 0)
                if nd > 1:
                    raise CriterionHoldsError(
                        "difference tracker overflow: x is not interlaced by y"
                    )
                if nd < -1:
                    nd = _STICKY
            key = (nx, ny, nd)
            t = index.get(key)
            if t is None:
                t = len(states)
                index[key] = t
                states.append(key)
            row.append(t)
        rows.append(tuple(row))
    if rel is Relation.EQ:
        acc = frozenset(i for i, (_, _, d) in enumerate(states) if d == 0)
    elif rel is Relation.LT:
        acc = frozenset(i for i, (_, _, d) in enumerate(states) if d < 0)
    elif rel is Relation.LE:
        acc = frozenset(i for i, (_, _, d) in enumerate(states) if d <= 0)
    else:
        raise ValueError(f"tracker handles LT, LE, EQ directly, not {rel}")
    return Dfa(alphabet, tuple(rows), 0, acc)


def _build_primary(x: Word, y: Word, alphabet: Alphabet, rel: Relation) -> Dfa:
    # assumes x interlaced by y
    if rel in (Relation.GT, Relation.GE, Relation.NE):
        return complement(_build_primary(x, y, alphabet, rel.complemented()))
    return minimize(_tracker_dfa(x, y, alphabet, rel))


def build_comparison_dfa(x: Word, y: Word, alphabet: Alphabet, rel: Relation) -> Dfa:
    """Minimal DFA for { z : |z|_x rel |z|_y }, for a regular instance.

    When only y is interlaced by x the construction runs with the roles
    swapped and the relation mirrored; GT, GE and NE are complements of LE,
    LT and EQ.  Raises NotRegularError carrying the certificate otherwise.
    """
    outcome = decide_regularity(x, y, alphabet)
    if not outcome.regular:
        raise NotRegularError(
            f"the comparison languages for {x!r} and {y!r} are not regular",
            certificate=outcome.certificate,
        )
    if outcome.direction is Direction.Y_INTERLACED_BY_X:
        return _build_primary(y, x, alphabet, rel.mirrored())
    return _build_primary(x, y, alphabet, rel)
