"""Interlacing tests: is a pattern a subword of every bordered extension of a word?

``x is interlaced by y`` means y occurs in every x-bordered word.  The general
decision method intersects the bordered-word recognizer with a pattern
avoider and checks emptiness; over binary and three-or-more-letter alphabets
constant-length padding tests give the same answer much faster.  All fast
paths are phrased from the opposite side of the relation ("x in every
y-bordered word"), so callers must keep the orientation straight; the public
dispatcher does.
"""

from __future__ import annotations

import enum
import re
from dataclasses import dataclass
from itertools import product

from .automata import (
    BoolOp,
    Dfa,
    MatcherMode,
    combine,
    complement,
    grafted_bordered_automaton,
    matcher_automaton,
    shortest_accepted,
)
from .errors import (
    AlphabetNotBinaryError,
    AlphabetTooSmallError,
    EmptyPatternError,
    NotInClassAError,
)
from .words import Alphabet, Word


class Method(enum.Enum):
    GENERAL_AUTOMATON = "general-automaton"
    SINGLE_LETTER = "single-letter"
    LENGTH_THREE = "length-three"
    # Reserved for verdicts derived from the class-A regular-set
    # characterization (in_class_a / in_b_x); not picked by the dispatcher.
    CLASS_AB = "class-ab"


@dataclass(frozen=True)
class InterlaceVerdict:
    """Outcome of an interlacing decision.

    When holds is False, witness is a bordered word avoiding the pattern (for
    the queried orientation); its length is always below
    (|pattern|+1) * (2*|border|+3).
    """

    holds: bool
    witness: Word | None
    method: Method


def avoider_automaton(x: Word, y: Word, alphabet: Alphabet) -> Dfa:
    """DFA for the y-bordered words that contain no occurrence of x.

    Product of the 2|y|+3-state bordered-word recognizer with the complement
    of the x-subword matcher, so the full construction never exceeds
    (|x|+1)(2|y|+3) states.
    """
    if not x or not y:
        raise EmptyPatternError("avoider needs nonempty pattern and border")
    bordered = grafted_bordered_automaton(y, alphabet)
    containing = matcher_automaton(x, alphabet, MatcherMode.ABSORBING_SUBWORD)
    return combine(bordered, complement(containing), BoolOp.AND)


def is_interlaced_by(x: Word, y: Word, alphabet: Alphabet) -> InterlaceVerdict:
    """Whether y occurs in every x-bordered word over the alphabet.

    Reference method: emptiness of the automaton for x-bordered words avoiding
    y, with the length-lexicographically smallest counterexample as witness.
    """
    witness = shortest_accepted(avoider_automaton(y, x, alphabet))
    return InterlaceVerdict(holds=witness is None, witness=witness, method=Method.GENERAL_AUTOMATON)


def _first_avoiding_pad(pattern: Word, border: Word, alphabet: Alphabet, pad_length: int):
    """First t (in symbol order) with |t| = pad_length such that border+t+border avoids pattern."""
    for t in product(alphabet.symbols, repeat=pad_length):
        mid = "".join(t)
        if pattern not in border + mid + border:
            return mid
    return None


def fast_single_letter(x: Word, y: Word, alphabet: Alphabet) -> bool:
    """Whether x is a subword of y·t·y for every single symbol t.

    Over an alphabet of three or more symbols this is equivalent to x being a
    subword of every y-bordered word, i.e. to y being interlaced by x.
    """
    if len(alphabet) < 3:
        raise AlphabetTooSmallError("the single-letter test needs at least three symbols")
    if not x or not y:
        raise EmptyPatternError("the single-letter test needs nonempty words")
    alphabet.require(x)
    alphabet.require(y)
    return _first_avoiding_pad(x, y, alphabet, 1) is None


_BINARY = Alphabet("01")


def _require_binary(*ws: Word) -> None:
    for w in ws:
        for ch in w:
            if ch not in ("0", "1"):
                raise AlphabetNotBinaryError(f"{w!r} is not a word over {{0, 1}}")


def fast_length_three(x: Word, y: Word) -> bool:
    """Whether x is a subword of y·t·y for all eight binary words t of length 3.

    Over the binary alphabet this is equivalent to x being a subword of every
    y-bordered word, i.e. to y being interlaced by x.  Three is optimal: no
    shorter padding length works for every binary x, y.
    """
    if not x or not y:
        raise EmptyPatternError("the length-three test needs nonempty words")
    _require_binary(x, y)
    return _first_avoiding_pad(x, y, _BINARY, 3) is None


_CLASS_A = re.compile(r"01+|10+|0+1|1+0")


def in_class_a(x: Word) -> bool:
    """Whether the binary word x has one of the shapes 01^+, 10^+, 0^+1, 1^+0."""
    if not x:
        raise EmptyPatternError("class membership needs a nonempty word")
    _require_binary(x)
    return _CLASS_A.fullmatch(x) is not None


def in_b_x(y: Word, x: Word) -> bool:
    """Whether y avoids x yet x occurs in every y-bordered word, for x of class-A shape.

    Decided by the explicit regular expression for the matching shape of x;
    the 1^k0 and 01^k shapes are the 0<->1 relabelings of the 0^k1 and 10^k
    ones.
    """
    _require_binary(y)
    if not in_class_a(x):
        raise NotInClassAError(f"{x!r} is not of shape 01^+, 10^+, 0^+1 or 1^+0")
    k = len(x) - 1
    if re.fullmatch("0+1", x):
        pat = rf"(?:0{{0,{k - 1}}}1)+0{{{k},}}"
    elif re.fullmatch("10+", x):
        pat = rf"0{{{k},}}(?:10{{0,{k - 1}}})+"
    elif re.fullmatch("1+0", x):
        pat = rf"(?:1{{0,{k - 1}}}0)+1{{{k},}}"
    else:  # 01^+
        pat = rf"1{{{k},}}(?:01{{0,{k - 1}}})+"
    return re.fullmatch(pat, y) is not None


def interlaced(x: Word, y: Word, alphabet: Alphabet, method: str = "auto") -> InterlaceVerdict:
    """Decide whether x is interlaced by y, dispatching to the cheapest sound method.

    auto picks the length-three padding test over two-symbol alphabets, the
    single-letter test over three or more symbols, and the general automaton
    over unary alphabets.  Fast-path counterexamples are the bordered padding
    words x·t·x themselves, not necessarily the shortest witnesses; use
    method="general" for canonical shortest witnesses.
    """
    if method not in ("auto", "general", "fast"):
        raise ValueError(f"unknown method {method!r}")
    if not x or not y:
        raise EmptyPatternError("interlacing needs nonempty words")
    alphabet.require(x)
    alphabet.require(y)
    if method == "general" or (method == "auto" and len(alphabet) == 1):
        return is_interlaced_by(x, y, alphabet)
    if method == "fast" and len(alphabet) == 1:
        raise AlphabetTooSmallError("no constant-length fast path over a unary alphabet")
    if len(alphabet) >= 3:
        pad_length, tag = 1, Method.SINGLE_LETTER
    else:
        pad_length, tag = 3, Method.LENGTH_THREE
    bad = _first_avoiding_pad(y, x, alphabet, pad_length)
    if bad is None:
        return InterlaceVerdict(holds=True, witness=None, method=tag)
    return InterlaceVerdict(holds=False, witness=x + bad + x, method=tag)
