"""Shared test utilities: exhaustive word tables and vectorized DFA sweeps.

The exhaustive properties compare automata against brute-force oracles over
every word up to a length bound.  Words of a fixed length are represented as
their index in lexicographic order, so a whole level can be processed with a
few numpy gathers instead of a Python loop per word.
"""

from itertools import product

import numpy as np

from occlang import Alphabet, Dfa

BIN = Alphabet("01")
TERN = Alphabet("012")
UNARY = Alphabet("a")


def words_upto(alphabet, max_length, min_length=0):
    """All words of length min_length..max_length in length-lexicographic order."""
    for length in range(min_length, max_length + 1):
        for tup in product(alphabet.symbols, repeat=length):
            yield "".join(tup)


def nonempty_words_upto(alphabet, max_length):
    return words_upto(alphabet, max_length, min_length=1)


def scan_count(w, p):
    """Position-scan occurrence count, independent of the library's find loop."""
    return sum(1 for i in range(len(w) - len(p) + 1) if w[i : i + len(p)] == p)


def level_states(dfa: Dfa, max_length: int):
    """Per length L, the DFA state reached by each word of length L (lex order)."""
    k = len(dfa.alphabet)
    trans = np.array(dfa.transitions, dtype=np.int64)
    levels = [np.array([dfa.start], dtype=np.int64)]
    for _ in range(max_length):
        prev = levels[-1]
        expanded = np.repeat(prev, k)
        symbols = np.tile(np.arange(k, dtype=np.int64), len(prev))
        levels.append(trans[expanded, symbols])
    return levels


def level_acceptance(dfa: Dfa, max_length: int):
    """Per length L, a boolean array of acceptance for each word (lex order)."""
    lut = np.zeros(dfa.state_count, dtype=bool)
    for s in dfa.accepting:
        lut[s] = True
    return [lut[states] for states in level_states(dfa, max_length)]


def level_mark_counts(matcher: Dfa, max_length: int):
    """Per length L, the number of match-mark visits for each word (lex order)."""
    k = len(matcher.alphabet)
    trans = np.array(matcher.transitions, dtype=np.int64)
    marks = np.zeros(matcher.state_count, dtype=np.int64)
    for s in matcher.match_mark or ():
        marks[s] = 1
    states = np.array([matcher.start], dtype=np.int64)
    counts = np.array([0], dtype=np.int64)
    out = [counts]
    for _ in range(max_length):
        expanded = np.repeat(states, k)
        symbols = np.tile(np.arange(k, dtype=np.int64), len(states))
        states = trans[expanded, symbols]
        counts = np.repeat(counts, k) + marks[states]
        out.append(counts)
    return out


def word_from_index(alphabet, length, index):
    """The word of the given length whose lexicographic rank is index."""
    k = len(alphabet)
    out = []
    for _ in range(length):
        index, digit = divmod(index, k)
        out.append(alphabet.symbols[digit])
    # divmod peels least-significant first, which is the last position
    return "".join(reversed(out))
