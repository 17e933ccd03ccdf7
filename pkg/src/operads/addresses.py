"""Tree addresses and nominal arities.

An address is a finite word of positive integers locating a vertex in a
rooted tree; the empty word ``e`` is the root.  A nominal arity is a finite
prefix-free set of addresses naming the argument places of an operation.
Addresses are plain tuples of ints, arities plain frozensets of tuples.

Text syntax: digit groups joined by ``-`` (``1-2-11``), ``e`` for the empty
word; arities print as ``{w1,w2,...}`` in canonical (length, digitwise)
order.
"""

from __future__ import annotations

import re
from typing import Iterable

from .errors import IllegitimateInsertion, NotAPrefix, OutOfDomain

NWord = tuple[int, ...]
Arity = frozenset

EMPTY: NWord = ()

# verdicts of lex_compare
LT = -1
INCOMPARABLE_OR_EQUAL = 0
GT = 1

_WORD_RE = re.compile(r"^[1-9][0-9]*(-[1-9][0-9]*)*$")


def nword(digits: Iterable[int]) -> NWord:
    """Validate and freeze a sequence of digits into an address."""
    w = tuple(digits)
    if not all(isinstance(d, int) and d >= 1 for d in w):
        raise ValueError(f"address digits must be integers >= 1: {w!r}")
    return w


def word_from_str(text: str) -> NWord:
    text = text.strip()
    if text == "e":
        return EMPTY
    if not _WORD_RE.match(text):
        raise ValueError(f"bad address syntax: {text!r}")
    return tuple(int(part) for part in text.split("-"))


def word_str(w: NWord) -> str:
    return "-".join(str(d) for d in w) if w else "e"


def is_prefix(a: NWord, c: NWord) -> bool:
    """True when a is an initial segment (not necessarily proper) of c."""
    return len(a) <= len(c) and c[: len(a)] == a


def strip(a: NWord, c: NWord) -> NWord:
    """The b with a+b == c; the empty word strips to c itself."""
    if not is_prefix(a, c):
        raise NotAPrefix(f"{word_str(a)} is not an initial segment of {word_str(c)}")
    return c[len(a):]


def lex_compare(a1: NWord, a2: NWord) -> int:
    """Three-valued lexicographic verdict.

    LT/GT when the words diverge at some digit; INCOMPARABLE_OR_EQUAL when
    they are equal or one is a prefix of the other (the strict order is
    defined only for diverging words).
    """
    for d1, d2 in zip(a1, a2):
        if d1 < d2:
            return LT
        if d1 > d2:
            return GT
    return INCOMPARABLE_OR_EQUAL


def lex_lt(a1: NWord, a2: NWord) -> bool:
    return lex_compare(a1, a2) == LT


def is_nominal_arity(words: Iterable[NWord]) -> bool:
    """True iff no member is a proper initial segment of another."""
    ws = sorted(set(words))
    # after sorting, a proper prefix immediately precedes some extension
    for prev, cur in zip(ws, ws[1:]):
        if is_prefix(prev, cur):
            return False
    return True


def nominal_arity(words: Iterable[NWord]) -> Arity:
    ws = frozenset(words)
    if not is_nominal_arity(ws):
        raise ValueError(f"not prefix-free: {arity_str(ws)}")
    return ws


def nbar(n: int) -> Arity:
    """The arity {1,...,n} of single-digit names; 0 gives the empty arity."""
    if n < 0:
        raise ValueError("arity must be >= 0")
    return frozenset((i,) for i in range(1, n + 1))


def is_prefix_of_arity(a: NWord, x: Arity) -> bool:
    """True iff every member of x extends a (vacuously true on empty x).

    The set of all prefixes of x is never materialized: for the empty
    arity it would contain every word.
    """
    return all(is_prefix(a, c) for c in x)


def scale(a: NWord, x: Arity) -> Arity:
    return frozenset(a + b for b in x)


def arity_insert(y: Arity, a: NWord, x: Arity) -> Arity:
    """(y - {a}) | x, defined when a is in y and a prefixes every member of x."""
    if a not in y:
        raise IllegitimateInsertion(
            f"{word_str(a)} is not a member of {arity_str(y)}")
    if not is_prefix_of_arity(a, x):
        raise IllegitimateInsertion(
            f"{word_str(a)} is not a prefix of {arity_str(x)}")
    return (y - {a}) | x


def canonical_order(x: Arity) -> list[NWord]:
    """Serialization order: by length, then digitwise.

    Total on arbitrary word sets (the strict lexicographic order is not
    defined on prefix-related pairs); used for printing only.  The rank
    bijections below use the lexicographic order itself.
    """
    return sorted(x, key=lambda w: (len(w), w))


def arity_str(x: Arity) -> str:
    return "{" + ",".join(word_str(w) for w in canonical_order(x)) + "}"


def arity_from_str(text: str) -> Arity:
    text = text.strip()
    if not (text.startswith("{") and text.endswith("}")):
        raise ValueError(f"bad arity syntax: {text!r}")
    body = text[1:-1].strip()
    if not body:
        return frozenset()
    return nominal_arity(word_from_str(p) for p in body.split(","))


def _lex_sorted(x: Arity) -> list[NWord]:
    # On a prefix-free set plain tuple order coincides with the
    # lexicographic order on diverging words.
    return sorted(x)


def k_index(x: Arity, a: NWord) -> int:
    """Rank of a within x: number of lexicographic predecessors plus one."""
    if a not in x:
        raise OutOfDomain(f"{word_str(a)} is not a member of {arity_str(x)}")
    return _lex_sorted(x).index(a) + 1


def k_inverse(x: Arity, n: int) -> NWord:
    """The member of x with rank n; inverse to k_index."""
    if not 1 <= n <= len(x):
        raise OutOfDomain(f"rank {n} out of range 1..{len(x)}")
    return _lex_sorted(x)[n - 1]
