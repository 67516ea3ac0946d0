"""Distinct words and permutations in one-line notation.

A word is a tuple of pairwise-distinct naturals (letters >= 1); positions
are 1-based in every public interface. A permutation of size n is a word
whose letters are exactly 1..n. The empty tuple is the empty word (and the
empty permutation). All values are immutable; every operation returns a
new tuple.

>>> make_word([2, 5, 8])
(2, 5, 8)
>>> inverse(make_permutation([3, 1, 2]))
(2, 3, 1)
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import (
    DuplicateLetter,
    EmptyWord,
    KOutOfRange,
    NotAPermutation,
    ParseError,
)

Word = tuple[int, ...]


@dataclass(frozen=True)
class LeftToRightMaxima:
    """Positions (1-based, increasing) and values of the left-to-right maxima."""

    positions: tuple[int, ...]
    values: tuple[int, ...]


def make_word(letters: Iterable[int]) -> Word:
    """Validate and freeze a sequence of pairwise-distinct naturals."""
    word = tuple(int(x) for x in letters)
    seen: set[int] = set()
    for x in word:
        if x < 1:
            raise ParseError(f"letters must be naturals >= 1, got {x}")
        if x in seen:
            raise DuplicateLetter(x)
        seen.add(x)
    return word


def make_permutation(letters: Iterable[int]) -> Word:
    """Validate that letters are exactly 1..n in some order."""
    word = tuple(int(x) for x in letters)
    if sorted(word) != list(range(1, len(word) + 1)):
        raise NotAPermutation(f"{word} is not a rearrangement of 1..{len(word)}")
    return word


def is_permutation(w: Sequence[int]) -> bool:
    return sorted(w) == list(range(1, len(w) + 1))


def identity(n: int) -> Word:
    return tuple(range(1, n + 1))


def inverse(p: Word) -> Word:
    """The inverse permutation: q with q[p(i)] = i."""
    q = [0] * len(p)
    for i, x in enumerate(p, start=1):
        q[x - 1] = i
    return tuple(q)


def suffix(w: Word, k: int) -> Word:
    """The block of the k rightmost letters of w."""
    if not 0 <= k <= len(w):
        raise KOutOfRange(f"k={k} not in [0, {len(w)}]")
    return w[len(w) - k:]


def restrict_below(w: Word, k: int) -> Word:
    """Subsequence of letters < k, order preserved."""
    return tuple(x for x in w if x < k)


def restrict_above(w: Word, k: int) -> Word:
    """Subsequence of letters > k, order preserved. Complement of restrict_below."""
    return tuple(x for x in w if x > k)


def first_letter(w: Word) -> int:
    if not w:
        raise EmptyWord("the empty word has no first letter")
    return w[0]


def left_to_right_maxima(w: Word) -> LeftToRightMaxima:
    """Positions i with w(i) > w(j) for all j < i, and their values."""
    positions: list[int] = []
    values: list[int] = []
    best = 0
    for i, x in enumerate(w, start=1):
        if x > best:
            positions.append(i)
            values.append(x)
            best = x
    return LeftToRightMaxima(tuple(positions), tuple(values))


def split_at_min(w: Word) -> tuple[Word, int, Word]:
    """Split a nonempty word as (alpha, m, beta) around its minimum letter."""
    if not w:
        raise EmptyWord("cannot split the empty word")
    m = min(w)
    i = w.index(m)
    return w[:i], m, w[i + 1:]


def reverse_subword_on(w: Word, letters: Iterable[int]) -> Word:
    """Reverse, in place, the subword of w made of the given letters.

    Positions holding letters in the set receive those same letters in
    reversed order; every other position is unchanged. An involution for
    every fixed letter set.
    """
    wanted = set(letters)
    idx = [i for i, x in enumerate(w) if x in wanted]
    out = list(w)
    for i, j in zip(idx, reversed(idx)):
        out[i] = w[j]
    return tuple(out)


def complement_subword_on(w: Word, letters: Iterable[int]) -> Word:
    """Replace each letter of the given set by its mirror value within the set.

    The i-th smallest letter of the set becomes the i-th largest, in place;
    letters outside the set are unchanged. An involution for every fixed set.
    """
    ordered = sorted(set(letters))
    mirror = {x: y for x, y in zip(ordered, reversed(ordered))}
    return tuple(mirror.get(x, x) for x in w)


def parse_word(text: str) -> Word:
    """Parse one-line notation: space-separated naturals or a compact digit string.

    Compact form ("312") is accepted only when every letter is a single
    digit 1..9; any whitespace forces the space-separated reading. The
    empty string is the empty word.
    """
    text = text.strip()
    if not text:
        return ()
    if any(c.isspace() for c in text):
        try:
            letters = [int(tok) for tok in text.split()]
        except ValueError as exc:
            raise ParseError(f"cannot parse {text!r} as a word") from exc
    else:
        if not text.isdigit():
            raise ParseError(f"cannot parse {text!r} as a word")
        letters = [int(c) for c in text]
        if 0 in letters:
            raise ParseError(f"compact form {text!r} contains the digit 0")
    return make_word(letters)


def parse_permutation(text: str) -> Word:
    word = parse_word(text)
    if not is_permutation(word):
        raise NotAPermutation(f"{word} is not a permutation of 1..{len(word)}")
    return word


def format_word(w: Word) -> str:
    """Serialize mirroring the input forms: compact when all letters fit one digit."""
    if not w:
        return ""
    if max(w) <= 9:
        return "".join(str(x) for x in w)
    return " ".join(str(x) for x in w)
