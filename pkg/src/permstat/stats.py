"""Statistics on distinct words and permutations.

Order-based statistics (des, inv, maj, ai, aid, lec, pix, aix, ini) accept
any word of distinct letters; exc, fix, imaj, ides, mix, das and the
Rawlings family compare letters against positions or need the inverse, so
they demand a genuine permutation of 1..n.
"""
from __future__ import annotations

from dataclasses import dataclass

from .core import (
    Word,
    first_letter,
    inverse,
    is_permutation,
    left_to_right_maxima,
    split_at_min,
)
from .errors import InvalidR, UnknownStatistic, WordNotPermutation


@dataclass(frozen=True)
class HookFactorization:
    """w = pi0 . hooks[0] . ... . hooks[-1] with pi0 nondecreasing.

    A hook h has length >= 2 and h(1) > h(2) <= h(3) <= ... <= h(r).
    """

    pi0: Word
    hooks: tuple[Word, ...]

    def concatenation(self) -> Word:
        out = self.pi0
        for h in self.hooks:
            out = out + h
        return out


# -- classic statistics ------------------------------------------------------

def des_set(w: Word) -> set[int]:
    """Positions i (1-based) with w(i) > w(i+1)."""
    return {i for i in range(1, len(w)) if w[i - 1] > w[i]}


def des(w: Word) -> int:
    return len(des_set(w))


def maj(w: Word) -> int:
    """Sum of descent positions."""
    return sum(des_set(w))


def inv_set(w: Word) -> set[tuple[int, int]]:
    """Pairs of positions (i, j), i < j, with w(i) > w(j)."""
    n = len(w)
    return {
        (i, j)
        for i in range(1, n + 1)
        for j in range(i + 1, n + 1)
        if w[i - 1] > w[j - 1]
    }


def inv(w: Word) -> int:
    return len(inv_set(w))


def ini(w: Word) -> int:
    """The first letter of a nonempty word."""
    return first_letter(w)


def _require_permutation(w: Word, name: str) -> None:
    if not is_permutation(w):
        raise WordNotPermutation(name)


def exc_set(p: Word) -> set[int]:
    """Positions i with p(i) > i. Permutations only."""
    _require_permutation(p, "exc")
    return {i for i, x in enumerate(p, start=1) if x > i}


def exc(p: Word) -> int:
    return len(exc_set(p))


def fix(p: Word) -> int:
    """Number of fixed points. Permutations only."""
    _require_permutation(p, "fix")
    return sum(1 for i, x in enumerate(p, start=1) if x == i)


def imaj(p: Word) -> int:
    _require_permutation(p, "imaj")
    return maj(inverse(p))


def ides(p: Word) -> int:
    _require_permutation(p, "ides")
    return des(inverse(p))


# -- admissible inversions ---------------------------------------------------

def admissible_inversions(w: Word) -> set[tuple[int, int]]:
    """Inversions (i, j) with w(j) < w(j+1), or w(j) > w(k) for some i < k < j.

    At the right boundary (j = |w|) the first clause is false: there is no
    letter beyond the end.
    """
    n = len(w)
    out: set[tuple[int, int]] = set()
    for i, j in inv_set(w):
        if j < n and w[j - 1] < w[j]:
            out.add((i, j))
        elif any(w[j - 1] > w[k - 1] for k in range(i + 1, j)):
            out.add((i, j))
    return out


def ai(w: Word) -> int:
    return len(admissible_inversions(w))


def aid(w: Word) -> int:
    """ai + des."""
    return ai(w) + des(w)


# -- hook factorization ------------------------------------------------------

def is_hook(w: Word) -> bool:
    return (
        len(w) >= 2
        and w[0] > w[1]
        and all(w[i] <= w[i + 1] for i in range(1, len(w) - 1))
    )


def hook_factorization(w: Word) -> HookFactorization:
    """Peel the rightmost hook (starting at the rightmost descent) until none remains."""
    rest = w
    hooks: list[Word] = []
    while True:
        d = 0
        for i in range(1, len(rest)):
            if rest[i - 1] > rest[i]:
                d = i
        if d == 0:
            return HookFactorization(rest, tuple(reversed(hooks)))
        hooks.append(rest[d - 1:])
        rest = rest[: d - 1]


def lec(w: Word) -> int:
    """Sum of inversion counts over the hooks of the hook factorization."""
    return sum(inv(h) for h in hook_factorization(w).hooks)


def pix(w: Word) -> int:
    """Length of the nondecreasing prefix of the hook factorization."""
    return len(hook_factorization(w).pi0)


def aix(w: Word) -> int:
    """Recursive split at the minimum letter m, w = alpha m beta.

    aix() = 0; aix(alpha m beta) = aix(alpha) when both parts are nonempty,
    1 + aix(beta) when alpha is empty, 0 when beta is empty. For a single
    letter the alpha-empty clause wins, giving 1.
    """
    total = 0
    while w:
        alpha, _, beta = split_at_min(w)
        if alpha and beta:
            w = alpha
        elif not alpha:
            total += 1
            w = beta
        else:
            break  # beta empty: this subproblem contributes 0
    return total


# -- mesh-pattern-flavored statistics ----------------------------------------

def mix(p: Word) -> int:
    """Inversions topped by a left-to-right maximum, plus non-inversions
    (i, j) dominated by some earlier letter p(k) > p(j), k < i.
    """
    _require_permutation(p, "mix")
    n = len(p)
    prefix_max = [0] * (n + 1)  # prefix_max[i] = max of p(1..i)
    for i in range(1, n + 1):
        prefix_max[i] = max(prefix_max[i - 1], p[i - 1])
    count = 0
    for i in range(1, n + 1):
        lr_max = p[i - 1] > prefix_max[i - 1]
        for j in range(i + 1, n + 1):
            if p[i - 1] > p[j - 1]:
                if lr_max:
                    count += 1
            elif prefix_max[i - 1] > p[j - 1]:
                count += 1
    return count


def das(p: Word) -> int:
    """Positions i where a descent is topped by a left-to-right maximum, or
    an ascent's right letter is dominated by some earlier letter.
    """
    _require_permutation(p, "das")
    n = len(p)
    count = 0
    best = 0
    for i in range(1, n):
        if p[i - 1] > p[i]:
            if p[i - 1] > best:
                count += 1
        elif best > p[i]:
            count += 1
        best = max(best, p[i - 1])
    return count


# -- Rawlings major index -----------------------------------------------------

def des_set_r(p: Word, r: int) -> set[int]:
    """Descents i with p(i) - p(i+1) >= r."""
    if r < 1:
        raise InvalidR("r must be >= 1")
    return {i for i in des_set(p) if p[i - 1] - p[i] >= r}


def inv_set_r(p: Word, r: int) -> set[tuple[int, int]]:
    """Inversions (i, j) with p(i) - p(j) < r."""
    if r < 1:
        raise InvalidR("r must be >= 1")
    return {(i, j) for (i, j) in inv_set(p) if p[i - 1] - p[j - 1] < r}


def rawlings(p: Word, r: int) -> int:
    """r-thresholded major index: r=1 gives maj, r=n gives inv."""
    _require_permutation(p, f"rmaj:{r}")
    return sum(des_set_r(p, r)) + len(inv_set_r(p, r))


# -- registry -----------------------------------------------------------------

# name -> (function, permutation_only)
REGISTRY = {
    "des": (des, False),
    "exc": (exc, True),
    "inv": (inv, False),
    "maj": (maj, False),
    "fix": (fix, True),
    "imaj": (imaj, True),
    "ides": (ides, True),
    "ini": (ini, False),
    "ai": (ai, False),
    "aid": (aid, False),
    "lec": (lec, False),
    "pix": (pix, False),
    "aix": (aix, False),
    "mix": (mix, True),
    "das": (das, True),
}


def resolve_statistic(name: str):
    """Return (function, permutation_only) for a registry name.

    Names are the fixed lowercase strings of REGISTRY plus the parameterized
    family "rmaj:r" (e.g. "rmaj:2").
    """
    if name in REGISTRY:
        return REGISTRY[name]
    if name.startswith("rmaj:"):
        try:
            r = int(name.split(":", 1)[1])
        except ValueError:
            raise UnknownStatistic(name) from None
        if r < 1:
            raise InvalidR("r must be >= 1")
        return (lambda p, r=r: rawlings(p, r)), True
    raise UnknownStatistic(name)


def stat_vector(w: Word, names: list[str] | tuple[str, ...]) -> tuple[tuple[str, int], ...]:
    """Evaluate named statistics in the requested order."""
    out = []
    for name in names:
        func, perm_only = resolve_statistic(name)
        if perm_only and not is_permutation(w):
            raise WordNotPermutation(name)
        out.append((name, func(w)))
    return tuple(out)
