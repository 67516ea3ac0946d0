"""Exhaustive enumeration, joint distributions, and the verification suites.

Every theorem of the library is checked here by brute force at desk scale:
permutation claims over S_n for n up to a cap (default 8 in the suites,
hard cap 10 unless PERMSTAT_NMAX raises it), word-level lemmas over all
distinct words of bounded length on a small alphabet.
"""
from __future__ import annotations

import itertools
import os
from dataclasses import dataclass, field
from typing import Callable, Iterable, Iterator

from . import bijections, stats
from .core import Word, identity, left_to_right_maxima, restrict_below
from .errors import ArityMismatch, SizeCapExceeded

DEFAULT_CAP = 10

#: bounded domain for the word-level lemma suites
LEMMA_ALPHABET = range(1, 8)
LEMMA_MAX_LEN = 5
LEMMA_MAX_K = 8


def size_cap() -> int:
    raw = os.environ.get("PERMSTAT_NMAX")
    if raw is None:
        return DEFAULT_CAP
    return int(raw)


@dataclass(frozen=True)
class Source:
    """A finite set of permutations: all of S_n, a pattern class, or an
    explicit list."""

    kind: str  # "all" | "avoiding" | "explicit"
    n: int = 0
    pattern: str | None = None
    perms: tuple[Word, ...] = ()

    @classmethod
    def all(cls, n: int) -> "Source":
        return cls("all", n=n)

    @classmethod
    def avoiding(cls, n: int, pattern) -> "Source":
        return cls("avoiding", n=n, pattern=str(pattern))

    @classmethod
    def explicit(cls, perms: Iterable[Word]) -> "Source":
        return cls("explicit", perms=tuple(perms))


def all_permutations(n: int) -> Iterator[Word]:
    """All of S_n in lexicographic order. Deterministic; partitionable by
    first letter."""
    if n > size_cap():
        raise SizeCapExceeded(f"n={n} exceeds the cap {size_cap()}")
    return iter(itertools.permutations(range(1, n + 1)))


def enumerate_source(src: Source) -> Iterator[Word]:
    if src.kind == "all":
        return all_permutations(src.n)
    if src.kind == "avoiding":
        return (p for p in all_permutations(src.n) if bijections.avoids(p, src.pattern))
    return iter(src.perms)


@dataclass
class JointDistribution:
    """Counts of value tuples of a statistic vector over a permutation set."""

    stat_names: tuple[str, ...]
    counts: dict[tuple[int, ...], int] = field(default_factory=dict)
    total: int = 0

    def add(self, value: tuple[int, ...], count: int = 1) -> None:
        self.counts[value] = self.counts.get(value, 0) + count
        self.total += count


def _values(p: Word, names: tuple[str, ...]) -> tuple[int, ...]:
    return tuple(v for _, v in stats.stat_vector(p, names))


def joint_distribution(src: Source | Iterable[Word], names) -> JointDistribution:
    names = tuple(names)
    perms = enumerate_source(src) if isinstance(src, Source) else src
    dist = JointDistribution(names)
    for p in perms:
        dist.add(_values(p, names))
    return dist


def joint_distribution_partitioned(src: Source, names) -> JointDistribution:
    """Same result as joint_distribution, computed as a merge of per-first-letter
    partial count maps. The merge is key-wise addition, so any merge order works.
    """
    names = tuple(names)
    partials: dict[int, JointDistribution] = {}
    for p in enumerate_source(src):
        key = p[0] if p else 0
        part = partials.setdefault(key, JointDistribution(names))
        part.add(_values(p, names))
    merged = JointDistribution(names)
    for key in sorted(partials):
        for value, count in partials[key].counts.items():
            merged.add(value, count)
    return merged


def distributions_equal(
    a: JointDistribution, b: JointDistribution
) -> tuple[bool, tuple | None]:
    """Compare count maps; on divergence return the lexicographically smallest
    differing value tuple with both counts."""
    if len(a.stat_names) != len(b.stat_names):
        raise ArityMismatch(
            f"arity {len(a.stat_names)} vs {len(b.stat_names)}"
        )
    if a.counts == b.counts:
        return True, None
    for value in sorted(set(a.counts) | set(b.counts)):
        ca = a.counts.get(value, 0)
        cb = b.counts.get(value, 0)
        if ca != cb:
            return False, (value, ca, cb)
    return True, None


# -- verification suites -------------------------------------------------------

SUITES = ("classic", "theorem1", "lemmas-f", "lemmas-g", "psi", "rawlings", "kratt")


@dataclass
class ClaimResult:
    claim: str
    status: str  # "pass" | "fail"
    n_range: str
    witness: object = None

    @property
    def passed(self) -> bool:
        return self.status == "pass"


def _claim(claim: str, n_range: str, witness) -> ClaimResult:
    return ClaimResult(claim, "fail" if witness is not None else "pass", n_range, witness)


def _pointwise(claim, n_max, check) -> ClaimResult:
    """check(p) returns None on success or a witness payload; the witness kept
    is the one for the lexicographically smallest failing permutation."""
    witness = None
    for n in range(n_max + 1):
        for p in all_permutations(n):
            bad = check(p)
            if bad is not None:
                witness = bad
                break
        if witness is not None:
            break
    return _claim(claim, f"n<={n_max}", witness)


def _dist_pair(claim, n_max, names_a, names_b) -> ClaimResult:
    witness = None
    for n in range(n_max + 1):
        da = joint_distribution(Source.all(n), names_a)
        db = joint_distribution(Source.all(n), names_b)
        equal, diff = distributions_equal(da, db)
        if not equal:
            witness = {"n": n, "value": diff[0], "counts": [diff[1], diff[2]]}
            break
    return _claim(claim, f"n<={n_max}", witness)


def _suite_classic(n_max: int) -> list[ClaimResult]:
    out = []
    for name in ("exc", "lec", "das"):
        out.append(_dist_pair(f"eulerian des~{name}", n_max, ["des"], [name]))
    for name in ("maj", "aid", "mix"):
        out.append(_dist_pair(f"mahonian inv~{name}", n_max, ["inv"], [name]))
    witness = None
    for n in range(1, n_max + 1):
        base = joint_distribution(Source.all(n), ["inv"])
        for r in range(1, n + 1):
            other = joint_distribution(Source.all(n), [f"rmaj:{r}"])
            equal, diff = distributions_equal(base, other)
            if not equal:
                witness = {"n": n, "r": r, "value": diff[0], "counts": [diff[1], diff[2]]}
                break
        if witness is not None:
            break
    out.append(_claim("mahonian inv~rmaj:r (all r)", f"n<={n_max}", witness))
    return out


_THEOREM1_LHS = ("ini", "aix", "des", "aid")
_THEOREM1_RHS = ("ini", "pix", "lec", "inv")


def _theorem1_check(p: Word):
    if not p:
        return None
    left = _values(bijections.phi(p), _THEOREM1_LHS)
    right = _values(p, _THEOREM1_RHS)
    if left != right:
        return {"perm": p, "lhs": left, "rhs": right}
    return None


def _suite_theorem1(n_max: int) -> list[ClaimResult]:
    out = [
        _pointwise("theorem1 (ini,aix,des,aid) phi = (ini,pix,lec,inv)", n_max, _theorem1_check),
        _pointwise(
            "lemma1 ini phi = ini",
            n_max,
            lambda p: None if not p or stats.ini(bijections.phi(p)) == stats.ini(p) else {"perm": p},
        ),
        _pointwise(
            "lemma3 aid phi = inv",
            n_max,
            lambda p: None if stats.aid(bijections.phi(p)) == stats.inv(p) else {"perm": p},
        ),
    ]
    witness = None
    for n in range(n_max + 1):
        da = joint_distribution(Source.all(n), ["fix", "exc", "maj"])
        db = joint_distribution(Source.all(n), ["pix", "lec", "inv"])
        dc = joint_distribution(Source.all(n), ["aix", "des", "aid"])
        for label, other in (("pix,lec,inv", db), ("aix,des,aid", dc)):
            equal, diff = distributions_equal(da, other)
            if not equal:
                witness = {"n": n, "tuple": label, "value": diff[0], "counts": [diff[1], diff[2]]}
                break
        if witness is not None:
            break
    out.append(
        _claim("triple (fix,exc,maj)~(pix,lec,inv)~(aix,des,aid)", f"n<={n_max}", witness)
    )
    return out


def lemma_words(max_len: int = LEMMA_MAX_LEN) -> Iterator[Word]:
    """All distinct words of length <= max_len over subsets of the lemma alphabet."""
    for length in range(max_len + 1):
        for combo in itertools.combinations(LEMMA_ALPHABET, length):
            yield from itertools.permutations(combo)


def _lemma_ks(w: Word) -> Iterator[int]:
    return (k for k in range(1, LEMMA_MAX_K + 1) if k not in w)


def _g_insert(k: int, t: Word) -> Word:
    return (k,) + t


def _insertion_lemmas(
    insert: Callable[[int, Word], Word],
    fixstat: Callable[[Word], int],
    eulstat: Callable[[Word], int],
    tag: str,
) -> list[ClaimResult]:
    """Lemmas 4, 5, 6 and the descent-count monotonicity for an insertion map."""
    domain = "words len<=5 on {1..7}, k<=8"
    mono = same_iff = zero_implies = None
    for t in lemma_words():
        et, ft = eulstat(t), fixstat(t)
        for k in _lemma_ks(t):
            q = insert(k, t)
            eq, fq = eulstat(q), fixstat(q)
            if mono is None and eq < et:
                mono = {"k": k, "word": t}
            if same_iff is None and ((eq == et) != (fq == ft + 1) or (eq > et) != (fq == 0)):
                same_iff = {"k": k, "word": t, "before": (et, ft), "after": (eq, fq)}
            if zero_implies is None and ft == 0 and not (fq == 1 and eq == et):
                zero_implies = {"k": k, "word": t, "after": (eq, fq)}
        if mono and same_iff and zero_implies:
            break
    delete_second = None
    for sigma in lemma_words(max_len=4):
        for l in _lemma_ks(sigma):
            t = insert(l, sigma)
            for k in _lemma_ks(t):
                if fixstat(insert(k, t)) == 0:
                    if eulstat(insert(k, t)) != 1 + eulstat(insert(k, sigma)):
                        delete_second = {"k": k, "l": l, "sigma": sigma}
                        break
            if delete_second:
                break
        if delete_second:
            break
    return [
        _claim(f"monotonicity {tag}", domain, mono),
        _claim(f"lemma4 {tag}", domain, same_iff),
        _claim(f"lemma5 {tag}", domain, zero_implies),
        _claim(f"lemma6 {tag}", "sigma len<=4 on {1..7}, k,l<=8", delete_second),
    ]


def _f_insert_word(k: int, t: Word) -> Word:
    return bijections.f_insert(k, t)[0]


def _suite_lemmas_f(n_max: int) -> list[ClaimResult]:
    lemma2 = None
    for t in lemma_words():
        base = stats.aid(t)
        for k in _lemma_ks(t):
            if stats.aid(_f_insert_word(k, t)) != base + len(restrict_below(t, k)):
                lemma2 = {"k": k, "word": t}
                break
        if lemma2:
            break
    out = [_claim("lemma2 aid f(k,t) = aid t + |t<k|", "words len<=5 on {1..7}, k<=8", lemma2)]
    out += _insertion_lemmas(_f_insert_word, stats.aix, stats.des, "f (aix, des)")
    return out


def _suite_lemmas_g(n_max: int) -> list[ClaimResult]:
    return _insertion_lemmas(_g_insert, stats.pix, stats.lec, "g (pix, lec)")


def _suite_psi(n_max: int) -> list[ClaimResult]:
    return [
        _pointwise(
            "psi involution",
            n_max,
            lambda p: None if bijections.psi(bijections.psi(p)) == p else {"perm": p},
        ),
        _pointwise(
            "psi theorem (das,mix) psi = (des,inv)",
            n_max,
            lambda p: None
            if not p or _values(bijections.psi(p), ("das", "mix")) == _values(p, ("des", "inv"))
            else {"perm": p},
        ),
        _pointwise(
            "psi swaps mix and inv",
            n_max,
            lambda p: None
            if not p
            or (
                stats.mix(bijections.psi(p)) == stats.inv(p)
                and stats.inv(bijections.psi(p)) == stats.mix(p)
            )
            else {"perm": p},
        ),
        _pointwise(
            "psi preserves left-to-right maxima",
            n_max,
            lambda p: None
            if left_to_right_maxima(bijections.psi(p)) == left_to_right_maxima(p)
            else {"perm": p},
        ),
    ]


def _suite_rawlings(n_max: int) -> list[ClaimResult]:
    out = [
        _pointwise(
            "rmaj:1 = maj",
            n_max,
            lambda p: None if stats.rawlings(p, 1) == stats.maj(p) else {"perm": p},
        ),
        _pointwise(
            "rmaj:n = inv",
            n_max,
            lambda p: None
            if not p or stats.rawlings(p, len(p)) == stats.inv(p)
            else {"perm": p},
        ),
        _pointwise(
            "|Inv_2| = ides",
            n_max,
            lambda p: None if len(stats.inv_set_r(p, 2)) == stats.ides(p) else {"perm": p},
        ),
        _dist_pair("(ides,rmaj:2)~(exc,maj)", n_max, ["ides", "rmaj:2"], ["exc", "maj"]),
    ]
    return out


def _catalan(n: int) -> int:
    out = 1
    for i in range(n):
        out = out * 2 * (2 * i + 1) // (i + 2)
    return out


def _suite_kratt(n_max: int) -> list[ClaimResult]:
    sizes = images = None
    for n in range(n_max + 1):
        avoid321 = set(enumerate_source(Source.avoiding(n, 321)))
        avoid312 = set(enumerate_source(Source.avoiding(n, 312)))
        cat = _catalan(n)
        if sizes is None and (len(avoid321) != cat or len(avoid312) != cat):
            sizes = {"n": n, "sizes": [len(avoid321), len(avoid312)], "catalan": cat}
        image = {bijections.psi(p) for p in avoid321}
        if images is None and image != avoid312:
            images = {"n": n, "missing": sorted(avoid312 - image)[:3]}
        if sizes and images:
            break
    return [
        _claim("avoidance classes have Catalan size", f"n<={n_max}", sizes),
        _claim("psi maps 321-avoiders onto 312-avoiders", f"n<={n_max}", images),
    ]


_SUITE_FUNCS = {
    "classic": _suite_classic,
    "theorem1": _suite_theorem1,
    "lemmas-f": _suite_lemmas_f,
    "lemmas-g": _suite_lemmas_g,
    "psi": _suite_psi,
    "rawlings": _suite_rawlings,
    "kratt": _suite_kratt,
}


def verify_suite(n_max: int, suite: str = "all") -> dict:
    """Run one named suite (or all of them) and return a structured report.

    Failures are data, not exceptions: each claim carries status pass/fail
    and, on failure, a counterexample payload.
    """
    if n_max > size_cap():
        raise SizeCapExceeded(f"n={n_max} exceeds the cap {size_cap()}")
    if suite == "all":
        names = list(SUITES)
    elif suite in _SUITE_FUNCS:
        names = [suite]
    else:
        raise ValueError(f"unknown suite {suite!r}; choose from {('all',) + SUITES}")
    claims: list[ClaimResult] = []
    for name in names:
        claims.extend(_SUITE_FUNCS[name](n_max))
    return {
        "schema": 1,
        "suite": suite,
        "n_max": n_max,
        "passed": all(c.passed for c in claims),
        "claims": [
            {
                "claim": c.claim,
                "status": c.status,
                "n_range": c.n_range,
                "witness": _jsonable(c.witness),
            }
            for c in claims
        ],
    }


def _jsonable(obj):
    if isinstance(obj, dict):
        return {k: _jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_jsonable(v) for v in obj]
    if isinstance(obj, frozenset):
        return sorted(obj)
    return obj


def mix_identity_check(n_max: int = 10) -> bool:
    """mix of the identity permutation is 0 for every n up to n_max."""
    return all(stats.mix(identity(n)) == 0 for n in range(n_max + 1))
