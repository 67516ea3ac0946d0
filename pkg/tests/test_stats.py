import itertools
from collections import Counter

import pytest
from hypothesis import given
from hypothesis import strategies as hyp

from permstat import stats
from permstat.core import identity, inverse
from permstat.errors import (
    EmptyWord,
    InvalidR,
    UnknownStatistic,
    WordNotPermutation,
)

PAPER_WORD = (2, 5, 8, 9, 6, 3, 7, 1, 4)


def all_perms(n):
    return itertools.permutations(range(1, n + 1))


def small_words(max_len=5, alphabet=range(1, 7)):
    for length in range(max_len + 1):
        for combo in itertools.combinations(alphabet, length):
            yield from itertools.permutations(combo)


# -- independent oracles: direct transliterations of the definitions ----------

def oracle_inv(w):
    return sum(1 for i, j in itertools.combinations(range(len(w)), 2) if w[i] > w[j])


def oracle_des_positions(w):
    return [i + 1 for i in range(len(w) - 1) if w[i] > w[i + 1]]


def oracle_ai(w):
    n = len(w)
    count = 0
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            if w[i - 1] <= w[j - 1]:
                continue
            clause1 = j < n and w[j - 1] < w[j]
            clause2 = any(w[j - 1] > w[k - 1] for k in range(i + 1, j))
            if clause1 or clause2:
                count += 1
    return count


def oracle_aix(w):
    if not w:
        return 0
    m = min(w)
    i = w.index(m)
    alpha, beta = w[:i], w[i + 1:]
    if alpha and beta:
        return oracle_aix(alpha)
    if not alpha:
        return 1 + oracle_aix(beta)
    return 0


def oracle_mix(p):
    n = len(p)
    lr_max = {p[i] for i in range(n) if all(p[k] < p[i] for k in range(i))}
    count = 0
    for i in range(n):
        for j in range(i + 1, n):
            if p[i] > p[j] and p[i] in lr_max:
                count += 1
            if p[i] < p[j] and any(p[k] > p[j] for k in range(i)):
                count += 1
    return count


def oracle_das(p):
    n = len(p)
    lr_max = {p[i] for i in range(n) if all(p[k] < p[i] for k in range(i))}
    count = 0
    for i in range(n - 1):
        if p[i] > p[i + 1] and p[i] in lr_max:
            count += 1
        if p[i] < p[i + 1] and any(p[k] > p[i + 1] for k in range(i)):
            count += 1
    return count


def brute_force_hook_factorizations(w):
    """All splittings of w into a nondecreasing prefix plus hooks."""
    def hooks_of(rest):
        if not rest:
            yield ()
            return
        for cut in range(2, len(rest) + 1):
            h = rest[:cut]
            if stats.is_hook(h):
                for tail in hooks_of(rest[cut:]):
                    yield (h,) + tail

    results = []
    for split in range(len(w) + 1):
        pi0 = w[:split]
        if any(pi0[i] > pi0[i + 1] for i in range(len(pi0) - 1)):
            continue
        for hooks in hooks_of(w[split:]):
            results.append((pi0, hooks))
    return results


class TestClassicStats:
    def test_des_examples(self):
        assert stats.des_set((3, 2, 1)) == {1, 2}
        assert stats.des((3, 2, 1)) == 2
        assert stats.des(identity(5)) == 0
        assert stats.des(PAPER_WORD) == 3  # descents at 4 (9>6), 5 (6>3), 7 (7>1)

    def test_des_against_oracle(self):
        for w in small_words():
            assert sorted(stats.des_set(w)) == oracle_des_positions(w)

    def test_exc(self):
        assert stats.exc(identity(4)) == 0
        assert stats.exc((3, 2, 1)) == 1
        assert stats.exc((2, 3, 1)) == 2
        assert stats.exc_set((2, 3, 1)) == {1, 2}

    def test_exc_requires_permutation(self):
        with pytest.raises(WordNotPermutation):
            stats.exc((2, 5))

    def test_inv(self):
        assert stats.inv(identity(4)) == 0
        assert stats.inv((3, 2, 1)) == 3
        for n in range(1, 7):
            assert stats.inv(tuple(range(n, 0, -1))) == n * (n - 1) // 2

    def test_inv_against_oracle(self):
        for w in small_words():
            assert stats.inv(w) == oracle_inv(w)

    def test_maj(self):
        assert stats.maj(identity(4)) == 0
        assert stats.maj((3, 2, 1)) == 3
        assert stats.maj((3, 1, 2)) == 1

    def test_fix(self):
        assert stats.fix(identity(4)) == 4
        assert stats.fix((3, 2, 1)) == 1
        assert stats.fix((2, 3, 1)) == 0

    def test_imaj_ides(self):
        assert stats.imaj(identity(4)) == 0
        assert stats.ides(identity(4)) == 0
        assert stats.imaj((3, 2, 1)) == 3
        assert stats.ides((3, 2, 1)) == 2
        assert stats.imaj((3, 1, 2)) == stats.maj((2, 3, 1)) == 2
        assert stats.ides((3, 1, 2)) == stats.des((2, 3, 1)) == 1

    def test_ini(self):
        assert stats.ini((3, 1, 2)) == 3
        assert stats.ini(identity(5)) == 1
        assert stats.ini((7,)) == 7
        with pytest.raises(EmptyWord):
            stats.ini(())


class TestAdmissibleInversions:
    def test_examples(self):
        assert stats.ai((3, 2, 1)) == 0
        assert stats.aid((3, 2, 1)) == 2
        assert stats.ai(identity(4)) == 0
        assert stats.aid(identity(4)) == 0
        assert stats.ai((2, 1, 3)) == 1
        assert stats.aid((2, 1, 3)) == 2

    def test_against_oracle(self):
        for w in small_words():
            assert stats.ai(w) == oracle_ai(w)
            assert stats.aid(w) == oracle_ai(w) + len(oracle_des_positions(w))

    def test_ai_at_most_inv(self):
        for w in small_words():
            assert stats.ai(w) <= stats.inv(w)

    def test_no_admissible_inversion_ends_on_final_minimum(self):
        # clause 1 is false at the right boundary
        assert stats.admissible_inversions((2, 1)) == set()


class TestHookFactorization:
    def test_nondecreasing_word(self):
        hf = stats.hook_factorization(identity(4))
        assert hf.pi0 == identity(4) and hf.hooks == ()
        assert stats.lec(identity(4)) == 0
        assert stats.pix(identity(4)) == 4

    def test_213(self):
        hf = stats.hook_factorization((2, 1, 3))
        assert hf.pi0 == () and hf.hooks == ((2, 1, 3),)
        assert stats.lec((2, 1, 3)) == 1
        assert stats.pix((2, 1, 3)) == 0

    def test_321(self):
        hf = stats.hook_factorization((3, 2, 1))
        assert hf.pi0 == (3,) and hf.hooks == ((2, 1),)
        assert stats.lec((3, 2, 1)) == 1
        assert stats.pix((3, 2, 1)) == 1

    def test_invariants_and_uniqueness(self):
        for w in small_words(max_len=6, alphabet=range(1, 7)):
            hf = stats.hook_factorization(w)
            assert all(hf.pi0[i] <= hf.pi0[i + 1] for i in range(len(hf.pi0) - 1))
            assert all(stats.is_hook(h) for h in hf.hooks)
            assert hf.concatenation() == w
            candidates = brute_force_hook_factorizations(w)
            assert candidates == [(hf.pi0, hf.hooks)]


class TestAix:
    def test_paper_example(self):
        assert stats.aix(PAPER_WORD) == 2

    def test_identity(self):
        for n in range(7):
            assert stats.aix(identity(n)) == n

    def test_single_letter(self):
        assert stats.aix((7,)) == 1

    def test_against_oracle(self):
        for w in small_words():
            assert stats.aix(w) == oracle_aix(w)

    def test_at_most_one_plus_pix(self):
        for w in small_words(max_len=6, alphabet=range(1, 9)):
            assert stats.aix(w) <= 1 + stats.pix(w)


class TestMixDas:
    def test_mix_identity(self):
        for n in range(11):
            assert stats.mix(identity(n)) == 0

    def test_mix_decreasing(self):
        for n in range(1, 8):
            assert stats.mix(tuple(range(n, 0, -1))) == n - 1

    def test_mix_312(self):
        assert stats.mix((3, 1, 2)) == 3

    def test_das_examples(self):
        assert stats.das(identity(5)) == 0
        for n in range(2, 8):
            assert stats.das(tuple(range(n, 0, -1))) == 1
        assert stats.das((3, 1, 2)) == 2

    def test_against_oracles(self):
        for n in range(7):
            for p in all_perms(n):
                assert stats.mix(p) == oracle_mix(p)
                assert stats.das(p) == oracle_das(p)

    def test_unqualified_dominator_equals_lr_max_dominator(self):
        # an earlier larger letter exists iff an earlier larger LR maximum does
        for n in range(7):
            for p in all_perms(n):
                lr_max = {p[i] for i in range(n) if all(p[k] < p[i] for k in range(i))}
                for i in range(n):
                    for v in range(1, n + 1):
                        plain = any(p[k] > v for k in range(i))
                        qualified = any(p[k] > v and p[k] in lr_max for k in range(i))
                        assert plain == qualified


class TestRawlings:
    def test_r1_is_maj_rn_is_inv(self):
        for n in range(8):
            for p in all_perms(n):
                assert stats.rawlings(p, 1) == stats.maj(p)
                if n:
                    assert stats.rawlings(p, n) == stats.inv(p)

    def test_inv2_is_ides(self):
        for n in range(8):
            for p in all_perms(n):
                assert len(stats.inv_set_r(p, 2)) == stats.ides(p)

    def test_invalid_r(self):
        with pytest.raises(InvalidR):
            stats.rawlings((1,), 0)


class TestRelabelingInvariance:
    ORDER_STATS = ("des", "inv", "maj", "aid", "lec", "pix", "aix")

    @given(
        hyp.lists(hyp.integers(min_value=1, max_value=50), max_size=6, unique=True),
        hyp.integers(min_value=1, max_value=40),
    )
    def test_order_isomorphic_relabeling(self, letters, shift):
        w = tuple(letters)
        # order-preserving relabeling: rank letters, then spread by shift
        ranked = sorted(w)
        relabel = {x: (i + 1) * shift for i, x in enumerate(ranked)}
        v = tuple(relabel[x] for x in w)
        for name in self.ORDER_STATS:
            func, _ = stats.REGISTRY[name]
            assert func(w) == func(v)


class TestSinglePointDistributions:
    def test_eulerian_and_mahonian_families(self):
        for n in range(1, 7):
            perms = list(all_perms(n))
            d_des = Counter(stats.des(p) for p in perms)
            for eul in (stats.exc, stats.lec, stats.das):
                assert Counter(eul(p) for p in perms) == d_des
            d_inv = Counter(stats.inv(p) for p in perms)
            for mah in (stats.maj, stats.aid, stats.mix):
                assert Counter(mah(p) for p in perms) == d_inv
            for r in range(1, n + 1):
                assert Counter(stats.rawlings(p, r) for p in perms) == d_inv


class TestStatVector:
    def test_examples(self):
        assert stats.stat_vector((3, 1, 2), ["ini", "pix", "lec", "inv"]) == (
            ("ini", 3), ("pix", 0), ("lec", 2), ("inv", 2),
        )
        assert stats.stat_vector(identity(3), ["fix", "exc", "maj"]) == (
            ("fix", 3), ("exc", 0), ("maj", 0),
        )
        assert stats.stat_vector((2, 1), ["des", "aid"]) == (("des", 1), ("aid", 1))

    def test_rmaj_names(self):
        assert stats.stat_vector((3, 1, 2), ["rmaj:1"]) == (("rmaj:1", 1),)
        assert stats.stat_vector((3, 1, 2), ["rmaj:3"]) == (("rmaj:3", 2),)

    def test_unknown_statistic(self):
        with pytest.raises(UnknownStatistic):
            stats.stat_vector((1,), ["bogus"])
        with pytest.raises(UnknownStatistic):
            stats.stat_vector((1,), ["rmaj:x"])

    def test_permutation_only_on_word(self):
        with pytest.raises(WordNotPermutation):
            stats.stat_vector((2, 5), ["exc"])

    def test_inverse_consistency(self):
        for n in range(6):
            for p in all_perms(n):
                assert stats.imaj(p) == stats.maj(inverse(p))
                assert stats.ides(p) == stats.des(inverse(p))
