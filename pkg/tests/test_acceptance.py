"""Release gate: one test per acceptance criterion, each with its time limit.

Run ``pytest tests/test_acceptance.py`` to get the per-criterion summary.
"""

import random

import pytest

from patternavoid import analysis
from patternavoid.construction import build_blocks, build_permutations, c_map, j_word
from patternavoid.errors import PermutationDistinctnessError
from patternavoid.words import (
    Word,
    avoids,
    find_instance,
    make_pattern,
    naive_instance_oracle,
    substitute,
)
from patternavoid.zimin import is_blocking, zimin

BLOCKING = ["x", "xy", "xyx", "xyxzxyx"]
AVOIDABLE = ["xx", "xxy", "xyyx", "xxyy", "xyzxyz"]


def has_instance_by_lengths(host, u):
    """Exhaustive check over every start and image-length tuple."""
    return naive_instance_oracle(host, u, len(host)) is not None


def test_criterion_1_zimin_correctness(timed):
    with timed() as t:
        z = [1]
        for n in range(1, 13):
            if n > 1:
                z = z + [n] + z
            word = zimin(n).word
            assert list(word.letters) == z
            assert len(word) == 2 ** n - 1
        assert zimin(3).word == Word.xi(1, 2, 1, 3, 1, 2, 1)
    assert t.elapsed < 1.0


def test_criterion_2_decision_suite(timed):
    with timed() as t:
        for text in BLOCKING:
            u = make_pattern(text)
            ok, w = is_blocking(u)
            assert ok, text
            image = substitute(w.mapping, u)
            assert image.same_letters(zimin(w.rank).word.factor(w.position, len(image)))
        for text in AVOIDABLE:
            u = make_pattern(text)
            assert is_blocking(u) == (False, None), text
            # independent confirmation: brute force over all image lengths in Z_alpha
            assert not has_instance_by_lengths(zimin(u.alpha).word, u)
    assert t.elapsed < 5.0


def test_criterion_3_theorem_desk_check(timed):
    system = build_blocks(k=8)
    with timed() as t:
        for m in (1, 2, 3):
            jm = j_word(system, m).word
            assert len(jm) == 8 ** m
            for text in AVOIDABLE:
                occ = find_instance(jm, make_pattern(text))
                assert occ is None, f"J_{m} contains an instance of {text}: {occ}"
    assert t.elapsed < 120.0


def test_criterion_4_lemma1_suite(timed):
    with timed() as t:
        for k in (8, 12):
            s = build_blocks(k=k)
            for report in (
                analysis.check_lemma1_a(s),
                analysis.check_lemma1_b(s),
                analysis.check_lemma1_c(s),
                analysis.check_even_surplus(s, k // 2 - 1),
                analysis.check_c_remark(s),
            ):
                assert report.passed, report
        j3 = j_word(build_blocks(k=8), 3).word
        j2 = j_word(build_blocks(k=12), 2).word
        assert len(j3) == 512 and len(j2) == 144
        assert analysis.check_square_free(j3).passed
        assert analysis.check_square_free(j2).passed
    assert t.elapsed < 60.0


def test_criterion_5_c_mapping_exactness(timed):
    with timed() as t:
        for k, rank in ((8, 3), (12, 4)):
            s = build_blocks(k=k)
            assert s.t == rank
            target = zimin(rank).word + Word.xi(rank + 1)
            for block in s.blocks:
                assert c_map(s, block) == target
    assert t.elapsed < 1.0


def test_criterion_6_matcher_oracle_equivalence(timed):
    rng = random.Random(6)
    with timed() as t:
        found = 0
        for _ in range(1500):
            letters = "abc"[:rng.randint(1, 3)]
            w = Word.from_text("".join(rng.choice(letters) for _ in range(rng.randint(1, 12))))
            u = make_pattern("".join(rng.choice("xyz") for _ in range(rng.randint(1, 4))))
            fast = find_instance(w, u)
            assert fast == naive_instance_oracle(w, u, len(w)), (w, u)
            found += fast is not None
        # both outcomes must be represented
        assert 0 < found < 1500
    assert t.elapsed < 30.0


def test_criterion_7_degenerate_k(timed):
    with timed() as t:
        with pytest.raises(PermutationDistinctnessError):
            build_permutations(4)
    assert t.elapsed < 0.1


def test_avoids_wrapper_matches():
    assert avoids(j_word(build_blocks(k=8), 2).word, make_pattern("xyyx"))
