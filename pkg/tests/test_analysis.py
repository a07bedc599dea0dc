import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from patternavoid import analysis
from patternavoid.construction import (
    BlockSystem,
    PermutationFamily,
    build_blocks,
    build_permutations,
    j_word,
    system_from_family,
)
from patternavoid.errors import LengthGuardError
from patternavoid.words import Word, avoids, make_pattern


@pytest.fixture(scope="module", params=[8, 12])
def system(request):
    return build_blocks(k=request.param)


@pytest.fixture(scope="module")
def sys8():
    return build_blocks(k=8)


def with_duplicate_block(s: BlockSystem) -> BlockSystem:
    perms = (s.family.perms[0],) + s.family.perms[:-1]
    return system_from_family(PermutationFamily(s.k, perms), validate=False)


def with_class_violation(s: BlockSystem) -> BlockSystem:
    v = list(s.family.perms[0])
    v[0], v[1] = v[1], v[0]  # odd letter moved to an even slot
    return system_from_family(PermutationFamily(s.k, (tuple(v),) + s.family.perms[1:]),
                              validate=False)


class TestBasicWords:
    def test_example_k8(self, sys8):
        assert Word((2, 5, 4), "x", 8) in analysis.basic_words(sys8)

    def test_single_even_letter_not_basic(self, sys8):
        assert all(len(b) > 1 for b in analysis.basic_words(sys8))
        assert Word((2,), "x", 8) not in analysis.basic_words(sys8)

    def test_min_length_three(self, system):
        words = analysis.basic_words(system)
        assert words
        assert min(len(b) for b in words) >= 3
        for b in words:
            assert sum(1 for c in b if c % 2 == 0) >= 2


class TestLemma1:
    def test_a(self, system):
        r = analysis.check_lemma1_a(system)
        assert r.passed, r

    def test_a_duplicate_fails(self, sys8):
        bad = with_duplicate_block(sys8)
        r = analysis.check_lemma1_a(bad)
        assert not r.passed
        shared = r.counterexample["word"]
        owners = [i for i, b in enumerate(bad.blocks, 1) if shared in str(b)]
        assert len(owners) >= 2

    def test_b(self, system):
        assert analysis.check_lemma1_b(system).passed

    def test_b_duplicate_vacuous(self, sys8):
        assert analysis.check_lemma1_b(with_duplicate_block(sys8)).passed

    def test_b_shared_prefix_fails(self, sys8):
        v = list(sys8.family.perms[1])
        v[2], v[4] = v[4], v[2]  # same length-2 prefix as v_2, different block
        bad = system_from_family(
            PermutationFamily(8, sys8.family.perms + (tuple(v),)), validate=False)
        r = analysis.check_lemma1_b(bad)
        assert not r.passed and r.counterexample["blocks"] == [2, 9]

    def test_c(self, system):
        assert analysis.check_lemma1_c(system).passed

    def test_xk_then_odd_never_inside(self, system):
        k = system.k
        for odd in range(1, k, 2):
            pair = Word((k, odd), "x", k)
            assert not any(pair.is_factor_of(b) for b in system.blocks)

    def test_straddle_words_bounded(self, sys8):
        words = analysis.straddle_words(sys8)
        assert max(len(w) for w in words) == 8
        assert min(len(w) for w in words) == 2


class TestSquareFree:
    def test_abab(self):
        r = analysis.check_square_free(Word.from_text("abab"))
        assert not r.passed
        assert r.counterexample == {"position": 1, "D": "x1 x2"}

    def test_abcab(self):
        assert analysis.check_square_free(Word.from_text("abcab")).passed

    def test_j3_k8(self, sys8):
        assert analysis.check_square_free(j_word(sys8, 3).word).passed

    def test_j2_k12(self):
        assert analysis.check_square_free(j_word(build_blocks(k=12), 2).word).passed

    def test_guard(self):
        with pytest.raises(LengthGuardError):
            analysis.check_square_free(Word((1, 2) * 10), guard=10)

    @settings(max_examples=300, deadline=None)
    @given(st.text(alphabet="abc", min_size=1, max_size=14))
    def test_agrees_with_matcher(self, text):
        w = Word.from_text(text)
        assert analysis.check_square_free(w).passed == avoids(w, make_pattern("xx"))


class TestEvenSurplus:
    @pytest.mark.parametrize("k,alpha", [(8, 2), (8, 3), (12, 4)])
    def test_pass(self, k, alpha):
        assert analysis.check_even_surplus(build_blocks(k=k), alpha).passed

    def test_fail(self, sys8):
        r = analysis.check_even_surplus(sys8, 4)
        assert not r.passed and r.counterexample["even_letters"] == 4


class TestCRemark:
    def test_pass(self, system):
        r = analysis.check_c_remark(system)
        assert r.passed and r.checked["t"] == {8: 3, 12: 4}[system.k]

    def test_class_violation_fails(self, sys8):
        bad = with_class_violation(sys8)
        assert not analysis.check_c_remark(bad).passed
        assert not analysis.check_class_preservation(bad).passed

    def test_class_preservation(self, system):
        assert analysis.check_class_preservation(system).passed


def test_reports_reproducible(sys8):
    a = [analysis.check_lemma1_a(sys8), analysis.check_lemma1_c(sys8)]
    b = [analysis.check_lemma1_a(sys8), analysis.check_lemma1_c(sys8)]
    assert a == b


def test_failing_report_needs_counterexample():
    with pytest.raises(ValueError):
        analysis.PropertyReport("x", False)


def test_k16_suite():
    s = build_blocks(k=16)
    for check in (analysis.check_lemma1_a, analysis.check_lemma1_b, analysis.check_lemma1_c,
                  analysis.check_c_remark):
        assert check(s).passed
    assert build_permutations(16).k == 16
