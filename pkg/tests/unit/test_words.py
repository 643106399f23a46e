"""Unit tests for artinmetric.words (pure functions)."""

from __future__ import annotations

import pytest

from artinmetric.words import (
    A,
    A_INV,
    ARTIN,
    B,
    B_INV,
    DUAL,
    DomainError,
    DualLetter,
    GroupParams,
    Word,
    WordParseError,
    artin_word,
    exponent_sum,
    format_word,
    free_reduce,
    freely_reduced_words,
    generators,
    invert_word,
    is_freely_reduced,
    parse_word,
    prodd,
    shift_index,
    succ,
)
from tests.conftest import artin, dual


class TestGroupParams:
    def test_k_below_three_rejected(self) -> None:
        with pytest.raises(DomainError):
            GroupParams(2)

    def test_k_three_accepted(self) -> None:
        assert GroupParams(3).k == 3


class TestParsing:
    def test_artin_letters_and_inverses(self, k3: GroupParams) -> None:
        assert artin("aB", k3).letters == (A, B_INV)

    def test_artin_whitespace_ignored(self, k3: GroupParams) -> None:
        assert artin("a b A", k3).letters == (A, B, A_INV)

    def test_artin_bad_symbol_reports_position(self, k3: GroupParams) -> None:
        with pytest.raises(WordParseError) as exc:
            parse_word("abx", ARTIN, k3)
        assert exc.value.position == 2

    def test_dual_tokens(self, k3: GroupParams) -> None:
        assert dual("s1 S3", k3).letters == (DualLetter(1, 1), DualLetter(3, -1))

    def test_dual_index_out_of_range(self, k3: GroupParams) -> None:
        with pytest.raises(WordParseError):
            parse_word("s4", DUAL, k3)

    def test_dual_bad_token(self, k3: GroupParams) -> None:
        with pytest.raises(WordParseError) as exc:
            parse_word("s1 t2", DUAL, k3)
        assert exc.value.position == 3

    def test_empty_text_is_identity(self, k3: GroupParams) -> None:
        assert len(parse_word("", ARTIN, k3)) == 0
        assert len(parse_word("", DUAL, k3)) == 0

    def test_format_inverts_parse(self, k4: GroupParams) -> None:
        assert format_word(artin("abAB", k4)) == "abAB"
        assert format_word(dual("s1 S4 s2", k4)) == "s1 S4 s2"


class TestFreeReduction:
    def test_cancels_adjacent_pair(self, k3: GroupParams) -> None:
        w = artin_word([A, B_INV, B, B_INV])
        assert free_reduce(w).letters == (A, B_INV)

    def test_cascading_cancellation(self, k3: GroupParams) -> None:
        assert len(free_reduce(artin("abBA", k3))) == 0

    def test_dual_cancellation(self, k3: GroupParams) -> None:
        assert format_word(free_reduce(dual("s1 s2 S2 s3", k3))) == "s1 s3"

    def test_is_freely_reduced(self, k3: GroupParams) -> None:
        assert is_freely_reduced(artin("abAB", k3))
        assert not is_freely_reduced(artin("abBa", k3))


class TestWordOperations:
    def test_invert(self, k3: GroupParams) -> None:
        assert format_word(invert_word(artin("aB", k3))) == "bA"

    def test_prodd(self) -> None:
        assert format_word(prodd("a", "b", 4)) == "abab"
        assert format_word(prodd("B", "A", 3)) == "BAB"
        assert len(prodd("a", "b", 0)) == 0

    def test_prodd_negative_length(self) -> None:
        with pytest.raises(ValueError):
            prodd("a", "b", -1)

    def test_exponent_sum(self, k3: GroupParams) -> None:
        assert exponent_sum(artin("aBB", k3)) == -1

    def test_concatenation_keeps_alphabet(self, k3: GroupParams) -> None:
        assert format_word(artin("ab", k3) + artin("A", k3)) == "abA"
        with pytest.raises(ValueError):
            artin("a", k3) + dual("s1", k3)

    def test_slicing_returns_word(self, k3: GroupParams) -> None:
        assert isinstance(artin("abab", k3)[1:3], Word)
        assert format_word(artin("abab", k3)[1:3]) == "ba"

    def test_cyclic_index_helpers(self) -> None:
        assert succ(3, 3) == 1
        assert succ(1, 3) == 2
        assert shift_index(2, 2, 3) == 1
        assert shift_index(1, -2, 4) == 3


class TestEnumeration:
    def test_artin_generator_order(self, k3: GroupParams) -> None:
        assert generators(ARTIN, k3) == (A, B, A_INV, B_INV)

    def test_dual_generator_order(self, k3: GroupParams) -> None:
        assert [str(g) for g in generators(DUAL, k3)] == ["s1", "s2", "s3", "S1", "S2", "S3"]

    @pytest.mark.parametrize("n,expected", [(0, 1), (1, 4), (2, 12), (3, 36)])
    def test_artin_counts(self, k3: GroupParams, n: int, expected: int) -> None:
        assert sum(1 for _ in freely_reduced_words(ARTIN, k3, n)) == expected

    def test_dual_counts(self, k3: GroupParams) -> None:
        assert sum(1 for _ in freely_reduced_words(DUAL, k3, 2)) == 30

    def test_shortlex_order(self, k3: GroupParams) -> None:
        words = [format_word(w) for w in freely_reduced_words(ARTIN, k3, 2)]
        assert words[:3] == ["aa", "ab", "aB"]
