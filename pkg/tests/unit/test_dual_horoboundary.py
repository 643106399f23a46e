"""Unit tests for artinmetric.dual_horoboundary (pure functions)."""

from __future__ import annotations

import random

import pytest

from artinmetric.dual_horoboundary import (
    DualZWord,
    dual_approach_element,
    dual_detour_upper,
    dual_distance_difference,
    dual_is_busemann,
    dual_omega0_element,
    dual_omega_point,
    dual_periodic_zword,
    dual_phi,
    dual_psi,
    dual_validate_omega,
    dual_z_word,
)
from artinmetric.horoboundary import (
    BOUNDARY,
    INVALID,
    MINUS_CLASS,
    MINUS_INF,
    OMEGA0,
    PLUS_CLASS,
    PLUS_INF,
    ExtendedInt,
    InvalidPointError,
    PrefixTooShortError,
    ZWordError,
)
from artinmetric.sampling import random_dual_periodic_zword, random_word
from artinmetric.words import DUAL, GroupParams, Word, exponent_sum, format_word, freely_reduced_words
from tests.conftest import dual


def _s1_infinity(params: GroupParams) -> DualZWord:
    return dual_periodic_zword(Word(DUAL, ()), dual("s1", params), params)


def _fin(x: int) -> ExtendedInt:
    return ExtendedInt(0, x)


def _words(params: GroupParams, radius: int) -> list[Word]:
    return [w for n in range(radius + 1) for w in freely_reduced_words(DUAL, params, n)]


class TestDualZWords:
    def test_indices(self, k3: GroupParams) -> None:
        assert dual_z_word(dual("s2 s1 s1", k3), k3).letters == (2, 1, 1)

    def test_delta_pair_rejected(self, k3: GroupParams) -> None:
        with pytest.raises(ZWordError):
            dual_z_word(dual("s1 s2", k3), k3)

    def test_negative_letter_rejected(self, k3: GroupParams) -> None:
        with pytest.raises(ZWordError):
            dual_z_word(dual("s1 S2", k3), k3)

    def test_cycle_wrap_checked(self, k3: GroupParams) -> None:
        with pytest.raises(ZWordError):
            dual_periodic_zword(Word(DUAL, ()), dual("s2 s1", k3), k3)

    def test_take(self, k3: GroupParams) -> None:
        z = dual_periodic_zword(dual("s3", k3), dual("s1", k3), k3)
        assert format_word(z.take(3)) == "s3 s1 s1"
        assert z.length() == PLUS_INF


class TestDualValidation:
    def test_omega0(self, k3: GroupParams) -> None:
        z = dual_z_word(dual("s1 s1", k3), k3)
        assert dual_validate_omega((_fin(0), _fin(2)), z, k3) == OMEGA0
        assert dual_validate_omega((_fin(0), _fin(3)), z, k3) == INVALID
        assert dual_validate_omega((_fin(0), PLUS_INF), z, k3) == INVALID

    def test_boundary_patterns(self, k3: GroupParams) -> None:
        z = _s1_infinity(k3)
        assert dual_validate_omega((_fin(0), PLUS_INF), z, k3) == BOUNDARY
        assert dual_validate_omega((MINUS_INF, _fin(0)), z, k3) == BOUNDARY
        assert dual_validate_omega((MINUS_INF, PLUS_INF), z, k3) == BOUNDARY
        assert dual_validate_omega((PLUS_INF, _fin(0)), z, k3) == INVALID

    def test_classes(self, k3: GroupParams) -> None:
        assert dual_validate_omega((PLUS_INF, PLUS_INF), DualZWord(), k3) == PLUS_CLASS
        assert dual_validate_omega((MINUS_INF, MINUS_INF), DualZWord(), k3) == MINUS_CLASS

    def test_point_needs_two_coordinates(self) -> None:
        with pytest.raises(InvalidPointError):
            dual_omega_point((0, 0, 0), DualZWord())

    def test_busemann(self, k3: GroupParams) -> None:
        assert dual_is_busemann(dual_omega_point((_fin(0), PLUS_INF), _s1_infinity(k3)), k3)
        assert not dual_is_busemann(dual_omega_point((0, 2), dual_z_word(dual("s1 s1", k3), k3)), k3)
        with pytest.raises(InvalidPointError):
            dual_is_busemann(dual_omega_point((0, 5), DualZWord()), k3)


class TestDualPhiPsi:
    def test_finite_phi(self, k3: GroupParams) -> None:
        z = dual_z_word(dual("s1 s1", k3), k3)
        assert dual_phi(dual("s1", k3), z, k3) == (0, -1)

    def test_infinite_phi(self, k3: GroupParams) -> None:
        assert dual_phi(dual("S1", k3), _s1_infinity(k3), k3) == (0, 1)
        assert dual_phi(dual("s2", k3), _s1_infinity(k3), k3) == (-1, 0)

    def test_psi_values(self, k3: GroupParams) -> None:
        point = dual_omega_point((_fin(0), PLUS_INF), _s1_infinity(k3))
        assert dual_psi(point, dual("s1", k3), k3) == -1
        assert dual_psi(point, dual("S1", k3), k3) == 1
        assert dual_psi(point, dual("s2", k3), k3) == 1

    def test_class_psi_is_exponent_sum(self, k3: GroupParams) -> None:
        w = dual("s1 s2 S3", k3)
        assert dual_psi(dual_omega_point((PLUS_INF, PLUS_INF), DualZWord()), w, k3) == -1
        assert dual_psi(dual_omega_point((MINUS_INF, MINUS_INF), DualZWord()), w, k3) == 1

    @pytest.mark.parametrize("k", [3, 5])
    def test_sum_of_phi_is_inverse_exponent_sum(self, k: int) -> None:
        params = GroupParams(k)
        rng = random.Random(k)
        for _ in range(200):
            w = random_word(rng, DUAL, params, rng.randint(0, 8))
            z = random_dual_periodic_zword(rng, params)
            assert sum(dual_phi(w, z, params)) == -exponent_sum(w)

    @pytest.mark.parametrize("c", [-1, 0, 2])
    def test_omega0_correspondence(self, k3: GroupParams, c: int) -> None:
        point = dual_omega_point((c, c + 2), dual_z_word(dual("s1 s1", k3), k3))
        x = dual_omega0_element(point, k3)
        for w in _words(k3, 2):
            assert dual_psi(point, w, k3) == dual_distance_difference(x, w, k3)


class TestDualApproach:
    def test_class_sequences(self, k3: GroupParams) -> None:
        plus = dual_omega_point((PLUS_INF, PLUS_INF), DualZWord())
        minus = dual_omega_point((MINUS_INF, MINUS_INF), DualZWord())
        assert format_word(dual_approach_element(plus, 3, k3)) == "s1 s2 s1"
        assert format_word(dual_approach_element(minus, 2, k3)) == "S2 S1"

    def test_finite_lower_coordinate(self, k3: GroupParams) -> None:
        point = dual_omega_point((_fin(0), PLUS_INF), _s1_infinity(k3))
        assert format_word(dual_approach_element(point, 3, k3)) == "s1 s1 s1"

    def test_bare_infinite_prefix_too_short(self, k3: GroupParams) -> None:
        point = dual_omega_point((_fin(0), PLUS_INF), dual_z_word(dual("s1 s1", k3), k3, infinite=True))
        assert format_word(dual_approach_element(point, 2, k3)) == "s1 s1"
        for n in (3, 10, 30):
            with pytest.raises(PrefixTooShortError):
                dual_approach_element(point, n, k3)
        with pytest.raises(PrefixTooShortError):
            dual_detour_upper(point, 3, k3)

    @pytest.mark.parametrize("p", [
        (_fin(0), PLUS_INF),
        (_fin(2), PLUS_INF),
        (MINUS_INF, _fin(0)),
        (MINUS_INF, _fin(1)),
        (MINUS_INF, PLUS_INF),
        (PLUS_INF, PLUS_INF),
        (MINUS_INF, MINUS_INF),
    ])
    def test_detour_is_zero(self, k3: GroupParams, p: tuple[ExtendedInt, ExtendedInt]) -> None:
        point = dual_omega_point(p, _s1_infinity(k3))
        assert all(dual_detour_upper(point, n, k3) == 0 for n in range(1, 31))

    def test_sequence_converges(self, k3: GroupParams) -> None:
        point = dual_omega_point((_fin(0), PLUS_INF), _s1_infinity(k3))
        x = dual_approach_element(point, 40, k3)
        for w in _words(k3, 2):
            assert dual_distance_difference(x, w, k3) == dual_psi(point, w, k3)

    def test_invalid_rejected(self, k3: GroupParams) -> None:
        with pytest.raises(InvalidPointError):
            dual_approach_element(dual_omega_point((PLUS_INF, _fin(0)), _s1_infinity(k3)), 2, k3)
