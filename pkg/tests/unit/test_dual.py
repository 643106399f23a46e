"""Unit tests for artinmetric.dual (pure functions)."""

from __future__ import annotations

import random

import pytest

from artinmetric.dual import (
    DUAL_IDENTITY,
    DualNormalForm,
    dual_distance,
    dual_geodesic_representative,
    dual_negg,
    dual_normal_form,
    dual_nf_to_word,
    dual_poss,
    dual_right_multiply,
    dual_to_artin,
    is_geodesic_dual,
    is_valid_dual_normal_form,
    sigma_to_artin,
)
from artinmetric.garside import normal_form
from artinmetric.sampling import random_word
from artinmetric.words import DUAL, DualLetter, GroupParams, exponent_sum, format_word
from tests.conftest import artin, dual


class TestDualNormalForm:
    def test_delta_pair_collapses(self, k3: GroupParams) -> None:
        assert dual_normal_form(dual("s1 s2", k3), k3) == DualNormalForm(1, ())
        assert dual_normal_form(dual("s3 s1", k3), k3) == DualNormalForm(1, ())

    def test_s1_s2_s1(self, k3: GroupParams) -> None:
        assert dual_normal_form(dual("s1 s2 s1", k3), k3) == DualNormalForm(1, (1,))

    def test_inverse_on_identity(self, k3: GroupParams) -> None:
        assert dual_right_multiply(DUAL_IDENTITY, DualLetter(1, -1), k3) == DualNormalForm(-1, (3,))

    def test_inverse_cancels_last_atom(self, k3: GroupParams) -> None:
        assert dual_normal_form(dual("s2 s1 S1", k3), k3) == DualNormalForm(0, (2,))

    def test_non_delta_pair_kept(self, k3: GroupParams) -> None:
        nf = dual_normal_form(dual("s2 s1", k3), k3)
        assert nf == DualNormalForm(0, (2, 1))
        assert is_valid_dual_normal_form(nf, k3)

    def test_invalid_adjacent_delta_pair(self, k3: GroupParams) -> None:
        assert not is_valid_dual_normal_form(DualNormalForm(0, (1, 2)), k3)

    @pytest.mark.parametrize("k", [3, 4, 5])
    def test_round_trip(self, k: int) -> None:
        params = GroupParams(k)
        rng = random.Random(k)
        for _ in range(200):
            nf = dual_normal_form(random_word(rng, DUAL, params, rng.randint(0, 10)), params)
            assert is_valid_dual_normal_form(nf, params)
            assert dual_normal_form(dual_nf_to_word(nf, params), params) == nf


class TestDualDistance:
    def test_delta(self, k3: GroupParams) -> None:
        assert dual_distance(dual("s1 s2", k3), k3) == 2

    def test_single_inverse(self, k3: GroupParams) -> None:
        assert dual_distance(dual("S1", k3), k3) == 1

    def test_identity(self, k4: GroupParams) -> None:
        assert dual_distance(DUAL_IDENTITY, k4) == 0

    def test_pi_sum_is_exponent_sum(self, k4: GroupParams) -> None:
        rng = random.Random(5)
        for _ in range(100):
            w = random_word(rng, DUAL, k4, rng.randint(0, 10))
            nf = dual_normal_form(w, k4)
            assert 2 * nf.r + len(nf.factors) == exponent_sum(w)


class TestDualGeodesics:
    def test_poss(self, k3: GroupParams) -> None:
        assert dual_poss(dual("s1 s2", k3), k3) == 2
        assert dual_poss(dual("s2 s1", k3), k3) == 1
        assert dual_poss(dual("S1", k3), k3) == 0

    def test_negg(self, k3: GroupParams) -> None:
        assert dual_negg(dual("S2 S1", k3), k3) == 2
        assert dual_negg(dual("S1 S2", k3), k3) == 1

    @pytest.mark.parametrize("text,expected", [
        ("s1 s2 S3", False),
        ("s1 S3", True),
        ("s1 s2", True),
        ("S2 S1 s3", False),
        ("s1 S1", False),
    ])
    def test_criterion(self, k3: GroupParams, text: str, expected: bool) -> None:
        assert is_geodesic_dual(dual(text, k3), k3) is expected

    def test_representative_absorbs_delta_inverse(self, k3: GroupParams) -> None:
        assert format_word(dual_geodesic_representative(DualNormalForm(-1, (1,)), k3)) == "S2"

    def test_leftover_delta_inverse(self, k3: GroupParams) -> None:
        assert format_word(dual_geodesic_representative(DualNormalForm(-1, ()), k3)) == "S2 S1"

    @pytest.mark.parametrize("k", [3, 4, 5])
    def test_representatives_are_geodesic(self, k: int) -> None:
        params = GroupParams(k)
        rng = random.Random(50 + k)
        for _ in range(200):
            nf = dual_normal_form(random_word(rng, DUAL, params, rng.randint(0, 10)), params)
            rep = dual_geodesic_representative(nf, params)
            assert dual_normal_form(rep, params) == nf
            assert len(rep) == dual_distance(nf, params)
            assert is_geodesic_dual(rep, params)


class TestConversion:
    def test_low_indices(self, k3: GroupParams) -> None:
        assert format_word(sigma_to_artin(1, k3)) == "a"
        assert format_word(sigma_to_artin(2, k3)) == "b"

    def test_sigma_three(self, k3: GroupParams) -> None:
        assert format_word(sigma_to_artin(3, k3)) == "Bab"

    @pytest.mark.parametrize("k", range(3, 9))
    def test_dual_relations_hold_in_artin_group(self, k: int) -> None:
        params = GroupParams(k)
        target = normal_form(artin("ab", params), params)
        for i in range(1, k + 1):
            pair = dual(f"s{i} s{i % k + 1}", params)
            assert normal_form(dual_to_artin(pair, params), params) == target

    @pytest.mark.parametrize("k", range(3, 9))
    def test_delta_power_is_garside_square(self, k: int) -> None:
        params = GroupParams(k)
        w = dual(" ".join(["s1 s2"] * k), params)
        nf = normal_form(dual_to_artin(w, params), params)
        assert nf.r == 2 and nf.factors == ()
