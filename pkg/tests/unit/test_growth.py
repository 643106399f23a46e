"""Unit tests for artinmetric.growth (pure functions)."""

from __future__ import annotations

import pytest

from artinmetric.dual import is_geodesic_dual
from artinmetric.growth import (
    AUTOMATON,
    CLOSED,
    COMPONENTS,
    ENUM,
    IntPolynomial,
    NonUnitConstantError,
    RationalSeries,
    build_acceptor,
    closed_form_growth,
    component_series,
    count_geodesics_enumeration,
    count_via_acceptor,
    expand,
    geodesic_counts_enumeration,
    growth_table,
    inclusion_exclusion,
)
from artinmetric.words import DUAL, DomainError, GroupParams, freely_reduced_words
from tests.conftest import dual


class TestSeries:
    def test_geometric(self) -> None:
        series = RationalSeries(IntPolynomial.of(1), IntPolynomial.of(1, -3))
        assert expand(series, 3) == [1, 3, 9, 27]

    def test_with_numerator(self) -> None:
        series = RationalSeries(IntPolynomial.of(1, 1), IntPolynomial.of(1, -2))
        assert series.expand(3) == [1, 3, 6, 12]

    def test_negative_unit_constant(self) -> None:
        series = RationalSeries(IntPolynomial.of(-1), IntPolynomial.of(-1, 2))
        assert expand(series, 2) == [1, 2, 4]

    def test_non_unit_constant_rejected(self) -> None:
        with pytest.raises(NonUnitConstantError):
            RationalSeries(IntPolynomial.of(1), IntPolynomial.of(2, 1))

    def test_polynomial_trims_zeros(self) -> None:
        assert IntPolynomial.of(1, 2, 0, 0).degree == 1
        assert str(IntPolynomial.of(1, 0, -3)) == "1 + -3x^2"

    def test_reduced(self) -> None:
        num = IntPolynomial.of(1, 1) * IntPolynomial.of(1, -2)
        den = IntPolynomial.of(1, -2) * IntPolynomial.of(1, -3)
        reduced = RationalSeries(num, den).reduced()
        assert reduced.numerator == IntPolynomial.of(1, 1)
        assert reduced.denominator == IntPolynomial.of(1, -3)

    def test_equals_ignores_common_factors(self) -> None:
        a = RationalSeries(IntPolynomial.of(1), IntPolynomial.of(1, -2))
        b = RationalSeries(IntPolynomial.of(1, 1), IntPolynomial.of(1, -1, -2))
        assert a.equals(b)


class TestClosedForm:
    def test_k3_values(self) -> None:
        assert expand(closed_form_growth(3), 3) == [1, 6, 30, 126]

    @pytest.mark.parametrize("k", range(3, 9))
    def test_first_terms(self, k: int) -> None:
        a = expand(closed_form_growth(k), 1)
        assert a == [1, 2 * k]

    @pytest.mark.parametrize("k", range(3, 9))
    def test_inclusion_exclusion_matches(self, k: int) -> None:
        assert expand(inclusion_exclusion(k), 12) == expand(closed_form_growth(k), 12)
        assert inclusion_exclusion(k).equals(closed_form_growth(k))

    def test_components(self) -> None:
        assert expand(component_series(3, "20"), 2) == [1, 3, 9]
        assert expand(component_series(3, "11"), 2) == [1, 6, 24]
        assert expand(component_series(3, "01"), 2) == [1, 3, 6]
        assert set(COMPONENTS) == {"20", "02", "11", "10", "01"}

    def test_unknown_component(self) -> None:
        with pytest.raises(ValueError):
            component_series(3, "22")

    def test_k_below_three(self) -> None:
        with pytest.raises(DomainError):
            closed_form_growth(2)


class TestEnumeration:
    @pytest.mark.parametrize("k", [3, 4, 5])
    def test_matches_closed_form_to_eight(self, k: int) -> None:
        assert geodesic_counts_enumeration(k, 8) == expand(closed_form_growth(k), 8)

    @pytest.mark.parametrize("k,n", [(3, 5), (4, 4), (5, 3)])
    def test_matches_exhaustive_filter(self, k: int, n: int) -> None:
        params = GroupParams(k)
        for length in range(n + 1):
            exhaustive = sum(1 for w in freely_reduced_words(DUAL, params, length) if is_geodesic_dual(w, params))
            assert count_geodesics_enumeration(k, length) == exhaustive

    def test_length_zero(self) -> None:
        assert geodesic_counts_enumeration(3, 0) == [1]

    def test_table_at_eight_for_all_methods(self) -> None:
        for k in (3, 4, 5):
            assert all(row.agree for row in growth_table(k, 8))


class TestAcceptor:
    def test_dead_state_absorbs(self) -> None:
        acceptor = build_acceptor(3)
        assert acceptor.transitions[acceptor.dead] == [acceptor.dead] * 6
        assert acceptor.dead not in acceptor.accepting

    def test_rejects_mixed_delta_pair(self, k3: GroupParams) -> None:
        acceptor = build_acceptor(3)
        assert acceptor.accepts(dual("s1 s2", k3))
        assert not acceptor.accepts(dual("s1 s2 S3", k3))
        assert not acceptor.accepts(dual("s1 S1", k3))

    def test_count_at_two(self) -> None:
        assert count_via_acceptor(build_acceptor(3), 2) == 30

    @pytest.mark.parametrize("k,length", [(3, 4), (4, 3)])
    def test_agrees_with_criterion(self, k: int, length: int) -> None:
        params = GroupParams(k)
        acceptor = build_acceptor(k)
        for n in range(length + 1):
            for w in freely_reduced_words(DUAL, params, n):
                assert acceptor.accepts(w) is is_geodesic_dual(w, params)

    @pytest.mark.parametrize("k", [3, 4, 6])
    def test_counts_match_closed_form(self, k: int) -> None:
        acceptor = build_acceptor(k)
        expected = expand(closed_form_growth(k), 10)
        assert [count_via_acceptor(acceptor, n) for n in range(11)] == expected


class TestGrowthTable:
    def test_all_methods_agree(self) -> None:
        rows = growth_table(3, 3)
        assert [row.n for row in rows] == [0, 1, 2, 3]
        assert all(row.agree for row in rows)
        assert rows[-1].counts == {CLOSED: 126, ENUM: 126, AUTOMATON: 126}

    def test_method_subset_keeps_canonical_order(self) -> None:
        rows = growth_table(4, 2, [AUTOMATON, CLOSED])
        assert list(rows[0].counts) == [CLOSED, AUTOMATON]
