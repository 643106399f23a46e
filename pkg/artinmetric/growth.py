"""Geodesic growth of A_k with respect to the dual generators.

Three independent counts of geodesic words of length n:

* the closed-form rational series,
* enumeration of geodesic prefixes, each extension tested by the geodesic
  criterion,
* path counting in a finite acceptor built from the same criterion.

Series arithmetic is exact over the integers; sympy is used only to reduce
a quotient to lowest terms.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence

import numpy as np
import sympy as sym

from artinmetric.dual import dual_negg, dual_poss, is_geodesic_dual
from artinmetric.words import (
    DUAL,
    DomainError,
    DualLetter,
    GroupParams,
    Word,
    dual_word,
    generators,
    succ,
)

CLOSED = "closed"
ENUM = "enum"
AUTOMATON = "automaton"
METHODS = (CLOSED, ENUM, AUTOMATON)

COMPONENTS = ("20", "02", "11", "10", "01")


class NonUnitConstantError(DomainError):
    """Raised when a series denominator has constant term other than +-1."""


# ── Polynomials and series ────────────────────────────────────────────────────

@dataclass(frozen=True, slots=True)
class IntPolynomial:
    """Integer coefficients in ascending degree, trailing zeros trimmed."""

    coefficients: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        coeffs = list(self.coefficients)
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        object.__setattr__(self, "coefficients", tuple(int(c) for c in coeffs))

    @classmethod
    def of(cls, *coeffs: int) -> IntPolynomial:
        return cls(tuple(coeffs))

    def __getitem__(self, i: int) -> int:
        return self.coefficients[i] if 0 <= i < len(self.coefficients) else 0

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    def __add__(self, other: IntPolynomial) -> IntPolynomial:
        size = max(len(self.coefficients), len(other.coefficients))
        return IntPolynomial(tuple(self[i] + other[i] for i in range(size)))

    def __neg__(self) -> IntPolynomial:
        return IntPolynomial(tuple(-c for c in self.coefficients))

    def __sub__(self, other: IntPolynomial) -> IntPolynomial:
        return self + (-other)

    def __mul__(self, other: IntPolynomial) -> IntPolynomial:
        if not self.coefficients or not other.coefficients:
            return IntPolynomial()
        out = [0] * (len(self.coefficients) + len(other.coefficients) - 1)
        for i, a in enumerate(self.coefficients):
            for j, b in enumerate(other.coefficients):
                out[i + j] += a * b
        return IntPolynomial(tuple(out))

    def __str__(self) -> str:
        terms = []
        for i, c in enumerate(self.coefficients):
            if c:
                terms.append(str(c) if i == 0 else f"{c}x^{i}" if i > 1 else f"{c}x")
        return " + ".join(terms) if terms else "0"


ONE = IntPolynomial.of(1)


@dataclass(frozen=True, slots=True)
class RationalSeries:
    numerator: IntPolynomial
    denominator: IntPolynomial = field(default=ONE)

    def __post_init__(self) -> None:
        if self.denominator[0] not in (1, -1):
            raise NonUnitConstantError(
                f"denominator constant term {self.denominator[0]} is not +-1"
            )

    def __add__(self, other: RationalSeries) -> RationalSeries:
        return RationalSeries(
            self.numerator * other.denominator + other.numerator * self.denominator,
            self.denominator * other.denominator,
        )

    def __neg__(self) -> RationalSeries:
        return RationalSeries(-self.numerator, self.denominator)

    def __sub__(self, other: RationalSeries) -> RationalSeries:
        return self + (-other)

    def __mul__(self, other: RationalSeries) -> RationalSeries:
        return RationalSeries(
            self.numerator * other.numerator, self.denominator * other.denominator
        )

    def equals(self, other: RationalSeries) -> bool:
        """Equality as rational functions."""
        lhs = self.numerator * other.denominator
        rhs = other.numerator * self.denominator
        return lhs.coefficients == rhs.coefficients

    def reduced(self) -> RationalSeries:
        """Lowest terms, with a positive denominator constant term."""
        x = sym.Symbol("x")
        num = sym.Poly(list(reversed(self.numerator.coefficients)) or [0], x, domain="ZZ")
        den = sym.Poly(list(reversed(self.denominator.coefficients)), x, domain="ZZ")
        common = num.gcd(den)
        num, den = num.quo(common), den.quo(common)
        n_coeffs = [int(c) for c in reversed(num.all_coeffs())]
        d_coeffs = [int(c) for c in reversed(den.all_coeffs())]
        if d_coeffs[0] < 0:
            n_coeffs = [-c for c in n_coeffs]
            d_coeffs = [-c for c in d_coeffs]
        return RationalSeries(IntPolynomial(tuple(n_coeffs)), IntPolynomial(tuple(d_coeffs)))

    def expand(self, n: int) -> list[int]:
        return expand(self, n)

    def __str__(self) -> str:
        return f"({self.numerator}) / ({self.denominator})"


def expand(series: RationalSeries, n: int) -> list[int]:
    """Coefficients a_0 .. a_n of the power series of numerator / denominator."""
    den = series.denominator
    c0 = den[0]
    if c0 not in (1, -1):
        raise NonUnitConstantError(f"denominator constant term {c0} is not +-1")
    out: list[int] = []
    for i in range(n + 1):
        acc = series.numerator[i] - sum(den[j] * out[i - j] for j in range(1, min(i, den.degree) + 1))
        out.append(acc * c0)
    return out


def _linear(a: int, b: int) -> IntPolynomial:
    return IntPolynomial.of(a, b)


def closed_form_growth(k: int) -> RationalSeries:
    GroupParams(k)
    numerator = IntPolynomial.of(1, 3 - 2 * k, k * k - 3 * k + 2, -2 * k * (k - 1))
    denominator = _linear(1, -k) * _linear(1, -2 * (k - 1)) * _linear(1, -(k - 1))
    return RationalSeries(numerator, denominator)


def component_series(k: int, which: str) -> RationalSeries:
    """Growth of geodesics by (dual_poss, dual_negg) class, named "20", "02", "11", "10" or "01"."""
    GroupParams(k)
    if which in ("20", "02"):
        return RationalSeries(ONE, _linear(1, -k))
    if which == "11":
        return RationalSeries(_linear(1, 2), _linear(1, -2 * (k - 1)))
    if which in ("10", "01"):
        return RationalSeries(_linear(1, 1), _linear(1, -(k - 1)))
    raise ValueError(f"unknown component {which!r}; expected one of {', '.join(COMPONENTS)}")


def inclusion_exclusion(k: int) -> RationalSeries:
    parts = {name: component_series(k, name) for name in COMPONENTS}
    return parts["20"] + parts["02"] + parts["11"] - parts["10"] - parts["01"]


# ── Enumeration ───────────────────────────────────────────────────────────────

# Geodesic words are prefix-closed, so only geodesic prefixes are extended.
# Prefixes that agree on this summary have the same geodesic extensions and
# are walked together as one entry carrying a count and a representative.
_PrefixSummary = tuple[DualLetter | None, bool, bool, bool, bool]


def _summarize(w: Word, params: GroupParams) -> _PrefixSummary:
    poss, negg = dual_poss(w, params), dual_negg(w, params)
    last = w.letters[-1] if w.letters else None
    return (last, poss == 2, negg == 2, poss >= 1, negg >= 1)  # type: ignore[return-value]


def geodesic_counts_enumeration(k: int, n: int) -> list[int]:
    """a_0..a_n in one walk over geodesic prefixes, each extension tested by is_geodesic_dual."""
    params = GroupParams(k)
    letters = generators(DUAL, params)
    empty = dual_word()
    frontier: dict[_PrefixSummary, tuple[int, Word]] = {_summarize(empty, params): (1, empty)}
    counts = [1]
    for _ in range(n):
        nxt: dict[_PrefixSummary, tuple[int, Word]] = {}
        for count, rep in frontier.values():
            for g in letters:
                w = rep + dual_word((g,))  # type: ignore[arg-type]
                if not is_geodesic_dual(w, params):
                    continue
                key = _summarize(w, params)
                seen, first = nxt.get(key, (0, w))
                nxt[key] = (seen + count, first)
        frontier = nxt
        counts.append(sum(count for count, _ in frontier.values()))
    return counts


def count_geodesics_enumeration(k: int, n: int) -> int:
    return geodesic_counts_enumeration(k, n)[n]


# ── Acceptor ──────────────────────────────────────────────────────────────────

# (last letter, delta pair seen, delta^-1 pair seen, positive seen, negative seen)
AcceptorState = tuple[DualLetter | None, bool, bool, bool, bool]

_START: AcceptorState = (None, False, False, False, False)


@dataclass
class GeodesicAcceptor:
    """Deterministic complete automaton over the 2k dual letters; state 0 is the start, the last is dead."""

    k: int
    letters: tuple[DualLetter, ...]
    states: list[AcceptorState | None]
    transitions: list[list[int]]
    accepting: frozenset[int]

    @property
    def dead(self) -> int:
        return len(self.states) - 1

    def run(self, w: Word) -> int:
        index = {letter: j for j, letter in enumerate(self.letters)}
        state = 0
        for letter in w.letters:
            state = self.transitions[state][index[letter]]
        return state

    def accepts(self, w: Word) -> bool:
        return self.run(w) in self.accepting

    def transition_matrix(self) -> np.ndarray:
        size = len(self.states)
        matrix = np.zeros((size, size), dtype=object)
        for i, row in enumerate(self.transitions):
            for j in row:
                matrix[i, j] += 1
        return matrix


def _step(state: AcceptorState, g: DualLetter, k: int) -> AcceptorState | None:
    last, pos_pair, neg_pair, seen_pos, seen_neg = state
    if last is not None and g == last.inverse():
        return None
    if last is not None and last.positive and g.positive and g.index == succ(last.index, k):
        pos_pair = True
    if last is not None and not last.positive and not g.positive and last.index == succ(g.index, k):
        neg_pair = True
    seen_pos = seen_pos or g.positive
    seen_neg = seen_neg or not g.positive
    if (pos_pair and seen_neg) or (neg_pair and seen_pos):
        return None
    return (g, pos_pair, neg_pair, seen_pos, seen_neg)


def build_acceptor(k: int) -> GeodesicAcceptor:
    params = GroupParams(k)
    letters: tuple[DualLetter, ...] = generators(DUAL, params)  # type: ignore[assignment]
    states: list[AcceptorState] = [_START]
    index = {_START: 0}
    raw: list[list[AcceptorState | None]] = []
    i = 0
    while i < len(states):
        row: list[AcceptorState | None] = []
        for g in letters:
            nxt = _step(states[i], g, k)
            if nxt is not None and nxt not in index:
                index[nxt] = len(states)
                states.append(nxt)
            row.append(nxt)
        raw.append(row)
        i += 1

    dead = len(states)
    transitions = [[dead if s is None else index[s] for s in row] for row in raw]
    transitions.append([dead] * len(letters))
    return GeodesicAcceptor(
        k=k,
        letters=letters,
        states=[*states, None],
        transitions=transitions,
        accepting=frozenset(range(dead)),
    )


def count_via_acceptor(acceptor: GeodesicAcceptor, n: int) -> int:
    matrix = acceptor.transition_matrix()
    vector = np.zeros(len(acceptor.states), dtype=object)
    vector[0] = 1
    for _ in range(n):
        vector = vector.dot(matrix)
    return int(sum(vector[i] for i in acceptor.accepting))


# ── Table ─────────────────────────────────────────────────────────────────────

@dataclass
class GrowthRow:
    n: int
    counts: dict[str, int]

    @property
    def agree(self) -> bool:
        return len(set(self.counts.values())) <= 1


def growth_table(k: int, n: int, methods: Sequence[str] | None = None) -> list[GrowthRow]:
    """Rows 0..n with a_n from each requested method."""
    chosen: Iterable[str] = methods or METHODS
    chosen = [m for m in METHODS if m in set(chosen)]
    per_method: dict[str, list[int]] = {}
    if CLOSED in chosen:
        per_method[CLOSED] = expand(closed_form_growth(k), n)
    if ENUM in chosen:
        per_method[ENUM] = geodesic_counts_enumeration(k, n)
    if AUTOMATON in chosen:
        acceptor = build_acceptor(k)
        per_method[AUTOMATON] = [count_via_acceptor(acceptor, i) for i in range(n + 1)]
    return [GrowthRow(i, {m: per_method[m][i] for m in chosen}) for i in range(n + 1)]
