"""Brute-force ground truth: breadth-first Cayley balls and exhaustive word checks.

Elements are keyed by their normal form.  Each key also keeps the
shortlex-least word BFS reached it by, so a normal-form bug shows up as a
representative that does not re-normalise to its own key.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Hashable, Sequence

from artinmetric.dual import (
    DUAL_IDENTITY,
    DualNormalForm,
    dual_distance,
    dual_normal_form,
    dual_right_multiply,
    is_geodesic_dual,
)
from artinmetric.garside import (
    IDENTITY,
    ArtinNormalForm,
    artin_distance,
    is_geodesic_artin,
    normal_form,
    right_multiply,
)
from artinmetric.report import CheckResult
from artinmetric.utils.logging import get_logger
from artinmetric.words import (
    ALPHABETS,
    ARTIN,
    DomainError,
    GroupParams,
    Letter,
    Word,
    format_word,
    freely_reduced_words,
    generators,
)

log = get_logger(__name__)

NormalForm = ArtinNormalForm | DualNormalForm


class BudgetExceededError(DomainError):
    """Raised when a ball radius is beyond the configured feasibility budget."""


def _identity(gens: str) -> NormalForm:
    return IDENTITY if gens == ARTIN else DUAL_IDENTITY


def _multiply(nf: NormalForm, g: Letter, gens: str, params: GroupParams) -> NormalForm:
    if gens == ARTIN:
        return right_multiply(nf, g, params)  # type: ignore[arg-type]
    return dual_right_multiply(nf, g, params)  # type: ignore[arg-type]


def evaluate(w: Word, params: GroupParams) -> NormalForm:
    """Normal form of w in its own presentation."""
    return normal_form(w, params) if w.alphabet == ARTIN else dual_normal_form(w, params)


def formula_distance(nf: NormalForm, params: GroupParams) -> int:
    if isinstance(nf, ArtinNormalForm):
        return artin_distance(nf, params)
    return dual_distance(nf, params)


def geodesic_criterion(w: Word, params: GroupParams) -> bool:
    return is_geodesic_artin(w, params) if w.alphabet == ARTIN else is_geodesic_dual(w, params)


@dataclass
class CayleyBall:
    gens: str
    radius: int
    params: GroupParams
    distances: dict[Hashable, int] = field(default_factory=dict)
    representatives: dict[Hashable, Word] = field(default_factory=dict)

    def __len__(self) -> int:
        return len(self.distances)

    def __contains__(self, key: Hashable) -> bool:
        return key in self.distances

    def distance(self, w: Word) -> int:
        return self.distances[evaluate(w, self.params)]

    def sphere_sizes(self) -> list[int]:
        sizes = [0] * (self.radius + 1)
        for d in self.distances.values():
            sizes[d] += 1
        return sizes

    def audit(self) -> list[str]:
        """Keys whose stored representative does not normalise back to the key."""
        bad = []
        for key, rep in self.representatives.items():
            if evaluate(rep, self.params) != key:
                bad.append(f"{format_word(rep) or 'e'} -> {evaluate(rep, self.params)} (key {key})")
        return bad


def cayley_ball(
    params: GroupParams,
    gens: str,
    radius: int,
    max_radius: int | None = None,
    generator_order: Sequence[Letter] | None = None,
) -> CayleyBall:
    """Level-synchronous BFS to *radius*.

    Each level is expanded in shortlex order of the representatives, so the
    stored representative of every element is its shortlex-least geodesic.

    Raises:
        BudgetExceededError: if *radius* is larger than *max_radius*.
    """
    if gens not in ALPHABETS:
        raise DomainError(f"unknown generating set {gens!r}")
    if max_radius is not None and radius > max_radius:
        raise BudgetExceededError(f"radius {radius} exceeds the {gens} budget of {max_radius}")

    letters = tuple(generator_order) if generator_order is not None else generators(gens, params)
    rank = {g: i for i, g in enumerate(generators(gens, params))}
    ball = CayleyBall(gens, radius, params)
    start = _identity(gens)
    ball.distances[start] = 0
    ball.representatives[start] = Word(gens, ())
    frontier = [start]

    for level in range(1, radius + 1):
        frontier.sort(key=lambda key: [rank[x] for x in ball.representatives[key].letters])
        fresh = []
        for key in frontier:
            rep = ball.representatives[key]
            for g in letters:
                nxt = _multiply(key, g, gens, params)
                candidate = Word(gens, rep.letters + (g,))
                if nxt not in ball.distances:
                    ball.distances[nxt] = level
                    ball.representatives[nxt] = candidate
                    fresh.append(nxt)
                elif ball.distances[nxt] == level and _shortlex_less(
                    candidate, ball.representatives[nxt], rank
                ):
                    ball.representatives[nxt] = candidate
        frontier = fresh
        log.debug("ball_level", gens=gens, k=params.k, level=level, size=len(fresh))

    log.info("ball_built", gens=gens, k=params.k, radius=radius, size=len(ball))
    return ball


def _shortlex_less(u: Word, v: Word, rank: dict[Letter, int]) -> bool:
    return (len(u), [rank[x] for x in u.letters]) < (len(v), [rank[x] for x in v.letters])


def _describe(ball: CayleyBall, key: Hashable) -> str:
    return format_word(ball.representatives[key]) or "e"


def verify_distance_formula(
    ball: CayleyBall,
    formula: Callable[[NormalForm, GroupParams], int] | None = None,
) -> CheckResult:
    """Formula distance against BFS distance at every element of the ball."""
    formula = formula or formula_distance
    result = CheckResult("distance_formula")
    for key, d in ball.distances.items():
        got = formula(key, ball.params)  # type: ignore[arg-type]
        result.record(got == d, f"{_describe(ball, key)}: formula={got} bfs={d}")
    for problem in ball.audit():
        result.record(False, f"normal form audit: {problem}")
    return result


def verify_geodesic_criterion(ball: CayleyBall, max_len: int | None = None) -> CheckResult:
    """criterion(u) iff |u| = d(e, u), over every freely reduced u with |u| <= max_len."""
    max_len = ball.radius if max_len is None else min(max_len, ball.radius)
    result = CheckResult("geodesic_criterion")
    for length in range(max_len + 1):
        for u in freely_reduced_words(ball.gens, ball.params, length):
            claimed = geodesic_criterion(u, ball.params)
            actual = ball.distance(u) == length
            result.record(
                claimed == actual,
                f"{format_word(u) or 'e'}: criterion={claimed} geodesic={actual}",
            )
    return result


def verify_length_axioms(ball: CayleyBall) -> CheckResult:
    """L1 l(x) = 0 iff x = e; L2 |l(xg) - l(x)| <= 1; L3 some g has l(xg) < l(x) for x != e."""
    params = ball.params
    letters = generators(ball.gens, params)
    identity = _identity(ball.gens)
    result = CheckResult("length_axioms")
    for key in ball.distances:
        here = formula_distance(key, params)  # type: ignore[arg-type]
        name = _describe(ball, key)
        result.record((here == 0) == (key == identity), f"L1 at {name}: l={here}")
        neighbours = [formula_distance(_multiply(key, g, ball.gens, params), params) for g in letters]  # type: ignore[arg-type]
        result.record(all(abs(n - here) <= 1 for n in neighbours), f"L2 at {name}")
        if key != identity:
            result.record(any(n < here for n in neighbours), f"L3 at {name}")
    return result


def artin_sphere_sizes(k: int, radius: int, max_radius: int | None = None) -> list[int]:
    return cayley_ball(GroupParams(k), ARTIN, radius, max_radius).sphere_sizes()
