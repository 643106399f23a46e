"""Horofunction boundary of A_k with the dual word metric.

Points are pairs (p, z) with p = (p_0, p_1) over Z u {-inf, +inf} and z a
positive dual word containing no adjacent pair (i, succ(i)).  A point with
p not identically +-inf is valid iff p_1 - p_0 equals the length of z, which
is +inf for infinite z.  Every boundary point here is a Busemann point.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Sequence

from artinmetric.dual import (
    DualNormalForm,
    delta_dual_word,
    dual_distance,
    dual_distance_between,
    dual_normal_form,
    dual_right_multiply,
)
from artinmetric.horoboundary import (
    BOUNDARY,
    DEFAULT_MAX_RUNS,
    GENERIC,
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
    format_p_vector,
)
from artinmetric.words import (
    DUAL,
    DualLetter,
    GroupParams,
    Word,
    dual_word,
    invert_word,
    succ,
)


@dataclass(frozen=True, slots=True)
class DualZWord:
    """Atom indices of a positive dual word; infinite words repeat ``cycle`` after ``letters``."""

    letters: tuple[int, ...] = ()
    infinite: bool = False
    cycle: tuple[int, ...] = ()

    @property
    def is_periodic(self) -> bool:
        return bool(self.cycle)

    def iter_letters(self, limit: int) -> Iterator[int]:
        count = 0
        for i in self.letters:
            if count >= limit:
                return
            yield i
            count += 1
        while self.cycle:
            for i in self.cycle:
                if count >= limit:
                    return
                yield i
                count += 1

    def take(self, n: int) -> Word:
        return dual_word(DualLetter(i, 1) for i in self.iter_letters(n))

    def length(self) -> ExtendedInt:
        return PLUS_INF if self.infinite else ExtendedInt(0, len(self.letters))

    def __str__(self) -> str:
        head = " ".join(f"s{i}" for i in self.letters)
        if self.cycle:
            return f"{head} ({' '.join(f's{i}' for i in self.cycle)})^inf".strip()
        return head + (" ..." if self.infinite else "")


def _check_no_delta(indices: Sequence[int], params: GroupParams) -> None:
    for i, j in zip(indices, indices[1:]):
        if j == succ(i, params.k):
            raise ZWordError(f"s{i} s{j} multiplies to delta")


def dual_z_word(w: Word, params: GroupParams, infinite: bool = False) -> DualZWord:
    """Raises ZWordError on a negative letter or an adjacent delta pair."""
    if w.alphabet != DUAL:
        raise ZWordError("dual Z-words are dual words")
    if any(not x.positive for x in w.letters):
        raise ZWordError("Z-words contain positive letters only")
    indices = tuple(x.index for x in w.letters)  # type: ignore[union-attr]
    _check_no_delta(indices, params)
    return DualZWord(indices, infinite=infinite)


def dual_periodic_zword(prefix: Word, cycle: Word, params: GroupParams) -> DualZWord:
    head = dual_z_word(prefix, params)
    tail = dual_z_word(cycle, params)
    if not tail.letters:
        raise ZWordError("the repeating part of an infinite Z-word must be non-empty")
    _check_no_delta(head.letters + tail.letters + tail.letters[:1], params)
    return DualZWord(head.letters, infinite=True, cycle=tail.letters)


@dataclass(frozen=True, slots=True)
class DualOmegaPoint:
    p: tuple[ExtendedInt, ExtendedInt]
    z: DualZWord
    class_tag: str = GENERIC

    def __str__(self) -> str:
        if self.class_tag != GENERIC:
            return self.class_tag
        return f"p=({format_p_vector(self.p)}) z={self.z}"


def dual_omega_point(p: Sequence[ExtendedInt | int], z: DualZWord) -> DualOmegaPoint:
    vec = tuple(x if isinstance(x, ExtendedInt) else ExtendedInt(0, int(x)) for x in p)
    if len(vec) != 2:
        raise InvalidPointError("dual points have two coordinates")
    if all(x == PLUS_INF for x in vec):
        return DualOmegaPoint(vec, DualZWord(), PLUS_CLASS)  # type: ignore[arg-type]
    if all(x == MINUS_INF for x in vec):
        return DualOmegaPoint(vec, DualZWord(), MINUS_CLASS)  # type: ignore[arg-type]
    return DualOmegaPoint(vec, z)  # type: ignore[arg-type]


def dual_pi(x: Word | DualNormalForm, params: GroupParams) -> tuple[int, int]:
    nf = x if isinstance(x, DualNormalForm) else dual_normal_form(x, params)
    return nf.r, nf.r + len(nf.factors)


def dual_validate_omega(p: Sequence[ExtendedInt], z: DualZWord, params: GroupParams) -> str:
    if len(p) != 2:
        return INVALID
    if p[0] == PLUS_INF and p[1] == PLUS_INF:
        return PLUS_CLASS
    if p[0] == MINUS_INF and p[1] == MINUS_INF:
        return MINUS_CLASS
    gap = p[1] - p[0]
    if gap.inf_coeff > 0:
        gap = PLUS_INF
    if gap != z.length():
        return INVALID
    return OMEGA0 if gap.is_finite else BOUNDARY


def dual_classify(point: DualOmegaPoint, params: GroupParams) -> str:
    if point.class_tag != GENERIC:
        return point.class_tag
    return dual_validate_omega(point.p, point.z, params)


def dual_phi(
    w: Word, z: DualZWord, params: GroupParams, max_letters: int = DEFAULT_MAX_RUNS
) -> tuple[int, int]:
    """pi~(w^-1 z) - pi~(z), stabilised along prefixes when z is infinite.

    Raises:
        PrefixTooShortError: if an infinite z without a cycle is too short.
    """
    nf = dual_normal_form(invert_word(w), params)
    value = dual_pi(nf, params)
    seen = 0
    limit = max_letters if z.is_periodic else len(z.letters)
    for index in z.iter_letters(limit):
        nf = dual_right_multiply(nf, DualLetter(index, 1), params)
        before = seen
        seen += 1
        r, top = dual_pi(nf, params)
        previous, value = value, (r, top - seen)
        if z.infinite and value == previous and before > len(w) + 2:
            return value
    if not z.infinite:
        return value
    raise PrefixTooShortError(f"dual phi did not stabilise within {limit} letters of z")


def dual_psi(
    point: DualOmegaPoint, w: Word, params: GroupParams, max_letters: int = DEFAULT_MAX_RUNS
) -> int:
    if point.class_tag in (PLUS_CLASS, MINUS_CLASS):
        total = sum(dual_pi(invert_word(w), params))
        return total if point.class_tag == PLUS_CLASS else -total
    values = dual_phi(w, point.z, params, max_letters)
    acc = ExtendedInt()
    for p_i, phi_i in zip(point.p, values):
        acc = acc + abs(p_i + phi_i) - abs(p_i)
    if not acc.is_finite:
        raise InvalidPointError(f"infinite parts failed to cancel for {point}")
    return acc.finite


def _delta_power(c: int) -> Word:
    delta = delta_dual_word()
    return delta * c if c >= 0 else invert_word(delta) * (-c)


def dual_omega0_element(point: DualOmegaPoint, params: GroupParams) -> Word:
    if dual_classify(point, params) != OMEGA0:
        raise InvalidPointError(f"not an Omega_0 point: {point}")
    return point.z.take(len(point.z.letters)) + _delta_power(point.p[0].finite)


def dual_approach_element(point: DualOmegaPoint, n: int, params: GroupParams) -> Word:
    """z_n delta^{q_0}, where z_n is the first n letters of z and q follows the
    finite coordinate of p (or splits n evenly when both coordinates are infinite)."""
    if n < 1:
        raise ValueError("n must be at least 1")
    tag = dual_classify(point, params)
    if tag == PLUS_CLASS:
        return dual_word(DualLetter(1 if i % 2 == 0 else 2, 1) for i in range(n))
    if tag == MINUS_CLASS:
        return dual_word(DualLetter(2 if i % 2 == 0 else 1, -1) for i in range(n))
    if tag == OMEGA0:
        return dual_omega0_element(point, params)
    if tag == INVALID:
        raise InvalidPointError(f"not a valid boundary parameter: {point}")

    lower, upper = point.p
    if lower.is_finite:
        q0 = lower.finite
    elif upper.is_finite:
        q0 = upper.finite - n
    else:
        q0 = -(n // 2)
    if point.z.infinite and not point.z.is_periodic and n > len(point.z.letters):
        raise PrefixTooShortError(
            f"n={n} needs more than the {len(point.z.letters)} letters given for z and no cycle continues it"
        )
    return point.z.take(n) + _delta_power(q0)


def dual_is_busemann(point: DualOmegaPoint, params: GroupParams) -> bool:
    tag = dual_classify(point, params)
    if tag == INVALID:
        raise InvalidPointError(f"not a valid boundary parameter: {point}")
    return tag != OMEGA0


def dual_detour_upper(
    point: DualOmegaPoint, n: int, params: GroupParams, max_letters: int = DEFAULT_MAX_RUNS
) -> int:
    x = dual_approach_element(point, n, params)
    return dual_distance(x, params) + dual_psi(point, x, params, max_letters)


def dual_distance_difference(x: Word, w: Word, params: GroupParams) -> int:
    return dual_distance_between(w, x, params) - dual_distance(x, params)


__all__ = [
    "BOUNDARY",
    "DualOmegaPoint",
    "DualZWord",
    "dual_approach_element",
    "dual_classify",
    "dual_detour_upper",
    "dual_distance_difference",
    "dual_is_busemann",
    "dual_omega0_element",
    "dual_omega_point",
    "dual_periodic_zword",
    "dual_phi",
    "dual_pi",
    "dual_psi",
    "dual_validate_omega",
    "dual_z_word",
]
