"""Horofunction boundary of A_k with the Artin-generator word metric.

Boundary points are pairs (p, z): p is a vector over Z u {-inf, +inf} and z a
positive word with no Delta sub-product, split into maximal alternating runs.
psi maps each pair to the function

    w -> sum |p_i + phi_i(w, z)| - sum |p_i|

where phi(w, z) = pi(w^-1 z) - pi(z), taken as a limit over prefixes when z
is infinite.  Infinite words are stored as a finite prefix of runs plus a
repeating cycle of runs.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Sequence

from artinmetric.garside import (
    CanonicalFactor,
    artin_distance,
    delta_word,
    distance_between,
    factor_counts,
    normal_form,
    pi,
    right_multiply,
)
from artinmetric.words import (
    ARTIN,
    ArtinLetter,
    DomainError,
    GroupParams,
    Word,
    artin_word,
    freely_reduced_words,
    invert_word,
    prodd,
)

DEFAULT_MAX_RUNS = 512

GENERIC = "generic"
PLUS_CLASS = "plusclass"
MINUS_CLASS = "minusclass"

OMEGA0 = "omega0"
BOUNDARY = "boundary"
INVALID = "invalid"


class ZWordError(DomainError):
    """Raised when a word is not a positive word free of Delta sub-products."""


class PrefixTooShortError(DomainError):
    """Raised when the stored prefix of an infinite word is too short to decide a value."""


class InvalidPointError(DomainError):
    """Raised when an operation needs a valid boundary parameter (p, z)."""


# ── Extended integers ─────────────────────────────────────────────────────────

@dataclass(frozen=True, slots=True, order=True)
class ExtendedInt:
    """inf_coeff * infinity + finite, with the two parts tracked separately."""

    inf_coeff: int = 0
    finite: int = 0

    @property
    def is_finite(self) -> bool:
        return self.inf_coeff == 0

    def __add__(self, other: ExtendedInt | int) -> ExtendedInt:
        other = _ext(other)
        return ExtendedInt(self.inf_coeff + other.inf_coeff, self.finite + other.finite)

    __radd__ = __add__

    def __neg__(self) -> ExtendedInt:
        return ExtendedInt(-self.inf_coeff, -self.finite)

    def __sub__(self, other: ExtendedInt | int) -> ExtendedInt:
        return self + (-_ext(other))

    def __abs__(self) -> ExtendedInt:
        if self.inf_coeff > 0:
            return self
        if self.inf_coeff < 0:
            return -self
        return ExtendedInt(0, abs(self.finite))

    def __str__(self) -> str:
        if self.inf_coeff == 0:
            return str(self.finite)
        if self.finite == 0 and abs(self.inf_coeff) == 1:
            return "inf" if self.inf_coeff > 0 else "-inf"
        return f"{self.inf_coeff}inf{self.finite:+d}"


PLUS_INF = ExtendedInt(1, 0)
MINUS_INF = ExtendedInt(-1, 0)


def _ext(value: ExtendedInt | int) -> ExtendedInt:
    return value if isinstance(value, ExtendedInt) else ExtendedInt(0, int(value))


def parse_extended(text: str) -> ExtendedInt:
    token = text.strip().lower()
    if token in ("inf", "+inf", "infinity", "+infinity"):
        return PLUS_INF
    if token in ("-inf", "-infinity"):
        return MINUS_INF
    try:
        return ExtendedInt(0, int(token))
    except ValueError:
        raise DomainError(f"not an integer or +-inf: {text!r}") from None


def parse_p_vector(text: str) -> tuple[ExtendedInt, ...]:
    """Parse a comma list such as "-1,0,inf"."""
    return tuple(parse_extended(part) for part in text.split(",") if part.strip())


def format_p_vector(p: Sequence[ExtendedInt]) -> str:
    return ",".join(str(x) for x in p)


def _gap(lower: ExtendedInt, upper: ExtendedInt) -> ExtendedInt:
    """upper - lower, with any infinite result collapsed to +-inf."""
    diff = upper - lower
    if diff.inf_coeff > 0:
        return PLUS_INF
    if diff.inf_coeff < 0:
        return MINUS_INF
    return diff


def _same_infinity(x: ExtendedInt, y: ExtendedInt) -> bool:
    return not x.is_finite and x.inf_coeff == y.inf_coeff


# ── Z-words ───────────────────────────────────────────────────────────────────

@dataclass(frozen=True, slots=True)
class ZWord:
    """Runs of a positive Delta-free word.

    A finite word has ``infinite=False``.  An infinite word is ``runs``
    followed by ``cycle`` repeated forever; with an empty cycle it is a bare
    prefix whose continuation is unknown.
    """

    runs: tuple[CanonicalFactor, ...] = ()
    infinite: bool = False
    cycle: tuple[CanonicalFactor, ...] = ()

    def __post_init__(self) -> None:
        if self.cycle and not self.infinite:
            raise ZWordError("a repeating cycle requires an infinite word")
        chain = list(self.runs) + list(self.cycle)
        if self.cycle:
            chain.append(self.cycle[0])
        for f, g in zip(chain, chain[1:]):
            if f.last != g.start:
                raise ZWordError(f"runs {f} and {g} merge into one alternating run")

    @property
    def is_periodic(self) -> bool:
        return bool(self.cycle)

    def iter_runs(self, limit: int) -> Iterator[CanonicalFactor]:
        """Yield up to *limit* runs: the stored runs, then the cycle repeated."""
        count = 0
        for run in self.runs:
            if count >= limit:
                return
            yield run
            count += 1
        while self.cycle:
            for run in self.cycle:
                if count >= limit:
                    return
                yield run
                count += 1

    def take(self, n: int) -> tuple[CanonicalFactor, ...]:
        return tuple(self.iter_runs(n))

    def counts(self, params: GroupParams) -> list[ExtendedInt]:
        """m_i(z) for i in 0..k; infinite for every run length in the cycle."""
        finite = factor_counts(self.runs, params)
        cyclic = {run.length for run in self.cycle}
        return [PLUS_INF if i in cyclic else ExtendedInt(0, finite[i]) for i in range(params.k + 1)]

    def to_word(self, n_runs: int | None = None) -> Word:
        runs = self.runs if n_runs is None else self.take(n_runs)
        return runs_word(runs)

    def __str__(self) -> str:
        head = " ".join(str(run) for run in self.runs)
        if self.cycle:
            return f"{head} ({' '.join(str(run) for run in self.cycle)})^inf".strip()
        return head + (" ..." if self.infinite else "")


def runs_word(runs: Sequence[CanonicalFactor]) -> Word:
    return artin_word(x for run in runs for x in run.letters())


def _runs_of(letters: Sequence[ArtinLetter], params: GroupParams) -> list[CanonicalFactor]:
    runs: list[CanonicalFactor] = []
    for letter in letters:
        if not letter.positive:
            raise ZWordError("Z-words contain positive letters only")
        if runs and runs[-1].last != letter.base:
            runs[-1] = CanonicalFactor(runs[-1].start, runs[-1].length + 1)
        else:
            runs.append(CanonicalFactor(letter.base, 1))
        if runs[-1].length >= params.k:
            raise ZWordError("word contains Delta as a product of consecutive letters")
    return runs


def z_decompose(w: Word, params: GroupParams, infinite: bool = False) -> ZWord:
    """Split a positive Delta-free word into its maximal alternating runs.

    Raises:
        ZWordError: on a negative letter or a run of length >= k.
    """
    if w.alphabet != ARTIN:
        raise ZWordError("Z-words are Artin words")
    return ZWord(tuple(_runs_of(w.letters, params)), infinite=infinite)


def periodic_zword(prefix: Word, cycle: Word, params: GroupParams) -> ZWord:
    """The infinite word prefix . cycle . cycle . ...

    The cycle is rotated so that the repetition starts on a run boundary.
    """
    letters = cycle.letters
    if not letters:
        raise ZWordError("the repeating part of an infinite Z-word must be non-empty")
    cut = next((i for i in range(len(letters)) if letters[i] == letters[(i + 1) % len(letters)]), None)
    if cut is None:
        raise ZWordError("the repeated word forms one infinite alternating run, which contains Delta")
    head = prefix.letters + letters[: cut + 1]
    tail = letters[cut + 1:] + letters[: cut + 1]
    return ZWord(
        tuple(_runs_of(head, params)),
        infinite=True,
        cycle=tuple(_runs_of(tail, params)),
    )


# ── Points ────────────────────────────────────────────────────────────────────

@dataclass(frozen=True, slots=True)
class OmegaPoint:
    p: tuple[ExtendedInt, ...]
    z: ZWord
    class_tag: str = GENERIC

    def __str__(self) -> str:
        if self.class_tag != GENERIC:
            return self.class_tag
        return f"p=({format_p_vector(self.p)}) z={self.z}"


def omega_point(p: Sequence[ExtendedInt | int], z: ZWord) -> OmegaPoint:
    """Build a point, collapsing (+inf, ..., +inf) and (-inf, ..., -inf) to their classes."""
    vec = tuple(_ext(x) for x in p)
    if vec and all(x == PLUS_INF for x in vec):
        return OmegaPoint(vec, ZWord(), PLUS_CLASS)
    if vec and all(x == MINUS_INF for x in vec):
        return OmegaPoint(vec, ZWord(), MINUS_CLASS)
    return OmegaPoint(vec, z, GENERIC)


def _checked_gaps(
    p: Sequence[ExtendedInt], counts: Sequence[ExtendedInt], params: GroupParams
) -> Iterator[tuple[int, ExtendedInt, ExtendedInt]]:
    """(i, p_i - p_{i-1}, m_{k-i}) for every i where the pair is not one infinity twice."""
    for i in range(1, params.k):
        if _same_infinity(p[i - 1], p[i]):
            continue
        yield i, _gap(p[i - 1], p[i]), counts[params.k - i]


def validate_omega(p: Sequence[ExtendedInt], z: ZWord, params: GroupParams) -> str:
    """Classify (p, z) as OMEGA0, BOUNDARY, PLUS_CLASS, MINUS_CLASS or INVALID."""
    p = tuple(_ext(x) for x in p)
    if len(p) != params.k:
        return INVALID
    if all(x == PLUS_INF for x in p):
        return PLUS_CLASS
    if all(x == MINUS_INF for x in p):
        return MINUS_CLASS
    counts = z.counts(params)
    for _, gap, m in _checked_gaps(p, counts, params):
        if gap < m:
            return INVALID
        if not z.infinite and gap != m:
            return INVALID
    if not z.infinite and all(x.is_finite for x in p):
        return OMEGA0
    return BOUNDARY


def classify(point: OmegaPoint, params: GroupParams) -> str:
    if point.class_tag != GENERIC:
        return point.class_tag
    return validate_omega(point.p, point.z, params)


def is_busemann(point: OmegaPoint, params: GroupParams) -> bool:
    """True iff the point is outside Omega_0 and every checked gap equals its run count."""
    tag = classify(point, params)
    if tag in (PLUS_CLASS, MINUS_CLASS):
        return True
    if tag == INVALID:
        raise InvalidPointError(f"not a valid boundary parameter: {point}")
    if tag == OMEGA0:
        return False
    if not point.z.is_periodic:
        raise PrefixTooShortError("run counts of a bare infinite prefix are undetermined")
    counts = point.z.counts(params)
    return all(gap == m for _, gap, m in _checked_gaps(point.p, counts, params))


# ── phi and psi ───────────────────────────────────────────────────────────────

def _pi_of_counts(counts: Sequence[int], params: GroupParams) -> tuple[int, ...]:
    entries = [0]
    for i in range(1, params.k):
        entries.append(entries[-1] + counts[params.k - i])
    return tuple(entries)


def _minus(x: Sequence[int], y: Sequence[int]) -> tuple[int, ...]:
    return tuple(a - b for a, b in zip(x, y))


def phi(w: Word, z: ZWord, params: GroupParams, max_runs: int = DEFAULT_MAX_RUNS) -> tuple[int, ...]:
    """pi(w^-1 z) - pi(z), or its eventual value along prefixes of an infinite z.

    For infinite z the value is accepted once one more full run leaves it
    unchanged and more than |w| + k letters of z precede that run.

    Raises:
        PrefixTooShortError: if the value does not settle within the available runs.
    """
    nf = normal_form(invert_word(w), params)
    counts = [0] * (params.k + 1)
    value = pi(nf, params)
    seen = 0
    limit = max_runs if z.is_periodic else len(z.runs)
    for run in z.iter_runs(limit):
        for letter in run.letters():
            nf = right_multiply(nf, letter, params)
        counts[run.length] += 1
        before = seen
        seen += run.length
        previous, value = value, _minus(pi(nf, params), _pi_of_counts(counts, params))
        if z.infinite and value == previous and before > len(w) + params.k:
            return value
    if not z.infinite:
        return value
    raise PrefixTooShortError(
        f"phi did not stabilise within {limit} runs of z for a word of length {len(w)}"
    )


def sum_pi_inverse(w: Word, params: GroupParams) -> int:
    return sum(pi(normal_form(invert_word(w), params), params))


def psi(point: OmegaPoint, w: Word, params: GroupParams, max_runs: int = DEFAULT_MAX_RUNS) -> int:
    if point.class_tag == PLUS_CLASS:
        return sum_pi_inverse(w, params)
    if point.class_tag == MINUS_CLASS:
        return -sum_pi_inverse(w, params)
    values = phi(w, point.z, params, max_runs)
    total = ExtendedInt()
    for p_i, phi_i in zip(point.p, values):
        total = total + abs(p_i + phi_i) - abs(p_i)
    if not total.is_finite:
        raise InvalidPointError(f"infinite parts failed to cancel for {point}")
    return total.finite


def distance_difference(x: Word, w: Word, params: GroupParams) -> int:
    """d(w, x) - d(e, x)."""
    return distance_between(w, x, params) - artin_distance(x, params)


# ── Approach sequences ────────────────────────────────────────────────────────

def delta_power(c: int, params: GroupParams) -> Word:
    delta = delta_word(params)
    return delta * c if c >= 0 else invert_word(delta) * (-c)


def omega0_element(point: OmegaPoint, params: GroupParams) -> Word:
    """The element z Delta^{p_0} whose distance function the point represents."""
    if classify(point, params) != OMEGA0:
        raise InvalidPointError(f"not an Omega_0 point: {point}")
    return runs_word(point.z.runs) + delta_power(point.p[0].finite, params)


def _anchor_index(p: Sequence[ExtendedInt]) -> int | None:
    """First non-negative entry, else last non-positive, whichever is finite first."""
    zero = ExtendedInt()
    first_nonneg = next((i for i, x in enumerate(p) if x >= zero), None)
    if first_nonneg is not None and p[first_nonneg].is_finite:
        return first_nonneg
    last_nonpos = next((i for i in reversed(range(len(p))) if p[i] <= zero), None)
    if last_nonpos is not None and p[last_nonpos].is_finite:
        return last_nonpos
    return None


def _anchored_vector(p: Sequence[ExtendedInt], gaps: Sequence[int]) -> list[int]:
    """Integer q with q_i - q_{i-1} = gaps[i-1], pinned to p at the anchor index."""
    k = len(p)
    q = [0] * k
    j = _anchor_index(p)
    if j is not None:
        q[j] = p[j].finite
    else:
        j = next(i for i, x in enumerate(p) if x == PLUS_INF) - 1
        q[j] = -(gaps[j] // 2)
    for i in range(j + 1, k):
        q[i] = q[i - 1] + gaps[i - 1]
    for i in range(j - 1, -1, -1):
        q[i] = q[i + 1] - gaps[i]
    return q


def approach_element(point: OmegaPoint, n: int, params: GroupParams) -> Word:
    """The n-th element x^n of the canonical sequence converging to the point.

    Busemann points use the first n runs of z with the gap counts they carry;
    other boundary points fall back to closure_approach_element, which pads
    with extra runs so the sequence still converges to the point.
    """
    if n < 1:
        raise ValueError("n must be at least 1")
    tag = classify(point, params)
    if tag == PLUS_CLASS:
        return prodd("a", "b", n)
    if tag == MINUS_CLASS:
        return prodd("A", "B", n)
    if tag == OMEGA0:
        return omega0_element(point, params)
    if tag == INVALID:
        raise InvalidPointError(f"not a valid boundary parameter: {point}")
    if not is_busemann(point, params):
        return closure_approach_element(point, n, params)

    runs = point.z.take(n)
    counts = factor_counts(runs, params)
    gaps = [counts[params.k - i] for i in range(1, params.k)]
    q = _anchored_vector(point.p, gaps)
    return runs_word(runs) + delta_power(q[0], params)


def closure_approach_element(point: OmegaPoint, n: int, params: GroupParams) -> Word:
    """An Omega_0 element near the point: the first n runs of z, padded so every
    finite gap of p is met exactly and every jump to infinity grows with n."""
    tag = classify(point, params)
    if tag in (PLUS_CLASS, MINUS_CLASS, OMEGA0):
        return approach_element(point, n, params)
    if tag == INVALID:
        raise InvalidPointError(f"not a valid boundary parameter: {point}")

    k = params.k
    runs = list(point.z.take(n))
    have = factor_counts(runs, params)
    counts_z = point.z.counts(params)
    targets: list[int] = []
    for i in range(1, k):
        length = k - i
        lower, upper = point.p[i - 1], point.p[i]
        if _same_infinity(lower, upper):
            target = have[length]
        else:
            gap = _gap(lower, upper)
            if gap.is_finite:
                target = gap.finite
            elif not counts_z[length].is_finite:
                target = have[length]
            else:
                target = n
        targets.append(max(target, have[length]))

    start = runs[-1].last if runs else "a"
    for i in range(1, k):
        length = k - i
        for _ in range(targets[i - 1] - have[length]):
            run = CanonicalFactor(start, length)
            runs.append(run)
            start = run.last

    q = _anchored_vector(point.p, targets)
    return runs_word(runs) + delta_power(q[0], params)


def detour_upper(
    point: OmegaPoint, n: int, params: GroupParams, max_runs: int = DEFAULT_MAX_RUNS
) -> int:
    """d(e, x^n) + psi(x^n): an upper bound on the detour cost along the approach sequence."""
    x = approach_element(point, n, params)
    return artin_distance(x, params) + psi(point, x, params, max_runs)


def separating_word(
    first: OmegaPoint,
    second: OmegaPoint,
    params: GroupParams,
    radius: int,
    max_runs: int = DEFAULT_MAX_RUNS,
) -> Word | None:
    """Shortlex-first word of length <= radius on which the two psi functions differ."""
    for length in range(radius + 1):
        for w in freely_reduced_words(ARTIN, params, length):
            if psi(first, w, params, max_runs) != psi(second, w, params, max_runs):
                return w
    return None


__all__ = [
    "BOUNDARY",
    "DEFAULT_MAX_RUNS",
    "ExtendedInt",
    "GENERIC",
    "INVALID",
    "InvalidPointError",
    "MINUS_CLASS",
    "MINUS_INF",
    "OMEGA0",
    "OmegaPoint",
    "PLUS_CLASS",
    "PLUS_INF",
    "PrefixTooShortError",
    "ZWord",
    "ZWordError",
    "approach_element",
    "classify",
    "closure_approach_element",
    "delta_power",
    "detour_upper",
    "distance_difference",
    "format_p_vector",
    "is_busemann",
    "omega0_element",
    "omega_point",
    "parse_extended",
    "parse_p_vector",
    "periodic_zword",
    "phi",
    "psi",
    "runs_word",
    "separating_word",
    "sum_pi_inverse",
    "validate_omega",
    "z_decompose",
]
