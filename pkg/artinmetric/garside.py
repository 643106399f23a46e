"""Left Garside normal forms for the Artin presentation of A_k.

A normal form is Delta^r w_1 ... w_n where each w_i is a canonical factor (a
positive alternating word of length 1..k-1) and the last letter of w_i equals
the first letter of w_{i+1}.  Everything here is a pure function over frozen
dataclasses.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from artinmetric.words import (
    ARTIN,
    ArtinLetter,
    GroupParams,
    Word,
    artin_word,
    invert_word,
    is_freely_reduced,
    other_base,
    prodd,
)


@dataclass(frozen=True, slots=True)
class CanonicalFactor:
    """The alternating positive word prodd(start, other(start); length)."""

    start: str
    length: int

    @property
    def last(self) -> str:
        return self.start if self.length % 2 == 1 else other_base(self.start)

    def letters(self) -> tuple[ArtinLetter, ...]:
        return prodd(self.start, other_base(self.start), self.length).letters

    def __str__(self) -> str:
        return "".join(str(letter) for letter in self.letters())


@dataclass(frozen=True, slots=True)
class ArtinNormalForm:
    r: int
    factors: tuple[CanonicalFactor, ...] = ()

    @property
    def factor_strings(self) -> list[str]:
        return [str(f) for f in self.factors]

    def __str__(self) -> str:
        return f"r={self.r} factors=[{' '.join(self.factor_strings)}]"


IDENTITY = ArtinNormalForm(0, ())


# ── tau: conjugation by Delta ─────────────────────────────────────────────────

def tau(f: CanonicalFactor, params: GroupParams) -> CanonicalFactor:
    """Delta^-1 f Delta: swaps a and b when k is odd, identity when k is even."""
    if params.k % 2 == 0:
        return f
    return CanonicalFactor(other_base(f.start), f.length)


def _tau_all(factors: Sequence[CanonicalFactor], params: GroupParams) -> tuple[CanonicalFactor, ...]:
    if params.k % 2 == 0:
        return tuple(factors)
    return tuple(tau(f, params) for f in factors)


def _tau_letters(letters: Sequence[ArtinLetter], params: GroupParams) -> tuple[ArtinLetter, ...]:
    if params.k % 2 == 0:
        return tuple(letters)
    return tuple(ArtinLetter(other_base(x.base), x.sign) for x in letters)


def delta_word(params: GroupParams) -> Word:
    return prodd("a", "b", params.k)


def _delta_times_inverse(base: str, params: GroupParams) -> CanonicalFactor:
    """Delta g^-1 for the positive generator g: Delta written to end in g, minus g."""
    start = base if params.k % 2 == 1 else other_base(base)
    return CanonicalFactor(start, params.k - 1)


# ── Normal forms ──────────────────────────────────────────────────────────────

def right_multiply(nf: ArtinNormalForm, g: ArtinLetter, params: GroupParams) -> ArtinNormalForm:
    """Left normal form of nf * g, by the four-case analysis.

    (i)   g positive and extends the last factor; reaching length k forms a
          Delta which moves left, applying tau to the remaining factors;
    (ii)  g positive, new factor of length one;
    (iii) g negative and cancels the last letter of the last factor;
    (iv)  g negative otherwise: r drops by one, tau on every factor, and the
          factor Delta g^-1 of length k-1 is appended.
    """
    factors = nf.factors
    last = factors[-1] if factors else None

    if g.positive:
        if last is not None and last.last != g.base:
            grown = CanonicalFactor(last.start, last.length + 1)
            if grown.length == params.k:
                return ArtinNormalForm(nf.r + 1, _tau_all(factors[:-1], params))
            return ArtinNormalForm(nf.r, factors[:-1] + (grown,))
        return ArtinNormalForm(nf.r, factors + (CanonicalFactor(g.base, 1),))

    if last is not None and last.last == g.base:
        if last.length == 1:
            return ArtinNormalForm(nf.r, factors[:-1])
        return ArtinNormalForm(nf.r, factors[:-1] + (CanonicalFactor(last.start, last.length - 1),))

    return ArtinNormalForm(
        nf.r - 1,
        _tau_all(factors, params) + (_delta_times_inverse(g.base, params),),
    )


def normal_form(w: Word, params: GroupParams) -> ArtinNormalForm:
    if w.alphabet != ARTIN:
        raise ValueError("normal_form expects an Artin word")
    nf = IDENTITY
    for letter in w.letters:
        nf = right_multiply(nf, letter, params)  # type: ignore[arg-type]
    return nf


def nf_to_word(nf: ArtinNormalForm, params: GroupParams) -> Word:
    delta = delta_word(params)
    power = delta * nf.r if nf.r >= 0 else invert_word(delta) * (-nf.r)
    letters = [x for f in nf.factors for x in f.letters()]
    return power + artin_word(letters)


def is_valid_normal_form(nf: ArtinNormalForm, params: GroupParams) -> bool:
    """Factor lengths in 1..k-1 and the junction condition between neighbours."""
    for f in nf.factors:
        if f.start not in ("a", "b") or not 1 <= f.length <= params.k - 1:
            return False
    return all(f.last == g.start for f, g in zip(nf.factors, nf.factors[1:]))


def _as_nf(x: Word | ArtinNormalForm, params: GroupParams) -> ArtinNormalForm:
    return x if isinstance(x, ArtinNormalForm) else normal_form(x, params)


# ── pi and the distance formula ───────────────────────────────────────────────

def factor_counts(factors: Sequence[CanonicalFactor], params: GroupParams) -> list[int]:
    """counts[i] is the number of factors of length i, for i in 0..k."""
    counts = [0] * (params.k + 1)
    for f in factors:
        counts[f.length] += 1
    return counts


def pi(x: Word | ArtinNormalForm, params: GroupParams) -> tuple[int, ...]:
    """(m_k, m_k + m_{k-1}, ..., m_k + ... + m_1) with m_k = r."""
    nf = _as_nf(x, params)
    counts = factor_counts(nf.factors, params)
    entries = [nf.r]
    for i in range(1, params.k):
        entries.append(entries[-1] + counts[params.k - i])
    return tuple(entries)


def artin_distance(x: Word | ArtinNormalForm, params: GroupParams) -> int:
    return sum(abs(p) for p in pi(x, params))


def distance_between(y: Word, x: Word, params: GroupParams) -> int:
    """d(y, x) = d(e, y^-1 x)."""
    return artin_distance(invert_word(y) + x, params)


# ── Geodesics ─────────────────────────────────────────────────────────────────

def _longest_alternating_run(u: Word, positive: bool, params: GroupParams) -> int:
    best = run = 0
    prev: ArtinLetter | None = None
    for letter in u.letters:
        if letter.positive != positive:
            run = 0
        elif run and prev is not None and prev.base != letter.base:
            run += 1
        else:
            run = 1
        prev = letter  # type: ignore[assignment]
        best = max(best, run)
    return min(best, params.k)


def poss(u: Word, params: GroupParams) -> int:
    """Length of the longest contiguous positive alternating subword, capped at k."""
    return _longest_alternating_run(u, True, params)


def negg(u: Word, params: GroupParams) -> int:
    return _longest_alternating_run(u, False, params)


def is_geodesic_artin(u: Word, params: GroupParams) -> bool:
    return is_freely_reduced(u) and poss(u, params) + negg(u, params) <= params.k


def geodesic_representative(nf: ArtinNormalForm, params: GroupParams) -> Word:
    """A geodesic word for nf.

    For r >= 0 the normal form itself is geodesic.  Otherwise each Delta^-1 is
    pushed right (tau on what it crosses) onto the leftmost longest positive
    factor, whose length i becomes a negative word of length k - i.  Any
    Delta^-1 left over is written as a negative block of length k.
    """
    if nf.r >= 0:
        return nf_to_word(nf, params)

    blocks: list[tuple[bool, tuple[ArtinLetter, ...]]] = [(True, f.letters()) for f in nf.factors]
    pending = -nf.r
    while pending:
        positive = [(len(letters), -i) for i, (pos, letters) in enumerate(blocks) if pos]
        if not positive:
            break
        _, neg_j = max(positive)
        j = -neg_j
        for i in range(j):
            pos, letters = blocks[i]
            blocks[i] = (pos, _tau_letters(letters, params))
        letters = blocks[j][1]
        start = other_base(letters[-1].base)
        complement = prodd(start, other_base(start), params.k - len(letters))
        blocks[j] = (False, invert_word(complement).letters)
        pending -= 1

    prefix = invert_word(delta_word(params)) * pending
    return prefix + artin_word(x for _, letters in blocks for x in letters)


def apply_relation(w: Word, position: int, params: GroupParams) -> Word:
    """Rewrite the Delta (or Delta^-1) occurrence starting at *position* into its other spelling.

    Raises:
        ValueError: if no spelling of Delta^{+-1} starts at *position*.
    """
    k = params.k
    segment = w.letters[position:position + k]
    spellings = [prodd("a", "b", k), prodd("b", "a", k)]
    spellings += [invert_word(s) for s in spellings]
    pairs = {spellings[0].letters: spellings[1], spellings[1].letters: spellings[0],
             spellings[2].letters: spellings[3], spellings[3].letters: spellings[2]}
    replacement = pairs.get(tuple(segment))
    if replacement is None:
        raise ValueError(f"no relator occurrence at position {position}")
    return w[:position] + replacement + w[position + k:]
