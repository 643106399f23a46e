"""Normal forms and distances for the dual presentation on sigma_1 .. sigma_k.

delta = sigma_i sigma_succ(i) for every i, and sigma_i delta = delta sigma_{i+2}.
A dual normal form is delta^r followed by atom indices with no adjacent pair
(i, succ(i)).
"""

from __future__ import annotations

from dataclasses import dataclass

from artinmetric.words import (
    A_INV,
    ARTIN,
    B_INV,
    DUAL,
    DualLetter,
    GroupParams,
    Word,
    dual_word,
    free_reduce,
    invert_word,
    is_freely_reduced,
    prodd,
    shift_index,
    succ,
)


@dataclass(frozen=True, slots=True)
class DualNormalForm:
    r: int
    factors: tuple[int, ...] = ()

    def __str__(self) -> str:
        return f"r={self.r} factors=[{' '.join(f's{i}' for i in self.factors)}]"


DUAL_IDENTITY = DualNormalForm(0, ())


def _shift_all(factors: tuple[int, ...], offset: int, params: GroupParams) -> tuple[int, ...]:
    return tuple(shift_index(i, offset, params.k) for i in factors)


def dual_right_multiply(nf: DualNormalForm, g: DualLetter, params: GroupParams) -> DualNormalForm:
    """Left normal form of nf * g.

    (a) g positive completing delta with the last atom: r+1, atoms shift by +2;
    (b) g positive otherwise: appended;
    (c) g negative cancelling the last atom: removed;
    (d) g negative otherwise: r-1, atoms shift by -2, then index(g)-1 appended.
    """
    k = params.k
    last = nf.factors[-1] if nf.factors else None

    if g.positive:
        if last is not None and g.index == succ(last, k):
            return DualNormalForm(nf.r + 1, _shift_all(nf.factors[:-1], 2, params))
        return DualNormalForm(nf.r, nf.factors + (g.index,))

    if last is not None and last == g.index:
        return DualNormalForm(nf.r, nf.factors[:-1])
    return DualNormalForm(
        nf.r - 1,
        _shift_all(nf.factors, -2, params) + (shift_index(g.index, -1, k),),
    )


def dual_normal_form(w: Word, params: GroupParams) -> DualNormalForm:
    if w.alphabet != DUAL:
        raise ValueError("dual_normal_form expects a dual word")
    nf = DUAL_IDENTITY
    for letter in w.letters:
        nf = dual_right_multiply(nf, letter, params)  # type: ignore[arg-type]
    return nf


def delta_dual_word() -> Word:
    return dual_word((DualLetter(1, 1), DualLetter(2, 1)))


def dual_nf_to_word(nf: DualNormalForm, params: GroupParams) -> Word:
    delta = delta_dual_word()
    power = delta * nf.r if nf.r >= 0 else invert_word(delta) * (-nf.r)
    return power + dual_word(DualLetter(i, 1) for i in nf.factors)


def is_valid_dual_normal_form(nf: DualNormalForm, params: GroupParams) -> bool:
    if any(not 1 <= i <= params.k for i in nf.factors):
        return False
    return all(j != succ(i, params.k) for i, j in zip(nf.factors, nf.factors[1:]))


def _as_dual_nf(x: Word | DualNormalForm, params: GroupParams) -> DualNormalForm:
    return x if isinstance(x, DualNormalForm) else dual_normal_form(x, params)


def dual_distance(x: Word | DualNormalForm, params: GroupParams) -> int:
    """|r| + |r + s| with s the number of atoms."""
    nf = _as_dual_nf(x, params)
    return abs(nf.r) + abs(nf.r + len(nf.factors))


def dual_distance_between(y: Word, x: Word, params: GroupParams) -> int:
    return dual_distance(invert_word(y) + x, params)


# ── Geodesic criterion ────────────────────────────────────────────────────────

def dual_poss(y: Word, params: GroupParams) -> int:
    """2 if a positive pair multiplies to delta, else 1 if any positive letter, else 0."""
    letters = y.letters
    for x, nxt in zip(letters, letters[1:]):
        if x.positive and nxt.positive and nxt.index == succ(x.index, params.k):
            return 2
    return 1 if any(x.positive for x in letters) else 0


def dual_negg(y: Word, params: GroupParams) -> int:
    """Mirror of dual_poss: sigma_succ(i)^-1 sigma_i^-1 multiplies to delta^-1."""
    letters = y.letters
    for x, nxt in zip(letters, letters[1:]):
        if not x.positive and not nxt.positive and x.index == succ(nxt.index, params.k):
            return 2
    return 1 if any(not x.positive for x in letters) else 0


def is_geodesic_dual(y: Word, params: GroupParams) -> bool:
    return is_freely_reduced(y) and dual_poss(y, params) + dual_negg(y, params) <= 2


def dual_geodesic_representative(nf: DualNormalForm, params: GroupParams) -> Word:
    """A geodesic dual word for nf.

    Each delta^-1 travels right over the letters before the first positive
    atom (shifting their indices by +2) and absorbs it: delta^-1 sigma_i is
    sigma_{i+1}^-1.  Leftover delta^-1 stay in front as sigma_2^-1 sigma_1^-1.
    """
    if nf.r >= 0:
        return dual_nf_to_word(nf, params)

    letters = [DualLetter(i, 1) for i in nf.factors]
    pending = -nf.r
    while pending:
        j = next((i for i, x in enumerate(letters) if x.positive), None)
        if j is None:
            break
        for i in range(j):
            letters[i] = DualLetter(shift_index(letters[i].index, 2, params.k), letters[i].sign)
        letters[j] = DualLetter(succ(letters[j].index, params.k), -1)
        pending -= 1

    return invert_word(delta_dual_word()) * pending + dual_word(letters)


# ── Conversion to the Artin presentation ──────────────────────────────────────

def sigma_to_artin(index: int, params: GroupParams) -> Word:
    """sigma_1 = a, sigma_2 = b, and for j >= 3 the alternating products below."""
    if not 1 <= index <= params.k:
        raise ValueError(f"dual index {index} out of range 1..{params.k}")
    if index == 1:
        return prodd("a", "b", 1)
    if index == 2:
        return prodd("b", "a", 1)
    head = prodd(B_INV, A_INV, index - 2)
    tail = prodd("a", "b", index - 1) if index % 2 == 1 else prodd("b", "a", index - 1)
    return head + tail


def dual_to_artin(w: Word, params: GroupParams) -> Word:
    if w.alphabet != DUAL:
        raise ValueError("dual_to_artin expects a dual word")
    out = Word(ARTIN, ())
    for letter in w.letters:
        image = sigma_to_artin(letter.index, params)  # type: ignore[union-attr]
        out = out + (image if letter.positive else invert_word(image))
    return free_reduce(out)
