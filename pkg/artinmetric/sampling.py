"""Seeded random generators for words, Z-words and boundary points."""

from __future__ import annotations

import random

from artinmetric.dual_horoboundary import DualOmegaPoint, DualZWord, dual_omega_point
from artinmetric.garside import CanonicalFactor, factor_counts
from artinmetric.horoboundary import (
    MINUS_INF,
    PLUS_INF,
    ExtendedInt,
    OmegaPoint,
    ZWord,
    omega_point,
)
from artinmetric.words import (
    ARTIN,
    GroupParams,
    Word,
    generators,
    succ,
)


def random_word(rng: random.Random, alphabet: str, params: GroupParams, length: int) -> Word:
    """A uniformly grown freely reduced word of exactly *length* letters."""
    gens = generators(alphabet, params)
    letters: list = []
    while len(letters) < length:
        g = rng.choice(gens)
        if letters and letters[-1] == g.inverse():
            continue
        letters.append(g)
    return Word(alphabet, tuple(letters))


def _chain(rng: random.Random, params: GroupParams, count: int, start: str) -> list[CanonicalFactor]:
    runs = []
    for _ in range(count):
        run = CanonicalFactor(start, rng.randint(1, params.k - 1))
        runs.append(run)
        start = run.last
    return runs


def random_zword(rng: random.Random, params: GroupParams, max_runs: int = 4) -> ZWord:
    runs = _chain(rng, params, rng.randint(0, max_runs), rng.choice("ab"))
    return ZWord(tuple(runs))


def random_periodic_zword(
    rng: random.Random, params: GroupParams, max_prefix: int = 2, max_cycle: int = 2
) -> ZWord:
    """Prefix runs followed by a cycle of runs; falls back to a one-letter cycle."""
    prefix = _chain(rng, params, rng.randint(0, max_prefix), rng.choice("ab"))
    start = prefix[-1].last if prefix else rng.choice("ab")
    for _ in range(50):
        cycle = _chain(rng, params, rng.randint(1, max_cycle), start)
        if cycle[-1].last == start:
            return ZWord(tuple(prefix), infinite=True, cycle=tuple(cycle))
    return ZWord(tuple(prefix), infinite=True, cycle=(CanonicalFactor(start, 1),))


def _finite_p(start: int, counts: list[int], params: GroupParams) -> list[int]:
    p = [start]
    for i in range(1, params.k):
        p.append(p[-1] + counts[params.k - i])
    return p


def random_omega0_point(rng: random.Random, params: GroupParams) -> OmegaPoint:
    z = random_zword(rng, params)
    p = _finite_p(rng.randint(-3, 3), factor_counts(z.runs, params), params)
    return omega_point(p, z)


def _cyclic_indices(z: ZWord, params: GroupParams) -> set[int]:
    """Indices i whose gap p_i - p_{i-1} is paired with an infinite run count."""
    return {params.k - run.length for run in z.cycle}


def _blocks(z: ZWord, params: GroupParams) -> list[tuple[int, int]]:
    """Finite blocks [lo, hi] admissible for a Busemann point over z."""
    k = params.k
    infinite = _cyclic_indices(z, params)
    out = []
    for lo in range(k):
        if lo > 0 and lo not in infinite:
            continue
        for hi in range(lo, k):
            if any(i in infinite for i in range(lo + 1, hi + 1)):
                break
            if hi == k - 1 or hi + 1 in infinite:
                out.append((lo, hi))
    return out


def _block_point(
    z: ZWord, lo: int, hi: int, start: int, params: GroupParams, bump: tuple[int, int] | None = None
) -> OmegaPoint:
    counts = factor_counts(z.runs, params)
    p: list[ExtendedInt] = [MINUS_INF] * lo
    value = start
    p.append(ExtendedInt(0, value))
    for i in range(lo + 1, hi + 1):
        value += counts[params.k - i] + (bump[1] if bump and bump[0] == i else 0)
        p.append(ExtendedInt(0, value))
    p.extend([PLUS_INF] * (params.k - 1 - hi))
    return omega_point(p, z)


def random_busemann_point(rng: random.Random, params: GroupParams) -> OmegaPoint:
    """A Busemann point over an eventually periodic z: a finite block or a pure split."""
    z = random_periodic_zword(rng, params)
    options: list[tuple[str, int, int]] = [("block", lo, hi) for lo, hi in _blocks(z, params)]
    options += [("split", t, t) for t in sorted(_cyclic_indices(z, params))]
    kind, lo, hi = rng.choice(options)
    if kind == "split":
        p = [MINUS_INF] * lo + [PLUS_INF] * (params.k - lo)
        return omega_point(p, z)
    return _block_point(z, lo, hi, rng.randint(-2, 2), params)


def random_strict_gap_point(rng: random.Random, params: GroupParams) -> OmegaPoint:
    """A valid non-Busemann point: a finite block with one gap above its run count."""
    while True:
        z = random_periodic_zword(rng, params)
        blocks = [(lo, hi) for lo, hi in _blocks(z, params) if hi > lo]
        if blocks:
            break
    lo, hi = rng.choice(blocks)
    bump = (rng.randint(lo + 1, hi), rng.randint(1, 2))
    return _block_point(z, lo, hi, rng.randint(-2, 2), params, bump)


# ── Dual ──────────────────────────────────────────────────────────────────────

def _dual_chain(rng: random.Random, params: GroupParams, count: int, previous: int | None) -> list[int]:
    out: list[int] = []
    for _ in range(count):
        choices = [i for i in range(1, params.k + 1) if previous is None or i != succ(previous, params.k)]
        previous = rng.choice(choices)
        out.append(previous)
    return out


def random_dual_zword(rng: random.Random, params: GroupParams, max_letters: int = 5) -> DualZWord:
    return DualZWord(tuple(_dual_chain(rng, params, rng.randint(0, max_letters), None)))


def random_dual_periodic_zword(rng: random.Random, params: GroupParams) -> DualZWord:
    prefix = _dual_chain(rng, params, rng.randint(0, 3), None)
    while True:
        cycle = _dual_chain(rng, params, rng.randint(1, 3), prefix[-1] if prefix else None)
        if cycle[0] != succ(cycle[-1], params.k):
            return DualZWord(tuple(prefix), infinite=True, cycle=tuple(cycle))


def random_dual_omega0_point(rng: random.Random, params: GroupParams) -> DualOmegaPoint:
    z = random_dual_zword(rng, params)
    c = rng.randint(-3, 3)
    return dual_omega_point((c, c + len(z.letters)), z)


def random_dual_boundary_point(rng: random.Random, params: GroupParams) -> DualOmegaPoint:
    z = random_dual_periodic_zword(rng, params)
    c = ExtendedInt(0, rng.randint(-2, 2))
    p = rng.choice([(c, PLUS_INF), (MINUS_INF, c), (MINUS_INF, PLUS_INF)])
    return dual_omega_point(p, z)


def random_artin_word(rng: random.Random, params: GroupParams, max_length: int) -> Word:
    return random_word(rng, ARTIN, params, rng.randint(0, max_length))
