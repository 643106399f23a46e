"""Verification coordinator: oracle checks plus sampled boundary properties.

Each stage is logged and folded into one VerificationReport.
"""

from __future__ import annotations

import random

from artinmetric.config import Config
from artinmetric.dual import delta_dual_word, dual_to_artin
from artinmetric.dual_horoboundary import (
    DualZWord,
    dual_approach_element,
    dual_detour_upper,
    dual_distance_difference,
    dual_omega0_element,
    dual_omega_point,
    dual_psi,
)
from artinmetric.garside import ArtinNormalForm, normal_form
from artinmetric.horoboundary import (
    MINUS_INF,
    PLUS_INF,
    ZWord,
    approach_element,
    detour_upper,
    distance_difference,
    omega0_element,
    omega_point,
    phi,
    psi,
    sum_pi_inverse,
)
from artinmetric.oracle import (
    cayley_ball,
    verify_distance_formula,
    verify_geodesic_criterion,
    verify_length_axioms,
)
from artinmetric.report import CheckResult, VerificationReport
from artinmetric.sampling import (
    random_artin_word,
    random_busemann_point,
    random_dual_boundary_point,
    random_dual_omega0_point,
    random_omega0_point,
    random_periodic_zword,
    random_strict_gap_point,
    random_zword,
)
from artinmetric.utils.logging import get_logger
from artinmetric.words import (
    ARTIN,
    DUAL,
    DualLetter,
    GroupParams,
    dual_word,
    format_word,
    freely_reduced_words,
    parse_word,
)

log = get_logger(__name__)

BALL_CHECKS = ("dist", "geo", "axioms")
PROPERTY_CHECKS = ("presentation", "sigma", "omega0", "busemann", "density")
WHAT_CHOICES = (*BALL_CHECKS, *PROPERTY_CHECKS, "all")


def verify_presentation_consistency(k: int) -> CheckResult:
    """Every dual relation sigma_i sigma_succ(i) maps to ab, and delta^k maps to Delta^2."""
    params = GroupParams(k)
    result = CheckResult("presentation")
    target = normal_form(parse_word("ab", ARTIN, params), params)
    for i in range(1, k + 1):
        pair = dual_word((DualLetter(i, 1), DualLetter(i % k + 1, 1)))
        got = normal_form(dual_to_artin(pair, params), params)
        result.record(got == target, f"s{i} s{i % k + 1} -> {got}")
    power = normal_form(dual_to_artin(delta_dual_word() * k, params), params)
    result.record(power == ArtinNormalForm(2, ()), f"delta^{k} -> {power}")
    return result


def verify_sigma_phi_identity(
    k: int, samples: int, seed: int, max_runs: int = 512
) -> CheckResult:
    """sum phi(w, z) = sum pi(w^-1) on random pairs, half with finite z and half periodic."""
    params = GroupParams(k)
    rng = random.Random(seed)
    result = CheckResult("sigma_phi")
    for i in range(samples):
        w = random_artin_word(rng, params, 8)
        z: ZWord = random_zword(rng, params) if i % 2 == 0 else random_periodic_zword(rng, params)
        total = sum(phi(w, z, params, max_runs))
        expected = sum_pi_inverse(w, params)
        result.record(total == expected, f"w={format_word(w)} z={z}: {total} != {expected}")
    return result


def verify_omega0_correspondence(
    k: int, points: int, radius: int, seed: int, max_runs: int = 512
) -> CheckResult:
    """psi of an Omega_0 point equals d(w, x) - d(e, x) for its element x, on both sides."""
    params = GroupParams(k)
    rng = random.Random(seed)
    result = CheckResult("omega0")
    artin_words = [w for n in range(radius + 1) for w in freely_reduced_words(ARTIN, params, n)]
    dual_words = [w for n in range(radius + 1) for w in freely_reduced_words(DUAL, params, n)]
    for _ in range(points):
        point = random_omega0_point(rng, params)
        x = omega0_element(point, params)
        for w in artin_words:
            got, want = psi(point, w, params, max_runs), distance_difference(x, w, params)
            result.record(got == want, f"{point} w={format_word(w)}: {got} != {want}")
        dpoint = random_dual_omega0_point(rng, params)
        dx = dual_omega0_element(dpoint, params)
        for w in dual_words:
            got, want = dual_psi(dpoint, w, params, max_runs), dual_distance_difference(dx, w, params)
            result.record(got == want, f"{dpoint} w={format_word(w)}: {got} != {want}")
    return result


def verify_busemann_detour(
    k: int,
    points: int,
    seed: int,
    first: int = 1,
    last: int = 30,
    max_runs: int = 512,
) -> CheckResult:
    """Busemann points reach detour 0 by n = 20 and hold it; strict-gap points stay >= 1 from n = 10."""
    params = GroupParams(k)
    rng = random.Random(seed)
    result = CheckResult("busemann_detour")
    reach = min(20, last)
    busemann = [omega_point([PLUS_INF] * k, ZWord()), omega_point([MINUS_INF] * k, ZWord())]
    busemann += [random_busemann_point(rng, params) for _ in range(max(points - 2, 0))]
    for point in busemann:
        values = [detour_upper(point, n, params, max_runs) for n in range(reach, last + 1)]
        result.record(all(v == 0 for v in values), f"{point}: detour {values}")
    for _ in range(max(points // 2, 10)):
        point = random_strict_gap_point(rng, params)
        values = [detour_upper(point, n, params, max_runs) for n in range(max(first, 10), last + 1)]
        result.record(all(v >= 1 for v in values), f"{point}: detour {values}")
    dual_points = [
        dual_omega_point((PLUS_INF, PLUS_INF), DualZWord()),
        dual_omega_point((MINUS_INF, MINUS_INF), DualZWord()),
    ]
    dual_points += [random_dual_boundary_point(rng, params) for _ in range(max(points - 2, 0))]
    for dpoint in dual_points:
        values = [dual_detour_upper(dpoint, n, params, max_runs) for n in range(reach, last + 1)]
        result.record(all(v == 0 for v in values), f"{dpoint}: detour {values}")
    return result


def verify_approach_density(
    k: int, points: int, seed: int, n: int = 60, radius: int = 2, max_runs: int = 512
) -> CheckResult:
    """d(w, x_n) - d(e, x_n) equals psi(w) on the radius ball once the approach element x_n is long.

    Covers Busemann points, strict-gap points (through their closure
    sequence) and dual boundary points.
    """
    params = GroupParams(k)
    rng = random.Random(seed)
    result = CheckResult("approach_density")
    artin_words = [w for m in range(radius + 1) for w in freely_reduced_words(ARTIN, params, m)]
    dual_words = [w for m in range(radius + 1) for w in freely_reduced_words(DUAL, params, m)]
    artin_points = [random_busemann_point(rng, params) for _ in range(points)]
    artin_points += [random_strict_gap_point(rng, params) for _ in range(points)]
    for point in artin_points:
        x = approach_element(point, n, params)
        for w in artin_words:
            got, want = distance_difference(x, w, params), psi(point, w, params, max_runs)
            result.record(got == want, f"{point} n={n} w={format_word(w)}: {got} != {want}")
    for _ in range(points):
        dpoint = random_dual_boundary_point(rng, params)
        dx = dual_approach_element(dpoint, n, params)
        for w in dual_words:
            got, want = dual_distance_difference(dx, w, params), dual_psi(dpoint, w, params, max_runs)
            result.record(got == want, f"{dpoint} n={n} w={format_word(w)}: {got} != {want}")
    return result


def _selected(what: str) -> tuple[str, ...]:
    if what == "all":
        return (*BALL_CHECKS, "presentation")
    if what not in WHAT_CHOICES:
        raise ValueError(f"unknown check {what!r}")
    return (what,)


def run_verification(config: Config, k: int, gens: str, radius: int, what: str = "all") -> VerificationReport:
    """Build the ball once if any ball check is selected, then run the selected checks."""
    params = GroupParams(k)
    selected = _selected(what)
    report = VerificationReport(k=k, gens=gens, radius=radius)
    log.info("verification_start", k=k, gens=gens, radius=radius, checks=list(selected))

    ball = None
    if any(name in BALL_CHECKS for name in selected):
        ball = cayley_ball(params, gens, radius, config.max_radius(gens))

    for name in selected:
        if name == "dist":
            check = verify_distance_formula(ball)  # type: ignore[arg-type]
        elif name == "geo":
            check = verify_geodesic_criterion(ball)  # type: ignore[arg-type]
        elif name == "axioms":
            check = verify_length_axioms(ball)  # type: ignore[arg-type]
        elif name == "presentation":
            check = verify_presentation_consistency(k)
        elif name == "sigma":
            check = verify_sigma_phi_identity(k, config.sample_pairs, config.sample_seed, config.max_runs)
        elif name == "omega0":
            check = verify_omega0_correspondence(
                k, config.sample_omega0_points, min(radius, 3), config.sample_seed, config.max_runs
            )
        elif name == "density":
            check = verify_approach_density(k, config.sample_points, config.sample_seed, max_runs=config.max_runs)
        else:
            check = verify_busemann_detour(
                k, config.sample_points, config.sample_seed,
                config.approach_first, config.approach_last, config.max_runs,
            )
        report.checks.append(check)
        log.info("check_done", name=check.name, checked=check.checked, failures=check.failures)
        if not check.passed:
            log.warning("check_failed", name=check.name, counterexamples=check.counterexamples)

    log.info("verification_done", passed=report.passed, checked=report.checked)
    return report


__all__ = [
    "WHAT_CHOICES",
    "run_verification",
    "verify_approach_density",
    "verify_busemann_detour",
    "verify_omega0_correspondence",
    "verify_presentation_consistency",
    "verify_sigma_phi_identity",
]
