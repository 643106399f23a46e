"""CLI entry point: python -m artinmetric <command>

Commands:
  nf        Normal form of a word.
  dist      Distance from the identity, with the pi vector.
  geo       Geodesic criterion for a word.
  rep       A geodesic word for the element a word represents.
  convert   Rewrite a dual word over the Artin generators.
  psi       Evaluate a boundary function at a word.
  busemann  Classify a boundary point and tabulate its approach sequence.
  growth    Geodesic growth counts for the dual generators.
  verify    Run oracle checks and print a pass/fail summary.

Exit codes: 0 success, 1 domain error or failed verification, 2 usage error.
"""

from __future__ import annotations

import argparse
import sys
from typing import Sequence

from artinmetric.config import get_config
from artinmetric.delivery.cli_output import CSV, PLAIN, print_records, print_report, print_table
from artinmetric.utils.logging import bind_invocation, configure_logging, get_logger
from artinmetric.words import ARTIN, DUAL, DomainError, GroupParams, Word, format_word, parse_word

log = get_logger(__name__)


def _k_type(text: str) -> int:
    try:
        k = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"k must be an integer, got {text!r}") from None
    if k < 3:
        raise argparse.ArgumentTypeError(f"k must be at least 3, got {k}")
    return k


def _word(args: argparse.Namespace, params: GroupParams) -> Word:
    return parse_word(" ".join(args.word), args.gens, params)


def _csv(values) -> str:
    return ",".join(str(v) for v in values)


# ── Word commands ─────────────────────────────────────────────────────────────

def _cmd_nf(args: argparse.Namespace, params: GroupParams) -> int:
    w = _word(args, params)
    if args.gens == ARTIN:
        from artinmetric.garside import normal_form

        nf = normal_form(w, params)
        factors = " ".join(nf.factor_strings)
    else:
        from artinmetric.dual import dual_normal_form

        nf = dual_normal_form(w, params)
        factors = " ".join(f"s{i}" for i in nf.factors)
    print_records({"r": nf.r, "factors": factors}, args.format)
    return 0


def _cmd_dist(args: argparse.Namespace, params: GroupParams) -> int:
    w = _word(args, params)
    if args.gens == ARTIN:
        from artinmetric.garside import artin_distance, pi

        records = {"pi": _csv(pi(w, params)), "dist": artin_distance(w, params)}
    else:
        from artinmetric.dual import dual_distance
        from artinmetric.dual_horoboundary import dual_pi

        records = {"pi": _csv(dual_pi(w, params)), "dist": dual_distance(w, params)}
    print_records(records, args.format)
    return 0


def _cmd_geo(args: argparse.Namespace, params: GroupParams) -> int:
    w = _word(args, params)
    if args.gens == ARTIN:
        from artinmetric.garside import is_geodesic_artin, negg, poss

        records = {"poss": poss(w, params), "negg": negg(w, params), "geodesic": is_geodesic_artin(w, params)}
    else:
        from artinmetric.dual import dual_negg, dual_poss, is_geodesic_dual

        records = {
            "poss": dual_poss(w, params),
            "negg": dual_negg(w, params),
            "geodesic": is_geodesic_dual(w, params),
        }
    print_records(records, args.format)
    return 0


def _cmd_rep(args: argparse.Namespace, params: GroupParams) -> int:
    w = _word(args, params)
    if args.gens == ARTIN:
        from artinmetric.garside import geodesic_representative, normal_form

        rep = geodesic_representative(normal_form(w, params), params)
    else:
        from artinmetric.dual import dual_geodesic_representative, dual_normal_form

        rep = dual_geodesic_representative(dual_normal_form(w, params), params)
    print_records({"word": format_word(rep), "length": len(rep)}, args.format)
    return 0


def _cmd_convert(args: argparse.Namespace, params: GroupParams) -> int:
    from artinmetric.dual import dual_to_artin

    w = parse_word(" ".join(args.word), DUAL, params)
    print_records({"word": format_word(dual_to_artin(w, params))}, args.format)
    return 0


# ── Boundary commands ─────────────────────────────────────────────────────────

def _artin_point(args: argparse.Namespace, params: GroupParams):
    from artinmetric.horoboundary import omega_point, parse_p_vector, periodic_zword, z_decompose

    z_word = parse_word(args.z, ARTIN, params)
    if args.infinite or args.cycle:
        if args.cycle:
            z = periodic_zword(z_word, parse_word(args.cycle, ARTIN, params), params)
        else:
            z = periodic_zword(Word(ARTIN, ()), z_word, params)
    else:
        z = z_decompose(z_word, params)
    return omega_point(parse_p_vector(args.p), z)


def _dual_point(args: argparse.Namespace, params: GroupParams):
    from artinmetric.dual_horoboundary import dual_omega_point, dual_periodic_zword, dual_z_word
    from artinmetric.horoboundary import parse_p_vector

    z_word = parse_word(args.z, DUAL, params)
    if args.infinite or args.cycle:
        if args.cycle:
            z = dual_periodic_zword(z_word, parse_word(args.cycle, DUAL, params), params)
        else:
            z = dual_periodic_zword(Word(DUAL, ()), z_word, params)
    else:
        z = dual_z_word(z_word, params)
    return dual_omega_point(parse_p_vector(args.p), z)


def _cmd_psi(args: argparse.Namespace, params: GroupParams) -> int:
    config = get_config()
    w = _word(args, params)
    if args.gens == ARTIN:
        from artinmetric.horoboundary import classify, psi

        point = _artin_point(args, params)
        records = {"class": classify(point, params), "psi": psi(point, w, params, config.max_runs)}
    else:
        from artinmetric.dual_horoboundary import dual_classify, dual_psi

        point = _dual_point(args, params)
        records = {"class": dual_classify(point, params), "psi": dual_psi(point, w, params, config.max_runs)}
    print_records(records, args.format)
    return 0


def _cmd_busemann(args: argparse.Namespace, params: GroupParams) -> int:
    from artinmetric.horoboundary import BOUNDARY, MINUS_CLASS, PLUS_CLASS

    config = get_config()
    last = args.n if args.n is not None else config.approach_last
    if args.gens == ARTIN:
        from artinmetric.horoboundary import approach_element, classify, detour_upper, is_busemann

        point = _artin_point(args, params)
        tag = classify(point, params)
        approach, detour = approach_element, detour_upper
        busemann = is_busemann(point, params) if tag in (BOUNDARY, PLUS_CLASS, MINUS_CLASS) else False
    else:
        from artinmetric.dual_horoboundary import (
            dual_approach_element,
            dual_classify,
            dual_detour_upper,
            dual_is_busemann,
        )

        point = _dual_point(args, params)
        tag = dual_classify(point, params)
        approach, detour = dual_approach_element, dual_detour_upper
        busemann = dual_is_busemann(point, params) if tag in (BOUNDARY, PLUS_CLASS, MINUS_CLASS) else False

    print_records({"class": tag, "busemann": busemann}, args.format)
    if tag in (BOUNDARY, PLUS_CLASS, MINUS_CLASS):
        rows = []
        for n in range(config.approach_first, last + 1):
            x = approach(point, n, params)
            rows.append([n, detour(point, n, params, config.max_runs), format_word(x)])
        print_table(["n", "detour", "element"], rows)
    return 0


# ── Growth and verification ───────────────────────────────────────────────────

def _cmd_growth(args: argparse.Namespace, params: GroupParams) -> int:
    from artinmetric.growth import ENUM, METHODS, growth_table
    from artinmetric.oracle import BudgetExceededError, artin_sphere_sizes

    config = get_config()
    methods = list(METHODS) if args.method == "all" else [args.method]
    n = args.n
    if n is None:
        n = config.growth_order
        if ENUM in methods:
            n = min(n, config.enumeration_max_n)
    if ENUM in methods and n > config.enumeration_max_n:
        raise BudgetExceededError(
            f"enumeration up to n={n} exceeds the budget of {config.enumeration_max_n}"
        )
    table = growth_table(params.k, n, methods)
    header = ["n", *table[0].counts.keys(), "agree"]
    spheres: list[int] = []
    if args.spheres:
        spheres = artin_sphere_sizes(params.k, n, config.artin_max_radius)
        header.insert(-1, "artin_sphere")
    rows = []
    for row in table:
        values: list = [row.n, *row.counts.values()]
        if args.spheres:
            values.append(spheres[row.n])
        rows.append([*values, row.agree])
    print_table(header, rows)
    return 0 if all(row.agree for row in table) else 1


def _cmd_verify(args: argparse.Namespace, params: GroupParams) -> int:
    from artinmetric.delivery.file_writer import write_artifacts
    from artinmetric.verification import run_verification

    config = get_config()
    report = run_verification(config, params.k, args.gens, args.radius, args.what)
    print_report(report)
    if args.report is not None:
        json_path, md_path = write_artifacts(report, args.report or config.reports_dir)
        log.info("artifacts_written", json=json_path, markdown=md_path)
    return 0 if report.passed else 1


# ── Parser ────────────────────────────────────────────────────────────────────

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--k", type=_k_type, required=True, help="Coxeter parameter, at least 3")
    common.add_argument("--gens", choices=(ARTIN, DUAL), default=ARTIN)
    common.add_argument("--format", choices=(PLAIN, CSV), default=PLAIN)

    point = argparse.ArgumentParser(add_help=False)
    point.add_argument("--p", required=True, help="comma list; inf and -inf allowed")
    point.add_argument("--z", default="", help="positive word free of Delta")
    point.add_argument("--infinite", action="store_true", help="z repeats forever")
    point.add_argument("--cycle", default=None, help="explicit repeating tail after z")

    parser = argparse.ArgumentParser(
        prog="artinmetric",
        description="Word-metric geometry of dihedral Artin groups",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    for name, text in (
        ("nf", "Normal form of a word"),
        ("dist", "Distance from the identity"),
        ("geo", "Geodesic criterion"),
        ("rep", "Geodesic representative"),
    ):
        p = sub.add_parser(name, parents=[common], help=text)
        p.add_argument("word", nargs="*")

    p_convert = sub.add_parser("convert", parents=[common], help="Dual word to Artin word")
    p_convert.add_argument("--to", choices=(ARTIN,), default=ARTIN)
    p_convert.add_argument("word", nargs="*")

    p_psi = sub.add_parser("psi", parents=[common, point], help="Evaluate psi at a word")
    p_psi.add_argument("word", nargs="*")

    p_bus = sub.add_parser("busemann", parents=[common, point], help="Classify a boundary point")
    p_bus.add_argument("--n", type=int, default=None, help="last n of the approach table")

    p_growth = sub.add_parser("growth", parents=[common], help="Geodesic growth counts")
    p_growth.add_argument("--n", type=int, default=None, help="largest length (default: growth.order, capped at growth.enumeration_max_n when enum runs)")
    p_growth.add_argument("--method", choices=("closed", "enum", "automaton", "all"), default="all")
    p_growth.add_argument("--spheres", action="store_true", help="add Artin sphere sizes from BFS")

    p_verify = sub.add_parser("verify", parents=[common], help="Oracle checks")
    p_verify.add_argument("--radius", type=int, required=True)
    p_verify.add_argument(
        "--what",
        choices=("dist", "geo", "axioms", "presentation", "sigma", "omega0", "busemann", "density", "all"),
        default="all",
    )
    p_verify.add_argument(
        "--report",
        nargs="?",
        const="",
        default=None,
        help="write JSON and Markdown artifacts to DIR (default: output.reports_dir)",
    )
    return parser


_DISPATCH = {
    "nf": _cmd_nf,
    "dist": _cmd_dist,
    "geo": _cmd_geo,
    "rep": _cmd_rep,
    "convert": _cmd_convert,
    "psi": _cmd_psi,
    "busemann": _cmd_busemann,
    "growth": _cmd_growth,
    "verify": _cmd_verify,
}


def run(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)

    config = get_config()
    configure_logging(config.log_level, config.log_format)
    bind_invocation(args.command, args.k, args.gens)
    try:
        return _DISPATCH[args.command](args, GroupParams(args.k))
    except DomainError as exc:
        log.error("command_failed", error=str(exc))
        print(f"error: {exc}", file=sys.stderr)
        return 1


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
