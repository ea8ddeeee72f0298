"""Command-line interface.

Six subcommands share one plumbing style: build or load a graph, compute,
print to stdout. Output is deterministic for a fixed argument vector, JSON
keys are emitted in fixed order, and nothing is ever written to stdout except
the result itself, so runs can be piped and diffed.

Exit codes: 0 success, 1 usage error, 2 computation error, 3 verification
failure (a `verify` sweep or a `fit` holdout that found a mismatch).
"""

import argparse
import json
import sys
from dataclasses import dataclass
from fractions import Fraction
from typing import IO

from . import family_fit, generators
from .closed_forms import verify_against_oracle
from .distances import distance_distribution
from .errors import DistpolyError, UsageError
from .graph import Graph, format_edge_list, read_edge_list
from .hosoya import hosoya_polynomial, wiener_index

_FAMILIES = ("jahangir", "cycle", "path", "star", "complete", "wheel", "random")
_MIN_M = {
    "jahangir": 3,
    "cycle": 3,
    "wheel": 3,
    "path": 1,
    "star": 1,
    "complete": 1,
    "random": 1,
}


@dataclass(frozen=True)
class RunConfig:
    """A fully validated invocation; `run` never re-checks preconditions."""

    command: str
    fmt: str = "text"
    input_path: str | None = None
    family: str | None = None
    n: int | None = None
    m: int | None = None
    p: Fraction | None = None
    seed: int | None = None
    m_range: tuple[int, int] | None = None
    samples: tuple[int, ...] = ()
    degree: int | None = None
    holdout: tuple[int, ...] = ()


class _Parser(argparse.ArgumentParser):
    """argparse that raises instead of exiting, so errors map to exit code 1."""

    def error(self, message: str) -> None:
        raise UsageError(message)


def _add_format(sub: argparse.ArgumentParser) -> None:
    sub.add_argument("--format", choices=("text", "json"), default="text")


def _add_graph_source(sub: argparse.ArgumentParser) -> None:
    sub.add_argument("--input", metavar="FILE", help="read graph from an edge-list file")
    sub.add_argument("--family", choices=_FAMILIES, help="generate the graph instead (default jahangir)")
    sub.add_argument("--n", type=int, help="spoke spacing, jahangir only (default 5)")
    sub.add_argument("--m", type=int, help="family size parameter")
    sub.add_argument("--p", metavar="PROB", help="edge probability, random only (e.g. 0.1 or 1/10)")
    sub.add_argument("--seed", type=int, help="RNG seed, random only (default 0)")


def _build_parser() -> _Parser:
    parser = _Parser(prog="distpoly", description="distance distributions, Hosoya polynomials, and Wiener indices")
    subs = parser.add_subparsers(dest="command", required=True, metavar="command")
    for name, help_text in (
        ("generate", "emit a graph as an edge list"),
        ("distances", "distance distribution and diameter"),
        ("hosoya", "Hosoya polynomial"),
        ("wiener", "Wiener index"),
    ):
        sub = subs.add_parser(name, help=help_text)
        _add_graph_source(sub)
        _add_format(sub)
    verify = subs.add_parser("verify", help="check jahangir closed forms against brute force")
    verify.add_argument("--n", type=int, help="must be 5 (the only n with closed forms here)")
    verify.add_argument("--m", type=int, help="single parameter value to check")
    verify.add_argument("--m-range", metavar="A..B", help="inclusive parameter sweep")
    _add_format(verify)
    fit = subs.add_parser("fit", help="re-derive per-distance count formulas by interpolation")
    fit.add_argument("--family", choices=_FAMILIES, help="family to fit (default jahangir)")
    fit.add_argument("--n", type=int, help="spoke spacing, jahangir only (default 5)")
    fit.add_argument("--samples", required=True, metavar="LIST", help="comma-separated parameter values to fit on")
    fit.add_argument("--degree", required=True, type=int, help="polynomial degree to fit")
    fit.add_argument("--holdout", metavar="LIST", help="comma-separated parameter values to validate on")
    _add_format(fit)
    return parser


def _parse_int_list(text: str, flag: str) -> tuple[int, ...]:
    values = []
    for token in text.split(","):
        token = token.strip()
        try:
            values.append(int(token))
        except ValueError:
            raise UsageError(f"{flag} expects comma-separated integers, got {token!r}") from None
    if not values:
        raise UsageError(f"{flag} must not be empty")
    return tuple(values)


def _parse_range(text: str, flag: str) -> tuple[int, int]:
    lo_text, sep, hi_text = text.partition("..")
    if not sep:
        raise UsageError(f"{flag} expects A..B, got {text!r}")
    try:
        lo, hi = int(lo_text), int(hi_text)
    except ValueError:
        raise UsageError(f"{flag} expects A..B with integers, got {text!r}") from None
    if lo > hi:
        raise UsageError(f"{flag} range {text!r} is empty (start exceeds end)")
    return lo, hi


def _check_m(family: str, m: int, flag: str) -> None:
    floor = _MIN_M[family]
    if m < floor:
        raise UsageError(f"{flag} must be at least {floor} for the {family} family, got {m}")


def _finalize_graph_source(ns: argparse.Namespace, command: str) -> RunConfig:
    family_flags = [
        flag
        for flag, value in (("--family", ns.family), ("--n", ns.n), ("--m", ns.m), ("--p", ns.p), ("--seed", ns.seed))
        if value is not None
    ]
    if ns.input is not None:
        if family_flags:
            raise UsageError(f"--input conflicts with {', '.join(family_flags)}")
        return RunConfig(command=command, fmt=ns.format, input_path=ns.input)
    family = ns.family if ns.family is not None else "jahangir"
    if ns.m is None:
        raise UsageError("--m is required when no --input file is given")
    _check_m(family, ns.m, "--m")
    n = ns.n
    if family == "jahangir":
        if n is None:
            n = 5
        elif n < 1:
            raise UsageError(f"--n must be at least 1, got {n}")
    elif n is not None:
        raise UsageError(f"--n applies to the jahangir family only, not {family}")
    p = None
    seed = None
    if family == "random":
        if ns.p is None:
            raise UsageError("--p is required for the random family")
        try:
            p = Fraction(ns.p)
        except (ValueError, ZeroDivisionError):
            raise UsageError(f"--p expects a probability, got {ns.p!r}") from None
        if not 0 < p <= 1:
            raise UsageError(f"--p must be in (0, 1], got {ns.p}")
        seed = ns.seed if ns.seed is not None else 0
    else:
        if ns.p is not None:
            raise UsageError(f"--p applies to the random family only, not {family}")
        if ns.seed is not None:
            raise UsageError(f"--seed applies to the random family only, not {family}")
    return RunConfig(command=command, fmt=ns.format, family=family, n=n, m=ns.m, p=p, seed=seed)


def _finalize_verify(ns: argparse.Namespace) -> RunConfig:
    if ns.n is not None and ns.n != 5:
        raise UsageError(f"verify supports --n 5 only, got {ns.n}")
    if (ns.m is None) == (ns.m_range is None):
        raise UsageError("verify needs exactly one of --m or --m-range")
    if ns.m is not None:
        m_range = (ns.m, ns.m)
    else:
        m_range = _parse_range(ns.m_range, "--m-range")
    if m_range[0] < 3:
        raise UsageError(f"verify requires m >= 3, got {m_range[0]}")
    return RunConfig(command="verify", fmt=ns.format, n=5, m_range=m_range)


def _finalize_fit(ns: argparse.Namespace) -> RunConfig:
    family = ns.family if ns.family is not None else "jahangir"
    if family == "random":
        raise UsageError("fit does not support the random family")
    n = ns.n
    if family == "jahangir":
        if n is None:
            n = 5
        elif n < 1:
            raise UsageError(f"--n must be at least 1, got {n}")
    elif n is not None:
        raise UsageError(f"--n applies to the jahangir family only, not {family}")
    samples = _parse_int_list(ns.samples, "--samples")
    if len(set(samples)) != len(samples):
        raise UsageError(f"--samples values must be distinct, got {ns.samples!r}")
    for m in samples:
        _check_m(family, m, "--samples")
    if ns.degree < 0:
        raise UsageError(f"--degree must be non-negative, got {ns.degree}")
    if len(samples) < ns.degree + 1:
        raise UsageError(
            f"--degree {ns.degree} needs at least {ns.degree + 1} samples, got {len(samples)}"
        )
    holdout: tuple[int, ...] = ()
    if ns.holdout is not None:
        holdout = _parse_int_list(ns.holdout, "--holdout")
        for m in holdout:
            _check_m(family, m, "--holdout")
        overlap = sorted(set(holdout) & set(samples))
        if overlap:
            raise UsageError(f"--holdout values {overlap} overlap --samples")
    return RunConfig(
        command="fit", fmt=ns.format, family=family, n=n,
        samples=samples, degree=ns.degree, holdout=holdout,
    )


def parse_args(argv: list[str]) -> RunConfig:
    """Parse and validate an argument vector; raises UsageError on any problem."""
    ns = _build_parser().parse_args(argv)
    if ns.command == "verify":
        return _finalize_verify(ns)
    if ns.command == "fit":
        return _finalize_fit(ns)
    return _finalize_graph_source(ns, ns.command)


def _build_graph(config: RunConfig) -> Graph:
    if config.input_path is not None:
        return read_edge_list(config.input_path)
    assert config.m is not None
    if config.family == "jahangir":
        assert config.n is not None
        return generators.jahangir(config.n, config.m)
    if config.family == "random":
        assert config.p is not None and config.seed is not None
        return generators.random_connected(config.m, config.p, config.seed)
    builder = {
        "cycle": generators.cycle,
        "path": generators.path,
        "star": generators.star,
        "complete": generators.complete,
        "wheel": generators.wheel,
    }[config.family]
    return builder(config.m)


def _cmd_generate(config: RunConfig, out: IO[str]) -> int:
    g = _build_graph(config)
    if config.fmt == "json":
        payload = {"vertex_count": g.vertex_count, "edges": [list(e) for e in g.edges()]}
        out.write(json.dumps(payload) + "\n")
    else:
        out.write(format_edge_list(g))
    return 0


def _cmd_distances(config: RunConfig, out: IO[str]) -> int:
    g = _build_graph(config)
    dd = distance_distribution(g)
    if config.fmt == "json":
        payload = {
            "vertex_count": g.vertex_count,
            "edge_count": g.edge_count,
            "diameter": dd.diameter,
            "counts": list(dd.counts[1:]),
        }
        out.write(json.dumps(payload) + "\n")
    else:
        out.write(f"vertex_count: {g.vertex_count}\n")
        out.write(f"edge_count: {g.edge_count}\n")
        out.write(f"diameter: {dd.diameter}\n")
        for k in range(1, dd.diameter + 1):
            out.write(f"d({k}) = {dd.counts[k]}\n")
    return 0


def _cmd_hosoya(config: RunConfig, out: IO[str]) -> int:
    poly = hosoya_polynomial(_build_graph(config))
    if config.fmt == "json":
        out.write(json.dumps(poly.to_coefficient_list()) + "\n")
    else:
        out.write(poly.to_text() + "\n")
    return 0


def _cmd_wiener(config: RunConfig, out: IO[str]) -> int:
    w = wiener_index(_build_graph(config))
    if config.fmt == "json":
        out.write(json.dumps({"wiener": w}) + "\n")
    else:
        out.write(f"{w}\n")
    return 0


def _cmd_verify(config: RunConfig, out: IO[str]) -> int:
    assert config.m_range is not None
    report = verify_against_oracle(config.m_range[0], config.m_range[1])
    if config.fmt == "json":
        out.write(report.to_json(indent=2) + "\n")
    else:
        passed = 0
        for result in report.results:
            if result.passed:
                out.write(f"m={result.m}: pass\n")
                passed += 1
            else:
                out.write(f"m={result.m}: FAIL (first mismatch at k={result.first_mismatch_k})\n")
        out.write(f"{passed}/{len(report.results)} passed\n")
        out.write(f"errata: {', '.join(report.errata)}\n")
    return 0 if report.passed else 3


def _cmd_fit(config: RunConfig, out: IO[str]) -> int:
    fam = family_fit.family(config.family, config.n)
    assert config.degree is not None
    table = family_fit.sample_counts(fam, config.samples)
    formula = family_fit.fit(table, config.degree)
    holdout_report = family_fit.verify_formula(formula, config.holdout) if config.holdout else None
    if config.fmt == "json":
        payload = {
            "formula": formula.to_json_dict(),
            "holdout": holdout_report.to_json_dict() if holdout_report is not None else None,
        }
        out.write(json.dumps(payload, indent=2) + "\n")
    else:
        out.write(f"family: {fam.label()}\n")
        out.write(f"samples: {', '.join(str(m) for m in formula.sampled_m)}\n")
        out.write(f"degree: {formula.fitted_degree}\n")
        for k, poly in enumerate(formula.per_k_polys, start=1):
            out.write(f"k={k}: {family_fit.format_rational_poly(poly)}\n")
        out.write(f"wiener: {family_fit.format_rational_poly(formula.wiener_polynomial())}\n")
        if holdout_report is not None:
            values = ", ".join(str(m) for m in holdout_report.holdout_m)
            if holdout_report.passed:
                out.write(f"holdout: {values} -> pass ({holdout_report.comparisons} comparisons)\n")
            else:
                first = holdout_report.mismatches[0]
                out.write(
                    f"holdout: {values} -> FAIL ({len(holdout_report.mismatches)} mismatches; "
                    f"first at m={first.m} k={first.k})\n"
                )
    if holdout_report is not None and not holdout_report.passed:
        return 3
    return 0


_HANDLERS = {
    "generate": _cmd_generate,
    "distances": _cmd_distances,
    "hosoya": _cmd_hosoya,
    "wiener": _cmd_wiener,
    "verify": _cmd_verify,
    "fit": _cmd_fit,
}


def run(config: RunConfig, out: IO[str], err: IO[str]) -> int:
    """Execute a validated config, writing the result to out; returns exit code."""
    try:
        return _HANDLERS[config.command](config, out)
    except (DistpolyError, OSError) as exc:
        err.write(f"distpoly: error: {exc}\n")
        return 2


def main(argv: list[str] | None = None) -> int:
    if argv is None:
        argv = sys.argv[1:]
    try:
        config = parse_args(argv)
    except UsageError as exc:
        sys.stderr.write(f"distpoly: usage error: {exc}\n")
        return 1
    return run(config, sys.stdout, sys.stderr)
