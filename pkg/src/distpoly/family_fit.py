"""Empirical re-derivation of closed-form distance counts for graph families.

Workflow: sample the distance distribution of a one-parameter family at a few
parameter values, interpolate each per-distance count as a polynomial in the
parameter with exact rational arithmetic, then validate the fitted formula on
holdout parameters against brute force. No floating point is used anywhere in
this module; coefficients are `fractions.Fraction` values in lowest terms.
"""

import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Iterable, Sequence

from . import generators
from .distances import distance_distribution
from .errors import (
    DuplicateSampleParameterError,
    InconsistentSamplesError,
    InsufficientSamplesError,
    InvalidParameterError,
)
from .graph import Graph


@dataclass(frozen=True)
class GraphFamily:
    """A one-parameter graph family: a name, fixed parameters, and a builder."""

    name: str
    fixed: tuple[tuple[str, int], ...]
    build: Callable[[int], Graph] = field(compare=False, repr=False)

    def fixed_dict(self) -> dict[str, int]:
        return dict(self.fixed)

    def label(self) -> str:
        if not self.fixed:
            return self.name
        inner = ", ".join(f"{k}={v}" for k, v in self.fixed)
        return f"{self.name}({inner})"


def family(name: str, n: int | None = None) -> GraphFamily:
    """Look up a named family; `n` applies to jahangir only (spoke spacing)."""
    if name == "jahangir":
        spacing = 5 if n is None else n
        if spacing < 1:
            raise InvalidParameterError(f"jahangir needs n >= 1, got n={spacing}")
        return GraphFamily(
            "jahangir",
            (("n", spacing),),
            lambda m, _n=spacing: generators.jahangir(_n, m),
        )
    if n is not None:
        raise InvalidParameterError(f"family {name!r} takes no n parameter")
    builders = {
        "cycle": generators.cycle,
        "path": generators.path,
        "star": generators.star,
        "complete": generators.complete,
        "wheel": generators.wheel,
    }
    if name not in builders:
        raise InvalidParameterError(f"unknown family {name!r}")
    return GraphFamily(name, (), builders[name])


@dataclass(frozen=True)
class SampleTable:
    """Brute-force distance counts for several parameter values of one family.

    Rows are padded with zeros up to the largest diameter seen, so the table
    is rectangular; `row(m)[k]` is the count at distance k (slot 0 is 0).
    """

    family: GraphFamily
    max_k: int
    entries: tuple[tuple[int, tuple[int, ...]], ...]

    def m_values(self) -> tuple[int, ...]:
        return tuple(m for m, _ in self.entries)

    def row(self, m: int) -> tuple[int, ...]:
        for sample_m, row in self.entries:
            if sample_m == m:
                return row
        raise KeyError(m)

    def count(self, m: int, k: int) -> int:
        row = self.row(m)
        return row[k] if k < len(row) else 0

    def per_distance(self, m: int) -> tuple[int, ...]:
        """Counts for k = 1..max_k."""
        return self.row(m)[1:]


def sample_counts(fam: GraphFamily, m_values: Iterable[int]) -> SampleTable:
    """Distance-count rows for each parameter value, via the BFS engine."""
    raw = []
    max_k = 0
    for m in m_values:
        dd = distance_distribution(fam.build(m))
        raw.append((m, dd.counts))
        max_k = max(max_k, dd.diameter)
    entries = tuple(
        (m, counts + (0,) * (max_k + 1 - len(counts))) for m, counts in raw
    )
    return SampleTable(fam, max_k, entries)


@dataclass(frozen=True)
class FamilyFormula:
    """Fitted per-distance coefficient polynomials in the family parameter.

    `per_k_polys[k - 1]` holds the ascending rational coefficients of the
    polynomial giving the distance-k count as a function of the parameter.
    """

    family: GraphFamily
    fitted_degree: int
    sampled_m: tuple[int, ...]
    max_k: int
    per_k_polys: tuple[tuple[Fraction, ...], ...]

    @property
    def valid_domain(self) -> tuple[int, int]:
        return (min(self.sampled_m), max(self.sampled_m))

    def poly_for_distance(self, k: int) -> tuple[Fraction, ...]:
        if not 1 <= k <= self.max_k:
            raise InvalidParameterError(f"distance k must be in 1..{self.max_k}, got {k}")
        return self.per_k_polys[k - 1]

    def predict(self, m: int, k: int) -> Fraction:
        """Predicted count at distance k for parameter m (0 beyond max_k)."""
        if k > self.max_k:
            return Fraction(0)
        return _evaluate(self.poly_for_distance(k), m)

    def wiener_polynomial(self) -> tuple[Fraction, ...]:
        """Coefficients of sum_k k * per_k_poly, the fitted Wiener formula."""
        acc = [Fraction(0)] * (self.fitted_degree + 1)
        for k, poly in enumerate(self.per_k_polys, start=1):
            for power, c in enumerate(poly):
                acc[power] += k * c
        return _trim(acc)

    def to_json_dict(self) -> dict:
        return {
            "family": self.family.name,
            "fixed": self.family.fixed_dict(),
            "fitted_degree": self.fitted_degree,
            "sampled_m": list(self.sampled_m),
            "valid_domain": list(self.valid_domain),
            "max_k": self.max_k,
            "per_k": [
                {"k": k, "coefficients": _json_coefficients(poly)}
                for k, poly in enumerate(self.per_k_polys, start=1)
            ],
            "wiener_coefficients": _json_coefficients(self.wiener_polynomial()),
        }

    def to_json(self, indent: int | None = None) -> str:
        return json.dumps(self.to_json_dict(), indent=indent)


def fit(samples: SampleTable, degree: int) -> FamilyFormula:
    """Interpolate each per-distance count as a degree-<=degree polynomial.

    Exact rational interpolation through the sample points; reproduction of
    every sample is checked afterwards, so passing more than degree + 1
    samples of data that is not actually polynomial of that degree raises
    InconsistentSamplesError rather than returning a silently wrong formula.
    """
    if degree < 0:
        raise InvalidParameterError(f"degree must be non-negative, got {degree}")
    entries = sorted(samples.entries)
    seen = set()
    for m, _ in entries:
        if m in seen:
            raise DuplicateSampleParameterError(m)
        seen.add(m)
    if len(entries) < degree + 1:
        raise InsufficientSamplesError(
            f"degree {degree} needs at least {degree + 1} distinct samples, "
            f"got {len(entries)}"
        )
    support = entries[: degree + 1]
    xs = [m for m, _ in support]
    per_k = []
    for k in range(1, samples.max_k + 1):
        poly = _interpolate(xs, [row[k] for _, row in support])
        for m, row in entries:
            if _evaluate(poly, m) != row[k]:
                raise InconsistentSamplesError(
                    f"distance-{k} counts do not lie on a degree-{degree} "
                    f"polynomial (first failure at m={m})"
                )
        per_k.append(poly)
    return FamilyFormula(
        family=samples.family,
        fitted_degree=degree,
        sampled_m=tuple(m for m, _ in entries),
        max_k=samples.max_k,
        per_k_polys=tuple(per_k),
    )


@dataclass(frozen=True)
class Mismatch:
    m: int
    k: int
    predicted: Fraction
    actual: int

    def to_json_dict(self) -> dict:
        return {
            "m": self.m,
            "k": self.k,
            "predicted": {"num": self.predicted.numerator, "den": self.predicted.denominator},
            "actual": self.actual,
        }


@dataclass(frozen=True)
class HoldoutReport:
    """Formula predictions vs brute force on holdout parameter values."""

    holdout_m: tuple[int, ...]
    comparisons: int
    mismatches: tuple[Mismatch, ...]

    @property
    def passed(self) -> bool:
        return not self.mismatches

    def to_json_dict(self) -> dict:
        return {
            "holdout": list(self.holdout_m),
            "comparisons": self.comparisons,
            "pass": self.passed,
            "mismatches": [mm.to_json_dict() for mm in self.mismatches],
        }

    def to_json(self, indent: int | None = None) -> str:
        return json.dumps(self.to_json_dict(), indent=indent)


def verify_formula(formula: FamilyFormula, holdout_m: Iterable[int]) -> HoldoutReport:
    """Compare formula predictions against brute force on holdout parameters.

    Holdout values must be disjoint from the fitted samples. Every distance up
    to max(formula.max_k, sample diameter) is compared exactly; an empty
    holdout passes vacuously with zero comparisons.
    """
    holdout = tuple(holdout_m)
    overlap = set(holdout) & set(formula.sampled_m)
    if overlap:
        raise InvalidParameterError(
            f"holdout values {sorted(overlap)} overlap the fitted samples"
        )
    comparisons = 0
    mismatches = []
    for m in holdout:
        dd = distance_distribution(formula.family.build(m))
        top = max(formula.max_k, dd.diameter)
        for k in range(1, top + 1):
            predicted = formula.predict(m, k)
            actual = dd.counts[k] if k <= dd.diameter else 0
            comparisons += 1
            if predicted != actual:
                mismatches.append(Mismatch(m, k, predicted, actual))
    return HoldoutReport(holdout, comparisons, tuple(mismatches))


def format_rational_poly(coefficients: Sequence[Fraction], variable: str = "m") -> str:
    """Human-readable polynomial, descending powers: "4m^2 - 4m", "(1/2)m^2 + (13/2)m"."""
    terms = []
    for power in range(len(coefficients) - 1, -1, -1):
        c = Fraction(coefficients[power])
        if c == 0:
            continue
        magnitude = abs(c)
        if power == 0:
            body = _format_fraction(magnitude)
        else:
            var = variable if power == 1 else f"{variable}^{power}"
            body = var if magnitude == 1 else f"{_format_fraction(magnitude)}{var}"
        terms.append((c < 0, body))
    if not terms:
        return "0"
    first_negative, first_body = terms[0]
    rendered = ("-" if first_negative else "") + first_body
    for negative, body in terms[1:]:
        rendered += (" - " if negative else " + ") + body
    return rendered


def _format_fraction(value: Fraction) -> str:
    if value.denominator == 1:
        return str(value.numerator)
    return f"({value.numerator}/{value.denominator})"


def _json_coefficients(poly: Sequence[Fraction]) -> list[dict]:
    return [{"num": c.numerator, "den": c.denominator} for c in poly]


def _interpolate(xs: Sequence[int], ys: Sequence[int]) -> tuple[Fraction, ...]:
    """Lagrange interpolation in coefficient space, exact rationals."""
    size = len(xs)
    coeffs = [Fraction(0)] * size
    for i in range(size):
        basis = [Fraction(1)]
        denom = Fraction(1)
        for j in range(size):
            if j == i:
                continue
            shifted = [Fraction(0)] * (len(basis) + 1)
            for t, c in enumerate(basis):
                shifted[t] -= c * xs[j]
                shifted[t + 1] += c
            basis = shifted
            denom *= xs[i] - xs[j]
        scale = Fraction(ys[i]) / denom
        for t, c in enumerate(basis):
            coeffs[t] += c * scale
    return _trim(coeffs)


def _evaluate(coefficients: Sequence[Fraction], at: int) -> Fraction:
    acc = Fraction(0)
    for c in reversed(coefficients):
        acc = acc * at + c
    return acc


def _trim(coefficients: list[Fraction]) -> tuple[Fraction, ...]:
    while coefficients and coefficients[-1] == 0:
        coefficients.pop()
    return tuple(coefficients)
