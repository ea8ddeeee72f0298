"""Closed-form distance counts, Hosoya polynomial, and Wiener index of J(5, m).

For every m >= 3 the Jahangir graph J(5, m) has diameter 6 and its distance
distribution is quadratic in m:

    k=1: 6m    k=2: (m^2 + 13m)/2    k=3: 2m^2 + 5m
    k=4: 4m^2 - 4m    k=5: 4m^2 - 6m    k=6: 2m^2 - 5m

giving W(J(5, m)) = 55m^2 - 42m. Two typos in the published statement of
these results are corrected here and flagged by erratum tags in every
verification report: "eq15" (the distance-4 count is displayed there as
4m^2 - 2m, but only 4m^2 - 4m is consistent with pair conservation, with the
statement's own derivation, and with brute force) and "eq9" (the edge-count
expansion weights the center by 3 instead of by its degree m; the handshake
identity forces m, which yields the stated 6m edges).

`verify_against_oracle` checks the closed forms against the BFS brute-force
engine for a whole range of m.
"""

import json
from dataclasses import dataclass
from typing import NamedTuple

from .distances import distance_distribution
from .errors import InvalidParameterError
from .generators import jahangir
from .hosoya import Polynomial

#: Erratum tags carried in every verification report (see module docstring).
ERRATUM_TAGS = ("eq15", "eq9")

_MAX_DISTANCE = 6


class DegreePartition(NamedTuple):
    periphery: int
    hubs: int
    center: int


def j5_distance_count(m: int, k: int) -> int:
    """Number of unordered vertex pairs of J(5, m) at distance k, closed form."""
    _check_m(m)
    if k == 1:
        return 6 * m
    if k == 2:
        # m(m + 13) is even for every integer m, so this is exact.
        return m * (m + 13) // 2
    if k == 3:
        return 2 * m * m + 5 * m
    if k == 4:
        return 4 * m * m - 4 * m  # corrected count; see erratum "eq15"
    if k == 5:
        return 4 * m * m - 6 * m
    if k == 6:
        return 2 * m * m - 5 * m
    raise InvalidParameterError(f"distance k must be in 1..6, got {k}")


def j5_hosoya(m: int) -> Polynomial:
    """Closed-form Hosoya polynomial of J(5, m), degree 6."""
    _check_m(m)
    return Polynomial([0] + [j5_distance_count(m, k) for k in range(1, _MAX_DISTANCE + 1)])


def j5_wiener(m: int) -> int:
    """Closed-form Wiener index of J(5, m): 55m^2 - 42m."""
    _check_m(m)
    return 55 * m * m - 42 * m


def j5_degree_partition(m: int) -> DegreePartition:
    """Vertex counts by role: (periphery, hubs, center) = (4m, m, 1).

    The partition is by role, not raw degree: at m = 3 the center's degree
    equals the hubs' degree 3, yet it still counts as the center.
    """
    _check_m(m)
    return DegreePartition(periphery=4 * m, hubs=m, center=1)


@dataclass(frozen=True)
class J5Report:
    """Closed-form summary for one J(5, m)."""

    m: int
    per_k_counts: tuple[int, ...]
    hosoya: Polynomial
    wiener: int
    degree_partition: DegreePartition


def j5_report(m: int) -> J5Report:
    return J5Report(
        m=m,
        per_k_counts=tuple(j5_distance_count(m, k) for k in range(1, _MAX_DISTANCE + 1)),
        hosoya=j5_hosoya(m),
        wiener=j5_wiener(m),
        degree_partition=j5_degree_partition(m),
    )


@dataclass(frozen=True)
class J5VerificationResult:
    """Closed form vs brute force for one m."""

    m: int
    passed: bool
    closed_form: tuple[int, ...]
    oracle: tuple[int, ...]
    wiener_closed: int
    wiener_oracle: int
    first_mismatch_k: int | None

    def to_json_dict(self) -> dict:
        entry = {
            "m": self.m,
            "pass": self.passed,
            "closed_form": list(self.closed_form),
            "oracle": list(self.oracle),
            "wiener_closed": self.wiener_closed,
            "wiener_oracle": self.wiener_oracle,
        }
        if not self.passed:
            entry["first_mismatch_k"] = self.first_mismatch_k
        return entry


@dataclass(frozen=True)
class VerificationReport:
    """Per-m comparison of the J(5, m) closed forms against the BFS oracle."""

    results: tuple[J5VerificationResult, ...]
    family: str = "jahangir"
    n: int = 5
    errata: tuple[str, ...] = ERRATUM_TAGS

    @property
    def passed(self) -> bool:
        return all(result.passed for result in self.results)

    def to_json_dict(self) -> dict:
        return {
            "family": self.family,
            "n": self.n,
            "results": [result.to_json_dict() for result in self.results],
            "errata": list(self.errata),
        }

    def to_json(self, indent: int | None = None) -> str:
        return json.dumps(self.to_json_dict(), indent=indent)


def verify_against_oracle(m_lo: int, m_hi: int) -> VerificationReport:
    """Compare closed forms against brute-force BFS for every m in [m_lo, m_hi].

    The oracle side is the plain all-sources distribution; coefficient arrays
    in the report run from exponent 0. Fails per m on the first differing
    coefficient or a Wiener mismatch.
    """
    if m_lo < 3:
        raise InvalidParameterError(f"m range must stay within m >= 3, got {m_lo}")
    if m_hi < m_lo:
        raise InvalidParameterError(f"empty m range {m_lo}..{m_hi}")
    results = []
    for m in range(m_lo, m_hi + 1):
        dd = distance_distribution(jahangir(5, m))
        oracle_poly = Polynomial.from_distribution(dd)
        closed_poly = j5_hosoya(m)
        wiener_oracle = sum(k * c for k, c in enumerate(dd.counts))
        wiener_closed = j5_wiener(m)
        first_mismatch = _first_coefficient_mismatch(closed_poly, oracle_poly)
        passed = first_mismatch is None and wiener_closed == wiener_oracle
        results.append(
            J5VerificationResult(
                m=m,
                passed=passed,
                closed_form=closed_poly.coefficients,
                oracle=oracle_poly.coefficients,
                wiener_closed=wiener_closed,
                wiener_oracle=wiener_oracle,
                first_mismatch_k=first_mismatch,
            )
        )
    return VerificationReport(tuple(results))


def _first_coefficient_mismatch(a: Polynomial, b: Polynomial) -> int | None:
    """Smallest exponent where the two polynomials differ, or None if equal."""
    ca, cb = a.coefficients, b.coefficients
    for k in range(max(len(ca), len(cb))):
        va = ca[k] if k < len(ca) else 0
        vb = cb[k] if k < len(cb) else 0
        if va != vb:
            return k
    return None


def _check_m(m: int) -> None:
    if m < 3:
        raise InvalidParameterError(f"closed forms need m >= 3, got {m}")
