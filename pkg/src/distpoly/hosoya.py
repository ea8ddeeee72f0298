"""Integer polynomials, Hosoya polynomials, and the Wiener index.

The Hosoya polynomial of a connected graph collects the distance distribution
as coefficients: the coefficient of x^k is the number of unordered vertex
pairs at distance k. Its derivative at x = 1 is the Wiener index, the sum of
all pairwise distances.
"""

from typing import Iterable

from .distances import DistanceDistribution, distance_distribution
from .graph import Graph


class Polynomial:
    """Dense univariate polynomial with exact integer coefficients.

    Coefficients are indexed by exponent from 0 and kept canonical: trailing
    zeros are trimmed, so two polynomials are equal iff their coefficient
    tuples are equal. The zero polynomial is the empty tuple and reports
    degree -1 (its distinguished empty state).
    """

    __slots__ = ("_coefficients",)

    def __init__(self, coefficients: Iterable[int] = ()):
        coeffs = list(coefficients)
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        self._coefficients = tuple(coeffs)

    @classmethod
    def from_distribution(cls, dd: DistanceDistribution) -> "Polynomial":
        """Polynomial with coefficient counts[k] at exponent k.

        The constant term is 0: only unordered pairs of distinct vertices are
        counted, so distance 0 contributes nothing.
        """
        return cls(dd.counts)

    @property
    def coefficients(self) -> tuple[int, ...]:
        return self._coefficients

    @property
    def degree(self) -> int:
        return len(self._coefficients) - 1

    def is_zero(self) -> bool:
        return not self._coefficients

    def evaluate(self, at: int) -> int:
        """Exact value at an integer point (Horner's rule)."""
        acc = 0
        for c in reversed(self._coefficients):
            acc = acc * at + c
        return acc

    def derivative_at_one(self) -> int:
        """Sum of k * coefficient[k]; for a Hosoya polynomial, the Wiener index."""
        return sum(k * c for k, c in enumerate(self._coefficients))

    def to_coefficient_list(self) -> list[int]:
        """Coefficients from exponent 0, for JSON rendering."""
        return list(self._coefficients)

    def to_text(self) -> str:
        """Render as "c1x + c2x^2 + ..." ascending, omitting zero terms."""
        terms = []
        for k, c in enumerate(self._coefficients):
            if c == 0:
                continue
            if k == 0:
                terms.append(str(c))
            elif k == 1:
                terms.append(f"{c}x")
            else:
                terms.append(f"{c}x^{k}")
        return " + ".join(terms) if terms else "0"

    def __str__(self) -> str:
        return self.to_text()

    def __repr__(self) -> str:
        return f"Polynomial({list(self._coefficients)!r})"

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self._coefficients == other._coefficients

    def __hash__(self) -> int:
        return hash(self._coefficients)


def hosoya_polynomial(g: Graph) -> Polynomial:
    """Hosoya polynomial of a connected graph."""
    return Polynomial.from_distribution(distance_distribution(g))


def wiener_index(g: Graph) -> int:
    """Sum of distances over all unordered vertex pairs of a connected graph."""
    dd = distance_distribution(g)
    return sum(k * c for k, c in enumerate(dd.counts))
