"""Multiperfection tests, primitivity, and the peeling decomposition.

A number n is k-perfect when sigma(n) = k*n for an integer k >= 2, and
primitive when no unitary divisor d with 1 < d < n satisfies d | sigma(d).
Non-primitive numbers factor into pairwise coprime pieces by repeatedly
peeling off the smallest qualifying unitary divisor.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .arithmetic import FactoredInteger, abundancy, sigma, unitary_divisors


@dataclass(frozen=True)
class PerfectionClass:
    """Abundancy of n plus the multiperfection flags derived from it."""

    alpha: Fraction
    multiperfect: bool
    rational_multiperfect: bool

    @property
    def status(self) -> str:
        return "multiperfect" if self.multiperfect else "not_multiperfect"


@dataclass(frozen=True)
class PrimitiveDecomposition:
    """n = parts[0] * ... * parts[-1] * leftover, all pairwise coprime.

    Each part d satisfies d | sigma(d) with sigma(d) = multiplier * d and
    was the smallest unitary divisor of the remaining cofactor doing so;
    the leftover admits no such divisor.
    """

    parts: tuple[FactoredInteger, ...]
    multipliers: tuple[int, ...]
    leftover: FactoredInteger
    leftover_is_multiperfect: bool

    def __post_init__(self) -> None:
        product = self.leftover.value
        for part in self.parts:
            if gcd(product, part.value) != 1:
                raise ValueError("decomposition pieces are not pairwise coprime")
            product *= part.value
        if len(self.parts) != len(self.multipliers):
            raise ValueError("one multiplier per part required")

    @property
    def value(self) -> int:
        out = self.leftover.value
        for part in self.parts:
            out *= part.value
        return out


def is_k_perfect(n: FactoredInteger, k: int) -> bool:
    """True iff sigma(n) = k*n."""
    return sigma(n) == k * n.value


def classify(n: FactoredInteger) -> PerfectionClass:
    """Compute alpha = sigma(n)/n and flag integer/rational multiperfection."""
    alpha = abundancy(n)
    integer = alpha.denominator == 1 and alpha >= 2
    rational = alpha.denominator > 1 and alpha > 1
    return PerfectionClass(alpha, integer, rational)


def is_primitive(n: FactoredInteger) -> bool:
    """True iff no unitary divisor d of n with 1 < d < n has d | sigma(d)."""
    for d in unitary_divisors(n):
        if d.value == 1 or d.value == n.value:
            continue
        if sigma(d) % d.value == 0:
            return False
    return True


def _remove_unitary(n: FactoredInteger, d: FactoredInteger) -> FactoredInteger:
    removed = {p for p, _ in d.factors}
    return FactoredInteger(
        n.value // d.value,
        tuple((p, e) for p, e in n.factors if p not in removed),
    )


def primitive_decomposition(n: FactoredInteger) -> PrimitiveDecomposition:
    """Peel the smallest qualifying unitary divisor until none remains.

    At each step the smallest d with 1 < d < cofactor, d unitary in the
    cofactor, and d | sigma(d) is split off; its multiplier is sigma(d)/d.
    The loop ends when the cofactor has no such divisor (always reached:
    each step strictly shrinks the cofactor).
    """
    parts: list[FactoredInteger] = []
    multipliers: list[int] = []
    cofactor = n
    while True:
        best = None
        for d in unitary_divisors(cofactor):
            if d.value == 1 or d.value == cofactor.value:
                continue
            s = sigma(d)
            if s % d.value == 0:
                best = (d, s // d.value)
                break
        if best is None:
            break
        part, multiplier = best
        parts.append(part)
        multipliers.append(multiplier)
        cofactor = _remove_unitary(cofactor, part)
    leftover_alpha = abundancy(cofactor)
    leftover_mp = leftover_alpha.denominator == 1 and leftover_alpha >= 2
    return PrimitiveDecomposition(
        tuple(parts), tuple(multipliers), cofactor, leftover_mp
    )
