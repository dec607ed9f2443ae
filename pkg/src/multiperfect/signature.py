"""Prime-chain signatures of primitive multiperfect numbers.

A primitive number n with sigma(n)/n = alpha is pinned down by its smallest
prime p1 and its exponent sequence alone: peeling prime powers off n in the
order forced by a valuation inequality always yields the same prime at each
step, and that prime can be recomputed from the already-peeled prefix
without knowing n. ``extract_signature`` runs the peeling top-down on n;
``reconstruct`` rebuilds n bottom-up from (alpha, p1, exponents).

The bottom-up rule: with S = product of sigma(p_j^e_j) over the chain so
far, the next prime is the smallest p not yet used with nu_p(S) > nu_p(alpha).
This is equivalent to the top-down rule because sigma is multiplicative:
sigma(n / prefix) = alpha * n / S, so the valuation excess of p in the
unpeeled cofactor equals nu_p(S) - nu_p(alpha).
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from .arithmetic import (
    FactoredInteger,
    factored_sigma_prime_power,
    factorize,
    is_prime,
    nu,
    nu_rational,
    sigma,
)
from .classify import is_primitive


class NotPrimitive(Exception):
    """The input has a unitary divisor d with d | sigma(d); no chain exists."""


class EmptyChain(Exception):
    """The first chain prime is a free choice, not determined by the rule."""


@dataclass(frozen=True)
class ChainSignature:
    """(alpha, p1, exponents) plus the prime chain they determine."""

    alpha: Fraction
    p1: int
    exponents: tuple[int, ...]
    chain_primes: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.exponents) != len(self.chain_primes):
            raise ValueError("one exponent per chain prime required")
        if not self.chain_primes or self.chain_primes[0] != self.p1:
            raise ValueError("chain must start at p1")
        if len(set(self.chain_primes)) != len(self.chain_primes):
            raise ValueError("chain primes must be distinct")

    @property
    def s(self) -> int:
        """Number of distinct primes in the signature."""
        return len(self.chain_primes)

    @property
    def value(self) -> int:
        out = 1
        for p, e in zip(self.chain_primes, self.exponents):
            out *= p**e
        return out


@dataclass(frozen=True)
class Reconstruction:
    """Result of rebuilding a number from (alpha, p1, exponents).

    ``failure`` is None on success, otherwise one of "chain_broke_at_step"
    (with ``failed_step`` set), "chain_overran", or "not_alpha_perfect".
    """

    number: Optional[FactoredInteger]
    chain: tuple[tuple[int, int], ...]
    failure: Optional[str] = None
    failed_step: Optional[int] = None

    @property
    def ok(self) -> bool:
        return self.failure is None


def extract_signature(n: FactoredInteger) -> ChainSignature:
    """Top-down peeling of a primitive number with sigma(n)/n > 1.

    p1 is the smallest prime factor; after removing each full prime power,
    the next prime is the smallest p dividing the cofactor m with
    nu_p(m) > nu_p(sigma(m)). Raises NotPrimitive when no chain exists.
    """
    if n.value <= 1:
        raise ValueError("signature requires n > 1")
    if not is_primitive(n):
        raise NotPrimitive(f"{n.value} has a unitary divisor d with d | sigma(d)")
    alpha = Fraction(sigma(n), n.value)
    exponent_of = dict(n.factors)
    chain: list[int] = [n.factors[0][0]]
    remaining = {p: e for p, e in n.factors if p != chain[0]}
    while remaining:
        m = FactoredInteger.from_factors(sorted(remaining.items()))
        sm = sigma(m)
        nxt = None
        for p in sorted(remaining):
            if remaining[p] > nu(p, sm):
                nxt = p
                break
        if nxt is None:
            # Certifies m | sigma(m), i.e. a violating unitary divisor.
            raise NotPrimitive(
                f"cofactor {m.value} of {n.value} divides its divisor sum"
            )
        chain.append(nxt)
        del remaining[nxt]
    return ChainSignature(
        alpha=alpha,
        p1=chain[0],
        exponents=tuple(exponent_of[p] for p in chain),
        chain_primes=tuple(chain),
    )


def next_chain_prime(
    alpha: Fraction, chain: Sequence[tuple[int, int]]
) -> Optional[int]:
    """Smallest unused prime p with nu_p(prod sigma(p_j^e_j)) > nu_p(alpha).

    Returns None when no prime qualifies (the chain is closed). Only primes
    dividing the sigma product or alpha's denominator can qualify; for all
    others the left side is 0 and the right side is >= 0.
    """
    if not chain:
        raise EmptyChain("the first chain prime is not determined by the rule")
    used = {p for p, _ in chain}
    if len(used) != len(chain):
        raise ValueError("chain primes must be distinct")
    sigma_exp: Counter[int] = Counter()
    for p, e in chain:
        if e < 1:
            raise ValueError(f"exponent {e} for prime {p} must be >= 1")
        for q, k in factored_sigma_prime_power(p, e):
            sigma_exp[q] += k
    candidates = set(sigma_exp)
    candidates.update(p for p, _ in factorize(alpha.denominator).factors)
    for p in sorted(candidates):
        if p in used:
            continue
        if sigma_exp.get(p, 0) > nu_rational(p, alpha):
            return p
    return None


def reconstruct(
    alpha: Fraction, p1: int, exponents: Sequence[int]
) -> Reconstruction:
    """Rebuild the number determined by (alpha, p1, exponents), if any.

    Extends the chain one derived prime per exponent, then requires the
    chain to close (no further prime qualifies) and the product to satisfy
    sigma(n) = alpha * n. Failures are reported, not raised.
    """
    alpha = Fraction(alpha)
    if alpha <= 1:
        raise ValueError("alpha must exceed 1")
    exponents = tuple(exponents)
    if not exponents or any(e < 1 for e in exponents):
        raise ValueError("exponents must be a nonempty sequence of integers >= 1")
    if not is_prime(p1):
        raise ValueError(f"p1 = {p1} is not prime")
    chain: list[tuple[int, int]] = [(p1, exponents[0])]
    for step, e in enumerate(exponents[1:], start=2):
        p = next_chain_prime(alpha, chain)
        if p is None:
            return Reconstruction(None, tuple(chain), "chain_broke_at_step", step)
        chain.append((p, e))
    number = FactoredInteger.from_factors(sorted(chain))
    if sigma(number) * alpha.denominator != alpha.numerator * number.value:
        return Reconstruction(None, tuple(chain), "not_alpha_perfect")
    # Unreachable in theory: sigma(n) = alpha*n forces the criterion to fail
    # for every unused prime. Kept as a guard on the derivation itself.
    if next_chain_prime(alpha, chain) is not None:
        return Reconstruction(None, tuple(chain), "chain_overran")
    return Reconstruction(number, tuple(chain))
