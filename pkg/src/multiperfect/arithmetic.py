"""Exact arithmetic for divisor sums, factorization, valuations, and primes.

Everything here is integer or rational and exact; no floating point. The
divisor-sum machinery is multiplicative, so all operations work on numbers
carried together with their prime-power factorization (FactoredInteger).
"""

from __future__ import annotations

import math
import threading
from bisect import bisect_right
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import gcd, isqrt

ExactRational = Fraction

# Trial division handles everything below this; larger cofactors go to rho.
TRIAL_DIVISION_LIMIT = 100_000
DEFAULT_RHO_BUDGET = 4_000_000


class FactorizationExhausted(Exception):
    """A cofactor resisted the configured factorization effort budget."""


@dataclass(frozen=True)
class FactoredInteger:
    """A positive integer together with its prime-power factorization.

    ``factors`` is a tuple of (prime, exponent) pairs with strictly
    increasing primes and exponents >= 1; their product equals ``value``.
    The number 1 has an empty factor tuple.
    """

    value: int
    factors: tuple[tuple[int, int], ...]

    def __post_init__(self) -> None:
        if self.value < 1:
            raise ValueError(f"value must be positive, got {self.value}")
        prev = 1
        product = 1
        for p, e in self.factors:
            if p <= prev:
                raise ValueError(f"primes not strictly increasing at {p}")
            if e < 1:
                raise ValueError(f"exponent {e} for prime {p} must be >= 1")
            if not is_prime(p):
                raise ValueError(f"listed factor {p} is not prime")
            product *= p**e
            prev = p
        if product != self.value:
            raise ValueError(
                f"factor product {product} does not reproduce value {self.value}"
            )

    @classmethod
    def from_factors(cls, factors) -> "FactoredInteger":
        value = 1
        for p, e in factors:
            value *= p**e
        return cls(value, tuple(factors))

    @property
    def omega(self) -> int:
        """Number of distinct prime factors."""
        return len(self.factors)

    def __int__(self) -> int:
        return self.value

    def __str__(self) -> str:
        if not self.factors:
            return "1"
        return " * ".join(
            f"{p}^{e}" if e > 1 else str(p) for p, e in self.factors
        )


# ---------------------------------------------------------------------------
# Prime sieve, memoized for concurrent readers
# ---------------------------------------------------------------------------

class _Sieve:
    def __init__(self, limit: int, primes: tuple[int, ...]):
        self.limit = limit
        self.primes = primes


_sieve_lock = threading.Lock()
_sieve = _Sieve(1, ())


def _eratosthenes(limit: int) -> tuple[int, ...]:
    marks = bytearray([1]) * (limit + 1)
    marks[0:2] = b"\x00\x00"
    for p in range(2, isqrt(limit) + 1):
        if marks[p]:
            marks[p * p :: p] = b"\x00" * ((limit - p * p) // p + 1)
    return tuple(i for i in range(limit + 1) if marks[i])


def _sieve_through(limit: int) -> _Sieve:
    # Readers take a reference to the current immutable _Sieve; growth swaps
    # in a replacement atomically, so no lock is needed on the read path.
    global _sieve
    cur = _sieve
    if cur.limit >= limit:
        return cur
    with _sieve_lock:
        cur = _sieve
        if cur.limit >= limit:
            return cur
        new_limit = max(limit, 2 * cur.limit, 1 << 16)
        _sieve = _Sieve(new_limit, _eratosthenes(new_limit))
        return _sieve


def primes_upto(limit: int) -> tuple[int, ...]:
    """All primes <= limit, ascending."""
    if limit < 2:
        return ()
    s = _sieve_through(limit)
    return s.primes[: bisect_right(s.primes, limit)]


def prime_count_upto(t) -> int:
    """pi(t): the number of primes not exceeding t (t may be rational)."""
    if t < 0:
        raise ValueError("bound must be non-negative")
    if isinstance(t, float):
        bound = int(t)
    elif isinstance(t, Fraction):
        bound = t.numerator // t.denominator
    else:
        bound = int(t)
    if bound < 2:
        return 0
    s = _sieve_through(bound)
    return bisect_right(s.primes, bound)


def nth_odd_prime(i: int) -> int:
    """The i-th odd prime: 3, 5, 7, 11, ... for i = 1, 2, 3, 4, ..."""
    if i < 1:
        raise ValueError("index must be >= 1")
    # Over-allocate: the (i+1)-th prime is below ~n(log n + log log n) + 16.
    n = i + 1
    guess = 16 if n < 6 else int(n * (math.log(n) + math.log(math.log(n)))) + 16
    while True:
        s = _sieve_through(guess)
        if len(s.primes) > i:
            return s.primes[i]
        guess *= 2


# ---------------------------------------------------------------------------
# Primality and factorization
# ---------------------------------------------------------------------------

# Deterministic Miller-Rabin witness sets (thresholds from the usual tables).
_MR_THRESHOLDS = (
    (341_531, (9345883071009581737,)),
    (1_050_535_501, (336781006125, 9639812373923155)),
    (350_269_456_337, (4230279247111683200, 14694767155120705706, 16641139526367750375)),
    (55_245_642_489_451, (2, 141889084524735, 1199124725622454117, 11096072698276303650)),
    (7_999_252_175_582_851, (2, 4130806001517, 149795463772692060, 186635894390467037, 3967304179347715805)),
    (585_226_005_592_931_977, (2, 123635709730000, 9233062284813009, 43835965440333360, 761179012939631437, 1263739024124850375)),
    (18_446_744_073_709_551_616, (2, 325, 9375, 28178, 450775, 9780504, 1795265022)),
    (318_665_857_834_031_151_167_461, (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)),
    (3_317_044_064_679_887_385_961_981, (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)),
)


def _mr_witness(a: int, d: int, s: int, n: int) -> bool:
    # True if a proves n composite.
    a %= n
    if a <= 1:
        return False
    x = pow(a, d, n)
    if x == 1 or x == n - 1:
        return False
    for _ in range(s - 1):
        x = x * x % n
        if x == n - 1:
            return False
    return True


def is_prime(n: int) -> bool:
    """Deterministic primality test (proven witness sets below ~3.3e24)."""
    if n < 2:
        return False
    s = _sieve
    if n <= s.limit:
        i = bisect_right(s.primes, n)
        return i > 0 and s.primes[i - 1] == n
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % p == 0:
            return n == p
    d = n - 1
    r = 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for threshold, bases in _MR_THRESHOLDS:
        if n < threshold:
            break
    else:
        # Beyond the proven range; fixed bases keep the test deterministic.
        bases = tuple(primes_upto(100))
    return not any(_mr_witness(a, d, r, n) for a in bases)


def _pollard_rho(n: int, budget: int) -> tuple[int | None, int]:
    """Brent-cycle rho with a deterministic parameter schedule.

    Returns (factor, steps_used); factor is None if the budget ran out.
    """
    steps = 0
    for c in range(1, 1000):
        y, r, q = 2, 1, 1
        g, ys, x = 1, 2, 2
        while g == 1 and steps < budget:
            x = y
            for _ in range(r):
                y = (y * y + c) % n
            k = 0
            while k < r and g == 1:
                ys = y
                batch = min(128, r - k)
                for _ in range(batch):
                    y = (y * y + c) % n
                    q = q * abs(x - y) % n
                g = gcd(q, n)
                k += batch
                steps += batch
            r *= 2
        if g == n:
            g = 1
            while g == 1 and steps < budget:
                ys = (ys * ys + c) % n
                g = gcd(abs(x - ys), n)
                steps += 1
        if 1 < g < n:
            return g, steps
        if steps >= budget:
            return None, steps
    return None, steps


def factorize(n: int, *, rho_budget: int = DEFAULT_RHO_BUDGET) -> FactoredInteger:
    """Factor n >= 1 into a FactoredInteger.

    Trial division by sieved primes handles small factors; remaining
    cofactors go through deterministic Miller-Rabin plus Brent's rho.
    Raises FactorizationExhausted if a cofactor survives the step budget
    (never at desk scale; signals the caller to shrink its search limits).
    """
    if n < 1:
        raise ValueError(f"cannot factor {n}; expected n >= 1")
    value = n
    found: dict[int, int] = {}
    if n > 1:
        for p in primes_upto(min(TRIAL_DIVISION_LIMIT, isqrt(n) + 1)):
            if p * p > n:
                break
            while n % p == 0:
                found[p] = found.get(p, 0) + 1
                n //= p
        budget = rho_budget
        stack = [n] if n > 1 else []
        while stack:
            m = stack.pop()
            if m == 1:
                continue
            if is_prime(m):
                found[m] = found.get(m, 0) + 1
                continue
            d, used = _pollard_rho(m, budget)
            budget -= used
            if d is None:
                raise FactorizationExhausted(
                    f"cofactor {m} of {value} exceeded the factorization budget"
                )
            stack.append(d)
            stack.append(m // d)
    return FactoredInteger(value, tuple(sorted(found.items())))


# ---------------------------------------------------------------------------
# Divisor sums and valuations
# ---------------------------------------------------------------------------

def sigma_prime_power(p: int, e: int) -> int:
    """Sum of divisors of p^e: 1 + p + ... + p^e = (p^(e+1) - 1)/(p - 1)."""
    if e < 0:
        raise ValueError("exponent must be >= 0")
    return (p ** (e + 1) - 1) // (p - 1)


def sigma(n: FactoredInteger) -> int:
    """Sum of all positive divisors of n (multiplicative over prime powers)."""
    out = 1
    for p, e in n.factors:
        out *= sigma_prime_power(p, e)
    return out


def abundancy(n: FactoredInteger) -> Fraction:
    """sigma(n)/n in lowest terms."""
    return Fraction(sigma(n), n.value)


def nu(p: int, n: int) -> int:
    """p-adic valuation: the largest e with p^e dividing n."""
    if n < 1:
        raise ValueError("n must be positive")
    e = 0
    while n % p == 0:
        n //= p
        e += 1
    return e


def nu_rational(p: int, q: Fraction) -> int:
    """Valuation extended to rationals: nu(numerator) - nu(denominator)."""
    return nu(p, q.numerator) - nu(p, q.denominator)


def unitary_divisors(n: FactoredInteger) -> list[FactoredInteger]:
    """All d | n with gcd(d, n/d) = 1, ascending (includes 1 and n).

    There are exactly 2^omega(n) of them, one per subset of prime powers.
    """
    divs: list[tuple[int, tuple[tuple[int, int], ...]]] = [(1, ())]
    for p, e in n.factors:
        pe = p**e
        divs += [(v * pe, f + ((p, e),)) for v, f in divs]
    divs.sort()
    return [FactoredInteger(v, f) for v, f in divs]


@lru_cache(maxsize=200_000)
def factored_sigma_prime_power(p: int, e: int) -> tuple[tuple[int, int], ...]:
    """Factorization of sigma(p^e); memoized because chains share prefixes."""
    return factorize(sigma_prime_power(p, e)).factors
