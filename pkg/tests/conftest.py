"""Shared brute-force oracles, independent of the library's code paths."""

from math import gcd, isqrt


def divisors(n: int) -> list[int]:
    small, large = [], []
    for d in range(1, isqrt(n) + 1):
        if n % d == 0:
            small.append(d)
            if d != n // d:
                large.append(n // d)
    return small + large[::-1]


def sigma_naive(n: int) -> int:
    return sum(divisors(n))


def trial_factorize(n: int) -> list[tuple[int, int]]:
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            e = 0
            while n % d == 0:
                n //= d
                e += 1
            out.append((d, e))
        d += 1
    if n > 1:
        out.append((n, 1))
    return out


def unitary_divisors_naive(n: int) -> list[int]:
    return [d for d in divisors(n) if gcd(d, n // d) == 1]


def spf_sieve(limit: int) -> list[int]:
    """Smallest prime factor for every n <= limit (spf[0] = spf[1] = 0)."""
    spf = list(range(limit + 1))
    for p in range(2, isqrt(limit) + 1):
        if spf[p] == p:
            for m in range(p * p, limit + 1, p):
                if spf[m] == m:
                    spf[m] = p
    spf[0] = spf[1] = 0
    return spf


def factors_from_spf(n: int, spf: list[int]) -> list[tuple[int, int]]:
    out = []
    while n > 1:
        p = spf[n]
        e = 0
        while n % p == 0:
            n //= p
            e += 1
        out.append((p, e))
    return out


def check_decomposition(n: int, dec) -> None:
    """Validate every peeling-decomposition invariant against first principles."""
    from multiperfect.arithmetic import factorize, sigma, unitary_divisors
    from multiperfect.classify import is_primitive

    pieces = list(dec.parts) + [dec.leftover]
    product = 1
    for piece in pieces:
        product *= piece.value
    assert product == n, "pieces do not multiply back to n"
    for i, a in enumerate(pieces):
        for b in pieces[i + 1 :]:
            assert gcd(a.value, b.value) == 1, "pieces are not pairwise coprime"
    cofactor = factorize(n)
    for part, mult in zip(dec.parts, dec.multipliers):
        assert sigma(part) == mult * part.value, "multiplier is not sigma(d)/d"
        assert mult >= 2
        assert is_primitive(part), "peeled part is not primitive"
        for d in unitary_divisors(cofactor):
            if 1 < d.value < cofactor.value and sigma(d) % d.value == 0:
                assert d.value == part.value, "a smaller unitary divisor qualified"
                break
        else:
            raise AssertionError("recorded part not found in its cofactor")
        cofactor = factorize(cofactor.value // part.value)
    for d in unitary_divisors(cofactor):
        if 1 < d.value < cofactor.value:
            assert sigma(d) % d.value != 0, "leftover still has a qualifying divisor"
    assert cofactor.value == dec.leftover.value
