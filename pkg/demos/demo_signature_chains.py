#!/usr/bin/env python3
"""How a primitive multiperfect number is pinned down by (alpha, p1, exponents).

The demo peels 672 top-down, then rebuilds it bottom-up showing the forced
prime at every step, and finally demonstrates what reconstruction reports
when the inputs do not describe a real number.
"""

from fractions import Fraction

from multiperfect import (
    extract_signature,
    factorize,
    next_chain_prime,
    reconstruct,
    sigma,
    sigma_prime_power,
)

n = 672
fi = factorize(n)
print(f"n = {n} = {fi}, sigma(n) = {sigma(fi)} = 3 * {n}\n")

sig = extract_signature(fi)
print(f"signature: alpha = {sig.alpha}, p1 = {sig.p1}, exponents = {sig.exponents}")
print(f"chain of primes read off n: {' -> '.join(map(str, sig.chain_primes))}\n")

print("rebuilding without looking at n:")
chain = [(sig.p1, sig.exponents[0])]
for e in sig.exponents[1:]:
    sigma_product = 1
    for p, k in chain:
        sigma_product *= sigma_prime_power(p, k)
    nxt = next_chain_prime(sig.alpha, chain)
    print(
        f"  prefix {chain}: sigma product = {sigma_product},"
        f" forced next prime = {nxt}"
    )
    chain.append((nxt, e))
print(f"  final chain: {chain}")

result = reconstruct(sig.alpha, sig.p1, sig.exponents)
print(f"  product check: {result.number.value} (ok = {result.ok})\n")

print("reconstruction failures are reported, not raised:")
for alpha, p1, exponents in [
    (Fraction(2), 3, [1]),
    (Fraction(2), 2, [1]),
    (Fraction(2), 2, [1, 1, 1]),
]:
    r = reconstruct(alpha, p1, exponents)
    step = f" at step {r.failed_step}" if r.failed_step else ""
    print(f"  alpha={alpha}, p1={p1}, exponents={exponents}: {r.failure}{step}")

print("\nhemiperfect example: alpha = 3/2 forces the chain (2) immediately")
r = reconstruct(Fraction(3, 2), 2, [1])
print(f"  reconstruct(3/2, 2, [1]) = {r.number.value}")
