#!/usr/bin/env python3
"""Peeling non-primitive numbers into coprime primitive parts.

A number is primitive when no unitary divisor d (1 < d < n) divides its
own divisor sum. Non-primitive numbers factor by repeatedly splitting off
the smallest qualifying unitary divisor; the demo shows the peeling and
verifies the multiplier bookkeeping on a 4-perfect composite.
"""

from multiperfect import (
    abundancy,
    factorize,
    is_primitive,
    primitive_decomposition,
    sigma,
    unitary_divisors,
)

print("=== unitary divisors and the primitivity test ===\n")
for n in [672, 210]:
    fi = factorize(n)
    print(f"n = {n} = {fi}, primitive = {is_primitive(fi)}")
    for d in unitary_divisors(fi):
        if 1 < d.value < n:
            s = sigma(d)
            mark = "  <-- d | sigma(d)" if s % d.value == 0 else ""
            print(f"  d = {d.value:>6}, sigma(d) = {s}{mark}")
    print()

print("=== peeling decompositions ===\n")
for n in [210, 42, 756, 66]:
    dec = primitive_decomposition(factorize(n))
    parts = ", ".join(
        f"{p.value} (sigma = {m} * part)" for p, m in zip(dec.parts, dec.multipliers)
    )
    print(f"n = {n:>4}: parts [{parts}], leftover {dec.leftover.value}")

print("\n=== a 4-perfect number with a nonempty decomposition ===\n")
n = 3 * 459818240  # 459818240 is 3-perfect and coprime to 3
fi = factorize(n)
print(f"n = {n} = {fi}")
print(f"abundancy = {abundancy(fi)}")
dec = primitive_decomposition(fi)
for part, mult in zip(dec.parts, dec.multipliers):
    print(f"  peeled {part.value} = {part} with sigma(d) = {mult} * d")
print(f"  leftover {dec.leftover.value}, multiperfect = {dec.leftover_is_multiperfect}")
k_prod = 1
for m in dec.multipliers:
    k_prod *= m
print(f"  sigma(leftover) * {k_prod} = {sigma(dec.leftover) * k_prod}"
      f" = 4 * {dec.leftover.value} = k * leftover")
