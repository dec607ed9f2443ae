#!/usr/bin/env python3
"""Walk through the small multiperfect catalog with the divisor-sum sieve.

Scans for k-perfect numbers at a few abundancy targets, classifies each
hit, and shows the exact arithmetic behind the classification.
"""

from fractions import Fraction

from multiperfect import abundancy, brute_scan, classify, factorize, sigma

print("=== k-perfect numbers by brute divisor-sum scan ===\n")

for alpha, limit in [(Fraction(2), 10**7), (Fraction(3), 10**7), (Fraction(4), 10**7)]:
    found = brute_scan(alpha, limit)
    print(f"alpha = {alpha}, limit = {limit:,}:")
    for fi in found:
        s = sigma(fi)
        print(f"  {fi.value:>9} = {fi}   sigma = {s} = {alpha} * {fi.value}")
    print()

print("=== rational targets work the same way ===\n")
for alpha in [Fraction(3, 2), Fraction(9, 5), Fraction(7, 3)]:
    found = brute_scan(alpha, 10**6)
    values = [fi.value for fi in found] or "none"
    print(f"alpha = {alpha}: {values}")

print("\n=== classification of a few inputs ===\n")
for n in [28, 120, 2, 10, 210, 523776]:
    fi = factorize(n)
    perf = classify(fi)
    flag = " (rational)" if perf.rational_multiperfect else ""
    print(f"n = {n:>6} = {str(fi):<24} alpha = {abundancy(fi)}  -> {perf.status}{flag}")
