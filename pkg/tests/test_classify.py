from fractions import Fraction

import pytest

from multiperfect.arithmetic import abundancy, factorize, sigma, unitary_divisors
from multiperfect.classify import (
    PrimitiveDecomposition,
    classify,
    is_k_perfect,
    is_primitive,
    primitive_decomposition,
)

from conftest import check_decomposition, sigma_naive


class TestIsKPerfect:
    def test_examples(self):
        assert is_k_perfect(factorize(6), 2)
        assert not is_k_perfect(factorize(1), 2)
        assert is_k_perfect(factorize(120), 3)

    def test_against_naive_sigma(self):
        for n in range(1, 1000):
            for k in (2, 3):
                assert is_k_perfect(factorize(n), k) == (sigma_naive(n) == k * n)


class TestClassify:
    def test_multiperfect(self):
        perf = classify(factorize(28))
        assert perf.status == "multiperfect"
        assert perf.alpha == Fraction(2)
        assert not perf.rational_multiperfect

    def test_not_multiperfect(self):
        perf = classify(factorize(10))
        assert perf.status == "not_multiperfect"
        assert perf.alpha == Fraction(9, 5)

    def test_rational_flag(self):
        perf = classify(factorize(2))
        assert perf.rational_multiperfect
        assert perf.alpha == Fraction(3, 2)
        assert not perf.multiperfect

    def test_one_is_nothing(self):
        perf = classify(factorize(1))
        assert perf.alpha == 1
        assert not perf.multiperfect
        assert not perf.rational_multiperfect


class TestIsPrimitive:
    def test_examples(self):
        assert is_primitive(factorize(6))
        assert is_primitive(factorize(672))
        assert not is_primitive(factorize(210))

    def test_against_definition(self):
        # direct quantifier over unitary divisors
        for n in range(1, 3000):
            fi = factorize(n)
            expected = True
            for d in unitary_divisors(fi):
                if 1 < d.value < n and sigma_naive(d.value) % d.value == 0:
                    expected = False
                    break
            assert is_primitive(fi) == expected

    def test_even_perfect_numbers_are_primitive(self):
        # every proper unitary divisor of a perfect number has abundancy
        # below 2, so none can divide its own divisor sum
        for n in (6, 28, 496, 8128, 33550336):
            fi = factorize(n)
            assert abundancy(fi) == 2
            for d in unitary_divisors(fi):
                if 1 < d.value < n:
                    assert abundancy(d) < 2
            assert is_primitive(fi)


class TestPrimitiveDecomposition:
    def test_primitive_number_has_no_parts(self):
        dec = primitive_decomposition(factorize(672))
        assert dec.parts == ()
        assert dec.leftover.value == 672
        assert dec.leftover_is_multiperfect

    def test_210(self):
        dec = primitive_decomposition(factorize(210))
        assert [p.value for p in dec.parts] == [6]
        assert dec.multipliers == (2,)
        assert dec.leftover.value == 35
        assert not dec.leftover_is_multiperfect

    def test_one(self):
        dec = primitive_decomposition(factorize(1))
        assert dec.parts == ()
        assert dec.leftover.value == 1
        assert not dec.leftover_is_multiperfect

    def test_constructed_composites(self):
        for n in (42, 210, 756, 2 * 3 * 11):
            check_decomposition(n, primitive_decomposition(factorize(n)))

    def test_42(self):
        dec = primitive_decomposition(factorize(42))
        assert [p.value for p in dec.parts] == [6]
        assert dec.leftover.value == 7

    def test_756(self):
        # 756 = 28 * 27; the smallest qualifying unitary divisor is 28
        dec = primitive_decomposition(factorize(756))
        assert [p.value for p in dec.parts] == [28]
        assert dec.multipliers == (2,)
        assert dec.leftover.value == 27

    def test_multiperfect_with_nonempty_parts(self):
        # 3 * 459818240 is 4-perfect; 459818240 is 3-perfect and coprime to 3
        n = 3 * 459818240
        fi = factorize(n)
        assert classify(fi).alpha == 4
        dec = primitive_decomposition(fi)
        check_decomposition(n, dec)
        assert dec.parts
        k = 4
        k_prod = 1
        for m in dec.multipliers:
            k_prod *= m
        assert k_prod <= k - 1
        assert sigma(dec.leftover) * k_prod == k * dec.leftover.value

    def test_determinism(self):
        for n in (210, 42, 756, 30240):
            first = primitive_decomposition(factorize(n))
            second = primitive_decomposition(factorize(n))
            assert first == second

    def test_rejects_non_coprime_pieces(self):
        with pytest.raises(ValueError):
            PrimitiveDecomposition(
                (factorize(6),), (2,), factorize(10), False
            )
