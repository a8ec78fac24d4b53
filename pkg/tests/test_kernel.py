import json
import random
from fractions import Fraction

import pytest

from linrec import DivisionNotExact, DomainError, Poly
from linrec.kernel import (
    as_integer,
    binomial,
    exact_div,
    lower_like,
    ring_const,
    ring_exemplar,
    scalar_from_str,
    scalar_to_str,
    value_from_json,
    value_to_json,
)


def pascal_oracle(n: int, k: int) -> int:
    # independent route: additive Pascal recursion, no factorials
    if k == 0:
        return 1
    if k > n:
        return 0
    row = [1]
    for _ in range(n):
        row = [1] + [row[i] + row[i + 1] for i in range(len(row) - 1)] + [1]
    return row[k]


class TestBinomial:
    def test_matches_pascal_recursion(self):
        for n in range(0, 16):
            for k in range(0, n + 1):
                assert binomial(n, k) == pascal_oracle(n, k)

    def test_golden(self):
        assert binomial(30, 15) == 155117520
        assert binomial(0, 0) == 1
        assert binomial(7, 1) == 7

    def test_domain_errors(self):
        with pytest.raises(DomainError):
            binomial(-1, 0)
        with pytest.raises(DomainError):
            binomial(3, -1)
        with pytest.raises(DomainError):
            binomial(3, 4)


class TestExactDiv:
    def test_int(self):
        assert exact_div(12, 3) == 4
        assert isinstance(exact_div(12, 3), int)

    def test_int_inexact(self):
        with pytest.raises(DivisionNotExact):
            exact_div(7, 2)

    def test_zero_divisor(self):
        with pytest.raises(ZeroDivisionError):
            exact_div(1, 0)

    def test_fraction(self):
        assert exact_div(Fraction(3, 2), 3) == Fraction(1, 2)

    def test_poly(self):
        x = Poly.variable(0, 1)
        assert exact_div(2 * x, 2) == x
        # non-integer poly coefficients are fine, exactness is rational
        half_x = exact_div(x, 2)
        assert 2 * half_x == x

    def test_negative(self):
        assert exact_div(-9, 3) == -3
        assert exact_div(9, -3) == -3


class TestLowering:
    def test_as_integer(self):
        assert as_integer(Fraction(4, 2)) == 2
        assert isinstance(as_integer(Fraction(4, 2)), int)
        assert as_integer(5) == 5
        with pytest.raises(DivisionNotExact):
            as_integer(Fraction(1, 2))

    def test_ring_const_and_exemplar(self):
        x = Poly.variable(0, 2)
        assert ring_const(3, x) == Poly.const(3, 2)
        assert ring_const(3, Fraction(1, 2)) == Fraction(3)
        assert ring_const(3, 7) == 3
        assert ring_exemplar([1, Fraction(1, 2), x]) is x
        assert ring_exemplar([1, Fraction(1, 2)]) == Fraction(1, 2)
        assert isinstance(ring_exemplar([1, 2]), int)

    def test_lower_like(self):
        assert lower_like(Fraction(6, 3), [1, 2]) == 2
        assert isinstance(lower_like(Fraction(6, 3), [1, 2]), int)
        assert lower_like(Fraction(1, 2), [Fraction(1, 3)]) == Fraction(1, 2)


def random_poly(rng: random.Random, nvars: int = 2, nterms: int = 3) -> Poly:
    terms = {}
    for _ in range(nterms):
        expo = tuple(rng.randint(0, 2) for _ in range(nvars))
        terms[expo] = terms.get(expo, 0) + rng.randint(-4, 4)
    p = Poly.const(0, nvars)
    for expo, coeff in terms.items():
        mono = Poly.const(coeff, nvars)
        for i, e in enumerate(expo):
            mono = mono * Poly.variable(i, nvars) ** e
        p = p + mono
    return p


class TestPolyRingLaws:
    def test_laws(self):
        rng = random.Random(101)
        for _ in range(50):
            a, b, c = (random_poly(rng) for _ in range(3))
            assert a + b == b + a
            assert a * b == b * a
            assert (a + b) + c == a + (b + c)
            assert (a * b) * c == a * (b * c)
            assert a * (b + c) == a * b + a * c
            assert a - a == Poly.const(0, 2)
            assert a * Poly.const(1, 2) == a

    def test_scalar_mixing(self):
        x = Poly.variable(0, 1)
        assert 2 * x == x * 2
        assert 1 + x == x + 1
        assert Fraction(1, 2) * (2 * x) == x
        assert x - x == 0
        assert (x + 1) - 1 == x

    def test_pow(self):
        x, y = Poly.variables(2)
        assert (x + y) ** 2 == x**2 + 2 * x * y + y**2
        assert (x + y) ** 0 == 1
        assert x**7 * x**3 == x**10


class TestPolySubstitution:
    def test_homomorphism(self):
        rng = random.Random(202)
        for _ in range(30):
            a, b = random_poly(rng), random_poly(rng)
            point = (rng.randint(-3, 3), Fraction(rng.randint(-3, 3), rng.randint(1, 3)))
            assert (a + b)(point) == a(point) + b(point)
            assert (a * b)(point) == a(point) * b(point)

    def test_integer_result_is_int(self):
        x = Poly.variable(0, 1)
        v = (x**2 + 1)((3,))
        assert v == 10 and isinstance(v, int)

    def test_fraction_result(self):
        x = Poly.variable(0, 1)
        assert (x**2)((Fraction(1, 2),)) == Fraction(1, 4)


class TestPolyText:
    def test_str_graded_lex(self):
        c1, c2 = Poly.variables(2)
        p = c1**2 + 2 * c2 - 1
        assert str(p) == "c1^2 + 2*c2 - 1"
        assert str(Poly.const(0, 2)) == "0"
        assert str(-c1) == "-c1"

    def test_ordering_is_total_degree_first(self):
        c1, c2 = Poly.variables(2)
        # c2^2 has degree 2, beats c1 at degree 1 despite lex
        assert str(c2**2 + c1) == "c2^2 + c1"


class TestJson:
    def test_scalar_round_trip(self):
        for v in [0, -7, 10**30, Fraction(1, 2), Fraction(-22, 7)]:
            assert scalar_from_str(scalar_to_str(v)) == v

    def test_scalar_str_forms(self):
        assert scalar_to_str(5) == "5"
        assert scalar_to_str(Fraction(1, 2)) == "1/2"
        assert scalar_to_str(Fraction(4, 2)) == "2"

    def test_value_round_trip(self):
        rng = random.Random(303)
        for _ in range(20):
            p = random_poly(rng)
            blob = json.dumps(value_to_json(p))
            assert value_from_json(json.loads(blob)) == p
        assert value_from_json(value_to_json(12)) == 12
        assert value_from_json(value_to_json(Fraction(3, 4))) == Fraction(3, 4)

    def test_poly_json_numbers_are_strings(self):
        x = Poly.variable(0, 1)
        blob = value_to_json(10**50 * x)
        assert blob["terms"][0]["coefficient"] == str(10**50)


class TestPolyMisc:
    def test_immutable(self):
        x = Poly.variable(0, 1)
        with pytest.raises(AttributeError):
            x.terms = {}

    def test_eq_scalars(self):
        assert Poly.const(3, 2) == 3
        assert Poly.const(Fraction(1, 2), 1) == Fraction(1, 2)
        assert Poly.variable(0, 1) != 3

    def test_hash_consistent(self):
        x, y = Poly.variables(2)
        assert hash(x * y + 1) == hash(1 + y * x)

    def test_has_integer_coefficients(self):
        x = Poly.variable(0, 1)
        assert (2 * x).has_integer_coefficients()
        assert (Fraction(4, 2) * x).has_integer_coefficients()
        assert not (Fraction(1, 2) * x).has_integer_coefficients()

    def test_constant_value(self):
        assert Poly.const(Fraction(6, 2), 3).constant_value() == 3
        x = Poly.variable(0, 1)
        assert (x + 5).constant_value() == 5
        assert x.constant_value() == 0

    def test_total_degree(self):
        x, y = Poly.variables(2)
        assert (x**2 * y + y).total_degree() == 3
        # zero polynomial has degree -1 by convention
        assert Poly.const(0, 2).total_degree() == -1
