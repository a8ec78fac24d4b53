"""Shared helpers for the test suite: reproducible random recurrence specs."""

from __future__ import annotations

import random

from linrec import CoeffVector, RecurrenceSpec


def random_coeffs(rng: random.Random, max_d: int = 5, bound: int = 3) -> tuple:
    """Random integer coefficients c_1..c_d with |c_i| <= bound and c_d != 0."""
    d = rng.randint(1, max_d)
    c = [rng.randint(-bound, bound) for _ in range(d - 1)]
    c.append(rng.choice([v for v in range(-bound, bound + 1) if v]))
    return tuple(c)


def random_spec(rng: random.Random, max_d: int = 5, bound: int = 3, init_bound: int = 5) -> RecurrenceSpec:
    coeffs = CoeffVector(random_coeffs(rng, max_d, bound))
    initial = tuple(rng.randint(-init_bound, init_bound) for _ in range(coeffs.d))
    return RecurrenceSpec(coeffs, initial)
