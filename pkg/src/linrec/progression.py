"""Recurrences along arithmetic progressions.

If (a_n) satisfies an order-d recurrence with coefficients c, then for any
stride m >= 1 and offset r >= 0 the subsequence b_n = a_{mn+r} satisfies an
order-d recurrence of its own.  Its coefficients g_1..g_d are, up to sign,
the elementary symmetric functions of the m-th powers of the characteristic
roots; they are computed here without roots, from the trace sequence alone:

    g_k = sum_{j=1..k} ((-1)^{j+1} / k!) * B_{k,j}(0!*hat_m, 1!*hat_{2m}, ...)

with the trailing coefficient available directly as
g_d = (-1)^{(d+1)(m+1)} * c_d^m.  All intermediate rationals cancel; results
are lowered back to integers (or integer-coefficient polynomials) with an
assertion, never by rounding.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
import math

from .bell import bell_table
from .kernel import DivisionNotExact, DomainError, Poly, as_integer
from .lucas import lucas_transform, lucas_transform_bell_prefix
from .recurrence import CoeffVector, RecurrenceSpec, as_coeff_vector, seq_range


@dataclass(frozen=True)
class GammaVector:
    """Subsequence coefficients for stride m, as a CoeffVector plus the stride."""

    m: int
    coeffs: CoeffVector

    @property
    def gamma(self) -> tuple:
        return self.coeffs.c

    @property
    def d(self) -> int:
        return self.coeffs.d


def _lower(value, exemplars):
    """Lower a rational intermediate into the coefficient domain, asserting exactness."""
    if isinstance(value, Poly):
        clean = all(
            isinstance(e, int) or (isinstance(e, Poly) and e.has_integer_coefficients())
            for e in exemplars
        )
        if clean and not value.has_integer_coefficients():
            raise DivisionNotExact(f"expected integer coefficients, got {value}")
        return value
    if all(isinstance(e, int) for e in exemplars):
        return as_integer(value)
    return value


def _bell_sum(table, k: int) -> object:
    """sum_{j=1..k} ((-1)^{j+1} / k!) * B_{k,j} from a prepared Bell table."""
    total = 0
    kfact = math.factorial(k)
    for j in range(1, k + 1):
        total = total + Fraction((-1) ** (j + 1), kfact) * table[k][j]
    return total


def gamma_coefficients(coeffs, m: int, *, cross_check: bool = False) -> GammaVector:
    """Coefficients of the order-d recurrence satisfied by every a_{mn+r}.

    Only trace terms hat_m..hat_{(d-1)m} are needed: the trailing coefficient
    comes from the closed sign formula instead of the k = d Bell sum.  With
    cross_check=True that Bell sum is evaluated anyway (it needs hat_{dm})
    and asserted equal.
    """
    cv = as_coeff_vector(coeffs)
    if m < 1:
        raise DomainError(f"stride m must be >= 1, got {m}")
    d = cv.d
    depth = d if cross_check else d - 1
    hats = lucas_transform(cv, depth * m).terms
    x = tuple(math.factorial(i - 1) * hats[i * m] for i in range(1, depth + 1))
    table = bell_table(depth, x)
    gamma = [_lower(_bell_sum(table, k), cv.c) for k in range(1, d)]
    sign = (-1) ** ((d + 1) * (m + 1))
    last = sign * cv.c[-1] ** m
    if cross_check:
        from_bell = _lower(_bell_sum(table, d), cv.c)
        if from_bell != last:
            raise ArithmeticError(
                f"trailing coefficient mismatch: Bell sum {from_bell}, sign formula {last}"
            )
    gamma.append(last)
    return GammaVector(m=m, coeffs=CoeffVector(tuple(gamma)))


def subseq_recurrence(spec: RecurrenceSpec, m: int, r: int) -> RecurrenceSpec:
    """The recurrence b_n = a_{mn+r} satisfies, with its initial terms.

    The coefficient vector does not depend on r; the initial terms are read
    straight off the base sequence.  The relation holds for n >= d.
    """
    if r < 0:
        raise DomainError(f"offset r must be >= 0, got {r}")
    gv = gamma_coefficients(spec.coeffs, m)
    d = spec.order
    base = seq_range(spec, 0, (d - 1) * m + r)
    return RecurrenceSpec(gv.coeffs, tuple(base[i * m + r] for i in range(d)))


def hat_from_gamma(gamma, count: int) -> list:
    """Reconstruct hat_{m}, hat_{2m}, ..., hat_{count*m} from subsequence coefficients.

    The inverse direction of gamma_coefficients: the same Bell expansion that
    defines the trace sequence, applied to g_1..g_d, returns the trace terms
    of the base coefficients sampled at stride m.  Round-tripping is a strong
    whole-pipeline check.
    """
    cv = gamma.coeffs if isinstance(gamma, GammaVector) else as_coeff_vector(gamma)
    return lucas_transform_bell_prefix(cv, count)
