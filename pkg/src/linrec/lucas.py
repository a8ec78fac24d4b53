"""Trace sequences attached to recurrence coefficients.

For coefficients c_1..c_d the trace sequence (hat-sequence) is the power-sum
sequence of the characteristic roots: hat_0 = d and hat_n = sum of n-th
powers of the roots.  It is computed without ever touching the roots, two
independent ways:

  * Newton's identities give hat_n = c_1*hat_{n-1} + ... + c_{n-1}*hat_1
    + n*c_n for 1 <= n <= d, after which the recurrence itself takes over.
  * A partial-Bell expansion gives hat_n directly from the coefficients,
    with (k-1)!/(n-1)! prefactors whose rational parts always cancel.

The classical examples: coefficients (1,1) give the Lucas numbers
2, 1, 3, 4, 7, 11, ...; coefficients (1,1,1) give 3, 1, 3, 7, 11, 21, ...
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
import math

from .bell import bell_table
from .kernel import DomainError, as_integer, lower_like, ring_const, ring_exemplar
from .recurrence import CoeffVector, as_coeff_vector


class UnknownFamily(ValueError):
    """No closed-form trace formula is registered under that family name."""


def _hat_extend(c: tuple, terms: list, upto: int) -> list:
    """Continue a trace-term list (already holding hat_0..) up to index upto."""
    d = len(c)
    while len(terms) <= upto:
        n = len(terms)
        if n <= d:
            value = sum(c[j - 1] * terms[n - j] for j in range(1, n)) + n * c[n - 1]
        else:
            value = sum(c[j - 1] * terms[n - j] for j in range(1, d + 1))
        terms.append(value)
    return terms


@dataclass(frozen=True)
class LucasTransform:
    """Coefficients plus their trace terms hat_0..hat_N."""

    coeffs: CoeffVector
    terms: tuple

    def extended(self, upto: int) -> "LucasTransform":
        """A transform carrying at least terms 0..upto (self if already long enough)."""
        if upto < len(self.terms):
            return self
        terms = _hat_extend(self.coeffs.c, list(self.terms), upto)
        return LucasTransform(self.coeffs, tuple(terms))


def lucas_transform(coeffs, upto: int) -> LucasTransform:
    """Trace terms hat_0..hat_upto via Newton's identities plus the recurrence."""
    cv = as_coeff_vector(coeffs)
    if upto < 0:
        raise DomainError(f"lucas_transform needs upto >= 0, got {upto}")
    seed = ring_const(cv.d, ring_exemplar(cv.c))
    terms = _hat_extend(cv.c, [seed], upto)
    return LucasTransform(cv, tuple(terms))


def lucas_transform_bell_prefix(coeffs, upto: int) -> list:
    """Trace terms hat_1..hat_upto by the Bell expansion, one shared table."""
    cv = as_coeff_vector(coeffs)
    if upto < 1:
        raise DomainError(f"lucas_transform_bell_prefix needs upto >= 1, got {upto}")
    x = tuple(math.factorial(i) * ci for i, ci in enumerate(cv.c, start=1))
    table = bell_table(upto, x)
    out = []
    for n in range(1, upto + 1):
        total = 0
        for k in range(1, n + 1):
            total = total + Fraction(math.factorial(k - 1), math.factorial(n - 1)) * table[n][k]
        out.append(lower_like(total, cv.c))
    return out


def lucas_transform_bell(coeffs, n: int):
    """Single trace term hat_n by the Bell expansion (independent of Newton)."""
    if n < 1:
        raise DomainError(f"lucas_transform_bell needs n >= 1, got {n}")
    return lucas_transform_bell_prefix(coeffs, n)[-1]


# ---------------------------------------------------------------------------
# Closed-form single terms for four classical families.  Each sums a short
# binomial expression with rational m/(m-j) prefactors that cancel exactly;
# binomials whose arguments fall outside 0 <= k <= n are zero and skipped.


def k_lucas_number(k: int, m: int) -> int:
    """m-th term of the trace sequence of coefficients (k, 1)."""
    if m < 1:
        raise DomainError(f"closed forms start at m = 1, got {m}")
    total = Fraction(0)
    for j in range(0, m):
        if 2 * j > m:
            continue
        total += Fraction(m, m - j) * math.comb(m - j, j) * k ** (m - 2 * j)
    return as_integer(total)


def tribonacci_hat_number(m: int) -> int:
    """m-th term of the trace sequence of coefficients (1, 1, 1)."""
    if m < 1:
        raise DomainError(f"closed forms start at m = 1, got {m}")
    total = Fraction(0)
    for j in range(0, m):
        for l in range((j + 1) // 2, j + 1):
            if l > m - j:
                continue
            total += Fraction(m, m - j) * math.comb(m - j, l) * math.comb(l, j - l)
    return as_integer(total)


def perrin_number(m: int) -> int:
    """m-th term of the trace sequence of coefficients (0, 1, 1)."""
    if m < 1:
        raise DomainError(f"closed forms start at m = 1, got {m}")
    total = Fraction(0)
    for j in range((m + 1) // 2, m):
        if 2 * j - m > m - j:
            continue
        total += Fraction(m, m - j) * math.comb(m - j, 2 * j - m)
    return as_integer(total)


def narayana_hat_number(m: int) -> int:
    """m-th term of the trace sequence of coefficients (1, 0, 1)."""
    if m < 1:
        raise DomainError(f"closed forms start at m = 1, got {m}")
    total = Fraction(0)
    for j in range(0, (m - 1) // 2 + 1):
        if 3 * j > m:
            continue
        total += Fraction(m, m - 2 * j) * math.comb(m - 2 * j, j)
    return as_integer(total)


def hat_closed_form(family: str, m: int, k: int | None = None) -> int:
    """Dispatch the closed-form trace term for a named base family.

    ``family`` names the base sequence whose trace is wanted: "k_fibonacci"
    (requires k), "tribonacci", "padovan" or "narayana".
    """
    if family == "k_fibonacci":
        if k is None:
            raise DomainError("family k_fibonacci needs the parameter k")
        return k_lucas_number(k, m)
    if k is not None:
        raise DomainError(f"family {family!r} takes no parameter")
    if family == "tribonacci":
        return tribonacci_hat_number(m)
    if family == "padovan":
        return perrin_number(m)
    if family == "narayana":
        return narayana_hat_number(m)
    raise UnknownFamily(f"no closed form registered for family {family!r}")
