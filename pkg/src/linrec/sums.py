"""Closed-form partial sums of linear recurrences.

Summing the defining relation telescopes into the identity

    q(1) * sum_{j=0..n} a_j  =  sum_{j=0..d-1} w_j * (a_{n+j+1} - a_j),

where q(t) = 1 - c_1 t - ... - c_d t^d and w_j = sum_{i=0..d-1-j} c_i with
the convention c_0 = -1.  When q(1) != 0 this solves the partial sum in
closed form from d look-ahead terms; when q(1) = 0 no closed form of this
shape exists (DegenerateDivisor) and callers fall back to direct summation.

The same machinery applies to arithmetic-progression subsequences: their own
recurrence (from :mod:`linrec.progression`) is summed the same way, and its
divisor can degenerate even when the base one does not (coefficients (1,-1)
at stride 6, for instance).

The inverse sequence y (generating function 1/q(t)) satisfies the analogous
identity with an extra +1 and no subtracted head; it holds even in the
degenerate case, which makes it a useful self-check.  Any initial vector
decomposes over shifts of y, giving one more reconstruction route.
"""

from __future__ import annotations

from dataclasses import dataclass

from .kernel import DomainError, exact_div, ring_const, ring_exemplar
from .progression import subseq_recurrence
from .recurrence import RecurrenceSpec, as_coeff_vector, seq_range


class DegenerateDivisor(ArithmeticError):
    """q(1) = 0: the closed partial-sum form does not exist for these coefficients."""


def _weights(c: tuple) -> list:
    """w_j = -1 + c_1 + ... + c_{d-1-j} for j = 0..d-1 (the c_0 = -1 convention)."""
    d = len(c)
    return [sum(c[: d - 1 - j]) - 1 for j in range(d)]


@dataclass(frozen=True)
class SumClosedForm:
    """Exact closed form: sum_{j<=n} a_j = (sum_j weights[j]*a_{n+j+1} + constant) / divisor."""

    divisor: object
    weights: tuple
    constant: object

    def evaluate(self, lookahead):
        """Apply the form to look-ahead terms a_{n+1}..a_{n+d}."""
        lookahead = tuple(lookahead)
        if len(lookahead) != len(self.weights):
            raise DomainError(f"expected {len(self.weights)} look-ahead terms")
        numerator = sum(w * t for w, t in zip(self.weights, lookahead)) + self.constant
        return exact_div(numerator, self.divisor)


def partial_sum_form(spec: RecurrenceSpec) -> SumClosedForm:
    """Build the closed form for a spec; DegenerateDivisor when q(1) = 0."""
    c = spec.coeffs.c
    divisor = 1 - sum(c)
    if divisor == 0:
        raise DegenerateDivisor(
            "q(1) = 0 for these coefficients; sum the terms directly instead"
        )
    weights = _weights(c)
    constant = -sum(w * a for w, a in zip(weights, spec.initial))
    return SumClosedForm(divisor=divisor, weights=tuple(weights), constant=constant)


def partial_sum_closed(spec: RecurrenceSpec, n: int):
    """sum_{j=0..n} a_j in closed form, exactly."""
    if n < 0:
        raise DomainError(f"partial sums need n >= 0, got {n}")
    form = partial_sum_form(spec)
    d = spec.order
    terms = seq_range(spec, 0, n + d)
    return form.evaluate(terms[n + 1 : n + d + 1])


@dataclass(frozen=True)
class InvertSumCheck:
    """Both sides of the inverse-sequence sum identity; they must be equal.

    lhs = q(1) * sum_{j<=n} y_j and rhs = 1 + sum_j w_j y_{n+j+1}.  The
    identity holds even when q(1) = 0, so this record is its own check.
    """

    q_at_one: object
    partial_sum: object
    lhs: object
    rhs: object

    @property
    def holds(self) -> bool:
        return self.lhs == self.rhs


def invert_sequence(coeffs, upto: int) -> list:
    """Terms y_0..y_upto of the inverse sequence (generating function 1/q)."""
    cv = as_coeff_vector(coeffs)
    if upto < 0:
        raise DomainError(f"invert_sequence needs upto >= 0, got {upto}")
    c = cv.c
    y = [ring_const(1, ring_exemplar(c))]
    for j in range(1, upto + 1):
        window = min(j, len(c))
        y.append(sum(c[i - 1] * y[j - i] for i in range(1, window + 1)))
    return y


def invert_partial_sum(coeffs, n: int) -> InvertSumCheck:
    """Evaluate both sides of the inverse-sequence sum identity at n."""
    cv = as_coeff_vector(coeffs)
    if n < 0:
        raise DomainError(f"invert_partial_sum needs n >= 0, got {n}")
    c = cv.c
    d = len(c)
    y = invert_sequence(cv, n + d)
    q_at_one = 1 - sum(c)
    partial = sum(y[: n + 1])
    weights = _weights(c)
    rhs = 1 + sum(w * y[n + j + 1] for j, w in enumerate(weights))
    return InvertSumCheck(q_at_one=q_at_one, partial_sum=partial, lhs=q_at_one * partial, rhs=rhs)


def lambda_decompose(spec: RecurrenceSpec) -> tuple:
    """Coordinates of the initial vector over shifted inverse sequences.

    Returns lam_0..lam_{d-1} with lam_0 = a_0 and
    lam_n = a_n - sum_{j=1..n} c_j a_{n-j}; then a_n = sum_l lam_l * y_{n-l}
    for all n (with y_i = 0 for i < 0).
    """
    c = spec.coeffs.c
    a = spec.initial
    lams = [a[0]]
    for n in range(1, len(c)):
        lams.append(a[n] - sum(c[j - 1] * a[n - j] for j in range(1, n + 1)))
    return tuple(lams)


def progression_sum(spec: RecurrenceSpec, m: int, r: int, n: int):
    """sum_{j=0..n} a_{mj+r} in closed form, via the subsequence's own recurrence.

    Raises DegenerateDivisor when the subsequence divisor vanishes, which can
    happen even though the base divisor does not.
    """
    return partial_sum_closed(subseq_recurrence(spec, m, r), n)
