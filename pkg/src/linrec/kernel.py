"""Exact arithmetic domains shared by every other module.

Three coefficient domains are supported, all exact:

  * ``int``            -- arbitrary-precision integers (the default domain)
  * ``Fraction``       -- exact rationals (stdlib ``fractions.Fraction``)
  * :class:`Poly`      -- sparse multivariate polynomials over Fraction

All three support ``+``, ``-``, ``*``, unary ``-`` and ``**`` with nonnegative
integer exponents, so the higher-level algorithms are written once against
that operator surface and run unchanged in numeric or symbolic mode.  No
floating point is used anywhere.
"""

from __future__ import annotations

from fractions import Fraction
import math


class DivisionNotExact(ArithmeticError):
    """A division that the caller asserted to be exact left a remainder.

    Raised by :func:`exact_div` and :func:`as_integer`.  Reaching this from
    library code signals an internal bug (a cancellation that mathematics
    guarantees did not happen), never bad user input.
    """


class DomainError(ValueError):
    """An argument lies outside an operation's documented domain."""


#: Values usable as recurrence data in numeric mode.
Scalar = int | Fraction

#: Values usable as recurrence data in any mode.
RingElement = "int | Fraction | Poly"


def binomial(n: int, k: int) -> int:
    """Exact binomial coefficient C(n, k) for 0 <= k <= n."""
    if not (isinstance(n, int) and isinstance(k, int)):
        raise DomainError(f"binomial expects integers, got {n!r}, {k!r}")
    if k < 0 or n < 0 or k > n:
        raise DomainError(f"binomial({n}, {k}) is outside 0 <= k <= n")
    return math.comb(n, k)


def exact_div(a, n):
    """Divide ``a`` by a nonzero integer ``n``, requiring exactness.

    In the int domain the quotient must be an integer (DivisionNotExact
    otherwise).  Fraction and Poly values divide exactly by construction.
    A Fraction divisor is accepted for rational-coefficient callers.
    """
    if n == 0:
        raise ZeroDivisionError("exact_div by zero")
    if isinstance(a, Poly):
        return a * (Fraction(1) / Fraction(n))
    if isinstance(a, int) and isinstance(n, int):
        q, r = divmod(a, n)
        if r:
            raise DivisionNotExact(f"{a} is not divisible by {n}")
        return q
    if isinstance(a, (int, Fraction)) and isinstance(n, (int, Fraction)):
        return Fraction(a) / Fraction(n)
    raise TypeError(f"exact_div does not apply to {type(a).__name__}")


def as_integer(x) -> int:
    """Lower an exact value to int, raising DivisionNotExact if it is not one."""
    if isinstance(x, int):
        return x
    if isinstance(x, Fraction):
        if x.denominator != 1:
            raise DivisionNotExact(f"{x} is not an integer")
        return x.numerator
    raise DivisionNotExact(f"{x!r} is not an integer")


def ring_const(value: int, like) -> RingElement:
    """Inject the integer ``value`` into the domain of the exemplar ``like``."""
    if isinstance(like, Poly):
        return Poly.const(value, like.nvars)
    if isinstance(like, Fraction):
        return Fraction(value)
    return value


def ring_exemplar(values):
    """Pick the value whose domain dominates: Poly beats Fraction beats int."""
    best = 0
    for v in values:
        if isinstance(v, Poly):
            return v
        if isinstance(v, Fraction):
            best = v
    return best


def lower_like(value, exemplars):
    """Collapse a rational intermediate back into the exemplars' domain.

    When every exemplar is an int the cancellation must have been complete,
    so the value is lowered with :func:`as_integer` (DivisionNotExact marks
    an internal bug).  Poly and Fraction results pass through unchanged.
    """
    if isinstance(value, Poly):
        return value
    if all(isinstance(e, int) for e in exemplars):
        return as_integer(value)
    return value


# ---------------------------------------------------------------------------
# Sparse multivariate polynomials


class Poly:
    """Sparse multivariate polynomial with Fraction coefficients.

    Terms are stored as a dict mapping exponent tuples (one entry per
    variable) to nonzero Fraction coefficients; the zero polynomial is the
    empty dict.  Instances are treated as immutable: every operation returns
    a fresh Poly.  Serialization and printing walk the terms in graded
    lexicographic order, largest first, so output is deterministic.
    """

    __slots__ = ("nvars", "terms")

    def __init__(self, nvars: int, terms=()):
        if nvars < 1:
            raise ValueError("Poly needs at least one variable")
        clean: dict[tuple[int, ...], Fraction] = {}
        items = terms.items() if isinstance(terms, dict) else terms
        for exps, coeff in items:
            exps = tuple(exps)
            if len(exps) != nvars or any(e < 0 or not isinstance(e, int) for e in exps):
                raise ValueError(f"bad exponent vector {exps!r} for nvars={nvars}")
            coeff = Fraction(coeff)
            if coeff:
                coeff = clean.get(exps, Fraction(0)) + coeff
                if coeff:
                    clean[exps] = coeff
                else:
                    del clean[exps]
        object.__setattr__(self, "nvars", nvars)
        object.__setattr__(self, "terms", clean)

    def __setattr__(self, name, value):
        raise AttributeError("Poly is immutable")

    # -- constructors ------------------------------------------------------

    @classmethod
    def const(cls, value, nvars: int) -> "Poly":
        return cls(nvars, {(0,) * nvars: Fraction(value)} if value else {})

    @classmethod
    def variable(cls, i: int, nvars: int) -> "Poly":
        if not 0 <= i < nvars:
            raise ValueError(f"variable index {i} out of range for nvars={nvars}")
        exps = tuple(1 if j == i else 0 for j in range(nvars))
        return cls(nvars, {exps: Fraction(1)})

    @classmethod
    def variables(cls, nvars: int) -> tuple["Poly", ...]:
        """All ``nvars`` coordinate polynomials, in order."""
        return tuple(cls.variable(i, nvars) for i in range(nvars))

    # -- structure ---------------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def total_degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        return max((sum(e) for e in self.terms), default=-1)

    def constant_value(self) -> Fraction:
        """The coefficient of the constant term (0 if absent)."""
        return self.terms.get((0,) * self.nvars, Fraction(0))

    def has_integer_coefficients(self) -> bool:
        return all(c.denominator == 1 for c in self.terms.values())

    def sorted_terms(self) -> list[tuple[tuple[int, ...], Fraction]]:
        """Terms in graded-lex order, highest first."""
        return sorted(self.terms.items(), key=lambda t: (sum(t[0]), t[0]), reverse=True)

    # -- ring operations ---------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, Poly):
            if other.nvars != self.nvars:
                raise ValueError("mixing polynomials over different variable sets")
            return other
        if isinstance(other, (int, Fraction)):
            return Poly.const(other, self.nvars)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        terms = dict(self.terms)
        for exps, c in other.terms.items():
            s = terms.get(exps, Fraction(0)) + c
            if s:
                terms[exps] = s
            else:
                terms.pop(exps, None)
        return Poly(self.nvars, terms)

    __radd__ = __add__

    def __neg__(self):
        return Poly(self.nvars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            c = Fraction(other)
            if not c:
                return Poly(self.nvars)
            return Poly(self.nvars, {e: k * c for e, k in self.terms.items()})
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        terms: dict[tuple[int, ...], Fraction] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                s = terms.get(e, Fraction(0)) + c1 * c2
                if s:
                    terms[e] = s
                else:
                    del terms[e]
        return Poly(self.nvars, terms)

    __rmul__ = __mul__

    def __pow__(self, exponent: int):
        if not isinstance(exponent, int) or exponent < 0:
            raise ValueError("Poly exponent must be a nonnegative integer")
        result = Poly.const(1, self.nvars)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.nvars == other.nvars and self.terms == other.terms
        if isinstance(other, (int, Fraction)):
            if not self.terms:
                return other == 0
            return self.total_degree() == 0 and self.constant_value() == other
        return NotImplemented

    def __hash__(self):
        return hash((self.nvars, frozenset(self.terms.items())))

    def __bool__(self):
        return bool(self.terms)

    # -- evaluation and display --------------------------------------------

    def __call__(self, values):
        """Substitute exact values for the variables.

        Returns an int when the result is integral, a Fraction otherwise.
        The substitution is a ring homomorphism.
        """
        values = tuple(values)
        if len(values) != self.nvars:
            raise ValueError(f"expected {self.nvars} values, got {len(values)}")
        total = Fraction(0)
        for exps, coeff in self.terms.items():
            term = coeff
            for v, e in zip(values, exps):
                if e:
                    term *= Fraction(v) ** e
            total += term
        return total.numerator if total.denominator == 1 else total

    def _monomial_str(self, exps) -> str:
        parts = []
        for i, e in enumerate(exps):
            if e == 1:
                parts.append(f"c{i + 1}")
            elif e > 1:
                parts.append(f"c{i + 1}^{e}")
        return "*".join(parts)

    def __str__(self):
        if not self.terms:
            return "0"
        chunks = []
        for exps, coeff in self.sorted_terms():
            mono = self._monomial_str(exps)
            mag = abs(coeff)
            if mono:
                body = mono if mag == 1 else f"{mag}*{mono}"
            else:
                body = str(mag)
            if not chunks:
                chunks.append(body if coeff > 0 else f"-{body}")
            else:
                chunks.append(f"+ {body}" if coeff > 0 else f"- {body}")
        return " ".join(chunks)

    def __repr__(self):
        return f"Poly({self.nvars}, {self.terms!r})"


# ---------------------------------------------------------------------------
# Serialization: every exact value has a deterministic text form.


def scalar_to_str(x: Scalar) -> str:
    """Render an exact scalar: decimal for integers, ``p/q`` otherwise."""
    if isinstance(x, Fraction):
        if x.denominator == 1:
            return str(x.numerator)
        return f"{x.numerator}/{x.denominator}"
    if isinstance(x, int):
        return str(x)
    raise TypeError(f"not an exact scalar: {x!r}")


def scalar_from_str(text: str) -> Scalar:
    """Parse a decimal integer or a ``p/q`` rational.  Inverse of scalar_to_str."""
    text = text.strip()
    if "/" in text:
        num, _, den = text.partition("/")
        value = Fraction(int(num), int(den))
        return value.numerator if value.denominator == 1 else value
    return int(text)


def value_to_json(x) -> str | dict:
    """JSON payload for any ring element; numbers are decimal strings."""
    if isinstance(x, Poly):
        return {
            "nvars": x.nvars,
            "terms": [
                {"exponents": list(exps), "coefficient": scalar_to_str(coeff)}
                for exps, coeff in x.sorted_terms()
            ],
        }
    return scalar_to_str(x)


def value_from_json(payload) -> RingElement:
    """Inverse of value_to_json."""
    if isinstance(payload, str):
        return scalar_from_str(payload)
    terms = [
        (tuple(rec["exponents"]), Fraction(scalar_from_str(rec["coefficient"])))
        for rec in payload["terms"]
    ]
    return Poly(payload["nvars"], terms)
