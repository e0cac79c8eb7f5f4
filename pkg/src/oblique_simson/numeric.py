"""Scalar arithmetic behind all geometry, with two interchangeable backends.

The exact backend wraps :class:`fractions.Fraction` (arbitrary-precision,
always canonical: positive denominator, gcd-reduced, zero as 0/1), so every
identity the geometry asserts can be checked as a literal equality.  The
approximate backend wraps binary floats together with an absolute tolerance
``eps_abs``; its zero test is ``|x| <= eps_abs``, optionally scaled by the
magnitude of the quantities that produced ``x``.

Backends never mix: combining scalars from different backends raises
:class:`~oblique_simson.errors.BackendMismatch`.  Plain ``int`` and
``Fraction`` operands are accepted on either backend (the coercion is
lossless); raw ``float`` operands are accepted only on a float backend.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Union

from .errors import BackendMismatch, DivisionByZero, ParseError, ZeroDenominator

Rational = Fraction  # canonical big rational: den > 0, gcd-reduced, 0 -> 0/1

_CoercibleExact = Union[int, Fraction, str]
_Coercible = Union[int, float, Fraction, str]


def rational(p: int, q: int = 1) -> Fraction:
    """Build the canonical rational p/q.  Raises ZeroDenominator if q = 0."""
    if q == 0:
        raise ZeroDenominator(f"rational {p}/0 has zero denominator")
    return Fraction(p, q)


def format_rational(r: Fraction) -> str:
    """Canonical text form: "p/q" with the sign on p, or plain "p" for integers."""
    if r.denominator == 1:
        return str(r.numerator)
    return f"{r.numerator}/{r.denominator}"


def parse_rational(text: str) -> Fraction:
    """Parse "p/q", "p" or a decimal literal into an exact rational.

    Decimal literals are exact: "0.25" -> 1/4, "1e-3" -> 1/1000.
    """
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise ParseError(f"not a rational: {text!r}") from exc


class Backend:
    """Arithmetic context.  Use the EXACT singleton or a FloatBackend."""

    name: str
    exact: bool

    def coerce(self, value):
        raise NotImplementedError

    def scalar(self, value) -> "Scalar":
        """Wrap a value (int, Fraction, str, or same-backend Scalar) as a Scalar."""
        if isinstance(value, Scalar):
            if value.backend != self:
                raise BackendMismatch(
                    f"cannot adopt a {value.backend.name} scalar into the {self.name} backend"
                )
            return value
        return Scalar(self, self.coerce(value))

    def parse(self, text: str) -> "Scalar":
        return Scalar(self, self.coerce(parse_rational(text)))


class ExactBackend(Backend):
    name = "exact"
    exact = True

    def coerce(self, value) -> Fraction:
        if isinstance(value, bool) or not isinstance(value, (int, Fraction, str)):
            raise TypeError(
                f"exact backend cannot represent {type(value).__name__} losslessly"
            )
        if isinstance(value, str):
            return parse_rational(value)
        return Fraction(value)

    def __eq__(self, other) -> bool:
        return isinstance(other, ExactBackend)

    def __hash__(self) -> int:
        return hash(ExactBackend)

    def __repr__(self) -> str:
        return "EXACT"


class FloatBackend(Backend):
    """Binary floats with an absolute tolerance (coordinate units)."""

    name = "float"
    exact = False

    def __init__(self, eps_abs: float = 1e-9):
        if not eps_abs > 0:
            raise ValueError("eps_abs must be positive")
        self.eps_abs = float(eps_abs)

    def coerce(self, value) -> float:
        if isinstance(value, bool):
            raise TypeError("bool is not a scalar")
        if isinstance(value, str):
            return float(parse_rational(value))
        if isinstance(value, (int, float, Fraction)):
            return float(value)
        raise TypeError(f"float backend cannot represent {type(value).__name__}")

    def __eq__(self, other) -> bool:
        return isinstance(other, FloatBackend) and other.eps_abs == self.eps_abs

    def __hash__(self) -> int:
        return hash((FloatBackend, self.eps_abs))

    def __repr__(self) -> str:
        return f"FloatBackend(eps_abs={self.eps_abs!r})"


EXACT = ExactBackend()


class Scalar:
    """An immutable number bound to a backend.

    Arithmetic never mixes backends; ``int`` and ``Fraction`` operands are
    coerced into the scalar's own backend.
    """

    __slots__ = ("backend", "value")

    def __init__(self, backend: Backend, value):
        object.__setattr__(self, "backend", backend)
        object.__setattr__(self, "value", value)

    def __setattr__(self, name, _value):
        raise AttributeError(f"Scalar is immutable; cannot set {name!r}")

    # -- coercion ---------------------------------------------------------

    def _operand(self, other):
        if isinstance(other, Scalar):
            if other.backend != self.backend:
                raise BackendMismatch(
                    f"cannot combine {self.backend.name} and {other.backend.name} scalars"
                )
            return other.value
        if isinstance(other, (int, float, Fraction)) and not isinstance(other, bool):
            try:
                return self.backend.coerce(other)
            except TypeError:
                return NotImplemented
        return NotImplemented

    def _wrap(self, value) -> "Scalar":
        return Scalar(self.backend, value)

    # -- arithmetic --------------------------------------------------------

    def __add__(self, other):
        v = self._operand(other)
        return NotImplemented if v is NotImplemented else self._wrap(self.value + v)

    __radd__ = __add__

    def __sub__(self, other):
        v = self._operand(other)
        return NotImplemented if v is NotImplemented else self._wrap(self.value - v)

    def __rsub__(self, other):
        v = self._operand(other)
        return NotImplemented if v is NotImplemented else self._wrap(v - self.value)

    def __mul__(self, other):
        v = self._operand(other)
        return NotImplemented if v is NotImplemented else self._wrap(self.value * v)

    __rmul__ = __mul__

    def __truediv__(self, other):
        v = self._operand(other)
        if v is NotImplemented:
            return NotImplemented
        if is_zero(self._wrap(v)):
            raise DivisionByZero("division by zero scalar")
        return self._wrap(self.value / v)

    def __rtruediv__(self, other):
        v = self._operand(other)
        if v is NotImplemented:
            return NotImplemented
        if is_zero(self):
            raise DivisionByZero("division by zero scalar")
        return self._wrap(v / self.value)

    def __neg__(self):
        return self._wrap(-self.value)

    def __abs__(self):
        return self._wrap(abs(self.value))

    # -- predicates ---------------------------------------------------------

    def __eq__(self, other) -> bool:
        v = self._operand(other)
        if v is NotImplemented:
            return NotImplemented
        if self.backend.exact:
            return self.value == v
        return abs(self.value - v) <= self.backend.eps_abs

    def __lt__(self, other):
        v = self._operand(other)
        return NotImplemented if v is NotImplemented else self.value < v

    def __le__(self, other):
        v = self._operand(other)
        return NotImplemented if v is NotImplemented else self.value <= v

    def __gt__(self, other):
        v = self._operand(other)
        return NotImplemented if v is NotImplemented else self.value > v

    def __ge__(self, other):
        v = self._operand(other)
        return NotImplemented if v is NotImplemented else self.value >= v

    # -- views --------------------------------------------------------------

    def __float__(self) -> float:
        return float(self.value)

    def __repr__(self) -> str:
        return f"Scalar({self.backend.name}, {format_scalar(self)})"

    @property
    def numerator(self) -> int:
        if not self.backend.exact:
            raise TypeError("numerator is defined only on the exact backend")
        return self.value.numerator

    @property
    def denominator(self) -> int:
        if not self.backend.exact:
            raise TypeError("denominator is defined only on the exact backend")
        return self.value.denominator


def is_zero(x: Scalar, entries: Iterable[Scalar] = ()) -> bool:
    """Backend-aware zero test.

    On the exact backend this is literal.  On the float backend the threshold
    is ``eps_abs`` scaled by the largest magnitude among *entries* (the inputs
    that fed the tested quantity, e.g. determinant entries), never below
    ``eps_abs`` itself.
    """
    if x.backend.exact:
        return x.value == 0
    scale = 1.0
    for e in entries:
        m = abs(float(e))
        if m > scale:
            scale = m
    return abs(x.value) <= x.backend.eps_abs * scale


def scalars_equal(x: Scalar, y: Scalar, entries: Iterable[Scalar] = ()) -> bool:
    """Equality via the scaled zero test of ``x - y``."""
    return is_zero(x - y, entries)


def format_scalar(x: Scalar) -> str:
    """Text form used in all file formats: "p/q" exactly, repr of the float."""
    if x.backend.exact:
        return format_rational(x.value)
    return repr(x.value)


def parse_scalar(text: str, backend: Backend = EXACT) -> Scalar:
    """Parse "p/q", "p" or a decimal literal on the requested backend."""
    return backend.parse(text)
