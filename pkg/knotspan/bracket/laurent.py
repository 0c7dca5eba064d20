#####################################################################
# laurent.py
#
# (c) Copyright 2026, knotspan developers. All rights reserved.
#
# This library is free software; you can redistribute it and/or
# modify it under the terms of the GNU Lesser General Public
# License as published by the Free Software Foundation; either
# version 2.1 of the License, or (at your option) any later version.
#
# This software is distributed in the hope that it will be useful,
# but WITHOUT ANY WARRANTY; without even the implied warranty of
# MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the
# GNU Lesser General Public License for more details.
#####################################################################
"""Integer Laurent polynomials in the variable A."""

import sympy

from ..common.exceptions import ZeroPolynomialError

A = sympy.Symbol("A")


def _coefficients_of(expr):
    """Read the exponent -> coefficient map of an expanded expression in ``A``."""
    coefficients = {}
    for term in sympy.expand(expr).as_ordered_terms():
        coefficient, exponent = term.as_coeff_exponent(A)
        if not coefficient.is_Integer or not exponent.is_Integer:
            raise ValueError(f"{expr} is not an integer Laurent polynomial in {A}")

        if coefficient:
            coefficients[int(exponent)] = coefficients.get(int(exponent), 0) + int(coefficient)

    return {exponent: coefficient for exponent, coefficient in coefficients.items() if coefficient}


class LaurentPolynomial:
    """
    Immutable Laurent polynomial with integer coefficients, backed by a sympy expression.

    **Example**::

        >>> from knotspan.bracket import LaurentPolynomial
        >>> delta = -LaurentPolynomial.monomial(2) - LaurentPolynomial.monomial(-2)
        >>> (delta ** 2).terms
        [(-4, 1), (0, 2), (4, 1)]
        >>> str(delta)
        '-A**2 - 1/A**2'
    """

    __slots__ = ("_expr", "_coefficients", "_hash")

    def __init__(self, coefficients=None):
        """
        Initialize a polynomial.

        :param coefficients: coefficient per exponent, zeros are dropped
        :type coefficients: mapping of integer to integer
        """
        cleaned = {}
        for exponent, coefficient in (coefficients or {}).items():
            if not isinstance(exponent, int) or not isinstance(coefficient, int):
                raise TypeError(f"exponent and coefficient must be integers, got {exponent!r}: {coefficient!r}")

            if coefficient:
                cleaned[exponent] = coefficient

        self._set(sympy.Add(*[coefficient * A ** exponent for exponent, coefficient in cleaned.items()]), cleaned)

    def _set(self, expr, coefficients):
        object.__setattr__(self, "_expr", expr)
        object.__setattr__(self, "_coefficients", coefficients)
        object.__setattr__(self, "_hash", None)

    def __setattr__(self, name, value):
        """Reject attribute changes."""
        raise AttributeError(f"{self.__class__.__name__} is immutable")

    def __reduce__(self):
        """Pickle through the constructor."""
        return self.__class__, (dict(self._coefficients),)

    @classmethod
    def from_expr(cls, expr):
        """
        Build a polynomial from a sympy expression in ``A``.

        **Example**::

            >>> from knotspan.bracket.laurent import A, LaurentPolynomial
            >>> LaurentPolynomial.from_expr((A + 1 / A) ** 2).terms
            [(-2, 1), (0, 2), (2, 1)]

        :param expr: expression, expanded before reading the coefficients
        :type expr: sympy expression
        :returns: polynomial
        :rtype: :class:`knotspan.bracket.LaurentPolynomial`
        :raises ValueError: when the expansion has fractional coefficients or exponents
        """
        expanded = sympy.expand(expr)
        polynomial = cls.__new__(cls)
        polynomial._set(expanded, _coefficients_of(expanded))

        return polynomial

    @classmethod
    def monomial(cls, exponent, coefficient=1):
        """Get ``coefficient * A**exponent``."""
        return cls({exponent: coefficient})

    @classmethod
    def zero(cls):
        """Get the zero polynomial."""
        return cls()

    @classmethod
    def one(cls):
        """Get the constant 1."""
        return cls({0: 1})

    @classmethod
    def from_terms(cls, terms):
        """
        Build a polynomial from (exponent, coefficient) pairs, repeated exponents are summed.

        :param terms: pairs of exponent and coefficient
        :type terms: iterable of pairs of integers
        :returns: polynomial
        :rtype: :class:`knotspan.bracket.LaurentPolynomial`
        """
        return cls.from_expr(sympy.Add(*[int(coefficient) * A ** int(exponent) for exponent, coefficient in terms]))

    @property
    def terms(self):
        """Nonzero (exponent, coefficient) pairs by ascending exponent."""
        return sorted(self._coefficients.items())

    def coefficient(self, exponent):
        """Get the coefficient of ``A**exponent``, 0 when absent."""
        return self._coefficients.get(exponent, 0)

    def is_zero(self):
        """Check for the zero polynomial."""
        return not self._coefficients

    @property
    def max_degree(self):
        """Highest exponent."""
        if self.is_zero():
            raise ZeroPolynomialError("zero polynomial has no degree")

        return max(self._coefficients)

    @property
    def min_degree(self):
        """Lowest exponent."""
        if self.is_zero():
            raise ZeroPolynomialError("zero polynomial has no degree")

        return min(self._coefficients)

    @property
    def span(self):
        """Difference of highest and lowest exponent, 0 for monomials."""
        return self.max_degree - self.min_degree

    def inverted(self):
        """Substitute ``A -> A**-1``."""
        return LaurentPolynomial.from_expr(self._expr.subs(A, 1 / A))

    def shifted(self, offset):
        """Multiply by ``A**offset``."""
        return LaurentPolynomial.from_expr(self._expr * A ** offset)

    @staticmethod
    def _coerce(other):
        if isinstance(other, LaurentPolynomial):
            return other

        if isinstance(other, int) and not isinstance(other, bool):
            return LaurentPolynomial({0: other})

        return None

    def __add__(self, other):
        """Add polynomials or integers."""
        other = self._coerce(other)
        if other is None:
            return NotImplemented

        return LaurentPolynomial.from_expr(self._expr + other._expr)

    __radd__ = __add__

    def __neg__(self):
        """Negate every coefficient."""
        return LaurentPolynomial.from_expr(-self._expr)

    def __sub__(self, other):
        """Subtract polynomials or integers."""
        other = self._coerce(other)
        if other is None:
            return NotImplemented

        return LaurentPolynomial.from_expr(self._expr - other._expr)

    def __rsub__(self, other):
        """Subtract from an integer."""
        other = self._coerce(other)
        if other is None:
            return NotImplemented

        return LaurentPolynomial.from_expr(other._expr - self._expr)

    def __mul__(self, other):
        """Multiply polynomials or scale by an integer."""
        other = self._coerce(other)
        if other is None:
            return NotImplemented

        return LaurentPolynomial.from_expr(self._expr * other._expr)

    __rmul__ = __mul__

    def __pow__(self, exponent):
        """
        Raise to an integer power.

        Negative powers are only defined for the units ``±A**e``.
        """
        if not isinstance(exponent, int):
            return NotImplemented

        if exponent < 0 and (len(self._coefficients) != 1 or abs(next(iter(self._coefficients.values()))) != 1):
            raise ValueError(f"{self} has no Laurent polynomial inverse")

        return LaurentPolynomial.from_expr(self._expr ** exponent)

    def __eq__(self, other):
        """Compare with polynomials or integers."""
        other = self._coerce(other)
        if other is None:
            return NotImplemented

        return self._coefficients == other._coefficients

    def __hash__(self):
        """Hash the terms."""
        if self._hash is None:
            object.__setattr__(self, "_hash", hash(tuple(self.terms)))

        return self._hash

    def __bool__(self):
        """True unless zero."""
        return not self.is_zero()

    def to_json(self):
        """Get the JSON object ``{"terms": [[exponent, coefficient], ...]}``."""
        return {"terms": [[exponent, coefficient] for exponent, coefficient in self.terms]}

    @classmethod
    def from_json(cls, data):
        """Build a polynomial from :meth:`to_json` output."""
        return cls.from_terms(data["terms"])

    def as_expr(self):
        """Get the polynomial as a sympy expression in ``A``."""
        return self._expr

    def __str__(self):
        """Get the polynomial as text."""
        return str(self._expr)

    def __repr__(self):
        """Generate representation for an object."""
        return f"{self.__class__.__name__}({dict(self.terms)})"
