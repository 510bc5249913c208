#!/usr/bin/env python

#
# This file is part of the `lefmod` Python module
#
# Copyright 2024
# Heidelberg University Hospital
#
# File author(s): OmniPath team (omnipathdb@gmail.com)
#
# Distributed under the GPLv3 license
# See the file `LICENSE` or read a copy at
# https://www.gnu.org/licenses/gpl-3.0.txt
#

"""
Classification of the division algebra E / rad E of an indecomposable
module.
"""

from __future__ import annotations

__all__ = [
    'DivisionType',
    'classify_division',
]

from fractions import Fraction
from dataclasses import dataclass

import sympy as sp

from lefmod._session import _log
from lefmod._errors import NotIndecomposableError
from lefmod.exactlin import Mat, Subspace, min_poly, poly_coefficients
from lefmod.decomp._endo import EndAlgebra, GradedMap, compose


@dataclass(frozen = True)
class DivisionType:
    """
    ``R``, ``C``, ``H`` or ``other`` with the dimension over ℚ and, for
    ``other``, a description such as a minimal polynomial.
    """

    tag: str
    dim: int
    detail: str = ''

    def __str__(self) -> str:

        return self.tag if self.tag != 'other' else f'other({self.dim}, {self.detail})'


class _Quotient:
    """
    S = E / J in the coordinates of a canonical complement of J.
    """

    def __init__(self, end: EndAlgebra):

        self.end = end
        radical = end.radical
        self.complement = radical.complete_to(Subspace.full(end.dim))
        change = Mat.hstack([radical.basis, self.complement], rows = end.dim)
        self.projection = change.inverse().select_rows(
            range(radical.dim, end.dim),
        )
        self.dim = self.complement.cols
        self.unit = self.reduce(end.identity())


    def reduce(self, f: GradedMap) -> Mat:

        return self.projection @ self.end.coordinates(f)


    def lift(self, v: Mat) -> GradedMap:

        return self.end.element((self.complement @ v).entries)


    def basis(self, c: int) -> Mat:

        return Mat.unit(self.dim, c)


    def left(self, v: Mat) -> Mat:

        lifted = self.lift(v)

        return Mat.from_columns(
            [
                self.reduce(compose(lifted, self.lift(self.basis(c))))
                for c in range(self.dim)
            ],
            rows = self.dim,
        )


    def mul(self, u: Mat, v: Mat) -> Mat:

        return self.left(u) @ v


    def scalar(self, v: Mat) -> Fraction | None:
        """
        λ if v = λ·1, else None.
        """

        idx = next(i for i, x in enumerate(self.unit.entries) if x)
        lam = v.entries[idx] / self.unit.entries[idx]

        return lam if self.unit.scale(lam) == v else None


    def pure(self, v: Mat) -> tuple[Mat, Fraction] | None:
        """
        Trace free part of a quadratic element and its square.
        """

        coeffs = poly_coefficients(min_poly(self.left(v)))

        if len(coeffs) != 3:

            return None

        _, b, c = coeffs
        pure = v + self.unit.scale(b / 2)

        return pure, b * b / 4 - c


def _squarefree(value: Fraction) -> int:

    n = value.numerator * value.denominator
    out = 1

    for p, k in sp.factorint(n).items():

        if k % 2:

            out *= p

    return out


def _is_square(value: Fraction) -> bool:

    return value >= 0 and _squarefree(value) == 1


def _quaternion(s: _Quotient) -> DivisionType | None:

    pures = [s.pure(s.basis(c)) for c in range(s.dim)]
    pures = [p for p in pures if p is not None and s.scalar(p[0]) is None]

    if len(pures) < 2:

        return None

    i, a = pures[0]

    for w, _ in pures[1:]:

        anti = s.scalar(s.mul(i, w) + s.mul(w, i))

        if anti is None or not a:

            return None

        j = w - i.scale(anti / (2 * a))
        b = s.scalar(s.mul(j, j))

        if b is None:

            return None

        k = s.mul(i, j)

        if Mat.hstack([s.unit, i, j, k]).rank() == 4:

            if a < 0 and b < 0:

                return DivisionType('H', 4, f'quaternion({a}, {b})')

            return DivisionType('other', 4, f'quaternion({a}, {b})')

    return None


def classify_division(end: EndAlgebra) -> DivisionType:
    """
    Classify E / rad E for the endomorphism algebra of an indecomposable
    module.

    Raises:
        NotIndecomposableError: If E / rad E has a zero divisor.
    """

    s = _Quotient(end)

    for c in range(s.dim):

        if not s.left(s.basis(c)).is_invertible():

            raise NotIndecomposableError(
                'endomorphism algebra modulo radical has a zero divisor',
            )

    if s.dim == 1:

        result = DivisionType('R', 1)

    elif s.dim == 2:

        u = next(
            s.basis(c) for c in range(s.dim)
            if s.scalar(s.basis(c)) is None
        )
        poly = min_poly(s.left(u))
        _, b, c = poly_coefficients(poly)
        disc = b * b - 4 * c

        if disc < 0:

            result = DivisionType('C', 2, str(poly.as_expr()))

        elif _is_square(disc):

            raise NotIndecomposableError(
                f'minimal polynomial {poly.as_expr()} splits over ℚ',
            )

        else:

            result = DivisionType('other', 2, f'x**2 - {_squarefree(disc)}')

    else:

        result = _quaternion(s) if s.dim == 4 else None

        if result is None:

            generic = Mat.vector(range(1, s.dim + 1))
            poly = min_poly(s.left(generic))
            result = DivisionType('other', s.dim, str(poly.as_expr()))

    _log(f'Division algebra of the summand: {result}.')

    return result
