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
Minimal polynomials of rational matrices.
"""

from __future__ import annotations

__all__ = [
    'X',
    'factor_over_q',
    'min_poly',
    'poly_at',
    'poly_coefficients',
]

from fractions import Fraction

import sympy as sp

from lefmod._errors import DimensionMismatchError, InconsistentSystemError
from lefmod.exactlin._matrix import Mat, rat
from lefmod.exactlin._subspace import Subspace

X = sp.Symbol('x')


def _poly(coeffs_low_to_high: list[Fraction]) -> sp.Poly:

    return sp.Poly(
        [sp.Rational(c.numerator, c.denominator) for c in coeffs_low_to_high][::-1],
        X,
        domain = sp.QQ,
    )


def _krylov(op: Mat, v: Mat) -> tuple[sp.Poly, list[Mat]]:
    """
    Local minimal polynomial of `v` and the Krylov vectors v, Tv, … .
    """

    chain = [v]

    while True:

        nxt = op @ chain[-1]

        try:

            coeffs = Mat.hstack(chain).solve(nxt)

        except InconsistentSystemError:

            chain.append(nxt)
            continue

        # x^k − Σ c_i x^i
        low_to_high = [-c for c in coeffs.entries] + [Fraction(1)]

        return _poly(low_to_high), chain


def min_poly(op: Mat) -> sp.Poly:
    """
    Minimal polynomial of a square matrix.

    The least common multiple of the local minimal polynomials of a set of
    vectors whose Krylov spaces together span the whole space.
    """

    if not op.is_square:

        raise DimensionMismatchError('Minimal polynomial of a non-square matrix')

    n = op.rows
    result = sp.Poly(1, X, domain = sp.QQ)
    covered = Subspace.zero(n)

    for idx in range(n):

        if covered.is_full():

            break

        e = Mat.unit(n, idx)

        if covered.contains(e):

            continue

        local, chain = _krylov(op, e)
        result = result.lcm(local)
        covered = covered + Subspace.span(chain, ambient_dim = n)

    return result.monic()


def poly_coefficients(p: sp.Poly) -> list[Fraction]:
    """
    Coefficients from the highest degree down, as fractions.
    """

    return [rat(c) for c in p.all_coeffs()]


def poly_at(p: sp.Poly, op: Mat) -> Mat:
    """
    Evaluate a polynomial at a square matrix (Horner scheme).
    """

    n = op.rows
    result = Mat.zeros(n, n)
    identity = Mat.identity(n)

    for c in poly_coefficients(p):

        result = result @ op + identity.scale(c)

    return result


def factor_over_q(p: sp.Poly) -> list[tuple[sp.Poly, int]]:
    """
    Monic irreducible factors over ℚ with multiplicities.
    """

    _, factors = p.factor_list()

    return [(f.monic(), k) for f, k in factors]
