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
Symmetric bilinear forms: exact congruence diagonalization and inertia.
"""

from __future__ import annotations

__all__ = ['Inertia', 'diagonalize', 'signature']

from typing import NamedTuple
from fractions import Fraction

from lefmod._errors import DimensionMismatchError
from lefmod.exactlin._matrix import ONE, ZERO, Mat


class Inertia(NamedTuple):

    n_plus: int
    n_minus: int
    n_zero: int

    @property
    def value(self) -> int:
        """
        The signature n₊ − n₋.
        """

        return self.n_plus - self.n_minus


    def is_positive_definite(self) -> bool:

        return self.n_minus == 0 and self.n_zero == 0


def diagonalize(s: Mat) -> tuple[Mat, tuple[Fraction, ...]]:
    """
    Congruence diagonalization of a symmetric matrix.

    Symmetric Gaussian elimination with symmetric pivoting: a nonzero
    diagonal pivot is moved to the front; if the remaining diagonal is zero,
    a column is added to another one to create a nonzero pivot.

    Returns:
        T and the diagonal D with Tᵀ·s·T = diag(D).

    Raises:
        DimensionMismatchError: If `s` is not symmetric.
    """

    if not s.is_symmetric():

        raise DimensionMismatchError('Form matrix is not symmetric')

    n = s.rows
    w = s.to_rows()
    t = [[ONE if i == j else ZERO for j in range(n)] for i in range(n)]

    def add_column(dst: int, src: int, factor: Fraction) -> None:

        for r in range(n):

            t[r][dst] += factor * t[r][src]
            w[r][dst] += factor * w[r][src]

        for c in range(n):

            w[dst][c] += factor * w[src][c]


    def swap(a: int, b: int) -> None:

        if a == b:

            return

        for r in range(n):

            t[r][a], t[r][b] = t[r][b], t[r][a]
            w[r][a], w[r][b] = w[r][b], w[r][a]

        w[a], w[b] = w[b], w[a]


    for p in range(n):

        q = next((q for q in range(p, n) if w[q][q]), None)

        if q is None:

            pair = next(
                (
                    (a, b)
                    for a in range(p, n)
                    for b in range(a + 1, n)
                    if w[a][b]
                ),
                None,
            )

            if pair is None:

                break

            q = pair[0]
            add_column(q, pair[1], ONE)

        swap(p, q)
        pivot = w[p][p]

        for r in range(p + 1, n):

            if w[p][r]:

                add_column(r, p, -w[p][r] / pivot)

    return (
        Mat.from_rows(t, cols = n),
        tuple(w[i][i] for i in range(n)),
    )


def signature(s: Mat) -> Inertia:
    """
    Inertia (n₊, n₋, n₀) of a symmetric matrix, computed exactly.
    """

    _, diag = diagonalize(s)

    return Inertia(
        sum(1 for d in diag if d > 0),
        sum(1 for d in diag if d < 0),
        sum(1 for d in diag if d == 0),
    )
