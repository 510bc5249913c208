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
Subspaces of ℚ^n in canonical (column-reduced echelon) form.

The basis of a subspace is the transpose of the reduced row echelon form
of any spanning set, so two subspaces are equal exactly if their bases are
equal entry by entry.
"""

from __future__ import annotations

__all__ = ['Subspace', 'subspace_ops']

from dataclasses import dataclass
from collections.abc import Iterable, Sequence

from lefmod._errors import DimensionMismatchError, InconsistentSystemError
from lefmod.exactlin._matrix import ZERO, Mat, rref, nullspace


@dataclass(frozen = True)
class Subspace:

    ambient_dim: int
    basis: Mat
    pivots: tuple[int, ...]

    @classmethod
    def span(
            cls,
            vectors: Mat | Iterable[Mat | Sequence],
            ambient_dim: int | None = None,
        ) -> Subspace:
        """
        Canonical subspace spanned by the columns of a matrix or by a list
        of vectors.
        """

        if isinstance(vectors, Mat):

            ambient_dim = vectors.rows if ambient_dim is None else ambient_dim

            if vectors.rows != ambient_dim:

                raise DimensionMismatchError(
                    f'Vectors of length {vectors.rows} in ℚ^{ambient_dim}',
                )

            rows = vectors.T.sparse_rows()

        else:

            rows = []

            for v in vectors:

                values = v.entries if isinstance(v, Mat) else tuple(v)

                if ambient_dim is None:

                    ambient_dim = len(values)

                if len(values) != ambient_dim:

                    raise DimensionMismatchError(
                        f'Vector of length {len(values)} in ℚ^{ambient_dim}',
                    )

                rows.append({i: x for i, x in enumerate(values) if x})

            if ambient_dim is None:

                raise DimensionMismatchError(
                    'Ambient dimension required for an empty spanning set',
                )

        reduced, pivots = rref(rows, ambient_dim)
        basis = Mat.from_columns(
            [
                [row.get(i, ZERO) for i in range(ambient_dim)]
                for row in reduced
            ],
            rows = ambient_dim,
        )

        return cls(ambient_dim, basis, tuple(pivots))


    @classmethod
    def zero(cls, n: int) -> Subspace:

        return cls(n, Mat.zeros(n, 0), ())


    @classmethod
    def full(cls, n: int) -> Subspace:

        return cls(n, Mat.identity(n), tuple(range(n)))


    @property
    def dim(self) -> int:

        return self.basis.cols


    def __len__(self) -> int:

        return self.dim


    def vectors(self) -> list[Mat]:

        return self.basis.columns()


    def is_zero(self) -> bool:

        return self.dim == 0


    def is_full(self) -> bool:

        return self.dim == self.ambient_dim


    def _check(self, other: Subspace | Mat) -> None:

        n = other.ambient_dim if isinstance(other, Subspace) else other.rows

        if n != self.ambient_dim:

            raise DimensionMismatchError(
                f'Ambient dimensions differ: {self.ambient_dim} and {n}',
            )


    def coordinates(self, vectors: Mat) -> Mat:
        """
        Coordinates of the columns of `vectors` in the canonical basis.

        Raises:
            InconsistentSystemError: If a column is not in the subspace.
        """

        self._check(vectors)
        coords = vectors.select_rows(self.pivots)

        if self.basis @ coords != vectors:

            raise InconsistentSystemError('Vector not in the subspace')

        return coords


    def contains(self, other: Subspace | Mat) -> bool:

        self._check(other)
        vectors = other.basis if isinstance(other, Subspace) else other

        return self.basis @ vectors.select_rows(self.pivots) == vectors


    __contains__ = contains


    def __le__(self, other: Subspace) -> bool:

        return other.contains(self)


    def __add__(self, other: Subspace) -> Subspace:

        self._check(other)

        if other.is_zero() or self.is_full():

            return self

        if self.is_zero() or other.is_full():

            return other

        return Subspace.span(
            Mat.hstack([self.basis, other.basis]),
            ambient_dim = self.ambient_dim,
        )


    def annihilator(self) -> Mat:
        """
        Matrix W with rows spanning the orthogonal complement: ker W = self.
        """

        rows = nullspace(self.basis.T.sparse_rows(), self.ambient_dim)

        return Mat.from_rows(rows, cols = self.ambient_dim)


    def intersect(self, other: Subspace) -> Subspace:

        self._check(other)

        if self.is_full() or other.is_zero():

            return other

        if other.is_full() or self.is_zero():

            return self

        constraints = Mat.vstack([self.annihilator(), other.annihilator()])

        return Subspace.span(
            nullspace(constraints.sparse_rows(), self.ambient_dim),
            ambient_dim = self.ambient_dim,
        )


    __and__ = intersect


    def complete_to(self, other: Subspace) -> Mat:
        """
        Columns extending the basis of `self` to a basis of `other`.

        The canonical basis vectors of `other` are taken in order and kept
        if independent of those kept so far.
        """

        if not other.contains(self):

            raise DimensionMismatchError('Subspace is not contained in target')

        current = self
        chosen = []

        for vec in other.vectors():

            if current.dim == other.dim:

                break

            if not current.contains(vec):

                chosen.append(vec)
                current = current + Subspace.span([vec], self.ambient_dim)

        return Mat.from_columns(chosen, rows = self.ambient_dim)


    def image_under(self, m: Mat) -> Subspace:

        return Subspace.span(m @ self.basis, ambient_dim = m.rows)


    def preimage_under(self, m: Mat) -> Subspace:
        """
        {v : m·v ∈ self}.
        """

        constraints = self.annihilator() @ m

        return Subspace.span(
            nullspace(constraints.sparse_rows(), m.cols),
            ambient_dim = m.cols,
        )


def subspace_ops(a: Subspace, b: Subspace, op: str) -> Subspace | bool:
    """
    Intersection, sum, containment (b ⊆ a) and equality of subspaces.
    """

    a._check(b)

    if op == 'intersect':

        return a.intersect(b)

    if op == 'sum':

        return a + b

    if op == 'contains':

        return a.contains(b)

    if op == 'equals':

        return a == b

    raise ValueError(f'Unknown subspace operation: {op}')
