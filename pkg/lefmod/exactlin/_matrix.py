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
Dense matrices over the rationals and a sparse row reduction engine.
"""

from __future__ import annotations

__all__ = [
    'Mat',
    'Rat',
    'image',
    'kernel',
    'nullspace',
    'rank',
    'rat',
    'rat_str',
    'rref',
]

import itertools
from fractions import Fraction
from dataclasses import dataclass
from collections.abc import Mapping, Iterable, Sequence

from lefmod._errors import DimensionMismatchError, InconsistentSystemError

Rat = Fraction
Row = dict[int, Fraction]

ZERO = Fraction(0)
ONE = Fraction(1)


def rat(value) -> Fraction:
    """
    Exact rational from an int, a `Fraction` or a string like ``'-3/4'``.

    Floats are rejected: they carry no exact meaning here.
    """

    if isinstance(value, Fraction):

        return value

    if isinstance(value, bool):

        raise TypeError(f'Not a rational number: {value!r}')

    if isinstance(value, int):

        return Fraction(value)

    if isinstance(value, str):

        try:

            return Fraction(value.strip())

        except ValueError:

            raise ValueError(f'Not a rational number: {value!r}')

    if hasattr(value, 'p') and hasattr(value, 'q'):

        # sympy Rational and Integer
        return Fraction(int(value.p), int(value.q))

    raise TypeError(f'Not a rational number: {value!r}')


def rat_str(value: Fraction) -> str:

    return str(rat(value))


def rref(
        rows: Iterable[Mapping[int, Fraction]],
        ncols: int,
    ) -> tuple[list[Row], list[int]]:
    """
    Reduced row echelon form of a sparse system.

    Args:
        rows:
            Rows as mappings from column index to nonzero value.
        ncols:
            Number of columns.

    Returns:
        The nonzero rows of the reduced echelon form, in pivot order, and
        the list of pivot columns.
    """

    work = [
        {c: rat(v) for c, v in row.items() if v}
        for row in rows
    ]
    work = [row for row in work if row]
    reduced = []
    pivots = []

    for col in range(ncols):

        best = None

        for idx, row in enumerate(work):

            if col in row and (best is None or len(row) < len(work[best])):

                best = idx

        if best is None:

            continue

        prow = work.pop(best)
        inv = ONE / prow[col]
        prow = {c: v * inv for c, v in prow.items()}

        for row in itertools.chain(work, reduced):

            factor = row.get(col)

            if not factor:

                continue

            for c, v in prow.items():

                new = row.get(c, ZERO) - factor * v

                if new:

                    row[c] = new

                else:

                    row.pop(c, None)

        work = [row for row in work if row]
        reduced.append(prow)
        pivots.append(col)

    return reduced, pivots


def nullspace(
        rows: Iterable[Mapping[int, Fraction]],
        ncols: int,
    ) -> list[tuple[Fraction, ...]]:
    """
    Basis of the solutions of a homogeneous sparse system.

    One vector per free column, with 1 at that column: the standard basis
    read off the reduced echelon form.
    """

    reduced, pivots = rref(rows, ncols)
    pivot_set = set(pivots)
    basis = []

    for free in range(ncols):

        if free in pivot_set:

            continue

        vec = [ZERO] * ncols
        vec[free] = ONE

        for row, piv in zip(reduced, pivots):

            value = row.get(free)

            if value:

                vec[piv] = -value

        basis.append(tuple(vec))

    return basis


@dataclass(frozen = True)
class Mat:
    """
    Immutable dense matrix of rationals, stored row-major.
    """

    rows: int
    cols: int
    entries: tuple[Fraction, ...] = ()

    def __post_init__(self):

        if self.rows < 0 or self.cols < 0:

            raise DimensionMismatchError(
                f'Negative shape: {self.rows}×{self.cols}',
            )

        if len(self.entries) != self.rows * self.cols:

            raise DimensionMismatchError(
                f'{len(self.entries)} entries for a '
                f'{self.rows}×{self.cols} matrix',
            )


    @classmethod
    def zeros(cls, rows: int, cols: int) -> Mat:

        return cls(rows, cols, (ZERO,) * (rows * cols))


    @classmethod
    def identity(cls, n: int) -> Mat:

        return cls(
            n,
            n,
            tuple(ONE if i == j else ZERO for i in range(n) for j in range(n)),
        )


    @classmethod
    def from_rows(
            cls,
            rows: Sequence[Sequence],
            cols: int | None = None,
        ) -> Mat:

        rows = [[rat(v) for v in row] for row in rows]

        if cols is None:

            if not rows:

                raise DimensionMismatchError(
                    'Number of columns required for an empty matrix',
                )

            cols = len(rows[0])

        if any(len(row) != cols for row in rows):

            raise DimensionMismatchError('Ragged rows')

        return cls(len(rows), cols, tuple(itertools.chain(*rows)))


    @classmethod
    def from_columns(
            cls,
            columns: Sequence[Mat | Sequence],
            rows: int | None = None,
        ) -> Mat:
        """
        Matrix from column vectors (`Mat` columns or plain sequences).
        """

        columns = [
            c.entries if isinstance(c, Mat) else tuple(rat(v) for v in c)
            for c in columns
        ]

        if rows is None:

            if not columns:

                raise DimensionMismatchError(
                    'Number of rows required for an empty matrix',
                )

            rows = len(columns[0])

        if any(len(c) != rows for c in columns):

            raise DimensionMismatchError('Columns of different length')

        n = len(columns)

        return cls(
            rows,
            n,
            tuple(columns[j][i] for i in range(rows) for j in range(n)),
        )


    @classmethod
    def vector(cls, values: Iterable) -> Mat:

        values = tuple(rat(v) for v in values)

        return cls(len(values), 1, values)


    @classmethod
    def unit(cls, n: int, idx: int) -> Mat:

        return cls(n, 1, tuple(ONE if i == idx else ZERO for i in range(n)))


    @classmethod
    def diagonal(cls, values: Sequence) -> Mat:

        values = [rat(v) for v in values]
        n = len(values)

        return cls(
            n,
            n,
            tuple(
                values[i] if i == j else ZERO
                for i in range(n) for j in range(n)
            ),
        )


    @classmethod
    def from_entries(
            cls,
            rows: int,
            cols: int,
            entries: Mapping[tuple[int, int], object],
        ) -> Mat:

        out = [ZERO] * (rows * cols)

        for (r, c), v in entries.items():

            out[r * cols + c] = rat(v)

        return cls(rows, cols, tuple(out))


    @classmethod
    def hstack(cls, mats: Sequence[Mat], rows: int | None = None) -> Mat:

        mats = list(mats)
        rows = mats[0].rows if mats else (rows or 0)

        if any(m.rows != rows for m in mats):

            raise DimensionMismatchError('hstack of different row counts')

        cols = sum(m.cols for m in mats)

        return cls(
            rows,
            cols,
            tuple(
                itertools.chain.from_iterable(
                    m.row(i) for i in range(rows) for m in mats
                )
            ) if mats else (),
        )


    @classmethod
    def vstack(cls, mats: Sequence[Mat], cols: int | None = None) -> Mat:

        mats = list(mats)
        cols = mats[0].cols if mats else (cols or 0)

        if any(m.cols != cols for m in mats):

            raise DimensionMismatchError('vstack of different column counts')

        return cls(
            sum(m.rows for m in mats),
            cols,
            tuple(itertools.chain.from_iterable(m.entries for m in mats)),
        )


    @classmethod
    def block_diag(cls, mats: Sequence[Mat]) -> Mat:

        rows = sum(m.rows for m in mats)
        cols = sum(m.cols for m in mats)
        out = [ZERO] * (rows * cols)
        r0 = c0 = 0

        for m in mats:

            for i in range(m.rows):

                for j in range(m.cols):

                    out[(r0 + i) * cols + c0 + j] = m.entries[i * m.cols + j]

            r0 += m.rows
            c0 += m.cols

        return cls(rows, cols, tuple(out))


    @property
    def shape(self) -> tuple[int, int]:

        return self.rows, self.cols


    def __getitem__(self, idx: tuple[int, int]) -> Fraction:

        r, c = idx

        return self.entries[r * self.cols + c]


    def row(self, r: int) -> tuple[Fraction, ...]:

        return self.entries[r * self.cols:(r + 1) * self.cols]


    def to_rows(self) -> list[list[Fraction]]:

        return [list(self.row(r)) for r in range(self.rows)]


    def column(self, c: int) -> Mat:

        return Mat(
            self.rows,
            1,
            tuple(self.entries[r * self.cols + c] for r in range(self.rows)),
        )


    def columns(self) -> list[Mat]:

        return [self.column(c) for c in range(self.cols)]


    def select_columns(self, idx: Sequence[int]) -> Mat:

        idx = list(idx)

        return Mat(
            self.rows,
            len(idx),
            tuple(
                self.entries[r * self.cols + c]
                for r in range(self.rows) for c in idx
            ),
        )


    def select_rows(self, idx: Sequence[int]) -> Mat:

        idx = list(idx)

        return Mat(
            len(idx),
            self.cols,
            tuple(itertools.chain.from_iterable(self.row(r) for r in idx)),
        )


    @property
    def T(self) -> Mat:

        return Mat(
            self.cols,
            self.rows,
            tuple(
                self.entries[r * self.cols + c]
                for c in range(self.cols) for r in range(self.rows)
            ),
        )


    def sparse_rows(self) -> list[Row]:

        return [
            {c: v for c, v in enumerate(self.row(r)) if v}
            for r in range(self.rows)
        ]


    def __matmul__(self, other: Mat) -> Mat:

        if self.cols != other.rows:

            raise DimensionMismatchError(
                f'Cannot multiply {self.rows}×{self.cols} '
                f'by {other.rows}×{other.cols}',
            )

        n, m = self.cols, other.cols
        a, b = self.entries, other.entries
        out = [ZERO] * (self.rows * m)

        for i in range(self.rows):

            base = i * n
            orow = i * m

            for k in range(n):

                aik = a[base + k]

                if not aik:

                    continue

                kb = k * m

                for j in range(m):

                    bkj = b[kb + j]

                    if bkj:

                        out[orow + j] += aik * bkj

        return Mat(self.rows, m, tuple(out))


    def _check_same_shape(self, other: Mat) -> None:

        if self.shape != other.shape:

            raise DimensionMismatchError(
                f'Shapes differ: {self.shape} and {other.shape}',
            )


    def __add__(self, other: Mat) -> Mat:

        self._check_same_shape(other)

        return Mat(
            self.rows,
            self.cols,
            tuple(x + y for x, y in zip(self.entries, other.entries)),
        )


    def __sub__(self, other: Mat) -> Mat:

        self._check_same_shape(other)

        return Mat(
            self.rows,
            self.cols,
            tuple(x - y for x, y in zip(self.entries, other.entries)),
        )


    def __neg__(self) -> Mat:

        return Mat(self.rows, self.cols, tuple(-x for x in self.entries))


    def scale(self, factor) -> Mat:

        factor = rat(factor)

        return Mat(self.rows, self.cols, tuple(factor * x for x in self.entries))


    __mul__ = scale
    __rmul__ = scale


    def power(self, exponent: int) -> Mat:

        if not self.is_square:

            raise DimensionMismatchError('Power of a non-square matrix')

        result = Mat.identity(self.rows)

        for _ in range(exponent):

            result = result @ self

        return result


    @property
    def is_square(self) -> bool:

        return self.rows == self.cols


    def is_zero(self) -> bool:

        return not any(self.entries)


    def is_symmetric(self) -> bool:

        return self.is_square and self == self.T


    def trace(self) -> Fraction:

        if not self.is_square:

            raise DimensionMismatchError('Trace of a non-square matrix')

        return sum(
            (self.entries[i * self.cols + i] for i in range(self.rows)),
            ZERO,
        )


    def rank(self) -> int:

        return len(rref(self.sparse_rows(), self.cols)[1])


    def is_invertible(self) -> bool:

        return self.is_square and self.rank() == self.rows


    def solve(self, rhs: Mat) -> Mat:
        """
        A particular solution X of ``self @ X == rhs``.

        Free variables are set to zero.

        Raises:
            InconsistentSystemError: If no solution exists.
        """

        if rhs.rows != self.rows:

            raise DimensionMismatchError(
                f'Right hand side has {rhs.rows} rows, expected {self.rows}',
            )

        n = self.cols
        rows = [
            {
                **{c: v for c, v in enumerate(self.row(r)) if v},
                **{n + c: v for c, v in enumerate(rhs.row(r)) if v},
            }
            for r in range(self.rows)
        ]
        reduced, pivots = rref(rows, n + rhs.cols)

        if pivots and pivots[-1] >= n:

            raise InconsistentSystemError('Linear system has no solution')

        out = [ZERO] * (n * rhs.cols)

        for row, piv in zip(reduced, pivots):

            for c in range(rhs.cols):

                out[piv * rhs.cols + c] = row.get(n + c, ZERO)

        return Mat(n, rhs.cols, tuple(out))


    def inverse(self) -> Mat:

        if not self.is_invertible():

            raise InconsistentSystemError('Matrix is not invertible')

        return self.solve(Mat.identity(self.rows))


    def kernel(self):

        return kernel(self)


    def image(self):

        return image(self)


    def __str__(self) -> str:

        cells = [[str(v) for v in self.row(r)] for r in range(self.rows)]
        width = max((len(c) for row in cells for c in row), default = 1)

        return '\n'.join(
            '[' + ' '.join(c.rjust(width) for c in row) + ']'
            for row in cells
        ) or f'[]({self.rows}×{self.cols})'


    def to_json(self) -> list[list[str]]:

        return [[str(v) for v in self.row(r)] for r in range(self.rows)]


def kernel(m: Mat):
    """
    The subspace {v : m·v = 0} in canonical form.
    """

    from lefmod.exactlin._subspace import Subspace

    basis = nullspace(m.sparse_rows(), m.cols)

    return Subspace.span(basis, ambient_dim = m.cols)


def image(m: Mat):
    """
    The column space of `m` in canonical form.
    """

    from lefmod.exactlin._subspace import Subspace

    return Subspace.span(m, ambient_dim = m.rows)


def rank(m: Mat) -> int:

    return m.rank()
