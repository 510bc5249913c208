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
Finite dimensional commutative graded algebras given by structure constants.

Elements are column vectors in the basis of the whole algebra, ordered by
degree. Basis element 0 is the unit.
"""

from __future__ import annotations

__all__ = [
    'GradedAlgebra',
    'make_algebra',
    'truncated_polynomial_algebra',
]

import re
import itertools
import collections
from fractions import Fraction
from functools import cached_property
from dataclasses import dataclass
from collections.abc import Mapping, Sequence

from lefmod._session import _log
from lefmod._errors import AlgebraValidationError
from lefmod.exactlin import Mat, rat

Sparse = dict[int, Fraction]

_TERM = re.compile(r'\s*([+-])?\s*([^+-]+)')
_COEF_LABEL = re.compile(r'(\d+(?:/\d+)?)\s*\*?\s*(.+)')


def _mul_sparse(
        products: Mapping[tuple[int, int], Sparse],
        u: Sparse,
        v: Sparse,
    ) -> Sparse:

    out = collections.defaultdict(Fraction)

    for i, x in u.items():

        for j, y in v.items():

            for k, z in products.get((i, j), {}).items():

                out[k] += x * y * z

    return {k: c for k, c in out.items() if c}


@dataclass(frozen = True, eq = False)
class GradedAlgebra:
    """
    Commutative graded algebra with unit, dims[0] ≥ 1.

    Args:
        dims:
            Dimension of each graded piece A^0, …, A^top.
        labels:
            One label per basis element, degree by degree.
        products:
            Nonzero products of basis elements, keyed by ordered index
            pairs (both orders present), valued as sparse coordinate
            dictionaries.
    """

    dims: tuple[int, ...]
    labels: tuple[str, ...]
    products: Mapping[tuple[int, int], Sparse]
    name: str = ''

    @property
    def top_degree(self) -> int:

        return len(self.dims) - 1


    @property
    def dim(self) -> int:

        return sum(self.dims)


    @cached_property
    def offsets(self) -> tuple[int, ...]:

        return tuple(itertools.accumulate((0,) + self.dims[:-1]))


    @cached_property
    def degrees(self) -> tuple[int, ...]:

        return tuple(
            k for k, n in enumerate(self.dims) for _ in range(n)
        )


    @cached_property
    def _index(self) -> dict[str, int]:

        return {label: i for i, label in enumerate(self.labels)}


    def degree_dim(self, k: int) -> int:

        return self.dims[k] if 0 <= k <= self.top_degree else 0


    def basis_range(self, k: int) -> range:

        if not 0 <= k <= self.top_degree:

            return range(0)

        return range(self.offsets[k], self.offsets[k] + self.dims[k])


    def index(self, label: str) -> int:

        try:

            return self._index[label]

        except KeyError:

            raise AlgebraValidationError(
                f'unknown basis label `{label}`',
                location = label,
            )


    def zero(self) -> Mat:

        return Mat.zeros(self.dim, 1)


    def basis_element(self, idx: int) -> Mat:

        return Mat.unit(self.dim, idx)


    def unit(self) -> Mat:

        return self.basis_element(0)


    def element(self, spec) -> Mat:
        """
        Element from a label, a label expression such as ``'y3+2*y5'``, a
        mapping of labels to coefficients, a coefficient list or a `Mat`.
        """

        if isinstance(spec, Mat):

            if spec.shape != (self.dim, 1):

                raise AlgebraValidationError(
                    f'element vector of shape {spec.shape}, '
                    f'expected {(self.dim, 1)}',
                )

            return spec

        if isinstance(spec, str):

            return self.parse(spec)

        if isinstance(spec, Mapping):

            entries = {
                (self.index(label), 0): rat(c) for label, c in spec.items()
            }

            return Mat.from_entries(self.dim, 1, entries)

        values = list(spec)

        if len(values) != self.dim:

            raise AlgebraValidationError(
                f'element of length {len(values)}, expected {self.dim}',
            )

        return Mat.vector(values)


    def parse(self, text: str) -> Mat:

        text = text.strip()

        if text in self._index:

            return self.basis_element(self._index[text])

        coeffs = collections.defaultdict(Fraction)

        for match in _TERM.finditer(text):

            sign, term = match.groups()
            term = term.strip()

            if not term:

                continue

            if term in self._index:

                coef, label = Fraction(1), term

            else:

                parsed = _COEF_LABEL.fullmatch(term)

                if not parsed:

                    raise AlgebraValidationError(
                        f'cannot parse term `{term}`',
                        location = text,
                    )

                coef, label = rat(parsed.group(1)), parsed.group(2).strip()

            coeffs[label] += -coef if sign == '-' else coef

        return self.element(dict(coeffs))


    def homogeneous_degree(self, u: Mat) -> int | None:
        """
        Degree of a homogeneous element; None for zero.
        """

        found = {self.degrees[i] for i, c in enumerate(u.entries) if c}

        if len(found) > 1:

            raise AlgebraValidationError(
                f'element is not homogeneous (degrees {sorted(found)})',
            )

        return found.pop() if found else None


    def component(self, u: Mat, k: int) -> Mat:
        """
        Coordinates of the degree-k part of `u` in the basis of A^k.
        """

        return Mat.vector(u.entries[i] for i in self.basis_range(k)) \
            if self.degree_dim(k) else Mat.zeros(0, 1)


    def embed(self, k: int, coords: Mat) -> Mat:

        values = [Fraction(0)] * self.dim

        for pos, idx in enumerate(self.basis_range(k)):

            values[idx] = coords.entries[pos]

        return Mat(self.dim, 1, tuple(values))


    def sparse(self, u: Mat) -> Sparse:

        return {i: c for i, c in enumerate(u.entries) if c}


    def from_sparse(self, u: Sparse) -> Mat:

        return Mat.from_entries(
            self.dim,
            1,
            {(i, 0): c for i, c in u.items()},
        )


    def product(self, i: int, j: int) -> Sparse:

        return self.products.get((i, j), {})


    def multiply(self, u: Mat, v: Mat) -> Mat:

        return self.from_sparse(
            _mul_sparse(self.products, self.sparse(u), self.sparse(v)),
        )


    def power(self, u: Mat, p: int) -> Mat:

        result = self.unit()

        for _ in range(p):

            result = self.multiply(result, u)

        return result


    def multiplication_matrix(self, u: Mat, k: int, s: int) -> Mat:
        """
        Matrix of multiplication by a degree-s element, A^k → A^{k+s}.
        """

        source = self.basis_range(k)
        target = self.basis_range(k + s)
        su = self.sparse(u)
        columns = []

        for c in source:

            prod = _mul_sparse(self.products, su, {c: Fraction(1)})
            columns.append([prod.get(t, Fraction(0)) for t in target])

        return Mat.from_columns(columns, rows = len(target)) \
            if columns else Mat.zeros(len(target), 0)


    def format(self, u: Mat) -> str:

        terms = []

        for i, c in enumerate(u.entries):

            if not c:

                continue

            label = self.labels[i]
            coef = '' if abs(c) == 1 else f'{abs(c)}*'
            sign = '-' if c < 0 else '+'
            terms.append(f'{sign} {coef}{label}')

        text = ' '.join(terms) or '0'

        return text[2:] if text.startswith('+ ') else text


def _pair(key) -> tuple[str, str]:

    if isinstance(key, str):

        parts = key.split('*')

        if len(parts) != 2:

            raise AlgebraValidationError(
                f'product key must look like `a*b`: `{key}`',
                location = key,
            )

        return parts[0].strip(), parts[1].strip()

    a, b = key

    return str(a), str(b)


def make_algebra(spec: Mapping, name: str = '') -> GradedAlgebra:
    """
    Validated graded algebra from dims, labels and a product table.

    Args:
        spec:
            ``dims``: dimensions per degree; ``labels``: basis labels, unit
            first; ``products``: mapping from ``(a, b)`` or ``'a*b'`` to a
            mapping of labels to rational coefficients. Products not listed
            are zero; products with the unit are implied.

    Raises:
        AlgebraValidationError: With the offending labels if the table is
            not commutative, not associative, not graded, or if the unit
            does not act as the identity.
    """

    dims = tuple(int(d) for d in spec['dims'])
    labels = tuple(str(label) for label in spec['labels'])

    if not dims or dims[0] < 1:

        raise AlgebraValidationError(
            'degree 0 must contain the unit',
            location = 'dims',
        )

    if any(d < 0 for d in dims):

        raise AlgebraValidationError('negative dimension', location = 'dims')

    if len(labels) != sum(dims):

        raise AlgebraValidationError(
            f'{len(labels)} labels for total dimension {sum(dims)}',
            location = 'labels',
        )

    if len(set(labels)) != len(labels):

        raise AlgebraValidationError('duplicate labels', location = 'labels')

    index = {label: i for i, label in enumerate(labels)}
    degrees = [k for k, n in enumerate(dims) for _ in range(n)]
    top = len(dims) - 1
    products = {}

    def lookup(label: str) -> int:

        if label not in index:

            raise AlgebraValidationError(
                f'unknown basis label `{label}`',
                location = label,
            )

        return index[label]


    for key, value in (spec.get('products') or {}).items():

        a, b = _pair(key)
        i, j = lookup(a), lookup(b)
        vec = {lookup(c): rat(v) for c, v in (value or {}).items()}
        vec = {k: v for k, v in vec.items() if v}
        target = degrees[i] + degrees[j]

        for k in vec:

            if degrees[k] != target:

                raise AlgebraValidationError(
                    f'product {a}*{b} has a component `{labels[k]}` '
                    f'outside degree {target}',
                    triple = (a, b, labels[k]),
                )

        for pair in ((i, j), (j, i)):

            if pair in products and products[pair] != vec:

                raise AlgebraValidationError(
                    f'multiplication is not commutative on {a}, {b}',
                    triple = (a, b),
                )

            products[pair] = vec

    unit = labels[0]

    if degrees[0] != 0:

        raise AlgebraValidationError('the unit must have degree 0')

    for i, label in enumerate(labels):

        for pair in ((0, i), (i, 0)):

            if pair in products and products[pair] != {i: Fraction(1)}:

                raise AlgebraValidationError(
                    f'the unit `{unit}` does not act as identity on `{label}`',
                    triple = (unit, label),
                )

            products[pair] = {i: Fraction(1)}

    products = {k: v for k, v in products.items() if v}

    for i, j, k in itertools.product(range(1, len(labels)), repeat = 3):

        if degrees[i] + degrees[j] + degrees[k] > top:

            continue

        left = _mul_sparse(products, products.get((i, j), {}), {k: Fraction(1)})
        right = _mul_sparse(products, {i: Fraction(1)}, products.get((j, k), {}))

        if left != right:

            triple = (labels[i], labels[j], labels[k])

            raise AlgebraValidationError(
                'multiplication is not associative on '
                f'({triple[0]}*{triple[1]})*{triple[2]}',
                triple = triple,
            )

    _log(
        f'Algebra `{name or "unnamed"}` validated: dims {dims}, '
        f'{len(products)} nonzero products.'
    )

    return GradedAlgebra(dims, labels, products, name = name)


def truncated_polynomial_algebra(top: int, variable: str = 'l') -> GradedAlgebra:
    """
    ℚ[ℓ]/(ℓ^{top+1}), one basis element per degree.
    """

    labels = ['1'] + [
        variable if k == 1 else f'{variable}^{k}'
        for k in range(1, top + 1)
    ]
    products = {
        (labels[i], labels[j]): {labels[i + j]: 1}
        for i in range(1, top + 1)
        for j in range(1, top + 1)
        if i + j <= top
    }

    return make_algebra(
        {'dims': [1] * (top + 1), 'labels': labels, 'products': products},
        name = f'Q[{variable}]/({variable}^{top + 1})',
    )
