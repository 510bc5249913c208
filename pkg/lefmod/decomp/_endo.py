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
Spaces of module maps: intertwiners, endomorphism algebras and their
radicals.

A graded map is a tuple with one matrix per source degree.
"""

from __future__ import annotations

__all__ = [
    'EndAlgebra',
    'GradedMap',
    'compose',
    'end_algebra',
    'hom_space',
    'is_invertible_map',
    'operator',
    'submodule',
]

from fractions import Fraction
from functools import cached_property
from dataclasses import dataclass
from collections.abc import Sequence

from lefmod._session import _log
from lefmod.exactlin import Mat, Subspace, nullspace
from lefmod.graded import GradedModule

GradedMap = tuple[Mat, ...]


def compose(f: GradedMap, g: GradedMap) -> GradedMap:
    """
    f ∘ g for degree preserving maps.
    """

    return tuple(a @ b for a, b in zip(f, g))


def operator(f: GradedMap) -> Mat:
    """
    The whole map as one block diagonal matrix.
    """

    return Mat.block_diag(list(f))


def is_invertible_map(f: GradedMap) -> bool:

    return all(m.is_square and m.is_invertible() for m in f)


def _generators(module: GradedModule) -> list[int]:

    algebra = module.algebra

    return [
        b for b in range(algebra.dim)
        if algebra.degrees[b] > 0 and any(
            not m.is_zero() for m in module.actions[b]
        )
    ]


def hom_space(
        source: GradedModule,
        target: GradedModule,
        shift: int = 0,
    ) -> list[GradedMap]:
    """
    Basis of Hom(source, target[−shift]): module maps sending source^i to
    target^{i−shift}.

    The intertwining equations X_{i+s} b = b X_i for all positive degree
    basis elements b acting nontrivially are solved exactly.
    """

    if source.algebra is not target.algebra:

        raise ValueError('modules over different algebras')

    degrees = range(len(source.dims))
    shapes = [(target.dim(i - shift), source.dim(i)) for i in degrees]
    offsets = []
    total = 0

    for r, c in shapes:

        offsets.append(total)
        total += r * c

    def var(i: int, r: int, c: int) -> int:

        return offsets[i] + r * shapes[i][1] + c


    generators = sorted(set(_generators(source)) | set(_generators(target)))
    rows = []
    algebra = source.algebra

    for b in generators:

        s = algebra.degrees[b]

        for i in degrees:

            src = source.basis_action(b, i)
            tgt = target.basis_action(b, i - shift)
            n_out = target.dim(i + s - shift)

            if not n_out or not source.dim(i):

                continue

            has_next = i + s <= source.degree

            for p in range(n_out):

                for q in range(source.dim(i)):

                    row = {}

                    if has_next:

                        for r in range(source.dim(i + s)):

                            coef = src[r, q]

                            if coef:

                                key = var(i + s, p, r)
                                row[key] = row.get(key, Fraction(0)) + coef

                    for r in range(target.dim(i - shift)):

                        coef = tgt[p, r]

                        if coef:

                            key = var(i, r, q)
                            row[key] = row.get(key, Fraction(0)) - coef

                    row = {k: v for k, v in row.items() if v}

                    if row:

                        rows.append(row)

    solutions = nullspace(rows, total)

    return [_unflatten(vec, shapes, offsets) for vec in solutions]


def _unflatten(vec, shapes, offsets) -> GradedMap:

    return tuple(
        Mat(r, c, tuple(vec[offsets[i]:offsets[i] + r * c]))
        for i, (r, c) in enumerate(shapes)
    )


def _flatten(f: GradedMap) -> tuple[Fraction, ...]:

    return tuple(x for m in f for x in m.entries)


@dataclass(eq = False)
class EndAlgebra:
    """
    Degree preserving endomorphisms commuting with the algebra action.

    Elements are graded maps; coordinates refer to the canonical basis of
    the flattened space.
    """

    module: GradedModule
    space: Subspace

    @property
    def dim(self) -> int:

        return self.space.dim


    @cached_property
    def basis(self) -> list[GradedMap]:

        return [self.unflatten(v) for v in self.space.vectors()]


    @cached_property
    def _shapes(self) -> tuple[list, list]:

        shapes = [(n, n) for n in self.module.dims]
        offsets, total = [], 0

        for r, c in shapes:

            offsets.append(total)
            total += r * c

        return shapes, offsets


    def unflatten(self, v: Mat) -> GradedMap:

        shapes, offsets = self._shapes

        return _unflatten(v.entries, shapes, offsets)


    def flatten(self, f: GradedMap) -> Mat:

        return Mat.vector(_flatten(f))


    def identity(self) -> GradedMap:

        return tuple(Mat.identity(n) for n in self.module.dims)


    def coordinates(self, f: GradedMap) -> Mat:

        return self.space.coordinates(self.flatten(f))


    def element(self, coords: Sequence) -> GradedMap:

        v = self.space.basis @ Mat.vector(coords)

        return self.unflatten(v)


    def multiply(self, f: GradedMap, g: GradedMap) -> GradedMap:

        return compose(f, g)


    @cached_property
    def trace_gram(self) -> Mat:
        """
        t(x, y) = tr(xy) on the module, for the basis elements.
        """

        transposed = [tuple(m.T for m in f) for f in self.basis]
        flat = [_flatten(f) for f in self.basis]
        flat_t = [_flatten(f) for f in transposed]

        return Mat.from_rows(
            [
                [
                    sum((a * b for a, b in zip(x, y)), Fraction(0))
                    for y in flat_t
                ]
                for x in flat
            ],
            cols = self.dim,
        )


    @cached_property
    def radical(self) -> Subspace:
        """
        The radical, in coordinates: the kernel of the trace form.
        """

        return self.trace_gram.kernel()


    def in_radical(self, f: GradedMap) -> bool:

        return self.radical.contains(self.coordinates(f))


    def is_local(self) -> bool:

        return self.dim - self.radical.dim == 1


def end_algebra(module: GradedModule) -> EndAlgebra:
    """
    The commutant of the algebra action among degree preserving maps.
    """

    maps = hom_space(module, module, 0)
    n = sum(d * d for d in module.dims)
    space = Subspace.span([_flatten(f) for f in maps], ambient_dim = n)
    _log(f'Endomorphism algebra of dimension {space.dim} for dims {module.dims}.')

    return EndAlgebra(module, space)


def submodule(module: GradedModule, embedding: Sequence[Mat]) -> GradedModule:
    """
    The module structure on an invariant graded subspace.

    Args:
        embedding:
            Per degree, a matrix whose columns form a basis of the
            subspace in that degree.
    """

    embedding = list(embedding)
    algebra = module.algebra
    dims = tuple(e.cols for e in embedding)
    actions = []

    for b in range(algebra.dim):

        s = algebra.degrees[b]
        per_degree = []

        for i in range(len(dims)):

            if i + s >= len(dims):

                per_degree.append(Mat.zeros(0, dims[i]))
                continue

            moved = module.basis_action(b, i) @ embedding[i]
            per_degree.append(
                embedding[i + s].solve(moved)
                if dims[i + s] else Mat.zeros(0, dims[i]),
            )

        actions.append(tuple(per_degree))

    return GradedModule(algebra, dims, tuple(actions), name = module.name)
