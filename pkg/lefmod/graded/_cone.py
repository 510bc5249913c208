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
Open convex cones in degree one, represented by generators, and the
deterministic sample points standing in for them.
"""

from __future__ import annotations

__all__ = [
    'Cone',
    'SAMPLE_STYLES',
    'sample_points',
]

import itertools
from dataclasses import dataclass
from collections.abc import Iterator, Sequence

from lefmod._session import _log
from lefmod._errors import ValidationError, PreconditionError
from lefmod.exactlin import Mat
from lefmod.graded._algebra import GradedAlgebra

SAMPLE_STYLES = ('generator_sums', 'lattice', 'relative')


@dataclass(frozen = True, eq = False)
class Cone:
    """
    The open cone of positive combinations of nonzero degree-1 generators.

    Generators are full coordinate vectors of the algebra.
    """

    algebra: GradedAlgebra
    generators: tuple[Mat, ...]

    def __post_init__(self):

        if not self.generators:

            raise ValidationError('a cone needs at least one generator')

        for i, g in enumerate(self.generators):

            if g.is_zero():

                raise ValidationError(
                    'cone generator is zero',
                    location = f'cone[{i}]',
                )

            if self.algebra.homogeneous_degree(g) != 1:

                raise ValidationError(
                    'cone generator not in degree one',
                    location = f'cone[{i}]',
                )


    @classmethod
    def from_specs(cls, algebra: GradedAlgebra, specs: Sequence) -> Cone:

        return cls(algebra, tuple(algebra.element(s) for s in specs))


    def combine(self, coeffs: Sequence[int]) -> Mat:

        result = self.algebra.zero()

        for c, g in zip(coeffs, self.generators):

            result = result + g.scale(c)

        return result


def _generator_sums(n: int) -> Iterator[tuple[int, ...]]:

    yield (1,) * n

    for value in itertools.count(2):

        for i in range(n):

            yield tuple(value if j == i else 1 for j in range(n))


def _lattice(n: int, count: int) -> Iterator[tuple[int, ...]]:

    bound = 3

    while bound ** n < count:

        bound += 1

    yield from itertools.product(range(1, bound + 1), repeat = n)


def sample_points(
        cone: Cone,
        style: str = 'generator_sums',
        count: int = 5,
        subalgebra = None,
    ) -> list[Mat]:
    """
    Deterministic sample of points in the cone.

    Args:
        cone:
            The cone 𝒦 (of A).
        style:
            ``generator_sums``: the sum of all generators, then the sums with
            one coefficient raised to 2, 3, …; ``lattice``: coefficient
            vectors from {1, 2, 3, …}^n in lexicographic order;
            ``relative``: η₀ + b with η₀ the first ``generator_sums`` point
            and b = 0, then −2v₁, v₂, −2v₃, … over the degree-1 basis
            vectors v of the subalgebra, then v₁, −2v₂, v₃, …, then the
            same with multiples 2, 3, … (points of 𝒦 + B¹).
        count:
            Number of points.
        subalgebra:
            Required for the ``relative`` style.
    """

    if count < 1:

        raise ValidationError(f'sample count must be positive, got {count}')

    n = len(cone.generators)

    if style == 'generator_sums':

        coeffs = itertools.islice(_generator_sums(n), count)
        points = [cone.combine(c) for c in coeffs]

    elif style == 'lattice':

        coeffs = itertools.islice(_lattice(n, count), count)
        points = [cone.combine(c) for c in coeffs]

    elif style == 'relative':

        if subalgebra is None:

            raise PreconditionError('relative sampling needs a subalgebra')

        base = cone.combine((1,) * n)
        directions = subalgebra.basis_vectors(1)
        points = [base]

        for mult in itertools.count(1):

            if len(points) >= count or not directions:

                break

            for flip in (1, -1):

                for idx, v in enumerate(directions):

                    if (idx % 2 == 0) == (flip == 1):

                        points.append(base - v.scale(2 * mult))

                    else:

                        points.append(base + v.scale(mult))

        points = points[:count]

    else:

        raise ValidationError(
            f'unknown sample style `{style}`; '
            f'expected one of {", ".join(SAMPLE_STYLES)}',
        )

    _log(
        f'Sampled {len(points)} point(s) in style `{style}`: ' +
        '; '.join(cone.algebra.format(p) for p in points)
    )

    return points
