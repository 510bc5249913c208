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
Jordan type of a degree one nilpotent operator on a graded vector space.
"""

from __future__ import annotations

__all__ = ['JordanProfile', 'nilpotent_profile']

from dataclasses import dataclass
from collections.abc import Sequence

from lefmod._errors import DimensionMismatchError
from lefmod.exactlin._matrix import Mat


@dataclass(frozen = True)
class JordanProfile:
    """
    Multiset of Jordan chains of a graded operator of degree one.

    Each block is ``(e, k, m)``: `m` chains of length e + 1 starting in
    degree `k`.
    """

    blocks: tuple[tuple[int, int, int], ...]

    def multiplicity(self, e: int, k: int) -> int:

        return next((m for e_, k_, m in self.blocks if (e_, k_) == (e, k)), 0)


    @property
    def total_dim(self) -> int:

        return sum(m * (e + 1) for e, _, m in self.blocks)


    def dims(self, degree: int) -> tuple[int, ...]:
        """
        Dimensions per degree of the space the profile describes.
        """

        out = [0] * (degree + 1)

        for e, k, m in self.blocks:

            for i in range(k, k + e + 1):

                out[i] += m

        return tuple(out)


    def as_set(self) -> set[tuple[int, int, int]]:

        return set(self.blocks)


def nilpotent_profile(
        maps: Sequence[Mat],
        dims: Sequence[int] | None = None,
    ) -> JordanProfile:
    """
    Jordan profile from the per-degree matrices M^i → M^{i+1}.

    Args:
        maps:
            ``maps[i]`` is the operator restricted to degree `i`, for
            i = 0, …, d − 1.
        dims:
            Dimensions of M^0, …, M^d; inferred from `maps` if omitted.

    The number of chains starting exactly in degree k and reaching degree
    k + t is r(k, t) − r(k − 1, t + 1), with r(k, t) the rank of the t-fold
    operator from degree k; differences in t give the multiplicities.
    """

    maps = list(maps)

    if dims is None:

        if not maps:

            raise DimensionMismatchError('Dimensions required without maps')

        dims = [m.cols for m in maps] + [maps[-1].rows]

    dims = list(dims)
    d = len(dims) - 1

    if len(maps) != max(d, 0):

        raise DimensionMismatchError(
            f'{len(maps)} maps for a space of top degree {d}',
        )

    for i, m in enumerate(maps):

        if m.shape != (dims[i + 1], dims[i]):

            raise DimensionMismatchError(
                f'Operator not degree-1 compatible in degree {i}: '
                f'shape {m.shape}, expected {(dims[i + 1], dims[i])}',
            )

    ranks = {}

    for k in range(d + 1):

        ranks[k, 0] = dims[k]
        composite = Mat.identity(dims[k])

        for t in range(1, d - k + 1):

            composite = maps[k + t - 1] @ composite
            ranks[k, t] = composite.rank()

    def r(k: int, t: int) -> int:

        return ranks.get((k, t), 0) if k >= 0 else 0


    def starting(k: int, t: int) -> int:

        return r(k, t) - r(k - 1, t + 1)


    blocks = []

    for k in range(d + 1):

        for e in range(d - k + 1):

            m = starting(k, e) - starting(k, e + 1)

            if m:

                blocks.append((e, k, m))

    return JordanProfile(tuple(blocks))
