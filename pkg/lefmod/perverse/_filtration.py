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
The perverse filtration of a graded module by an element of degree one.
"""

from __future__ import annotations

__all__ = [
    'EllIndependence',
    'PerverseFiltration',
    'check_ell_independence',
    'check_filtration_invariants',
    'perverse_filtration',
    'profile_filtration_dims',
]

from typing import NamedTuple
from dataclasses import dataclass
from collections.abc import Sequence

from lefmod._session import _log
from lefmod._errors import PreconditionError
from lefmod.exactlin import Mat, Subspace, JordanProfile
from lefmod.graded import GradedModule


@dataclass(frozen = True, eq = False)
class PerverseFiltration:
    """
    Subspaces P_j ∩ M^i for 0 ≤ i ≤ d and 0 ≤ j ≤ 2d.

    Below level 0 the filtration is zero, above 2d it is everything.
    """

    module: GradedModule
    ell: Mat
    pieces: dict[tuple[int, int], Subspace]

    @property
    def degree(self) -> int:

        return self.module.degree


    @property
    def levels(self) -> range:

        return range(2 * self.degree + 1)


    def piece(self, i: int, j: int) -> Subspace:

        n = self.module.dim(i)

        if j < 0 or not 0 <= i <= self.degree:

            return Subspace.zero(n)

        if j > 2 * self.degree:

            return Subspace.full(n)

        return self.pieces[i, j]


    def dims(self, j: int) -> tuple[int, ...]:

        return tuple(self.piece(i, j).dim for i in range(self.degree + 1))


    def dim(self, j: int) -> int:

        return sum(self.dims(j))


    def is_trivial(self) -> bool:
        """
        P_{d−1} = 0 and P_d = M.
        """

        d = self.degree

        return self.dim(d - 1) == 0 and self.dim(d) == self.module.total_dim


    def same_as(self, other: PerverseFiltration) -> bool:

        return self.pieces == other.pieces


    def to_dict(self) -> dict:

        return {
            'ell': self.module.algebra.format(self.ell),
            'trivial': self.is_trivial(),
            'dims': {str(j): list(self.dims(j)) for j in self.levels},
        }


def _has_hard_lefschetz(module: GradedModule, ell: Mat) -> bool:

    d = module.degree

    return all(
        module.power(ell, d - 2 * k, k, degree = 1).rank() ==
        module.dim(k) == module.dim(d - k)
        for k in range(d // 2 + 1)
    )


def perverse_filtration(module: GradedModule, ell: Mat) -> PerverseFiltration:
    """
    P_j ∩ M^k = Σ_{0 ≤ c ≤ k} ℓ^{k−c} M^c ∩ ker(ℓ^{j+1−k−c}) ∩ M^k.

    Terms with a nonpositive kernel exponent vanish. If ℓ has the hard
    Lefschetz property on M the filtration is trivial and is returned
    without solving.
    """

    d = module.degree
    pieces = {}

    if d >= 0 and _has_hard_lefschetz(module, ell):

        for i in range(d + 1):

            n = module.dim(i)

            for j in range(2 * d + 1):

                pieces[i, j] = Subspace.full(n) if j >= d else Subspace.zero(n)

        _log(f'Perverse filtration by `{module.algebra.format(ell)}` is trivial.')

        return PerverseFiltration(module, ell, pieces)

    for k in range(d + 1):

        n = module.dim(k)
        images = [
            module.power(ell, k - c, c, degree = 1).image()
            for c in range(k + 1)
        ]
        kernels = {}

        def kernel(p: int) -> Subspace:

            if p not in kernels:

                kernels[p] = module.power(ell, p, k, degree = 1).kernel()

            return kernels[p]


        for j in range(2 * d + 1):

            total = Subspace.zero(n)

            for c in range(k + 1):

                p = j + 1 - k - c

                if p <= 0:

                    continue

                total = total + (images[c] & kernel(p))

            pieces[k, j] = total

    filtration = PerverseFiltration(module, ell, pieces)
    _log(
        f'Perverse filtration by `{module.algebra.format(ell)}`: '
        f'dims {[filtration.dim(j) for j in filtration.levels]}.'
    )

    return filtration


def profile_filtration_dims(
        profile: JordanProfile,
        degree: int,
    ) -> dict[tuple[int, int], int]:
    """
    dim P_j ∩ M^i read off a Jordan profile.

    A chain of length e + 1 starting in degree k lies in P_j iff
    e + 2k ≤ j.
    """

    out = {
        (i, j): 0
        for i in range(degree + 1)
        for j in range(2 * degree + 1)
    }

    for e, k, m in profile.blocks:

        for j in range(e + 2 * k, 2 * degree + 1):

            for i in range(k, k + e + 1):

                out[i, j] += m

    return out


class EllIndependence(NamedTuple):

    equal: bool
    filtrations: list[PerverseFiltration]
    differences: list[tuple[int, int, int]]

    def to_dict(self) -> dict:

        return {
            'equal': self.equal,
            'samples': [f.to_dict()['ell'] for f in self.filtrations],
            'differences': [list(d) for d in self.differences],
        }


def check_ell_independence(
        module: GradedModule,
        samples: Sequence[Mat],
    ) -> EllIndependence:
    """
    Compare the filtrations of several elements as canonical subspaces.

    Returns:
        Whether all agree with the first one, the filtrations, and the
        differing ``(sample, i, j)`` triples.

    Raises:
        PreconditionError: With fewer than two samples.
    """

    samples = list(samples)

    if len(samples) < 2:

        raise PreconditionError(
            f'independence check needs at least two samples, got {len(samples)}',
        )

    filtrations = [perverse_filtration(module, ell) for ell in samples]
    first = filtrations[0]
    differences = [
        (idx, i, j)
        for idx, other in enumerate(filtrations[1:], start = 1)
        for (i, j), piece in first.pieces.items()
        if other.pieces[i, j] != piece
    ]

    if differences:

        _log(
            f'Perverse filtration depends on the element: '
            f'{len(differences)} differing piece(s).'
        )

    return EllIndependence(not differences, filtrations, differences)


def check_filtration_invariants(
        filtration: PerverseFiltration,
        subalgebra = None,
    ) -> list[str]:
    """
    Nestedness, P_{2d} = M, b·P_j ⊆ P_j for the subalgebra and
    A^s P_j ⊆ P_{j+2s} for the algebra basis.

    Returns:
        Descriptions of the violations; empty if none.
    """

    module = filtration.module
    algebra = module.algebra
    d = module.degree
    problems = []

    for i in range(d + 1):

        for j in filtration.levels:

            if not filtration.piece(i, j - 1) <= filtration.piece(i, j):

                problems.append(f'P_{j - 1} ⊄ P_{j} in degree {i}')

        if not filtration.piece(i, 2 * d).is_full():

            problems.append(f'P_{2 * d} ≠ M in degree {i}')

    def moves(u: Mat, s: int, shift: int, name: str) -> None:

        for i in range(d - s + 1):

            act = module.action(u, i, degree = s)

            for j in filtration.levels:

                image = filtration.piece(i, j).image_under(act)

                if not image <= filtration.piece(i + s, j + shift):

                    problems.append(
                        f'{name} maps P_{j} ∩ M^{i} outside P_{j + shift}',
                    )


    for b in range(1, algebra.dim):

        s = algebra.degrees[b]
        moves(algebra.basis_element(b), s, 2 * s, algebra.labels[b])

    if subalgebra is not None:

        for k in range(1, len(subalgebra.components)):

            for v in subalgebra.basis_vectors(k):

                moves(v, k, 0, algebra.format(v))

    return problems
