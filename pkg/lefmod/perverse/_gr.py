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
The associated bigraded module Gr = ⊕_j P_j / P_{j−1} with its actions and
induced form, and the layer of one-dimensional ℓ-chains.
"""

from __future__ import annotations

__all__ = [
    'BigradedModule',
    'Layer',
    'build_gr',
    'one_dim_layer',
]

from typing import NamedTuple
from dataclasses import field, dataclass

from lefmod._session import _log
from lefmod._errors import NotLefschetzError
from lefmod.exactlin import Mat, Subspace
from lefmod.graded import GradedModule, PairingForm, Subalgebra
from lefmod.perverse._filtration import PerverseFiltration


@dataclass(eq = False)
class BigradedModule:
    """
    Gr^{i,j} represented on canonical lifts.

    ``lifts[i, j]`` extends the canonical basis of P_{j−1} ∩ M^i to one of
    P_j ∩ M^i; ``coords[i, j]`` reads the Gr^{i,j} component of a vector of
    P_j ∩ M^i.
    """

    filtration: PerverseFiltration
    form: PairingForm | None
    lifts: dict[tuple[int, int], Mat]
    coords: dict[tuple[int, int], Mat]
    subalgebra: Subalgebra | None = None
    _qbar: dict = field(default_factory = dict, repr = False)

    @property
    def module(self) -> GradedModule:

        return self.filtration.module


    @property
    def degree(self) -> int:

        return self.module.degree


    @property
    def ell(self) -> Mat:

        return self.filtration.ell


    def bidegrees(self) -> list[tuple[int, int]]:

        return sorted(
            (i, j) for (i, j), lift in self.lifts.items() if lift.cols
        )


    def dim(self, i: int, j: int) -> int:

        lift = self.lifts.get((i, j))

        return lift.cols if lift is not None else 0


    def row_dims(self, j: int) -> tuple[int, ...]:

        return tuple(self.dim(i, j) for i in range(self.degree + 1))


    def _zero(self, target: tuple[int, int], source: tuple[int, int]) -> Mat:

        return Mat.zeros(self.dim(*target), self.dim(*source))


    def act(self, u: Mat, i: int, j: int, degree: int | None = None) -> Mat:
        """
        Gr^{i,j} → Gr^{i+s,j} induced by an element preserving the
        filtration (an element of B, or of R).
        """

        s = self.module.algebra.homogeneous_degree(u)
        s = degree if s is None else s

        if (i + s, j) not in self.coords or not self.dim(i, j):

            return self._zero((i + s, j), (i, j))

        return (
            self.coords[i + s, j] @
            self.module.action(u, i, degree = s) @
            self.lifts[i, j]
        )


    def star(self, u: Mat, i: int, j: int, degree: int | None = None) -> Mat:
        """
        Gr^{i,j} → Gr^{i+s,j+2s}, the action u ∗ x.
        """

        s = self.module.algebra.homogeneous_degree(u)
        s = degree if s is None else s

        if (i + s, j + 2 * s) not in self.coords or not self.dim(i, j):

            return self._zero((i + s, j + 2 * s), (i, j))

        return (
            self.coords[i + s, j + 2 * s] @
            self.module.action(u, i, degree = s) @
            self.lifts[i, j]
        )


    def star_power(self, u: Mat, p: int, i: int, j: int) -> Mat:

        result = Mat.identity(self.dim(i, j))

        for step in range(p):

            result = self.star(u, i + step, j + 2 * step, degree = 1) @ result

        return result


    def act_power(self, u: Mat, p: int, i: int, j: int) -> Mat:

        result = Mat.identity(self.dim(i, j))

        for step in range(p):

            result = self.act(u, i + step, j, degree = 1) @ result

        return result


    def qbar(self, i: int, j: int) -> Mat:
        """
        Q̄ between Gr^{i,j} and Gr^{d−i,2d−j}.
        """

        d = self.degree

        if self.form is None:

            raise NotLefschetzError('no form attached to Gr', (i, j))

        if (i, j) not in self._qbar:

            if (i, j) in self.lifts and (d - i, 2 * d - j) in self.lifts:

                self._qbar[i, j] = (
                    self.lifts[i, j].T @
                    self.form.block(i) @
                    self.lifts[d - i, 2 * d - j]
                )

            else:

                self._qbar[i, j] = self._zero((i, j), (d - i, 2 * d - j))

        return self._qbar[i, j]


    def row(self, j: int) -> GradedModule:
        """
        Gr^{•,j} as a graded module over the subalgebra (or over the
        algebra, acting through elements that preserve the filtration).
        """

        sub = self.subalgebra
        algebra = sub.algebra if sub is not None else self.module.algebra
        embedding = sub.embedding if sub is not None else tuple(
            algebra.basis_element(b) for b in range(algebra.dim)
        )
        dims = self.row_dims(j)
        actions = tuple(
            tuple(
                self.act(v, i, j, degree = algebra.degrees[b])
                for i in range(len(dims))
            )
            for b, v in enumerate(embedding)
        )

        return GradedModule(
            algebra,
            dims,
            actions,
            name = f'Gr^(*,{j})',
        )


    def row_form(self, j: int) -> PairingForm:
        """
        Q̄ on the self-paired row Gr^{•,d}.
        """

        row = self.row(j)

        return PairingForm(
            row,
            tuple(self.qbar(i, j) for i in range(self.degree + 1)),
        )


    def classes(self, x: Mat, i: int, j: int) -> Mat:
        """
        The class in Gr^{i,j} of a vector of P_j ∩ M^i.
        """

        return self.coords[i, j] @ x


    def to_dict(self) -> dict:

        return {
            'ell': self.module.algebra.format(self.ell),
            'dims': {
                f'{i},{j}': self.dim(i, j) for i, j in self.bidegrees()
            },
        }


def build_gr(
        module: GradedModule,
        form: PairingForm | None,
        filtration: PerverseFiltration,
        subalgebra: Subalgebra | None = None,
    ) -> BigradedModule:
    """
    Lifts, coordinates and induced form of the associated graded module.

    Raises:
        NotLefschetzError: If Q(P_j ∩ M^i, P_{2d−j−1} ∩ M^{d−i}) ≠ 0, if Q̄
            is degenerate, or if the subalgebra does not preserve the
            filtration.
    """

    d = module.degree
    lifts, coords = {}, {}

    for i in range(d + 1):

        n = module.dim(i)
        columns = []

        for j in filtration.levels:

            lifts[i, j] = filtration.piece(i, j - 1).complete_to(
                filtration.piece(i, j),
            )
            columns.append(lifts[i, j])

        inverse = Mat.hstack(columns, rows = n).inverse()
        start = 0

        for j in filtration.levels:

            size = lifts[i, j].cols
            coords[i, j] = inverse.select_rows(range(start, start + size))
            start += size

    gr = BigradedModule(filtration, form, lifts, coords, subalgebra)

    if form is not None:

        for i in range(d + 1):

            for j in filtration.levels:

                left = filtration.piece(i, j).basis
                right = filtration.piece(d - i, 2 * d - j - 1).basis

                if not (left.T @ form.block(i) @ right).is_zero():

                    raise NotLefschetzError(
                        'Q does not vanish on P_j × P_{2d−j−1}',
                        (i, j),
                    )

        for i, j in gr.bidegrees():

            blk = gr.qbar(i, j)

            if not blk.is_invertible():

                raise NotLefschetzError('Q̄ is degenerate', (i, j))

    if subalgebra is not None:

        for k in range(1, len(subalgebra.components)):

            for v in subalgebra.basis_vectors(k):

                for i in range(d - k + 1):

                    act = module.action(v, i, degree = k)

                    for j in filtration.levels:

                        image = filtration.piece(i, j).image_under(act)

                        if not image <= filtration.piece(i + k, j):

                            raise NotLefschetzError(
                                'the subalgebra does not preserve the '
                                'perverse filtration',
                                (i, j),
                            )

    _log(f'Gr built: {len(gr.bidegrees())} nonzero bidegree(s).')

    return gr


class Layer(NamedTuple):
    """
    N = ker ℓ / (ℓM ∩ ker ℓ), its restricted form and the lifts of its
    basis into M.
    """

    module: GradedModule
    form: PairingForm | None
    lifts: tuple[Mat, ...]


def one_dim_layer(
        module: GradedModule,
        ell: Mat,
        form: PairingForm | None = None,
    ) -> Layer:
    """
    The span of the one-dimensional ℚ[ℓ]-summands, up to ℓM.

    Raises:
        NotLefschetzError: If the restriction of the form to N is
            degenerate.
    """

    d = module.degree
    algebra = module.algebra
    kernels, images, lifts, change = [], [], [], []

    for i in range(d + 1):

        n = module.dim(i)
        kernel = module.action(ell, i, degree = 1).kernel()
        image = (
            module.action(ell, i - 1, degree = 1).image()
            if i else Subspace.zero(n)
        ) & kernel
        lift = image.complete_to(kernel)
        kernels.append(kernel)
        images.append(image)
        lifts.append(lift)
        change.append(Mat.hstack([image.basis, lift], rows = n))

    def reduce(i: int, v: Mat) -> Mat:

        coords = change[i].solve(v)

        return coords.select_rows(range(images[i].dim, coords.rows))


    dims = tuple(lift.cols for lift in lifts)
    actions = []

    for b in range(algebra.dim):

        s = algebra.degrees[b]
        per_degree = []

        for i in range(d + 1):

            if i + s > d:

                per_degree.append(Mat.zeros(0, dims[i]))
                continue

            moved = module.basis_action(b, i) @ lifts[i]
            per_degree.append(
                Mat.from_columns(
                    [reduce(i + s, moved.column(c)) for c in range(moved.cols)],
                    rows = dims[i + s],
                ),
            )

        actions.append(tuple(per_degree))

    layer = GradedModule(
        algebra,
        dims,
        tuple(actions),
        name = f'N({algebra.format(ell)})',
    )
    layer_form = None

    if form is not None:

        blocks = tuple(
            lifts[i].T @ form.block(i) @ lifts[d - i]
            for i in range(d + 1)
        )
        layer_form = PairingForm(layer, blocks)

        for i, blk in enumerate(blocks):

            if blk.rank() != dims[i] or dims[i] != dims[d - i]:

                raise NotLefschetzError(
                    'the form restricted to the one-dimensional layer '
                    'is degenerate',
                    (i,),
                )

    _log(f'One-dimensional layer of dims {dims}.')

    return Layer(layer, layer_form, tuple(lifts))
