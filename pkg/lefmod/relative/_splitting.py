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
The subalgebra preserving the perverse filtration, and an explicit
isomorphism of modules over it between M and Gr.

The rows of Gr are split off one at a time: Gr^{•,0}, then Gr^{•,2d},
then Gr^{•,1} and Gr^{•,2d−1}, and so on, leaving Gr^{•,d} last. Each
pair of steps uses η^{d−t} on M and the inverse of its action on Gr.
"""

from __future__ import annotations

__all__ = ['SplittingMap', 'compute_R', 'deligne_splitting', 'split_order']

from dataclasses import field, dataclass

from lefmod._session import _log
from lefmod._errors import LefmodError, NotLefschetzError
from lefmod.exactlin import Mat, Subspace, nullspace
from lefmod.graded import Subalgebra, GradedModule
from lefmod.perverse import BigradedModule, PerverseFiltration


def compute_R(module: GradedModule, filtration: PerverseFiltration) -> Subalgebra:
    """
    All elements of the algebra preserving every P_j.

    Raises:
        LefmodError: If the solution is not closed under multiplication.
    """

    algebra = module.algebra
    d = module.degree
    components = []

    for s in range(algebra.top_degree + 1):

        indices = list(algebra.basis_range(s))
        rows = []

        for i in range(d - s + 1):

            for j in filtration.levels:

                source = filtration.piece(i, j)
                target = filtration.piece(i + s, j)

                if source.is_zero() or target.is_full():

                    continue

                ann = target.annihilator()
                moved = [
                    ann @ module.basis_action(b, i) @ source.basis
                    for b in indices
                ]

                for r in range(ann.rows):

                    for c in range(source.dim):

                        row = {
                            pos: m[r, c]
                            for pos, m in enumerate(moved)
                            if m[r, c]
                        }

                        if row:

                            rows.append(row)

        components.append(Subspace.span(
            nullspace(rows, len(indices)),
            ambient_dim = len(indices),
        ))

    R = Subalgebra.from_components(algebra, components)

    for k1 in range(1, algebra.top_degree + 1):

        for k2 in range(k1, algebra.top_degree - k1 + 1):

            for u in R.basis_vectors(k1):

                for v in R.basis_vectors(k2):

                    if not R.contains(algebra.multiply(u, v)):

                        raise LefmodError(
                            'elements preserving the filtration are not '
                            f'closed under multiplication in degrees {k1}, {k2}',
                        )

    _log(f'Filtration stabilizer R has dimensions {R.dims}.')

    return R


def split_order(degree: int) -> list[int]:
    """
    0, 2d, 1, 2d − 1, …, d − 1, d + 1, d.
    """

    order = []

    for t in range(degree):

        order.extend((t, 2 * degree - t))

    return order + [degree] if degree >= 0 else []


@dataclass
class SplittingMap:
    """
    ``maps[i]``: M^i → ⊕_j Gr^{i,j}, rows ordered by j; ``lifts[i, j]``
    is the inverse restricted to Gr^{i,j}.
    """

    module: GradedModule
    maps: tuple[Mat, ...]
    lifts: dict[tuple[int, int], Mat]
    order: list[int]
    R: Subalgebra | None = None
    filtration_exact: bool = True
    equivariant: bool | None = None
    failures: list[str] = field(default_factory = list)

    @property
    def ok(self) -> bool:

        return self.filtration_exact and self.equivariant is not False


    def apply(self, x: Mat, i: int) -> Mat:

        return self.maps[i] @ x


    def component(self, x: Mat, i: int, j: int) -> Mat:
        """
        The Gr^{i,j} component of φ(x).
        """

        start = sum(
            self.lifts[i, jj].cols
            for jj in range(j)
            if (i, jj) in self.lifts
        )

        return self.maps[i].select_rows(
            range(start, start + self.lifts[i, j].cols),
        ) @ x


    def to_dict(self) -> dict:

        return {
            'order': self.order,
            'invertible': True,
            'filtration_exact': self.filtration_exact,
            'equivariant': self.equivariant,
            'R_dims': list(self.R.dims) if self.R is not None else None,
            'failures': self.failures,
            'ok': self.ok,
        }


def _eta_inverse(gr: BigradedModule, eta: Mat, t: int) -> dict[int, Mat]:

    d = gr.degree
    out = {}

    for i in range(t - d, d + 1):

        if not gr.dim(i, t) and not gr.dim(i + d - t, 2 * d - t):

            continue

        m = gr.star_power(eta, d - t, i, t)

        if not (m.is_square and m.is_invertible()):

            raise NotLefschetzError(
                'η^{d−j} is not bijective on Gr: relative hard Lefschetz '
                'fails',
                (i, t),
            )

        out[i] = m.inverse()

    return out


def _section(
        filtration: PerverseFiltration,
        gr: BigradedModule,
        proj: list[Mat],
        t: int,
        i: int,
    ) -> Mat:
    """
    Gr^{i,t} → P_t ∩ W^i, inverse to taking classes.
    """

    n = filtration.module.dim(i)

    if not gr.dim(i, t):

        return Mat.zeros(n, 0)

    low = filtration.piece(i, t) & Subspace.span(proj[i], ambient_dim = n)
    classes = gr.coords[i, t] @ low.basis

    if not (classes.is_square and classes.is_invertible()):

        raise NotLefschetzError('splitting step is not an isomorphism', (i, t))

    return low.basis @ classes.inverse()


def deligne_splitting(
        module: GradedModule,
        filtration: PerverseFiltration,
        gr: BigradedModule,
        eta: Mat,
        R: Subalgebra | None = None,
    ) -> SplittingMap:
    """
    Split M into copies of the rows of Gr.

    `W` is the part not yet split off, kept as a projection ``proj``
    commuting with R. At step t the low part P_t ∩ W is split off along
    the kernel of x ↦ (η^{d−t}∗)^{−1} [proj(η^{d−t} x)]; the top row
    Gr^{•,2d−t} of what remains is then lifted as
    proj(η^{d−t} (η^{d−t}∗)^{−1} g).

    Raises:
        NotLefschetzError: If relative hard Lefschetz fails at η or the
            assembled map is not invertible.
    """

    d = module.degree

    if module.is_zero():

        return SplittingMap(module, (), {}, [], R)

    proj = [Mat.identity(module.dim(i)) for i in range(d + 1)]
    lifts = {}

    for t in range(d):

        p, h = d - t, 2 * d - t
        inverse = _eta_inverse(gr, eta, t)
        section = {
            i: _section(filtration, gr, proj, t, i)
            for i in range(d + 1)
        }
        reduced = list(proj)

        for i in range(d + 1):

            lifts[i, t] = section[i]

            if i not in inverse:

                continue

            sigma = (
                section[i] @ inverse[i] @ gr.coords[i + p, h] @
                proj[i + p] @ module.power(eta, p, i, degree = 1)
            )
            reduced[i] = proj[i] - sigma @ proj[i]

        proj = reduced

        for i in range(d + 1):

            n = module.dim(i)

            if not gr.dim(i, h):

                lifts[i, h] = Mat.zeros(n, 0)
                continue

            tau = (
                proj[i] @ module.power(eta, p, i - p, degree = 1) @
                section[i - p] @ inverse[i - p]
            )
            lifts[i, h] = tau
            proj[i] = proj[i] - tau @ gr.coords[i, h] @ proj[i]

    for i in range(d + 1):

        lifts[i, d] = _section(filtration, gr, proj, d, i)

    maps = []

    for i in range(d + 1):

        columns = Mat.hstack(
            [lifts[i, j] for j in filtration.levels],
            rows = module.dim(i),
        )

        if not (columns.is_square and columns.is_invertible()):

            raise NotLefschetzError('splitting is not invertible', (i,))

        maps.append(columns.inverse())

    result = SplittingMap(module, tuple(maps), lifts, split_order(d), R)
    _check_exact(result, filtration, gr)

    if R is not None:

        _check_equivariant(result, gr, R)

    _log(
        f'Splitting built in degree {d}: exact={result.filtration_exact}, '
        f'equivariant={result.equivariant}.'
    )

    return result


def _check_exact(
        result: SplittingMap,
        filtration: PerverseFiltration,
        gr: BigradedModule,
    ) -> None:

    for (i, j), lift in sorted(result.lifts.items()):

        if not lift.cols:

            continue

        if not (
            filtration.piece(i, j).contains(lift) and
            gr.coords[i, j] @ lift == Mat.identity(lift.cols)
        ):

            result.filtration_exact = False
            result.failures.append(f'lift of Gr^({i},{j}) not in P_{j}')


def _check_equivariant(
        result: SplittingMap,
        gr: BigradedModule,
        R: Subalgebra,
    ) -> None:

    d = result.module.degree
    result.equivariant = True

    for k in range(1, min(d, R.parent.top_degree) + 1):

        for r in R.basis_vectors(k):

            for (i, j), lift in sorted(result.lifts.items()):

                if i + k > d or not lift.cols:

                    continue

                left = result.module.action(r, i, degree = k) @ lift
                right = result.lifts[i + k, j] @ gr.act(r, i, j, degree = k)

                if left != right:

                    result.equivariant = False
                    result.failures.append(
                        f'{R.parent.format(r)} does not commute at ({i},{j})',
                    )
