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
Maps induced on Gr by the quotients M → M_ℓ and M → M_η.
"""

from __future__ import annotations

__all__ = [
    'DescentCheck',
    'GrDescentReport',
    'gr_descent_maps',
]

from dataclasses import field, dataclass

from lefmod._session import _log
from lefmod.exactlin import Mat
from lefmod.graded import PairingForm, GradedModule, descend
from lefmod.perverse._gr import BigradedModule, build_gr
from lefmod.perverse._filtration import perverse_filtration


@dataclass
class DescentCheck:

    statement: str
    bidegree: tuple[int, int]
    ok: bool

    def to_dict(self) -> dict:

        return {
            'statement': self.statement,
            'bidegree': list(self.bidegree),
            'ok': self.ok,
        }


@dataclass
class GrDescentReport:
    """
    Grψ: Gr^{i,j} → Gr_ℓ^{i,j−1} and Grφ: Gr^{i,j} → Gr_η^{i,j}, with the
    outcome of each compatibility check.
    """

    gr: BigradedModule
    gr_ell: BigradedModule | None
    gr_eta: BigradedModule | None
    psi: dict[tuple[int, int], Mat] = field(default_factory = dict)
    phi: dict[tuple[int, int], Mat] = field(default_factory = dict)
    checks: list[DescentCheck] = field(default_factory = list)

    @property
    def ok(self) -> bool:

        return all(c.ok for c in self.checks)


    def failures(self) -> list[DescentCheck]:

        return [c for c in self.checks if not c.ok]


    def to_dict(self) -> dict:

        return {
            'ok': self.ok,
            'checks': len(self.checks),
            'failures': [c.to_dict() for c in self.failures()],
        }


def _induced(
        source: BigradedModule,
        target: BigradedModule,
        quotient: tuple[Mat, ...],
        i: int,
        j: int,
        shift: int,
    ) -> Mat:

    if (i, j - shift) not in target.coords or not source.dim(i, j):

        return Mat.zeros(target.dim(i, j - shift), source.dim(i, j))

    return target.coords[i, j - shift] @ quotient[i] @ source.lifts[i, j]


def gr_descent_maps(
        module: GradedModule,
        form: PairingForm,
        ell: Mat,
        eta: Mat,
        gr: BigradedModule | None = None,
    ) -> GrDescentReport:
    """
    Check the behaviour of the perverse filtration under descent.

    With ψ: M → M_ℓ and φ: M → M_η the quotient maps, and all filtrations
    taken with respect to ℓ:

      * ψ(P_j) = P_{ℓ,j−1};
      * Grψ is an isomorphism on Gr^{i,j} for i < j/2;
      * Q̄_ℓ(Grψ x, Grψ y) = Q̄(x, ℓy);
      * φ(P_j) ⊆ P_{η,j} and Grφ is injective for j < d;
      * Q̄_η(Grφ x, Grφ y) = Q̄(x, η ∗ y).
    """

    d = module.degree
    gr = gr or build_gr(module, form, perverse_filtration(module, ell))
    filtration = gr.filtration
    report = GrDescentReport(gr, None, None)

    if d <= 0:

        _log('Descent checks are vacuous in degree ≤ 0.')

        return report

    ell_side = descend(module, form, ell, degree = 1)
    eta_side = descend(module, form, eta, degree = 1)
    psi, phi = ell_side.quotient, eta_side.quotient
    p_ell = perverse_filtration(ell_side.module, ell)
    p_eta = perverse_filtration(eta_side.module, ell)
    gr_ell = build_gr(ell_side.module, ell_side.form, p_ell)
    gr_eta = build_gr(eta_side.module, eta_side.form, p_eta)
    report.gr_ell, report.gr_eta = gr_ell, gr_eta
    add = report.checks.append

    for i in range(d + 1):

        for j in filtration.levels:

            image = filtration.piece(i, j).image_under(psi[i])
            add(DescentCheck(
                'psi(P_j) = P_ell,j-1',
                (i, j),
                image == p_ell.piece(i, j - 1),
            ))

            image = filtration.piece(i, j).image_under(phi[i])
            add(DescentCheck(
                'phi(P_j) in P_eta,j',
                (i, j),
                image <= p_eta.piece(i, j),
            ))

    for i, j in gr.bidegrees():

        report.psi[i, j] = _induced(gr, gr_ell, psi, i, j, 1)
        report.phi[i, j] = _induced(gr, gr_eta, phi, i, j, 0)

        if 2 * i < j:

            m = report.psi[i, j]
            add(DescentCheck(
                'Gr psi isomorphism for i < j/2',
                (i, j),
                m.is_square and m.is_invertible(),
            ))

        if j < d:

            add(DescentCheck(
                'Gr phi injective for j < d',
                (i, j),
                report.phi[i, j].rank() == gr.dim(i, j),
            ))

    for i, j in gr.bidegrees():

        # partner bidegrees of Gr^{i,j} after descent by one degree
        partner = (d - i - 1, 2 * d - j)

        if gr.dim(*partner) and (i, j - 1) in gr_ell.lifts:

            left = (
                report.psi[i, j].T @ gr_ell.qbar(i, j - 1) @
                report.psi[partner]
            )
            right = gr.qbar(i, j) @ gr.act(ell, *partner, degree = 1)
            add(DescentCheck('Q_ell identity', (i, j), left == right))

        partner = (d - i - 1, 2 * d - j - 2)

        if gr.dim(*partner) and (i, j) in gr_eta.lifts:

            left = (
                report.phi[i, j].T @ gr_eta.qbar(i, j) @
                report.phi[partner]
            )
            right = gr.qbar(i, j) @ gr.star(eta, *partner, degree = 1)
            add(DescentCheck('Q_eta identity', (i, j), left == right))

    for check in report.failures():

        _log(f'Descent check `{check.statement}` fails at {check.bidegree}.')

    return report
