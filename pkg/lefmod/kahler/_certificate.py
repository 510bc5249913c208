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
Machine readable results of the Kähler package checks.
"""

from __future__ import annotations

__all__ = [
    'CAVEAT',
    'CheckResult',
    'KahlerCertificate',
]

from dataclasses import field, dataclass

from lefmod.exactlin import Mat, Inertia

CAVEAT = 'sampled, not cone-exhaustive'


def _vec(v: Mat | None) -> list[str] | None:

    return None if v is None else [str(x) for x in v.entries]


@dataclass
class CheckResult:
    """
    Outcome of one check in one degree, at one sample point.

    Attributes:
        check:
            ``PD``, ``HL`` or ``HR``.
        degree:
            The degree k of the checked piece.
        ok:
            Whether the check passed.
        point:
            Index of the sample point, None for point independent checks.
        witness:
            On failure, a vector of M^{witness_degree} proving it.
        precondition:
            False if the check could not run because a precondition
            failed (HR where HL fails).
    """

    check: str
    degree: int
    ok: bool
    point: int | None = None
    witness: Mat | None = None
    witness_degree: int | None = None
    inertia: Inertia | None = None
    precondition: bool = True
    detail: str = ''

    def to_dict(self) -> dict:

        out = {
            'check': self.check,
            'degree': self.degree,
            'ok': self.ok,
            'point': self.point,
            'precondition': self.precondition,
            'detail': self.detail,
        }

        if self.witness is not None:

            out['witness'] = _vec(self.witness)
            out['witness_degree'] = self.witness_degree

        if self.inertia is not None:

            out['inertia'] = list(self.inertia)

        return out


@dataclass
class KahlerCertificate:

    module: str
    points: list[Mat] = field(default_factory = list)
    point_labels: list[str] = field(default_factory = list)
    results: list[CheckResult] = field(default_factory = list)
    caveat: str = CAVEAT

    @property
    def ok(self) -> bool:

        return all(r.ok for r in self.results)


    def select(
            self,
            check: str | None = None,
            point: int | None = None,
        ) -> list[CheckResult]:

        return [
            r for r in self.results
            if (check is None or r.check == check) and
            (point is None or r.point == point)
        ]


    @property
    def pd_ok(self) -> bool:

        return all(r.ok for r in self.select('PD'))


    def hl_ok(self, point: int | None = None) -> bool:

        return all(r.ok for r in self.select('HL', point))


    def hr_ok(self, point: int | None = None) -> bool:

        return all(r.ok for r in self.select('HR', point))


    def failures(self) -> list[CheckResult]:

        return [r for r in self.results if not r.ok]


    def to_dict(self) -> dict:

        return {
            'module': self.module,
            'caveat': self.caveat,
            'points': self.point_labels,
            'ok': self.ok,
            'pd_ok': self.pd_ok,
            'hl_ok': self.hl_ok(),
            'hr_ok': self.hr_ok(),
            'results': [r.to_dict() for r in self.results],
        }
