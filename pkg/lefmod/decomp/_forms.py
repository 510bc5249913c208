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
Invariant forms on summands, Hodge-Riemann signs and the middle socle.
"""

from __future__ import annotations

__all__ = [
    'InducedForm',
    'hr_sign',
    'induced_form',
    'middle_socle_ok',
]

from typing import NamedTuple
from fractions import Fraction
from collections.abc import Sequence

from lefmod._session import _log
from lefmod._errors import NotLefschetzError
from lefmod.exactlin import Mat, nullspace
from lefmod.graded import PairingForm, GradedModule
from lefmod.kahler import check_hr


class InducedForm(NamedTuple):
    """
    The normalized invariant form (None unless the solution space is one
    dimensional), the dimension of the solution space and whether the
    chosen form is nondegenerate.
    """

    form: PairingForm | None
    space_dim: int
    nondegenerate: bool
    solutions: list[PairingForm]


def induced_form(module: GradedModule) -> InducedForm:
    """
    Symmetric invariant forms pairing N^i with N^{e−i}.

    Blocks with i ≤ e/2 are unknowns, the others their transposes. A one
    dimensional solution space is normalized so that the first nonzero
    entry of the lowest block is +1.
    """

    e = module.degree
    algebra = module.algebra
    index = {}

    def var(i: int, r: int, c: int) -> int:

        if i > e - i:

            i, r, c = e - i, c, r

        if i == e - i and r > c:

            r, c = c, r

        key = (i, r, c)

        if key not in index:

            index[key] = len(index)

        return index[key]


    for i in range(e // 2 + 1):

        for r in range(module.dim(i)):

            for c in range(module.dim(e - i)):

                var(i, r, c)

    rows = []

    for b in range(algebra.dim):

        s = algebra.degrees[b]

        if s == 0:

            continue

        for i in range(e - s + 1):

            left = module.basis_action(b, i)
            right = module.basis_action(b, e - i - s)

            for p in range(module.dim(i)):

                for q in range(module.dim(e - i - s)):

                    row = {}

                    for r in range(module.dim(i + s)):

                        if left[r, p]:

                            key = var(i + s, r, q)
                            row[key] = row.get(key, Fraction(0)) + left[r, p]

                    for r in range(module.dim(e - i)):

                        if right[r, q]:

                            key = var(i, p, r)
                            row[key] = row.get(key, Fraction(0)) - right[r, q]

                    row = {k: v for k, v in row.items() if v}

                    if row:

                        rows.append(row)

    solutions = nullspace(rows, len(index))

    def to_form(vec) -> PairingForm:

        return PairingForm(
            module,
            tuple(
                Mat.from_rows(
                    [
                        [vec[var(i, r, c)] for c in range(module.dim(e - i))]
                        for r in range(module.dim(i))
                    ],
                    cols = module.dim(e - i),
                )
                for i in range(e + 1)
            ),
        )


    forms = [to_form(vec) for vec in solutions]

    if len(forms) != 1:

        _log(f'Invariant forms on the summand: {len(forms)}-dimensional space.')

        return InducedForm(None, len(forms), False, forms)

    form = forms[0]
    entries = next(
        (x for blk in form.blocks for x in blk.entries if x),
        Fraction(1),
    )
    form = form.scaled(1 / entries)
    nondegenerate = all(
        blk.rank() == module.dim(i) == module.dim(e - i)
        for i, blk in enumerate(form.blocks)
    )

    return InducedForm(form, 1, nondegenerate, [form])


def hr_sign(
        module: GradedModule,
        form: PairingForm,
        samples: Sequence[Mat],
    ) -> int:
    """
    The unique ε ∈ {±1} such that ε·Q satisfies Hodge-Riemann at every
    sample.

    Raises:
        NotLefschetzError: If neither or both signs pass.
    """

    passing = [
        eps for eps in (1, -1)
        if all(
            r.ok
            for idx, ell in enumerate(samples)
            for r in check_hr(module, form.scaled(eps), ell, idx)
        )
    ]

    if len(passing) != 1:

        raise NotLefschetzError(
            f'{len(passing)} signs satisfy Hodge-Riemann on the summand',
            (module.degree,),
        )

    return passing[0]


def middle_socle_ok(module: GradedModule) -> bool | None:
    """
    No nonzero middle degree vector is killed by all positive degree
    elements. None if the degree is odd or zero.
    """

    e = module.degree

    if e <= 0 or e % 2:

        return None

    mid = e // 2
    algebra = module.algebra
    stacked = [
        module.basis_action(b, mid)
        for b in range(algebra.dim)
        if algebra.degrees[b] > 0 and mid + algebra.degrees[b] <= e
    ]

    if not stacked:

        return module.dim(mid) == 0

    return Mat.vstack(stacked).kernel().is_zero()
