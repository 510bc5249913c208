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
Lattice of flats, graded Möbius algebra and top-heavy counts.
"""

from __future__ import annotations

__all__ = [
    'FlatsLattice',
    'TopHeavyReport',
    'flat_label',
    'flats',
    'mobius_algebra',
    'top_heavy',
]

import itertools
from functools import cached_property
from dataclasses import field, dataclass

from lefmod._session import _log
from lefmod.graded import GradedAlgebra, make_algebra
from ._matroid import Matroid

Flat = frozenset[int]


@dataclass(eq = False)
class FlatsLattice:
    """
    ``by_rank[k]``: the flats of rank k, sorted.
    """

    matroid: Matroid
    by_rank: tuple[tuple[Flat, ...], ...]

    @property
    def rank(self) -> int:

        return self.matroid.rank


    @property
    def counts(self) -> tuple[int, ...]:

        return tuple(len(level) for level in self.by_rank)


    @cached_property
    def _rank_of(self) -> dict[Flat, int]:

        return {f: k for k, level in enumerate(self.by_rank) for f in level}


    def flats(self) -> list[Flat]:

        return [f for level in self.by_rank for f in level]


    def rank_of(self, flat: Flat) -> int:

        return self._rank_of[flat]


    def join(self, first: Flat, second: Flat) -> Flat:

        return self.matroid.closure(first | second)


    def bottom(self) -> Flat:

        return self.by_rank[0][0]


    def top(self) -> Flat:

        return self.by_rank[-1][0]


def flats(matroid: Matroid) -> FlatsLattice:
    """
    Closures of the independent sets, grouped by rank.
    """

    found = set()

    for r in range(matroid.rank + 1):

        for subset in itertools.combinations(matroid.ground, r):

            if matroid.is_independent(subset):

                found.add(matroid.closure(subset))

    by_rank = [[] for _ in range(matroid.rank + 1)]

    for f in found:

        by_rank[matroid.rank_of(f)].append(f)

    lattice = FlatsLattice(
        matroid,
        tuple(tuple(sorted(level, key = sorted)) for level in by_rank),
    )
    _log(f'Flats of `{matroid.name}`: counts {lattice.counts}.')

    return lattice


def flat_label(flat: Flat, rank: int, n: int) -> str:

    if rank == 0:

        return '1'

    sep = '' if n < 10 else '_'

    return 'y' + sep.join(str(e) for e in sorted(flat))


def mobius_algebra(lattice: FlatsLattice) -> tuple[GradedAlgebra, list[int]]:
    """
    Basis y_F over the flats, graded by rank, with y_F y_G = y_{F∨G} when
    the ranks add up and 0 otherwise.

    Returns:
        The algebra and the degree map on its top degree (y_E ↦ 1).
    """

    n = lattice.matroid.n
    label = {
        f: flat_label(f, k, n)
        for k, level in enumerate(lattice.by_rank)
        for f in level
    }
    products = {}

    for f, g in itertools.product(lattice.flats(), repeat = 2):

        rf, rg = lattice.rank_of(f), lattice.rank_of(g)

        if not rf or not rg:

            continue

        joined = lattice.join(f, g)

        if lattice.rank_of(joined) == rf + rg:

            products[label[f], label[g]] = {label[joined]: 1}

    algebra = make_algebra(
        {
            'dims': list(lattice.counts),
            'labels': [label[f] for f in lattice.flats()],
            'products': products,
        },
        name = f'H({lattice.matroid.name})',
    )

    return algebra, [1]


@dataclass
class TopHeavyReport:

    counts: tuple[int, ...]
    violations: list[tuple[int, int]] = field(default_factory = list)
    checked: int = 0

    @property
    def ok(self) -> bool:

        return not self.violations


    def to_dict(self) -> dict:

        return {
            'counts': list(self.counts),
            'pairs_checked': self.checked,
            'violations': [list(v) for v in self.violations],
            'ok': self.ok,
        }


def top_heavy(lattice: FlatsLattice) -> TopHeavyReport:
    """
    |ℒ^k| ≤ |ℒ^j| for all k ≤ j ≤ d − k.
    """

    counts = lattice.counts
    d = lattice.rank
    report = TopHeavyReport(counts)

    for k in range(d + 1):

        for j in range(k, d - k + 1):

            report.checked += 1

            if counts[k] > counts[j]:

                report.violations.append((k, j))

    if not report.ok:

        _log(f'Top-heavy inequality fails: {report.violations}.')

    return report
