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
Matroids on {1, …, n} given by their bases.
"""

from __future__ import annotations

__all__ = [
    'Matroid',
    'fano',
    'from_vectors',
    'graphic',
    'make_matroid',
    'parse_bases',
    'read_bases',
    'uniform',
]

import os
import itertools
from dataclasses import dataclass
from collections.abc import Iterable, Sequence

from lefmod._session import _log
from lefmod._errors import MatroidError
from lefmod.exactlin import Mat

EXCHANGE_CHECK_LIMIT = 9
FANO_LINES = ('123', '345', '156', '367', '257', '147', '246')


@dataclass(frozen = True, eq = False)
class Matroid:

    n: int
    rank: int
    bases: frozenset[frozenset[int]]
    name: str = ''

    @property
    def ground(self) -> range:

        return range(1, self.n + 1)


    def rank_of(self, subset: Iterable[int]) -> int:

        subset = frozenset(subset)

        return max(len(subset & b) for b in self.bases)


    def is_independent(self, subset: Iterable[int]) -> bool:

        subset = frozenset(subset)

        return self.rank_of(subset) == len(subset)


    def closure(self, subset: Iterable[int]) -> frozenset[int]:

        subset = frozenset(subset)
        r = self.rank_of(subset)

        return subset | frozenset(
            e for e in self.ground
            if e not in subset and self.rank_of(subset | {e}) == r
        )


    def validate(self) -> None:
        """
        Raises:
            MatroidError: If there are no bases, bases of different size,
                elements outside the ground set or, for n ≤ 9, a failure
                of basis exchange.
        """

        if not self.bases:

            raise MatroidError('a matroid needs at least one basis', self.name)

        for b in self.bases:

            if len(b) != self.rank:

                raise MatroidError(
                    f'basis of size {len(b)}, expected {self.rank}',
                    _fmt(b),
                )

            if not b <= frozenset(self.ground):

                raise MatroidError('element outside the ground set', _fmt(b))

        if self.n > EXCHANGE_CHECK_LIMIT:

            _log(f'Basis exchange not checked for n = {self.n}.')
            return

        for b1, b2 in itertools.product(self.bases, repeat = 2):

            for x in b1 - b2:

                if not any((b1 - {x}) | {y} in self.bases for y in b2 - b1):

                    raise MatroidError(
                        f'basis exchange fails removing {x}',
                        f'{_fmt(b1)}, {_fmt(b2)}',
                    )


    def to_text(self) -> str:

        return '\n'.join(
            ' '.join(str(e) for e in sorted(b))
            for b in sorted(self.bases, key = sorted)
        ) + '\n'


def _fmt(subset: Iterable[int]) -> str:

    return '{' + ','.join(str(e) for e in sorted(subset)) + '}'


def make_matroid(
        bases: Iterable[Iterable[int]],
        n: int | None = None,
        name: str = '',
    ) -> Matroid:

    bases = frozenset(frozenset(int(e) for e in b) for b in bases)

    if not bases:

        raise MatroidError('a matroid needs at least one basis', name)

    n = max((max(b) for b in bases if b), default = 0) if n is None else n
    rank = len(next(iter(bases)))
    matroid = Matroid(n, rank, bases, name = name)
    matroid.validate()
    _log(f'Matroid `{name}`: n = {n}, rank {rank}, {len(bases)} bases.')

    return matroid


def uniform(r: int, n: int) -> Matroid:

    if not 0 <= r <= n:

        raise MatroidError(f'U({r},{n}) needs 0 ≤ r ≤ n')

    return make_matroid(
        itertools.combinations(range(1, n + 1), r),
        n = n,
        name = f'U{r},{n}',
    )


def graphic(edges: Sequence[Sequence[int]], name: str = '') -> Matroid:
    """
    Cycle matroid: element i is the i-th edge, bases are spanning forests.
    """

    edges = [tuple(e) for e in edges]

    def acyclic(subset) -> bool:

        parent = {}

        def find(v):

            while parent.get(v, v) != v:

                v = parent[v]

            return v


        for idx in subset:

            u, v = edges[idx - 1]
            ru, rv = find(u), find(v)

            if ru == rv:

                return False

            parent[ru] = rv

        return True


    m = len(edges)
    forests = [
        s
        for r in range(m, -1, -1)
        for s in itertools.combinations(range(1, m + 1), r)
        if acyclic(s)
    ]
    rank = max((len(s) for s in forests), default = 0)

    return make_matroid(
        (s for s in forests if len(s) == rank),
        n = m,
        name = name or f'graphic({m} edges)',
    )


def from_vectors(vectors: Sequence[Sequence], name: str = '') -> Matroid:
    """
    Linear matroid over ℚ: element i is the i-th vector.
    """

    columns = Mat.from_columns([list(v) for v in vectors])
    rank = columns.rank()

    return make_matroid(
        (
            s
            for s in itertools.combinations(range(1, columns.cols + 1), rank)
            if columns.select_columns([i - 1 for i in s]).rank() == rank
        ),
        n = columns.cols,
        name = name or f'vectors({columns.cols})',
    )


def fano() -> Matroid:
    """
    F7: all triples except the seven lines of the Fano plane.
    """

    lines = {frozenset(int(c) for c in line) for line in FANO_LINES}

    return make_matroid(
        (
            s for s in itertools.combinations(range(1, 8), 3)
            if frozenset(s) not in lines
        ),
        n = 7,
        name = 'F7',
    )


def parse_bases(text: str, n: int | None = None, name: str = '') -> Matroid:
    """
    One basis per line, elements as whitespace separated integers; blank
    lines and ``#`` comments are skipped.
    """

    bases = []

    for lineno, line in enumerate(text.splitlines(), 1):

        line = line.split('#', 1)[0].strip()

        if not line:

            continue

        try:

            bases.append([int(tok) for tok in line.split()])

        except ValueError:

            raise MatroidError(f'not an integer list: `{line}`', f'line {lineno}')

    return make_matroid(bases, n = n, name = name)


def read_bases(path: str, n: int | None = None) -> Matroid:

    if not os.path.exists(path):

        raise MatroidError('bases file not found', path)

    with open(path, 'r', encoding = 'utf-8') as fp:

        return parse_bases(fp.read(), n = n, name = os.path.basename(path))
