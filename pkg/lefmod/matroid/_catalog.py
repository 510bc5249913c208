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
The packaged catalog of small matroids.
"""

from __future__ import annotations

__all__ = ['catalog', 'catalog_entry', 'matroid_from_spec']

from collections.abc import Mapping

from lefmod import data as _data
from lefmod._errors import MatroidError
from ._matroid import (
    Matroid,
    fano,
    graphic,
    uniform,
    from_vectors,
    make_matroid,
)


def matroid_from_spec(spec: Mapping) -> Matroid:
    """
    A matroid from a catalog style record.

    Args:
        spec:
            ``kind`` is one of ``uniform`` (``r``, ``n``), ``graphic``
            (``edges``), ``vectors`` (``vectors``), ``bases`` (``bases``,
            optional ``n``) or ``fano``.
    """

    kind = spec.get('kind')
    name = spec.get('name', '')

    if kind == 'uniform':

        return uniform(int(spec['r']), int(spec['n']))

    if kind == 'graphic':

        return graphic(spec['edges'], name = name)

    if kind == 'vectors':

        return from_vectors(spec['vectors'], name = name)

    if kind == 'bases':

        return make_matroid(spec['bases'], n = spec.get('n'), name = name)

    if kind == 'fano':

        return fano()

    raise MatroidError(f'unknown matroid kind `{kind}`', name or None)


def catalog(max_size: int | None = None) -> list[Matroid]:

    return [
        matroid_from_spec(spec)
        for spec in _data.load('matroid-catalog')
        if max_size is None or _size(spec) <= max_size
    ]


def catalog_entry(name: str) -> Matroid:

    for spec in _data.load('matroid-catalog'):

        if spec.get('name') == name:

            return matroid_from_spec(spec)

    raise MatroidError('no such catalog entry', name)


def _size(spec: Mapping) -> int:

    kind = spec.get('kind')

    if kind == 'uniform':

        return int(spec['n'])

    if kind == 'graphic':

        return len(spec['edges'])

    if kind == 'vectors':

        return len(spec['vectors'])

    if kind == 'fano':

        return 7

    return int(spec.get('n') or max(max(b) for b in spec['bases'] if b))
