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
Matroids, their flats and graded Möbius algebras.
"""

__all__ = [
    'FlatsLattice',
    'Matroid',
    'TopHeavyReport',
    'catalog',
    'catalog_entry',
    'fano',
    'flat_label',
    'flats',
    'from_vectors',
    'graphic',
    'make_matroid',
    'matroid_from_spec',
    'mobius_algebra',
    'parse_bases',
    'read_bases',
    'top_heavy',
    'uniform',
]

from ._flats import (
    FlatsLattice,
    TopHeavyReport,
    flats,
    top_heavy,
    flat_label,
    mobius_algebra,
)
from ._catalog import catalog, catalog_entry, matroid_from_spec
from ._matroid import (
    Matroid,
    fano,
    graphic,
    uniform,
    parse_bases,
    read_bases,
    from_vectors,
    make_matroid,
)
