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
Perverse filtration, associated bigraded module and descent maps.
"""

__all__ = [
    'BigradedModule',
    'DescentCheck',
    'EllIndependence',
    'GrDescentReport',
    'Layer',
    'PerverseFiltration',
    'build_gr',
    'check_ell_independence',
    'check_filtration_invariants',
    'gr_descent_maps',
    'one_dim_layer',
    'perverse_filtration',
    'profile_filtration_dims',
]

from ._filtration import (
    EllIndependence,
    PerverseFiltration,
    perverse_filtration,
    check_ell_independence,
    profile_filtration_dims,
    check_filtration_invariants,
)
from ._gr import Layer, BigradedModule, build_gr, one_dim_layer
from ._functorial import DescentCheck, GrDescentReport, gr_descent_maps
