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
Exact linear algebra over ℚ.
"""

__all__ = [
    'Inertia',
    'JordanProfile',
    'Mat',
    'Rat',
    'Subspace',
    'X',
    'diagonalize',
    'factor_over_q',
    'image',
    'kernel',
    'min_poly',
    'nilpotent_profile',
    'nullspace',
    'poly_at',
    'poly_coefficients',
    'rank',
    'rat',
    'rat_str',
    'rref',
    'signature',
    'subspace_ops',
]

from ._matrix import Mat, Rat, rat, rref, rank, image, kernel, rat_str, nullspace
from ._subspace import Subspace, subspace_ops
from ._forms import Inertia, signature, diagonalize
from ._poly import X, min_poly, poly_at, factor_over_q, poly_coefficients
from ._jordan import JordanProfile, nilpotent_profile
