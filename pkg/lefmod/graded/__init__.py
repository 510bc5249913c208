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
Graded algebras, modules, invariant pairings, cones and subalgebras.
"""

__all__ = [
    'Cone',
    'Descent',
    'GradedAlgebra',
    'GradedModule',
    'PairingForm',
    'SAMPLE_STYLES',
    'Subalgebra',
    'descend',
    'make_algebra',
    'make_form',
    'make_module',
    'nilpotent_module',
    'regular_module',
    'sample_points',
    'shift_sum',
    'subalgebra_generated',
    'truncated_polynomial_algebra',
]

from ._algebra import GradedAlgebra, make_algebra, truncated_polynomial_algebra
from ._module import (
    Descent,
    GradedModule,
    PairingForm,
    descend,
    make_form,
    shift_sum,
    make_module,
    regular_module,
    nilpotent_module,
)
from ._cone import Cone, SAMPLE_STYLES, sample_points
from ._subalgebra import Subalgebra, subalgebra_generated
