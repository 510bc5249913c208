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
Indecomposable summands, endomorphism algebras, invariant forms and
multiplicity spaces.
"""

__all__ = [
    'DecompositionReport',
    'DivisionType',
    'EndAlgebra',
    'GradedMap',
    'InducedForm',
    'IsoClass',
    'Summand',
    'classify_division',
    'compose',
    'decompose',
    'end_algebra',
    'hom_space',
    'hr_sign',
    'induced_form',
    'is_invertible_map',
    'is_isomorphic',
    'middle_socle_ok',
    'operator',
    'restricted_form',
    'split_module',
    'submodule',
]

from ._endo import (
    GradedMap,
    EndAlgebra,
    compose,
    operator,
    hom_space,
    submodule,
    end_algebra,
    is_invertible_map,
)
from ._division import DivisionType, classify_division
from ._forms import InducedForm, hr_sign, induced_form, middle_socle_ok
from ._split import (
    Summand,
    IsoClass,
    DecompositionReport,
    decompose,
    split_module,
    is_isomorphic,
    restricted_form,
)
