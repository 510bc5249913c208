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
Algebras cogenerated by a form (Macaulay inverse systems).
"""

__all__ = [
    'CogeneratedAlgebra',
    'catalecticant',
    'cogenerate',
    'lorentz_check',
    'monomials',
    'parse_form',
]

from ._cogenerate import (
    CogeneratedAlgebra,
    monomials,
    cogenerate,
    parse_form,
    catalecticant,
    lorentz_check,
)
