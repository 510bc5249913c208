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
Relative Lefschetz theory on Gr and the splitting M ≅ Gr.
"""

__all__ = [
    'KernelModule',
    'PrimitiveDecomposition',
    'RelativeResult',
    'SignatureReport',
    'SplittingMap',
    'check_kernel_modules',
    'check_raising',
    'check_relative_hl',
    'check_relative_hr',
    'compute_R',
    'deligne_splitting',
    'kernel_modules',
    'primitive_decomposition',
    'signature_identity',
    'split_order',
]

from ._lefschetz import (
    KernelModule,
    RelativeResult,
    SignatureReport,
    PrimitiveDecomposition,
    check_raising,
    kernel_modules,
    check_relative_hl,
    check_relative_hr,
    signature_identity,
    check_kernel_modules,
    primitive_decomposition,
)
from ._splitting import SplittingMap, compute_R, split_order, deligne_splitting
