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
Exact decomposition theory of Lefschetz modules
"""

__all__ = [
    '__version__',
    '__author__',
    'Config',
    'LefmodError',
    'check_kahler_package',
    'decompose',
    'perverse_filtration',
    'build_gr',
    'deligne_splitting',
]

from ._session import log, _log, session
from ._metadata import __author__, __version__
from ._config import Config
from ._errors import LefmodError
from .kahler import check_kahler_package
from .decomp import decompose
from .perverse import build_gr, perverse_filtration
from .relative import deligne_splitting
