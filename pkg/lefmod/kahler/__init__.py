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
Verification of the Kähler package at sample points of a cone.
"""

__all__ = [
    'CAVEAT',
    'CheckResult',
    'KahlerCertificate',
    'check_hl',
    'check_hr',
    'check_kahler_package',
    'check_pd',
    'hr_form',
    'verify_witness',
]

from ._certificate import CAVEAT, CheckResult, KahlerCertificate
from ._package import (
    hr_form,
    check_hl,
    check_hr,
    check_pd,
    verify_witness,
    check_kahler_package,
)
