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
Command line interface: instances, commands and reports.
"""

__all__ = [
    'COMMANDS',
    'Instance',
    'Report',
    'build_instance',
    'canonical_json',
    'digest',
    'fixture_names',
    'load_instance',
    'main',
    'read_spec',
    'run',
]

from ._main import run, main
from ._report import Report, digest, canonical_json
from ._commands import COMMANDS
from ._instance import (
    Instance,
    read_spec,
    fixture_names,
    load_instance,
    build_instance,
)
