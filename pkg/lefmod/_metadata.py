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
Version and authors, as written into every report.
"""

__all__ = ['get_metadata', 'metadata']

import pathlib
import importlib.metadata

import toml

PACKAGE = 'lefmod'
FALLBACK_VERSION = '0.1.0'


def _from_pyproject(path: pathlib.Path) -> dict:

    if not path.is_file():

        return {}

    poetry = toml.load(path).get('tool', {}).get('poetry', {})

    if poetry.get('name') != PACKAGE:

        return {}

    return {
        'name': poetry['name'],
        'version': poetry.get('version'),
        'author': poetry.get('authors'),
        'license': poetry.get('license'),
    }


def _from_installed() -> dict:

    try:

        meta = importlib.metadata.metadata(PACKAGE)

    except importlib.metadata.PackageNotFoundError:

        return {}

    return {
        'name': meta['Name'],
        'version': meta['Version'],
        'author': meta.get_all('Author') or meta.get_all('Author-email'),
        'license': meta['License'],
    }


def get_metadata() -> dict:
    """
    From the `pyproject.toml` of a source checkout, else from the installed
    distribution.
    """

    root = pathlib.Path(__file__).parent.parent
    meta = _from_pyproject(root / 'pyproject.toml') or _from_installed()
    meta['version'] = meta.get('version') or FALLBACK_VERSION

    return meta


metadata = get_metadata()
__version__ = metadata['version']
__author__ = metadata.get('author')
__license__ = metadata.get('license')
