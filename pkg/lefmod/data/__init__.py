"""
Data files shipped with the package: settings, fixtures, matroid catalog.
"""

from pypath_common import data
import functools as ft

load = ft.partial(data.load, module = 'lefmod')
