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
Run settings: packaged defaults, a YAML file or dict, keyword overrides
and environment variables, in increasing order of precedence.
"""

__all__ = ['Config']

import os
from contextlib import closing

import yaml

from lefmod import data as _data
from lefmod._session import _log
from lefmod._errors import ValidationError

ENV_PREFIX = 'LEFMOD_'
ENV_KEYS = ('seed', 'samples')
INT_KEYS = {
    'samples',
    'seed',
    'relative_samples',
    'split_attempts',
    'isomorphism_attempts',
}


class Config:

    def __init__(
            self,
            param: str | dict | None = None,
            **kwargs
        ):

        self._param = param or {}
        self._overrides = {k: v for k, v in kwargs.items() if v is not None}
        self._parse_param()


    def _parse_param(self) -> None:

        self._from_file()
        self._settings = dict(_data.load('settings') or {})
        self._settings.update(self._param)
        self._settings.update(self._overrides)
        self._from_env()
        self._check()


    def _from_file(self) -> None:

        if isinstance(self._param, str):

            if not os.path.exists(self._param):

                raise ValidationError(
                    'configuration file not found',
                    location = self._param,
                )

            path = self._param

            with closing(open(path, 'r')) as fp:

                self._param = yaml.load(fp, Loader = yaml.FullLoader) or {}

            _log(f'Configuration read from `{path}`.')


    def _from_env(self) -> None:

        for key in ENV_KEYS:

            value = os.environ.get(f'{ENV_PREFIX}{key.upper()}')

            if value is not None:

                _log(f'Setting `{key}` from environment: {value}.')
                self._settings[key] = value


    def _check(self) -> None:

        for key in INT_KEYS & set(self._settings):

            try:

                self._settings[key] = int(self._settings[key])

            except (TypeError, ValueError):

                raise ValidationError(
                    f'expected an integer, got {self._settings[key]!r}',
                    location = f'settings.{key}',
                )

        if self._settings.get('samples', 1) < 1:

            raise ValidationError('at least one sample required', 'samples')


    def __getitem__(self, key: str):

        return self._settings[key]


    def get(self, key: str, default = None):

        return self._settings.get(key, default)


    def __getattr__(self, key: str):

        if key.startswith('_'):

            raise AttributeError(key)

        try:

            return self._settings[key]

        except KeyError:

            raise AttributeError(key)


    def as_dict(self) -> dict:

        return dict(self._settings)
