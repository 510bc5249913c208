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
Run reports: canonical JSON and plain text.
"""

from __future__ import annotations

__all__ = ['Report', 'canonical_json', 'digest', 'plain']

import hashlib
import json
from fractions import Fraction
from dataclasses import field, dataclass

from lefmod.exactlin import Mat, rat_str


def plain(value):
    """
    JSON compatible copy: rationals as ``p/q`` strings, tuples as lists,
    keys as strings.
    """

    if isinstance(value, bool) or value is None:

        return value

    if isinstance(value, Fraction):

        return rat_str(value)

    if isinstance(value, Mat):

        return [[rat_str(x) for x in row] for row in value.to_rows()]

    if isinstance(value, dict):

        return {str(k): plain(v) for k, v in value.items()}

    if isinstance(value, (list, tuple)):

        return [plain(v) for v in value]

    return value


def canonical_json(value) -> str:

    return json.dumps(
        plain(value),
        sort_keys = True,
        indent = 2,
        ensure_ascii = False,
    ) + '\n'


def digest(value) -> str:

    return hashlib.sha256(canonical_json(value).encode('utf-8')).hexdigest()


@dataclass
class Report:

    command: str
    input_digest: str
    version: str
    seed: int
    results: dict = field(default_factory = dict)
    ok: bool = True
    lines: list[str] = field(default_factory = list)

    def to_dict(self) -> dict:

        return {
            'command': self.command,
            'input_digest': self.input_digest,
            'version': self.version,
            'seed': self.seed,
            'results': self.results,
            'ok': self.ok,
        }


    def to_json(self) -> str:

        return canonical_json(self.to_dict())


    def write(self, path: str) -> None:

        with open(path, 'w', encoding = 'utf-8') as fp:

            fp.write(self.to_json())


    def text(self) -> str:

        head = [
            f'lefmod {self.command}  version {self.version}  seed {self.seed}',
            f'input {self.input_digest[:16]}',
        ]
        tail = [f'result: {"PASS" if self.ok else "FAIL"}']

        return '\n'.join(head + self.lines + tail) + '\n'
