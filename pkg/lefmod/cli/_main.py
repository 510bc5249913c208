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
Command line entry point.
"""

from __future__ import annotations

__all__ = ['main', 'run', 'parse_args']

import sys
import argparse

from lefmod._config import Config
from lefmod._errors import (
    LefmodError,
    ValidationError,
    PreconditionError,
)
from lefmod._session import _log
from lefmod._metadata import __version__
from ._report import Report, digest
from ._commands import COMMANDS
from ._instance import load_instance, fixture_names

EXIT_PASS = 0
EXIT_FAIL = 1
EXIT_INVALID = 2


def parse_args(argv: list[str] | None = None) -> argparse.Namespace:

    parser = argparse.ArgumentParser(
        prog = 'lefmod',
        description = (
            'Exact checks of Lefschetz modules: Kähler package, '
            'decomposition, perverse filtration.'
        ),
    )
    parser.add_argument('--version', action = 'version', version = __version__)
    parser.add_argument('command', choices = sorted(COMMANDS))
    parser.add_argument(
        'source',
        help = (
            'instance file (JSON or YAML), matroid bases list, or one of: '
            f'{", ".join(fixture_names())}'
        ),
    )
    parser.add_argument(
        '--B',
        dest = 'subalgebra',
        default = None,
        help = 'comma separated degree-1 generators of the subalgebra',
    )
    parser.add_argument('--samples', type = int, default = None)
    parser.add_argument('--seed', type = int, default = None)
    parser.add_argument(
        '--config',
        default = None,
        help = 'YAML settings, in place of the sampling section of the instance',
    )
    parser.add_argument(
        '--json',
        dest = 'json_out',
        default = None,
        help = 'write the report as canonical JSON to this path',
    )

    return parser.parse_args(argv)


def _instance_settings(samples: dict) -> dict:

    keys = {'count': 'samples', 'style': 'sample_style', 'seed': 'seed'}

    return {
        keys.get(k, k): v
        for k, v in samples.items()
        if v is not None
    }


def run(args: argparse.Namespace) -> Report:
    """
    Load the instance, run one command and assemble its report.
    """

    instance = load_instance(args.source, subalgebra = args.subalgebra)
    config = Config(
        param = args.config or _instance_settings(instance.samples),
        samples = args.samples,
        seed = args.seed,
    )
    _log(
        f'Running `{args.command}` on `{instance.name}` '
        f'with seed {config.seed}, {config.samples} samples.'
    )
    results, ok, lines = COMMANDS[args.command](instance, config)

    return Report(
        command = args.command,
        input_digest = digest(instance.spec),
        version = __version__,
        seed = config.seed,
        results = results,
        ok = ok,
        lines = lines,
    )


def main(argv: list[str] | None = None) -> int:

    args = parse_args(argv)

    try:

        report = run(args)

    except (ValidationError, PreconditionError) as e:

        _log(f'Invalid input: {e}')
        sys.stderr.write(f'lefmod: invalid input: {e}\n')

        return EXIT_INVALID

    except LefmodError as e:

        _log(f'Check aborted: {e}')
        sys.stderr.write(f'lefmod: {e}\n')

        return EXIT_FAIL

    sys.stdout.write(report.text())

    if args.json_out:

        report.write(args.json_out)
        _log(f'Report written to `{args.json_out}`.')

    return EXIT_PASS if report.ok else EXIT_FAIL


if __name__ == '__main__':

    sys.exit(main())
