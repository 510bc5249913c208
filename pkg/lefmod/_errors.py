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
Exceptions raised by the package.

Failed checks are not exceptions: they are recorded in certificates
together with a witness. Exceptions signal invalid input or a broken
consequence of the Lefschetz property.
"""

__all__ = [
    'AlgebraValidationError',
    'DimensionMismatchError',
    'FormValidationError',
    'InconsistentSystemError',
    'InstanceError',
    'LefmodError',
    'MatroidError',
    'ModuleValidationError',
    'NotIndecomposableError',
    'NotLefschetzError',
    'PreconditionError',
    'ValidationError',
]


class LefmodError(Exception):
    """
    Base class of all errors raised by `lefmod`.
    """


class ValidationError(LefmodError):
    """
    Invalid user input.

    Args:
        message:
            Human readable description.
        location:
            Where the problem is: a path into the instance file, a basis
            triple, a degree.
    """

    def __init__(self, message: str, location: str | None = None):

        self.location = location
        prefix = f'[{location}] ' if location else ''
        super().__init__(f'{prefix}{message}')


class AlgebraValidationError(ValidationError):

    def __init__(
            self,
            message: str,
            triple: tuple[str, ...] | None = None,
            location: str | None = None,
        ):

        self.triple = triple
        location = location or (', '.join(triple) if triple else None)
        super().__init__(message, location = location)


class ModuleValidationError(ValidationError):
    pass


class FormValidationError(ValidationError):
    pass


class MatroidError(ValidationError):
    pass


class InstanceError(ValidationError):
    pass


class DimensionMismatchError(LefmodError, ValueError):
    pass


class InconsistentSystemError(LefmodError):
    pass


class PreconditionError(LefmodError):
    pass


class NotLefschetzError(LefmodError):
    """
    A consequence of the Lefschetz property fails on the given input.
    """

    def __init__(self, message: str, bidegree: tuple | None = None):

        self.bidegree = bidegree
        where = f' at {bidegree}' if bidegree is not None else ''
        super().__init__(f'{message}{where}: input likely not Lefschetz')


class NotIndecomposableError(LefmodError):
    """
    The endomorphism algebra of a supposedly indecomposable module has zero
    divisors modulo its radical.
    """
