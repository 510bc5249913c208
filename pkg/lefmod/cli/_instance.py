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
Instance files and named fixtures: parsing into validated objects.

An instance is a JSON (or YAML) document with the fields ``field``,
``algebra``, ``module``, ``form``, ``cone``, ``subalgebra`` and
``samples``. A plain text file is read as a list of matroid bases.
"""

from __future__ import annotations

__all__ = [
    'Instance',
    'build_instance',
    'fixture_names',
    'load_instance',
    'read_spec',
]

import os
import copy
import json
from dataclasses import dataclass
from collections.abc import Mapping, Sequence

import yaml

from lefmod import data as _data
from lefmod._session import _log
from lefmod._errors import InstanceError, ValidationError
from lefmod.exactlin import Mat, Subspace, rat
from lefmod.graded import (
    Cone,
    Subalgebra,
    GradedModule,
    PairingForm,
    GradedAlgebra,
    make_form,
    make_module,
    make_algebra,
    regular_module,
    subalgebra_generated,
    truncated_polynomial_algebra,
)
from lefmod.matroid import (
    Matroid,
    FlatsLattice,
    flats,
    parse_bases,
    mobius_algebra,
    matroid_from_spec,
)
from lefmod.apolar import CogeneratedAlgebra, cogenerate


@dataclass(eq = False)
class Instance:

    name: str
    spec: dict
    algebra: GradedAlgebra
    module: GradedModule
    form: PairingForm
    cone: Cone
    subalgebra: Subalgebra | None = None
    lattice: FlatsLattice | None = None
    cogenerated: CogeneratedAlgebra | None = None

    @property
    def matroid(self) -> Matroid | None:

        return self.lattice.matroid if self.lattice else None


    @property
    def samples(self) -> dict:

        return dict(self.spec.get('samples') or {})


    def acting_subalgebra(self) -> Subalgebra:
        """
        The given subalgebra, or A itself with the cone of A.
        """

        if self.subalgebra is not None:

            return self.subalgebra

        algebra = self.algebra

        return Subalgebra.from_components(
            algebra,
            [Subspace.full(n) for n in algebra.dims],
            self.cone.generators,
        )


def fixture_names() -> list[str]:

    return sorted(_data.load('fixtures'))


def read_spec(source: str) -> tuple[str, dict]:
    """
    The raw instance document of a fixture name or a file.

    Raises:
        InstanceError: If the source is neither, or cannot be parsed.
    """

    fixtures = _data.load('fixtures')

    if source in fixtures:

        _log(f'Instance: fixture `{source}`.')

        return source, copy.deepcopy(fixtures[source])

    if not os.path.exists(source):

        raise InstanceError(
            f'no fixture or file named `{source}`; fixtures: '
            f'{", ".join(sorted(fixtures))}',
            location = source,
        )

    name = os.path.basename(source)

    with open(source, 'r', encoding = 'utf-8') as fp:

        text = fp.read()

    _log(f'Instance: reading `{source}`.')

    if source.endswith('.json'):

        try:

            spec = json.loads(text)

        except json.JSONDecodeError as e:

            raise InstanceError(
                f'invalid JSON: {e.msg}',
                location = f'{name}:{e.lineno}:{e.colno}',
            )

    elif source.endswith(('.yaml', '.yml')):

        try:

            spec = yaml.safe_load(text)

        except yaml.YAMLError as e:

            raise InstanceError(f'invalid YAML: {e}', location = name)

    else:

        matroid = parse_bases(text, name = name)
        spec = {
            'field': 'Q',
            'algebra': {
                'matroid': {
                    'kind': 'bases',
                    'n': matroid.n,
                    'bases': [sorted(b) for b in sorted(matroid.bases, key = sorted)],
                    'name': name,
                },
            },
        }

    if not isinstance(spec, Mapping):

        raise InstanceError('an instance must be a mapping', location = name)

    return name, dict(spec)


def _matrix(value, shape: tuple[int, int], location: str) -> Mat:

    try:

        if isinstance(value, Mapping):

            entries = {}

            for r, c, v in value['entries']:

                if not (0 <= r < shape[0] and 0 <= c < shape[1]):

                    raise InstanceError(
                        f'entry ({r}, {c}) outside a {shape} matrix',
                        location = location,
                    )

                entries[int(r), int(c)] = rat(v)

            return Mat.from_entries(*shape, entries)

        if not value:

            return Mat.zeros(*shape)

        m = Mat.from_rows(value, cols = shape[1])

    except (KeyError, TypeError, ValueError) as e:

        raise InstanceError(f'invalid matrix: {e}', location = location)

    if m.shape != shape:

        raise InstanceError(
            f'matrix of shape {m.shape}, expected {shape}',
            location = location,
        )

    return m


def _module(algebra: GradedAlgebra, spec: Mapping, name: str) -> GradedModule:

    try:

        dims = [int(x) for x in spec['dims']]
        actions = spec.get('actions') or {}

    except (KeyError, TypeError, ValueError) as e:

        raise InstanceError(f'invalid module: {e}', location = 'module')

    def dim(i):

        return dims[i] if 0 <= i < len(dims) else 0


    converted = {}

    for label, per_degree in actions.items():

        s = algebra.degrees[algebra.index(label)]

        if len(per_degree) != len(dims):

            raise InstanceError(
                f'{len(per_degree)} matrices for {len(dims)} degrees',
                location = f'module.actions.{label}',
            )

        converted[label] = [
            _matrix(m, (dim(i + s), dims[i]), f'module.actions.{label}[{i}]')
            for i, m in enumerate(per_degree)
        ]

    return make_module(algebra, dims, converted, name = name)


def _form(module: GradedModule, spec: Mapping) -> PairingForm:

    blocks = spec.get('blocks') if isinstance(spec, Mapping) else None
    d = module.degree

    if not isinstance(blocks, Sequence) or len(blocks) != d + 1:

        raise InstanceError(
            f'expected {d + 1} form blocks',
            location = 'form.blocks',
        )

    return make_form(
        module,
        [
            _matrix(b, (module.dim(i), module.dim(d - i)), f'form.blocks[{i}]')
            for i, b in enumerate(blocks)
        ],
    )


def build_instance(name: str, spec: Mapping) -> Instance:
    """
    Validated objects from an instance document.

    Raises:
        InstanceError: For missing or malformed fields.
        ValidationError: If the objects fail validation.
    """

    spec = dict(spec)

    if str(spec.get('field', 'Q')) != 'Q':

        raise InstanceError('only the field Q is supported', location = 'field')

    if not isinstance(spec.get('algebra'), Mapping):

        raise InstanceError('missing algebra', location = 'algebra')

    algebra_spec = spec['algebra']
    lattice = cogenerated = None
    deg = spec.get('deg')

    if 'matroid' in algebra_spec:

        lattice = flats(matroid_from_spec(algebra_spec['matroid']))
        algebra, deg = mobius_algebra(lattice)
        default_cone = list(algebra.labels[1:1 + algebra.degree_dim(1)])

    elif 'cogenerated' in algebra_spec:

        params = algebra_spec['cogenerated']
        cogenerated = cogenerate(
            params['f'],
            n = params.get('n'),
            d = params.get('d'),
            name = name,
        )
        algebra, deg = cogenerated.algebra, cogenerated.deg_map
        default_cone = list(cogenerated.positive_cone().generators)

    elif 'truncated' in algebra_spec:

        algebra = truncated_polynomial_algebra(int(algebra_spec['truncated']))
        deg = deg if deg is not None else [1]
        default_cone = [algebra.labels[1]] if algebra.top_degree else []

    else:

        try:

            algebra = make_algebra(algebra_spec, name = name)

        except KeyError as e:

            raise InstanceError(f'missing field {e}', location = 'algebra')

        default_cone = []

    module_spec = spec.get('module', 'regular')
    form_spec = spec.get('form', 'deg')

    if module_spec == 'regular':

        if deg is None:

            raise InstanceError(
                'a regular module needs the degree map `deg`',
                location = 'deg',
            )

        module, regular_form = regular_module(algebra, deg)

    elif isinstance(module_spec, Mapping):

        module = _module(algebra, module_spec, name)
        regular_form = None

    else:

        raise InstanceError('expected `regular` or a mapping', location = 'module')

    if form_spec == 'deg':

        if regular_form is None:

            raise InstanceError(
                'the form `deg` needs the regular module',
                location = 'form',
            )

        form = regular_form

    else:

        form = _form(module, form_spec)

    form.validate()
    cone_specs = spec.get('cone') or default_cone

    if not cone_specs:

        raise InstanceError('no cone generators', location = 'cone')

    cone = Cone.from_specs(algebra, cone_specs)
    subalgebra = None
    sub_spec = spec.get('subalgebra')

    if sub_spec:

        gens = sub_spec.get('gens1') or []
        subalgebra = subalgebra_generated(
            algebra,
            gens,
            sub_spec.get('cone') or gens,
        )

    _log(
        f'Instance `{name}`: algebra dims {algebra.dims}, module dims '
        f'{module.dims}, {len(cone.generators)} cone generator(s).'
    )

    return Instance(
        name,
        spec,
        algebra,
        module,
        form,
        cone,
        subalgebra,
        lattice,
        cogenerated,
    )


def load_instance(source: str, subalgebra: str | None = None) -> Instance:
    """
    Read, apply a ``--B`` override and build.

    Args:
        subalgebra:
            Comma separated degree-1 generators of B, also used as the
            generators of its cone.
    """

    name, spec = read_spec(source)

    if subalgebra:

        gens = [g.strip() for g in subalgebra.split(',') if g.strip()]
        spec['subalgebra'] = {'gens1': gens, 'cone': gens}

    try:

        return build_instance(name, spec)

    except ValidationError:

        raise

    except (KeyError, TypeError, ValueError) as e:

        raise InstanceError(f'malformed instance: {e!r}', location = name)
