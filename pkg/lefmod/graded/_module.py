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
Graded modules, invariant pairings and the constructions on them.
"""

from __future__ import annotations

__all__ = [
    'Descent',
    'GradedModule',
    'PairingForm',
    'descend',
    'make_form',
    'make_module',
    'nilpotent_module',
    'regular_module',
    'shift_sum',
]

import itertools
from typing import NamedTuple
from fractions import Fraction
from dataclasses import dataclass
from collections.abc import Mapping, Sequence

from lefmod._session import _log
from lefmod._errors import (
    FormValidationError,
    ModuleValidationError,
    AlgebraValidationError,
)
from lefmod.exactlin import Mat, Subspace, rat
from lefmod.graded._algebra import GradedAlgebra, truncated_polynomial_algebra


@dataclass(frozen = True, eq = False)
class GradedModule:
    """
    Finite dimensional graded module M^0 ⊕ … ⊕ M^d over a graded algebra.

    ``actions[b][i]`` is the matrix of the algebra basis element `b` (of
    degree s) from M^i to M^{i+s}. The zero module has no degrees and
    degree −1.
    """

    algebra: GradedAlgebra
    dims: tuple[int, ...]
    actions: tuple[tuple[Mat, ...], ...]
    name: str = ''

    @property
    def degree(self) -> int:

        return len(self.dims) - 1


    @property
    def total_dim(self) -> int:

        return sum(self.dims)


    def is_zero(self) -> bool:

        return self.total_dim == 0


    def dim(self, i: int) -> int:

        return self.dims[i] if 0 <= i <= self.degree else 0


    def basis_action(self, b: int, i: int) -> Mat:

        s = self.algebra.degrees[b]

        if 0 <= i <= self.degree and i + s <= self.degree:

            return self.actions[b][i]

        return Mat.zeros(self.dim(i + s), self.dim(i))


    def action(self, u: Mat, i: int, degree: int | None = None) -> Mat:
        """
        Matrix of a homogeneous algebra element from M^i to M^{i+s}.

        Args:
            u:
                Algebra element as a full coordinate vector.
            i:
                Source degree.
            degree:
                Degree s of `u`; required only if `u` is zero.
        """

        s = self.algebra.homogeneous_degree(u)

        if s is None:

            if degree is None:

                raise AlgebraValidationError(
                    'degree of the zero element must be given',
                )

            s = degree

        elif degree is not None and degree != s:

            raise AlgebraValidationError(
                f'element of degree {s} used as degree {degree}',
            )

        result = Mat.zeros(self.dim(i + s), self.dim(i))

        for b in self.algebra.basis_range(s):

            c = u.entries[b]

            if c:

                result = result + self.basis_action(b, i).scale(c)

        return result


    def power(self, u: Mat, p: int, i: int, degree: int | None = None) -> Mat:
        """
        Matrix of u^p from M^i, as the p-fold composite of the action of u.
        """

        s = self.algebra.homogeneous_degree(u)
        s = degree if s is None else s
        result = Mat.identity(self.dim(i))

        for step in range(p):

            result = self.action(u, i + step * s, degree = s) @ result

        return result


    def validate(self) -> None:
        """
        Check shapes, the unit action and the homomorphism property.

        Raises:
            ModuleValidationError: Naming the basis pair and degree.
        """

        algebra = self.algebra

        if len(self.actions) != algebra.dim:

            raise ModuleValidationError(
                f'{len(self.actions)} action lists for an algebra of '
                f'dimension {algebra.dim}',
            )

        for b, per_degree in enumerate(self.actions):

            s = algebra.degrees[b]

            if len(per_degree) != len(self.dims):

                raise ModuleValidationError(
                    f'action of `{algebra.labels[b]}` given in '
                    f'{len(per_degree)} degrees, expected {len(self.dims)}',
                    location = algebra.labels[b],
                )

            for i, m in enumerate(per_degree):

                expected = (self.dim(i + s), self.dim(i))

                if m.shape != expected:

                    raise ModuleValidationError(
                        f'action of `{algebra.labels[b]}` on M^{i} has shape '
                        f'{m.shape}, expected {expected}',
                        location = f'{algebra.labels[b]}@{i}',
                    )

        for i in range(len(self.dims)):

            if self.basis_action(0, i) != Mat.identity(self.dim(i)):

                raise ModuleValidationError(
                    f'the unit does not act as identity on M^{i}',
                    location = f'{algebra.labels[0]}@{i}',
                )

        for a, b in itertools.combinations_with_replacement(
            range(1, algebra.dim), 2,
        ):

            sa, sb = algebra.degrees[a], algebra.degrees[b]
            product = algebra.from_sparse(algebra.product(a, b))

            for i in range(len(self.dims)):

                if i + sa + sb > self.degree:

                    break

                left = self.basis_action(a, i + sb) @ self.basis_action(b, i)
                right = self.basis_action(b, i + sa) @ self.basis_action(a, i)
                target = self.action(product, i, degree = sa + sb)

                if left != target or right != target:

                    raise ModuleValidationError(
                        f'actions of `{algebra.labels[a]}` and '
                        f'`{algebra.labels[b]}` do not compose to their '
                        f'product on M^{i}',
                        location = (
                            f'{algebra.labels[a]},{algebra.labels[b]}@{i}'
                        ),
                    )


@dataclass(frozen = True, eq = False)
class PairingForm:
    """
    Symmetric bilinear form pairing M^i with M^{d−i}.

    ``blocks[i]`` has shape dim M^i × dim M^{d−i}.
    """

    module: GradedModule
    blocks: tuple[Mat, ...]

    def block(self, i: int) -> Mat:

        d = self.module.degree

        if 0 <= i <= d:

            return self.blocks[i]

        return Mat.zeros(self.module.dim(i), self.module.dim(d - i))


    def pair(self, x: Mat, y: Mat, i: int) -> Fraction:

        return (x.T @ self.block(i) @ y).entries[0]


    def scaled(self, factor) -> PairingForm:

        return PairingForm(
            self.module,
            tuple(b.scale(factor) for b in self.blocks),
        )


    def negated(self) -> PairingForm:

        return self.scaled(-1)


    def validate(self) -> None:
        """
        Check shapes, symmetry and invariance under the algebra action.

        Raises:
            FormValidationError: Naming the degree or basis element.
        """

        module = self.module
        d = module.degree

        if len(self.blocks) != len(module.dims):

            raise FormValidationError(
                f'{len(self.blocks)} blocks for a module of degree {d}',
            )

        for i, blk in enumerate(self.blocks):

            if blk.shape != (module.dim(i), module.dim(d - i)):

                raise FormValidationError(
                    f'block {i} has shape {blk.shape}, expected '
                    f'{(module.dim(i), module.dim(d - i))}',
                    location = f'blocks[{i}]',
                )

        for i in range(d + 1):

            if self.block(i) != self.block(d - i).T:

                raise FormValidationError(
                    f'form is not symmetric between degrees {i} and {d - i}',
                    location = f'blocks[{i}]',
                )

        for b in range(1, module.algebra.dim):

            s = module.algebra.degrees[b]

            for i in range(d - s + 1):

                # Q(b·x, y) = Q(x, b·y) for x ∈ M^i, y ∈ M^{d−i−s}
                left = module.basis_action(b, i).T @ self.block(i + s)
                right = self.block(i) @ module.basis_action(b, d - i - s)

                if left != right:

                    raise FormValidationError(
                        'form is not invariant under '
                        f'`{module.algebra.labels[b]}` on M^{i}',
                        location = f'{module.algebra.labels[b]}@{i}',
                    )


def _as_mat(value, shape: tuple[int, int]) -> Mat:

    if isinstance(value, Mat):

        return value

    if not value:

        return Mat.zeros(*shape)

    return Mat.from_rows(value, cols = shape[1])


def make_module(
        algebra: GradedAlgebra,
        dims: Sequence[int],
        actions: Mapping[str, Sequence],
        name: str = '',
    ) -> GradedModule:
    """
    Validated module from per-degree action matrices of some basis elements.

    Args:
        algebra:
            The acting algebra.
        dims:
            Dimensions of M^0, …, M^d.
        actions:
            For algebra basis labels, a list with one matrix (rows of
            rationals) per source degree. The unit acts as identity;
            unlisted basis elements act as zero.
    """

    dims = tuple(int(x) for x in dims)
    unit = algebra.labels[0]
    out = []

    def dim(i):

        return dims[i] if 0 <= i < len(dims) else 0


    for b, label in enumerate(algebra.labels):

        s = algebra.degrees[b]
        given = actions.get(label)

        if given is None:

            out.append(tuple(
                Mat.identity(dims[i]) if b == 0 else
                Mat.zeros(dim(i + s), dims[i])
                for i in range(len(dims))
            ))
            continue

        if len(given) != len(dims):

            raise ModuleValidationError(
                f'action of `{label}` given in {len(given)} degrees, '
                f'expected {len(dims)}',
                location = label,
            )

        try:

            out.append(tuple(
                _as_mat(m, (dim(i + s), dims[i]))
                for i, m in enumerate(given)
            ))

        except ValueError as e:

            raise ModuleValidationError(str(e), location = label)

    if unit in actions:

        _log(f'Explicit action of the unit `{unit}` given; validating it.')

    module = GradedModule(algebra, dims, tuple(out), name = name)
    module.validate()
    _log(f'Module `{name or "unnamed"}` validated: dims {dims}.')

    return module


def make_form(module: GradedModule, blocks: Sequence) -> PairingForm:

    d = module.degree
    form = PairingForm(
        module,
        tuple(
            _as_mat(blk, (module.dim(i), module.dim(d - i)))
            for i, blk in enumerate(blocks)
        ),
    )
    form.validate()

    return form


def regular_module(
        algebra: GradedAlgebra,
        deg_map: Mapping[str, object] | Sequence | Mat,
    ) -> tuple[GradedModule, PairingForm]:
    """
    The algebra as a module over itself with Q(x, y) = deg(xy).

    Args:
        algebra:
            The algebra A.
        deg_map:
            Linear functional on the top degree: values on the basis of
            A^top, by label or as a list.
    """

    top = algebra.top_degree
    top_range = algebra.basis_range(top)

    if isinstance(deg_map, Mapping):

        values = [rat(deg_map.get(algebra.labels[t], 0)) for t in top_range]

    else:

        values = list(deg_map.entries if isinstance(deg_map, Mat) else deg_map)
        values = [rat(v) for v in values]

    if len(values) != len(top_range):

        raise FormValidationError(
            f'degree map of length {len(values)}, expected {len(top_range)}',
        )

    functional = dict(zip(top_range, values))
    actions = []

    for b in range(algebra.dim):

        s = algebra.degrees[b]
        actions.append(tuple(
            algebra.multiplication_matrix(algebra.basis_element(b), i, s)
            for i in range(top + 1)
        ))

    module = GradedModule(
        algebra,
        algebra.dims,
        tuple(actions),
        name = algebra.name,
    )

    blocks = []

    for i in range(top + 1):

        rows = []

        for p in algebra.basis_range(i):

            rows.append([
                sum(
                    (
                        c * functional[t]
                        for t, c in algebra.product(p, q).items()
                        if t in functional
                    ),
                    Fraction(0),
                )
                for q in algebra.basis_range(top - i)
            ])

        blocks.append(Mat.from_rows(rows, cols = algebra.degree_dim(top - i)))

    return module, PairingForm(module, tuple(blocks))


class Descent(NamedTuple):
    """
    The module M_a = M / ann_M(a), its form Q_a and the quotient maps.
    """

    module: GradedModule
    form: PairingForm
    quotient: tuple[Mat, ...]


def _zero_module(algebra: GradedAlgebra, name: str = '') -> GradedModule:

    return GradedModule(
        algebra,
        (),
        tuple(() for _ in range(algebra.dim)),
        name = name,
    )


def descend(
        module: GradedModule,
        form: PairingForm,
        a: Mat,
        degree: int | None = None,
    ) -> Descent:
    """
    Quotient by the annihilator of a homogeneous element, of degree d − k.

    The quotient M^i / ann(a) is represented on the canonical complement of
    the kernel of the action of `a` on M^i; the form is
    Q_a(φx, φy) = Q(x, a·y).
    """

    algebra = module.algebra
    k = algebra.homogeneous_degree(a)
    k = degree if k is None else k

    if k is None:

        raise AlgebraValidationError('degree of the zero element must be given')

    d = module.degree
    e = d - k
    lifts, quotient = [], []

    for i in range(d + 1):

        n = module.dim(i)
        ann = module.action(a, i, degree = k).kernel()
        complement = ann.complete_to(Subspace.full(n))
        change = Mat.hstack([ann.basis, complement], rows = n)
        inverse = change.inverse() if n else change
        rows = list(range(ann.dim, n))
        lifts.append(complement)
        quotient.append(inverse.select_rows(rows))

    dims = tuple(lifts[i].cols for i in range(e + 1)) if e >= 0 else ()

    if not any(dims):

        _log(f'Descent by `{algebra.format(a)}` gives the zero module.')

        zero = _zero_module(algebra)

        return Descent(zero, PairingForm(zero, ()), tuple(quotient))

    actions = []

    for b in range(algebra.dim):

        s = algebra.degrees[b]
        actions.append(tuple(
            quotient[i + s] @ module.basis_action(b, i) @ lifts[i]
            if i + s <= e else Mat.zeros(0, dims[i])
            for i in range(e + 1)
        ))

    descended = GradedModule(
        algebra,
        dims,
        tuple(actions),
        name = f'{module.name}/ann({algebra.format(a)})',
    )
    blocks = tuple(
        lifts[i].T @ form.block(i) @ module.action(a, e - i, degree = k)
        @ lifts[e - i]
        for i in range(e + 1)
    )

    return Descent(descended, PairingForm(descended, blocks), tuple(quotient))


def shift_sum(
        modules: Sequence[GradedModule],
        shifts: Sequence[int] | None = None,
        forms: Sequence[PairingForm] | None = None,
    ) -> GradedModule | tuple[GradedModule, PairingForm]:
    """
    Direct sum of shifted modules N[−k], optionally with forms.

    ``N[−k]`` places N^i in degree i + k and has degree deg N + 2k; with
    forms, all shifted degrees must agree and the form of N[−k] is
    (−1)^k Q_N.

    Returns:
        The module, or the module and its form if `forms` is given.
    """

    modules = list(modules)
    shifts = list(shifts) if shifts is not None else [0] * len(modules)

    if not modules:

        raise ModuleValidationError('empty direct sum')

    if len(shifts) != len(modules):

        raise ModuleValidationError(
            f'{len(shifts)} shifts for {len(modules)} modules',
        )

    algebra = modules[0].algebra

    if any(m.algebra is not algebra for m in modules):

        raise ModuleValidationError('modules over different algebras')

    occupied = -1

    for m, k in zip(modules, shifts):

        for i, n in enumerate(m.dims):

            if n and i + k < 0:

                raise ModuleValidationError(
                    f'shift by {k} moves M^{i} to negative degree',
                    location = m.name or None,
                )

            if n:

                occupied = max(occupied, i + k)

    nominal = {m.degree + 2 * k for m, k in zip(modules, shifts) if m.dims}

    if forms is not None and len(nominal) > 1:

        raise FormValidationError(
            f'shifted summands have different degrees {sorted(nominal)}',
        )

    top = max(nominal | {occupied})

    def dim(i: int) -> int:

        return sum(m.dim(i - k) for m, k in zip(modules, shifts))


    dims = tuple(dim(i) for i in range(top + 1))
    actions = []

    for b in range(algebra.dim):

        s = algebra.degrees[b]
        actions.append(tuple(
            Mat.block_diag([
                m.basis_action(b, i - k) for m, k in zip(modules, shifts)
            ])
            for i in range(top + 1)
        ))

    total = GradedModule(
        algebra,
        dims,
        tuple(actions),
        name = ' ⊕ '.join(
            f'{m.name or "N"}[{-k}]' if k else (m.name or 'N')
            for m, k in zip(modules, shifts)
        ),
    )

    if forms is None:

        return total

    blocks = tuple(
        Mat.block_diag([
            f.block(i - k).scale((-1) ** k)
            for f, k in zip(forms, shifts)
        ])
        for i in range(top + 1)
    )

    return total, PairingForm(total, blocks)


def nilpotent_module(
        maps: Sequence[Mat],
        dims: Sequence[int] | None = None,
    ) -> GradedModule:
    """
    Graded ℚ[ℓ]/(ℓ^{d+1})-module with ℓ acting by the given degree-1 maps.
    """

    maps = list(maps)
    dims = list(dims) if dims is not None else (
        [m.cols for m in maps] + [maps[-1].rows]
    )
    d = len(dims) - 1
    algebra = truncated_polynomial_algebra(max(d, 0))
    actions = []

    for p in range(algebra.dim):

        per_degree = []

        for i in range(d + 1):

            m = Mat.identity(dims[i])

            for step in range(p):

                if i + step >= d:

                    m = Mat.zeros(0, dims[i])
                    break

                m = maps[i + step] @ m

            per_degree.append(m if i + p <= d else Mat.zeros(0, dims[i]))

        actions.append(tuple(per_degree))

    module = GradedModule(algebra, tuple(dims), tuple(actions))
    module.validate()

    return module
