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
Graded subalgebras generated in degree one.
"""

from __future__ import annotations

__all__ = [
    'Subalgebra',
    'subalgebra_generated',
]

from functools import cached_property
from dataclasses import dataclass
from collections.abc import Sequence

from lefmod._session import _log
from lefmod._errors import ValidationError
from lefmod.exactlin import Mat, Subspace
from lefmod.graded._cone import Cone
from lefmod.graded._module import GradedModule
from lefmod.graded._algebra import GradedAlgebra


@dataclass(frozen = True, eq = False)
class Subalgebra:
    """
    A graded subalgebra B ⊆ A with a cone 𝒦_B in B¹.

    ``components[k]`` is B^k as a subspace of A^k (in the coordinates of
    A^k). Cone generators are full coordinate vectors of A.
    """

    parent: GradedAlgebra
    gens1: tuple[Mat, ...]
    components: tuple[Subspace, ...]
    cone_gens: tuple[Mat, ...] = ()

    @classmethod
    def from_components(
            cls,
            parent: GradedAlgebra,
            components: Sequence[Subspace],
            cone_gens: Sequence[Mat] = (),
        ) -> Subalgebra:

        components = tuple(components)
        gens1 = tuple(
            parent.embed(1, v) for v in components[1].vectors()
        ) if len(components) > 1 else ()

        return cls(parent, gens1, components, tuple(cone_gens))


    def dim(self, k: int) -> int:

        return self.components[k].dim if 0 <= k < len(self.components) else 0


    @property
    def dims(self) -> tuple[int, ...]:

        return tuple(c.dim for c in self.components)


    def basis_vectors(self, k: int) -> list[Mat]:
        """
        Basis of B^k as full coordinate vectors of A.
        """

        if not 0 <= k < len(self.components):

            return []

        return [self.parent.embed(k, v) for v in self.components[k].vectors()]


    @cached_property
    def embedding(self) -> tuple[Mat, ...]:
        """
        Images in A of the basis of `algebra`, in its order.
        """

        return tuple(
            v
            for k in range(len(self.components))
            for v in self.basis_vectors(k)
        )


    @cached_property
    def algebra(self) -> GradedAlgebra:
        """
        B as a graded algebra in its own basis.
        """

        parent = self.parent
        labels = []

        for k, comp in enumerate(self.components):

            for idx, v in enumerate(comp.vectors()):

                support = [i for i, c in enumerate(v.entries) if c]

                if k == 0 and idx == 0:

                    labels.append('1')

                elif len(support) == 1 and v.entries[support[0]] == 1:

                    labels.append(
                        parent.labels[parent.basis_range(k)[support[0]]],
                    )

                else:

                    labels.append(f'b{k}.{idx}')

        offsets = []
        start = 0

        for comp in self.components:

            offsets.append(start)
            start += comp.dim

        degrees = [k for k, comp in enumerate(self.components) for _ in range(comp.dim)]
        products = {}
        embedding = self.embedding

        for i, u in enumerate(embedding):

            for j in range(i, len(embedding)):

                k = degrees[i] + degrees[j]

                if k >= len(self.components):

                    continue

                prod = parent.multiply(u, embedding[j])

                if prod.is_zero():

                    continue

                coords = self.components[k].coordinates(parent.component(prod, k))
                vec = {
                    offsets[k] + p: c
                    for p, c in enumerate(coords.entries)
                    if c
                }
                products[i, j] = vec
                products[j, i] = vec

        return GradedAlgebra(
            self.dims,
            tuple(labels),
            products,
            name = f'subalgebra of {parent.name or "A"}',
        )


    def to_parent(self, u: Mat) -> Mat:

        result = self.parent.zero()

        for c, v in zip(u.entries, self.embedding):

            if c:

                result = result + v.scale(c)

        return result


    def from_parent(self, u: Mat) -> Mat:
        """
        Coordinates in the basis of `algebra` of an element of A lying in B.
        """

        values = []

        for k, comp in enumerate(self.components):

            values.extend(comp.coordinates(self.parent.component(u, k)).entries)

        for k in range(len(self.components), self.parent.top_degree + 1):

            if not self.parent.component(u, k).is_zero():

                raise ValidationError(f'element has a component in degree {k} outside B')

        return Mat.vector(values)


    def contains(self, u: Mat) -> bool:

        return all(
            comp.contains(self.parent.component(u, k))
            for k, comp in enumerate(self.components)
        ) and all(
            self.parent.component(u, k).is_zero()
            for k in range(len(self.components), self.parent.top_degree + 1)
        )


    def cone(self) -> Cone:
        """
        𝒦_B in the coordinates of `algebra`.
        """

        return Cone(
            self.algebra,
            tuple(self.from_parent(g) for g in self.cone_gens),
        )


    def parent_cone(self) -> Cone:

        return Cone(self.parent, self.cone_gens)


    def restrict(self, module: GradedModule) -> GradedModule:
        """
        An A-module viewed as a B-module.
        """

        if module.algebra is not self.parent:

            raise ValidationError('module is not over the parent algebra')

        algebra = self.algebra
        actions = tuple(
            tuple(
                module.action(v, i, degree = algebra.degrees[b])
                for i in range(len(module.dims))
            )
            for b, v in enumerate(self.embedding)
        )

        return GradedModule(algebra, module.dims, actions, name = module.name)


def subalgebra_generated(
        parent: GradedAlgebra,
        gens1: Sequence,
        cone_gens: Sequence,
    ) -> Subalgebra:
    """
    The subalgebra generated by degree-1 elements, with a cone.

    Args:
        parent:
            The algebra A.
        gens1:
            Degree-1 generators (anything `GradedAlgebra.element` accepts).
        cone_gens:
            Generators of 𝒦_B; they must lie in the span of `gens1`.
            Membership in the closure of 𝒦_A is assumed, not checked.

    Raises:
        ValidationError: If a generator is not in A¹, or 𝒦_B has no or
            misplaced generators.
    """

    gens = tuple(parent.element(g) for g in gens1)
    cone = tuple(parent.element(g) for g in cone_gens)

    for i, g in enumerate(gens):

        if parent.homogeneous_degree(g) not in (1, None):

            raise ValidationError(
                'subalgebra generator not in A¹',
                location = f'B.generators[{i}]',
            )

    if not cone:

        raise ValidationError('the cone of B has no generators', 'B.cone')

    one = Subspace.span(
        [parent.component(g, 1) for g in gens],
        ambient_dim = parent.degree_dim(1),
    )
    components = [Subspace.span([[1] + [0] * (parent.dims[0] - 1)])]

    if one.dim:

        components.append(one)

    while len(components) > 1 and len(components) <= parent.top_degree:

        k = len(components)
        products = [
            parent.component(
                parent.multiply(parent.embed(k - 1, u), parent.embed(1, v)),
                k,
            )
            for u in components[k - 1].vectors()
            for v in one.vectors()
        ]
        nxt = Subspace.span(products, ambient_dim = parent.degree_dim(k))

        if nxt.is_zero():

            break

        components.append(nxt)

    for i, g in enumerate(cone):

        if parent.homogeneous_degree(g) != 1 or \
                not one.contains(parent.component(g, 1)):

            raise ValidationError(
                'cone generator of B not in B¹',
                location = f'B.cone[{i}]',
            )

    _log(f'Subalgebra generated: dims {tuple(c.dim for c in components)}.')

    return Subalgebra(parent, gens, tuple(components), cone)
