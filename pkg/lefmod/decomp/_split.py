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
Decomposition of a graded module into indecomposable summands.
"""

from __future__ import annotations

__all__ = [
    'DecompositionReport',
    'IsoClass',
    'Summand',
    'decompose',
    'is_isomorphic',
    'restricted_form',
    'split_module',
]

import random
import itertools
from dataclasses import field, dataclass
from collections.abc import Iterator, Sequence

from lefmod._session import _log
from lefmod._errors import NotIndecomposableError
from lefmod.exactlin import Mat, Subspace, poly_at, min_poly, factor_over_q
from lefmod.graded import (
    PairingForm,
    Subalgebra,
    GradedModule,
    sample_points,
)
from lefmod.perverse import build_gr, perverse_filtration
from lefmod.decomp._endo import (
    GradedMap,
    EndAlgebra,
    compose,
    operator,
    hom_space,
    submodule,
    end_algebra,
    is_invertible_map,
)
from lefmod.decomp._forms import hr_sign, induced_form, middle_socle_ok
from lefmod.decomp._division import DivisionType, classify_division


@dataclass(eq = False)
class Summand:
    """
    An indecomposable summand N[−k] of M.

    Attributes:
        embedding:
            Per degree of M, a basis of the summand as columns.
        module:
            N, the summand moved down to start in degree 0.
        shift:
            k, the lowest degree of the summand in M.
    """

    embedding: tuple[Mat, ...]
    module: GradedModule
    shift: int
    class_index: int = -1

    @property
    def degree(self) -> int:

        return self.module.degree


    @property
    def dims(self) -> tuple[int, ...]:

        return self.module.dims


    def span(self, i: int) -> Subspace:

        emb = self.embedding[i]

        return Subspace.span(emb, ambient_dim = emb.rows)


    def to_dict(self) -> dict:

        return {
            'dims': list(self.dims),
            'shift': self.shift,
            'degree': self.degree,
            'class': self.class_index,
        }


@dataclass(eq = False)
class IsoClass:
    """
    An isomorphism class α of summands with its invariants.
    """

    index: int
    representative: Summand
    multiplicities: dict[int, int] = field(default_factory = dict)
    division: DivisionType | None = None
    form: PairingForm | None = None
    form_space_dim: int | None = None
    form_nondegenerate: bool | None = None
    epsilon: int | None = None
    hom_dims: dict[int, int] = field(default_factory = dict)
    middle_socle: bool | None = None

    @property
    def module(self) -> GradedModule:

        return self.representative.module


    @property
    def degree(self) -> int:

        return self.module.degree


    def v_dims(self) -> dict[int, int]:
        """
        dim over the division algebra of V_α^k = Hom(N_α[−k], Gr^{•,d(α)+2k}).
        """

        size = self.division.dim if self.division else 1

        return {k: n // size for k, n in self.hom_dims.items()}


    def to_dict(self) -> dict:

        return {
            'index': self.index,
            'dims': list(self.module.dims),
            'degree': self.degree,
            'multiplicities': {str(k): m for k, m in sorted(self.multiplicities.items())},
            'division': str(self.division) if self.division else None,
            'form_space_dim': self.form_space_dim,
            'form_nondegenerate': self.form_nondegenerate,
            'epsilon': self.epsilon,
            'v_dims': {str(k): v for k, v in sorted(self.v_dims().items())},
            'middle_socle': self.middle_socle,
        }


@dataclass(eq = False)
class DecompositionReport:

    module: GradedModule
    summands: list[Summand]
    classes: list[IsoClass]
    hom_table: list[tuple[int, int, int, int]] = field(default_factory = list)
    isotypic: dict[int, list[tuple[int, int, int]]] = field(default_factory = dict)
    seed: int = 0

    def multiset(self) -> list[tuple[tuple[int, ...], int, int]]:
        """
        Sorted (dims of N_α, k, m(α, k)); independent of the seed.
        """

        return sorted(
            (cls.module.dims, k, m)
            for cls in self.classes
            for k, m in cls.multiplicities.items()
        )


    def dimensions_ok(self) -> bool:
        """
        Σ_{α,k} m(α,k) dim N_α^{i−k} = dim M^i for all i.
        """

        totals = [0] * len(self.module.dims)

        for summand in self.summands:

            for i, n in enumerate(summand.dims):

                totals[i + summand.shift] += n

        return tuple(totals) == self.module.dims


    def multiplicities_ok(self) -> bool:

        return all(
            cls.v_dims().get(k, 0) == cls.multiplicities.get(k, 0)
            for cls in self.classes
            if cls.hom_dims
            for k in set(cls.hom_dims) | set(cls.multiplicities)
        )


    def hom_vanishing_ok(self) -> bool:
        """
        Hom(N_α, N_β[−k]) vanishes whenever d(α) ≤ d(β) + 2k, except for
        α = β and k = 0, where it is the division algebra.
        """

        for a, b, k, n in self.hom_table:

            if a == b and k == 0:

                if self.classes[a].division and n != self.classes[a].division.dim:

                    return False

            elif n:

                return False

        return True


    def to_dict(self) -> dict:

        return {
            'seed': self.seed,
            'summands': [s.to_dict() for s in self.summands],
            'classes': [c.to_dict() for c in self.classes],
            'multiset': [
                [list(dims), k, m] for dims, k, m in self.multiset()
            ],
            'dimensions_ok': self.dimensions_ok(),
            'multiplicities_ok': self.multiplicities_ok(),
            'hom_vanishing_ok': self.hom_vanishing_ok(),
            'isotypic': {
                str(j): [list(t) for t in entries]
                for j, entries in sorted(self.isotypic.items())
            },
        }


def _candidates(
        end: EndAlgebra,
        rng: random.Random,
        attempts: int,
    ) -> Iterator[GradedMap]:

    order = list(range(end.dim))
    rng.shuffle(order)

    for idx in order:

        yield end.basis[idx]

    for _ in range(attempts):

        yield end.element([rng.randint(-3, 3) for _ in range(end.dim)])

    for a, b in itertools.islice(itertools.product(order, repeat = 2), attempts):

        yield compose(end.basis[a], end.basis[b])


def _primary_split(
        module: GradedModule,
        z: GradedMap,
    ) -> list[list[Mat]] | None:

    factors = factor_over_q(min_poly(operator(z)))

    if len(factors) < 2:

        return None

    parts = []

    for f, a in factors:

        g = f ** a
        parts.append([
            poly_at(g, z_i).kernel().basis if z_i.rows else Mat.zeros(0, 0)
            for z_i in z
        ])

    return parts


def split_module(
        module: GradedModule,
        seed: int = 0,
        attempts: int = 24,
    ) -> list[list[Mat]]:
    """
    Embeddings of indecomposable summands whose direct sum is the module.

    Endomorphisms are drawn deterministically from the seed; a summand is
    split along the primary decomposition of an endomorphism whose minimal
    polynomial has at least two irreducible factors over ℚ.

    Raises:
        NotIndecomposableError: If no sampled endomorphism splits a summand
            whose endomorphism algebra modulo radical has a zero divisor.
    """

    rng = random.Random(seed)
    pending = [[Mat.identity(n) for n in module.dims]]
    done = []

    while pending:

        embedding = pending.pop()
        piece = submodule(module, embedding)
        end = end_algebra(piece)
        parts = None

        if not end.is_local():

            for z in _candidates(end, rng, attempts):

                parts = _primary_split(piece, z)

                if parts:

                    break

            else:

                try:

                    classify_division(end)

                except NotIndecomposableError as e:

                    _log(f'No endomorphism splits the summand of dims {piece.dims}.')

                    raise NotIndecomposableError(
                        f'summand of dims {piece.dims} is decomposable but '
                        f'no sampled endomorphism splits it: {e}',
                    ) from e

        if not parts:

            done.append(embedding)
            continue

        _log(
            f'Split summand of dims {piece.dims} into '
            f'{[tuple(m.cols for m in p) for p in parts]}.'
        )

        for part in parts:

            pending.append([e @ k for e, k in zip(embedding, part)])

    return done


def _normalize(module: GradedModule, embedding: list[Mat]) -> Summand:

    dims = [e.cols for e in embedding]
    nonzero = [i for i, n in enumerate(dims) if n]
    low, high = nonzero[0], nonzero[-1]
    full = submodule(module, embedding)
    algebra = module.algebra
    actions = tuple(
        tuple(
            full.basis_action(b, i)
            for i in range(low, high + 1)
        )
        for b in range(algebra.dim)
    )
    moved = GradedModule(
        algebra,
        tuple(dims[low:high + 1]),
        actions,
        name = f'N[-{low}]',
    )

    return Summand(tuple(embedding), moved, low)


def is_isomorphic(
        first: GradedModule,
        second: GradedModule,
        attempts: int = 16,
        seed: int = 0,
    ) -> bool:
    """
    Look for an invertible module map among the intertwiners.

    Basis elements are tried first, then a deterministic sequence of small
    integer combinations. A negative answer is certain only if there are
    no intertwiners at all.
    """

    if first.dims != second.dims:

        return False

    maps = hom_space(first, second, 0)

    if not maps:

        return False

    for f in maps:

        if is_invertible_map(f):

            return True

    rng = random.Random(seed)

    for _ in range(attempts):

        coeffs = [rng.randint(-3, 3) for _ in maps]
        f = tuple(
            sum(
                (m[i].scale(c) for c, m in zip(coeffs, maps)),
                Mat.zeros(*maps[0][i].shape),
            )
            for i in range(len(first.dims))
        )

        if is_invertible_map(f):

            return True

    return False


def restricted_form(
        summand: Summand,
        form: PairingForm,
) -> PairingForm | None:
    """
    Q restricted to a summand N[−k] with 2k + d(α) = d, as a form on N.
    """

    d = form.module.degree
    k, e = summand.shift, summand.degree

    if 2 * k + e != d:

        return None

    emb = summand.embedding

    return PairingForm(
        summand.module,
        tuple(
            emb[k + i].T @ form.block(k + i) @ emb[k + e - i]
            for i in range(e + 1)
        ),
    )


def decompose(
        module: GradedModule,
        subalgebra: Subalgebra,
        form: PairingForm | None = None,
        seed: int = 0,
        samples: int = 3,
        split_attempts: int = 24,
        isomorphism_attempts: int = 16,
    ) -> DecompositionReport:
    """
    Krull-Schmidt decomposition of M as a graded module over a subalgebra.

    Args:
        module:
            M, a module over the parent algebra of `subalgebra`.
        subalgebra:
            B, with a cone 𝒦_B used for ℓ and for the sign checks.
        form:
            Q on M. If given, the classes get their invariant form, sign,
            Hom-spaces V_α^k into the rows of Gr and the isotypic table.
        seed:
            Drives the choice of splitting endomorphisms.
    """

    restricted = subalgebra.restrict(module)
    embeddings = split_module(restricted, seed, split_attempts)
    summands = [_normalize(restricted, emb) for emb in embeddings]
    summands.sort(key = lambda s: (s.shift, -s.module.total_dim, s.dims))
    classes = []

    for summand in summands:

        for cls in classes:

            if is_isomorphic(
                cls.module, summand.module, isomorphism_attempts, seed,
            ):

                summand.class_index = cls.index
                break

        else:

            summand.class_index = len(classes)
            classes.append(IsoClass(summand.class_index, summand))

        cls = classes[summand.class_index]
        cls.multiplicities[summand.shift] = (
            cls.multiplicities.get(summand.shift, 0) + 1
        )

    _log(
        f'Decomposition (seed {seed}): {len(summands)} summand(s) in '
        f'{len(classes)} isomorphism class(es).'
    )

    report = DecompositionReport(restricted, summands, classes, seed = seed)

    for cls in classes:

        cls.division = classify_division(end_algebra(cls.module))
        cls.middle_socle = middle_socle_ok(cls.module)

    d = module.degree

    for a, b in itertools.product(classes, repeat = 2):

        for k in range(-d, d + 1):

            if a.degree <= b.degree + 2 * k:

                n = len(hom_space(a.module, b.module, k))
                report.hom_table.append((a.index, b.index, k, n))

    if form is None:

        return report

    points = sample_points(subalgebra.cone(), count = samples)
    ell = subalgebra.to_parent(points[0])
    gr = build_gr(
        module,
        form,
        perverse_filtration(module, ell),
        subalgebra = subalgebra,
    )

    for cls in classes:

        induced = induced_form(cls.module)
        cls.form = induced.form
        cls.form_space_dim = induced.space_dim
        cls.form_nondegenerate = induced.nondegenerate

        if induced.form is not None and induced.nondegenerate:

            cls.epsilon = hr_sign(cls.module, induced.form, points)

        for k in range(0, d - cls.degree + 1):

            j = cls.degree + 2 * k
            cls.hom_dims[k] = len(hom_space(cls.module, gr.row(j), -k))

        for k, m in cls.multiplicities.items():

            report.isotypic.setdefault(cls.degree + 2 * k, []).append(
                (cls.index, k, m),
            )

    return report
