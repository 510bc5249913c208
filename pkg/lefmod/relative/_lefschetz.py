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
Relative hard Lefschetz, primitive decomposition, relative Hodge-Riemann,
the kernel Lefschetz modules and the signature identity on Gr.
"""

from __future__ import annotations

__all__ = [
    'KernelModule',
    'PrimitiveDecomposition',
    'RelativeResult',
    'SignatureReport',
    'check_kernel_modules',
    'check_raising',
    'check_relative_hl',
    'check_relative_hr',
    'kernel_modules',
    'primitive_decomposition',
    'signature_identity',
]

from typing import NamedTuple
from dataclasses import field, dataclass
from collections.abc import Sequence

from lefmod._session import _log
from lefmod._errors import NotLefschetzError
from lefmod.exactlin import Mat, Subspace, Inertia, signature, diagonalize
from lefmod.graded import PairingForm, GradedModule
from lefmod.kahler import KahlerCertificate, check_kahler_package
from lefmod.decomp import hom_space
from lefmod.perverse import BigradedModule


@dataclass
class RelativeResult:
    """
    One relative check at one bidegree, with a witness on failure.
    """

    check: str
    bidegree: tuple[int, int]
    ok: bool
    witness: Mat | None = None
    inertia: Inertia | None = None
    detail: str = ''

    def to_dict(self) -> dict:

        out = {
            'check': self.check,
            'bidegree': list(self.bidegree),
            'ok': self.ok,
            'detail': self.detail,
        }

        if self.witness is not None:

            out['witness'] = [str(x) for x in self.witness.entries]

        if self.inertia is not None:

            out['inertia'] = list(self.inertia)

        return out


def check_relative_hl(gr: BigradedModule, eta: Mat) -> list[RelativeResult]:
    """
    η^{d−j} ∗: Gr^{i,j} → Gr^{i+d−j,2d−j} is bijective for j ≤ d.
    """

    d = gr.degree
    results = []

    for j in range(d + 1):

        for i in range(j - d, d + 1):

            source, target = gr.dim(i, j), gr.dim(i + d - j, 2 * d - j)

            if not source and not target:

                continue

            m = gr.star_power(eta, d - j, i, j)
            ok = source == target and m.rank() == source
            result = RelativeResult(
                'relative HL', (i, j), ok,
                detail = f'dims {source} -> {target}',
            )

            if not ok:

                kernel = m.kernel()

                if kernel.dim:

                    result.witness = kernel.vectors()[0]

                else:

                    missing = m.image().complete_to(Subspace.full(target))
                    result.witness = missing.column(0) if missing.cols else None
                    result.detail += ', not surjective'

                _log(f'Relative HL fails at {(i, j)}: dims {source} -> {target}.')

            results.append(result)

    return results


@dataclass
class PrimitiveDecomposition:
    """
    Prim^{i,j} = ker η^{d−j+1}∗ ∩ ker ℓ^{j−2i+1} ⊆ Gr^{i,j} (i ≤ j/2 ≤ d/2)
    and the check that the translates η^s ∗ ℓ^t Prim^{i,j} give a direct
    sum decomposition of Gr.
    """

    pieces: dict[tuple[int, int], Subspace]
    direct: bool = True
    complete: bool = True
    total: int = 0
    problems: list[tuple[int, int]] = field(default_factory = list)

    @property
    def ok(self) -> bool:

        return self.direct and self.complete


    def nonzero(self) -> list[tuple[int, int]]:

        return sorted(k for k, v in self.pieces.items() if v.dim)


    def to_dict(self) -> dict:

        return {
            'pieces': {
                f'{i},{j}': self.pieces[i, j].dim for i, j in self.nonzero()
            },
            'direct': self.direct,
            'complete': self.complete,
            'translates_total': self.total,
        }


def primitive_decomposition(
        gr: BigradedModule,
        eta: Mat,
        ell: Mat | None = None,
    ) -> PrimitiveDecomposition:

    d = gr.degree
    ell = gr.ell if ell is None else ell
    pieces = {}

    for j in range(d + 1):

        for i in range(j // 2 + 1):

            n = gr.dim(i, j)

            if not n:

                pieces[i, j] = Subspace.zero(0)
                continue

            k1 = gr.star_power(eta, d - j + 1, i, j).kernel()
            k2 = gr.act_power(ell, j - 2 * i + 1, i, j).kernel()
            pieces[i, j] = k1 & k2

    translates = {}

    for (i, j), prim in pieces.items():

        if not prim.dim:

            continue

        for t in range(j - 2 * i + 1):

            raised = gr.act_power(ell, t, i, j) @ prim.basis

            for s in range(d - j + 1):

                target = (i + t + s, j + 2 * s)
                image = gr.star_power(eta, s, i + t, j) @ raised
                translates.setdefault(target, []).append(image)

    report = PrimitiveDecomposition(pieces)

    for target in sorted(set(translates) | set(gr.bidegrees())):

        blocks = translates.get(target, [])
        n = gr.dim(*target)
        stacked = Mat.hstack(blocks, rows = n)
        report.total += stacked.cols

        if stacked.rank() != stacked.cols:

            report.direct = False
            report.problems.append(target)

        if stacked.cols != n:

            report.complete = False
            report.problems.append(target)

    if not report.ok:

        _log(f'Primitive decomposition fails at {sorted(set(report.problems))}.')

    return report


def check_relative_hr(
        gr: BigradedModule,
        eta: Mat,
        ell: Mat | None = None,
        prim: PrimitiveDecomposition | None = None,
    ) -> list[RelativeResult]:
    """
    (−1)^i Q̄(x, η^{d−j} ∗ ℓ^{j−2i} y) is positive definite on Prim^{i,j}.
    """

    d = gr.degree
    ell = gr.ell if ell is None else ell
    prim = prim or primitive_decomposition(gr, eta, ell)
    results = []

    for i, j in prim.nonzero():

        basis = prim.pieces[i, j].basis
        raise_ = (
            gr.star_power(eta, d - j, j - i, j) @
            gr.act_power(ell, j - 2 * i, i, j)
        )
        gram = (basis.T @ gr.qbar(i, j) @ raise_ @ basis).scale((-1) ** i)
        inertia = signature(gram)
        ok = inertia.n_minus == 0 and inertia.n_zero == 0
        result = RelativeResult('relative HR', (i, j), ok, inertia = inertia)

        if not ok:

            t, diag = diagonalize(gram)
            idx = next(k for k, x in enumerate(diag) if x <= 0)
            result.witness = basis @ t.column(idx)
            _log(f'Relative HR fails at {(i, j)}: inertia {tuple(inertia)}.')

        results.append(result)

    return results


class KernelModule(NamedTuple):
    """
    A kernel Lefschetz module: ``kind`` is ``eta`` (index j, a module over
    the subalgebra) or ``ell`` (index k, a module over the algebra).
    """

    kind: str
    index: int
    module: GradedModule
    form: PairingForm
    lifts: tuple[Mat, ...]


def _kernel_module(
        algebra,
        embedding: Sequence[Mat],
        kernels: Sequence[Subspace],
        moves,
        name: str,
    ) -> GradedModule:
    """
    Module on a family of invariant subspaces; ``moves(u, s, i)`` is the
    ambient action of the algebra element `u` of degree `s` from
    position `i`.
    """

    dims = tuple(k.dim for k in kernels)
    actions = []

    for b in range(algebra.dim):

        s = algebra.degrees[b]
        per_degree = []

        for i in range(len(dims)):

            if i + s >= len(dims):

                per_degree.append(Mat.zeros(0, dims[i]))
                continue

            moved = moves(embedding[b], s, i) @ kernels[i].basis
            per_degree.append(kernels[i + s].coordinates(moved))

        actions.append(tuple(per_degree))

    return GradedModule(algebra, dims, tuple(actions), name = name)


def kernel_modules(
        gr: BigradedModule,
        eta: Mat,
        ell: Mat | None = None,
    ) -> list[KernelModule]:
    """
    The modules ker η^{d−j+1}∗ ⊆ Gr^{•,j} (over B, degree j, form
    Q̄(x, η^{d−j} ∗ y)) and ker ℓ^{k+1} ⊆ Gr^{•,2•+k} (over A under ∗,
    degree d − k, form Q̄(x, ℓ^k y)).

    Raises:
        NotLefschetzError: If a kernel reaches beyond its expected degree.
    """

    d = gr.degree
    ell = gr.ell if ell is None else ell
    out = []
    sub = gr.subalgebra
    b_algebra = sub.algebra if sub is not None else gr.module.algebra
    b_embedding = sub.embedding if sub is not None else tuple(
        b_algebra.basis_element(b) for b in range(b_algebra.dim)
    )

    for j in range(d + 1):

        kernels = [
            gr.star_power(eta, d - j + 1, i, j).kernel()
            for i in range(d + 1)
        ]

        if any(k.dim for k in kernels[j + 1:]):

            raise NotLefschetzError(
                'kernel of η^{d−j+1} reaches beyond degree j',
                (j + 1, j),
            )

        kernels = kernels[:j + 1]
        module = _kernel_module(
            b_algebra,
            b_embedding,
            kernels,
            lambda u, s, i, j = j: gr.act(u, i, j, degree = s),
            f'ker eta^{d - j + 1} on Gr^(*,{j})',
        )
        blocks = tuple(
            kernels[i].basis.T @ gr.qbar(i, j) @
            gr.star_power(eta, d - j, j - i, j) @ kernels[j - i].basis
            for i in range(j + 1)
        )
        out.append(KernelModule(
            'eta', j, module, PairingForm(module, blocks),
            tuple(k.basis for k in kernels),
        ))

    algebra = gr.module.algebra
    a_embedding = tuple(algebra.basis_element(b) for b in range(algebra.dim))

    for k in range(d + 1):

        e = d - k
        kernels = [
            gr.act_power(ell, k + 1, i, 2 * i + k).kernel()
            if gr.dim(i, 2 * i + k) else Subspace.zero(0)
            for i in range(e + 1)
        ]
        module = _kernel_module(
            algebra,
            a_embedding,
            kernels,
            lambda u, s, i, k = k: gr.star(u, i, 2 * i + k, degree = s),
            f'ker ell^{k + 1} on Gr^(*,2*+{k})',
        )
        blocks = tuple(
            kernels[i].basis.T @ gr.qbar(i, 2 * i + k) @
            gr.act_power(ell, k, e - i, 2 * (e - i) + k) @
            kernels[e - i].basis
            for i in range(e + 1)
        )
        out.append(KernelModule(
            'ell', k, module, PairingForm(module, blocks),
            tuple(kk.basis for kk in kernels),
        ))

    return out


def check_kernel_modules(
        gr: BigradedModule,
        eta: Mat,
        b_samples: Sequence[Mat],
        a_samples: Sequence[Mat],
        ell: Mat | None = None,
    ) -> list[tuple[KernelModule, KahlerCertificate]]:
    """
    Kähler package of every nonzero kernel module: the η-kernels at points
    of 𝒦_B (in the coordinates of B), the ℓ-kernels at points of
    𝒦_A + B¹.
    """

    out = []

    for km in kernel_modules(gr, eta, ell):

        if km.module.is_zero():

            continue

        points = b_samples if km.kind == 'eta' else a_samples
        out.append((km, check_kahler_package(km.module, km.form, samples = points)))

    return out


@dataclass
class SignatureReport:

    applicable: bool
    gr_signature: int | None = None
    dimension_sum: int | None = None
    primitive_sum: int | None = None

    @property
    def ok(self) -> bool:

        return not self.applicable or (
            self.gr_signature == self.dimension_sum == self.primitive_sum
        )


    def to_dict(self) -> dict:

        if not self.applicable:

            return {'applicable': False, 'detail': 'not applicable: odd degree'}

        return {
            'applicable': True,
            'gr_signature': self.gr_signature,
            'dimension_sum': self.dimension_sum,
            'primitive_sum': self.primitive_sum,
            'ok': self.ok,
        }


def signature_identity(
        module: GradedModule,
        form: PairingForm,
        gr: BigradedModule,
        eta: Mat,
        ell: Mat | None = None,
        prim: PrimitiveDecomposition | None = None,
    ) -> SignatureReport:
    """
    For even d, compare (a) the signature of Q̄ on Gr^{d/2,•},
    (b) Σ_{i ≤ d/2} (−1)^i (dim M^i − dim M^{i−1}) and
    (c) Σ over even j of (−1)^i dim Prim^{i,j}.

    Raises:
        NotLefschetzError: If the three numbers differ.
    """

    d = module.degree

    if d < 0 or d % 2:

        return SignatureReport(False)

    mid = d // 2
    levels = [j for j in range(2 * d + 1) if gr.dim(mid, j)]
    offsets, total = {}, 0

    for j in levels:

        offsets[j] = total
        total += gr.dim(mid, j)

    entries = {}

    for j in levels:

        blk = gr.qbar(mid, j)

        for r in range(blk.rows):

            for c in range(blk.cols):

                if blk[r, c]:

                    entries[offsets[j] + r, offsets[2 * d - j] + c] = blk[r, c]

    gram = Mat.from_entries(total, total, entries)
    a = signature(gram).value
    b = sum(
        (-1) ** i * (module.dim(i) - module.dim(i - 1))
        for i in range(mid + 1)
    )
    prim = prim or primitive_decomposition(gr, eta, ell)
    c = sum(
        (-1) ** i * prim.pieces[i, j].dim
        for i, j in prim.nonzero()
        if j % 2 == 0
    )
    report = SignatureReport(True, a, b, c)

    if not report.ok:

        raise NotLefschetzError(
            f'signature identity fails: {a}, {b}, {c}',
            (mid, d),
        )

    return report


def check_raising(
        gr: BigradedModule,
        summand: GradedModule,
        eta: Mat,
) -> dict[int, bool]:
    """
    η^{d−e−2k} ∗ maps V^k = Hom(N[−k], Gr^{•,e+2k}) bijectively onto
    V^{d−e−k}, for k ≤ (d − e)/2, e the degree of N.
    """

    d, e = gr.degree, summand.degree
    out = {}

    for k in range((d - e) // 2 + 1):

        p = d - e - 2 * k
        source = hom_space(summand, gr.row(e + 2 * k), -k)
        target = hom_space(summand, gr.row(e + 2 * k + 2 * p), -(k + p))
        images = [
            [
                x
                for i, f_i in enumerate(f)
                for x in (gr.star_power(eta, p, i + k, e + 2 * k) @ f_i).entries
            ]
            for f in source
        ]
        rank = Mat.from_rows(images, cols = len(images[0])).rank() if images else 0
        out[k] = rank == len(source) == len(target)

    return out
