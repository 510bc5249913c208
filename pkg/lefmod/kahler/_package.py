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
Poincaré duality, hard Lefschetz and Hodge-Riemann checks.
"""

from __future__ import annotations

__all__ = [
    'check_hl',
    'check_hr',
    'check_kahler_package',
    'check_pd',
    'hr_form',
    'verify_witness',
]

from collections.abc import Sequence

from lefmod._session import _log
from lefmod.exactlin import Mat, Subspace, signature, diagonalize
from lefmod.graded import Cone, GradedModule, PairingForm, sample_points
from lefmod.kahler._certificate import CheckResult, KahlerCertificate


def check_pd(module: GradedModule, form: PairingForm) -> list[CheckResult]:
    """
    Nondegeneracy of each block Q^{(i)}: M^i × M^{d−i} → ℚ.
    """

    d = module.degree
    results = []

    for i in range(d + 1):

        blk = form.block(i)
        rank = blk.rank()
        ok = rank == module.dim(i) == module.dim(d - i)
        result = CheckResult('PD', i, ok, detail = f'rank {rank}')

        if not ok:

            left = blk.kernel()

            if left.dim:

                result.witness, result.witness_degree = left.vectors()[0], i

            else:

                right = blk.T.kernel()
                result.witness = right.vectors()[0]
                result.witness_degree = d - i

            result.detail += (
                f', dims {module.dim(i)} and {module.dim(d - i)}'
            )
            _log(f'PD fails in degree {i}: {result.detail}.')

        results.append(result)

    return results


def check_hl(
        module: GradedModule,
        ell: Mat,
        point: int | None = None,
    ) -> list[CheckResult]:
    """
    ℓ^{d−2k}: M^k → M^{d−k} is an isomorphism for every k ≤ d/2.
    """

    d = module.degree
    results = []

    for k in range(d // 2 + 1):

        power = module.power(ell, d - 2 * k, k, degree = 1)
        rank = power.rank()
        ok = rank == module.dim(k) == module.dim(d - k)
        result = CheckResult('HL', k, ok, point, detail = f'rank {rank}')

        if not ok:

            kernel = power.kernel()

            if kernel.dim:

                result.witness, result.witness_degree = kernel.vectors()[0], k

            else:

                image = power.image()
                missing = image.complete_to(Subspace.full(module.dim(d - k)))
                result.witness = missing.column(0)
                result.witness_degree = d - k

            _log(
                f'HL fails in degree {k} at point {point}: rank {rank}, '
                f'dims {module.dim(k)} and {module.dim(d - k)}.'
            )

        results.append(result)

    return results


def hr_form(
        module: GradedModule,
        form: PairingForm,
        ell: Mat,
        k: int,
    ) -> tuple[Mat, Mat]:
    """
    The primitive subspace in degree k and the Hodge-Riemann Gram matrix.

    Returns:
        The basis K of ker ℓ^{d−2k+1} ⊆ M^k (as columns) and
        (−1)^k Kᵀ Q^{(k)} ℓ^{d−2k} K.
    """

    d = module.degree
    primitive = module.power(ell, d - 2 * k + 1, k, degree = 1).kernel().basis
    power = module.power(ell, d - 2 * k, k, degree = 1)
    gram = (primitive.T @ form.block(k) @ power @ primitive).scale((-1) ** k)

    return primitive, gram


def check_hr(
        module: GradedModule,
        form: PairingForm,
        ell: Mat,
        point: int | None = None,
        hl: Sequence[CheckResult] | None = None,
    ) -> list[CheckResult]:
    """
    Positive definiteness of the twisted form on primitive vectors.

    Degrees where HL fails at `ell` are reported as precondition failures.
    """

    d = module.degree
    hl = check_hl(module, ell, point) if hl is None else hl
    hl_by_degree = {r.degree: r.ok for r in hl}
    results = []

    for k in range(d // 2 + 1):

        if not hl_by_degree.get(k, False):

            results.append(CheckResult(
                'HR', k, False, point,
                precondition = False,
                detail = 'not checked: HL fails in this degree',
            ))
            continue

        primitive, gram = hr_form(module, form, ell, k)
        inertia = signature(gram)
        ok = inertia.n_minus == 0 and inertia.n_zero == 0
        result = CheckResult(
            'HR', k, ok, point,
            inertia = inertia,
            detail = f'primitive dimension {primitive.cols}',
        )

        if not ok:

            t, diag = diagonalize(gram)
            idx = next(i for i, x in enumerate(diag) if x <= 0)
            result.witness = primitive @ t.column(idx)
            result.witness_degree = k
            _log(
                f'HR fails in degree {k} at point {point}: '
                f'inertia {tuple(inertia)}.'
            )

        results.append(result)

    return results


def verify_witness(
        result: CheckResult,
        module: GradedModule,
        form: PairingForm,
        ell: Mat | None = None,
    ) -> bool:
    """
    Re-check that the witness of a failed result proves the failure.
    """

    w = result.witness

    if w is None:

        return False

    d = module.degree
    k = result.degree

    if result.check == 'PD':

        blk = form.block(k)

        return not w.is_zero() and (
            (blk @ w).is_zero()
            if result.witness_degree == k else
            (blk.T @ w).is_zero()
        )

    if result.check == 'HL':

        power = module.power(ell, d - 2 * k, k, degree = 1)

        if result.witness_degree == k:

            return not w.is_zero() and (power @ w).is_zero()

        return not power.image().contains(w)

    if result.check == 'HR':

        top = module.power(ell, d - 2 * k + 1, k, degree = 1)
        power = module.power(ell, d - 2 * k, k, degree = 1)
        value = (w.T @ form.block(k) @ power @ w).entries[0] * (-1) ** k

        return not w.is_zero() and (top @ w).is_zero() and value <= 0

    return False


def check_kahler_package(
        module: GradedModule,
        form: PairingForm,
        cone: Cone | None = None,
        samples: Sequence[Mat] | int | None = None,
        style: str = 'generator_sums',
    ) -> KahlerCertificate:
    """
    PD once, HL and HR at each sample point of the cone.

    Args:
        module, form:
            The module and its pairing.
        cone:
            The cone 𝒦 of the acting algebra.
        samples:
            Explicit points, or a number of points to draw from `cone`
            (default 5).
        style:
            Sampling style, see `sample_points`.
    """

    if samples is None or isinstance(samples, int):

        points = sample_points(cone, style = style, count = samples or 5)

    else:

        points = list(samples)

    algebra = module.algebra
    cert = KahlerCertificate(
        module = module.name or 'M',
        points = points,
        point_labels = [algebra.format(p) for p in points],
    )
    cert.results.extend(check_pd(module, form))

    for idx, ell in enumerate(points):

        hl = check_hl(module, ell, idx)
        cert.results.extend(hl)
        cert.results.extend(check_hr(module, form, ell, idx, hl = hl))

    _log(
        f'Kähler package of `{cert.module}` at {len(points)} point(s): '
        f'{"ok" if cert.ok else f"{len(cert.failures())} failure(s)"}.'
    )

    return cert
