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
The commands: each turns an instance and the settings into results,
a verdict and text lines.
"""

from __future__ import annotations

__all__ = [
    'COMMANDS',
    'cmd_apolar',
    'cmd_check',
    'cmd_decompose',
    'cmd_matroid',
    'cmd_perverse',
]

from lefmod._config import Config
from lefmod._session import _log
from lefmod._errors import InstanceError, NotLefschetzError
from lefmod.graded import sample_points
from lefmod.kahler import KahlerCertificate, check_kahler_package
from lefmod.decomp import decompose
from lefmod.matroid import top_heavy
from lefmod.apolar import lorentz_check
from lefmod.perverse import (
    build_gr,
    gr_descent_maps,
    perverse_filtration,
    check_ell_independence,
    check_filtration_invariants,
)
from lefmod.relative import (
    compute_R,
    check_raising,
    deligne_splitting,
    check_relative_hl,
    check_relative_hr,
    signature_identity,
    check_kernel_modules,
    primitive_decomposition,
)
from ._instance import Instance

Outcome = tuple[dict, bool, list[str]]
CLOSURE_ASSUMPTION = (
    'generators of B assumed in the closure of the cone of A, not checked'
)


def _certificate_lines(cert: KahlerCertificate, indent: str = '  ') -> list[str]:

    lines = []

    for idx, label in enumerate(cert.point_labels):

        lines.append(
            f'{indent}ℓ{idx} = {label}: '
            f'HL {"ok" if cert.hl_ok(idx) else "FAIL"}, '
            f'HR {"ok" if cert.hr_ok(idx) else "FAIL"}'
        )

    lines.insert(0, f'{indent}PD {"ok" if cert.pd_ok else "FAIL"}')

    for res in cert.failures():

        witness = (
            f' witness in degree {res.witness_degree}: '
            f'{[str(x) for x in res.witness.entries]}'
            if res.witness is not None else ''
        )
        lines.append(
            f'{indent}{res.check} fails in degree {res.degree}'
            f'{"" if res.point is None else f" at ℓ{res.point}"}'
            f'{": " + res.detail if res.detail else ""}{witness}'
        )

    return lines


def _assumptions(instance: Instance) -> list[str]:

    return [CLOSURE_ASSUMPTION] if instance.subalgebra is not None else []


def cmd_check(instance: Instance, config: Config) -> Outcome:

    cert = check_kahler_package(
        instance.module,
        instance.form,
        cone = instance.cone,
        samples = config.samples,
        style = config.sample_style,
    )
    lines = [f'Kähler package of {instance.name} ({cert.caveat})']
    lines.extend(_certificate_lines(cert))

    return {'certificate': cert.to_dict()}, cert.ok, lines


def _unimodal(values: list[int]) -> bool:

    n = len(values)
    half = values[:(n + 1) // 2]

    return values == values[::-1] and all(
        a <= b for a, b in zip(half, half[1:])
    )


def cmd_decompose(instance: Instance, config: Config) -> Outcome:

    sub = instance.acting_subalgebra()
    report = decompose(
        instance.module,
        sub,
        instance.form,
        seed = config.seed,
        samples = config.relative_samples,
        split_attempts = config.split_attempts,
        isomorphism_attempts = config.isomorphism_attempts,
    )
    results = report.to_dict()
    d = instance.module.degree
    ell = sub.to_parent(sample_points(sub.cone(), count = 1)[0])
    eta = sample_points(instance.cone, count = 1)[0]
    gr = build_gr(
        instance.module,
        instance.form,
        perverse_filtration(instance.module, ell),
        subalgebra = sub,
    )
    raising, unimodal = {}, {}
    lines = [
        f'{len(report.summands)} summand(s) in {len(report.classes)} class(es)',
        'class  dims  k:m  D  ε',
    ]

    for cls in report.classes:

        raising[cls.index] = check_raising(gr, cls.module, eta)
        v = cls.v_dims()
        v_list = [v.get(k, 0) for k in range(d - cls.degree + 1)]
        unimodal[cls.index] = _unimodal(v_list)
        mult = ' '.join(f'{k}:{m}' for k, m in sorted(cls.multiplicities.items()))
        lines.append(
            f'{cls.index:>5}  {cls.module.dims}  {mult}  '
            f'{cls.division}  {cls.epsilon}'
        )

    lines.append('Hom(N_α, N_β[−k]) with d(α) ≤ d(β) + 2k:')
    lines.extend(
        f'  α={a} β={b} k={k}: {n}'
        for a, b, k, n in report.hom_table
        if n
    )
    lines.append('V_α^k dims:')

    for cls in report.classes:

        v = cls.v_dims()
        lines.append(
            f'  α={cls.index}: '
            f'{[v.get(k, 0) for k in range(d - cls.degree + 1)]}'
            f'  unimodal {"yes" if unimodal[cls.index] else "NO"}'
            f'  raising {"ok" if all(raising[cls.index].values()) else "FAIL"}'
        )

    results['raising'] = {
        str(idx): {str(k): ok for k, ok in flags.items()}
        for idx, flags in raising.items()
    }
    results['unimodal'] = {str(k): v for k, v in unimodal.items()}
    results['assumptions'] = _assumptions(instance)
    ok = (
        report.dimensions_ok() and
        report.multiplicities_ok() and
        report.hom_vanishing_ok() and
        all(unimodal.values()) and
        all(all(flags.values()) for flags in raising.values())
    )

    return results, ok, lines


def cmd_perverse(instance: Instance, config: Config) -> Outcome:

    module, form = instance.module, instance.form
    sub = instance.acting_subalgebra()
    count = max(config.relative_samples, 2)
    b_points = sample_points(sub.cone(), count = count)
    ells = [sub.to_parent(p) for p in b_points]
    etas = sample_points(
        instance.cone,
        style = 'relative',
        count = count,
        subalgebra = sub,
    )
    ell = ells[0]
    filtration = perverse_filtration(module, ell)
    independence = check_ell_independence(module, ells)
    problems = check_filtration_invariants(filtration, sub)
    gr = build_gr(module, form, filtration, subalgebra = sub)
    d = module.degree
    lines = []

    if filtration.is_trivial():

        lines.append('filtration trivial: ℓ satisfies hard Lefschetz on M')

    lines.append('P_j dims:')
    lines.extend(
        f'  j={j}: {list(filtration.dims(j))} total {filtration.dim(j)}'
        for j in filtration.levels
    )
    lines.append('Gr row dims:')
    lines.extend(
        f'  Gr^(*,{j}): {list(gr.row_dims(j))}'
        for j in filtration.levels
        if any(gr.row_dims(j))
    )

    relative = []
    ok = independence.equal and not problems

    for idx, eta in enumerate(etas):

        hl = check_relative_hl(gr, eta)
        prim = primitive_decomposition(gr, eta, ell)
        hr = check_relative_hr(gr, eta, ell, prim) if prim.ok else []
        entry_ok = all(r.ok for r in hl) and prim.ok and all(r.ok for r in hr)
        ok = ok and entry_ok
        relative.append({
            'eta': instance.algebra.format(eta),
            'relative_hl': [r.to_dict() for r in hl],
            'primitive': prim.to_dict(),
            'relative_hr': [r.to_dict() for r in hr],
            'ok': entry_ok,
        })
        lines.append(
            f'η{idx} = {instance.algebra.format(eta)}: relative HL '
            f'{"ok" if all(r.ok for r in hl) else "FAIL"}, primitive '
            f'decomposition {"ok" if prim.ok else "FAIL"}, relative HR '
            f'{"ok" if hr and all(r.ok for r in hr) else "FAIL" if hr else "-"}'
        )

    eta = etas[0]
    signature = signature_identity(module, form, gr, eta, ell)
    ok = ok and signature.ok
    lines.append(
        'signature identity: ' + (
            f'{signature.gr_signature} = {signature.dimension_sum} = '
            f'{signature.primitive_sum}'
            if signature.applicable else 'not applicable (odd degree)'
        )
    )

    kernels = check_kernel_modules(
        gr,
        eta,
        b_samples = b_points,
        a_samples = etas,
        ell = ell,
    )
    kernel_results = [
        {
            'kind': km.kind,
            'index': km.index,
            'dims': list(km.module.dims),
            'ok': cert.ok,
        }
        for km, cert in kernels
    ]
    ok = ok and all(cert.ok for _, cert in kernels)
    lines.append(
        f'kernel modules: {sum(c.ok for _, c in kernels)}/{len(kernels)} '
        'pass the Kähler package'
    )

    descent = None

    if d > 0:

        try:

            descent = gr_descent_maps(module, form, ell, eta, gr = gr).to_dict()

        except NotLefschetzError as e:

            descent = {'ok': False, 'error': str(e)}

        ok = ok and descent['ok']
        lines.append(f'descent checks: {"ok" if descent["ok"] else "FAIL"}')

    R = compute_R(module, filtration)
    splitting = deligne_splitting(module, filtration, gr, eta, R)
    ok = ok and splitting.ok
    lines.append(f'R dims: {list(R.dims)}')
    lines.append(
        f'splitting M ≅ Gr: exact {splitting.filtration_exact}, '
        f'R-equivariant {splitting.equivariant}'
    )

    if problems:

        lines.extend(f'  violated: {p}' for p in problems)

    results = {
        'filtration': filtration.to_dict(),
        'ell_independence': independence.to_dict(),
        'filtration_invariants': problems,
        'gr': gr.to_dict(),
        'relative': relative,
        'signature': signature.to_dict(),
        'kernel_modules': kernel_results,
        'descent': descent,
        'splitting': splitting.to_dict(),
        'assumptions': _assumptions(instance),
    }
    _log(f'Perverse report of `{instance.name}`: {"ok" if ok else "failures"}.')

    return results, ok, lines


def cmd_matroid(instance: Instance, config: Config) -> Outcome:

    if instance.lattice is None:

        raise InstanceError('not a matroid instance', location = 'algebra')

    lattice = instance.lattice
    heavy = top_heavy(lattice)
    dims_ok = instance.algebra.dims == lattice.counts
    lines = [
        f'{lattice.matroid.name}: n = {lattice.matroid.n}, '
        f'rank {lattice.rank}, {len(lattice.matroid.bases)} bases',
        f'flat counts: {list(lattice.counts)}',
        f'top-heavy: {"ok" if heavy.ok else f"FAIL at {heavy.violations}"}',
        f'Möbius algebra dims: {list(instance.algebra.dims)}',
    ]
    results = {
        'matroid': {
            'name': lattice.matroid.name,
            'n': lattice.matroid.n,
            'rank': lattice.rank,
            'bases': len(lattice.matroid.bases),
        },
        'top_heavy': heavy.to_dict(),
        'algebra_dims': list(instance.algebra.dims),
        'dims_match': dims_ok,
    }

    return results, heavy.ok and dims_ok, lines


def cmd_apolar(instance: Instance, config: Config) -> Outcome:

    cogenerated = instance.cogenerated

    if cogenerated is None:

        raise InstanceError('not a cogenerated instance', location = 'algebra')

    identity = cogenerated.degree_polynomial() == cogenerated.form_polynomial()
    cert = lorentz_check(
        cogenerated,
        samples = config.samples,
        style = config.sample_style,
    )
    lines = [
        f'f = {cogenerated.form_polynomial().as_expr()}',
        f'Hilbert function: {list(cogenerated.hilbert_function)}',
        f'deg((Σ w_i x_i)^d) = f: {"yes" if identity else "NO"}',
    ]
    lines.extend(_certificate_lines(cert))
    results = {
        'hilbert_function': list(cogenerated.hilbert_function),
        'degree_identity': identity,
        'certificate': cert.to_dict(),
    }

    return results, identity and cert.ok, lines


COMMANDS = {
    'check': cmd_check,
    'decompose': cmd_decompose,
    'perverse': cmd_perverse,
    'matroid': cmd_matroid,
    'apolar': cmd_apolar,
}
