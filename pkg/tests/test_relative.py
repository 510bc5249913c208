import pytest

from lefmod._errors import NotLefschetzError
from lefmod.exactlin import Mat
from lefmod.graded import sample_points
from lefmod.perverse import build_gr, perverse_filtration
from lefmod.relative import (
    compute_R,
    split_order,
    kernel_modules,
    deligne_splitting,
    check_relative_hl,
    check_relative_hr,
    signature_identity,
    check_kernel_modules,
    primitive_decomposition,
)

def _setup(instance):

    sub = instance.subalgebra
    ell = sub.to_parent(sample_points(sub.cone(), count = 1)[0])
    eta = sample_points(instance.cone, count = 1)[0]
    filtration = perverse_filtration(instance.module, ell)
    gr = build_gr(instance.module, instance.form, filtration, sub)

    return ell, eta, filtration, gr


def test_split_order():

    assert split_order(2) == [0, 4, 1, 3, 2]
    assert split_order(0) == [0]


def test_relative_hl_fano(fano_ex34):

    ell, eta, filtration, gr = _setup(fano_ex34)
    results = check_relative_hl(gr, eta)

    assert results
    assert all(r.ok for r in results)
    assert {r.bidegree[1] for r in results} >= {2, 3}


def test_relative_hr_fano(fano_ex34):

    ell, eta, filtration, gr = _setup(fano_ex34)
    prim = primitive_decomposition(gr, eta, ell)
    results = check_relative_hr(gr, eta, ell, prim)

    assert prim.ok
    assert prim.total == 16
    assert results and all(r.ok for r in results)


def test_relative_at_relative_samples(fano_ex34):

    ell, _, filtration, gr = _setup(fano_ex34)
    etas = sample_points(
        fano_ex34.cone,
        style = 'relative',
        count = 3,
        subalgebra = fano_ex34.subalgebra,
    )

    for eta in etas:

        assert all(r.ok for r in check_relative_hl(gr, eta))
        assert all(r.ok for r in check_relative_hr(gr, eta, ell))


def test_signature_identity_u23(u23):

    ell, eta, filtration, gr = _setup(u23)
    report = signature_identity(u23.module, u23.form, gr, eta, ell)

    assert report.applicable
    assert report.gr_signature == -1
    assert report.dimension_sum == -1
    assert report.primitive_sum == -1


def test_primitive_decomposition_u23(u23):

    ell, eta, filtration, gr = _setup(u23)
    prim = primitive_decomposition(gr, eta, ell)

    assert prim.ok
    assert prim.total == 5


def test_signature_identity_odd_degree(fano_ex34):

    ell, eta, filtration, gr = _setup(fano_ex34)
    report = signature_identity(fano_ex34.module, fano_ex34.form, gr, eta, ell)

    assert not report.applicable
    assert report.ok


def test_kernel_modules_pass(fano_ex34):

    ell, eta, filtration, gr = _setup(fano_ex34)
    sub = fano_ex34.subalgebra
    results = check_kernel_modules(
        gr,
        eta,
        b_samples = sample_points(sub.cone(), count = 3),
        a_samples = sample_points(fano_ex34.cone, count = 3),
        ell = ell,
    )

    assert results
    assert all(cert.ok for _, cert in results)
    assert {km.kind for km, _ in results} == {'eta', 'ell'}


def test_kernel_modules_degrees(u23):

    ell, eta, filtration, gr = _setup(u23)

    for km in kernel_modules(gr, eta, ell):

        if km.kind == 'eta' and not km.module.is_zero():

            assert km.module.degree <= km.index


def test_compute_R(fano_ex34):

    ell, eta, filtration, gr = _setup(fano_ex34)
    R = compute_R(fano_ex34.module, filtration)

    for v in fano_ex34.subalgebra.basis_vectors(1):

        assert R.contains(v)

    assert R.dims[0] == 1


def test_deligne_splitting_fano(fano_ex34):

    ell, eta, filtration, gr = _setup(fano_ex34)
    R = compute_R(fano_ex34.module, filtration)
    splitting = deligne_splitting(fano_ex34.module, filtration, gr, eta, R)

    assert splitting.ok
    assert splitting.filtration_exact
    assert splitting.equivariant
    assert splitting.order == [0, 6, 1, 5, 2, 4, 3]
    assert splitting.to_dict()['ok']


def test_deligne_splitting_u23(u23):

    ell, eta, filtration, gr = _setup(u23)
    splitting = deligne_splitting(u23.module, filtration, gr, eta)

    assert splitting.ok
    assert all(m.is_invertible() for m in splitting.maps)


def test_relative_hl_non_lefschetz_eta(fano_ex34):

    ell, eta, filtration, gr = _setup(fano_ex34)
    zero = fano_ex34.algebra.zero()
    results = check_relative_hl(gr, zero)

    assert not all(r.ok for r in results)
    assert any(r.witness is not None for r in results if not r.ok)


def test_splitting_needs_lefschetz_eta(u23):

    ell, eta, filtration, gr = _setup(u23)

    with pytest.raises(NotLefschetzError):

        deligne_splitting(u23.module, filtration, gr, u23.algebra.zero())


class _OneRowGr:

    degree = 1
    dims = {(0, 0): 1, (1, 2): 2}

    def dim(self, i, j):

        return self.dims.get((i, j), 0)

    def star_power(self, eta, p, i, j):

        return Mat.from_columns([[1, 0]], rows = 2)


def test_relative_hl_cokernel_witness():

    results = check_relative_hl(_OneRowGr(), None)
    failed = [r for r in results if not r.ok]

    assert [r.bidegree for r in failed] == [(0, 0)]
    assert failed[0].witness.entries == (0, 1)
    assert 'not surjective' in failed[0].detail
    assert failed[0].to_dict()['witness'] == ['0', '1']
