from lefmod.exactlin import Mat
from lefmod.cli import load_instance
from lefmod.kahler import (
    CAVEAT,
    check_hl,
    check_hr,
    check_pd,
    verify_witness,
    check_kahler_package,
)

def test_fano_passes(fano):

    cert = check_kahler_package(fano.module, fano.form, fano.cone, samples = 5)

    assert cert.ok
    assert cert.pd_ok
    assert len(cert.points) == 5
    assert cert.caveat == CAVEAT


def test_fano_hl_fails_at_y1(fano):

    ell = fano.algebra.element('y1')
    results = check_hl(fano.module, ell, 0)
    failed = [r for r in results if not r.ok]

    assert failed
    assert failed[0].witness is not None
    assert verify_witness(failed[0], fano.module, fano.form, ell)


def test_fano_hl_witness_in_kernel(fano):

    ell = fano.algebra.element('y1')
    res = next(r for r in check_hl(fano.module, ell) if not r.ok)
    d = fano.module.degree
    k = res.witness_degree
    power = fano.module.power(ell, d - 2 * k, k)

    assert (power @ res.witness).is_zero()
    assert not res.witness.is_zero()


def test_hr_precondition(fano):

    ell = fano.algebra.element('y1')
    hr = check_hr(fano.module, fano.form, ell)

    assert any(not r.precondition for r in hr)


def test_pd(dual_numbers):

    algebra, module, form = dual_numbers

    assert all(r.ok for r in check_pd(module, form))


def test_truncated_polynomial_kahler(dual_numbers):

    algebra, module, form = dual_numbers
    cert = check_kahler_package(
        module,
        form,
        samples = [algebra.element('x'), algebra.element('3*x')],
    )

    assert cert.ok
    assert cert.point_labels == ['x', '3*x']


def test_inertia_recorded(dual_numbers):

    algebra, module, form = dual_numbers
    hr = check_hr(module, form, algebra.element('x'))

    assert tuple(hr[0].inertia) == (1, 0, 0)


def test_endomorphism_fixtures_pass():

    for name in ('endC', 'endH', 'lorentz3'):

        instance = load_instance(name)
        cert = check_kahler_package(
            instance.module,
            instance.form,
            instance.cone,
            samples = 5,
        )

        assert cert.ok, name


def test_indefinite_fails():

    instance = load_instance('indefinite')
    cert = check_kahler_package(
        instance.module,
        instance.form,
        instance.cone,
        samples = 3,
    )

    assert not cert.ok
    assert not cert.hl_ok(0)
    assert cert.hl_ok(1) and cert.hr_ok(1)
    assert not cert.hr_ok(2)

    failure = next(r for r in cert.select('HR', 2) if not r.ok)

    assert failure.witness is not None
    assert failure.inertia.n_minus == 1


def test_certificate_to_dict(dual_numbers):

    algebra, module, form = dual_numbers
    cert = check_kahler_package(module, form, samples = [algebra.element('x')])
    out = cert.to_dict()

    assert out['ok'] is True
    assert out['points'] == ['x']
    assert {r['check'] for r in out['results']} == {'PD', 'HL', 'HR'}


def test_witness_vector_not_zero(fano):

    ell = fano.algebra.element('y1')
    res = next(r for r in check_hl(fano.module, ell) if not r.ok)

    assert res.witness.shape == (fano.module.dim(res.witness_degree), 1)
    assert res.witness != Mat.zeros(*res.witness.shape)
