import random

import pytest

from lefmod._errors import PreconditionError
from lefmod.exactlin import Mat, nilpotent_profile
from lefmod.graded import sample_points, nilpotent_module
from lefmod.perverse import (
    build_gr,
    one_dim_layer,
    gr_descent_maps,
    perverse_filtration,
    check_ell_independence,
    profile_filtration_dims,
    check_filtration_invariants,
)

def _ell(instance):

    sub = instance.subalgebra

    return sub.to_parent(sample_points(sub.cone(), count = 1)[0])


def test_fano_filtration_dims(fano_ex34):

    filtration = perverse_filtration(fano_ex34.module, _ell(fano_ex34))

    assert [filtration.dim(j) for j in (1, 2, 3, 4)] == [0, 1, 15, 16]
    assert filtration.dim(6) == 16
    assert not filtration.is_trivial()


def test_fano_eta_in_p2(fano_ex34):

    filtration = perverse_filtration(fano_ex34.module, _ell(fano_ex34))
    eta = fano_ex34.algebra.parse('y1 - y2 + y3 - y4 + y5 - y6 + y7')
    piece = filtration.piece(1, 2)

    assert piece.dim == 1
    assert piece.contains(fano_ex34.algebra.component(eta, 1))


def test_trivial_filtration(fano):

    ell = sample_points(fano.cone, count = 1)[0]
    filtration = perverse_filtration(fano.module, ell)

    assert filtration.is_trivial()
    assert filtration.dims(3) == fano.module.dims


def test_ell_independence(fano_ex34):

    sub = fano_ex34.subalgebra
    ells = [
        sub.to_parent(p)
        for p in sample_points(sub.cone(), count = 3)
    ]
    result = check_ell_independence(fano_ex34.module, ells)

    assert result.equal
    assert not result.differences
    assert result.to_dict()['equal'] is True


def test_ell_independence_needs_two(fano_ex34):

    with pytest.raises(PreconditionError):

        check_ell_independence(fano_ex34.module, [_ell(fano_ex34)])


def test_filtration_invariants(fano_ex34):

    filtration = perverse_filtration(fano_ex34.module, _ell(fano_ex34))

    assert check_filtration_invariants(filtration, fano_ex34.subalgebra) == []


def test_gr_dims(fano_ex34):

    module, form = fano_ex34.module, fano_ex34.form
    filtration = perverse_filtration(module, _ell(fano_ex34))
    gr = build_gr(module, form, filtration, fano_ex34.subalgebra)

    assert gr.row_dims(3) == (1, 6, 6, 1)
    assert gr.row_dims(2) == (0, 1, 0, 0)
    assert gr.row_dims(4) == (0, 0, 1, 0)
    assert sum(gr.dim(i, j) for i, j in gr.bidegrees()) == 16


def test_gr_qbar_nondegenerate(fano_ex34):

    module, form = fano_ex34.module, fano_ex34.form
    gr = build_gr(
        module,
        form,
        perverse_filtration(module, _ell(fano_ex34)),
        fano_ex34.subalgebra,
    )

    assert all(gr.qbar(i, j).is_invertible() for i, j in gr.bidegrees())


def _random_nilpotent(rng, dims):

    return [
        Mat.from_rows(
            [
                [rng.choice((0, 0, 1, -1, 2)) for _ in range(dims[i])]
                for _ in range(dims[i + 1])
            ],
            cols = dims[i],
        )
        for i in range(len(dims) - 1)
    ]


def test_annihilator_formula_matches_profile():

    rng = random.Random(0)

    for _ in range(200):

        d = rng.randint(1, 3)
        dims = [rng.randint(0, 3) for _ in range(d + 1)]

        if not sum(dims) or sum(dims) > 10:

            continue

        maps = _random_nilpotent(rng, dims)
        module = nilpotent_module(maps, dims)
        ell = module.algebra.element('l')
        filtration = perverse_filtration(module, ell)
        expected = profile_filtration_dims(nilpotent_profile(maps, dims), d)

        assert {
            (i, j): filtration.piece(i, j).dim
            for i in range(d + 1)
            for j in filtration.levels
        } == expected


def test_one_dim_layer(fano_ex34):

    layer = one_dim_layer(fano_ex34.module, _ell(fano_ex34))

    assert layer.module.dims == (0, 1, 1, 0)


def test_descent_double_quotient(dual_numbers):

    algebra, module, form = dual_numbers
    x = algebra.element('x')
    report = gr_descent_maps(module, form, x, x)

    assert report.ok


def test_descent_fano(fano_ex34):

    ell = _ell(fano_ex34)
    eta = sample_points(fano_ex34.cone, count = 1)[0]
    report = gr_descent_maps(fano_ex34.module, fano_ex34.form, ell, eta)

    assert report.ok
    assert report.checks
