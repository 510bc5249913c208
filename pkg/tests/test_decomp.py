import pytest

from lefmod.cli import load_instance
from lefmod.graded import make_module, sample_points
from lefmod.kahler import check_hr, check_kahler_package
from lefmod.exactlin import Mat, Subspace
from lefmod._errors import NotIndecomposableError
from lefmod.decomp import (
    _split,
    hr_sign,
    decompose,
    hom_space,
    end_algebra,
    split_module,
    induced_form,
    is_isomorphic,
    restricted_form,
    middle_socle_ok,
    classify_division,
)

EX34 = 'y1,y3,y5,y7'
EX35 = 'y1,y3+y5,y2+y4+y6+y7'


def test_fano_ex34_summands(fano_ex34):

    report = decompose(
        fano_ex34.module,
        fano_ex34.subalgebra,
        fano_ex34.form,
    )

    assert len(report.summands) == 3
    assert len(report.classes) == 2
    assert report.multiset() == [
        ((1,), 1, 1),
        ((1,), 2, 1),
        ((1, 6, 6, 1), 0, 1),
    ]
    assert report.dimensions_ok()
    assert report.multiplicities_ok()
    assert report.hom_vanishing_ok()


def test_fano_ex34_eta_summand(fano_ex34):

    report = decompose(fano_ex34.module, fano_ex34.subalgebra)
    algebra = fano_ex34.algebra
    eta = algebra.component(
        algebra.parse('y1 - y2 + y3 - y4 + y5 - y6 + y7'),
        1,
    )
    summand = next(s for s in report.summands if s.shift == 1)

    assert summand.dims == (1,)
    assert summand.span(1).contains(eta)


def test_fano_ex35_classes(fano_ex35):

    report = decompose(
        fano_ex35.module,
        fano_ex35.subalgebra,
        fano_ex35.form,
    )

    assert report.multiset() == [
        ((1, 5, 5, 1), 0, 1),
        ((2, 2), 1, 1),
    ]
    assert report.dimensions_ok()
    assert report.multiplicities_ok()


def test_report_to_dict(fano_ex34):

    report = decompose(
        fano_ex34.module,
        fano_ex34.subalgebra,
        fano_ex34.form,
        seed = 4,
    )
    data = report.to_dict()

    assert data['seed'] == 4
    assert data['dimensions_ok'] is True
    assert len(data['summands']) == 3
    assert data['classes'][0]['division'] == 'R'


@pytest.mark.parametrize(
    'name, tag, dim',
    [
        ('endC', 'C', 2),
        ('endH', 'H', 4),
        ('sqrt2', 'other', 2),
    ],
)
def test_division_types(name, tag, dim):

    instance = load_instance(name)
    report = decompose(instance.module, instance.acting_subalgebra())

    assert len(report.classes) == 1
    assert report.classes[0].division.tag == tag
    assert report.classes[0].division.dim == dim


def test_division_type_str():

    instance = load_instance('sqrt2')
    division = classify_division(end_algebra(instance.module))

    assert str(division) == 'other(2, x**2 - 2)'


def test_hom_space_dual_numbers(dual_numbers):

    _, module, _ = dual_numbers

    assert len(hom_space(module, module, 0)) == 1
    assert len(hom_space(module, module, -1)) == 1
    assert len(hom_space(module, module, -2)) == 1
    assert len(hom_space(module, module, -3)) == 0


def test_end_algebra_local(dual_numbers):

    _, module, _ = dual_numbers
    end = end_algebra(module)

    assert end.dim == 1
    assert end.is_local()
    assert str(classify_division(end)) == 'R'


def test_is_isomorphic(dual_numbers):

    algebra, module, _ = dual_numbers
    trivial = make_module(algebra, [1, 1, 1], {})

    assert is_isomorphic(module, module)
    assert not is_isomorphic(module, trivial)


@pytest.mark.parametrize(
    'name, generators',
    [
        ('fano', None),
        ('fano', EX34),
        ('fano', EX35),
        ('u23', None),
        ('u23', 'y1'),
        ('endC', None),
        ('endH', None),
        ('sqrt2', None),
        ('lorentz3', None),
    ],
)
def test_decomposition_invariants(name, generators):

    instance = load_instance(name, subalgebra = generators)
    sub = instance.acting_subalgebra()
    reports = [decompose(instance.module, sub, seed = seed) for seed in range(5)]

    assert len({tuple(r.multiset()) for r in reports}) == 1

    for report in reports:

        assert report.dimensions_ok()
        assert report.hom_vanishing_ok()


def _summand(report, dims):

    return next(s for s in report.summands if s.dims == dims)


def test_fano_ex35_summand_form(fano_ex35):

    algebra, form = fano_ex35.algebra, fano_ex35.form
    report = decompose(fano_ex35.module, fano_ex35.subalgebra, form)
    summand = _summand(report, (2, 2))
    u = Mat.hstack([
        algebra.component(algebra.parse('y3 - y5'), 1),
        algebra.component(algebra.parse('y2 - y6'), 1),
    ])
    emb = summand.embedding[1]
    coords = u.solve(emb)

    assert summand.shift == 1
    assert summand.span(1) == Subspace.span(u, ambient_dim = u.rows)

    for a, b, c in [(1, 1, 1), (1, 2, 3), (5, 1, 2), (2, 7, 1)]:

        ell = algebra.parse(
            f'{a}*y1 + {b}*y3 + {b}*y5 + '
            f'{c}*y2 + {c}*y4 + {c}*y6 + {c}*y7'
        )
        gram = emb.T @ form.block(1) @ fano_ex35.module.action(ell, 1) @ emb
        expected = Mat.from_rows([
            [a + 3 * c, a - c],
            [a - c, a + 2 * b + c],
        ])

        assert gram == (coords.T @ expected @ coords).scale(-2)


def test_fano_ex35_restricted_form(fano_ex35):

    report = decompose(
        fano_ex35.module,
        fano_ex35.subalgebra,
        fano_ex35.form,
    )
    summand = _summand(report, (2, 2))
    restricted = restricted_form(summand, fano_ex35.form)
    points = sample_points(fano_ex35.subalgebra.cone(), style = 'lattice', count = 4)

    assert restricted.block(0) == (
        summand.embedding[1].T @
        fano_ex35.form.block(1) @
        summand.embedding[2]
    )
    assert check_kahler_package(summand.module, restricted.negated(), samples = points).ok
    assert not check_kahler_package(summand.module, restricted, samples = points).ok


def test_fano_ex34_restricted_form(fano_ex34):

    report = decompose(fano_ex34.module, fano_ex34.subalgebra)
    big = _summand(report, (1, 6, 6, 1))
    small = next(s for s in report.summands if s.shift == 1)
    points = sample_points(fano_ex34.subalgebra.cone(), count = 3)
    restricted = restricted_form(big, fano_ex34.form)

    assert restricted_form(small, fano_ex34.form) is None
    assert check_kahler_package(big.module, restricted, samples = points).ok


def test_fano_ex35_class_form(fano_ex35):

    report = decompose(
        fano_ex35.module,
        fano_ex35.subalgebra,
        fano_ex35.form,
    )
    cls = next(c for c in report.classes if c.module.dims == (2, 2))
    points = sample_points(fano_ex35.subalgebra.cone(), style = 'lattice', count = 4)

    assert cls.form_space_dim == 1
    assert cls.form_nondegenerate
    assert cls.epsilon in (1, -1)
    assert hr_sign(cls.module, cls.form, points) == cls.epsilon

    for idx, ell in enumerate(points):

        signed = cls.form.scaled(cls.epsilon)

        assert all(r.ok for r in check_hr(cls.module, signed, ell, idx))


def test_sqrt2_form_space():

    instance = load_instance('sqrt2')
    report = decompose(
        instance.module,
        instance.acting_subalgebra(),
        instance.form,
    )
    cls = report.classes[0]

    assert cls.form_space_dim == 2
    assert cls.form is None
    assert cls.epsilon is None
    assert induced_form(instance.module).space_dim == 2


def test_induced_form_dual_numbers(dual_numbers):

    _, module, form = dual_numbers
    induced = induced_form(module)

    assert induced.space_dim == 1
    assert induced.nondegenerate
    assert induced.form.blocks == form.blocks


def test_hr_sign_dual_numbers(dual_numbers):

    algebra, module, form = dual_numbers
    points = [algebra.parse('x'), algebra.parse('2*x')]

    assert hr_sign(module, form, points) == 1
    assert hr_sign(module, form.negated(), points) == -1


def test_middle_socle(dual_numbers, fano_ex34):

    algebra, module, _ = dual_numbers
    trivial = make_module(algebra, [1, 1, 1], {})
    report = decompose(fano_ex34.module, fano_ex34.subalgebra)

    assert middle_socle_ok(module) is True
    assert middle_socle_ok(trivial) is False
    assert middle_socle_ok(_summand(report, (1, 6, 6, 1)).module) is None
    assert middle_socle_ok(_summand(report, (1,)).module) is None


def test_split_module_unsplit_summand(dual_numbers, monkeypatch):

    algebra, _, _ = dual_numbers
    trivial = make_module(algebra, [1, 1, 1], {})

    assert len(split_module(trivial)) == 3

    monkeypatch.setattr(_split, '_primary_split', lambda module, z: None)

    with pytest.raises(NotIndecomposableError):

        split_module(trivial)
