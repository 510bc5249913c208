from fractions import Fraction

import pytest

from lefmod._errors import (
    ValidationError,
    PreconditionError,
    AlgebraValidationError,
    ModuleValidationError,
)
from lefmod.exactlin import Mat
from lefmod.graded import (
    Cone,
    descend,
    shift_sum,
    make_module,
    make_algebra,
    sample_points,
    regular_module,
    nilpotent_module,
    subalgebra_generated,
    truncated_polynomial_algebra,
)

def test_truncated_polynomial_algebra():

    algebra = truncated_polynomial_algebra(3)
    ell = algebra.element('l')

    assert algebra.dims == (1, 1, 1, 1)
    assert algebra.power(ell, 3) == algebra.element('l^3')
    assert algebra.power(ell, 4).is_zero()


def test_parse_expression():

    algebra = truncated_polynomial_algebra(2)
    u = algebra.parse('2*l - 1/2*l^2')

    assert u.entries[1] == 2
    assert u.entries[2] == Fraction(-1, 2)
    assert algebra.format(algebra.element('l')) == 'l'


def test_not_commutative():

    spec = {
        'dims': [1, 2, 1],
        'labels': ['1', 'a', 'b', 't'],
        'products': {('a', 'b'): {'t': 1}, ('b', 'a'): {'t': 2}},
    }

    with pytest.raises(AlgebraValidationError) as err:

        make_algebra(spec)

    assert err.value.triple == ('b', 'a')


def test_product_outside_degree():

    spec = {
        'dims': [1, 1, 1],
        'labels': ['1', 'x', 'y'],
        'products': {'x*x': {'x': 1}},
    }

    with pytest.raises(AlgebraValidationError):

        make_algebra(spec)


def test_regular_module(dual_numbers):

    algebra, module, form = dual_numbers

    assert module.dims == (1, 1, 1)
    assert module.degree == 2
    assert form.block(0) == Mat.from_rows([[1]])
    assert form.block(1) == Mat.from_rows([[1]])


def test_module_not_a_homomorphism():

    algebra = truncated_polynomial_algebra(2)

    with pytest.raises(ModuleValidationError):

        make_module(
            algebra,
            [1, 1, 1],
            {'l': [[[1]], [[0]], []], 'l^2': [[[1]], [], []]},
        )


def test_module_bad_shape():

    algebra = truncated_polynomial_algebra(1)

    with pytest.raises(ModuleValidationError):

        make_module(algebra, [1, 1], {'l': [[[1, 0]], []]})


def test_nilpotent_module():

    module = nilpotent_module([Mat.from_rows([[1]]), Mat.from_rows([[1]])])

    assert module.dims == (1, 1, 1)
    assert module.power(module.algebra.element('l'), 2, 0) == Mat.identity(1)


def test_generator_sums():

    algebra = truncated_polynomial_algebra(2)
    cone = Cone.from_specs(algebra, ['l'])
    points = sample_points(cone, count = 3)

    assert [p.entries[1] for p in points] == [1, 2, 3]


def test_sample_points_deterministic(fano):

    first = sample_points(fano.cone, count = 5)
    second = sample_points(fano.cone, count = 5)

    assert first == second
    assert len(set(first)) == 5


def test_sample_style_unknown(fano):

    with pytest.raises(ValidationError):

        sample_points(fano.cone, style = 'random')


def test_relative_sampling_needs_subalgebra(fano):

    with pytest.raises(PreconditionError):

        sample_points(fano.cone, style = 'relative')


def test_relative_sampling(u23):

    points = sample_points(
        u23.cone,
        style = 'relative',
        count = 3,
        subalgebra = u23.subalgebra,
    )
    algebra = u23.algebra

    assert points[0] == algebra.parse('y1 + y2 + y3')
    assert points[1] == algebra.parse('y2 + y3 - y1')
    assert points[2] == algebra.parse('2*y1 + y2 + y3')


def test_relative_sampling_directions(fano_ex34):

    points = sample_points(
        fano_ex34.cone,
        style = 'relative',
        count = 3,
        subalgebra = fano_ex34.subalgebra,
    )
    algebra = fano_ex34.algebra
    base = algebra.parse('y1 + y2 + y3 + y4 + y5 + y6 + y7')

    assert points[0] == base
    assert points[1] == base - algebra.parse('2*y1')
    assert points[2] == base + algebra.parse('y3')


def test_subalgebra_generated(fano_ex34):

    sub = fano_ex34.subalgebra

    assert sub.dims[:2] == (1, 4)
    assert sub.contains(fano_ex34.algebra.element('y1'))
    assert not sub.contains(fano_ex34.algebra.element('y2'))


def test_subalgebra_restrict(fano_ex34):

    sub = fano_ex34.subalgebra
    restricted = sub.restrict(fano_ex34.module)

    assert restricted.algebra is sub.algebra
    assert restricted.dims == fano_ex34.module.dims


def test_subalgebra_generator_degree(fano):

    with pytest.raises(ValidationError):

        subalgebra_generated(fano.algebra, ['y123'], ['y123'])


def test_descend(dual_numbers):

    algebra, module, form = dual_numbers
    descent = descend(module, form, algebra.element('x'))

    assert descent.module.dims == (1, 1)
    assert descent.form.block(0) == Mat.from_rows([[1]])


def test_shift_sum(dual_numbers):

    algebra, module, form = dual_numbers
    total = shift_sum([module, module], [0, 1])

    assert total.total_dim == 6
    assert [total.dim(i) for i in range(4)] == [1, 2, 2, 1]


def test_regular_module_degree_map():

    algebra = make_algebra({
        'dims': [1, 1],
        'labels': ['1', 'x'],
    })
    module, form = regular_module(algebra, [2])

    assert form.block(0) == Mat.from_rows([[2]])
