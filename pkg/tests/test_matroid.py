import os

import pytest

from lefmod._errors import MatroidError
from lefmod.matroid import (
    fano,
    flats,
    catalog,
    graphic,
    uniform,
    top_heavy,
    read_bases,
    flat_label,
    parse_bases,
    from_vectors,
    catalog_entry,
    mobius_algebra,
    matroid_from_spec,
)

def test_fano_flats():

    lattice = flats(fano())

    assert lattice.counts == (1, 7, 7, 1)
    assert lattice.bottom() == frozenset()
    assert lattice.top() == frozenset(range(1, 8))
    assert frozenset({1, 2, 3}) in lattice.by_rank[2]


def test_uniform_flats():

    lattice = flats(uniform(2, 3))

    assert lattice.counts == (1, 3, 1)
    assert lattice.join(frozenset({1}), frozenset({2})) == frozenset({1, 2, 3})


def test_read_bases(datadir):

    matroid = read_bases(os.path.join(datadir, 'fano.bases'))

    assert matroid.n == 7
    assert matroid.rank == 3
    assert matroid.bases == fano().bases


def test_parse_bases_comments():

    matroid = parse_bases('# U2,3\n1 2\n\n1 3  # second\n2 3\n')

    assert matroid.bases == uniform(2, 3).bases


def test_parse_bases_not_integer():

    with pytest.raises(MatroidError) as err:

        parse_bases('1 2\n1 x\n')

    assert err.value.location == 'line 2'


def test_bases_different_sizes():

    with pytest.raises(MatroidError):

        parse_bases('1 2\n3\n')


def test_basis_exchange_fails():

    with pytest.raises(MatroidError):

        parse_bases('1 2\n3 4\n')


def test_missing_bases_file(testtmp):

    with pytest.raises(MatroidError):

        read_bases(os.path.join(testtmp, 'nothing.bases'))


def test_uniform_bad_rank():

    with pytest.raises(MatroidError):

        uniform(3, 2)


def test_graphic_triangle():

    matroid = graphic([(1, 2), (2, 3), (1, 3)])

    assert matroid.rank == 2
    assert matroid.bases == uniform(2, 3).bases


def test_from_vectors():

    matroid = from_vectors([[1, 0], [0, 1], [1, 1], [2, 2]])

    assert matroid.rank == 2
    assert frozenset({3, 4}) not in matroid.bases
    assert matroid.closure({3}) == frozenset({3, 4})


def test_unknown_kind():

    with pytest.raises(MatroidError):

        matroid_from_spec({'kind': 'paving'})


def test_catalog_top_heavy():

    for matroid in catalog(max_size = 6) + [fano()]:

        report = top_heavy(flats(matroid))

        assert report.ok, matroid.name
        assert report.checked > 0


def test_catalog_entry():

    lattice = flats(catalog_entry('K4'))

    assert lattice.counts == (1, 6, 7, 1)

    with pytest.raises(MatroidError):

        catalog_entry('no-such-matroid')


def test_flat_label():

    assert flat_label(frozenset(), 0, 7) == '1'
    assert flat_label(frozenset({3, 1}), 2, 7) == 'y13'
    assert flat_label(frozenset({1, 10}), 2, 12) == 'y1_10'


def test_mobius_algebra_products():

    algebra, deg = mobius_algebra(flats(fano()))

    assert algebra.dims == (1, 7, 7, 1)
    assert deg == [1]
    assert algebra.multiply(
        algebra.element('y1'),
        algebra.element('y2'),
    ) == algebra.element('y123')
    assert algebra.multiply(
        algebra.element('y1'),
        algebra.element('y1'),
    ).is_zero()
