from fractions import Fraction

import pytest

from lefmod._errors import DimensionMismatchError, InconsistentSystemError
from lefmod.exactlin import (
    X,
    Mat,
    Subspace,
    rat,
    rat_str,
    min_poly,
    signature,
    diagonalize,
    factor_over_q,
    nilpotent_profile,
)

def test_rat():

    assert rat('-3/4') == Fraction(-3, 4)
    assert rat(2) == Fraction(2)
    assert rat_str(Fraction(6, 4)) == '3/2'

    with pytest.raises(TypeError):

        rat(0.5)


def test_rank_and_solve():

    m = Mat.from_rows([[1, 2], [3, 4]])
    rhs = Mat.vector([5, 6])
    x = m.solve(rhs)

    assert m.rank() == 2
    assert m @ x == rhs
    assert m @ m.inverse() == Mat.identity(2)


def test_solve_inconsistent():

    m = Mat.from_rows([[1, 1], [2, 2]])

    with pytest.raises(InconsistentSystemError):

        m.solve(Mat.vector([1, 0]))


def test_shape_mismatch():

    with pytest.raises(DimensionMismatchError):

        Mat.identity(2) @ Mat.identity(3)

    assert issubclass(DimensionMismatchError, ValueError)


def test_kernel_image():

    m = Mat.from_rows([[1, 1, 0], [0, 0, 1]])
    kernel = m.kernel()

    assert kernel.dim == 1
    assert kernel.contains(Mat.vector([1, -1, 0]))
    assert m.image() == Subspace.full(2)


def test_subspace_canonical():

    a = Subspace.span([[1, 1, 0], [0, 1, 1]])
    b = Subspace.span([[1, 2, 1], [1, 0, -1]])

    assert a == b
    assert a.dim == 2


def test_subspace_lattice_ops():

    a = Subspace.span([[1, 0, 0], [0, 1, 0]])
    b = Subspace.span([[0, 1, 0], [0, 0, 1]])

    assert (a & b) == Subspace.span([[0, 1, 0]])
    assert (a + b).is_full()
    assert (a & b) <= a
    assert not a <= b


def test_complete_to():

    a = Subspace.span([[1, 1, 0]])
    extra = a.complete_to(Subspace.full(3))

    assert extra.cols == 2
    assert (a + Subspace.span(extra)).is_full()


def test_complete_to_subspace():

    a = Subspace.span([[1, 0, 0, 0]])
    b = Subspace.span([[1, 0, 0, 0], [0, 1, 1, 0], [0, 0, 0, 1]])
    extra = a.complete_to(b)

    assert extra.cols == 2
    assert a + Subspace.span(extra, ambient_dim = 4) == b
    assert a.complete_to(a).cols == 0


def test_preimage():

    m = Mat.from_rows([[1, 0], [0, 0]])
    target = Subspace.zero(2)

    assert m.kernel() == target.preimage_under(m)


def test_signature_indefinite():

    s = Mat.from_rows([[0, 1], [1, 0]])
    inertia = signature(s)

    assert tuple(inertia) == (1, 1, 0)
    assert inertia.value == 0


def test_diagonalize_congruence():

    s = Mat.from_rows([[2, 1, 0], [1, 0, 3], [0, 3, -1]])
    t, diag = diagonalize(s)

    assert t.T @ s @ t == Mat.diagonal(diag)
    assert t.is_invertible()


def test_signature_degenerate():

    inertia = signature(Mat.from_rows([[1, 1], [1, 1]]))

    assert tuple(inertia) == (1, 0, 1)
    assert not inertia.is_positive_definite()


def test_min_poly_rotation():

    rot = Mat.from_rows([[0, -1], [1, 0]])
    p = min_poly(rot)

    assert p.as_expr() == X ** 2 + 1
    assert len(factor_over_q(p)) == 1


def test_min_poly_sqrt2():

    m = Mat.from_rows([[0, 1], [1, 2]])
    p = min_poly(m - Mat.identity(2))

    assert p.as_expr() == X ** 2 - 2


def test_min_poly_split():

    m = Mat.diagonal([1, 1, 2])

    assert min_poly(m).as_expr().expand() == X ** 2 - 3 * X + 2


def test_nilpotent_profile():

    # one chain 0 → 1 → 2 and one chain of length one in degree 1
    maps = [
        Mat.from_rows([[1], [0]]),
        Mat.from_rows([[1, 0]]),
    ]
    profile = nilpotent_profile(maps)

    assert profile.as_set() == {(2, 0, 1), (0, 1, 1)}
    assert profile.dims(2) == (1, 2, 1)
    assert profile.total_dim == 4
