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
Graded Artinian Gorenstein algebras cogenerated by a homogeneous form.

The algebra is ℚ[x_1, …, x_n] modulo the annihilator of f, the forms
acting on f by differentiation. It is computed degree by degree from the
catalecticant matrices of f.
"""

from __future__ import annotations

__all__ = [
    'CogeneratedAlgebra',
    'catalecticant',
    'cogenerate',
    'lorentz_check',
    'monomials',
    'parse_form',
]

import math
import itertools
from fractions import Fraction
from dataclasses import dataclass
from collections.abc import Mapping, Sequence

import sympy as sp

from lefmod._session import _log
from lefmod._errors import ValidationError
from lefmod.exactlin import Mat, Subspace, rat
from lefmod.graded import Cone, GradedAlgebra, make_algebra, regular_module
from lefmod.kahler import KahlerCertificate, check_kahler_package

Exponent = tuple[int, ...]


def monomials(n: int, k: int) -> list[Exponent]:
    """
    Exponent vectors of degree k in n variables, x_1 first.
    """

    return sorted(
        (
            tuple(combo.count(i) for i in range(n))
            for combo in itertools.combinations_with_replacement(range(n), k)
        ),
        reverse = True,
    )


def _multinomial(a: Exponent) -> int:

    return math.factorial(sum(a)) // math.prod(math.factorial(e) for e in a)


def _label(a: Exponent) -> str:

    if not any(a):

        return '1'

    return ''.join(
        f'x{i + 1}' + (f'^{e}' if e > 1 else '')
        for i, e in enumerate(a)
        if e
    )


def parse_form(
        f: str | sp.Expr | sp.Poly | Mapping | Sequence,
        n: int | None = None,
    ) -> tuple[dict[Exponent, Fraction], int]:
    """
    Coefficients of a form by exponent vector, and the number of variables.

    Args:
        f:
            A polynomial in ``w1, …, wn`` (text or sympy), a mapping from
            exponent vectors to coefficients or a list of
            ``(exponents, coefficient)`` pairs.
        n:
            Number of variables; inferred if not given.
    """

    if isinstance(f, (str, sp.Expr, sp.Poly)):

        expr = sp.sympify(f) if isinstance(f, str) else f
        expr = expr.as_expr() if isinstance(expr, sp.Poly) else expr
        used = [
            int(s.name[1:]) for s in expr.free_symbols
            if s.name.startswith('w') and s.name[1:].isdigit()
        ]

        if len(used) != len(expr.free_symbols):

            raise ValidationError(
                'form variables must be named w1, …, wn',
                location = str(f),
            )

        n = max(used, default = 1) if n is None else n
        symbols = sp.symbols(f'w1:{n + 1}')
        poly = sp.Poly(expr, *symbols, domain = sp.QQ)
        coeffs = {
            tuple(a): Fraction(int(c.p), int(c.q))
            for a, c in poly.terms()
        }

    else:

        pairs = f.items() if isinstance(f, Mapping) else f
        coeffs = {}

        for a, c in pairs:

            a = tuple(int(e) for e in a)
            coeffs[a] = coeffs.get(a, Fraction(0)) + rat(c)

        n = max((len(a) for a in coeffs), default = 0) if n is None else n

    coeffs = {a: c for a, c in coeffs.items() if c}

    if any(len(a) != n for a in coeffs):

        raise ValidationError('exponent vectors of different lengths', 'f')

    return coeffs, n


def catalecticant(
        values: Mapping[Exponent, Fraction],
        n: int,
        d: int,
        k: int,
    ) -> Mat:
    """
    Rows: monomials of degree k; columns: degree d − k; entries deg(x^{a+b}).
    """

    rows = monomials(n, k)
    cols = monomials(n, d - k)

    return Mat.from_rows(
        [
            [
                values.get(tuple(x + y for x, y in zip(a, b)), Fraction(0))
                for b in cols
            ]
            for a in rows
        ],
        cols = len(cols),
    )


@dataclass(eq = False)
class CogeneratedAlgebra:
    """
    ``basis[k]`` lists the monomials kept as basis of A^k; ``reduce[k]``
    maps monomial coordinates of degree k to coordinates of A^k.
    """

    n: int
    d: int
    f: dict[Exponent, Fraction]
    algebra: GradedAlgebra
    deg_map: list[Fraction]
    basis: tuple[tuple[Exponent, ...], ...]
    reduce: tuple[Mat, ...]

    @property
    def hilbert_function(self) -> tuple[int, ...]:

        return self.algebra.dims


    def monomial(self, a: Sequence[int]) -> Mat:
        """
        The image of x^a in A.
        """

        a = tuple(a)
        k = sum(a)

        if k > self.d:

            return self.algebra.zero()

        column = self.reduce[k].column(monomials(self.n, k).index(a))

        return self.algebra.embed(k, column)


    def variable(self, i: int) -> Mat:
        """
        The image of x_i, 1-based.
        """

        return self.monomial(tuple(int(j == i - 1) for j in range(self.n)))


    def deg(self, u: Mat) -> Fraction:

        top = self.algebra.component(u, self.d)

        return sum(
            (c * v for c, v in zip(top.entries, self.deg_map)),
            Fraction(0),
        )


    def evaluate_power(self, w: Sequence) -> Fraction:
        """
        deg((Σ w_i x_i)^d).
        """

        ell = self.algebra.zero()

        for i, wi in enumerate(w, 1):

            ell = ell + self.variable(i).scale(rat(wi))

        return self.deg(self.algebra.power(ell, self.d))


    def degree_polynomial(self) -> sp.Poly:
        """
        deg((Σ w_i x_i)^d) as a polynomial in w, each deg(x^a) computed
        by multiplying variables in the algebra.
        """

        symbols = sp.symbols(f'w1:{self.n + 1}')
        total = sp.Integer(0)

        for a in monomials(self.n, self.d):

            u = self.algebra.unit()

            for i, e in enumerate(a, 1):

                for _ in range(e):

                    u = self.algebra.multiply(u, self.variable(i))

            value = self.deg(u)
            total += (
                _multinomial(a) *
                sp.Rational(value.numerator, value.denominator) *
                sp.Mul(*(s ** e for s, e in zip(symbols, a)))
            )

        return sp.Poly(total, *symbols, domain = sp.QQ)


    def form_polynomial(self) -> sp.Poly:

        symbols = sp.symbols(f'w1:{self.n + 1}')

        return sp.Poly(
            sum(
                (
                    sp.Rational(c.numerator, c.denominator) *
                    sp.Mul(*(s ** e for s, e in zip(symbols, a)))
                    for a, c in self.f.items()
                ),
                sp.Integer(0),
            ),
            *symbols,
            domain = sp.QQ,
        )


    def regular_module(self):

        return regular_module(self.algebra, self.deg_map)


    def positive_cone(self) -> Cone:
        """
        Positive span of the nonzero images of the variables.
        """

        return Cone(
            self.algebra,
            tuple(
                v for v in (self.variable(i) for i in range(1, self.n + 1))
                if not v.is_zero()
            ),
        )


def cogenerate(
        f,
        n: int | None = None,
        d: int | None = None,
        name: str = '',
    ) -> CogeneratedAlgebra:
    """
    The algebra cogenerated by a homogeneous form f of degree d.

    deg(x^a) on the top degree is the coefficient of w^a in f divided by
    the multinomial coefficient, so that deg((Σ w_i x_i)^d) = f(w).

    Raises:
        ValidationError: If f is zero or not homogeneous of degree d.
    """

    coeffs, n = parse_form(f, n)

    if not coeffs:

        raise ValidationError('the form is zero', 'f')

    degrees = {sum(a) for a in coeffs}

    if len(degrees) != 1 or (d is not None and degrees != {d}):

        raise ValidationError(
            f'form not homogeneous of degree {d}: degrees {sorted(degrees)}',
            'f',
        )

    d = degrees.pop()
    values = {a: c / _multinomial(a) for a, c in coeffs.items()}
    basis, reduce, labels, dims = [], [], [], []

    for k in range(d + 1):

        cat = catalecticant(values, n, d, k)
        mons = monomials(n, k)
        kept, span = [], Subspace.zero(cat.cols)

        for idx, a in enumerate(mons):

            row = Mat.vector(cat.row(idx))

            if not span.contains(row):

                kept.append(idx)
                span = span + Subspace.span([row], cat.cols)

        rows = cat.select_rows(kept)
        reduce.append(rows.T.solve(cat.T))
        basis.append(tuple(mons[i] for i in kept))
        labels.extend(_label(mons[i]) for i in kept)
        dims.append(len(kept))

    products = {}

    for k1, k2 in itertools.product(range(1, d + 1), repeat = 2):

        if k1 + k2 > d:

            continue

        target = monomials(n, k1 + k2)

        for a, b in itertools.product(basis[k1], basis[k2]):

            c = tuple(x + y for x, y in zip(a, b))
            coords = reduce[k1 + k2].column(target.index(c)).entries
            products[_label(a), _label(b)] = {
                _label(t): v
                for t, v in zip(basis[k1 + k2], coords)
                if v
            }

    algebra = make_algebra(
        {'dims': dims, 'labels': labels, 'products': products},
        name = name or 'cogenerated',
    )
    deg_map = [values.get(a, Fraction(0)) for a in basis[d]]
    _log(f'Cogenerated algebra in {n} variables, Hilbert function {tuple(dims)}.')

    return CogeneratedAlgebra(
        n,
        d,
        coeffs,
        algebra,
        deg_map,
        tuple(basis),
        tuple(reduce),
    )


def lorentz_check(
        cogenerated: CogeneratedAlgebra,
        samples: int | Sequence[Mat] = 5,
        style: str = 'generator_sums',
    ) -> KahlerCertificate:
    """
    Kähler package of A over itself on the positive span of the variables.
    """

    module, form = cogenerated.regular_module()

    return check_kahler_package(
        module,
        form,
        cone = cogenerated.positive_cone(),
        samples = samples,
        style = style,
    )
