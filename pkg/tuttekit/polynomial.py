"""Exact integer polynomials in x and y.

Polynomials wrap `sympy.Poly` over the integers, so every coefficient is an
arbitrary precision integer and no floating point is involved.
"""
from typing import Dict, List, Mapping, Optional, Tuple

import sympy as sp

x, y = sp.symbols('x y')

Monomial = Tuple[int, int]


class UnivariatePolynomial:
    """Integer polynomial in one variable, e.g. T(1, y) or T(x, 1)."""

    def __init__(self, poly: sp.Poly):
        self._poly = poly

    @classmethod
    def from_dict(cls, coeffs: Mapping[int, int], gen=y):
        clean = {(int(d),): int(c) for d, c in coeffs.items() if c}
        if not clean:
            return cls(sp.Poly(0, gen, domain=sp.ZZ))
        return cls(sp.Poly.from_dict(clean, gen, domain=sp.ZZ))

    @property
    def coeffs(self) -> Dict[int, int]:
        return {int(d): int(c)
                for (d,), c in self._poly.as_dict().items() if c}

    def coefficient(self, degree: int) -> int:
        """The coefficient of `gen**degree`; zero outside the support."""
        return self.coeffs.get(degree, 0)

    def __getitem__(self, degree):
        return self.coefficient(degree)

    @property
    def degree(self) -> Optional[int]:
        if self._poly.is_zero:
            return None
        return int(self._poly.degree())

    def __eq__(self, other):
        if isinstance(other, UnivariatePolynomial):
            return self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self.coeffs.items()))

    def lines(self) -> List[str]:
        return [f'{d} {c}' for d, c in sorted(self.coeffs.items())]

    def __str__(self):
        return str(self._poly.as_expr())

    def __repr__(self):
        return f'UnivariatePolynomial({self})'


class BivariatePolynomial:
    """Sparse integer polynomial in x and y.

    The Tutte polynomial `T_M(x, y)` is held as a `BivariatePolynomial`;
    `coeffs[(i, j)]` is the coefficient of `x**i * y**j`. Zero coefficients
    are never reported.
    """

    def __init__(self, poly: Optional[sp.Poly] = None):
        if poly is None:
            poly = sp.Poly(0, x, y, domain=sp.ZZ)
        self._poly = poly

    @classmethod
    def from_dict(cls, coeffs: Mapping[Monomial, int]):
        clean = {(int(i), int(j)): int(c)
                 for (i, j), c in coeffs.items() if c}
        if not clean:
            return cls()
        return cls(sp.Poly.from_dict(clean, x, y, domain=sp.ZZ))

    @classmethod
    def from_expr(cls, expr):
        return cls(sp.Poly(expr, x, y, domain=sp.ZZ))

    @classmethod
    def monomial(cls, i: int, j: int, coefficient: int = 1):
        return cls.from_dict({(i, j): coefficient})

    @property
    def coeffs(self) -> Dict[Monomial, int]:
        return {(int(i), int(j)): int(c)
                for (i, j), c in self._poly.as_dict().items() if c}

    def coefficient(self, i: int, j: int) -> int:
        return self.coeffs.get((i, j), 0)

    @property
    def is_zero(self) -> bool:
        return bool(self._poly.is_zero)

    def is_nonnegative(self) -> bool:
        return all(c > 0 for c in self.coeffs.values())

    def total_degree(self) -> Optional[int]:
        if self.is_zero:
            return None
        return int(self._poly.total_degree())

    def __add__(self, other: 'BivariatePolynomial'):
        return BivariatePolynomial(self._poly + other._poly)

    def __mul__(self, other: 'BivariatePolynomial'):
        return BivariatePolynomial(self._poly * other._poly)

    def __eq__(self, other):
        if isinstance(other, BivariatePolynomial):
            return self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self.coeffs.items()))

    def swap(self) -> 'BivariatePolynomial':
        """P(y, x)."""
        return BivariatePolynomial.from_dict(
            {(j, i): c for (i, j), c in self.coeffs.items()}
        )

    def specialize_x_at_1(self) -> UnivariatePolynomial:
        expr = self._poly.as_expr().subs(x, 1)
        return UnivariatePolynomial(sp.Poly(expr, y, domain=sp.ZZ))

    def specialize_y_at_1(self) -> UnivariatePolynomial:
        expr = self._poly.as_expr().subs(y, 1)
        return UnivariatePolynomial(sp.Poly(expr, x, domain=sp.ZZ))

    def evaluate(self, at_x: int, at_y: int) -> int:
        return int(self._poly(at_x, at_y))

    def lines(self) -> List[str]:
        """Bit-exact term listing, `"<i> <j> <coefficient>"` per term."""
        return [f'{i} {j} {c}' for (i, j), c in sorted(self.coeffs.items())]

    def __str__(self):
        return str(self._poly.as_expr())

    def __repr__(self):
        return f'BivariatePolynomial({self})'


def specialize_x_at_1(poly: BivariatePolynomial) -> UnivariatePolynomial:
    return poly.specialize_x_at_1()


def specialize_y_at_1(poly: BivariatePolynomial) -> UnivariatePolynomial:
    return poly.specialize_y_at_1()


def evaluate(poly: BivariatePolynomial, at_x: int, at_y: int) -> int:
    return poly.evaluate(at_x, at_y)
