"""Truncated exact power series and the WDVV check for rational counts.

The genus-zero counts N(d) assemble into the quantum part of the
Gromov-Witten potential of the plane,

    Phi_q(x1, x2) = sum over d >= 1 of N(d) * x2^(3d-1)/(3d-1)! * e^(d x1),

truncated here at x1-degree A and x2-degree 3*d_max - 1.  (The classical
part (x0^2 x2 + x0 x1^2)/2 involves only x0 and drops out of every
derivative taken below; PotentialSpec records it for documentation.)
Associativity of the quantum product is one scalar equation:

    Phi_222 = Phi_112^2 - Phi_111 * Phi_122          (WDVV)

with subscripts denoting partials in x1/x2.  wdvv_residual evaluates the
difference on the window of coefficients that the truncation determines
completely and returns the nonzero ones; the empty list certifies the
identity, and any single wrong N(d) shows up as a nonzero entry.

Truncation discipline: a series carries bounds (bound1, bound2) and only
stores coefficients with exponents inside them.  Sums and products carry
the entrywise minimum of the operand bounds; a partial derivative lowers
the bound of its variable by one.  Coefficients outside the bounds are
unknown rather than zero, which is why the residual is only read on the
window a <= A - 3, b = 3d - 4 for 2 <= d <= d_max.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import factorial

from . import kontsevich

# classical cubic part of the potential, exponents (x0, x1, x2) -> coefficient
CLASSICAL_PART = (
    ((2, 0, 1), Fraction(1, 2)),
    ((1, 2, 0), Fraction(1, 2)),
)


class BivariateSeries:
    """Exact bivariate series truncated at exponent bounds (bound1, bound2).

    Immutable by convention; coefficients are Fractions, absent means
    zero, and nothing is stored outside the bounds.
    """

    __slots__ = ("coeffs", "bound1", "bound2")

    def __init__(self, coeffs=None, *, bound1: int, bound2: int):
        self.bound1 = bound1
        self.bound2 = bound2
        store: dict[tuple[int, int], Fraction] = {}
        for (a, b), value in (coeffs or {}).items():
            if a > bound1 or b > bound2:
                raise ValueError(
                    "coefficient (%d, %d) outside bounds (%d, %d)"
                    % (a, b, bound1, bound2)
                )
            value = Fraction(value)
            if value:
                store[(a, b)] = value
        self.coeffs = store

    def coeff(self, a: int, b: int) -> Fraction:
        return self.coeffs.get((a, b), Fraction(0))

    def items(self):
        """Nonzero coefficients, sorted by exponent pair."""
        return sorted(self.coeffs.items())

    def _merged(self, other, sign: int) -> "BivariateSeries":
        b1 = min(self.bound1, other.bound1)
        b2 = min(self.bound2, other.bound2)
        out: dict[tuple[int, int], Fraction] = {}
        for (a, b), value in self.coeffs.items():
            if a <= b1 and b <= b2:
                out[(a, b)] = value
        for (a, b), value in other.coeffs.items():
            if a <= b1 and b <= b2:
                out[(a, b)] = out.get((a, b), Fraction(0)) + sign * value
        return BivariateSeries(out, bound1=b1, bound2=b2)

    def __add__(self, other):
        return self._merged(other, 1)

    def __sub__(self, other):
        return self._merged(other, -1)

    def __mul__(self, other):
        b1 = min(self.bound1, other.bound1)
        b2 = min(self.bound2, other.bound2)
        out: dict[tuple[int, int], Fraction] = {}
        for (a1, e1), v1 in self.coeffs.items():
            for (a2, e2), v2 in other.coeffs.items():
                a, b = a1 + a2, e1 + e2
                if a > b1 or b > b2:
                    continue  # product exponent truncated away
                out[(a, b)] = out.get((a, b), Fraction(0)) + v1 * v2
        return BivariateSeries(out, bound1=b1, bound2=b2)

    def partial(self, var: int) -> "BivariateSeries":
        """Formal partial derivative; the bound of var drops by one."""
        if var not in (1, 2):
            raise ValueError("variable must be 1 or 2, got %r" % (var,))
        out: dict[tuple[int, int], Fraction] = {}
        for (a, b), value in self.coeffs.items():
            if var == 1 and a > 0:
                out[(a - 1, b)] = value * a
            elif var == 2 and b > 0:
                out[(a, b - 1)] = value * b
        if var == 1:
            return BivariateSeries(out, bound1=self.bound1 - 1, bound2=self.bound2)
        return BivariateSeries(out, bound1=self.bound1, bound2=self.bound2 - 1)

    def __eq__(self, other):
        if not isinstance(other, BivariateSeries):
            return NotImplemented
        return (
            self.coeffs == other.coeffs
            and self.bound1 == other.bound1
            and self.bound2 == other.bound2
        )

    def __repr__(self):
        return "BivariateSeries(%r, bound1=%d, bound2=%d)" % (
            dict(self.items()),
            self.bound1,
            self.bound2,
        )


@dataclass(frozen=True)
class PotentialSpec:
    """Truncation request: counts up to d_max, x1-exponents up to x1_bound."""

    d_max: int
    x1_bound: int
    classical: tuple = field(default=CLASSICAL_PART)

    def __post_init__(self):
        if self.d_max < 1:
            raise ValueError("d_max must be >= 1, got %d" % self.d_max)
        if self.x1_bound < 0:
            raise ValueError("x1_bound must be >= 0, got %d" % self.x1_bound)


def quantum_potential(spec: PotentialSpec, counts=None) -> BivariateSeries:
    """The truncated quantum potential as a BivariateSeries.

    Coefficient of x1^a x2^(3d-1) is N(d) * d^a / (a! * (3d-1)!).  The
    counts argument, a mapping d -> N(d), replaces the computed table
    (fault-injection hook; tests corrupt single entries through it).
    """
    if counts is None:
        counts = dict(kontsevich.rational_table(spec.d_max))
    bound2 = 3 * spec.d_max - 1
    out: dict[tuple[int, int], Fraction] = {}
    for d in range(1, spec.d_max + 1):
        n = counts[d]
        b = 3 * d - 1
        for a in range(spec.x1_bound + 1):
            out[(a, b)] = Fraction(n * d ** a, factorial(a) * factorial(b))
    return BivariateSeries(out, bound1=spec.x1_bound, bound2=bound2)


def wdvv_window(spec: PotentialSpec) -> list[tuple[int, int]]:
    """Exponent pairs the truncation determines completely in the residual.

    Three x1-derivatives cost three orders of x1, so a <= x1_bound - 3;
    every residual monomial sits at b = 3d - 4 for some 2 <= d <= d_max.
    """
    return [
        (a, 3 * d - 4)
        for d in range(2, spec.d_max + 1)
        for a in range(spec.x1_bound - 2)
    ]


def wdvv_residual(spec: PotentialSpec, counts=None):
    """Nonzero residual coefficients of the WDVV identity on the window.

    Returns a list of ((a, b), Fraction) sorted by exponent; empty means
    the identity holds for every completely-determined coefficient.
    Requires x1_bound >= 3 (the check takes three x1-derivatives).
    """
    if spec.x1_bound < 3:
        raise ValueError("x1_bound must be >= 3 to form the residual")
    f = quantum_potential(spec, counts)
    f1 = f.partial(1)
    f11 = f1.partial(1)
    f111 = f11.partial(1)
    f112 = f11.partial(2)
    f122 = f1.partial(2).partial(2)
    f222 = f.partial(2).partial(2).partial(2)
    residual = f222 - f112 * f112 + f111 * f122
    out = []
    for a, b in sorted(wdvv_window(spec)):
        value = residual.coeff(a, b)
        if value:
            out.append(((a, b), value))
    return out
