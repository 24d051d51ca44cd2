"""Homogeneous bivariate polynomials over exact rationals, and the invariant
ring machinery used to decompose weight enumerators."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb

from . import ratlin
from .gf2core import WeightDistribution

__all__ = [
    "HomPoly",
    "X",
    "Y",
    "SpanError",
    "q8",
    "gleason_basis",
    "gleason_decompose",
    "check_relative_invariance",
    "vanishing_coefficient_search",
    "weight_enumerator_poly",
    "macwilliams_transform_classical",
]

Scalar = int | Fraction


@dataclass(frozen=True)
class HomPoly:
    """A homogeneous polynomial in x, y with rational coefficients.

    ``coeffs[j]`` is the coefficient of x^(degree-j) y^j; the vector is dense.
    """

    degree: int
    coeffs: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        if self.degree < 0:
            raise ValueError("degree must be nonnegative")
        if len(self.coeffs) != self.degree + 1:
            raise ValueError("coefficient vector has the wrong length")
        object.__setattr__(self, "coeffs", tuple(Fraction(c) for c in self.coeffs))

    @classmethod
    def zero(cls, degree: int) -> "HomPoly":
        return cls(degree, (Fraction(0),) * (degree + 1))

    @classmethod
    def monomial(cls, xdeg: int, ydeg: int, coeff: Scalar = 1) -> "HomPoly":
        if xdeg < 0 or ydeg < 0:
            raise ValueError("exponents must be nonnegative")
        coeffs = [Fraction(0)] * (xdeg + ydeg + 1)
        coeffs[ydeg] = Fraction(coeff)
        return cls(xdeg + ydeg, tuple(coeffs))

    @property
    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def coefficient(self, ydeg: int) -> Fraction:
        """Coefficient of x^(degree-ydeg) y^ydeg."""
        if ydeg < 0 or ydeg > self.degree:
            raise ValueError("exponent out of range")
        return self.coeffs[ydeg]

    def __add__(self, other: "HomPoly") -> "HomPoly":
        if not isinstance(other, HomPoly):
            return NotImplemented
        if self.degree != other.degree:
            raise ValueError("degree mismatch")
        return HomPoly(
            self.degree, tuple(a + b for a, b in zip(self.coeffs, other.coeffs))
        )

    def __sub__(self, other: "HomPoly") -> "HomPoly":
        if not isinstance(other, HomPoly):
            return NotImplemented
        if self.degree != other.degree:
            raise ValueError("degree mismatch")
        return HomPoly(
            self.degree, tuple(a - b for a, b in zip(self.coeffs, other.coeffs))
        )

    def __neg__(self) -> "HomPoly":
        return HomPoly(self.degree, tuple(-a for a in self.coeffs))

    def __mul__(self, other: "HomPoly | Scalar") -> "HomPoly":
        if isinstance(other, (int, Fraction)):
            return HomPoly(self.degree, tuple(a * other for a in self.coeffs))
        if not isinstance(other, HomPoly):
            return NotImplemented
        deg = self.degree + other.degree
        out = [Fraction(0)] * (deg + 1)
        for i, a in enumerate(self.coeffs):
            if not a:
                continue
            for j, b in enumerate(other.coeffs):
                if b:
                    out[i + j] += a * b
        return HomPoly(deg, tuple(out))

    def __rmul__(self, other: Scalar) -> "HomPoly":
        return self.__mul__(other)

    def __pow__(self, exponent: int) -> "HomPoly":
        if exponent < 0:
            raise ValueError("negative power of a polynomial")
        result = HomPoly(0, (Fraction(1),))
        for _ in range(exponent):
            result = result * self
        return result

    def substitute_sum_diff(self) -> "HomPoly":
        """Return p(x+y, x-y), expanded exactly."""
        d = self.degree
        out = [Fraction(0)] * (d + 1)
        for j, cj in enumerate(self.coeffs):
            if not cj:
                continue
            a = d - j
            for m in range(d + 1):
                s = 0
                for r in range(max(0, m - j), min(a, m) + 1):
                    s += comb(a, r) * comb(j, m - r) * (-1) ** (m - r)
                if s:
                    out[m] += cj * s
        return HomPoly(d, tuple(out))

    def substitute_negate_y(self) -> "HomPoly":
        """Return p(x, -y)."""
        return HomPoly(
            self.degree,
            tuple(c if j % 2 == 0 else -c for j, c in enumerate(self.coeffs)),
        )

    def divide_xy(self, k: int) -> "HomPoly":
        """Exact quotient by (xy)^k; raises if any stray coefficient blocks it."""
        if k < 0:
            raise ValueError("k must be nonnegative")
        if 2 * k > self.degree:
            raise ValueError("degree too small for the requested quotient")
        for j, c in enumerate(self.coeffs):
            if c and (j < k or j > self.degree - k):
                raise ValueError(f"not divisible by (xy)^{k}: term at y^{j}")
        return HomPoly(self.degree - 2 * k, self.coeffs[k : self.degree - k + 1])

    def __str__(self) -> str:
        terms = []
        for j, c in enumerate(self.coeffs):
            if not c:
                continue
            xd, yd = self.degree - j, j
            parts = []
            if abs(c) != 1 or (xd == 0 and yd == 0):
                parts.append(str(abs(c)))
            if xd:
                parts.append("x" if xd == 1 else f"x^{xd}")
            if yd:
                parts.append("y" if yd == 1 else f"y^{yd}")
            terms.append((c < 0, "*".join(parts)))
        if not terms:
            return "0"
        neg, first = terms[0]
        text = ("-" if neg else "") + first
        for neg, term in terms[1:]:
            text += (" - " if neg else " + ") + term
        return text


X = HomPoly.monomial(1, 0)
Y = HomPoly.monomial(0, 1)


class SpanError(ValueError):
    """A polynomial fell outside the requested basis span."""

    def __init__(self, message: str, partial: list[Fraction], residual: HomPoly):
        super().__init__(message)
        self.partial = partial
        self.residual = residual


def q8() -> HomPoly:
    """xy(x^6 - 7x^4y^2 + 7x^2y^4 - y^6), the odd-character octic invariant."""
    sextic = X**6 - 7 * X**4 * Y**2 + 7 * X**2 * Y**4 - Y**6
    return X * Y * sextic


def gleason_basis(t: int, n: int) -> list[HomPoly]:
    """Spanning set for degree n-2t polynomials fixed (up to the sign character
    (-1)^t) by the transforms p -> 2^(-deg/2) p(x+y, x-y) and p -> p(x, -y).

    Even t: (x^2+y^2)^(n/2-t-4i) (x^2 y^2 (x^2-y^2)^2)^i.
    Odd t: the same with t+4 in place of t, each term multiplied by q8.
    """
    if n < 2 or n % 2:
        raise ValueError("length must be a positive even integer")
    if t < 0:
        raise ValueError("t must be nonnegative")
    shift = 4 if t % 2 else 0
    top = n // 2 - t - shift
    if top < 0:
        raise ValueError(f"no basis elements exist for t={t}, n={n}")
    s = X**2 + Y**2
    u = X**2 * Y**2 * (X**2 - Y**2) ** 2
    head = q8() if t % 2 else None
    basis = []
    for i in range(top // 4 + 1):
        b = s ** (top - 4 * i) * u**i
        basis.append(head * b if head is not None else b)
    return basis


def gleason_decompose(p: HomPoly, t: int, n: int) -> list[Fraction]:
    """Exact coordinates of p in gleason_basis(t, n); raises SpanError outside."""
    if p.degree != n - 2 * t:
        raise ValueError(f"expected degree {n - 2 * t}, got {p.degree}")
    basis = gleason_basis(t, n)
    columns = [b.coeffs for b in basis]
    x, consistent = ratlin.solve_columns(columns, p.coeffs)
    if not consistent:
        approx = HomPoly.zero(p.degree)
        for c, b in zip(x, basis):
            approx = approx + c * b
        raise SpanError("polynomial is outside the basis span", x, p - approx)
    return x


def check_relative_invariance(p: HomPoly, t: int) -> bool:
    """True when 2^(-deg/2) p(x+y, x-y) = (-1)^t p and p(x, -y) = (-1)^t p."""
    if p.degree % 2:
        raise ValueError("degree must be even")
    expect = p if t % 2 == 0 else -p
    scaled = expect * (1 << (p.degree // 2))
    return p.substitute_sum_diff() == scaled and p.substitute_negate_y() == expect


def vanishing_coefficient_search(alpha_max: int) -> list[tuple[int, int]]:
    """Scan R = (x^4 + 2x^2y^2 + y^4)(x^2 - y^2)^alpha for alpha < alpha_max.

    Reports every (alpha, i) with 0 <= i <= (alpha+2)/2 whose coefficient of
    x^(2*alpha+4-2i) y^(2i) in R is exactly zero.
    """
    if alpha_max < 1:
        raise ValueError("alpha_max must be positive")
    diff = X**2 - Y**2
    r = (X**2 + Y**2) ** 2
    pairs = []
    for alpha in range(alpha_max):
        for i in range((alpha + 2) // 2 + 1):
            if not r.coefficient(2 * i):
                pairs.append((alpha, i))
        r = r * diff
    return pairs


def weight_enumerator_poly(wd: WeightDistribution, n: int) -> HomPoly:
    """The enumerator sum A_w x^(n-w) y^w as a degree-n polynomial."""
    coeffs = [Fraction(0)] * (n + 1)
    for w, a in wd.counts.items():
        if w > n:
            raise ValueError("weight exceeds the stated length")
        coeffs[w] = Fraction(a)
    return HomPoly(n, tuple(coeffs))


def macwilliams_transform_classical(
    wd: WeightDistribution, n: int, k: int
) -> WeightDistribution:
    """Dual weight distribution 2^-k W(x+y, x-y), checked to be integral."""
    if wd.total() != 1 << k:
        raise ValueError("weight distribution does not sum to 2^k")
    if wd.count(0) != 1:
        raise ValueError("weight distribution must count the zero word once")
    transformed = weight_enumerator_poly(wd, n).substitute_sum_diff()
    size = 1 << k
    counts: dict[int, int] = {}
    for w, c in enumerate(transformed.coeffs):
        q = c / size
        if q < 0 or q.denominator != 1:
            raise ValueError(f"transform is not a weight distribution at w={w}")
        if q:
            counts[w] = int(q)
    return WeightDistribution(counts)
