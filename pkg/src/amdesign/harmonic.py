"""Discrete harmonic functions on k-subsets and harmonic weight enumerators."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from math import comb
from typing import Iterable, Iterator, Sequence

from . import ratlin
from .gf2core import BinaryCode, EnumerationGuardError, iter_codewords, support
from .polyring import HomPoly

__all__ = [
    "SUBSET_GUARD",
    "HarmonicFunction",
    "subset_rank",
    "subset_unrank",
    "ksubsets",
    "gamma",
    "harm_dimension",
    "harm_basis",
    "harmonic_weight_enumerator",
    "zcf",
    "bachoc_transform",
    "delsarte_design_check",
]

# Harmonic-space computations are refused when C(n, k) exceeds this.
SUBSET_GUARD = 20_000


def subset_rank(subset: Sequence[int]) -> int:
    """Colexicographic rank of a strictly increasing tuple of 1-based points."""
    return sum(comb(e - 1, i + 1) for i, e in enumerate(subset))


def subset_unrank(rank: int, k: int) -> tuple[int, ...]:
    """Inverse of subset_rank for k-subsets."""
    out = [0] * k
    for i in range(k, 0, -1):
        # largest e with C(e-1, i) <= rank
        e = i
        while comb(e, i) <= rank:
            e += 1
        out[i - 1] = e
        rank -= comb(e - 1, i)
    return tuple(out)


def ksubsets(n: int, k: int) -> Iterator[tuple[int, ...]]:
    """All k-subsets of {1..n} in colexicographic order."""
    if k < 0 or k > n:
        raise ValueError("k out of range")
    if k == 0:
        yield ()
        return
    for top in range(k, n + 1):
        for rest in ksubsets(top - 1, k - 1):
            yield rest + (top,)


@dataclass(frozen=True)
class HarmonicFunction:
    """A rational-valued function on the k-subsets of {1..n}.

    Values are stored densely in colexicographic rank order. Instances
    returned by harm_basis lie in the kernel of gamma; the constructor itself
    accepts any values so that gamma images can be represented too.
    """

    n: int
    k: int
    values: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        if self.k < 0 or self.k > self.n:
            raise ValueError("k out of range")
        if len(self.values) != comb(self.n, self.k):
            raise ValueError("value vector has the wrong length")
        object.__setattr__(self, "values", tuple(Fraction(v) for v in self.values))

    def value_on(self, subset: Sequence[int]) -> Fraction:
        if len(subset) != self.k:
            raise ValueError("subset has the wrong size")
        return self.values[subset_rank(tuple(subset))]

    def tilde(self, points: Iterable[int]) -> Fraction:
        """Sum of the function over all k-subsets of the given point set."""
        total = Fraction(0)
        for z in combinations(sorted(points), self.k):
            total += self.values[subset_rank(z)]
        return total

    def is_harmonic(self) -> bool:
        if self.k == 0:
            return True
        return not any(gamma(self).values)

    def __add__(self, other: "HarmonicFunction") -> "HarmonicFunction":
        if not isinstance(other, HarmonicFunction):
            return NotImplemented
        if (self.n, self.k) != (other.n, other.k):
            raise ValueError("domain mismatch")
        return HarmonicFunction(
            self.n, self.k, tuple(a + b for a, b in zip(self.values, other.values))
        )

    def __mul__(self, scalar: int | Fraction) -> "HarmonicFunction":
        return HarmonicFunction(self.n, self.k, tuple(v * scalar for v in self.values))

    __rmul__ = __mul__


def gamma(f: HarmonicFunction) -> HarmonicFunction:
    """Down-shift operator: (gamma f)(y) = sum of f over k-subsets covering y."""
    if f.k == 0:
        raise ValueError("gamma is undefined below degree 1")
    out = [Fraction(0)] * comb(f.n, f.k - 1)
    for z, val in zip(ksubsets(f.n, f.k), f.values):
        if not val:
            continue
        for y in combinations(z, f.k - 1):
            out[subset_rank(y)] += val
    return HarmonicFunction(f.n, f.k - 1, tuple(out))


def harm_dimension(n: int, k: int) -> int:
    if k == 0:
        return 1
    return comb(n, k) - comb(n, k - 1)


@lru_cache(maxsize=None)
def harm_basis(n: int, k: int) -> tuple[HarmonicFunction, ...]:
    """Deterministic basis of the harmonic space: the kernel of gamma on
    degree-k functions, computed by exact rational elimination."""
    if k < 0 or k > n:
        raise ValueError("k out of range")
    if comb(n, k) > SUBSET_GUARD:
        raise EnumerationGuardError(
            f"C({n},{k}) exceeds the subset guard {SUBSET_GUARD}"
        )
    if k == 0:
        return (HarmonicFunction(n, 0, (Fraction(1),)),)
    nrows = comb(n, k - 1)
    matrix = [[Fraction(0)] * comb(n, k) for _ in range(nrows)]
    for col, z in enumerate(ksubsets(n, k)):
        for y in combinations(z, k - 1):
            matrix[subset_rank(y)][col] = Fraction(1)
    kernel = ratlin.nullspace(matrix)
    return tuple(HarmonicFunction(n, k, tuple(vec)) for vec in kernel)


def harmonic_weight_enumerator(c: BinaryCode, f: HarmonicFunction) -> HomPoly:
    """Sum over codewords of f~(support) x^(n-wt) y^wt."""
    if f.n != c.n:
        raise ValueError("code length and function ground set differ")
    coeffs = [Fraction(0)] * (c.n + 1)
    for word in iter_codewords(c):
        w = word.bit_count()
        if w < f.k:
            continue
        coeffs[w] += f.tilde(support(word))
    return HomPoly(c.n, tuple(coeffs))


def zcf(c: BinaryCode, f: HarmonicFunction) -> HomPoly:
    """The harmonic enumerator with its forced (xy)^k factor divided out."""
    enum = harmonic_weight_enumerator(c, f)
    return enum.divide_xy(f.k)


def bachoc_transform(z: HomPoly, k: int, code_size: int, n: int) -> HomPoly:
    """Image of a degree n-2k quotient enumerator under the dual transform
    (-1)^k (2^k / code_size) z(x+y, x-y); the radical-2 scaling folds into an
    exact power of two because the two half-degree exponents cancel."""
    if k < 0 or code_size < 1:
        raise ValueError("bad transform parameters")
    if z.degree != n - 2 * k:
        raise ValueError(f"expected degree {n - 2 * k}, got {z.degree}")
    if n % 2:
        raise ValueError("odd length: the 2-power exponents are not integral")
    scale = Fraction((-1) ** k * (1 << k), code_size)
    return z.substitute_sum_diff() * scale


def delsarte_design_check(
    blocks: Sequence[Sequence[int]], n: int, t: int
) -> bool:
    """Design test through harmonic spaces: the block multiset is a t-design
    exactly when sum_b f~(b) vanishes for every f in harm_basis(n, k), k=1..t."""
    if not blocks:
        raise ValueError("no blocks given")
    sizes = {len(b) for b in blocks}
    if len(sizes) != 1:
        raise ValueError("blocks must share one size")
    (m,) = sizes
    if m > n:
        raise ValueError("block size exceeds the ground set")
    if t < 0 or t > m:
        raise ValueError("t out of range")
    sorted_blocks = [tuple(sorted(b)) for b in blocks]
    for k in range(1, t + 1):
        for f in harm_basis(n, k):
            total = Fraction(0)
            for b in sorted_blocks:
                total += f.tilde(b)
            if total:
                return False
    return True
