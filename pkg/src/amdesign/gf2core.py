"""Binary linear codes over GF(2) stored as bit-packed reduced generator bases."""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, Iterator

__all__ = [
    "ENUMERATION_GUARD_K",
    "EXTREMAL",
    "NEAR_EXTREMAL",
    "NEITHER",
    "NOT_APPLICABLE",
    "EnumerationGuardError",
    "BinaryCode",
    "WeightDistribution",
    "CodeClass",
    "pack_row",
    "row_to_string",
    "support",
    "code_from_rows",
    "code_from_strings",
    "dual",
    "is_subcode",
    "iter_codewords",
    "weight_distribution",
    "minimum_distance",
    "codewords_of_weight",
    "is_even",
    "is_doubly_even",
    "is_self_orthogonal",
    "mallows_sloane",
    "classify",
    "doubly_even_subcode",
    "parse_generator_text",
    "format_generator",
    "read_generator_file",
    "write_generator_file",
]

# Full enumeration of 2^k codewords is refused above this dimension.
ENUMERATION_GUARD_K = 28

EXTREMAL = "extremal"
NEAR_EXTREMAL = "near_extremal"
NEITHER = "neither"
NOT_APPLICABLE = "not_applicable"


class EnumerationGuardError(Exception):
    """An operation would exceed the desk-scale enumeration guard."""


def pack_row(bits: str | Iterable[int]) -> int:
    """Pack '0'/'1' characters (or 0/1 ints) into a bitset; position 0 is bit 0."""
    row = 0
    for i, b in enumerate(bits):
        if b in ("1", 1):
            row |= 1 << i
        elif b not in ("0", 0):
            raise ValueError(f"invalid bit {b!r}")
    return row


def row_to_string(row: int, n: int) -> str:
    return "".join("1" if (row >> i) & 1 else "0" for i in range(n))


def support(word: int) -> tuple[int, ...]:
    """1-based coordinates of the nonzero positions of a bitset."""
    pts = []
    while word:
        low = word & -word
        pts.append(low.bit_length())
        word ^= low
    return tuple(pts)


def _rref(rows: Iterable[int]) -> list[int]:
    # Reduced row echelon form over GF(2); each row's pivot is its lowest set bit
    # and appears in no other row, so the sorted result is canonical.
    reduced: list[int] = []
    for row in rows:
        for r in reduced:
            if row & (r & -r):
                row ^= r
        if row:
            low = row & -row
            for i, r in enumerate(reduced):
                if r & low:
                    reduced[i] = r ^ row
            reduced.append(row)
    reduced.sort(key=lambda r: r & -r)
    return reduced


@dataclass(frozen=True)
class BinaryCode:
    """A binary linear code; the stored basis is the canonical reduced form.

    Any row set passed in is reduced on construction, so two values describing
    the same subspace of GF(2)^n compare equal.
    """

    n: int
    basis: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValueError("code length must be positive")
        for row in self.basis:
            if row < 0 or row >> self.n:
                raise ValueError("generator row does not fit the code length")
        object.__setattr__(self, "basis", tuple(_rref(self.basis)))

    @property
    def dimension(self) -> int:
        return len(self.basis)

    @property
    def size(self) -> int:
        return 1 << len(self.basis)

    def contains(self, word: int) -> bool:
        """Membership test by reduction against the echelon basis."""
        if word < 0 or word >> self.n:
            raise ValueError("word does not fit the code length")
        for row in self.basis:
            if word & (row & -row):
                word ^= row
        return word == 0


def code_from_rows(rows: Iterable[int], n: int) -> BinaryCode:
    """Code spanned by bit-packed rows inside GF(2)^n."""
    return BinaryCode(n, tuple(rows))


def code_from_strings(rows: Iterable[str]) -> BinaryCode:
    """Code spanned by '0'/'1' strings; all rows must share one length."""
    rows = list(rows)
    if not rows:
        raise ValueError("no generator rows given")
    n = len(rows[0])
    if any(len(r) != n for r in rows):
        raise ValueError("ragged row lengths")
    if n == 0:
        raise ValueError("code length must be positive")
    return BinaryCode(n, tuple(pack_row(r) for r in rows))


def dual(c: BinaryCode) -> BinaryCode:
    """Orthogonal complement under the standard inner product."""
    pivots = [(row & -row).bit_length() - 1 for row in c.basis]
    pivot_set = set(pivots)
    rows = []
    for free in range(c.n):
        if free in pivot_set:
            continue
        v = 1 << free
        for p, row in zip(pivots, c.basis):
            if (row >> free) & 1:
                v |= 1 << p
        rows.append(v)
    return BinaryCode(c.n, tuple(rows))


def is_subcode(a: BinaryCode, b: BinaryCode) -> bool:
    if a.n != b.n:
        raise ValueError("length mismatch")
    return all(b.contains(row) for row in a.basis)


def iter_codewords(c: BinaryCode) -> Iterator[int]:
    """All 2^k codewords in Gray-code order, one basis XOR per step."""
    if c.dimension > ENUMERATION_GUARD_K:
        raise EnumerationGuardError(
            f"dimension {c.dimension} exceeds the enumeration guard "
            f"k <= {ENUMERATION_GUARD_K}"
        )
    word = 0
    yield word
    for m in range(1, 1 << c.dimension):
        word ^= c.basis[(m & -m).bit_length() - 1]
        yield word


@dataclass(frozen=True)
class WeightDistribution:
    """Exact codeword counts by Hamming weight; zero counts are dropped."""

    counts: dict[int, int]

    def __post_init__(self) -> None:
        clean: dict[int, int] = {}
        for w in sorted(self.counts):
            a = self.counts[w]
            if w < 0 or a < 0:
                raise ValueError("weights and counts must be nonnegative")
            if a:
                clean[int(w)] = int(a)
        object.__setattr__(self, "counts", clean)

    def count(self, w: int) -> int:
        return self.counts.get(w, 0)

    def total(self) -> int:
        return sum(self.counts.values())

    def min_nonzero(self) -> int:
        weights = [w for w in self.counts if w]
        if not weights:
            raise ValueError("no nonzero weight is present")
        return min(weights)

    def is_even(self) -> bool:
        return all(w % 2 == 0 for w in self.counts)


def weight_distribution(c: BinaryCode) -> WeightDistribution:
    """Weight distribution by Gray-code enumeration (guard: k <= 28)."""
    counts = [0] * (c.n + 1)
    for word in iter_codewords(c):
        counts[word.bit_count()] += 1
    return WeightDistribution({w: a for w, a in enumerate(counts) if a})


def minimum_distance(c: BinaryCode) -> int:
    """Smallest nonzero codeword weight; the zero code has none."""
    if c.dimension == 0:
        raise ValueError("the zero code has no minimum distance")
    return weight_distribution(c).min_nonzero()


def codewords_of_weight(c: BinaryCode, w: int) -> list[int]:
    """All codewords of Hamming weight w, ascending as integers."""
    if w < 0 or w > c.n:
        raise ValueError("weight out of range")
    return sorted(x for x in iter_codewords(c) if x.bit_count() == w)


def is_even(c: BinaryCode) -> bool:
    # Weight parity is additive over GF(2), so only the basis needs checking.
    return all(row.bit_count() % 2 == 0 for row in c.basis)


def is_self_orthogonal(c: BinaryCode) -> bool:
    rows = c.basis
    return all(
        (rows[i] & rows[j]).bit_count() % 2 == 0
        for i in range(len(rows))
        for j in range(i, len(rows))
    )


def is_doubly_even(c: BinaryCode) -> bool:
    # wt(x+y) = wt(x) + wt(y) - 2|x&y|, so divisibility by 4 propagates from a
    # basis of weight-0 mod 4 rows with pairwise even intersections.
    rows = c.basis
    if any(row.bit_count() % 4 for row in rows):
        return False
    return all(
        (rows[i] & rows[j]).bit_count() % 2 == 0
        for i in range(len(rows))
        for j in range(i + 1, len(rows))
    )


def mallows_sloane(n: int, d: int) -> str:
    """Placement of an even formally self-dual [n, n/2, d] code against the
    bound d <= 2*floor(n/8) + 2: extremal at the bound, near-extremal two below.
    """
    if n < 2 or n % 2:
        raise ValueError("length must be a positive even integer")
    if d < 2 or d % 2:
        raise ValueError("minimum distance must be a positive even integer")
    bound = 2 * (n // 8) + 2
    if d > bound:
        raise ValueError(f"distance {d} exceeds the bound {bound} for length {n}")
    if d == bound:
        return EXTREMAL
    if d == bound - 2:
        return NEAR_EXTREMAL
    return NEITHER


@dataclass(frozen=True)
class CodeClass:
    even: bool
    doubly_even: bool
    self_orthogonal: bool
    self_dual: bool
    formally_self_dual: bool
    type_one: bool
    type_two: bool
    extremality: str


def classify(c: BinaryCode) -> CodeClass:
    """Structural flags plus extremality placement for even fsd codes."""
    even = is_even(c)
    doubly = is_doubly_even(c)
    self_orth = is_self_orthogonal(c)
    self_dual = self_orth and 2 * c.dimension == c.n
    fsd = weight_distribution(c) == weight_distribution(dual(c))
    if even and fsd and c.dimension > 0:
        extremality = mallows_sloane(c.n, minimum_distance(c))
    else:
        extremality = NOT_APPLICABLE
    return CodeClass(
        even=even,
        doubly_even=doubly,
        self_orthogonal=self_orth,
        self_dual=self_dual,
        formally_self_dual=fsd,
        type_one=self_dual and not doubly,
        type_two=self_dual and doubly,
        extremality=extremality,
    )


def doubly_even_subcode(c: BinaryCode) -> BinaryCode:
    """Subcode of words with weight divisible by 4; requires an even code.

    For an even self-orthogonal code this is the whole code or an index-2
    subcode. For even codes where the weight-0 mod 4 words are not closed
    under addition a ValueError is raised.
    """
    if not is_even(c):
        raise ValueError("code is not even")
    if is_doubly_even(c):
        return c
    words = [w for w in iter_codewords(c) if w.bit_count() % 4 == 0]
    sub = code_from_rows(words, c.n)
    if sub.size != len(words):
        raise ValueError("the doubly-even words do not form a subcode")
    return sub


def parse_generator_text(text: str) -> BinaryCode:
    """Parse a generator matrix: '0'/'1' rows, '#' comments, blank lines skipped."""
    rows = []
    for line in text.splitlines():
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        rows.append(line)
    if not rows:
        raise ValueError("no generator rows found")
    return code_from_strings(rows)


def format_generator(c: BinaryCode) -> str:
    return "".join(row_to_string(row, c.n) + "\n" for row in c.basis)


def read_generator_file(path: str | Path) -> BinaryCode:
    return parse_generator_text(Path(path).read_text())


def write_generator_file(path: str | Path, c: BinaryCode) -> None:
    Path(path).write_text(format_generator(c))
