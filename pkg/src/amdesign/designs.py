"""Block designs as multisets: t-design counting, support designs of codes,
intersection numbers, and the block-count linear system."""

from __future__ import annotations

import json
import random
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import comb
from pathlib import Path
from typing import Iterable, Mapping, Sequence

from .gf2core import BinaryCode, code_from_rows, codewords_of_weight, support

__all__ = [
    "Design",
    "support_design",
    "union",
    "is_t_design",
    "t_design_violation",
    "design_strength",
    "complement_design",
    "lambda_i",
    "IntersectionProfile",
    "intersection_profile",
    "is_self_orthogonal_design",
    "mendelsohn_solve",
    "code_from_design",
    "design_to_json",
    "design_from_json",
    "read_design_file",
    "write_design_file",
    "non_self_orthogonal_2_design",
    "perturb_2_design",
]


@dataclass(frozen=True)
class Design:
    """A multiset of equal-size blocks on the point set {1..v}.

    Blocks are stored sorted (each block internally and the block list), so
    equality is multiset equality.
    """

    v: int
    blocks: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        if self.v < 1:
            raise ValueError("point count must be positive")
        if not self.blocks:
            raise ValueError("a design needs at least one block")
        norm = []
        size = None
        for block in self.blocks:
            b = tuple(sorted(block))
            if len(set(b)) != len(b):
                raise ValueError("block has a repeated point")
            if size is None:
                size = len(b)
            elif len(b) != size:
                raise ValueError("blocks must share one size")
            if not b or b[0] < 1 or b[-1] > self.v:
                raise ValueError("block point out of range")
            norm.append(b)
        norm.sort()
        object.__setattr__(self, "blocks", tuple(norm))

    @property
    def k(self) -> int:
        return len(self.blocks[0])

    @property
    def b(self) -> int:
        return len(self.blocks)


def _block_mask(block: Sequence[int]) -> int:
    mask = 0
    for p in block:
        mask |= 1 << (p - 1)
    return mask


def support_design(c: BinaryCode, w: int) -> Design:
    """Design whose blocks are the supports of the weight-w codewords."""
    if w < 1 or w > c.n:
        raise ValueError("weight out of range")
    words = codewords_of_weight(c, w)
    if not words:
        raise ValueError(f"no codewords of weight {w}")
    return Design(c.n, tuple(support(word) for word in words))


def union(d1: Design, d2: Design) -> Design:
    """Multiset union; repeated blocks keep their multiplicity."""
    if d1.v != d2.v:
        raise ValueError("point-set mismatch")
    if d1.k != d2.k:
        raise ValueError("block-size mismatch")
    return Design(d1.v, d1.blocks + d2.blocks)


def _coverage_scan(d: Design, t: int):
    masks = [_block_mask(b) for b in d.blocks]
    for pts in combinations(range(1, d.v + 1), t):
        m = _block_mask(pts)
        yield pts, sum(1 for bm in masks if bm & m == m)


def is_t_design(d: Design, t: int) -> int | None:
    """The constant t-subset coverage count, or None when coverage varies."""
    if t < 0 or t > d.k:
        raise ValueError("t out of range")
    lam = None
    for _, count in _coverage_scan(d, t):
        if lam is None:
            lam = count
        elif count != lam:
            return None
    return lam


def t_design_violation(
    d: Design, t: int
) -> tuple[tuple[int, ...], int, tuple[int, ...], int] | None:
    """First pair of t-subsets with differing coverage, or None for a design."""
    if t < 0 or t > d.k:
        raise ValueError("t out of range")
    first = None
    for pts, count in _coverage_scan(d, t):
        if first is None:
            first = (pts, count)
        elif count != first[1]:
            return (first[0], first[1], pts, count)
    return None


def design_strength(d: Design, t_max: int) -> int:
    """Largest t <= t_max for which the blocks form a t-design; 0 if none."""
    if t_max < 0 or t_max > d.k:
        raise ValueError("t_max out of range")
    strength = 0
    for t in range(1, t_max + 1):
        if is_t_design(d, t) is None:
            break
        strength = t
    return strength


def complement_design(d: Design) -> Design:
    """Blockwise complement inside the same point set."""
    if d.k == d.v:
        raise ValueError("complement blocks would be empty")
    full = set(range(1, d.v + 1))
    return Design(d.v, tuple(tuple(sorted(full - set(b))) for b in d.blocks))


def lambda_i(t: int, v: int, k: int, lam: int, i: int) -> Fraction:
    """Coverage of an i-subset in a t-(v,k,lam) design:
    lam * C(v-i, t-i) / C(k-i, t-i)."""
    if not 0 <= i <= t:
        raise ValueError("i out of range")
    if not 0 < k <= v:
        raise ValueError("bad parameters")
    if t > k:
        raise ValueError("t exceeds the block size")
    return Fraction(lam * comb(v - i, t - i), comb(k - i, t - i))


@dataclass(frozen=True)
class IntersectionProfile:
    """Counts m_i of blocks meeting a reference block in exactly i points."""

    k: int
    counts: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.counts) != self.k + 1:
            raise ValueError("profile must have k+1 entries")

    def as_dict(self) -> dict[int, int]:
        return {i: m for i, m in enumerate(self.counts) if m}


def intersection_profile(d: Design, block_index: int) -> IntersectionProfile:
    """Intersection counts of every block different (as a set) from the
    reference block; the counts sum to b minus the reference multiplicity."""
    if not 0 <= block_index < d.b:
        raise ValueError("block index out of range")
    ref = d.blocks[block_index]
    ref_mask = _block_mask(ref)
    counts = [0] * (d.k + 1)
    for other in d.blocks:
        if other == ref:
            continue
        counts[(_block_mask(other) & ref_mask).bit_count()] += 1
    return IntersectionProfile(d.k, tuple(counts))


def is_self_orthogonal_design(d: Design) -> bool:
    """True when every pairwise block intersection is congruent to k mod 2."""
    masks = [_block_mask(b) for b in d.blocks]
    parity = d.k % 2
    return all(
        (masks[i] & masks[j]).bit_count() % 2 == parity
        for i in range(len(masks))
        for j in range(i + 1, len(masks))
    )


def mendelsohn_solve(
    t: int,
    v: int,
    k: int,
    lam: int,
    m: int,
    allowed_i: Iterable[int],
    fixed: Mapping[int, int] | None = None,
    limit: int | None = None,
) -> list[tuple[int, ...]]:
    """Nonnegative integer solutions (n_i) of the block-count system

        sum_i C(i, j) n_i = lambda_j C(m, j)   for j = 0..t,

    with i restricted to allowed_i and optional fixed assignments. Free
    variables are bounded by lambda_0. Solutions come back as tuples aligned
    with sorted(allowed_i); pass ``limit`` to stop after that many.
    """
    allowed = sorted(set(allowed_i))
    if not allowed:
        raise ValueError("allowed_i is empty")
    if allowed[0] < 0 or allowed[-1] > min(k, m):
        raise ValueError("allowed intersections must lie in 0..min(k, m)")
    lambdas = []
    for j in range(t + 1):
        lj = lambda_i(t, v, k, lam, j)
        if lj.denominator != 1:
            raise ValueError(f"lambda_{j} = {lj} is not an integer")
        lambdas.append(int(lj))
    rhs = [lambdas[j] * comb(m, j) for j in range(t + 1)]
    fixed = dict(fixed or {})
    if any(i not in allowed for i in fixed):
        raise ValueError("fixed index outside allowed_i")
    if any(val < 0 for val in fixed.values()):
        raise ValueError("fixed values must be nonnegative")
    coeff = {i: [comb(i, j) for j in range(t + 1)] for i in allowed}
    solutions: list[tuple[int, ...]] = []
    assignment = [0] * len(allowed)

    def extend(idx: int, partial: list[int]) -> None:
        if limit is not None and len(solutions) >= limit:
            return
        if idx == len(allowed):
            if partial == rhs:
                solutions.append(tuple(assignment))
            return
        i = allowed[idx]
        ci = coeff[i]
        if i in fixed:
            lo = hi = fixed[i]
        else:
            lo, hi = 0, lambdas[0]
        for val in range(lo, hi + 1):
            nxt = [partial[j] + ci[j] * val for j in range(t + 1)]
            if any(nxt[j] > rhs[j] for j in range(t + 1)):
                break
            assignment[idx] = val
            extend(idx + 1, nxt)
        assignment[idx] = 0

    extend(0, [0] * (t + 1))
    return solutions


def code_from_design(d: Design) -> BinaryCode:
    """GF(2) span of the block characteristic vectors."""
    return code_from_rows((_block_mask(b) for b in d.blocks), d.v)


def design_to_json(d: Design) -> dict:
    return {"v": d.v, "blocks": [list(b) for b in d.blocks]}


def design_from_json(obj: Mapping) -> Design:
    if "v" not in obj or "blocks" not in obj:
        raise ValueError("design JSON needs 'v' and 'blocks'")
    return Design(int(obj["v"]), tuple(tuple(b) for b in obj["blocks"]))


def read_design_file(path: str | Path) -> Design:
    return design_from_json(json.loads(Path(path).read_text()))


def write_design_file(path: str | Path, d: Design) -> None:
    Path(path).write_text(json.dumps(design_to_json(d), indent=1) + "\n")


def _climb_once(base: Design, lam: int, rng: random.Random, kicks: int,
                max_steps: int) -> Design | None:
    v, k = base.v, base.k
    points = list(range(1, v + 1))
    blocks = [set(b) for b in base.blocks]

    def key(a: int, b: int) -> tuple[int, int]:
        return (a, b) if a < b else (b, a)

    cover: dict[tuple[int, int], int] = {
        pair: 0 for pair in combinations(points, 2)
    }
    for b in blocks:
        for pair in combinations(sorted(b), 2):
            cover[pair] += 1

    def swap_delta(block: set[int], out: int, into: int) -> int:
        delta = 0
        for z in block:
            if z == out:
                continue
            c = cover[key(out, z)]
            delta += (c - 1 - lam) ** 2 - (c - lam) ** 2
            c = cover[key(into, z)]
            delta += (c + 1 - lam) ** 2 - (c - lam) ** 2
        return delta

    def apply_swap(idx: int, out: int, into: int) -> None:
        block = blocks[idx]
        for z in block:
            if z == out:
                continue
            cover[key(out, z)] -= 1
            cover[key(into, z)] += 1
        block.discard(out)
        block.add(into)

    for _ in range(kicks):
        idx = rng.randrange(len(blocks))
        for pair in combinations(sorted(blocks[idx]), 2):
            cover[pair] -= 1
        blocks[idx] = set(rng.sample(points, k))
        for pair in combinations(sorted(blocks[idx]), 2):
            cover[pair] += 1
    cost = sum((c - lam) ** 2 for c in cover.values())

    for _ in range(max_steps):
        if cost == 0:
            return Design(v, tuple(tuple(sorted(b)) for b in blocks))
        over = [pair for pair, c in cover.items() if c > lam]
        p, q = over[rng.randrange(len(over))]
        holders = [i for i, b in enumerate(blocks) if p in b and q in b]
        best = None
        for i in holders:
            block = blocks[i]
            for out in (p, q):
                for into in points:
                    if into in block:
                        continue
                    d = swap_delta(block, out, into)
                    if best is None or d < best[0]:
                        best = (d, i, out, into)
        d, i, out, into = best
        if d > 0:
            # no improving repair for this pair: take a random swap instead
            i = holders[rng.randrange(len(holders))]
            out = (p, q)[rng.randrange(2)]
            into = rng.choice([x for x in points if x not in blocks[i]])
            d = swap_delta(blocks[i], out, into)
        apply_swap(i, out, into)
        cost += d
    return None


def perturb_2_design(
    base: Design,
    lam: int,
    seed: int,
    kicks: int = 3,
    max_steps: int = 200,
    restarts: int = 200,
) -> Design:
    """Seeded hill climb to a different 2-design with the same parameters.

    Starting from ``base``, ``kicks`` random blocks are replaced by random
    k-subsets, then the pair-coverage error is driven back to zero: each step
    picks a random over-covered pair and applies the best single-point swap
    among the blocks holding that pair (falling back to a random swap when no
    improving one exists). Climbs that stall are restarted with fresh kicks.
    Raises RuntimeError when every restart runs out of budget.
    """
    rng = random.Random(seed)
    for _ in range(restarts):
        d = _climb_once(base, lam, rng, kicks, max_steps)
        if d is not None and d != base:
            return d
    raise RuntimeError("hill climb did not recover a 2-design in budget")


def non_self_orthogonal_2_design(base: Design, lam: int, seed: int = 0,
                                 attempts: int = 100) -> Design:
    """Perturb ``base`` into a 2-design with some odd block intersection.

    Runs perturb_2_design over derived seeds until the result fails the
    self-orthogonality parity test, re-validating the 2-design property of
    the winner exactly.
    """
    for sub in range(attempts):
        d = perturb_2_design(base, lam, seed * attempts + sub)
        if not is_self_orthogonal_design(d):
            if is_t_design(d, 2) != lam:
                raise RuntimeError("perturbed design lost the 2-design property")
            return d
    raise RuntimeError("no parity-breaking perturbation found in budget")
