"""Ribbons, ribbon tableaux, and symmetric group characters.

Characters are computed by repeatedly peeling border strips (ribbons)
whose sizes follow the cycle type, with the sign tracking ribbon
heights.  Strip positions come from beta-numbers: with r rows, the set
B = {parts[i] + r - i} determines removable strips of size j as the
elements b in B with b - j >= 0 and b - j not in B.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator

from .dimensions import SkewShape, dim_hlf, skew_dim_det
from .partitions import Box, CycleType, Partition, enumerate_subdiagrams


@dataclass(frozen=True)
class Ribbon:
    """A connected border strip with no 2x2 block."""

    boxes: tuple[Box, ...]

    @property
    def size(self) -> int:
        return len(self.boxes)

    @property
    def height(self) -> int:
        rows = [b.row for b in self.boxes]
        return max(rows) - min(rows)


@dataclass(frozen=True)
class RibbonTableau:
    """A chain of partitions whose consecutive differences are ribbons."""

    chain: tuple[Partition, ...]

    @property
    def shape(self) -> Partition:
        return self.chain[-1]

    @property
    def ribbons(self) -> tuple[Ribbon, ...]:
        return tuple(
            Ribbon(_diff_boxes(self.chain[i + 1], self.chain[i]))
            for i in range(len(self.chain) - 1)
        )

    @property
    def weight(self) -> tuple[int, ...]:
        return tuple(
            self.chain[i + 1].n - self.chain[i].n for i in range(len(self.chain) - 1)
        )

    @property
    def total_height(self) -> int:
        return sum(r.height for r in self.ribbons)


@dataclass(frozen=True)
class CharacterValue:
    """An irreducible character value with its normalized form."""

    value: int
    normalized: Fraction

    @property
    def dim(self) -> int:
        if self.normalized == 0:
            raise ValueError("dimension is not recoverable from a zero value")
        return int(Fraction(self.value) / self.normalized)


def _diff_boxes(outer: Partition, inner: Partition) -> tuple[Box, ...]:
    out = []
    for i in range(1, len(outer) + 1):
        for j in range(inner.part(i) + 1, outer.part(i) + 1):
            out.append(Box(i, j))
    return tuple(out)


def _strip_removals(parts: tuple[int, ...], j: int) -> list[tuple[tuple[int, ...], int]]:
    """All (smaller shape, strip height) for removing a size-j strip."""
    r = len(parts)
    out = []
    if r == 0:
        return out
    beta = [parts[i] + r - 1 - i for i in range(r)]
    bset = set(beta)
    for b in beta:
        t = b - j
        if t < 0 or t in bset:
            continue
        height = sum(1 for c in beta if t < c < b)
        newbeta = sorted((bset - {b}) | {t}, reverse=True)
        newparts = [newbeta[m] - (r - 1 - m) for m in range(r)]
        while newparts and newparts[-1] == 0:
            newparts.pop()
        out.append((tuple(newparts), height))
    return out


def removable_ribbons(lam: Partition, j: int) -> list[Ribbon]:
    """All size-j border strips whose removal leaves a partition.

    Ordered by box list, lowest-leftmost first; at most
    2 * diagonal_length(lam) * j of them exist.
    """
    if j < 1:
        raise ValueError(f"strip size {j} must be positive")
    ribbons = [
        Ribbon(_diff_boxes(lam, Partition(nu))) for nu, _ in _strip_removals(lam.parts, j)
    ]
    ribbons.sort(key=lambda r: r.boxes)
    return ribbons


def _normalize_weights(alpha) -> tuple[int, ...]:
    if isinstance(alpha, CycleType):
        return alpha.lengths
    return tuple(alpha)


def count_ribbon_tableaux(lam: Partition, alpha) -> int:
    """Number of ribbon tableaux of shape lam and ordered weight alpha.

    The order of the weight entries matters; sorting them can change
    the count.  Entry 1 is peeled last.
    """
    weights = _normalize_weights(alpha)
    if sum(weights) != lam.n:
        raise ValueError(f"weights sum to {sum(weights)}, expected {lam.n}")
    memo: dict[tuple[tuple[int, ...], int], int] = {}

    def peel(shape: tuple[int, ...], m: int) -> int:
        if m == 0:
            return 1
        key = (shape, m)
        cached = memo.get(key)
        if cached is not None:
            return cached
        total = 0
        for smaller, _ in _strip_removals(shape, weights[m - 1]):
            total += peel(smaller, m - 1)
        memo[key] = total
        return total

    return peel(lam.parts, len(weights))


def ribbon_tableaux(lam: Partition, alpha) -> Iterator[RibbonTableau]:
    """Generate every ribbon tableau of shape lam and ordered weight alpha."""
    weights = _normalize_weights(alpha)
    if sum(weights) != lam.n:
        raise ValueError(f"weights sum to {sum(weights)}, expected {lam.n}")

    def build(shape: tuple[int, ...], m: int) -> Iterator[tuple[tuple[int, ...], ...]]:
        if m == 0:
            yield (shape,)
            return
        for smaller, _ in _strip_removals(shape, weights[m - 1]):
            for prefix in build(smaller, m - 1):
                yield prefix + (shape,)

    for chain in build(lam.parts, len(weights)):
        yield RibbonTableau(tuple(Partition(c) for c in chain))


def character_mn(lam: Partition, alpha: CycleType) -> CharacterValue:
    """Irreducible character at a cycle type, by border-strip peeling.

    The result does not depend on the order of alpha's entries; they
    are peeled largest first, which prunes the recursion hardest.  The
    memo lives for one call and is keyed by (shape, entries consumed),
    sound because the peeling order is fixed within the call.
    """
    if alpha.n != lam.n:
        raise ValueError(f"cycle type sums to {alpha.n}, expected {lam.n}")
    weights = tuple(sorted(alpha.lengths))
    memo: dict[tuple[tuple[int, ...], int], int] = {}

    def peel(shape: tuple[int, ...], m: int) -> int:
        if m == 0:
            return 1
        key = (shape, m)
        cached = memo.get(key)
        if cached is not None:
            return cached
        total = 0
        for smaller, height in _strip_removals(shape, weights[m - 1]):
            sub = peel(smaller, m - 1)
            total += -sub if height % 2 else sub
        memo[key] = total
        return total

    value = peel(lam.parts, len(weights))
    return CharacterValue(value, Fraction(value, dim_hlf(lam)))


def sigma_star(alpha: CycleType) -> CycleType:
    """Drop all fixed points, keeping cycles of length 2 and more.

    The survivors are returned in decreasing order; character values do
    not depend on the ordering.
    """
    kept = tuple(sorted((e for e in alpha.lengths if e >= 2), reverse=True))
    if not kept:
        raise ValueError("the identity cycle type has no fixed-point-free part")
    return CycleType(kept)


def character_branching(lam: Partition, alpha: CycleType) -> CharacterValue:
    """Character via restriction to the support of the permutation.

    Sums character(mu, alpha minus fixed points) * skew dimension over
    all mu inside lam of size supp(alpha).  Must agree with the direct
    peeling computation.
    """
    if alpha.n != lam.n:
        raise ValueError(f"cycle type sums to {alpha.n}, expected {lam.n}")
    star = sigma_star(alpha)
    total = 0
    for mu in enumerate_subdiagrams(lam, star.n):
        term = character_mn(mu, star).value
        if term:
            total += term * skew_dim_det(SkewShape(lam, mu))
    return CharacterValue(total, Fraction(total, dim_hlf(lam)))


def diag_cycle_bound(lam: Partition, alpha: CycleType) -> int:
    """The bound 2^n * diagonal_length^cyc on absolute character values."""
    if alpha.n != lam.n:
        raise ValueError(f"cycle type sums to {alpha.n}, expected {lam.n}")
    return 2**lam.n * lam.diagonal_length**alpha.cyc
