"""Standard Young tableau counts for straight and skew shapes.

Three mutually independent routes are provided: the hook length product
for straight shapes, a brute-force lattice-path count for small skew
shapes, and the factorial determinant for skew shapes of any size.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import factorial, perm

from .partitions import Partition

# Brute-force guard: the path count grows like the dimension itself.
DEFAULT_ORACLE_CAP = 18


@dataclass(frozen=True)
class SkewShape:
    """A pair of nested partitions outer/inner."""

    outer: Partition
    inner: Partition = Partition()

    def __post_init__(self) -> None:
        if not self.outer.contains(self.inner):
            raise ValueError(f"{self.inner} does not fit inside {self.outer}")

    @property
    def size(self) -> int:
        return self.outer.n - self.inner.n

    def __str__(self) -> str:
        return f"{self.outer}\\{self.inner}"


@lru_cache(maxsize=None)
def _dim(parts: tuple[int, ...]) -> int:
    n = sum(parts)
    hooks = 1
    cols = [0] * (parts[0] if parts else 0)
    for p in parts:
        for j in range(p):
            cols[j] += 1
    for i, p in enumerate(parts, start=1):
        for j in range(1, p + 1):
            hooks *= p - j + cols[j - 1] - i + 1
    return factorial(n) // hooks


def dim_hlf(p: Partition) -> int:
    """Number of standard Young tableaux of shape p, by hook lengths."""
    return _dim(p.parts)


def skew_dim_oracle(shape: SkewShape, cap: int = DEFAULT_ORACLE_CAP) -> int:
    """Count standard fillings of a skew shape by exhaustive box-adding.

    Walks every saturated chain from inner to outer in the containment
    order, one box per step, with no memoization.  Refuses shapes with
    more than cap boxes.
    """
    m = shape.size
    if m > cap:
        raise ValueError(f"skew size {m} exceeds the oracle cap {cap}")
    outer = shape.outer.parts
    rows = len(outer)
    cur = list(shape.inner.parts) + [0] * (rows - len(shape.inner))

    def walk(remaining: int) -> int:
        if remaining == 0:
            return 1
        total = 0
        for i in range(rows):
            if cur[i] < outer[i] and (i == 0 or cur[i] < cur[i - 1]):
                cur[i] += 1
                total += walk(remaining - 1)
                cur[i] -= 1
        return total

    return walk(m)


def _bareiss_det(mat: list[list[int]]) -> int:
    """Exact determinant of an integer matrix, fraction-free."""
    a = [row[:] for row in mat]
    size = len(a)
    sign = 1
    prev = 1
    for k in range(size - 1):
        if a[k][k] == 0:
            pivot = next((r for r in range(k + 1, size) if a[r][k] != 0), None)
            if pivot is None:
                return 0
            a[k], a[pivot] = a[pivot], a[k]
            sign = -sign
        for i in range(k + 1, size):
            for j in range(k + 1, size):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
            a[i][k] = 0
        prev = a[k][k]
    return sign * a[-1][-1]


def skew_dim_det(shape: SkewShape) -> int:
    """Number of standard fillings of a skew shape, by determinant.

    Uses the factorial determinant det[1/(outer_i - inner_j - i + j)!]
    times size!, with 1/e! read as 0 for negative e.  Each row is scaled
    by (outer_i + r - i)! so the matrix entries become integer falling
    factorials and the elimination stays exact.
    """
    outer = shape.outer.parts
    r = len(outer)
    if r == 0:
        return 1
    m = shape.size
    b = [outer[i] + r - 1 - i for i in range(r)]
    c = [shape.inner.part(j + 1) + r - 1 - j for j in range(r)]
    mat = [[perm(bi, cj) if cj <= bi else 0 for cj in c] for bi in b]
    det = _bareiss_det(mat)
    num = factorial(m) * det
    den = 1
    for bi in b:
        den *= factorial(bi)
    if num % den:
        raise ArithmeticError(f"determinant for {shape} is not integral")
    value = num // den
    if value < 0:
        raise ArithmeticError(f"determinant for {shape} is negative")
    return value
