"""Partitions, skew shapes, and exact tableau counting.

Partitions are plain tuples of weakly decreasing positive integers; the
empty tuple is the partition of 0.  All counting here is exact integer
arithmetic: Kostka numbers and skew Kostka numbers count semistandard
fillings directly, Littlewood-Richardson coefficients count lattice
fillings.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from functools import cache
from typing import Iterable, Iterator

Partition = tuple[int, ...]


def check_partition(parts: Iterable[int]) -> Partition:
    """Validate a weakly decreasing sequence and strip trailing zeros."""
    p = tuple(int(x) for x in parts)
    for a, b in zip(p, p[1:]):
        if a < b:
            raise ValueError(f"not weakly decreasing: {list(p)}")
    if p and p[-1] < 0:
        raise ValueError(f"negative part in {list(p)}")
    while p and p[-1] == 0:
        p = p[:-1]
    return p


def is_partition(parts: Iterable[int]) -> bool:
    try:
        check_partition(parts)
    except ValueError:
        return False
    return True


@cache
def partitions_of(n: int) -> tuple[Partition, ...]:
    """All partitions of n, lexicographically decreasing (canonical order)."""
    if n < 0:
        raise ValueError("n must be non-negative")
    if n == 0:
        return ((),)
    out: list[Partition] = []

    def rec(remaining: int, max_part: int, prefix: list[int]) -> None:
        if remaining == 0:
            out.append(tuple(prefix))
            return
        for part in range(min(remaining, max_part), 0, -1):
            prefix.append(part)
            rec(remaining - part, part, prefix)
            prefix.pop()

    rec(n, n, [])
    return tuple(out)


def contains(inner: Partition, outer: Partition) -> bool:
    """True iff inner_i <= outer_i for all i (missing parts read as 0)."""
    return all(
        x <= (outer[i] if i < len(outer) else 0) for i, x in enumerate(inner)
    )


def is_hook(p: Partition) -> bool:
    """Hook shapes: (), (a), or (a, 1, ..., 1)."""
    return all(x == 1 for x in p[1:])


def hook_leg(p: Partition) -> int:
    """Number of boxes below the first row of a hook."""
    if not is_hook(p):
        raise ValueError(f"{list(p)} is not a hook")
    return max(len(p) - 1, 0)


def hook_partition(total: int, leg: int) -> Partition:
    """The hook of given size with `leg` boxes below the first row."""
    if total <= 0:
        if total == 0 and leg == 0:
            return ()
        raise ValueError("hook size must be positive")
    if not 0 <= leg <= total - 1:
        raise ValueError(f"leg {leg} out of range for size {total}")
    return (total - leg,) + (1,) * leg


def hooks_of(n: int) -> tuple[Partition, ...]:
    if n == 0:
        return ((),)
    return tuple(hook_partition(n, k) for k in range(n))


@dataclass(frozen=True)
class SkewShape:
    """A skew diagram outer/inner considered with a fixed number of rows.

    `rows` may exceed the number of nonempty rows; the extra rows are
    empty and matter for which symmetric group the shape's class
    functions live on.  Construct through `skew_shape`, which validates
    containment and normalizes the parts.
    """

    outer: Partition
    inner: Partition
    rows: int

    @property
    def size(self) -> int:
        return sum(self.outer) - sum(self.inner)

    @property
    def length(self) -> int:
        """Largest row index (1-based) carrying a box; 0 for empty shapes."""
        mu, nu = self.padded()
        return max((i + 1 for i in range(self.rows) if mu[i] > nu[i]), default=0)

    def padded(self) -> tuple[tuple[int, ...], tuple[int, ...]]:
        """(outer, inner) padded with zeros to exactly `rows` entries."""
        mu = self.outer + (0,) * (self.rows - len(self.outer))
        nu = self.inner + (0,) * (self.rows - len(self.inner))
        return mu, nu

    def row_width(self, i: int) -> int:
        """Number of boxes in row i (1-based)."""
        mu, nu = self.padded()
        return mu[i - 1] - nu[i - 1]

    @property
    def has_empty_rows(self) -> bool:
        mu, nu = self.padded()
        return any(a == b for a, b in zip(mu, nu))

    @property
    def is_connected(self) -> bool:
        """No empty rows and consecutive rows overlap in some column."""
        if self.rows == 0 or self.has_empty_rows:
            return False
        mu, nu = self.padded()
        return all(mu[i + 1] > nu[i] for i in range(self.rows - 1))

    def to_json(self) -> dict:
        return {"outer": list(self.outer), "inner": list(self.inner), "rows": self.rows}

    @staticmethod
    def from_json(obj: dict) -> "SkewShape":
        return skew_shape(obj["outer"], obj.get("inner", ()), obj.get("rows"))

    def __str__(self) -> str:
        outer = ",".join(map(str, self.outer)) or "-"
        inner = ",".join(map(str, self.inner)) or "-"
        return f"({outer})/({inner})|rows={self.rows}"


def skew_shape(outer: Iterable[int], inner: Iterable[int] = (), rows: int | None = None) -> SkewShape:
    """Build a validated skew shape; `rows` defaults to the last nonempty row."""
    mu = check_partition(outer)
    nu = check_partition(inner)
    if not contains(nu, mu):
        raise ValueError(f"inner {list(nu)} does not fit inside outer {list(mu)}")
    length = max(
        (i + 1 for i in range(len(mu)) if mu[i] > (nu[i] if i < len(nu) else 0)),
        default=0,
    )
    if rows is None:
        rows = length
    if rows < length:
        raise ValueError(f"rows={rows} is less than the last nonempty row {length}")
    # Rows beyond `rows` are empty by the length check; drop them.
    mu = check_partition(mu[:rows])
    nu = check_partition(nu[:rows])
    return SkewShape(mu, nu, rows)


def _column_span(outer: Partition, inner: tuple[int, ...], col: int) -> tuple[int, int]:
    """Rows (0-based, half-open) of the cells in 1-based column `col`."""
    top = sum(1 for x in inner if x >= col)
    bot = sum(1 for x in outer if x >= col)
    return top, bot


@cache
def _ssyt_count(outer: Partition, inner: Partition, content: Partition) -> int:
    """Count semistandard fillings of outer/inner with `content` copies of 1..m.

    Column-by-column backtracking; rows weakly increase, columns strictly
    increase.  `content` is assumed normalized (positive, weakly decreasing).
    """
    size = sum(outer) - sum(inner)
    if sum(content) != size:
        return 0
    if size == 0:
        return 1
    m = len(content)
    ncols = outer[0]
    nu = inner + (0,) * (len(outer) - len(inner))
    spans = [_column_span(outer, nu, j) for j in range(1, ncols + 1)]
    remaining = list(content)
    grid = [[0] * ncols for _ in range(len(outer))]

    def fill(ci: int, row: int) -> int:
        if ci == ncols:
            return 1
        top, bot = spans[ci]
        if row < top:
            row = top
        if row >= bot:
            return fill(ci + 1, spans[ci + 1][0] if ci + 1 < ncols else 0)
        above = grid[row - 1][ci] if row > top else 0
        left = grid[row][ci - 1] if ci > 0 and nu[row] < ci else 0
        lo = max(above + 1, left, 1)
        hi = m - (bot - 1 - row)  # cells below need strictly larger values
        total = 0
        for v in range(lo, hi + 1):
            if remaining[v - 1] == 0:
                continue
            remaining[v - 1] -= 1
            grid[row][ci] = v
            total += fill(ci, row + 1)
            grid[row][ci] = 0
            remaining[v - 1] += 1
        return total

    return fill(0, spans[0][0])


def _normalize_content(content: Iterable[int]) -> Partition | None:
    """Sorted positive entries, or None if any entry is negative."""
    c = [int(x) for x in content]
    if any(x < 0 for x in c):
        return None
    return tuple(sorted((x for x in c if x > 0), reverse=True))


def kostka(theta: Iterable[int], content: Iterable[int]) -> int:
    """Number of SSYT of shape theta and content `content`.

    Total: returns 0 for negative entries or size mismatch.  Invariant
    under permuting the content and inserting zeros.
    """
    p = check_partition(theta)
    c = _normalize_content(content)
    if c is None or sum(c) != sum(p):
        return 0
    return _ssyt_count(p, (), c)


def kostka_hook(theta: Iterable[int], content: Iterable[int]) -> int:
    """Kostka number of a hook via the closed form binom(r-1, leg).

    r is the number of nonzero content entries.  Rejects non-hooks;
    agrees with `kostka` on its whole domain.
    """
    p = check_partition(theta)
    k = hook_leg(p)
    c = _normalize_content(content)
    if c is None or sum(c) != sum(p):
        return 0
    if sum(p) == 0:
        return 1
    return math.comb(len(c) - 1, k)


def skew_kostka(shape: SkewShape, content: Iterable[int]) -> int:
    """Number of SSYT of the given skew shape and content."""
    c = _normalize_content(content)
    if c is None or sum(c) != shape.size:
        return 0
    return _ssyt_count(shape.outer, shape.inner, c)


def lr_coefficient(theta: Iterable[int], lam: Iterable[int], sigma: Iterable[int]) -> int:
    """Littlewood-Richardson coefficient: lattice fillings of theta/lam with content sigma."""
    return _lr_count(check_partition(theta), check_partition(lam), check_partition(sigma))


@cache
def _lr_count(t: Partition, l: Partition, s: Partition) -> int:
    if not contains(l, t) or sum(l) + sum(s) != sum(t):
        return 0
    if sum(t) - sum(l) == 0:
        return 1
    # Cells in reverse reading order: rows top to bottom, right to left.
    nu = l + (0,) * (len(t) - len(l))
    cells = [(r, c) for r in range(len(t)) for c in range(t[r] - 1, nu[r] - 1, -1)]
    m = len(s)
    remaining = list(s)
    counts = [0] * (m + 1)  # counts[v] = copies of v read so far; counts[0] is a sentinel
    grid = [[0] * (t[0] if t else 0) for _ in range(len(t))]

    def fill(idx: int) -> int:
        if idx == len(cells):
            return 1
        r, c = cells[idx]
        right = grid[r][c + 1] if c + 1 < t[r] else 0
        above = grid[r - 1][c] if r > 0 and nu[r - 1] <= c < t[r - 1] else 0
        total = 0
        for v in range(above + 1, m + 1):
            if remaining[v - 1] == 0 or (right and v > right):
                continue
            if v > 1 and counts[v] >= counts[v - 1]:
                continue  # reverse reading word must stay a lattice word
            remaining[v - 1] -= 1
            counts[v] += 1
            grid[r][c] = v
            total += fill(idx + 1)
            grid[r][c] = 0
            counts[v] -= 1
            remaining[v - 1] += 1
        return total

    return fill(0)


@cache
def kostka_matrix(n: int) -> dict[Partition, dict[Partition, int]]:
    """K[theta][lam] for theta, lam partitions of n, in canonical order.

    Unitriangular: K[theta][lam] vanishes unless theta is at or before
    lam in the canonical (lex-decreasing) order, and K[theta][theta]=1.
    """
    parts = partitions_of(n)
    return {
        theta: {lam: kostka(theta, lam) for lam in parts}
        for theta in parts
    }


@cache
def inverse_kostka_matrix(n: int) -> dict[Partition, dict[Partition, int]]:
    """Exact integer inverse of the Kostka matrix by back-substitution."""
    parts = partitions_of(n)
    km = kostka_matrix(n)
    idx = {p: i for i, p in enumerate(parts)}
    size = len(parts)
    inv = [[0] * size for _ in range(size)]
    for j in range(size):
        for i in range(j, -1, -1):
            if i == j:
                inv[i][j] = 1
                continue
            acc = 0
            ki = km[parts[i]]
            for t in range(i + 1, j + 1):
                kit = ki[parts[t]]
                if kit:
                    acc += kit * inv[t][j]
            inv[i][j] = -acc
    return {
        p: {q: inv[idx[p]][idx[q]] for q in parts}
        for p in parts
    }


def partition_key(p: Partition) -> str:
    """JSON key for a partition, e.g. \"[3,1,1]\"."""
    return "[" + ",".join(map(str, p)) + "]"


def partition_from_key(key: str) -> Partition:
    return check_partition(json.loads(key))


def connected_skew_shapes(rows: int, size: int) -> Iterator[SkewShape]:
    """Connected skew shapes with exactly `rows` nonempty rows and `size` boxes.

    Shapes are produced in canonical position (last row starts in column 1),
    so each connected skew diagram appears exactly once.
    """
    if rows == 0:
        if size == 0:
            yield skew_shape((), (), 0)
        return
    if size < rows:
        return

    def rec(i: int, mu_below: int, nu_below: int, budget: int,
            mu_acc: list[int], nu_acc: list[int]) -> Iterator[SkewShape]:
        # Rows are chosen bottom-up; i counts rows still to place.
        if i == 0:
            if budget == 0:
                yield skew_shape(tuple(reversed(mu_acc)), tuple(reversed(nu_acc)), rows)
            return
        lo_nu = nu_below
        hi_nu = mu_below - 1 if mu_below else 0  # overlap with the row below
        if i == rows:
            lo_nu = hi_nu = 0  # bottom row anchored at column 1
        for nu_i in range(lo_nu, hi_nu + 1):
            max_width = budget - (i - 1)  # rows above still need a box each
            for width in range(1, max_width + 1):
                mu_i = nu_i + width
                if mu_below and mu_i < mu_below:
                    continue
                mu_acc.append(mu_i)
                nu_acc.append(nu_i)
                yield from rec(i - 1, mu_i, nu_i, budget - width, mu_acc, nu_acc)
                mu_acc.pop()
                nu_acc.pop()

    yield from rec(rows, 0, 0, size, [], [])
