"""Jacobi-Trudi matrices, Hessenberg functions, and immanants.

The matrix of a skew shape is stored as its grid of subscripts
``sub[i][j] = outer_i - inner_j + j - i`` (1-based indices): subscript 0
renders as the constant 1, negative subscripts as 0, and positive k as
the degree-k complete homogeneous function.  Immanants then reduce to
bookkeeping over multisets of subscripts.
"""

from __future__ import annotations

from dataclasses import dataclass

from .characters import ClassFunction
from .permutations import Permutation, cycle_type
from .symfunc import SymFunc, sym_func
from .tableaux import Partition, SkewShape


class NotHessenbergError(ValueError):
    """Raised when a vector fails the Hessenberg function invariants."""


@dataclass(frozen=True)
class HessenbergFunction:
    """A weakly increasing h: [n] -> [n] with h(i) >= i, stored as a vector."""

    values: tuple[int, ...]

    def __post_init__(self):
        n = len(self.values)
        for i, v in enumerate(self.values, start=1):
            if not i <= v <= n:
                raise NotHessenbergError(
                    f"h({i}) = {v} violates {i} <= h({i}) <= {n} in {list(self.values)}"
                )
        if any(a > b for a, b in zip(self.values, self.values[1:])):
            raise NotHessenbergError(f"{list(self.values)} is not weakly increasing")

    @property
    def n(self) -> int:
        return len(self.values)

    def __call__(self, i: int) -> int:
        return self.values[i - 1]

    def admits(self, w: Permutation) -> bool:
        """True iff w(i) <= h(i) for every i."""
        return all(x <= v for x, v in zip(w, self.values))

    @property
    def max_excess(self) -> int:
        """max over i of h(i) - i."""
        return max((v - i for i, v in enumerate(self.values, start=1)), default=0)

    def __str__(self) -> str:
        return "(" + ",".join(map(str, self.values)) + ")"


def hessenberg(values) -> HessenbergFunction:
    return HessenbergFunction(tuple(int(v) for v in values))


def hess_indicator(h: HessenbergFunction, w: Permutation) -> int:
    return 1 if h.admits(w) else 0


@dataclass(frozen=True)
class JTMatrix:
    """Subscript grid of the Jacobi-Trudi matrix of a skew shape."""

    n: int
    sub: tuple[tuple[int, ...], ...]

    def entry(self, i: int, j: int) -> int:
        """Subscript at row i, column j (1-based)."""
        return self.sub[i - 1][j - 1]

    def cell_label(self, i: int, j: int) -> str:
        s = self.entry(i, j)
        if s < 0:
            return "0"
        if s == 0:
            return "1"
        return f"h_{s}"

    def render(self) -> str:
        cells = [[self.cell_label(i, j) for j in range(1, self.n + 1)] for i in range(1, self.n + 1)]
        width = max((len(c) for row in cells for c in row), default=1)
        return "\n".join(" ".join(c.rjust(width) for c in row) for row in cells)

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "cells": [[self.cell_label(i, j) for j in range(1, self.n + 1)] for i in range(1, self.n + 1)],
            "subscripts": [list(row) for row in self.sub],
        }


def jt_matrix(shape: SkewShape) -> JTMatrix:
    mu, nu = shape.padded()
    n = shape.rows
    sub = tuple(
        tuple(mu[i] - nu[j] + (j + 1) - (i + 1) for j in range(n)) for i in range(n)
    )
    return JTMatrix(n, sub)


def hessenberg_from_skew(shape: SkewShape) -> HessenbergFunction:
    """h(j) = last row whose column-j entry is nonzero.

    Column entries strictly decrease downwards, so this is exactly the
    nonzero pattern of the matrix.  Total on valid skew shapes.
    """
    mu, nu = shape.padded()
    n = shape.rows
    values = []
    for j in range(n):
        h_j = 0
        for i in range(n):
            if mu[i] - nu[j] + (j + 1) - (i + 1) >= 0:
                h_j = i + 1
            else:
                break
        values.append(h_j)
    return hessenberg(values)


def hess_prime(shape: SkewShape) -> HessenbergFunction:
    """Nonzero pattern after replacing constant-1 entries by 0.

    Raises NotHessenbergError when some column loses its last entry at or
    below the diagonal; by convention such shapes are not pre-abelian.
    """
    mu, nu = shape.padded()
    n = shape.rows
    values = []
    for j in range(n):
        h_j = 0
        for i in range(n):
            if mu[i] - nu[j] + (j + 1) - (i + 1) > 0:
                h_j = i + 1
            else:
                break
        values.append(h_j)
    return hessenberg(values)


def immanant(chi: ClassFunction, shape: SkewShape) -> SymFunc:
    """The immanant of the shape's Jacobi-Trudi matrix, in the h basis.

    Sums chi(w) * h_{subscripts along w} over permutations, pruning any
    branch that hits a negative subscript (a zero matrix entry).
    """
    n = shape.rows
    if chi.n != n:
        raise ValueError(f"character on S_{chi.n} does not match shape with {n} rows")
    if n == 0:
        return sym_func("h", 0, {(): chi.values[()]})
    sub = jt_matrix(shape).sub
    coeffs: dict[Partition, int] = {}
    used = [False] * n
    choice = [0] * n

    def place(i: int) -> None:
        if i == n:
            w = tuple(choice)
            c = chi.values[cycle_type(w)]
            if c:
                key = tuple(
                    sorted((sub[r][w[r] - 1] for r in range(n) if sub[r][w[r] - 1] > 0), reverse=True)
                )
                coeffs[key] = coeffs.get(key, 0) + c
            return
        row = sub[i]
        for j in range(n):
            if not used[j] and row[j] >= 0:
                used[j] = True
                choice[i] = j + 1
                place(i + 1)
                used[j] = False

    place(0)
    return sym_func("h", shape.size, coeffs)
