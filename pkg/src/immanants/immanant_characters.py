"""Immanant characters of Jacobi-Trudi matrices and their hook expansions.

The immanant character of a shape at a partition theta is the class
function whose inner product with any virtual character phi reads off
the s_theta coefficient of the phi-immanant of the shape's Jacobi-Trudi
matrix.  For theta = (N) it collapses to the Stanley-Stembridge
character of the shape's Hessenberg function.  For hook thetas it
expands as an explicit non-negative sum of Stanley-Stembridge
characters, built here by lowering Hessenberg values at the columns
whose bottom nonzero entry is the constant 1.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass
from itertools import combinations

from .characters import ClassFunction, zee, zero_character
from .jacobitrudi import (
    HessenbergFunction,
    NotHessenbergError,
    hess_prime,
    hessenberg,
    hessenberg_from_skew,
    jt_matrix,
)
from .permutations import Permutation, conjugacy_classes
from .tableaux import Partition, SkewShape, check_partition, hook_leg, kostka


def content_vector(shape: SkewShape, w: Permutation) -> tuple[int, ...]:
    """The shuffled difference vector whose Kostka number weights w.

    Entry at position w(i) is (outer + staircase)_{w(i)} - (inner + staircase)_i,
    which is the matrix subscript in row w(i), column i.  The entries sum
    to the size of the shape.
    """
    mu, nu = shape.padded()
    n = shape.rows
    out = [0] * n
    for i in range(n):
        t = w[i] - 1
        out[t] = (mu[t] + (n - 1 - t)) - (nu[i] + (n - 1 - i))
    return tuple(out)


def immanant_character(theta, shape: SkewShape) -> ClassFunction:
    """Class function of the shape at theta, by direct class-by-class sums."""
    theta = check_partition(theta)
    if sum(theta) != shape.size:
        raise ValueError(
            f"theta has size {sum(theta)} but the shape has {shape.size} boxes"
        )
    n = shape.rows
    values = {}
    for rho, members in conjugacy_classes(n).items():
        acc = 0
        for w in members:
            acc += kostka(theta, content_vector(shape, w))
        values[rho] = zee(rho) * acc
    return ClassFunction(n, values)


def stanley_stembridge_character(h: HessenbergFunction) -> ClassFunction:
    """Value at a class is zee * number of class members staying under h."""
    n = h.n
    values = {}
    for rho, members in conjugacy_classes(n).items():
        count = sum(1 for w in members if h.admits(w))
        values[rho] = zee(rho) * count
    return ClassFunction(n, values)


def corner_subscripts(shape: SkewShape) -> tuple[int, ...]:
    """Subscript of the last nonzero entry of each column (the h(i)-th row)."""
    h = hessenberg_from_skew(shape)
    sub = jt_matrix(shape).sub
    return tuple(sub[h(i) - 1][i - 1] for i in range(1, shape.rows + 1))


def lowered_hessenberg(shape: SkewShape, subset: tuple[int, ...]) -> HessenbergFunction:
    """Lower h at the subset columns whose bottom nonzero entry is a 1."""
    h = hessenberg_from_skew(shape)
    d = corner_subscripts(shape)
    values = list(h.values)
    for i in subset:
        if d[i - 1] == 0:
            values[i - 1] -= 1
    return hessenberg(values)


@dataclass(frozen=True)
class HookDecomposition:
    """Multiset of Hessenberg functions expanding a hook immanant character."""

    theta: Partition
    shape: SkewShape
    base: HessenbergFunction
    leg: int
    summands: tuple[tuple[HessenbergFunction, int], ...]

    @property
    def total_multiplicity(self) -> int:
        return sum(m for _, m in self.summands)

    def multiplicity(self, h: HessenbergFunction) -> int:
        for cand, m in self.summands:
            if cand == h:
                return m
        raise KeyError(f"{h} is not a summand")

    def character(self) -> ClassFunction:
        out = zero_character(self.shape.rows)
        for h, m in self.summands:
            out = out + m * stanley_stembridge_character(h)
        return out

    def to_json(self) -> dict:
        return {
            "theta": list(self.theta),
            "shape": self.shape.to_json(),
            "h": list(self.base.values),
            "summands": [{"h": list(h.values), "mult": m} for h, m in self.summands],
        }


def hook_decomposition(theta, shape: SkewShape) -> HookDecomposition:
    """Expand the immanant character of a hook theta over lowered Hessenberg functions.

    One summand per leg-sized subset of the first n-1 columns, collected
    with multiplicities.  Requires a shape with no empty rows; callers
    must strip empty rows first (see reductions.remove_empty_rows).
    """
    theta = check_partition(theta)
    k = hook_leg(theta)
    if sum(theta) != shape.size:
        raise ValueError(
            f"theta has size {sum(theta)} but the shape has {shape.size} boxes"
        )
    if shape.has_empty_rows:
        raise ValueError("shape has empty rows; remove them first (remove_empty_rows)")
    n = shape.rows
    base = hessenberg_from_skew(shape)
    if k > n - 1:
        warnings.warn(
            f"leg {k} exceeds {n - 1}; the expansion is empty and the character is zero",
            stacklevel=2,
        )
        return HookDecomposition(theta, shape, base, k, ())
    collected: dict[tuple[int, ...], int] = {}
    order: list[tuple[int, ...]] = []
    for subset in combinations(range(1, n), k):
        hj = lowered_hessenberg(shape, subset)
        if hj.values not in collected:
            collected[hj.values] = 0
            order.append(hj.values)
        collected[hj.values] += 1
    summands = tuple((hessenberg(v), collected[v]) for v in order)
    return HookDecomposition(theta, shape, base, k, summands)


def collected_coefficient(decomp: HookDecomposition, h: HessenbergFunction) -> int:
    """Closed-form multiplicity binom(a, b) of a collected summand.

    a counts the first n-1 columns whose bottom nonzero entry has positive
    subscript; b is the leg minus the number of lowered values.  Checked
    against the enumerated multiplicity.
    """
    enumerated = decomp.multiplicity(h)  # KeyError if not a summand
    d = corner_subscripts(decomp.shape)
    n = decomp.shape.rows
    a = sum(1 for i in range(1, n) if d[i - 1] > 0)
    b = decomp.leg - sum(
        1 for i in range(1, n) if decomp.base.values[i - 1] != h.values[i - 1]
    )
    predicted = math.comb(a, b) if b >= 0 else 0
    if predicted != enumerated:
        raise AssertionError(
            f"multiplicity formula binom({a},{b})={predicted} disagrees with "
            f"enumerated {enumerated} for {h}"
        )
    return predicted


def is_abelian(h: HessenbergFunction) -> bool:
    """h(1) = n, or the value at position h(1)+1 is n."""
    n = h.n
    if n == 0:
        return True
    if h(1) == n:
        return True
    return h(h(1) + 1) == n


def is_preabelian(shape: SkewShape) -> bool:
    """True when the ones-deleted nonzero pattern is an abelian Hessenberg function."""
    try:
        return is_abelian(hess_prime(shape))
    except NotHessenbergError:
        return False


def is_dahlberg_small(h: HessenbergFunction) -> bool:
    """h(i) - i <= 2 everywhere."""
    return h.max_excess <= 2
