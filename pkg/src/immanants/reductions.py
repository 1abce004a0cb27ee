"""Reductions that shrink immanant-character computations.

Empty rows can be deleted, connected components can be reordered or
split off, and a character computed on the minimal number of rows
induces up to any larger symmetric group.  Disconnected shapes factor
through induction products of their components weighted by
Littlewood-Richardson coefficients.
"""

from __future__ import annotations

from .characters import ClassFunction, induction_product, zero_character
from .immanant_characters import immanant_character
from .tableaux import (
    SkewShape,
    check_partition,
    contains,
    lr_coefficient,
    partitions_of,
    skew_shape,
)


def remove_empty_rows(shape: SkewShape) -> SkewShape:
    """Drop every row with no boxes (including padding rows)."""
    mu, nu = shape.padded()
    keep = [(m, v) for m, v in zip(mu, nu) if m > v]
    return skew_shape(
        tuple(m for m, _ in keep), tuple(v for _, v in keep), len(keep)
    )


def components(shape: SkewShape) -> list[SkewShape]:
    """Maximal blocks of consecutive overlapping rows, re-based to column 1.

    Requires a shape with no empty rows.  Two consecutive rows belong to
    the same component when the lower row reaches the upper row's first
    column.  Each block is shifted left so it becomes a skew shape in its
    own right.
    """
    if shape.rows == 0:
        return []
    if shape.has_empty_rows:
        raise ValueError("components are defined for shapes with no empty rows")
    mu, nu = shape.padded()
    n = shape.rows
    blocks = []
    start = 0
    for i in range(n - 1):
        if mu[i + 1] <= nu[i]:
            blocks.append((start, i + 1))
            start = i + 1
    blocks.append((start, n))
    out = []
    for lo, hi in blocks:
        offset = nu[hi - 1]
        out.append(
            skew_shape(
                tuple(mu[i] - offset for i in range(lo, hi)),
                tuple(nu[i] - offset for i in range(lo, hi)),
                hi - lo,
            )
        )
    return out


def induce_up(chi: ClassFunction) -> ClassFunction:
    """Induce from S_n to S_{n+1} using the closed class-size form.

    The value at a cycle type is the number of fixed points times the
    value at the type with one fixed point removed; classes without
    fixed points meet the smaller group in nothing and get 0.
    """
    n = chi.n + 1
    values = {}
    for rho in partitions_of(n):
        fixed = sum(1 for p in rho if p == 1)
        if fixed == 0:
            values[rho] = 0
            continue
        shrunk = list(rho)
        shrunk.remove(1)
        values[rho] = fixed * chi.values[tuple(shrunk)]
    return ClassFunction(n, values)


def induce_to(chi: ClassFunction, n: int) -> ClassFunction:
    """Repeated one-letter induction up to S_n."""
    if n < chi.n:
        raise ValueError(f"cannot induce from S_{chi.n} down to S_{n}")
    out = chi
    while out.n < n:
        out = induce_up(out)
    return out


def immanant_character_from_components(theta, shape: SkewShape) -> ClassFunction:
    """Immanant character of a disconnected shape from its components.

    Splits off the top component and recurses: the character is the
    LR-weighted sum of induction products over the ways of sharing theta
    between the split.  Rejects connected input; padding rows are handled
    by inducing the minimal-row answer up to the requested row count.
    """
    theta = check_partition(theta)
    if sum(theta) != shape.size:
        raise ValueError(
            f"theta has size {sum(theta)} but the shape has {shape.size} boxes"
        )
    reduced = remove_empty_rows(shape)
    comps = components(reduced)
    if len(comps) < 2:
        raise ValueError("shape is connected; compute the immanant character directly")
    return induce_to(_product_over_components(theta, comps), shape.rows)


def _product_over_components(theta, comps: list[SkewShape]) -> ClassFunction:
    if len(comps) == 1:
        return immanant_character(theta, comps[0])
    first, rest = comps[0], comps[1:]
    n_total = sum(c.rows for c in comps)
    size_rest = sum(c.size for c in rest)
    out = zero_character(n_total)
    right_factors: dict[tuple, ClassFunction] = {}
    for lam in partitions_of(first.size):
        if not contains(lam, theta):
            continue
        left = None
        for sigma in partitions_of(size_rest):
            c = lr_coefficient(theta, lam, sigma)
            if not c:
                continue
            if left is None:
                left = immanant_character(lam, first)
            if sigma not in right_factors:
                right_factors[sigma] = _product_over_components(sigma, rest)
            out = out + c * induction_product(left, right_factors[sigma])
    return out
