"""Integer class functions on symmetric groups and their standard bases.

A virtual character is represented by its values on cycle types.  Three
bases of the space of virtual characters are provided: the irreducible
characters (computed by the Murnaghan-Nakayama recursion), the induced
trivial characters (Kostka-positive sums of irreducibles), and the
monomial virtual characters (obtained by inverting the unitriangular
Kostka matrix, so everything stays in exact integer arithmetic).
"""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from functools import cache

from .tableaux import (
    Partition,
    check_partition,
    inverse_kostka_matrix,
    kostka_matrix,
    partition_from_key,
    partition_key,
    partitions_of,
)


def zee(rho: Partition) -> int:
    """Centralizer order: product of i^m_i * m_i! over part multiplicities."""
    out = 1
    mult: dict[int, int] = {}
    for part in rho:
        mult[part] = mult.get(part, 0) + 1
    for part, m in mult.items():
        out *= part**m * math.factorial(m)
    return out


def class_size(rho: Partition) -> int:
    """Number of permutations with cycle type rho."""
    return math.factorial(sum(rho)) // zee(rho)


@dataclass(frozen=True)
class ClassFunction:
    """An integer-valued function on the cycle types of S_n."""

    n: int
    values: dict[Partition, int]

    def __post_init__(self):
        expected = set(partitions_of(self.n))
        if set(self.values) != expected:
            missing = expected - set(self.values)
            raise ValueError(f"missing values for cycle types {sorted(missing)}")

    def __call__(self, rho) -> int:
        return self.values[check_partition(rho)]

    def __add__(self, other: "ClassFunction") -> "ClassFunction":
        if self.n != other.n:
            raise ValueError(f"cannot add class functions on S_{self.n} and S_{other.n}")
        return ClassFunction(self.n, {r: v + other.values[r] for r, v in self.values.items()})

    def __sub__(self, other: "ClassFunction") -> "ClassFunction":
        return self + (-1) * other

    def __rmul__(self, c: int) -> "ClassFunction":
        return ClassFunction(self.n, {r: c * v for r, v in self.values.items()})

    def to_json(self) -> dict:
        order = reversed(partitions_of(self.n))  # identity class first
        return {
            "n": self.n,
            "values": {partition_key(r): self.values[r] for r in order},
        }

    @staticmethod
    def from_json(obj: dict) -> "ClassFunction":
        values = {partition_from_key(k): int(v) for k, v in obj["values"].items()}
        return ClassFunction(int(obj["n"]), values)


def zero_character(n: int) -> ClassFunction:
    return ClassFunction(n, {rho: 0 for rho in partitions_of(n)})


def trivial_character(n: int) -> ClassFunction:
    return ClassFunction(n, {rho: 1 for rho in partitions_of(n)})


def sign_character(n: int) -> ClassFunction:
    return ClassFunction(n, {rho: (-1) ** (n - len(rho)) for rho in partitions_of(n)})


def _beta_numbers(shape: Partition) -> tuple[int, ...]:
    ell = len(shape)
    return tuple(shape[i] + ell - 1 - i for i in range(ell))


def _shape_from_betas(betas: list[int]) -> Partition:
    betas = sorted(betas, reverse=True)
    ell = len(betas)
    parts = tuple(b - (ell - 1 - i) for i, b in enumerate(betas))
    return check_partition(parts)


@cache
def _mn_value(shape: Partition, rho: Partition) -> int:
    """Murnaghan-Nakayama: alternating sum over border-strip removals."""
    if not rho:
        return 1 if not shape else 0
    strip, rest = rho[0], rho[1:]
    betas = _beta_numbers(shape)
    beta_set = set(betas)
    total = 0
    for b in betas:
        nb = b - strip
        if nb < 0 or nb in beta_set:
            continue
        height = sum(1 for c in betas if nb < c < b)
        new_shape = _shape_from_betas([nb if c == b else c for c in betas])
        term = _mn_value(new_shape, rest)
        total += -term if height % 2 else term
    return total


@cache
def irreducible_character(lam) -> ClassFunction:
    lam = check_partition(lam)
    n = sum(lam)
    return ClassFunction(n, {rho: _mn_value(lam, rho) for rho in partitions_of(n)})


@cache
def character_table(n: int) -> dict[Partition, ClassFunction]:
    return {lam: irreducible_character(lam) for lam in partitions_of(n)}


@cache
def induced_trivial_character(lam) -> ClassFunction:
    """Permutation character on cosets of the Young subgroup of shape lam."""
    lam = check_partition(lam)
    n = sum(lam)
    km = kostka_matrix(n)
    out = zero_character(n)
    for theta in partitions_of(n):
        coeff = km[theta][lam]
        if coeff:
            out = out + coeff * irreducible_character(theta)
    return out


@cache
def monomial_character(lam) -> ClassFunction:
    """The virtual character dual to the induced trivial basis."""
    lam = check_partition(lam)
    n = sum(lam)
    inv = inverse_kostka_matrix(n)[lam]
    out = zero_character(n)
    for theta in partitions_of(n):
        coeff = inv[theta]
        if coeff:
            out = out + coeff * irreducible_character(theta)
    return out


def inner_product(chi: ClassFunction, psi: ClassFunction) -> Fraction:
    """(1/n!) sum over S_n of chi*psi, evaluated class by class."""
    if chi.n != psi.n:
        raise ValueError(f"mismatched group sizes {chi.n} and {psi.n}")
    total = sum(class_size(rho) * chi.values[rho] * psi.values[rho] for rho in chi.values)
    return Fraction(total, math.factorial(chi.n))


def _part_multiplicities(rho: Partition) -> list[tuple[int, int]]:
    mult: dict[int, int] = {}
    for part in rho:
        mult[part] = mult.get(part, 0) + 1
    return sorted(mult.items())


def _splits(rho: Partition, k: int):
    """All ways to split the multiset rho into (alpha, beta) with |alpha|=k.

    Yields (alpha, beta, weight) where weight counts the splits of labelled
    cycles realizing the pair, i.e. the product of binomials over part sizes.
    """
    mults = _part_multiplicities(rho)

    def rec(idx: int, remaining: int, alpha: list[int], weight: int):
        if idx == len(mults):
            if remaining == 0:
                taken = Counter(alpha)
                beta = [p for p, m in mults for _ in range(m - taken[p])]
                yield (
                    tuple(sorted(alpha, reverse=True)),
                    tuple(sorted(beta, reverse=True)),
                    weight,
                )
            return
        part, m = mults[idx]
        for take in range(m + 1):
            if part * take > remaining:
                break
            alpha.extend([part] * take)
            yield from rec(idx + 1, remaining - part * take, alpha, weight * math.comb(m, take))
            del alpha[len(alpha) - take :]

    yield from rec(0, k, [], 1)


def induction_product(phi: ClassFunction, psi: ClassFunction) -> ClassFunction:
    """Character induced from the outer product on S_k x S_r inside S_{k+r}."""
    k, r = phi.n, psi.n
    n = k + r
    values = {}
    for rho in partitions_of(n):
        acc = 0
        for alpha, beta, weight in _splits(rho, k):
            acc += weight * phi.values[alpha] * psi.values[beta]
        values[rho] = acc
    return ClassFunction(n, values)


@dataclass(frozen=True)
class HPositiveDecomposition:
    """Expansion of a class function over the induced trivial basis."""

    n: int
    coefficients: dict[Partition, Fraction]
    is_integral: bool
    is_nonnegative: bool

    def coefficient(self, lam) -> Fraction:
        return self.coefficients[check_partition(lam)]

    def to_json(self) -> dict:
        coeffs = {}
        for lam in partitions_of(self.n):
            c = self.coefficients[lam]
            coeffs[partition_key(lam)] = int(c) if c.denominator == 1 else str(c)
        return {
            "n": self.n,
            "coefficients": coeffs,
            "integral": self.is_integral,
            "nonnegative": self.is_nonnegative,
        }


def h_positive_decomposition(chi: ClassFunction) -> HPositiveDecomposition:
    """Coefficients of chi over the induced trivial characters.

    The coefficient at lam is the inner product with the dual monomial
    virtual character.  Non-integral coefficients mean chi is not a
    virtual character; they are reported, not raised.  For integral
    results the expansion is re-summed and checked against chi exactly.
    """
    n = chi.n
    coeffs = {
        lam: inner_product(chi, monomial_character(lam)) for lam in partitions_of(n)
    }
    integral = all(c.denominator == 1 for c in coeffs.values())
    nonneg = all(c >= 0 for c in coeffs.values())
    if integral:
        recon = zero_character(n)
        for lam, c in coeffs.items():
            if c:
                recon = recon + int(c) * induced_trivial_character(lam)
        if recon != chi:
            raise AssertionError("induced-trivial expansion failed to reconstruct input")
    return HPositiveDecomposition(n, coeffs, integral, nonneg)
