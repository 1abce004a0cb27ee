"""Exact expansions of homogeneous symmetric functions in the m/h/s/p bases.

Conversions route through the Schur basis: the Kostka matrix handles
m/h/s, and the irreducible character table handles the power-sum basis.
Products are taken in the power-sum basis, where multiplication is
concatenation of indices.  Coefficients are exact: integers in the m, h
and s bases, rationals in the p basis.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .characters import ClassFunction, character_table, zee
from .tableaux import (
    Partition,
    SkewShape,
    check_partition,
    inverse_kostka_matrix,
    kostka_matrix,
    lr_coefficient,
    partition_from_key,
    partition_key,
    partitions_of,
)

BASES = ("m", "h", "s", "p")

#: Character tables grow super-polynomially; everything in this artifact
#: needs degree <= 9, so 12 leaves headroom without inviting blowups.
MAX_DEGREE = 12


def _check_degree(n: int) -> None:
    if n > MAX_DEGREE:
        raise ValueError(f"degree {n} exceeds the supported bound {MAX_DEGREE}")


@dataclass(frozen=True)
class SymFunc:
    """A homogeneous symmetric function in one declared basis."""

    basis: str
    degree: int
    coeffs: dict[Partition, "int | Fraction"]

    def coefficient(self, lam) -> "int | Fraction":
        return self.coeffs.get(check_partition(lam), 0)

    def __add__(self, other: "SymFunc") -> "SymFunc":
        if (self.basis, self.degree) != (other.basis, other.degree):
            raise ValueError("can only add same-basis, same-degree expansions")
        merged = dict(self.coeffs)
        for lam, c in other.coeffs.items():
            merged[lam] = merged.get(lam, 0) + c
        return sym_func(self.basis, self.degree, merged)

    def __sub__(self, other: "SymFunc") -> "SymFunc":
        return self + (-1) * other

    def __rmul__(self, c) -> "SymFunc":
        return sym_func(self.basis, self.degree, {l: c * v for l, v in self.coeffs.items()})

    def to_json(self) -> dict:
        coeffs = {}
        for lam in partitions_of(self.degree):
            if lam in self.coeffs:
                c = self.coeffs[lam]
                coeffs[partition_key(lam)] = c if isinstance(c, int) else str(c)
        return {"basis": self.basis, "degree": self.degree, "coeffs": coeffs}

    @staticmethod
    def from_json(obj: dict) -> "SymFunc":
        coeffs = {}
        for key, val in obj["coeffs"].items():
            coeffs[partition_from_key(key)] = (
                int(val) if isinstance(val, int) else Fraction(val)
            )
        return sym_func(obj["basis"], int(obj["degree"]), coeffs)

    def __str__(self) -> str:
        terms = []
        for lam in partitions_of(self.degree):
            if lam in self.coeffs:
                c = self.coeffs[lam]
                terms.append(f"{c}*{self.basis}{list(lam)}")
        return " + ".join(terms) if terms else "0"


def sym_func(basis: str, degree: int, coeffs: dict) -> SymFunc:
    """Normalize an expansion: validate indices, drop zeros, demote 1-denominators."""
    if basis not in BASES:
        raise ValueError(f"unknown basis {basis!r}; expected one of {BASES}")
    clean: dict[Partition, "int | Fraction"] = {}
    for lam, c in coeffs.items():
        lam = check_partition(lam)
        if sum(lam) != degree:
            raise ValueError(f"index {list(lam)} has size {sum(lam)}, expected {degree}")
        if isinstance(c, Fraction) and c.denominator == 1:
            c = int(c)
        if c != 0:
            clean[lam] = c
    return SymFunc(basis, degree, clean)


def _require_integral(f: SymFunc) -> SymFunc:
    bad = {l: c for l, c in f.coeffs.items() if not isinstance(c, int)}
    if bad:
        raise ArithmeticError(f"non-integral coefficients in {f.basis} basis: {bad}")
    return f


def _to_schur(f: SymFunc) -> SymFunc:
    n = f.degree
    if f.basis == "s":
        return f
    out: dict[Partition, "int | Fraction"] = {}
    if f.basis == "h":
        km = kostka_matrix(n)
        for lam, c in f.coeffs.items():
            for theta in partitions_of(n):
                k = km[theta][lam]
                if k:
                    out[theta] = out.get(theta, 0) + c * k
    elif f.basis == "m":
        inv = inverse_kostka_matrix(n)
        for lam, c in f.coeffs.items():
            row = inv[lam]
            for theta, k in row.items():
                if k:
                    out[theta] = out.get(theta, 0) + c * k
    elif f.basis == "p":
        table = character_table(n)
        for rho, c in f.coeffs.items():
            for lam, chi in table.items():
                v = chi.values[rho]
                if v:
                    out[lam] = out.get(lam, 0) + c * v
    return sym_func("s", n, out)


def _from_schur(f: SymFunc, basis: str) -> SymFunc:
    n = f.degree
    if basis == "s":
        return f
    out: dict[Partition, "int | Fraction"] = {}
    if basis == "m":
        km = kostka_matrix(n)
        for theta, c in f.coeffs.items():
            for lam, k in km[theta].items():
                if k:
                    out[lam] = out.get(lam, 0) + c * k
    elif basis == "h":
        inv = inverse_kostka_matrix(n)
        for theta, c in f.coeffs.items():
            for lam in partitions_of(n):
                k = inv[lam][theta]
                if k:
                    out[lam] = out.get(lam, 0) + c * k
    elif basis == "p":
        table = character_table(n)
        for lam, c in f.coeffs.items():
            chi = table[lam]
            for rho in partitions_of(n):
                v = chi.values[rho]
                if v:
                    out[rho] = out.get(rho, 0) + Fraction(c * v, zee(rho))
    return sym_func(basis, n, out)


def convert(f: SymFunc, basis: str) -> SymFunc:
    """Exact change of basis; any direction, composed through the Schur basis."""
    if basis not in BASES:
        raise ValueError(f"unknown basis {basis!r}; expected one of {BASES}")
    _check_degree(f.degree)
    if basis == f.basis:
        return f
    out = _from_schur(_to_schur(f), basis)
    if basis in ("m", "h", "s") and f.basis in ("m", "h", "s"):
        _require_integral(out)
    return out


def multiply(f: SymFunc, g: SymFunc) -> SymFunc:
    """Product computed in the power-sum basis, returned in f's basis."""
    _check_degree(f.degree + g.degree)
    fp, gp = convert(f, "p"), convert(g, "p")
    out: dict[Partition, "int | Fraction"] = {}
    for a, ca in fp.coeffs.items():
        for b, cb in gp.coeffs.items():
            key = tuple(sorted(a + b, reverse=True))
            out[key] = out.get(key, 0) + ca * cb
    return convert(sym_func("p", f.degree + g.degree, out), f.basis)


def sym_inner_product(f: SymFunc, g: SymFunc):
    """The inner product making the Schur basis orthonormal."""
    if f.degree != g.degree:
        return 0
    fs, gs = convert(f, "s"), convert(g, "s")
    total = 0
    for lam, c in fs.coeffs.items():
        d = gs.coeffs.get(lam)
        if d:
            total += c * d
    return total


def schur(lam) -> SymFunc:
    lam = check_partition(lam)
    return sym_func("s", sum(lam), {lam: 1})


def homogeneous(lam) -> SymFunc:
    lam = check_partition(lam)
    return sym_func("h", sum(lam), {lam: 1})


def skew_schur(shape: SkewShape) -> SymFunc:
    """Schur expansion of the skew Schur function via LR coefficients."""
    out = {}
    for sigma in partitions_of(shape.size):
        c = lr_coefficient(shape.outer, shape.inner, sigma)
        if c:
            out[sigma] = c
    return sym_func("s", shape.size, out)


def frobenius(chi: ClassFunction) -> SymFunc:
    """Frobenius characteristic: sum of chi(rho)/zee(rho) * p_rho."""
    coeffs = {rho: Fraction(v, zee(rho)) for rho, v in chi.values.items() if v}
    return sym_func("p", chi.n, coeffs)


def frobenius_inverse(f: SymFunc) -> ClassFunction:
    """Recover the class function whose characteristic is f (must be integral)."""
    fp = convert(f, "p")
    values = {}
    for rho in partitions_of(f.degree):
        c = zee(rho) * fp.coeffs.get(rho, 0)
        if c != int(c):
            raise ArithmeticError(f"not a virtual character: value at {rho} is {c}")
        values[rho] = int(c)
    return ClassFunction(f.degree, values)
