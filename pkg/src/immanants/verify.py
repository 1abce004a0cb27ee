"""Machine verification sweeps for the identities behind the library.

Each check runs a family of instances and returns a report with the
instance count and explicit witnesses for any failures.  A failure here
would falsify the implementation, not the theorems being exercised.
"""

from __future__ import annotations

import math
import os
import random
import warnings
from dataclasses import dataclass, field
from itertools import product
from multiprocessing import Pool

from .characters import (
    ClassFunction,
    character_table,
    h_positive_decomposition,
    induced_trivial_character,
    induction_product,
    inner_product,
    monomial_character,
    sign_character,
    zee,
)
from .immanant_characters import (
    collected_coefficient,
    hook_decomposition,
    immanant_character,
    is_dahlberg_small,
    stanley_stembridge_character,
)
from .jacobitrudi import hessenberg_from_skew, immanant
from .permutations import conjugacy_classes
from .reductions import (
    components,
    immanant_character_from_components,
    induce_up,
    remove_empty_rows,
)
from .symfunc import convert, skew_schur
from .tableaux import (
    SkewShape,
    check_partition,
    connected_skew_shapes,
    hook_leg,
    hook_partition,
    hooks_of,
    kostka,
    kostka_hook,
    partitions_of,
    skew_shape,
)


@dataclass
class CheckReport:
    """Outcome of one named verification check."""

    name: str
    instances: int = 0
    failures: list[dict] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def merge(self, other: "CheckReport") -> None:
        self.instances += other.instances
        self.failures.extend(other.failures)

    def to_json(self) -> dict:
        return {
            "proposition": self.name,
            "instances": self.instances,
            "failures": self.failures,
        }


def _shape_desc(shape: SkewShape) -> dict:
    return shape.to_json()


def verify_hook_decomposition(theta, shape: SkewShape) -> CheckReport:
    """Check the hook expansion on one (theta, shape) instance.

    Verifies, for every permutation, that the Kostka number of the
    shuffled content equals the number of lowered Hessenberg functions
    admitting the permutation; verifies the class-function equality that
    follows; and checks the closed-form collected multiplicities against
    the enumerated ones.
    """
    theta = check_partition(theta)
    report = CheckReport("hook-expansion")
    n = shape.rows
    k = hook_leg(theta)
    decomp = hook_decomposition(theta, shape)
    base = decomp.base.values
    lowered = [
        (h.values, mult) for h, mult in decomp.summands
    ]
    # Sandwich invariant: every summand sits between h-1 and h pointwise.
    for values, _ in lowered:
        if not all(b - 1 <= v <= b for v, b in zip(values, base)):
            report.failures.append(
                {"shape": _shape_desc(shape), "theta": list(theta), "bad_summand": list(values)}
            )
    expanded = [values for values, mult in lowered for _ in range(mult)]
    if len(expanded) != (math.comb(n - 1, k) if k <= n - 1 else 0):
        report.failures.append(
            {
                "shape": _shape_desc(shape),
                "theta": list(theta),
                "error": f"expected binom({n - 1},{k}) summands, got {len(expanded)}",
            }
        )
    for h, _ in decomp.summands:
        try:
            collected_coefficient(decomp, h)
        except AssertionError as exc:
            report.failures.append(
                {"shape": _shape_desc(shape), "theta": list(theta), "error": str(exc)}
            )

    mu, nu = shape.padded()
    mud = tuple(mu[i] + n - 1 - i for i in range(n))
    nud = tuple(nu[i] + n - 1 - i for i in range(n))
    kostka_memo: dict[tuple[int, ...], int] = {}
    lhs: dict[tuple, int] = {}
    rhs: dict[tuple, int] = {}
    for rho, members in conjugacy_classes(n).items():
        acc_l = acc_r = 0
        for w in members:
            hat = [0] * n
            for i in range(n):
                hat[w[i] - 1] = mud[w[i] - 1] - nud[i]
            if min(hat) < 0:  # a zero matrix entry on the diagonal of w
                kval = 0
            else:
                key = tuple(sorted(hat))
                kval = kostka_memo.get(key)
                if kval is None:
                    kval = kostka(theta, hat)
                    kostka_memo[key] = kval
            sval = 0
            for values, mult in lowered:
                if all(w[i] <= values[i] for i in range(n)):
                    sval += mult
            if kval != sval:
                report.failures.append(
                    {
                        "shape": _shape_desc(shape),
                        "theta": list(theta),
                        "w": list(w),
                        "kostka": kval,
                        "indicator_sum": sval,
                    }
                )
            acc_l += kval
            acc_r += sval
        lhs[rho] = zee(rho) * acc_l
        rhs[rho] = zee(rho) * acc_r
    if lhs != rhs:
        report.failures.append(
            {
                "shape": _shape_desc(shape),
                "theta": list(theta),
                "error": "class functions differ",
                "lhs": {str(list(r)): v for r, v in lhs.items()},
                "rhs": {str(list(r)): v for r, v in rhs.items()},
            }
        )
    report.instances += 1
    return report


def _hook_worker(task: tuple[tuple, SkewShape]) -> CheckReport:
    theta, shape = task
    return verify_hook_decomposition(theta, shape)


def _thread_cap() -> int:
    try:
        return max(1, int(os.environ.get("IMMANANT_THREADS", "1")))
    except ValueError:
        return 1


def suite_hook(max_n: int = 5, max_size: int = 9) -> CheckReport:
    """Hook expansion over every connected shape and hook within bounds."""
    report = CheckReport("hook-expansion")
    tasks = []
    for n in range(1, max_n + 1):
        for size in range(n, max_size + 1):
            for shape in connected_skew_shapes(n, size):
                for k in range(0, min(n - 1, size - 1) + 1):
                    tasks.append((hook_partition(size, k), shape))
    threads = _thread_cap()
    if threads > 1 and len(tasks) > 8:
        with Pool(threads) as pool:
            results = pool.map(_hook_worker, tasks, chunksize=16)
    else:
        results = [_hook_worker(t) for t in tasks]
    for r in results:
        report.merge(r)
    return report


def verify_character_equality(
    name: str, lhs: ClassFunction, rhs: ClassFunction, context: dict
) -> CheckReport:
    report = CheckReport(name, instances=1)
    if lhs != rhs:
        diffs = {
            str(list(rho)): [lhs.values[rho], rhs.values[rho]]
            for rho in lhs.values
            if lhs.values[rho] != rhs.values.get(rho)
        }
        report.failures.append({**context, "differs_at": diffs})
    return report


def verify_empty_row_removal(shape: SkewShape, thetas=None) -> CheckReport:
    """Dropping empty rows leaves the immanant character unchanged."""
    report = CheckReport("empty-row-removal")
    reduced = remove_empty_rows(shape)
    padded = skew_shape(reduced.outer, reduced.inner, shape.rows)
    for theta in thetas or partitions_of(shape.size):
        report.merge(
            verify_character_equality(
                "empty-row-removal",
                immanant_character(theta, shape),
                immanant_character(theta, padded),
                {"shape": _shape_desc(shape), "theta": list(theta)},
            )
        )
    return report


def verify_component_reorder(a: SkewShape, b: SkewShape, thetas=None) -> CheckReport:
    """Shapes with identical components have identical immanant characters."""
    if a.rows != b.rows or a.size != b.size:
        raise ValueError("shapes must share the same row count and size")
    report = CheckReport("component-reorder")
    for theta in thetas or partitions_of(a.size):
        report.merge(
            verify_character_equality(
                "component-reorder",
                immanant_character(theta, a),
                immanant_character(theta, b),
                {"shapes": [_shape_desc(a), _shape_desc(b)], "theta": list(theta)},
            )
        )
    return report


def verify_disconnected_product(shape: SkewShape, thetas=None) -> CheckReport:
    """The component product formula agrees with the direct computation."""
    report = CheckReport("disconnected-product")
    for theta in thetas or partitions_of(shape.size):
        report.merge(
            verify_character_equality(
                "disconnected-product",
                immanant_character(theta, shape),
                immanant_character_from_components(theta, shape),
                {"shape": _shape_desc(shape), "theta": list(theta)},
            )
        )
    return report


def verify_stanley_stembridge_product(shape: SkewShape) -> CheckReport:
    """On disconnected shapes the top character factors as one induction product."""
    report = CheckReport("stanley-stembridge-product", instances=1)
    comps = components(remove_empty_rows(shape))
    if len(comps) < 2:
        raise ValueError("need a disconnected shape")
    prod = stanley_stembridge_character(hessenberg_from_skew(comps[0]))
    for comp in comps[1:]:
        prod = induction_product(prod, stanley_stembridge_character(hessenberg_from_skew(comp)))
    direct = immanant_character((shape.size,), shape)
    if direct != prod:
        report.failures.append({"shape": _shape_desc(shape)})
    return report


def verify_induction_stability(shape: SkewShape, thetas=None) -> CheckReport:
    """Adding one empty row means inducing up one letter."""
    report = CheckReport("induction-stability")
    bigger = skew_shape(shape.outer, shape.inner, shape.rows + 1)
    for theta in thetas or partitions_of(shape.size):
        report.merge(
            verify_character_equality(
                "induction-stability",
                immanant_character(theta, bigger),
                induce_up(immanant_character(theta, shape)),
                {"shape": _shape_desc(shape), "theta": list(theta)},
            )
        )
    return report


def suite_kostka(max_n: int = 5, max_size: int = 8) -> CheckReport:
    """Closed hook formula vs direct counting over bounded contents."""
    report = CheckReport("hook-kostka")
    by_total: dict[int, list[tuple[int, ...]]] = {}
    for content in product(range(5), repeat=6):
        by_total.setdefault(sum(content), []).append(content)
    for total in range(0, max_size + 1):
        for theta in hooks_of(total):
            for content in by_total.get(total, ()):
                report.instances += 1
                if kostka(theta, content) != kostka_hook(theta, content):
                    report.failures.append(
                        {"theta": list(theta), "content": list(content)}
                    )
    return report


def suite_characters(max_n: int = 7, max_size: int = 0) -> CheckReport:
    """Orthonormality of irreducibles and duality of the eta/phi bases."""
    report = CheckReport("character-duality")
    for n in range(0, max_n + 1):
        parts = partitions_of(n)
        irr = {lam: character_table(n)[lam] for lam in parts}
        eta = {lam: induced_trivial_character(lam) for lam in parts}
        phi = {lam: monomial_character(lam) for lam in parts}
        for a in parts:
            for b in parts:
                report.instances += 2
                want = 1 if a == b else 0
                if inner_product(irr[a], irr[b]) != want:
                    report.failures.append({"n": n, "pair": [list(a), list(b)], "basis": "irr"})
                if inner_product(phi[a], eta[b]) != want:
                    report.failures.append({"n": n, "pair": [list(a), list(b)], "basis": "phi-eta"})
    return report


def _immanant_test_shapes() -> list[SkewShape]:
    return [
        skew_shape((2, 2, 2), (1,)),
        skew_shape((3, 2, 1)),
        skew_shape((3, 3, 1), (1,)),
        skew_shape((2, 2, 1, 1), (1, 1)),
        skew_shape((4, 2, 1), (2,)),
        skew_shape((3, 3, 3, 1), (1, 1)),
        skew_shape((2, 1), (), 3),
        skew_shape((3, 1), (1,), 4),
        skew_shape((2, 2), ()),
        skew_shape((5, 4, 2, 1), (3, 2)),
    ]


def suite_immanant(max_n: int = 4, max_size: int = 8, seed: int = 24061859) -> CheckReport:
    """Sign immanants against skew Schur functions, and the inner-product law.

    The second half draws random integer class functions and checks that
    every Schur coefficient of their immanant equals the inner product
    with the matching immanant character.
    """
    report = CheckReport("immanant-inner-product")
    rng = random.Random(seed)
    for shape in _immanant_test_shapes():
        if shape.rows > max_n or shape.size > max_size:
            continue
        n, size = shape.rows, shape.size
        report.instances += 1
        det = convert(immanant(sign_character(n), shape), "s")
        if det.coeffs != skew_schur(shape).coeffs:
            report.failures.append({"shape": _shape_desc(shape), "check": "determinant"})
        gammas = {
            theta: immanant_character(theta, shape) for theta in partitions_of(size)
        }
        for _ in range(5):
            phi = ClassFunction(
                n, {rho: rng.randint(-5, 5) for rho in partitions_of(n)}
            )
            report.instances += 1
            expansion = convert(immanant(phi, shape), "s")
            for theta, gamma in gammas.items():
                if inner_product(gamma, phi) != expansion.coeffs.get(theta, 0):
                    report.failures.append(
                        {
                            "shape": _shape_desc(shape),
                            "theta": list(theta),
                            "phi": phi.to_json(),
                        }
                    )
    return report


def _assemble_disconnected(top: SkewShape, bottom: SkewShape) -> SkewShape:
    """Stack two shapes into one skew shape with exactly their components."""
    shift = bottom.outer[0] if bottom.outer else 0
    outer = tuple(x + shift for x in top.padded()[0]) + bottom.padded()[0]
    inner = tuple(x + shift for x in top.padded()[1]) + bottom.padded()[1]
    return skew_shape(outer, inner, top.rows + bottom.rows)


def suite_reductions(max_n: int = 5, max_size: int = 8) -> CheckReport:
    """Golden reduction pairs plus bounded product and induction sweeps."""
    report = CheckReport("reductions")
    report.merge(verify_empty_row_removal(skew_shape((5, 4, 2, 2, 1), (3, 2, 2))))
    report.merge(
        verify_component_reorder(
            skew_shape((5, 4, 2, 1), (3, 2)), skew_shape((5, 4, 3, 2), (3, 3, 1))
        )
    )
    report.merge(verify_disconnected_product(skew_shape((5, 4, 2, 1), (3, 2))))
    report.merge(verify_stanley_stembridge_product(skew_shape((5, 4, 2, 1), (3, 2))))
    small = [
        skew_shape((2, 1)),
        skew_shape((2, 2), (1,)),
        skew_shape((3, 1), (1,)),
        skew_shape((1, 1, 1)),
        skew_shape((2, 2, 1)),
        skew_shape((3, 2), (2,)),
        skew_shape((2, 2, 2), (1, 1)),
        skew_shape((3, 3), (2, 1)),
        skew_shape((4, 3), (2, 1)),
        skew_shape((2, 2, 1, 1), (1, 1)),
    ]
    for shape in small:
        if shape.rows <= max_n and shape.size <= max_size:
            report.merge(verify_induction_stability(shape))
    pairs = [
        (skew_shape((1,)), skew_shape((2, 1))),
        (skew_shape((2,)), skew_shape((2, 2), (1,))),
        (skew_shape((2, 1)), skew_shape((1, 1))),
    ]
    for top, bottom in pairs:
        shape = _assemble_disconnected(top, bottom)
        if shape.rows <= max_n and shape.size <= max_size:
            report.merge(verify_disconnected_product(shape))
            report.merge(verify_stanley_stembridge_product(shape))
            report.merge(
                verify_component_reorder(shape, _assemble_disconnected(bottom, top))
            )
    return report


def preabelian_example_shapes() -> list[SkewShape]:
    return [
        skew_shape((4, 4, 4, 4), (1,)),
        skew_shape((6, 5, 4, 4), (2, 1)),
        skew_shape((2, 2, 2, 2)),
    ]


def suite_positivity(max_n: int = 5, max_size: int = 8) -> CheckReport:
    """Induced-trivial positivity on the pre-abelian and small-excess families."""
    report = CheckReport("hook-positivity")
    targets: list[SkewShape] = list(preabelian_example_shapes())
    for n in range(1, max_n + 1):
        for size in range(n, max_size + 1):
            for shape in connected_skew_shapes(n, size):
                if is_dahlberg_small(hessenberg_from_skew(shape)):
                    targets.append(shape)
    for shape in targets:
        n, size = shape.rows, shape.size
        for k in range(0, min(n - 1, size - 1) + 1):
            theta = hook_partition(size, k)
            report.instances += 1
            dec = h_positive_decomposition(immanant_character(theta, shape))
            if not (dec.is_integral and dec.is_nonnegative):
                report.failures.append(
                    {"shape": _shape_desc(shape), "theta": list(theta), "coeffs": dec.to_json()}
                )
    return report


SUITES = {
    "kostka": suite_kostka,
    "characters": suite_characters,
    "immanant": suite_immanant,
    "hook": suite_hook,
    "reductions": suite_reductions,
    "positivity": suite_positivity,
}


def run_suites(names, max_n: int, max_size: int) -> list[CheckReport]:
    if "all" in names:
        names = list(SUITES)
    unknown = [n for n in names if n not in SUITES]
    if unknown:
        raise ValueError(f"unknown suites {unknown}; choose from {sorted(SUITES)} or 'all'")
    return [SUITES[name](max_n, max_size) for name in names]


def scan_records(max_n: int, max_size: int):
    """Stream one evidence record per (connected shape, theta) in bounds.

    Every record carries the induced-trivial expansion of the immanant
    character; hooks additionally carry their proven expansion.  The
    records report evidence only and assert nothing about open cases.
    """
    for n in range(1, max_n + 1):
        for size in range(n, max_size + 1):
            for shape in connected_skew_shapes(n, size):
                h = hessenberg_from_skew(shape)
                mu, nu = shape.padded()
                identity_content = tuple(m - v for m, v in zip(mu, nu))
                for theta in partitions_of(size):
                    gamma = immanant_character(theta, shape)
                    dec = h_positive_decomposition(gamma)
                    record = {
                        "shape": shape.to_json(),
                        "theta": list(theta),
                        "hook": _is_hook_safe(theta),
                        "h": list(h.values),
                        "identity_kostka": kostka(theta, identity_content),
                        "eta_expansion": dec.to_json(),
                        "h_positive": dec.is_integral and dec.is_nonnegative,
                    }
                    if record["hook"]:
                        with warnings.catch_warnings():
                            warnings.simplefilter("ignore")  # oversized legs yield empty sums
                            decomp = hook_decomposition(theta, shape)
                        record["summands"] = [
                            {"h": list(hj.values), "mult": m} for hj, m in decomp.summands
                        ]
                    yield record


def _is_hook_safe(theta) -> bool:
    return all(x == 1 for x in theta[1:])
