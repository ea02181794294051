"""Verification suites against frozen reference values.

Each suite recomputes a published quantity from the shipped data and
compares exactly.  Reference rows are stored as plain tuples; closed
forms are stored as (numerator coefficients, denominator exponents)
pairs expanded on demand, never as preexpanded coefficient dumps.
"""

from __future__ import annotations

from dataclasses import dataclass

from .cones import cone_automorphisms, cone_poincare_series
from .errors import FixtureMismatch, InputError
from .pipeline import (
    ConeClassRecord,
    Dataset,
    betti_series,
    display_series,
    load_cone_specs,
    load_dataset,
)
from .series import TruncatedSeries, expand_rational_form

# Stable Betti numbers through t^8 (degree/codegree 16).
BETTI_MATROIDAL = (1, 2, 4, 9, 18, 37, 79, 169, 379)
BETTI_PERFECT = (1, 2, 4, 9, 18, 38, 84, 193, 494)

# Displayed generator-count series (leading-1 convention).
DISPLAY_SIGMA1_K3 = (1, 1, 1, 2, 2, 3, 4, 5, 6, 8, 9, 11, 13, 15)
DISPLAY_MATROIDAL = (
    1, 1, 1, 2, 3, 6, 13, 28, 55, 113, 210,
    384, 663, 1109, 1776, 2778, 4196, 6209, 8958, 12691, 17621,
)
DISPLAY_PERFECT = (
    1, 1, 1, 2, 3, 7, 16, 42, 83, 177, 331,
    611, 1049, 1754, 2790, 4343, 6518, 9596, 13759, 19400, 26792,
)

# Molien series of the non-cyclic irreducible matroidal cones, as
# numerator coefficients and denominator exponents {i: e} standing for
# numerator / prod (1 - t^i)^e.
MOLIEN_CLOSED_FORMS = {
    "K_4": ((1, 0, 0, 1, 1, 1, 1, 0, 0, 1), {1: 1, 2: 2, 3: 2, 4: 1}),
    "C_222": ((1, 0, 0, 0, 1, 1, 0, -1, -1, 0, 0, 0, -1), {1: 1, 2: 2, 3: 2, 4: 1, 6: 1}),
    "C_2221": ((1, 0, 0, 0, 1, 1, 0, -1, -1, 0, 0, 0, -1), {1: 2, 2: 2, 3: 2, 4: 1, 6: 1}),
    "C_321": ((1,), {1: 3, 2: 2, 3: 1}),
    "K_5-3": ((1, -1, 2), {1: 4, 2: 2, 4: 1}),
    "K_5-2-1": ((1, -1, 1), {1: 4, 2: 3}),
    "C_421": ((1,), {1: 3, 2: 2, 3: 1, 4: 1}),
    "C_331": ((1, -1, 1, 0, 1), {1: 3, 2: 1, 3: 1, 4: 1, 6: 1}),
    "C_322": ((1, 0, 0, 0, 0, 0, -1), {1: 2, 2: 3, 3: 2, 4: 1}),
}

# Automorphism group orders of the non-matroidal perfect cones.
PERFECT_GROUP_ORDERS = {
    "(5,5)": 120,
    "(5,6)": 120,
    "(5,7a)": 48,
    "(5,7b)": 24,
    "(6,6)": 720,
    "(6,7a)": 48,
    "(6,7b)": 720,
    "(6,7c)": 240,
    "(6,7d)": 48,
    "(7,7a)": 240,
    "(7,7b)": 5040,
    "(7,7c)": 5040,
}

SUITE_NAMES = ("matroidal16", "perfect16", "section6", "table2", "table4")


@dataclass(frozen=True)
class SuiteCheck:
    label: str
    expected: str
    actual: str
    ok: bool


@dataclass(frozen=True)
class SuiteReport:
    suite: str
    checks: tuple[SuiteCheck, ...]

    @property
    def ok(self) -> bool:
        return all(c.ok for c in self.checks)

    def lines(self) -> list[str]:
        out = []
        for c in self.checks:
            if c.ok:
                out.append(f"PASS {c.label}")
            else:
                out.append(f"FAIL {c.label}: expected {c.expected}, got {c.actual}")
        return out


def _coefficient_checks(label: str, expected, series: TruncatedSeries) -> list[SuiteCheck]:
    checks = []
    for k, want in enumerate(expected):
        got = series[k]
        checks.append(SuiteCheck(f"{label} t^{k}", str(want), str(got), got == want))
    return checks


def _records_for(names, specs_by_name, order) -> Dataset:
    from .cones import analyze

    records = []
    for name in names:
        spec = specs_by_name[name]
        result = analyze(spec, order=order)
        records.append(ConeClassRecord(name, result.dimension, result.rank, result.poincare))
    return Dataset("custom", tuple(records))


def _suite_matroidal16() -> SuiteReport:
    dataset = load_dataset("matroidal", order=8)
    report = betti_series(dataset, order=8)
    return SuiteReport(
        "matroidal16", tuple(_coefficient_checks("betti", BETTI_MATROIDAL, report.series))
    )


def _suite_perfect16() -> SuiteReport:
    dataset = load_dataset(
        "perfect", order=8, use_declared=lambda spec: "matroidal" in spec.tags
    )
    report = betti_series(dataset, order=8)
    return SuiteReport(
        "perfect16", tuple(_coefficient_checks("betti", BETTI_PERFECT, report.series))
    )


def _suite_section6() -> SuiteReport:
    order = 20
    _, mat_specs = load_cone_specs("matroidal")
    by_name = {s.name: s for s in mat_specs}
    checks = []

    standard = _records_for(["sigma_1"], by_name, order)
    checks += _coefficient_checks(
        "standard", tuple(1 for _ in range(order + 1)), display_series(standard, order)
    )
    two_cone = _records_for(["sigma_1", "K_3"], by_name, order)
    checks += _coefficient_checks(
        "sigma1+K_3", DISPLAY_SIGMA1_K3, display_series(two_cone, order)
    )
    matroidal = load_dataset("matroidal", order=order)
    checks += _coefficient_checks(
        "matroidal display", DISPLAY_MATROIDAL, display_series(matroidal, order)
    )
    perfect = load_dataset("perfect", order=order)
    checks += _coefficient_checks(
        "perfect display", DISPLAY_PERFECT, display_series(perfect, order)
    )
    return SuiteReport("section6", tuple(checks))


def _suite_table2() -> SuiteReport:
    order = 30
    _, specs = load_cone_specs("matroidal")
    by_name = {s.name: s for s in specs}
    checks = []
    for name, (numerator, denominator) in MOLIEN_CLOSED_FORMS.items():
        spec = by_name[name]
        group = cone_automorphisms(spec, use_declared=True)
        series = cone_poincare_series(spec, group, order)
        closed = expand_rational_form(numerator, denominator, order)
        ok = series == closed
        checks.append(
            SuiteCheck(
                f"molien {name} (order {order})",
                closed.truncate(8).polynomial_string() + " + ...",
                "match" if ok else series.truncate(8).polynomial_string() + " + ...",
                ok,
            )
        )
    return SuiteReport("table2", tuple(checks))


def _suite_table4() -> SuiteReport:
    _, specs = load_cone_specs("perfect")
    by_name = {s.name: s for s in specs}
    checks = []
    for name, want in PERFECT_GROUP_ORDERS.items():
        group = cone_automorphisms(by_name[name], use_declared=False)
        checks.append(
            SuiteCheck(f"aut order {name}", str(want), str(group.order), group.order == want)
        )
    return SuiteReport("table4", tuple(checks))


_SUITES = {
    "matroidal16": _suite_matroidal16,
    "perfect16": _suite_perfect16,
    "section6": _suite_section6,
    "table2": _suite_table2,
    "table4": _suite_table4,
}


def run_suite(name: str, raise_on_mismatch: bool = False) -> SuiteReport:
    if name not in _SUITES:
        raise InputError(f"unknown suite {name!r}; choose from {', '.join(SUITE_NAMES)}")
    report = _SUITES[name]()
    if raise_on_mismatch and not report.ok:
        first = next(c for c in report.checks if not c.ok)
        raise FixtureMismatch(
            f"suite {name}: {first.label} expected {first.expected}, got {first.actual}"
        )
    return report
