"""Dataset assembly and the stable Betti number computation.

A dataset is a list of cone class records (one per orbit of
irreducible cones).  The generator series collects t^dim * P(t) over
the records; Betti numbers are the coefficients of the plethystic
exponential of that series plus the odd-degree lambda-class part.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from importlib import resources
from pathlib import Path

from .cones import DEFAULT_NODE_BUDGET, ConeSpec, analyze
from .errors import InputError
from .series import DEFAULT_ORDER, TruncatedSeries
from .symfunc import exp_series

DEGREE_CONVENTION = "t^k corresponds to cohomological (co)degree 2k"
PACKAGED_FAMILIES = ("matroidal", "perfect")


@dataclass(frozen=True)
class ConeClassRecord:
    """One orbit of irreducible cones, either analyzed or count-only.

    Count-only records carry no series: they stand for orbits known
    just by dimension, rank and count, and contribute multiplicity
    generators at t^dimension (any Poincare series has constant 1).
    """

    name: str
    dimension: int
    rank: int
    poincare: TruncatedSeries | None = None
    multiplicity: int = 1

    def __post_init__(self):
        if self.dimension < 1 or self.rank < 1:
            raise InputError(f"record {self.name!r}: dimension and rank must be positive")
        if self.multiplicity < 1:
            raise InputError(f"record {self.name!r}: multiplicity must be positive")
        if self.poincare is not None and self.poincare[0] != 1:
            raise InputError(f"record {self.name!r}: Poincare series must have constant 1")

    @property
    def is_count_only(self) -> bool:
        return self.poincare is None


@dataclass(frozen=True)
class Dataset:
    """A family of cone class records, complete through one dimension.

    completeness_dim is the largest dimension D through which the
    record list covers every irreducible orbit; None means the list is
    exact at all orders (synthetic collections).
    """

    family: str
    records: tuple[ConeClassRecord, ...]
    completeness_dim: int | None = None

    def __post_init__(self):
        names = [r.name for r in self.records]
        if len(set(names)) != len(names):
            raise InputError(f"dataset {self.family!r}: duplicate record names")
        if self.completeness_dim is not None:
            for r in self.records:
                if r.dimension > self.completeness_dim:
                    raise InputError(
                        f"dataset {self.family!r}: record {r.name!r} exceeds "
                        f"completeness dimension {self.completeness_dim}"
                    )

    @property
    def full_records(self) -> tuple[ConeClassRecord, ...]:
        return tuple(r for r in self.records if not r.is_count_only)

    @property
    def count_only_records(self) -> tuple[ConeClassRecord, ...]:
        return tuple(r for r in self.records if r.is_count_only)

    def restrict_to_full(self) -> "Dataset":
        return Dataset(self.family, self.full_records, self.completeness_dim)


@dataclass(frozen=True)
class BettiReport:
    """A Betti (or display) series with its range of validity."""

    series: TruncatedSeries
    valid_up_to: int
    convention: str = DEGREE_CONVENTION
    includes_lambda: bool = True

    def coefficients_int(self) -> tuple[int, ...]:
        return tuple(self.series.integer_coefficients())

    def to_json_dict(self) -> dict:
        return {
            "series": self.series.to_json_dict(),
            "coefficients": [int(c) for c in self.coefficients_int()],
            "valid_up_to": self.valid_up_to,
            "convention": self.convention,
            "includes_lambda": self.includes_lambda,
        }

    def to_csv(self) -> str:
        lines = ["k,coefficient,valid"]
        for k, c in enumerate(self.coefficients_int()):
            lines.append(f"{k},{c},{'true' if k <= self.valid_up_to else 'false'}")
        return "\n".join(lines) + "\n"


# -- loading ---------------------------------------------------------------


def _manifest_root(source: str | Path):
    """(traversable directory, manifest payload) for a path or family name."""
    if isinstance(source, str) and source in PACKAGED_FAMILIES:
        root = resources.files("agstab").joinpath("data")
        manifest = root.joinpath(f"{source}.json")
    else:
        path = Path(source)
        root = path.parent
        manifest = path
    try:
        payload = json.loads(manifest.read_text())
    except (OSError, FileNotFoundError) as exc:
        raise InputError(f"cannot read dataset manifest {source}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise InputError(f"dataset manifest {source} is not valid JSON: {exc}") from exc
    if not isinstance(payload, dict):
        raise InputError(f"dataset manifest {source} must be a JSON object")
    return root, payload


def load_cone_specs(source: str | Path) -> tuple[dict, list[ConeSpec]]:
    """Manifest payload and the cone specs it points to."""
    root, payload = _manifest_root(source)
    specs = []
    for rel in payload.get("cones", []):
        ref = root
        for part in str(rel).split("/"):
            ref = ref.joinpath(part)
        try:
            cone_payload = json.loads(ref.read_text())
        except (OSError, FileNotFoundError) as exc:
            raise InputError(f"cannot read cone file {rel}: {exc}") from exc
        except json.JSONDecodeError as exc:
            raise InputError(f"cone file {rel} is not valid JSON: {exc}") from exc
        specs.append(ConeSpec.from_json_dict(cone_payload))
    return payload, specs


def load_dataset(
    source: str | Path,
    order: int = DEFAULT_ORDER,
    use_declared=True,
    node_budget: int = DEFAULT_NODE_BUDGET,
) -> Dataset:
    """Assemble a dataset from a manifest path or a packaged family name.

    use_declared may be a flag or a predicate on ConeSpec deciding
    per cone whether a declared automorphism list is trusted (after
    verification) or ignored in favor of the full search.
    """
    payload, specs = load_cone_specs(source)
    try:
        family = str(payload["family"])
        completeness = payload.get("completeness_dim")
        completeness = None if completeness is None else int(completeness)
    except (KeyError, TypeError, ValueError) as exc:
        raise InputError(f"malformed dataset manifest: {exc}") from exc
    records = []
    for spec in specs:
        declared = use_declared(spec) if callable(use_declared) else use_declared
        result = analyze(spec, order=order, use_declared=declared, node_budget=node_budget)
        records.append(
            ConeClassRecord(spec.name, result.dimension, result.rank, result.poincare)
        )
    for entry in payload.get("count_only", []):
        try:
            dim, rank, count = int(entry["dimension"]), int(entry["rank"]), int(entry["count"])
        except (KeyError, TypeError, ValueError) as exc:
            raise InputError(f"malformed count_only entry: {exc}") from exc
        records.append(
            ConeClassRecord(f"count-only-d{dim}-r{rank}", dim, rank, None, count)
        )
    return Dataset(family, tuple(records), completeness)


# -- series assembly -------------------------------------------------------


def lambda_series(order: int = DEFAULT_ORDER) -> TruncatedSeries:
    """Generator series of the odd lambda classes: t/(1-t^2)."""
    return TruncatedSeries([k % 2 for k in range(order + 1)], order)


def generator_series(
    dataset: Dataset, order: int = DEFAULT_ORDER, include_count_only: bool = True
) -> TruncatedSeries:
    """Sum of multiplicity * t^dimension * poincare over the records.

    The constant term is 0; displayed series add their leading 1
    separately (see display_series).
    """
    coeffs = [0] * (order + 1)
    total = TruncatedSeries(coeffs, order)
    for rec in dataset.records:
        if rec.is_count_only:
            if include_count_only and rec.dimension <= order:
                total = total + TruncatedSeries.monomial(rec.dimension, order, rec.multiplicity)
            continue
        head = order - rec.dimension
        if head < 0:
            continue
        if rec.poincare.order < head:
            raise InputError(
                f"record {rec.name!r} carries its series only to order {rec.poincare.order}; "
                f"reload the dataset at order {order} or higher"
            )
        shifted = [0] * rec.dimension + list(rec.poincare.coefficients[: head + 1])
        total = total + rec.multiplicity * TruncatedSeries(shifted, order)
    return total


def display_series(dataset: Dataset, order: int = DEFAULT_ORDER) -> TruncatedSeries:
    """Generator counts in the displayed convention: leading 1, full records only."""
    return TruncatedSeries.one(order) + generator_series(
        dataset, order, include_count_only=False
    )


def display_report(dataset: Dataset, order: int = DEFAULT_ORDER) -> BettiReport:
    valid = order
    if dataset.completeness_dim is not None:
        valid = min(order, dataset.completeness_dim)
        if dataset.count_only_records:
            valid = min(valid, dataset.completeness_dim - 1)
    return BettiReport(
        series=display_series(dataset, order),
        valid_up_to=valid,
        includes_lambda=False,
    )


def betti_series(
    dataset: Dataset, order: int = DEFAULT_ORDER, include_lambda: bool = True
) -> BettiReport:
    """Coefficients of Exp(lambda part + generator series).

    Coefficients beyond the dataset's completeness dimension are lower
    bounds only; valid_up_to marks the trustworthy range.
    """
    arg = generator_series(dataset, order)
    if include_lambda:
        arg = arg + lambda_series(order)
    series = exp_series(arg)
    valid = order if dataset.completeness_dim is None else min(order, dataset.completeness_dim)
    return BettiReport(series=series, valid_up_to=valid, includes_lambda=include_lambda)


def perfect_generator_counts(order: int = DEFAULT_ORDER, dataset: Dataset | None = None) -> TruncatedSeries:
    """Displayed generator-count series of the perfect cone family."""
    if dataset is None:
        dataset = load_dataset("perfect", order=order)
    return display_series(dataset, order)


# -- validation ------------------------------------------------------------


@dataclass(frozen=True)
class SmallnessViolation:
    name: str
    dimension: int
    rank: int


@dataclass(frozen=True)
class SmallnessReport:
    checked: int
    violations: tuple[SmallnessViolation, ...]

    @property
    def ok(self) -> bool:
        return not self.violations

    def to_json_dict(self) -> dict:
        return {
            "checked": self.checked,
            "ok": self.ok,
            "violations": [
                {"name": v.name, "dimension": v.dimension, "rank": v.rank}
                for v in self.violations
            ],
        }


def validate_smallness(dataset: Dataset) -> SmallnessReport:
    """Check dim >= rank/2 + 1 for every record of rank at least 2.

    Rank-1 records are exempt; the bound is what keeps the stable range
    of each stratum large enough for the algorithm's validity.
    """
    violations = []
    checked = 0
    for rec in dataset.records:
        if rec.rank < 2:
            continue
        checked += 1
        if 2 * rec.dimension < rec.rank + 2:
            violations.append(SmallnessViolation(rec.name, rec.dimension, rec.rank))
    return SmallnessReport(checked, tuple(violations))
