"""Experiment harness: admissibility checks, inequality ratios, and reports.

The boundedness statements under test come with implicit constants, so the
harness is stability-based: over randomized ensembles it records the
empirical ratio LHS/RHS of each inequality and checks that the maximum
ratio does not drift when the grid is refined.  Ensemble parameters are
drawn independently of the grid size so that the same population is
sampled at every resolution.
"""

from __future__ import annotations

import csv
import json
import math
from dataclasses import dataclass, field

import numpy as np

from .grid import Field2, SampleGrid, Signal1, gaussian, gaussian_field, make_grid
from .io import atomic_write_text
from .norms import (
    ORDER_AMALGAM,
    ORDER_MODULATION,
    NormSpec,
    Weight,
    conjugate_exponent,
    exponent_from_json,
    exponent_to_json,
    mixed_norm,
    modulation_norm,
    stft2_mixed_norm,
)
from .quantization import apply, weyl_matrix
from .transforms import stft2, wigner

REPORT_SCHEMA = 1

# default stability factor: the max ratio may move by at most this factor
# (in either direction) when the grid size doubles
DEFAULT_STABILITY_FACTOR = 2.0


# -- exponent admissibility --------------------------------------------------


@dataclass(frozen=True)
class ExponentTuple:
    """The four Lebesgue exponents (p, q, r1, r2), each in [1, inf]."""

    p: float
    q: float
    r1: float
    r2: float

    def __post_init__(self) -> None:
        for name in ("p", "q", "r1", "r2"):
            value = float(getattr(self, name))
            if not value >= 1:
                raise ValueError(f"exponent {name} must lie in [1, inf], got {value}")
            object.__setattr__(self, name, value)

    def to_json(self) -> dict:
        return {
            name: exponent_to_json(getattr(self, name))
            for name in ("p", "q", "r1", "r2")
        }

    @staticmethod
    def from_json(d: dict) -> "ExponentTuple":
        return ExponentTuple(
            *(exponent_from_json(d[name]) for name in ("p", "q", "r1", "r2"))
        )


@dataclass(frozen=True)
class AdmissibilityVerdict:
    """Outcome of the exponent conditions, with one reason per failure."""

    admissible: bool
    reasons: tuple[str, ...]


def _fmt(p: float) -> str:
    return "inf" if math.isinf(p) else f"{p:g}"


def check_exponents(t: ExponentTuple) -> AdmissibilityVerdict:
    """Check the boundedness conditions on (p, q, r1, r2).

    Admissible iff q <= p' and max{r1, r2, r1', r2'} <= p (which forces
    p >= 2).  Each violated condition is reported separately.
    """
    reasons = []
    p_conj = conjugate_exponent(t.p)
    if not t.q <= p_conj:
        reasons.append(f"q > p': {_fmt(t.q)} > {_fmt(p_conj)}")
    for name, r in (("r1", t.r1), ("r2", t.r2)):
        if not r <= t.p:
            reasons.append(f"{name} > p: {_fmt(r)} > {_fmt(t.p)}")
        r_conj = conjugate_exponent(r)
        if not r_conj <= t.p:
            reasons.append(f"{name}' > p: {_fmt(r_conj)} > {_fmt(t.p)}")
    return AdmissibilityVerdict(admissible=not reasons, reasons=tuple(reasons))


# -- ensembles ---------------------------------------------------------------

ENSEMBLE_KINDS = (
    "gaussian_noise",
    "random_gabor_superposition",
    "chirped_gaussians",
    "spikes",
)


@dataclass(frozen=True)
class Ensemble:
    """Reproducible family of random inputs: same seed, same sequence."""

    seed: int
    kind: str
    count: int

    def __post_init__(self) -> None:
        if self.kind not in ENSEMBLE_KINDS:
            raise ValueError(
                f"unknown ensemble kind {self.kind!r}; choose from {ENSEMBLE_KINDS}"
            )
        if self.count <= 0:
            raise ValueError(f"count must be positive, got {self.count}")

    def to_json(self) -> dict:
        return {"seed": self.seed, "kind": self.kind, "count": self.count}

    @staticmethod
    def from_json(d: dict) -> "Ensemble":
        return Ensemble(int(d["seed"]), d["kind"], int(d["count"]))


def _trial_rng(ensemble: Ensemble, trial: int) -> np.random.Generator:
    # one generator per (seed, trial): grid-size independent parameter draws
    return np.random.default_rng([ensemble.seed, trial])


def _gabor_params(rng: np.random.Generator, dims: int):
    terms = int(rng.integers(2, 6))
    for _ in range(terms):
        amp = rng.uniform(0.3, 1.0) * np.exp(2j * np.pi * rng.uniform())
        center = rng.uniform(-1.0, 1.0, size=dims)
        freq = rng.uniform(-1.0, 1.0, size=dims)
        yield amp, center, freq


def _normalized_signal(grid: SampleGrid, samples: np.ndarray) -> Signal1:
    scale = np.sqrt(grid.spacing * np.sum(np.abs(samples) ** 2))
    if scale == 0:
        raise ValueError("ensemble produced a zero signal")
    return Signal1(grid, samples / scale)


def sample_signal(ensemble: Ensemble, grid: SampleGrid, trial: int) -> Signal1:
    """Deterministic unit-norm signal number `trial` of the ensemble."""
    rng = _trial_rng(ensemble, trial)
    t = grid.points
    if ensemble.kind == "gaussian_noise":
        samples = rng.standard_normal(grid.n_points) + 1j * rng.standard_normal(
            grid.n_points
        )
    elif ensemble.kind == "random_gabor_superposition":
        samples = np.zeros(grid.n_points, dtype=np.complex128)
        for amp, center, freq in _gabor_params(rng, 1):
            samples += (
                amp
                * np.exp(-np.pi * (t - center[0]) ** 2)
                * np.exp(2j * np.pi * freq[0] * t)
            )
    elif ensemble.kind == "chirped_gaussians":
        samples = np.zeros(grid.n_points, dtype=np.complex128)
        for amp, center, freq in _gabor_params(rng, 1):
            width = rng.uniform(0.5, 2.0)
            rate = rng.uniform(-2.0, 2.0)
            samples += (
                amp
                * np.exp(-np.pi * width * (t - center[0]) ** 2)
                * np.exp(2j * np.pi * (freq[0] * t + 0.5 * rate * t**2))
            )
    elif ensemble.kind == "spikes":
        samples = np.zeros(grid.n_points, dtype=np.complex128)
        for amp, center, _ in _gabor_params(rng, 1):
            index = int(np.argmin(np.abs(t - center[0])))
            samples[index] += amp
    else:  # pragma: no cover - guarded by the constructor
        raise ValueError(f"unknown ensemble kind {ensemble.kind!r}")
    return _normalized_signal(grid, samples)


def sample_symbol(ensemble: Ensemble, grid: SampleGrid, trial: int) -> Field2:
    """Deterministic unit-norm 2-D symbol number `trial` of the ensemble."""
    rng = _trial_rng(ensemble, trial)
    n = grid.n_points
    x = grid.points[:, None]
    w = grid.points[None, :]
    if ensemble.kind == "gaussian_noise":
        samples = rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))
    elif ensemble.kind == "random_gabor_superposition":
        samples = np.zeros((n, n), dtype=np.complex128)
        for amp, center, freq in _gabor_params(rng, 2):
            samples += (
                amp
                * np.exp(-np.pi * ((x - center[0]) ** 2 + (w - center[1]) ** 2))
                * np.exp(2j * np.pi * (freq[0] * x + freq[1] * w))
            )
    elif ensemble.kind == "chirped_gaussians":
        samples = np.zeros((n, n), dtype=np.complex128)
        for amp, center, freq in _gabor_params(rng, 2):
            width = rng.uniform(0.5, 2.0)
            rate = rng.uniform(-1.0, 1.0)
            samples += (
                amp
                * np.exp(-np.pi * width * ((x - center[0]) ** 2 + (w - center[1]) ** 2))
                * np.exp(2j * np.pi * (freq[0] * x + freq[1] * w + rate * x * w))
            )
    elif ensemble.kind == "spikes":
        samples = np.zeros((n, n), dtype=np.complex128)
        for amp, center, _ in _gabor_params(rng, 2):
            i = int(np.argmin(np.abs(grid.points - center[0])))
            j = int(np.argmin(np.abs(grid.points - center[1])))
            samples[i, j] += amp
    else:  # pragma: no cover
        raise ValueError(f"unknown ensemble kind {ensemble.kind!r}")
    scale = np.sqrt(grid.spacing**2 * np.sum(np.abs(samples) ** 2))
    if scale == 0:
        raise ValueError("ensemble produced a zero symbol")
    return Field2(grid, samples / scale)


# -- inequality ratios -------------------------------------------------------


def _require_nonzero_input(s, name: str) -> None:
    if not np.any(s.samples):
        raise ValueError(f"{name} is identically zero")


def _wigner_amalgam_sides(
    f: Signal1,
    g: Signal1,
    m: Weight,
    v: Weight,
    inner: float,
    outer: float,
    f_spec: tuple[float, float],
    g_spec: tuple[float, float],
) -> tuple[float, float]:
    _require_nonzero_input(f, "f")
    _require_nonzero_input(g, "g")
    phi = gaussian(f.grid)
    window = wigner(phi, phi)
    numerator_spec = NormSpec(
        inner,
        outer,
        Weight.reciprocal(Weight.symplectic_pullback(v)),
        ORDER_AMALGAM,
    )
    numerator = stft2_mixed_norm(stft2(wigner(g, f), window), numerator_spec)
    denominator = modulation_norm(
        f, phi, NormSpec(f_spec[0], f_spec[1], m)
    ) * modulation_norm(
        g, phi, NormSpec(g_spec[0], g_spec[1], Weight.reciprocal(m))
    )
    return numerator, denominator


def lemma31_sides(
    f: Signal1, g: Signal1, m: Weight, v: Weight, p1: float, p2: float
) -> tuple[float, float]:
    """Both sides of the Wigner amalgam estimate with dual modulation norms.

    Numerator: frequency-first mixed norm of the 2-D STFT of W(g, f)
    against the window W(phi, phi), inner exponent 1 with weight
    1/v(J zeta), outer exponent infinity.  Denominator: the product of the
    modulation norms of f (exponents (p1, p2), weight m) and g (conjugate
    exponents, weight 1/m).
    """
    return _wigner_amalgam_sides(
        f,
        g,
        m,
        v,
        1.0,
        math.inf,
        (p1, p2),
        (conjugate_exponent(p1), conjugate_exponent(p2)),
    )


def lemma31_ratio(
    f: Signal1, g: Signal1, m: Weight, v: Weight, p1: float, p2: float
) -> float:
    numerator, denominator = lemma31_sides(f, g, m, v, p1, p2)
    return numerator / denominator


def lemma32_sides(
    f: Signal1, g: Signal1, m: Weight, v: Weight
) -> tuple[float, float]:
    """Both sides of the square-integrable Wigner amalgam estimate.

    Numerator: as :func:`lemma31_sides` but with both exponents 2;
    denominator: product of the (2, 2) modulation norms of f (weight m)
    and g (weight 1/m).
    """
    return _wigner_amalgam_sides(f, g, m, v, 2.0, 2.0, (2.0, 2.0), (2.0, 2.0))


def lemma32_ratio(f: Signal1, g: Signal1, m: Weight, v: Weight) -> float:
    numerator, denominator = lemma32_sides(f, g, m, v)
    return numerator / denominator


def lemma_experiment(
    kind: str,
    m: Weight,
    v: Weight,
    ensemble: Ensemble,
    grid_sizes: list[int],
    p1: float = 2.0,
    p2: float = 2.0,
) -> dict:
    """Randomized ratio experiment for either Wigner amalgam estimate.

    Draws independent (f, g) pairs from the ensemble at every grid size and
    records numerator, denominator, and ratio per trial, with per-grid
    maxima and stability quotients; returns a JSON-ready dictionary.
    """
    if kind not in ("lemma31", "lemma32"):
        raise ValueError(f"unknown lemma experiment {kind!r}")
    if not grid_sizes:
        raise ValueError("at least one grid size is required")
    trials = []
    max_ratio: dict[str, float] = {}
    for n in grid_sizes:
        grid = make_grid(n, max_points=64)
        best = 0.0
        for trial in range(ensemble.count):
            f = sample_signal(ensemble, grid, 2 * trial)
            g = sample_signal(ensemble, grid, 2 * trial + 1)
            if kind == "lemma31":
                lhs, rhs = lemma31_sides(f, g, m, v, p1, p2)
            else:
                lhs, rhs = lemma32_sides(f, g, m, v)
            ratio = lhs / rhs
            best = max(best, ratio)
            trials.append(
                {
                    "grid_n": n,
                    "trial": trial,
                    "lhs": lhs,
                    "rhs": rhs,
                    "ratio": ratio,
                }
            )
        max_ratio[str(n)] = best
    quotients = {
        f"{large}/{small}": max_ratio[str(large)] / max_ratio[str(small)]
        for small, large in zip(grid_sizes, grid_sizes[1:])
    }
    result = {
        "schema": REPORT_SCHEMA,
        "kind": kind,
        "weights": {"m": m.to_json(), "v": v.to_json()},
        "ensemble": ensemble.to_json(),
        "grid_sizes": list(grid_sizes),
        "trials": trials,
        "max_ratio": max_ratio,
        "stability_quotients": quotients,
    }
    if kind == "lemma31":
        result["exponents"] = {
            "p1": exponent_to_json(float(p1)),
            "p2": exponent_to_json(float(p2)),
        }
    return result


# -- the main experiment -----------------------------------------------------


@dataclass(frozen=True)
class TrialRecord:
    grid_n: int
    trial: int
    lhs: float
    rhs: float

    @property
    def ratio(self) -> float:
        return self.lhs / self.rhs


@dataclass(frozen=True)
class RatioReport:
    """Full record of one ratio experiment, reproducible from its metadata."""

    exponents: ExponentTuple
    m_weight: Weight
    v_weight: Weight
    symbol_ensemble: Ensemble
    signal_ensemble: Ensemble
    grid_sizes: tuple[int, ...]
    trials: tuple[TrialRecord, ...]
    admissible: bool
    allow_inadmissible: bool = False

    def max_ratio(self, grid_n: int) -> float:
        ratios = [t.ratio for t in self.trials if t.grid_n == grid_n]
        if not ratios:
            raise ValueError(f"no trials recorded for grid size {grid_n}")
        return max(ratios)

    def stability_quotients(self) -> dict[str, float]:
        """max ratio at each grid size divided by max ratio at the previous one."""
        out = {}
        for small, large in zip(self.grid_sizes, self.grid_sizes[1:]):
            out[f"{large}/{small}"] = self.max_ratio(large) / self.max_ratio(small)
        return out

    def to_json(self) -> dict:
        return {
            "schema": REPORT_SCHEMA,
            "exponents": self.exponents.to_json(),
            "weights": {"m": self.m_weight.to_json(), "v": self.v_weight.to_json()},
            "symbol_ensemble": self.symbol_ensemble.to_json(),
            "signal_ensemble": self.signal_ensemble.to_json(),
            "grid_sizes": list(self.grid_sizes),
            "admissible": self.admissible,
            "allow_inadmissible": self.allow_inadmissible,
            "trials": [
                {
                    "grid_n": t.grid_n,
                    "trial": t.trial,
                    "lhs": t.lhs,
                    "rhs": t.rhs,
                    "ratio": t.ratio,
                }
                for t in self.trials
            ],
            "max_ratio": {str(n): self.max_ratio(n) for n in self.grid_sizes},
            "stability_quotients": self.stability_quotients(),
        }

    @staticmethod
    def from_json(d: dict) -> "RatioReport":
        if d.get("schema") != REPORT_SCHEMA:
            raise ValueError(f"unsupported report schema {d.get('schema')!r}")
        return RatioReport(
            exponents=ExponentTuple.from_json(d["exponents"]),
            m_weight=Weight.from_json(d["weights"]["m"]),
            v_weight=Weight.from_json(d["weights"]["v"]),
            symbol_ensemble=Ensemble.from_json(d["symbol_ensemble"]),
            signal_ensemble=Ensemble.from_json(d["signal_ensemble"]),
            grid_sizes=tuple(int(n) for n in d["grid_sizes"]),
            trials=tuple(
                TrialRecord(int(t["grid_n"]), int(t["trial"]), t["lhs"], t["rhs"])
                for t in d["trials"]
            ),
            admissible=bool(d["admissible"]),
            allow_inadmissible=bool(d.get("allow_inadmissible", False)),
        )


def theorem_ratio_experiment(
    t: ExponentTuple,
    m: Weight,
    v: Weight,
    symbol_ensemble: Ensemble,
    signal_ensemble: Ensemble,
    grid_sizes: list[int],
    allow_inadmissible: bool = False,
) -> RatioReport:
    """Empirical boundedness ratios for the operator norm estimate.

    For each grid size and each (symbol, signal) pair: LHS is the (r1, r2)
    modulation norm (weight m) of the operator applied to the signal; RHS
    is the symbol's frequency-first amalgam norm (inner exponent p, weight
    v(J zeta), outer exponent q) times the signal's (r1, r2) modulation
    norm.  The report records every trial plus per-grid maxima and
    stability quotients.
    """
    verdict = check_exponents(t)
    if not verdict.admissible and not allow_inadmissible:
        raise ValueError(
            "inadmissible exponents: " + "; ".join(verdict.reasons)
        )
    if not grid_sizes:
        raise ValueError("at least one grid size is required")
    trials_needed = min(symbol_ensemble.count, signal_ensemble.count)
    records = []
    symbol_spec = NormSpec(
        t.p, t.q, Weight.symplectic_pullback(v), ORDER_AMALGAM
    )
    for n in grid_sizes:
        grid = make_grid(n, max_points=64)
        phi = gaussian(grid)
        window = gaussian_field(grid)
        for trial in range(trials_needed):
            a = sample_symbol(symbol_ensemble, grid, trial)
            f = sample_signal(signal_ensemble, grid, trial)
            signal_spec = NormSpec(t.r1, t.r2, m)
            op = weyl_matrix(a)
            lhs = modulation_norm(apply(op, f), phi, signal_spec)
            rhs = stft2_mixed_norm(stft2(a, window), symbol_spec) * modulation_norm(
                f, phi, signal_spec
            )
            if rhs == 0:
                raise ValueError("zero-norm symbol or signal in ensemble")
            records.append(TrialRecord(n, trial, lhs, rhs))
    return RatioReport(
        exponents=t,
        m_weight=m,
        v_weight=v,
        symbol_ensemble=symbol_ensemble,
        signal_ensemble=signal_ensemble,
        grid_sizes=tuple(grid_sizes),
        trials=tuple(records),
        admissible=verdict.admissible,
        allow_inadmissible=allow_inadmissible,
    )


def canonical_json_text(d: dict) -> str:
    """Canonical JSON serialization (stable key order, exact float repr)."""
    return json.dumps(d, sort_keys=True, indent=2) + "\n"


def trials_to_csv_text(trials) -> str:
    import io as _io

    buf = _io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["grid_n", "trial", "lhs", "rhs", "ratio"])
    for t in trials:
        if isinstance(t, dict):
            row = (t["grid_n"], t["trial"], t["lhs"], t["rhs"], t["ratio"])
        else:
            row = (t.grid_n, t.trial, t.lhs, t.rhs, t.ratio)
        writer.writerow([row[0], row[1], repr(row[2]), repr(row[3]), repr(row[4])])
    return buf.getvalue()


def report_to_json_text(report: RatioReport) -> str:
    return canonical_json_text(report.to_json())


def report_to_csv_text(report: RatioReport) -> str:
    return trials_to_csv_text(report.trials)


def emit_report(report: RatioReport, path: str, format: str = "json") -> None:
    """Write the report atomically as canonical JSON or CSV."""
    if format == "json":
        atomic_write_text(path, report_to_json_text(report))
    elif format == "csv":
        atomic_write_text(path, report_to_csv_text(report))
    else:
        raise ValueError(f"unknown report format {format!r}")
