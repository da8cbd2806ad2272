"""Weight families and the weighted mixed norms of modulation and amalgam spaces.

Weights are evaluated with their continuous formulas at grid points (they
model decay on the plane and are deliberately not periodized).  Every
discrete integral carries the grid measure: spacing per 1-D axis, spacing^2
per 2-D axis, placed inside the inner sums so the norms converge to their
continuous counterparts as the grid is refined.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional

import numpy as np

from .grid import Field2, Signal1
from .transforms import Stft2Result, stft1, stft2

ORDER_MODULATION = "modulation"
ORDER_AMALGAM = "amalgam"


@dataclass(frozen=True)
class Weight:
    """Positive, even weight function on the phase plane.

    Supported kinds: constant; radial_poly(s) = (1+|z|^2)^{s/2};
    tensor_poly(s,t) = (1+x^2)^{s/2} (1+xi^2)^{t/2}; symplectic_pullback
    (composition with J(x, xi) = (xi, -x)); reciprocal; product.
    """

    kind: str
    s: float = 0.0
    t: float = 0.0
    inner: Optional["Weight"] = None
    other: Optional["Weight"] = None

    def __post_init__(self) -> None:
        object.__setattr__(self, "s", float(self.s))
        object.__setattr__(self, "t", float(self.t))

    @staticmethod
    def constant() -> "Weight":
        return Weight("constant")

    @staticmethod
    def radial_poly(s: float) -> "Weight":
        return Weight("radial_poly", s=s)

    @staticmethod
    def tensor_poly(s: float, t: float) -> "Weight":
        return Weight("tensor_poly", s=s, t=t)

    @staticmethod
    def symplectic_pullback(inner: "Weight") -> "Weight":
        return Weight("symplectic_pullback", inner=inner)

    @staticmethod
    def reciprocal(inner: "Weight") -> "Weight":
        return Weight("reciprocal", inner=inner)

    @staticmethod
    def product(a: "Weight", b: "Weight") -> "Weight":
        return Weight("product", inner=a, other=b)

    def __call__(self, x: np.ndarray, xi: np.ndarray) -> np.ndarray:
        x = np.asarray(x, dtype=float)
        xi = np.asarray(xi, dtype=float)
        if self.kind == "constant":
            return np.ones(np.broadcast_shapes(x.shape, xi.shape))
        if self.kind == "radial_poly":
            return (1.0 + x**2 + xi**2) ** (self.s / 2)
        if self.kind == "tensor_poly":
            return (1.0 + x**2) ** (self.s / 2) * (1.0 + xi**2) ** (self.t / 2)
        if self.kind == "symplectic_pullback":
            return self.inner(xi, -x)
        if self.kind == "reciprocal":
            return 1.0 / self.inner(x, xi)
        if self.kind == "product":
            return self.inner(x, xi) * self.other(x, xi)
        raise ValueError(f"unknown weight kind {self.kind!r}")

    @property
    def is_submultiplicative(self) -> bool:
        """Whether the defining family guarantees w(z1+z2) <= w(z1) w(z2)."""
        if self.kind == "constant":
            return True
        if self.kind in ("radial_poly", "tensor_poly"):
            return self.s >= 0 and self.t >= 0
        if self.kind == "symplectic_pullback":
            return self.inner.is_submultiplicative
        if self.kind == "product":
            return self.inner.is_submultiplicative and self.other.is_submultiplicative
        return False

    def to_json(self) -> dict:
        d: dict = {"kind": self.kind}
        if self.kind == "radial_poly":
            d["s"] = self.s
        elif self.kind == "tensor_poly":
            d["s"] = self.s
            d["t"] = self.t
        elif self.kind in ("symplectic_pullback", "reciprocal"):
            d["inner"] = self.inner.to_json()
        elif self.kind == "product":
            d["inner"] = self.inner.to_json()
            d["other"] = self.other.to_json()
        return d

    @staticmethod
    def from_json(d: dict) -> "Weight":
        kind = d["kind"]
        if kind == "constant":
            return Weight.constant()
        if kind == "radial_poly":
            return Weight.radial_poly(float(d["s"]))
        if kind == "tensor_poly":
            return Weight.tensor_poly(float(d["s"]), float(d["t"]))
        if kind == "symplectic_pullback":
            return Weight.symplectic_pullback(Weight.from_json(d["inner"]))
        if kind == "reciprocal":
            return Weight.reciprocal(Weight.from_json(d["inner"]))
        if kind == "product":
            return Weight.product(
                Weight.from_json(d["inner"]), Weight.from_json(d["other"])
            )
        raise ValueError(f"unknown weight kind {kind!r}")


def symplectic_apply(z: tuple[float, float]) -> tuple[float, float]:
    """Action of the symplectic matrix: J(x, xi) = (xi, -x)."""
    x, xi = z
    return (xi, -x)


def conjugate_exponent(p: float) -> float:
    """Hoelder conjugate, with conj(1) = inf and conj(inf) = 1."""
    _check_exponent(p)
    if p == 1:
        return math.inf
    if math.isinf(p):
        return 1.0
    return p / (p - 1.0)


def _check_exponent(p: float) -> float:
    if not (p >= 1):
        raise ValueError(f"exponent must lie in [1, inf], got {p}")
    return float(p)


def exponent_from_json(value) -> float:
    if isinstance(value, str):
        if value.lower() in ("inf", "infinity"):
            return math.inf
        return _check_exponent(float(value))
    return _check_exponent(float(value))


def exponent_to_json(p: float):
    return "inf" if math.isinf(p) else p


@dataclass(frozen=True)
class NormSpec:
    """Mixed-norm descriptor: exponents, weight, and order of integration."""

    p: float
    q: float
    weight: Weight
    order: str = ORDER_MODULATION

    def __post_init__(self) -> None:
        object.__setattr__(self, "p", _check_exponent(self.p))
        object.__setattr__(self, "q", _check_exponent(self.q))
        if self.order not in (ORDER_MODULATION, ORDER_AMALGAM):
            raise ValueError(f"unknown norm order {self.order!r}")

    def to_json(self) -> dict:
        return {
            "p": exponent_to_json(self.p),
            "q": exponent_to_json(self.q),
            "weight": self.weight.to_json(),
            "order": self.order,
        }

    @staticmethod
    def from_json(d: dict) -> "NormSpec":
        return NormSpec(
            p=exponent_from_json(d["p"]),
            q=exponent_from_json(d["q"]),
            weight=Weight.from_json(d.get("weight", {"kind": "constant"})),
            order=d.get("order", ORDER_MODULATION),
        )


def _lp_reduce(a: np.ndarray, p: float, axis, measure: float) -> np.ndarray:
    if math.isinf(p):
        return a.max(axis=axis)
    return (np.sum(a**p, axis=axis) * measure) ** (1.0 / p)


def mixed_norm(field: Field2, spec: NormSpec, include_measure: bool = True) -> float:
    """Weighted mixed norm of a position x frequency field.

    Modulation order integrates the position axis first (exponent p), then
    the frequency axis (exponent q); amalgam order integrates frequency
    first.  Infinite exponents take the maximum, with the weight applied
    before the max.
    """
    grid = field.grid
    x = grid.points[:, None]
    xi = grid.points[None, :]
    mag = np.abs(field.samples) * spec.weight(x, xi)
    measure = grid.spacing if include_measure else 1.0
    inner_axis = 0 if spec.order == ORDER_MODULATION else 1
    inner = _lp_reduce(mag, spec.p, inner_axis, measure)
    return float(_lp_reduce(inner, spec.q, None, measure))


def modulation_norm(f: Signal1, window: Signal1, spec: NormSpec) -> float:
    """Modulation-space norm: mixed norm of the STFT against the window."""
    if spec.order != ORDER_MODULATION:
        raise ValueError("modulation_norm requires a spec with order='modulation'")
    return mixed_norm(stft1(f, window), spec)


def amalgam_norm_signal(f: Signal1, window: Signal1, spec: NormSpec) -> float:
    """Amalgam-space norm of a 1-D signal: frequency-first mixed STFT norm."""
    if spec.order != ORDER_AMALGAM:
        raise ValueError("amalgam_norm_signal requires a spec with order='amalgam'")
    return mixed_norm(stft1(f, window), spec)


def amalgam_norm(a: Field2, window: Field2, spec: NormSpec) -> float:
    """Amalgam-space norm of a 2-D symbol, built on the 2-D STFT.

    The inner integral runs over the 2-D frequency variable (exponent p,
    weight evaluated at the frequency point), the outer one over the 2-D
    translation lattice (exponent q).
    """
    if spec.order != ORDER_AMALGAM:
        raise ValueError("amalgam_norm requires a spec with order='amalgam'")
    return stft2_mixed_norm(stft2(a, window), spec)


def stft2_mixed_norm(v: Stft2Result, spec: NormSpec) -> float:
    """Nested mixed norm of a 4-index 2-D STFT tensor (frequency inner)."""
    grid = v.base_grid
    z1 = grid.points[:, None]
    z2 = grid.points[None, :]
    w = spec.weight(z1, z2)  # evaluated on the frequency plane
    mag = np.abs(v.values) * w[None, None, :, :]
    measure = grid.spacing**2
    inner = _lp_reduce(mag, spec.p, (2, 3), measure)
    return float(_lp_reduce(inner, spec.q, None, measure))


@dataclass(frozen=True)
class InclusionReport:
    """Norms of one signal in two exponent pairs, plus the monotonicity verdict."""

    p1: float
    q1: float
    p2: float
    q2: float
    counting_norm_1: float
    counting_norm_2: float
    riemann_norm_1: float
    riemann_norm_2: float
    monotone: bool


def check_inclusion(
    f: Signal1,
    window: Signal1,
    exponents_small: tuple[float, float],
    exponents_large: tuple[float, float],
) -> InclusionReport:
    """Check the mixed-norm inclusion between two exponent pairs.

    With the grid measure removed the counting-measure mixed norm is
    non-increasing in each exponent, which is asserted exactly; the
    measure-weighted norms are reported for information only.
    """
    p1, q1 = exponents_small
    p2, q2 = exponents_large
    if not (p1 <= p2 and q1 <= q2):
        raise ValueError("exponents must satisfy p1 <= p2 and q1 <= q2")
    unit = Weight.constant()
    spec1 = NormSpec(p1, q1, unit, ORDER_MODULATION)
    spec2 = NormSpec(p2, q2, unit, ORDER_MODULATION)
    v = stft1(f, window)
    return InclusionReport(
        p1=p1,
        q1=q1,
        p2=p2,
        q2=q2,
        counting_norm_1=mixed_norm(v, spec1, include_measure=False),
        counting_norm_2=mixed_norm(v, spec2, include_measure=False),
        riemann_norm_1=mixed_norm(v, spec1),
        riemann_norm_2=mixed_norm(v, spec2),
        monotone=mixed_norm(v, spec2, include_measure=False)
        <= mixed_norm(v, spec1, include_measure=False) * (1 + 1e-12),
    )
