"""Point configurations on S^d: container type, seeded and deterministic
generators, discretized curves, and the text file format.
"""

import math
import zlib
from dataclasses import dataclass, field
from typing import Optional

import numpy as np
from scipy.integrate import quad
from scipy.optimize import brentq

__all__ = [
    "SeedSpec",
    "PointConfiguration",
    "CurveSpec",
    "random_uniform",
    "fibonacci_sphere",
    "cross_polytope",
    "simplex_vertices",
    "curve_points",
    "save_points",
    "load_points",
    "DEFAULT_CURVE_RESOLUTION",
]

DEFAULT_CURVE_RESOLUTION = 64.0  # polyline segments per unit arc length

GOLDEN = (1.0 + math.sqrt(5.0)) / 2.0


@dataclass(frozen=True)
class SeedSpec:
    """Root seed with named, independently reproducible substreams."""

    seed: int = 0

    def rng(self, label=""):
        key = zlib.crc32(label.encode("utf-8"))
        return np.random.default_rng(np.random.SeedSequence(self.seed, spawn_key=(key,)))


@dataclass
class PointConfiguration:
    """N unit vectors in R^(d+1) with probability weights (uniform default)."""

    dim: int
    points: np.ndarray
    weights: Optional[np.ndarray] = None
    label: str = field(default="", compare=False)

    def __post_init__(self):
        self.points = np.ascontiguousarray(self.points, dtype=float)
        if self.points.ndim != 2 or self.points.shape[1] != self.dim + 1:
            raise ValueError("points must be an N x (d+1) matrix")
        n = self.points.shape[0]
        if n < 1:
            raise ValueError("need at least one point")
        if self.weights is None:
            self.weights = np.full(n, 1.0 / n)
        else:
            self.weights = np.ascontiguousarray(self.weights, dtype=float)
            if self.weights.shape != (n,):
                raise ValueError("weights must match the number of points")
        norms = np.linalg.norm(self.points, axis=1)
        if np.max(np.abs(norms - 1.0)) > 1e-12:
            raise ValueError("all points must lie on the unit sphere (1e-12)")
        if np.any(self.weights <= 0.0):
            raise ValueError("weights must be positive")
        if abs(self.weights.sum() - 1.0) > 1e-12:
            raise ValueError("weights must sum to 1 (1e-12)")

    @property
    def n(self):
        return self.points.shape[0]

    @property
    def is_uniform(self):
        return bool(np.max(np.abs(self.weights - 1.0 / self.n)) < 1e-15)


@dataclass(frozen=True)
class CurveSpec:
    """A rectifiable curve on S^2 to be discretized into a weighted measure."""

    kind: str  # great_circle | spiral
    target_length: float = 2.0 * math.pi
    resolution: float = DEFAULT_CURVE_RESOLUTION

    def __post_init__(self):
        if self.kind not in ("great_circle", "spiral"):
            raise ValueError("kind must be 'great_circle' or 'spiral'")
        if self.kind == "spiral" and self.target_length < 2.0 * math.pi:
            raise ValueError("spiral target_length must be >= 2*pi")
        if self.resolution <= 0:
            raise ValueError("resolution must be positive")


def random_uniform(d, n, seed):
    """N i.i.d. uniform points on S^d via normalized Gaussians."""
    if d < 2:
        raise ValueError("d must be >= 2")
    if n < 1:
        raise ValueError("n must be >= 1")
    if not isinstance(seed, SeedSpec):
        seed = SeedSpec(int(seed))
    g = seed.rng("random_uniform").standard_normal((n, d + 1))
    g /= np.linalg.norm(g, axis=1, keepdims=True)
    return PointConfiguration(d, g, label=f"random(d={d},n={n})")


def fibonacci_sphere(n):
    """Spherical Fibonacci points: Lambert lift of the Fibonacci lattice.

    z_k = 1 - (2k+1)/N (symmetric offset, poles avoided), azimuth
    2*pi*frac(k/phi).  Defined for any N >= 2; classically N is a
    Fibonacci number.
    """
    if n < 2:
        raise ValueError("n must be >= 2")
    k = np.arange(n)
    z = 1.0 - (2.0 * k + 1.0) / n
    phi = 2.0 * math.pi * np.mod(k / GOLDEN, 1.0)
    r = np.sqrt(np.clip(1.0 - z * z, 0.0, None))
    pts = np.column_stack([r * np.cos(phi), r * np.sin(phi), z])
    pts /= np.linalg.norm(pts, axis=1, keepdims=True)
    return PointConfiguration(2, pts, label=f"fibonacci(n={n})")


def cross_polytope(d):
    """The 2(d+1) points +-e_i on S^d (cross-polytope vertices)."""
    if d < 2:
        raise ValueError("d must be >= 2")
    eye = np.eye(d + 1)
    pts = np.vstack([eye, -eye])
    return PointConfiguration(d, pts, label=f"cross(d={d})")


def simplex_vertices(d):
    """The d+2 vertices of the regular simplex inscribed in S^d.

    Pairwise inner products are exactly -1/(d+1); built by projecting
    the centered standard basis of R^(d+2) onto the sum-zero hyperplane
    through the Helmert orthonormal basis.
    """
    if d < 2:
        raise ValueError("d must be >= 2")
    m = d + 2
    centered = np.eye(m) - np.full((m, m), 1.0 / m)
    # Helmert rows: orthonormal basis of the sum-zero hyperplane in R^m
    H = np.zeros((m - 1, m))
    for i in range(1, m):
        H[i - 1, :i] = 1.0
        H[i - 1, i] = -i
        H[i - 1] /= math.sqrt(i * (i + 1.0))
    pts = centered @ H.T
    pts /= np.linalg.norm(pts, axis=1, keepdims=True)
    return PointConfiguration(d, pts, label=f"simplex(d={d})")


def _spiral_speed(v, K):
    # arc-length density in the colatitude parameter v for the helix
    # spiral theta = K v: ds = sqrt(1 + K^2 sin^2 v) dv
    return np.sqrt(1.0 + K * K * np.sin(v) ** 2)


def _spiral_length(K):
    val, _ = quad(lambda v: float(_spiral_speed(np.array(v), K)), 0.0, math.pi, limit=200)
    return val


def curve_points(spec, d=2):
    """Discretize a CurveSpec into a weighted PointConfiguration.

    Vertex weights are half the sum of the adjacent polyline segment
    lengths (trapezoidal discretization of the normalized arc-length
    measure); second-order accurate in the segment length.
    """
    if d != 2:
        raise ValueError("curves are instantiated on S^2 only")
    if spec.kind == "great_circle":
        length = 2.0 * math.pi
        nseg = max(int(math.ceil(spec.resolution * length)), 3)
        if nseg < 8:
            raise ValueError("resolution too coarse: < 8 segments per turn")
        th = 2.0 * math.pi * np.arange(nseg) / nseg
        pts = np.column_stack([np.cos(th), np.sin(th), np.zeros(nseg)])
        # closed equispaced loop: trapezoidal weights are uniform
        return PointConfiguration(2, pts, label="great_circle")
    # spiral: the helix theta = K v, v in [0, pi]; azimuth linear in the
    # colatitude makes the arc-length measure equidistribute (length per
    # unit area ~ constant), unlike azimuth linear in z, whose limiting
    # density is proportional to sin(v).  K (half-turn count) solved so
    # that the arc length hits target_length
    L = spec.target_length
    K = brentq(lambda k: _spiral_length(k) - L, 0.0, L, xtol=1e-12)
    nseg = max(int(math.ceil(spec.resolution * L)), 8)
    if nseg / max(K, 1.0) < 8.0:
        raise ValueError("resolution too coarse: < 8 segments per turn")
    # vertices equispaced in arc length via the inverse of s(v)
    vg = np.linspace(0.0, math.pi, 16 * nseg + 1)
    sp = _spiral_speed(vg, K)
    s_cum = np.concatenate([[0.0], np.cumsum((sp[1:] + sp[:-1]) * 0.5 * np.diff(vg))])
    v = np.interp(np.linspace(0.0, s_cum[-1], nseg + 1), s_cum, vg)
    z = np.cos(v)
    th = K * v
    r = np.sin(v)
    pts = np.column_stack([r * np.cos(th), r * np.sin(th), z])
    pts /= np.linalg.norm(pts, axis=1, keepdims=True)
    seg = np.linalg.norm(np.diff(pts, axis=0), axis=1)
    w = np.zeros(nseg + 1)
    w[:-1] += 0.5 * seg
    w[1:] += 0.5 * seg
    return PointConfiguration(2, pts, weights=w / w.sum(), label=f"spiral(L={L:g})")


def polyline_length(config):
    """Chordal arc length of a configuration read as an open polyline."""
    return float(np.linalg.norm(np.diff(config.points, axis=0), axis=1).sum())


# ---------------------------------------------------------------------------
# File format: line 1 "d N [weighted]", then N rows of d+1 coordinates
# (plus a weight column when weighted), 17 significant digits.


def save_points(config, path):
    with open(path, "w") as fh:
        weighted = not config.is_uniform
        head = f"{config.dim} {config.n}"
        if weighted:
            head += " weighted"
        fh.write(head + "\n")
        for i in range(config.n):
            row = " ".join("%.17g" % v for v in config.points[i])
            if weighted:
                row += " %.17g" % config.weights[i]
            fh.write(row + "\n")


def load_points(path):
    with open(path) as fh:
        header = fh.readline().split()
        if len(header) not in (2, 3) or (len(header) == 3 and header[2] != "weighted"):
            raise ValueError(f"{path}:1: malformed header {' '.join(header)!r}")
        try:
            d, n = int(header[0]), int(header[1])
        except ValueError:
            raise ValueError(f"{path}:1: malformed header") from None
        weighted = len(header) == 3
        ncol = d + 2 if weighted else d + 1
        pts = np.empty((n, d + 1))
        w = np.empty(n) if weighted else None
        for i in range(n):
            parts = fh.readline().split()
            if len(parts) != ncol:
                raise ValueError(f"{path}:{i + 2}: expected {ncol} columns, got {len(parts)}")
            try:
                vals = [float(p) for p in parts]
            except ValueError:
                raise ValueError(f"{path}:{i + 2}: non-numeric entry") from None
            pts[i] = vals[: d + 1]
            if weighted:
                w[i] = vals[d + 1]
    return PointConfiguration(d, pts, weights=w)
