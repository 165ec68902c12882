"""Named constants: the invariance-principle constant C_d, the uniform
and asymptotic lower-bound constants c_d* and c_d***, their power-law
generalizations, the lattice-conjectured constants from Epstein zeta
values at negative arguments, and the comparison table / figure grids.
"""

import math
from dataclasses import dataclass

from scipy.special import gammaln

from .lattices import epstein_zeta_closed, lattice

__all__ = [
    "stolarsky_constant",
    "sphere_surface_area",
    "c_uniform",
    "c_asymptotic",
    "c_alpha_asymptotic",
    "c_conjectured",
    "c_alpha_conjectured",
    "ConstantsRow",
    "table1",
    "fig3_grid",
    "TABLE1_LATTICES",
]

TABLE1_LATTICES = {2: "A2", 4: "D4", 8: "E8", 24: "Leech"}


def stolarsky_constant(d):
    """C_d = Gamma((d+1)/2) / (d sqrt(pi) Gamma(d/2)); C_2 = 1/4."""
    if d < 2:
        raise ValueError("d must be >= 2")
    return math.exp(gammaln((d + 1) / 2.0) - gammaln(d / 2.0)) / (d * math.sqrt(math.pi))


def sphere_surface_area(d):
    """omega_d = H_d(S^d) = 2 pi^((d+1)/2) / Gamma((d+1)/2)."""
    return 2.0 * math.pi ** ((d + 1) / 2.0) * math.exp(-gammaln((d + 1) / 2.0))


def c_uniform(d):
    """c_d*, valid for every N >= 2; c_2* = 1/(6 sqrt(6 pi))."""
    if d < 2:
        raise ValueError("d must be >= 2")
    return math.sqrt(
        stolarsky_constant(d)
        / (2.0 * math.sqrt(math.pi))
        / (1.0 + 1.0 / d)
        * math.exp((gammaln(1.5) - gammaln((d + 3) / 2.0)) / d)
    )


def c_asymptotic(d):
    """c_d***, the liminf (N -> infinity) constant; c_2*** = 1/sqrt(3 sqrt(pi))."""
    if d < 2:
        raise ValueError("d must be >= 2")
    return math.sqrt(
        stolarsky_constant(d)
        / math.sqrt(math.pi)
        / (1.0 + 1.0 / d)
        * math.exp((math.log(2.0) + gammaln(0.5) - gammaln((d + 1) / 2.0)) / d)
    )


def c_alpha_asymptotic(alpha, d):
    """Power-law asymptotic constant c_{alpha,d}^asymp; -> 1 as alpha -> 0+."""
    if d < 2:
        raise ValueError("d must be >= 2")
    if not 0.0 <= alpha < 2.0:
        raise ValueError("alpha must lie in [0, 2)")
    if alpha == 0.0:
        return 1.0
    return (
        math.exp(-gammaln(1.0 - alpha / 2.0))
        / (1.0 + alpha / d)
        * math.exp((alpha / d) * (math.log(2.0) + gammaln(0.5) - gammaln((d + 1) / 2.0)))
    )


def c_conjectured(lat):
    """Conjectured optimal constant from the lattice zeta at s = -1/2."""
    if isinstance(lat, str):
        lat = lattice(lat)
    d = lat.dim
    z = epstein_zeta_closed(lat, -0.5)
    radicand = stolarsky_constant(d) * sphere_surface_area(d) ** (1.0 / d) * (
        -(lat.zeta_covolume ** (-1.0 / d)) * z
    )
    return math.sqrt(radicand)


def c_alpha_conjectured(alpha, lat):
    """Power-law conjectured constant from the lattice zeta at s = -alpha/2."""
    if isinstance(lat, str):
        lat = lattice(lat)
    if not 0.0 <= alpha < 2.0:
        raise ValueError("alpha must lie in [0, 2)")
    if alpha == 0.0:
        return 1.0
    d = lat.dim
    z = epstein_zeta_closed(lat, -alpha / 2.0)
    return sphere_surface_area(d) ** (alpha / d) * (-(lat.zeta_covolume ** (-alpha / d)) * z)


@dataclass(frozen=True)
class ConstantsRow:
    """One comparison row: conjectured vs asymptotic constant in dimension d."""

    d: int
    lattice: str
    c_conj: float
    c_star3: float

    @property
    def diff(self):
        return self.c_conj - self.c_star3

    @property
    def rel_error(self):
        return self.diff / self.c_conj

    @property
    def diff_printed(self):
        # reporting convention: difference truncated (not rounded) at 3 decimals
        return "%.3f" % (math.floor(self.diff * 1000.0) / 1000.0)

    @property
    def rel_error_percent(self):
        # reporting convention: relative error as a whole percent
        return int(round(self.rel_error * 100.0))


def table1():
    """The four comparison rows (d = 2, 4, 8, 24)."""
    rows = []
    for d, name in TABLE1_LATTICES.items():
        lat = lattice(name)
        rows.append(ConstantsRow(d, name, c_conjectured(lat), c_asymptotic(d)))
    return rows


def fig3_grid(alphas, lattices=None):
    """(lattice, alpha, conjectured, asymptotic, rel_error) comparison grid."""
    if lattices is None:
        lattices = list(TABLE1_LATTICES.values())
    rows = []
    for name in lattices:
        lat = lattice(name)
        for a in alphas:
            conj = c_alpha_conjectured(a, lat)
            asym = c_alpha_asymptotic(a, lat.dim)
            rel = (conj - asym) / conj if conj != 0 else 0.0
            rows.append({
                "lattice": lat.name,
                "d": lat.dim,
                "alpha": float(a),
                "c_conj": conj,
                "c_asymp": asym,
                "rel_error": rel,
            })
    return rows
