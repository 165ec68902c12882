"""capdisc: spherical cap L2 discrepancy via the invariance principle.

Energies and discrepancies of point sets and weighted measures on S^d,
the full lower-bound ladder (centroid, frame potential, uniform and
asymptotic constants), and the lattice-conjectured optimal constants
from Epstein zeta functions of A2, D4, E8 and the Leech lattice.
"""

from .constants import (
    c_alpha_asymptotic,
    c_alpha_conjectured,
    c_asymptotic,
    c_conjectured,
    c_uniform,
    fig3_grid,
    sphere_surface_area,
    stolarsky_constant,
    table1,
)
from .curves import CurveStudy, curve_discrepancy, curve_scaling_study
from .discrepancy import (
    DiscrepancyReport,
    EnergyDeficit,
    beck_bound_ladder,
    cap_area,
    cap_discrepancy_montecarlo,
    cap_discrepancy_stolarsky,
    centroid_norm,
    energy_deficit,
    energy_integral,
    frame_potential,
    kernel_deficit,
    moment_sum,
    moment_sums,
    pairwise_energy,
    series_discrepancy_squared,
)
from .lattices import (
    LatticeSpec,
    PoleError,
    epstein_zeta_closed,
    epstein_zeta_direct,
    epstein_zeta_gauss,
    lattice,
    minimal_shell,
    shell_counts,
)
from .pointsets import (
    CurveSpec,
    PointConfiguration,
    SeedSpec,
    cross_polytope,
    curve_points,
    fibonacci_sphere,
    load_points,
    random_uniform,
    save_points,
    simplex_vertices,
)
from .specfun import (
    CoefficientRule,
    dist_coeff,
    dist_coeffs,
    hurwitz_zeta,
    moment_integral,
    pochhammer_ratio,
    ramanujan_L,
    ramanujan_tau,
    riemann_zeta,
    tail_sum_all,
    tail_sum_even_weighted,
)

__version__ = "0.1.0"
