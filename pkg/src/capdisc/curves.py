"""Curve (s = 1 Hausdorff measure) discrepancy studies on S^2."""

import json
import math
from dataclasses import dataclass, field
from typing import List

import numpy as np

from .discrepancy import cap_discrepancy_stolarsky
from .pointsets import DEFAULT_CURVE_RESOLUTION, CurveSpec, curve_points

__all__ = ["CurveStudy", "curve_discrepancy", "curve_scaling_study", "GREAT_CIRCLE_DISCREPANCY"]

# sqrt(C_2 (4/3 - 4/pi)): mean chord of the circle is 4/pi
GREAT_CIRCLE_DISCREPANCY = math.sqrt(0.25 * (4.0 / 3.0 - 4.0 / math.pi))


@dataclass
class CurveStudy:
    """Discrepancy-vs-length scaling data with a fitted decay exponent."""

    lengths: List[float]
    discrepancies: List[float]
    fitted_exponent: float
    reference_exponent: float
    d: int = 2

    def to_dict(self):
        return {
            "lengths": self.lengths,
            "discrepancies": self.discrepancies,
            "fitted_exponent": self.fitted_exponent,
            "reference_exponent": self.reference_exponent,
            "d": self.d,
        }

    def to_json(self, **kw):
        return json.dumps(self.to_dict(), **kw)

    def to_csv(self):
        lines = ["length,discrepancy,scaled_l32"]
        for l, v in zip(self.lengths, self.discrepancies):
            lines.append("%.17g,%.17g,%.17g" % (l, v, v * l**1.5))
        return "\n".join(lines) + "\n"


def curve_discrepancy(spec, check_convergence=True):
    """Cap L2 discrepancy of the normalized arc-length measure of a curve.

    Discretizes at the spec resolution and at double resolution; the
    coarse value is the Richardson convergence check (must move by less
    than 0.1%) and the fine value is reported.
    """
    fine = CurveSpec(spec.kind, spec.target_length, 2.0 * spec.resolution)
    rep = cap_discrepancy_stolarsky(curve_points(fine))
    if check_convergence:
        coarse = cap_discrepancy_stolarsky(curve_points(spec))
        delta = abs(coarse.value - rep.value) / rep.value
        if delta > 1e-3:
            raise ArithmeticError(
                f"curve discretization not converged: resolution doubling moved "
                f"the value by {delta:.2e} (> 1e-3)"
            )
    return rep


def curve_scaling_study(lengths, resolution=DEFAULT_CURVE_RESOLUTION, d=2):
    """Spiral discrepancy over a ladder of lengths with a log-log slope fit.

    The reference exponent -(d+1)/(2(d-1)) = -3/2 on S^2 is the decay
    rate the curve lower bound permits; the fit is exploratory (the
    theorem's constant is not explicit).
    """
    lengths = [float(l) for l in lengths]
    if any(l < 2.0 * math.pi for l in lengths):
        raise ValueError("lengths must be >= 2*pi")
    if sorted(lengths) != lengths:
        raise ValueError("lengths must be ascending")
    vals = []
    for l in lengths:
        spec = CurveSpec("spiral", l, resolution)
        vals.append(cap_discrepancy_stolarsky(curve_points(spec)).value)
    slope = float(np.polyfit(np.log(lengths), np.log(vals), 1)[0])
    ref = -(d + 1.0) / (2.0 * (d - 1.0))
    return CurveStudy(lengths, vals, slope, ref, d)
