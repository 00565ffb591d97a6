"""Coadjoint orbits of compact classical Lie groups.

Construction, complex parameterization (generalized stereographic
projection), Kahler structure, and cohomology data for orbits of SU(n),
Sp(n), SO(3) and SO(4).
"""

from .cohomology import (BasisTwoForm, BettiVector, TwoCycle, basis_cycles,
                         basis_two_forms, betti, leray_hirsch,
                         leray_hirsch_check, pairing_integral, pairing_matrix)
from .decompose import (BruhatFactors, ChartPoint, IwasawaFactors,
                        chart_matrix, chart_point, dressing_matrix,
                        gauss_bruhat, iwasawa, torus_character)
from .errors import (AllWeightsZero, CoadjointError, DegeneracyViolation,
                     MaximalDegenerate, NumericalBreakdown, OutsideCell,
                     PoleOnChart, QuadratureNotConverged, StepUnderflow,
                     UnsupportedGroup, ZeroTorusEntry)
from .groups import (GroupSpec, InitialPoint, OrbitClass, OrbitKind,
                     RootDatum, WeylElement, WeylGroup, build_group,
                     classify_initial_point, initial_point, root_datum,
                     weyl_group)
from .kahler import (KahlerTensor, cocycle_shift, integrality_check,
                     kks_pairing, metric, potential, potential_batch)
from .orbit import (FibrationDescription, OrbitPoint, chart_transition,
                    dress, fibration, su3_closed_form, su3_transition_closed)
from .quaternion import Quaternion, QuaternionMatrix

__version__ = "0.1.0"

__all__ = [
    "AllWeightsZero", "BasisTwoForm", "BettiVector", "BruhatFactors",
    "ChartPoint", "CoadjointError", "DegeneracyViolation",
    "FibrationDescription", "GroupSpec", "InitialPoint", "IwasawaFactors",
    "KahlerTensor", "MaximalDegenerate", "NumericalBreakdown", "OrbitClass",
    "OrbitKind", "OrbitPoint", "OutsideCell", "PoleOnChart", "Quaternion",
    "QuaternionMatrix", "QuadratureNotConverged", "RootDatum",
    "StepUnderflow", "TwoCycle", "UnsupportedGroup", "WeylElement",
    "WeylGroup", "ZeroTorusEntry", "basis_cycles", "basis_two_forms",
    "betti", "build_group", "chart_matrix", "chart_point",
    "chart_transition", "classify_initial_point", "cocycle_shift", "dress",
    "dressing_matrix", "fibration", "gauss_bruhat", "initial_point",
    "integrality_check", "iwasawa", "kks_pairing", "leray_hirsch",
    "leray_hirsch_check", "metric", "pairing_integral", "pairing_matrix",
    "potential", "potential_batch", "root_datum", "su3_closed_form",
    "su3_transition_closed", "torus_character", "weyl_group",
]
