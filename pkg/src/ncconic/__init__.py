"""Noncommutative conics from symmetric superpotentials: exact computation of
C(A), isomorphism of conic pairs and Hesse-curve tools."""

from .algclass import FrobeniusType, classify4, minimal_polynomial, radical_profile
from .clifford import c_of_a, clifford_deformation, clifford_map, deformation, even_part
from .errors import NcConicError
from .exactfield import QE, QEC, QESQ, FieldTower, MultiPoly, RationalFunction, get_tower, parse_scalar
from .hesse import HesseCurve, HessePoint, ec_graded_iso, j_invariant, lambda_of_xi
from .pairs import ConicPair, catalog, conic_pipeline, discriminant_nc, induced_action, pair_iso
from .quadratic import QuadraticAlgebra, f_shriek
from .tables import reproduce_tables
from .tensoralg import Tensor

__version__ = "0.1.0"
