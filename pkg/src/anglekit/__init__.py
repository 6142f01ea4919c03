"""Exact and certified counting of distinct angles in planar point sets."""
from .angles import Degenerate, Mode, PiRational, parse_pi
from .census import angle_set_subset, census
from .config import ConcyclicDomain, Configuration, NumericDomain, QuadraticDomain
from .exact import ExactAngleKey, Point, angle_key, apply_similarity, key_compare, orientation
from .report import CensusReport, Certification
from .scalar import QuadraticField, Scalar, scalar_sign

__version__ = "0.1.0"

__all__ = [
    "CensusReport",
    "Certification",
    "ConcyclicDomain",
    "Configuration",
    "Degenerate",
    "ExactAngleKey",
    "Mode",
    "NumericDomain",
    "PiRational",
    "Point",
    "QuadraticDomain",
    "QuadraticField",
    "Scalar",
    "angle_key",
    "angle_set_subset",
    "apply_similarity",
    "census",
    "key_compare",
    "orientation",
    "parse_pi",
    "scalar_sign",
]
