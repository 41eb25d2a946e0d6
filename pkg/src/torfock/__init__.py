"""torfock: exact symbolic verifier for quantum toroidal / affine Yangian
algebras, their Fock modules, and their classical degenerations."""

__version__ = "0.1.0"

from .cyclo import CycloField, CycloNumber, cyclotomic_poly, get_field
from .series import SeriesContext, TruncSeries, qnum

__all__ = [
    "CycloField",
    "CycloNumber",
    "cyclotomic_poly",
    "get_field",
    "SeriesContext",
    "TruncSeries",
    "qnum",
]
