"""Strong modular units Delta_N, dimension formulas and unitary triangular bases
of modular forms on Gamma0(N), all in exact arithmetic."""

from __future__ import annotations

from ._kernels import BACKEND
from .delta import DeltaUnit, delta_unit, nu, rho
from .dims import DimensionProfile, dim_E, dim_M, dim_recurrence_check, dim_S, profile
from .errors import InternalContradiction, ModunitsError, PrecisionError, RankDeficientError
from .etaquot import EtaQuotient, ModularityReport, UnitReport, search_eta_units
from .forms import (
    FormExpansion,
    TriangularBasis,
    echelonize,
    eisenstein_series,
    h2n,
    precision_policy,
    spanning_set,
    structured_basis,
    verify_staircase,
    weight4_val1,
)
from .qseries import QSeries, euler_factor, euler_product

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "DeltaUnit",
    "DimensionProfile",
    "EtaQuotient",
    "FormExpansion",
    "InternalContradiction",
    "ModularityReport",
    "ModunitsError",
    "PrecisionError",
    "QSeries",
    "RankDeficientError",
    "TriangularBasis",
    "UnitReport",
    "delta_unit",
    "dim_E",
    "dim_M",
    "dim_S",
    "dim_recurrence_check",
    "echelonize",
    "eisenstein_series",
    "euler_factor",
    "euler_product",
    "h2n",
    "nu",
    "precision_policy",
    "profile",
    "rho",
    "search_eta_units",
    "spanning_set",
    "structured_basis",
    "verify_staircase",
    "weight4_val1",
]
