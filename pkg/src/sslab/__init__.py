"""Exact Dehn-filling calculus on Seifert fibered 3-manifolds."""
from .errors import SSLabError
from .lspace import LSpaceCertificate, Rule, Verdict, certify
from .seifert import (
    BaseOrbifold,
    FiberFilling,
    Framing,
    SeifertBounded,
    SeifertClosed,
    fill,
    fundamental_group,
    h1,
    normalize_invariants,
    recognize,
)
from .slopes import BasisChange, Slope, change_basis, distance, normalize

__version__ = "0.1.0"

__all__ = [
    "BaseOrbifold",
    "BasisChange",
    "FiberFilling",
    "Framing",
    "LSpaceCertificate",
    "Rule",
    "SSLabError",
    "SeifertBounded",
    "SeifertClosed",
    "Slope",
    "Verdict",
    "certify",
    "change_basis",
    "distance",
    "fill",
    "fundamental_group",
    "h1",
    "normalize",
    "normalize_invariants",
    "recognize",
]
