"""Joint area/rank statistics on Dyck paths and their combinatorial models."""

from .errors import CapacityError, ConsistencyError, ValidationError
from .lattice_paths import DyckPath, MotzkinPath, area, catalan, enumerate_dyck, enumerate_motzkin
from .noncrossing import NoncrossingPartition, enumerate_nc, leq, phi, phi_inverse, rank
from .poly import BivariatePolynomial, TruncatedSeries
from .polynomials import (
    GammaExpansion,
    cf_truncate,
    dy_poly_enum,
    dy_poly_motzkin,
    dy_poly_recurrence,
    gamma_expand_plain,
    gamma_expand_refined,
    motzkin_poly,
)
from .su_words import SUWord, decode, encode, rho, sbd, theta
from .type_b import BPartition, LRPair, enumerate_ncb, eta, leq_b, sbd_b

__version__ = "0.1.0"

__all__ = [
    "BPartition",
    "BivariatePolynomial",
    "CapacityError",
    "ConsistencyError",
    "DyckPath",
    "GammaExpansion",
    "LRPair",
    "MotzkinPath",
    "NoncrossingPartition",
    "SUWord",
    "TruncatedSeries",
    "ValidationError",
    "area",
    "catalan",
    "cf_truncate",
    "decode",
    "dy_poly_enum",
    "dy_poly_motzkin",
    "dy_poly_recurrence",
    "encode",
    "enumerate_dyck",
    "enumerate_motzkin",
    "enumerate_nc",
    "enumerate_ncb",
    "eta",
    "gamma_expand_plain",
    "gamma_expand_refined",
    "leq",
    "leq_b",
    "motzkin_poly",
    "phi",
    "phi_inverse",
    "rank",
    "rho",
    "sbd",
    "sbd_b",
    "theta",
]
