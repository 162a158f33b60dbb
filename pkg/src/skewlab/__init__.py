"""Finite rings with endomorphisms, skew polynomials and truncated skew power
series, with deciders for annihilator and reversibility-type ring properties."""

from .endomorphism import Endomorphism, all_endomorphisms, constant_term, eval_at_zero, frobenius, identity, swap
from .errors import (BudgetExceeded, CapacityError, CatalogError, ConfigError, ConstructionError, DegenerateRing,
                     DegreeOverflow, EndoMismatch, NotAnEndomorphism, RingMismatch, SkewLabError)
from .properties import Bounds, Status, Verdict, decide, replay
from .rings import (Element, Ring, make_bounded_poly, make_galois_field, make_group_algebra, make_matrix,
                    make_poly_quotient, make_product, make_upper_triangular, make_zn)
from .skew import SkewPoly, TruncSeries

__version__ = "0.1.0"
