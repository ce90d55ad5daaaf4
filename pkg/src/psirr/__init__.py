"""Exact reducibility tests for monic polynomials with power-series coefficients."""

from .criterion import (
    INCONCLUSIVE,
    NOT_APPLICABLE,
    REDUCIBLE,
    UNDECIDED,
    OrthantData,
    Verdict,
    apply_criterion,
    compute_p_in,
    extract_q_poly,
    segment_endpoint_check,
)
from .errors import InputError, InternalAssertion, PsirrError
from .factor import coprime_split, factor, factor_fp, factor_q
from .fields import GF, QQ, FieldCtx
from .hensel import Certificate, hensel_lift, verify_certificate
from .oracle import factor_d2, series_sqrt
from .parser import parse_poly, parse_zpoly
from .polyhedron import (
    DeltaPolyhedron,
    delta_generators,
    delta_vertices,
    initial_form,
    omega_extension,
    orthant_check,
)
from .upoly import UniPoly, squarefree_decomposition
from .xpoly import XPoly
from .zpoly import ZPoly

__version__ = "0.1.0"
