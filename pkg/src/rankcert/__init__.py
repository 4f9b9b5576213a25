"""Exact certification of injective measurement ensembles for low-rank matrix recovery."""

from __future__ import annotations

from .certify import (
    FAIL,
    INDETERMINATE,
    INJECTIVE,
    Certificate,
    CertifyConfig,
    MeasurementEnsemble,
    audit_certificate,
    vinzant_certify,
)
from .groebner import GroebnerBasis, Ideal, Limits, ResourceExceeded, buchberger, elimination_ideal
from .poly import GREVLEX, LEX, MonomialOrder, Polynomial
from .projections import Subspace, certify_phase_retrieval, complement_property
from .realroots import count_real_roots, sturm_sequence
from .search import SearchConfig, search_minimal
from .variety import ProblemSpec, degree_determinantal, dim_lowrank, min_measurement_bound, tightness_classify

__version__ = "0.1.0"

__all__ = [
    "FAIL", "INDETERMINATE", "INJECTIVE", "Certificate", "CertifyConfig", "MeasurementEnsemble",
    "audit_certificate", "vinzant_certify", "GroebnerBasis", "Ideal", "Limits", "ResourceExceeded",
    "buchberger", "elimination_ideal", "GREVLEX", "LEX", "MonomialOrder", "Polynomial", "Subspace",
    "certify_phase_retrieval", "complement_property", "count_real_roots", "sturm_sequence",
    "SearchConfig", "search_minimal", "ProblemSpec", "degree_determinantal", "dim_lowrank",
    "min_measurement_bound", "tightness_classify",
]
