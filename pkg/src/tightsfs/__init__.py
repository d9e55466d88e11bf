"""Exact slope, Seifert-invariant and tight-contact-count calculus for
surgeries on singular fibres of -Sigma(2, 3, 6m+1)."""

from .slopes import (
    IDENTITY,
    INFINITY,
    DomainError,
    InvalidSlope,
    Mat2,
    Slope,
    act,
    canonical,
    cf_eval,
    honda_count,
    invert,
    neg_cf,
    reverse_orientation,
)
from .seifert import SeifertInvariants, is_equivalent, meridian_surgery, normalize
from .family import ConsistencyError, FamilyParams, Fiber, count_report

__version__ = "0.1.0"
