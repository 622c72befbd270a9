"""Exact counts of Pauli-allowed and forbidden binary necklaces."""

import json as _json

from ._core import (
    RangeError,
    allowed,
    allowed_row,
    allowed_total,
    appendix_check,
    canonical_form,
    catalan,
    classify,
    fermionic_count,
    forbidden,
    forbidden_row,
    forbidden_total,
    lfsr_cycles,
    lfsr_sequence,
    necklaces,
    polya,
    rotation_sign,
    sieve_counts,
    strong_witten,
    strsc_check,
    table,
    total_necklaces,
    witten,
    zagier_check,
)
from ._core import verify as _verify


def verify(check, n_max, threads=1):
    """Run one verification sweep and return the report as a dict."""
    return _json.loads(_verify(check, n_max, threads))


__all__ = [name for name in dir() if not name.startswith("_")]
