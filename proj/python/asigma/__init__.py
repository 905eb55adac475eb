"""A_sigma spectral radius toolkit (Python bindings)."""

import json as _json

from ._asigma import (  # noqa: F401
    Graph,
    __version__,
    canonical_code,
    candidate_rows,
    check_ids,
    family,
    find_minimizers,
    independence_number,
    is_isomorphic,
    spectral_radius,
)
from ._asigma import run_check as _run_check


def run_check(check_id, **params):
    """Run a registered check and return its outcome as a dict."""
    return _json.loads(_run_check(check_id, _json.dumps(params)))
