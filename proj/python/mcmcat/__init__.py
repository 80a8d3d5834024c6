"""Exact homological algebra over Cohen-Macaulay module categories."""

import json

try:
    from . import _core
except ImportError:  # extension built out of tree, e.g. straight from the build dir
    import _core

__all__ = [
    "gldim",
    "check",
    "regularity_witness",
    "dvr_normal_form",
    "dvr_pd",
    "dvr_depth",
]

gldim = _core.gldim
dvr_pd = _core.dvr_pd
dvr_depth = _core.dvr_depth


def check(suite, seed=0, trials=0):
    """Run a property suite and return its report as a dict."""
    return json.loads(_core.run_check(suite, seed, trials))


def regularity_witness(ring, cap=32):
    """Regularity certificate (or counterexample witness) for a ring descriptor."""
    return json.loads(_core.regularity_witness(ring, cap))


def dvr_normal_form(generators, relations):
    """Invariant factors of coker(relations) over the DVR as a dict."""
    return json.loads(_core.dvr_normal_form(generators, relations))
