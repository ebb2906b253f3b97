"""Skew constacyclic codes over F_q[u,v]/(f(u), g(v), uv-vu).

Thin wrapper over the C++ extension: configurations go in as dicts (or
pre-serialized JSON strings), reports come back as dicts. The config format
matches the command line tool, so reports can be fed back in as configs.
"""

import json as _json

from ._skewcc import (  # noqa: F401
    EnumerationLimitError,
    VerificationError,
    __version__,
)
from . import _skewcc

__all__ = [
    "EnumerationLimitError",
    "VerificationError",
    "build",
    "dual",
    "idempotent",
    "gray",
    "component_distances",
    "classify",
    "verify_generator",
    "examples",
    "bundled_ids",
    "bundled_config",
    "enumerated_size",
    "dual_matches",
    "smallest_irreducible",
]


def _dump(config):
    return config if isinstance(config, str) else _json.dumps(config)


def build(config):
    """Builds a code and reports its parameters, components and class."""
    return _json.loads(_skewcc.build(_dump(config)))


def dual(config):
    """Report of the dual code."""
    return _json.loads(_skewcc.dual(_dump(config)))


def idempotent(config):
    """Idempotent generator of the code."""
    return _json.loads(_skewcc.idempotent(_dump(config)))


def gray(config, seed=12345):
    """Length, dimension and minimum distance of the Gray image."""
    return _json.loads(_skewcc.gray(_dump(config), seed))


def component_distances(config):
    """Exhaustive per-component minimum Hamming distances."""
    return _json.loads(_skewcc.component_distances(_dump(config)))


def classify(config):
    """Shift class and cardinality of the code."""
    return _json.loads(_skewcc.classify(_dump(config)))


def verify_generator(config):
    """Divides x^n - alpha by the configured ring-level generator."""
    return _json.loads(_skewcc.verify_generator(_dump(config)))


def examples(seed=12345):
    """Replays the bundled worked examples and reports every assertion."""
    return _json.loads(_skewcc.examples(seed))


def bundled_ids():
    """ids of the bundled configurations."""
    return list(_skewcc.bundled_ids())


def bundled_config(id):
    """Configuration dict for one bundled id."""
    return _json.loads(_skewcc.bundled_config(id))


def enumerated_size(config):
    """Exact codeword count by enumeration (capped at 2^20)."""
    return _skewcc.enumerated_size(_dump(config))


def dual_matches(config):
    """True when the dual construction equals the brute-force dual."""
    return _skewcc.dual_matches(_dump(config))


def smallest_irreducible(p, s):
    """Ascending coefficients of the default modulus for F_(p^s)."""
    return list(_skewcc.smallest_irreducible(p, s))
