"""Free field realizations of affine sl(n+1) on generalized imaginary Verma modules.

States are exchanged as canonical JSON text and rationals as "p/q" strings.
"""

from ._imverma import (  # noqa: F401
    ParseError,
    Realization,
    SemanticError,
    bernoulli,
    bracket,
    character,
    delta_selftest,
    delta_u,
    evaluation,
    form,
    from_config,
    heisenberg,
    killing_form,
)

import json as _json


def parse_state(text):
    """State JSON text to a list of records."""
    return _json.loads(text)


__all__ = [
    "ParseError",
    "Realization",
    "SemanticError",
    "bernoulli",
    "bracket",
    "character",
    "delta_selftest",
    "delta_u",
    "evaluation",
    "form",
    "from_config",
    "heisenberg",
    "killing_form",
    "parse_state",
]
