"""Super Yang-Mills algebra computations over the rationals."""

import json

from ._superym import (
    basis,
    cw_surjection,
    dims_ym,
    heis_json,
    hilbert_series,
    lie_dims,
    presentation_hash,
    preset_json,
    superpotential_ok,
    weight_of,
)

__all__ = [
    "basis",
    "cw_surjection",
    "dims_ym",
    "heis_json",
    "hilbert_series",
    "lie_dims",
    "load_presentation",
    "presentation_hash",
    "preset_json",
    "superpotential_ok",
    "weight_of",
]


def load_presentation(path):
    """Return the presentation file at `path` as a canonical JSON string."""
    with open(path, encoding="utf-8") as fh:
        return json.dumps(json.load(fh))
