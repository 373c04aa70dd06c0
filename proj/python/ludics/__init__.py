"""Computational ludics: designs, interaction sequences and connectives."""

from ._ludics import (
    Connective,
    Design,
    LudicsError,
    MultiDesign,
    Session,
    Workbench,
    canonical_path,
    connective,
    decompose,
    dual,
    eta_expand,
    fixtures,
    harmony,
    interact,
    is_path,
    normalize,
    orthogonal,
    paths,
    regularity,
    shuffle,
    step,
    trace_json,
    view,
)

__all__ = [
    "Connective",
    "Design",
    "LudicsError",
    "MultiDesign",
    "Session",
    "Workbench",
    "canonical_path",
    "connective",
    "decompose",
    "dual",
    "eta_expand",
    "fixtures",
    "harmony",
    "interact",
    "is_path",
    "normalize",
    "orthogonal",
    "paths",
    "regularity",
    "shuffle",
    "step",
    "trace_json",
    "view",
]
