"""Exact enumeration and geometry of integral Apollonian gaskets."""

from .descartes import boyd_dual, descartes_holds, fourth_bends
from .enumeration import (
    BendQuintet,
    GasketKey,
    GasketRecord,
    SymmetryClass,
    classify,
    enumerate_gaskets,
    key_from_quintet,
    quintet,
    shift,
    solve_master,
)
from .frames import (
    Frame,
    TransitionMatrix,
    TriangleTriple,
    frame_of,
    frame_transition,
    integral_frames_predicate,
    reflection_matrix,
    transition_matrices,
    triple,
)
from .numerics import gcd3, isqrt_exact
from .render import RenderOptions, render_svg
from .symbols import (
    CircleSymbol,
    DescartesConfig,
    Packing,
    generate,
    principal_symbols,
    reflect,
    tangent,
)

__all__ = [
    "BendQuintet",
    "CircleSymbol",
    "DescartesConfig",
    "Frame",
    "GasketKey",
    "GasketRecord",
    "Packing",
    "RenderOptions",
    "SymmetryClass",
    "TransitionMatrix",
    "TriangleTriple",
    "boyd_dual",
    "classify",
    "descartes_holds",
    "enumerate_gaskets",
    "fourth_bends",
    "frame_of",
    "frame_transition",
    "gcd3",
    "generate",
    "integral_frames_predicate",
    "isqrt_exact",
    "key_from_quintet",
    "principal_symbols",
    "quintet",
    "reflect",
    "reflection_matrix",
    "render_svg",
    "shift",
    "solve_master",
    "tangent",
    "transition_matrices",
    "triple",
]
