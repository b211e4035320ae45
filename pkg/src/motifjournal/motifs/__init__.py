"""Procedural motif visualizers, ablation baselines, and entry assembly."""

from .base import (
    BACKGROUND,
    LINE_COLOR,
    OUTLINE_COLOR,
    DegenerateOutline,
    EmptyColorList,
    Motif,
    MotifRequest,
    ParamError,
    ParamSpec,
    StyleSpec,
    UnknownStyle,
    all_styles,
    get_style,
    new_panel,
    validate_params,
)
from .baselines import BASELINE_IDS, baseline, banded_fill, solid_fill, square_shape
from .compose import (
    CAPTION_HEIGHT,
    CAPTION_PAD_X,
    CAPTION_PAD_Y,
    CAPTION_SCALE,
    NO_EMOTION_CAPTION,
    NO_TOPIC_CAPTION,
    PANEL_GUTTER,
    ShapeMissing,
    assemble_entry,
    caption_text,
    render_entry,
    render_panel,
)
from .font import render_text
from .styles import carpet, circle_packing, glass, string_doll, tile

__all__ = [
    "BACKGROUND",
    "LINE_COLOR",
    "OUTLINE_COLOR",
    "BASELINE_IDS",
    "CAPTION_HEIGHT",
    "CAPTION_PAD_X",
    "CAPTION_PAD_Y",
    "CAPTION_SCALE",
    "NO_EMOTION_CAPTION",
    "NO_TOPIC_CAPTION",
    "PANEL_GUTTER",
    "DegenerateOutline",
    "EmptyColorList",
    "Motif",
    "MotifRequest",
    "ParamError",
    "ParamSpec",
    "ShapeMissing",
    "StyleSpec",
    "UnknownStyle",
    "all_styles",
    "assemble_entry",
    "baseline",
    "banded_fill",
    "caption_text",
    "carpet",
    "circle_packing",
    "get_style",
    "glass",
    "new_panel",
    "render_entry",
    "render_panel",
    "render_text",
    "solid_fill",
    "square_shape",
    "string_doll",
    "tile",
    "validate_params",
]
