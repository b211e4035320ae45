"""The seven ablation baselines: squares instead of shapes, solid colors
instead of creative texture, valence colors instead of nuanced ones, and a
single day-level square.

b1/b2 reuse the circle-packing and string-doll generators on a square mask;
b3/b4 fill with equal-area vertical emotion bands; b5-b7 fill with one
valence color. Color and mask derivation happen in compose; generators only
consume a prepared MotifRequest.
"""

from __future__ import annotations

from functools import lru_cache

import numpy as np

from ..iconproc import ShapeMask, build_shape
from .base import (
    OUTLINE_COLOR,
    EmptyColorList,
    Motif,
    MotifRequest,
    StyleSpec,
    get_style,
    new_panel,
    register,
)
from .styles import _CIRCLE_PARAMS, _STRING_PARAMS, circle_packing, string_doll

BASELINE_IDS = ("b1", "b2", "b3", "b4", "b5", "b6", "b7")


@lru_cache(maxsize=8)
def square_shape(size: int = 512, dilation_radius: int = 2) -> ShapeMask:
    """Topic-less square mask built through the normal icon pipeline."""
    icon = np.zeros((64, 64), dtype=np.uint8)  # solid dark square
    return build_shape(None, icon, size, dilation_radius)


def banded_fill(req: MotifRequest) -> Motif:
    """Vertical equal-area bands, one per color, left to right.

    Band boundaries walk columns until the cumulative interior area reaches
    each band's share, so band areas differ by at most one column of pixels.
    """
    if not req.colors:
        raise EmptyColorList("banded fill requires at least one color")
    canvas = new_panel(req.shape)
    interior = req.shape.interior
    k = len(req.colors)

    col_counts = interior.sum(axis=0)
    total = int(col_counts.sum())
    primitives: list[dict] = []

    band = 0
    area = 0
    band_areas = [0] * k
    band_of_col = np.zeros(interior.shape[1], dtype=np.int64)
    for c in range(interior.shape[1]):
        band_of_col[c] = band
        area += int(col_counts[c])
        band_areas[band] += int(col_counts[c])
        while band < k - 1 and area >= total * (band + 1) / k:
            band += 1

    for i, color in enumerate(req.colors):
        cols = band_of_col == i
        region = interior & cols[None, :]
        canvas.pixels[region] = color.rgba
        primitives.append(
            {"type": "band", "index": i, "color": color.hex(), "pixels": band_areas[i]}
        )

    canvas.pixels[req.shape.outline] = OUTLINE_COLOR.rgba
    return Motif(image=canvas, caption="", style="b3", seed=req.seed,
                 primitives=primitives)


def solid_fill(req: MotifRequest) -> Motif:
    """Whole interior in a single color (the majority-valence color)."""
    if not req.colors:
        raise EmptyColorList("solid fill requires a color")
    canvas = new_panel(req.shape)
    color = req.colors[0]
    canvas.pixels[req.shape.interior] = color.rgba
    canvas.pixels[req.shape.outline] = OUTLINE_COLOR.rgba
    return Motif(
        image=canvas,
        caption="",
        style="b5",
        seed=req.seed,
        primitives=[{"type": "solid", "color": color.hex()}],
    )


def baseline(req: MotifRequest, kind: str) -> Motif:
    """Render one ablation baseline. req.colors must already reflect the
    kind's color mode (emotion colors for b1-b4, one valence color for
    b5-b7)."""
    if kind not in BASELINE_IDS:
        raise KeyError(f"unknown baseline {kind!r}")
    spec = get_style(kind)
    motif = spec.generate(req)
    motif.style = kind
    return motif


register(StyleSpec("b1", _CIRCLE_PARAMS, circle_packing, "emotions", "square"))
register(StyleSpec("b2", _STRING_PARAMS, string_doll, "emotions", "square"))
register(StyleSpec("b3", (), banded_fill, "emotions", "topic"))
register(StyleSpec("b4", (), banded_fill, "emotions", "square"))
register(StyleSpec("b5", (), solid_fill, "valence", "topic"))
register(StyleSpec("b6", (), solid_fill, "valence", "square"))
register(StyleSpec("b7", (), solid_fill, "valence", "square", per_entry=True))
