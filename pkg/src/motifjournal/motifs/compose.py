"""Per-entry motif orchestration: derive colors and masks from label sets,
run style generators with per-panel seeds, and assemble the final image
with caption strips.
"""

from __future__ import annotations

import numpy as np

from ..classify import LabelSet
from ..domain import Palette, majority_valence
from ..iconproc import ShapeMask
from ..render import Canvas, Rng
from .base import (
    BACKGROUND,
    LINE_COLOR,
    Motif,
    MotifRequest,
    StyleSpec,
    get_style,
    new_panel,
    validate_params,
)
from .baselines import square_shape
from .font import render_text

PANEL_GUTTER = 16
CAPTION_HEIGHT = 24
CAPTION_PAD_X = 4
CAPTION_PAD_Y = 5
CAPTION_SCALE = 2

NO_TOPIC_CAPTION = "general"
NO_EMOTION_CAPTION = "(no feelings detected)"


class ShapeMissing(KeyError):
    """A topic shape is absent from the configured shape set."""


def caption_text(topic_name: str, emotion_names: list[str]) -> str:
    feelings = ", ".join(emotion_names) if emotion_names else NO_EMOTION_CAPTION
    return f"{topic_name}: {feelings}"


def _panel_shape(
    spec: StyleSpec,
    label_set: LabelSet,
    shapes: dict,
    canvas_size: int,
    dilation_radius: int,
) -> ShapeMask:
    if spec.mask_mode == "topic" and label_set.topic is not None:
        try:
            return shapes[label_set.topic]
        except KeyError:
            raise ShapeMissing(label_set.topic.value) from None
    return square_shape(canvas_size, dilation_radius)


def _panel_colors(spec: StyleSpec, emotions, palette: Palette):
    if not emotions:
        return ()
    if spec.color_mode == "valence":
        return (palette.valence_color(majority_valence(emotions)),)
    return tuple(palette.color(e) for e in emotions)


def _outline_only_panel(shape: ShapeMask, caption: str, style: str, seed: int) -> Motif:
    return Motif(image=new_panel(shape), caption=caption, style=style, seed=seed,
                 primitives=[])


def render_panel(
    spec: StyleSpec,
    label_set: LabelSet,
    emotions,
    palette: Palette,
    shapes: dict,
    params: dict,
    seed: int,
    canvas_size: int,
    dilation_radius: int,
    topic_name: str | None = None,
) -> Motif:
    """One panel: falls back to a square mask when no topic was detected and
    to an outline-only panel when no emotions were."""
    shape = _panel_shape(spec, label_set, shapes, canvas_size, dilation_radius)
    name = topic_name or (label_set.topic.value if label_set.topic else NO_TOPIC_CAPTION)
    caption = caption_text(name, [e.value for e in emotions])
    colors = _panel_colors(spec, emotions, palette)
    if not colors:
        return _outline_only_panel(shape, caption, spec.id, seed)
    req = MotifRequest(shape=shape, colors=colors, params=params, seed=seed)
    motif = spec.generate(req)
    motif.style = spec.id
    motif.caption = caption
    motif.seed = seed
    return motif


def render_entry(
    label_sets: list[LabelSet],
    style_id: str,
    params: dict | None,
    seed: int,
    palette: Palette,
    shapes: dict,
    captions_on: bool = True,
    canvas_size: int = 512,
    dilation_radius: int = 2,
) -> tuple[Canvas, dict]:
    """Render every sub-entry's panel (or one day panel for b7), assemble
    them side by side, and return the image plus a sidecar dict."""
    spec = get_style(style_id)
    merged = validate_params(spec, params)
    master = Rng(seed)

    if shapes:
        canvas_size = next(iter(shapes.values())).canvas_size

    motifs: list[Motif] = []
    if spec.per_entry:
        day_emotions = [e for ls in label_sets for e in ls.emotions]
        day_labels = LabelSet(topic=None, emotions=())
        motifs.append(
            render_panel(
                spec, day_labels, day_emotions, palette, shapes, merged,
                master.next_u64(), canvas_size, dilation_radius, topic_name="day",
            )
        )
    else:
        for ls in label_sets:
            motifs.append(
                render_panel(
                    spec, ls, list(ls.emotions), palette, shapes, merged,
                    master.next_u64(), canvas_size, dilation_radius,
                )
            )

    image = assemble_entry(motifs, captions_on)
    sidecar = {
        "style": style_id,
        "seed": seed,
        "params": merged,
        "captions": captions_on,
        "canvas_size": canvas_size,
        "label_sets": [ls.to_json() for ls in label_sets],
        "panels": [
            {
                "caption": m.caption,
                "seed": m.seed,
                "primitives": m.primitives,
            }
            for m in motifs
        ],
    }
    return image, sidecar


def assemble_entry(motifs: list[Motif], captions_on: bool = True) -> Canvas:
    """Place 1-3 panels left to right with a fixed gutter; when captions are
    on, render each caption in the bitmap font on a strip below its panel."""
    if not 1 <= len(motifs) <= 3:
        raise ValueError("assemble_entry takes 1-3 motifs")
    size = motifs[0].image.width
    if any(m.image.width != size or m.image.height != size for m in motifs):
        raise ValueError("all panels must be square and the same size")

    n = len(motifs)
    width = n * size + (n - 1) * PANEL_GUTTER
    height = size + (CAPTION_HEIGHT if captions_on else 0)
    out = Canvas.filled(width, height, BACKGROUND)

    for i, motif in enumerate(motifs):
        x = i * (size + PANEL_GUTTER)
        out.pixels[0:size, x : x + size] = motif.image.pixels
        if captions_on:
            text = render_text(motif.caption, CAPTION_SCALE)
            tw = min(text.shape[1], size - 2 * CAPTION_PAD_X)
            th = text.shape[0]
            y0 = size + CAPTION_PAD_Y
            x0 = x + CAPTION_PAD_X
            strip = out.pixels[y0 : y0 + th, x0 : x0 + tw]
            strip[text[:, :tw]] = np.asarray(LINE_COLOR.rgba, dtype=np.uint8)
    return out
