"""Icon-to-shape pipeline: binarize, crop/recenter/resize, extreme-point
outline, dilation, interior fill, plus PBM persistence for shape masks.

Masks are 2-D numpy bool arrays (True = foreground). Icons are assumed
dark-on-light.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import lru_cache
from importlib import resources
from pathlib import Path

import numpy as np
from PIL import Image
from scipy import ndimage

from .domain import Topic

DEFAULT_CANVAS_SIZE = 512
DEFAULT_DILATION_RADIUS = 2
MARGIN_FACTOR = 0.9

# Border flood-fill that reaches at least this fraction of non-outline
# pixels means the outline does not enclose anything useful.
OPEN_OUTLINE_FRACTION = 0.98

_CROSS4 = np.array([[0, 1, 0], [1, 1, 1], [0, 1, 0]], dtype=bool)


class EmptyImage(ValueError):
    pass


class EmptyMask(ValueError):
    pass


class OpenOutline(ValueError):
    pass


class StageError(RuntimeError):
    """A pipeline stage failed; message is '<stage>: <ErrorType>'."""

    def __init__(self, stage: str, cause: Exception):
        super().__init__(f"{stage}: {type(cause).__name__}")
        self.stage = stage
        self.cause = cause


@dataclass(frozen=True)
class ShapeMask:
    """Outline and filled-interior masks for one topic icon.

    Invariants: outline is a subset of interior, and interior is a single
    4-connected component. topic is None for the synthetic square mask the
    baselines use.
    """

    topic: Topic | None
    outline: np.ndarray
    interior: np.ndarray
    canvas_size: int = DEFAULT_CANVAS_SIZE


def binarize(gray: np.ndarray, threshold: int) -> np.ndarray:
    """Foreground iff intensity < threshold (icons are dark-on-light)."""
    gray = np.asarray(gray)
    if gray.size == 0:
        raise EmptyImage("cannot binarize an empty image")
    return gray < threshold


def crop_recenter_resize(mask: np.ndarray, size: int) -> np.ndarray:
    """Scale the foreground's bounding box into a centered box of side
    floor(0.9 * size), aspect preserved, nearest-neighbor, on a size x size
    canvas.
    """
    rows = np.flatnonzero(mask.any(axis=1))
    cols = np.flatnonzero(mask.any(axis=0))
    if rows.size == 0:
        raise EmptyMask("mask has no foreground")
    y0, y1 = int(rows[0]), int(rows[-1])
    x0, x1 = int(cols[0]), int(cols[-1])
    box = mask[y0 : y1 + 1, x0 : x1 + 1]
    bh, bw = box.shape

    target = int(size * MARGIN_FACTOR)
    scale = target / max(bh, bw)
    oh = max(1, int(round(bh * scale)))
    ow = max(1, int(round(bw * scale)))

    src_y = np.minimum((np.arange(oh) + 0.5) * bh / oh, bh - 1).astype(np.int64)
    src_x = np.minimum((np.arange(ow) + 0.5) * bw / ow, bw - 1).astype(np.int64)
    resized = box[src_y[:, None], src_x[None, :]]

    out = np.zeros((size, size), dtype=bool)
    oy = (size - oh) // 2
    ox = (size - ow) // 2
    out[oy : oy + oh, ox : ox + ow] = resized
    return out


def extreme_point_outline(mask: np.ndarray) -> np.ndarray:
    """Keep only the first/last foreground pixel of every row and column."""
    if not mask.any():
        raise EmptyMask("mask has no foreground")
    out = np.zeros_like(mask)
    h, w = mask.shape

    row_has = mask.any(axis=1)
    ridx = np.flatnonzero(row_has)
    first = mask.argmax(axis=1)
    last = w - 1 - mask[:, ::-1].argmax(axis=1)
    out[ridx, first[ridx]] = True
    out[ridx, last[ridx]] = True

    col_has = mask.any(axis=0)
    cidx = np.flatnonzero(col_has)
    top = mask.argmax(axis=0)
    bottom = h - 1 - mask[::-1, :].argmax(axis=0)
    out[top[cidx], cidx] = True
    out[bottom[cidx], cidx] = True
    return out


def dilate(mask: np.ndarray, radius: int) -> np.ndarray:
    """Chebyshev dilation: square structuring element of side 2*radius+1."""
    if radius < 1:
        raise ValueError("dilation radius must be >= 1")
    if not mask.any():
        return mask.copy()
    footprint = np.ones((2 * radius + 1, 2 * radius + 1), dtype=bool)
    return ndimage.binary_dilation(mask, structure=footprint)


def fill_interior(outline: np.ndarray) -> np.ndarray:
    """Fill the region bounded by the outline.

    Background is flood-filled (4-connected) from the canvas border; the
    interior is everything else, unioned with the outline. Raises
    OpenOutline when the flood reaches >= 98% of non-outline pixels.
    """
    non_outline = ~outline
    labels, _ = ndimage.label(non_outline, structure=_CROSS4)
    border_labels = np.unique(
        np.concatenate([labels[0, :], labels[-1, :], labels[:, 0], labels[:, -1]])
    )
    border_labels = border_labels[border_labels != 0]
    reached = np.isin(labels, border_labels)

    total = int(non_outline.sum())
    if total > 0 and int(reached.sum()) >= OPEN_OUTLINE_FRACTION * total:
        raise OpenOutline("outline does not enclose a region")
    return outline | (non_outline & ~reached)


def build_shape(
    topic: Topic | None,
    icon: np.ndarray,
    size: int = DEFAULT_CANVAS_SIZE,
    dilation_radius: int = DEFAULT_DILATION_RADIUS,
    threshold: int = 128,
) -> ShapeMask:
    """Run the full pipeline on a grayscale icon raster.

    Stage failures re-raise as StageError annotated with the stage name.
    """
    stages = [
        ("binarize", lambda _: binarize(icon, threshold)),
        ("crop", lambda m: crop_recenter_resize(m, size)),
        ("outline", extreme_point_outline),
        ("dilate", lambda m: dilate(m, dilation_radius)),
        ("fill", fill_interior),
    ]
    value: np.ndarray | None = None
    outline: np.ndarray | None = None
    for name, fn in stages:
        try:
            value = fn(value)
        except Exception as exc:
            raise StageError(name, exc) from exc
        if name == "dilate":
            outline = value
    assert outline is not None and value is not None
    return ShapeMask(topic=topic, outline=outline, interior=value, canvas_size=size)


def load_icon_gray(path: str | Path) -> np.ndarray:
    """Decode a PNG icon to 8-bit grayscale.

    RGB converts via integer luma (r*299 + g*587 + b*114) / 1000; alpha is
    composited over white first so transparent backgrounds read as light.
    """
    with Image.open(path) as im:
        mode = im.mode
        if mode == "L":
            return np.asarray(im, dtype=np.uint8)
        if mode == "P":
            im = im.convert("RGBA")
            mode = "RGBA"
        arr = np.asarray(im.convert("RGBA"), dtype=np.uint32)
    rgb = arr[:, :, :3]
    a = arr[:, :, 3:4]
    rgb = (rgb * a + 255 * (255 - a)) // 255
    luma = (rgb[:, :, 0] * 299 + rgb[:, :, 1] * 587 + rgb[:, :, 2] * 114) // 1000
    return luma.astype(np.uint8)


def write_pbm(path: str | Path, mask: np.ndarray) -> None:
    """Binary PBM (P4); foreground bits are 1."""
    h, w = mask.shape
    packed = np.packbits(mask.astype(np.uint8), axis=1)
    with open(path, "wb") as f:
        f.write(b"P4\n%d %d\n" % (w, h))
        f.write(packed.tobytes())


def read_pbm(path: str | Path) -> np.ndarray:
    with open(path, "rb") as f:
        data = f.read()
    if not data.startswith(b"P4"):
        raise ValueError(f"{path}: not a P4 PBM file")
    # header: magic, width, height, single whitespace, then packed bits
    tokens: list[bytes] = []
    i = 2
    while len(tokens) < 2:
        while i < len(data) and data[i : i + 1].isspace():
            i += 1
        if data[i : i + 1] == b"#":
            while i < len(data) and data[i] != 0x0A:
                i += 1
            continue
        start = i
        while i < len(data) and not data[i : i + 1].isspace():
            i += 1
        tokens.append(data[start:i])
    i += 1  # single whitespace after height
    w, h = int(tokens[0]), int(tokens[1])
    row_bytes = (w + 7) // 8
    packed = np.frombuffer(data[i : i + h * row_bytes], dtype=np.uint8)
    bits = np.unpackbits(packed.reshape(h, row_bytes), axis=1)[:, :w]
    return bits.astype(bool)


def save_shape_dir(
    directory: str | Path, shapes: list[ShapeMask], dilation_radius: int
) -> None:
    """Write <topic>.outline.pbm / <topic>.interior.pbm pairs plus manifest."""
    directory = Path(directory)
    directory.mkdir(parents=True, exist_ok=True)
    topics = []
    canvas_size = None
    for shape in shapes:
        write_pbm(directory / f"{shape.topic.value}.outline.pbm", shape.outline)
        write_pbm(directory / f"{shape.topic.value}.interior.pbm", shape.interior)
        topics.append(shape.topic.value)
        canvas_size = shape.canvas_size
    manifest = {
        "canvas_size": canvas_size,
        "dilation_radius": dilation_radius,
        "topics": sorted(topics),
    }
    with open(directory / "manifest.json", "w", encoding="utf-8") as f:
        json.dump(manifest, f, indent=2, sort_keys=True)
        f.write("\n")


def load_shape_dir(directory: str | Path) -> dict[Topic, ShapeMask]:
    """Load every shape listed in the directory manifest."""
    directory = Path(directory)
    with open(directory / "manifest.json", encoding="utf-8") as f:
        manifest = json.load(f)
    shapes: dict[Topic, ShapeMask] = {}
    for name in manifest["topics"]:
        topic = Topic(name)
        outline = read_pbm(directory / f"{name}.outline.pbm")
        interior = read_pbm(directory / f"{name}.interior.pbm")
        shapes[topic] = ShapeMask(
            topic=topic,
            outline=outline,
            interior=interior,
            canvas_size=manifest["canvas_size"],
        )
    return shapes


@lru_cache(maxsize=1)
def bundled_shapes_dir() -> Path:
    return Path(str(resources.files("motifjournal") / "data" / "shapes"))


@lru_cache(maxsize=1)
def bundled_shapes() -> dict[Topic, ShapeMask]:
    """The 11 pre-processed topic shapes shipped with the package."""
    return load_shape_dir(bundled_shapes_dir())
