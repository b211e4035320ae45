"""The five procedural visualizers: circle packing, string doll, carpet,
tile, and glass.

Every generator consumes a single Rng stream seeded from the request, so a
given MotifRequest renders bit-identically. All drawing is clipped to the
shape interior.
"""

from __future__ import annotations

import math

import numpy as np
from scipy import ndimage

from ..iconproc import bundled_shapes
from ..render import (
    Canvas,
    Rng,
    composite_over,
    connected_regions,
    fill_circle,
    lighten_darken,
    quad_bezier_points,
    stroke_polyline,
)
from .base import (
    LINE_COLOR,
    DegenerateOutline,
    EmptyColorList,
    Motif,
    MotifRequest,
    ParamSpec,
    StyleSpec,
    new_panel,
    register,
)

_TRIAL_CHUNK = 64


def _require_colors(req: MotifRequest) -> None:
    if not req.colors:
        raise EmptyColorList("motif request has no colors")


def _interior_distance(interior: np.ndarray) -> np.ndarray:
    """Euclidean distance to the nearest non-interior pixel; canvas edges
    count as background so circles cannot spill off-canvas."""
    padded = np.pad(interior, 1, constant_values=False)
    return ndimage.distance_transform_edt(padded)[1:-1, 1:-1]


def circle_packing(req: MotifRequest) -> Motif:
    """Rejection-sampled non-overlapping circles, largest radius first.

    A circle is placed only when it lies fully inside the interior and its
    center distance to every placed circle is >= the sum of radii.
    """
    _require_colors(req)
    rng = Rng(req.seed)
    canvas = new_panel(req.shape)
    interior = req.shape.interior
    size = req.shape.canvas_size

    radii = req.params["radii"]
    counts = req.params["counts"]
    max_trials = req.params["max_trials"]

    flat_interior = np.flatnonzero(interior)
    edt = _interior_distance(interior)
    primitives: list[dict] = []

    placed_x: list[float] = []
    placed_y: list[float] = []
    placed_r: list[float] = []

    for radius, count in zip(radii, counts):
        fits = edt > radius
        for _ in range(count):
            px = np.array(placed_x)
            py = np.array(placed_y)
            pr = np.array(placed_r)
            done = 0
            hit = None
            while done < max_trials and hit is None:
                chunk = min(_TRIAL_CHUNK, max_trials - done)
                idx = np.array(
                    [flat_interior[rng.below(flat_interior.size)] for _ in range(chunk)]
                )
                ys, xs = np.divmod(idx, size)
                ok = fits[ys, xs]
                if placed_r:
                    d2 = (xs[:, None] - px) ** 2 + (ys[:, None] - py) ** 2
                    ok &= (d2 >= (pr + radius) ** 2).all(axis=1)
                winners = np.flatnonzero(ok)
                if winners.size:
                    w = int(winners[0])
                    hit = (int(xs[w]), int(ys[w]))
                done += chunk
            if hit is None:
                continue  # silently skip after max_trials
            cx, cy = hit
            color = rng.choice(req.colors)
            placed_x.append(cx)
            placed_y.append(cy)
            placed_r.append(radius)
            fill_circle(canvas, (cx, cy), radius, color, clip=interior)
            primitives.append(
                {"type": "circle", "cx": cx, "cy": cy, "r": radius, "color": color.hex()}
            )

    return Motif(image=canvas, caption="", style="circle_packing", seed=req.seed,
                 primitives=primitives)


def _bezier_step(p0, p1, ctrl) -> float:
    length = math.dist(p0, ctrl) + math.dist(ctrl, p1)
    if length <= 1.0:
        return 0.5
    return min(0.5, 1.0 / (2.0 * length))


def string_doll(req: MotifRequest) -> Motif:
    """Quadratic bezier strokes between random outline points, each overlaid
    by a quarter-width lighter or darker stroke."""
    _require_colors(req)
    rng = Rng(req.seed)
    canvas = new_panel(req.shape)
    interior = req.shape.interior
    size = req.shape.canvas_size

    boundary = np.argwhere(req.shape.outline)  # (n, 2) as (y, x)
    if boundary.shape[0] < 2:
        raise DegenerateOutline("outline has fewer than 2 pixels")

    n_strokes = req.params["n_strokes"]
    w_min, w_max = req.params["w_min"], req.params["w_max"]
    sigma = req.params["sigma_frac"] * size
    primitives: list[dict] = []

    for _ in range(n_strokes):
        i0 = rng.below(boundary.shape[0])
        i1 = rng.below(boundary.shape[0])
        while i1 == i0:
            i1 = rng.below(boundary.shape[0])
        y0, x0 = (int(v) for v in boundary[i0])
        y1, x1 = (int(v) for v in boundary[i1])
        p0, p1 = (x0, y0), (x1, y1)
        mid = ((x0 + x1) / 2.0, (y0 + y1) / 2.0)
        ctrl = (mid[0] + rng.gauss(0.0, sigma), mid[1] + rng.gauss(0.0, sigma))
        color = rng.choice(req.colors)
        width = rng.uniform(w_min, w_max)
        shade = 0.3 if rng.below(2) == 0 else -0.3

        pts = quad_bezier_points(p0, p1, ctrl, _bezier_step(p0, p1, ctrl))
        stroke_polyline(canvas, pts, width, color, clip=interior)
        overlay_width = max(1.0, math.floor(width / 4.0))
        overlay_color = lighten_darken(color, shade)
        stroke_polyline(canvas, pts, overlay_width, overlay_color, clip=interior)
        primitives.append(
            {
                "type": "stroke",
                "p0": list(p0),
                "p1": list(p1),
                "ctrl": [ctrl[0], ctrl[1]],
                "width": width,
                "overlay_width": overlay_width,
                "color": color.hex(),
                "shade": shade,
            }
        )

    return Motif(image=canvas, caption="", style="string_doll", seed=req.seed,
                 primitives=primitives)


def _cell_edges(size: int, n: int) -> list[int]:
    return [round(i * size / n) for i in range(n + 1)]


def _fill_regions(canvas, regions, rng, colors, origin_flat, row_stride, primitives, cell=None):
    """Paint each region with a seeded color; regions carry local flat
    indices which are translated by origin/stride into canvas coordinates."""
    flat_pixels = canvas.pixels.reshape(-1, 4)
    for region in regions:
        color = rng.choice(colors)
        local_r, local_c = np.divmod(region, row_stride)
        rows = local_r + origin_flat[0]
        cols = local_c + origin_flat[1]
        flat_pixels[rows * canvas.width + cols] = color.rgba
        entry = {"type": "region_fill", "pixels": int(region.size), "color": color.hex()}
        if cell is not None:
            entry["cell"] = list(cell)
        primitives.append(entry)


def carpet(req: MotifRequest) -> Motif:
    """Grid of cells, each with seeded-angle parallel lines; the connected
    regions between lines get seeded colors, the lines a fixed dark color."""
    _require_colors(req)
    rng = Rng(req.seed)
    canvas = new_panel(req.shape)
    interior = req.shape.interior
    size = req.shape.canvas_size

    n = req.params["grid"]
    spacing = req.params["spacing"]
    thickness = req.params["thickness"]
    angles = req.params["angles"]
    edges = _cell_edges(size, n)
    primitives: list[dict] = []

    for r in range(n):
        for c in range(n):
            y0, y1 = edges[r], edges[r + 1]
            x0, x1 = edges[c], edges[c + 1]
            angle = rng.choice(angles)
            ys, xs = np.mgrid[0 : y1 - y0, 0 : x1 - x0]
            if angle == 0:
                d = ys
            elif angle == 90:
                d = xs
            elif angle == 45:
                d = xs + ys
            else:  # 135
                d = xs - ys
            barrier = np.mod(d, spacing) < thickness
            cell_interior = interior[y0:y1, x0:x1]
            primitives.append({"type": "cell", "row": r, "col": c, "angle": int(angle)})

            regions = connected_regions(cell_interior, barrier)
            _fill_regions(
                canvas, regions, rng, req.colors, (y0, x0), x1 - x0, primitives,
                cell=(r, c),
            )
            lines = barrier & cell_interior
            canvas.pixels[y0:y1, x0:x1][lines] = LINE_COLOR.rgba

    return Motif(image=canvas, caption="", style="carpet", seed=req.seed,
                 primitives=primitives)


def tile(req: MotifRequest) -> Motif:
    """One seeded diagonal per grid cell; the diagonals act as barriers and
    the resulting connected regions are filled with seeded colors."""
    _require_colors(req)
    rng = Rng(req.seed)
    canvas = new_panel(req.shape)
    interior = req.shape.interior
    size = req.shape.canvas_size

    n = req.params["grid"]
    p_diag = req.params["p_diag"]
    line_width = req.params["line_width"]
    edges = _cell_edges(size, n)
    primitives: list[dict] = []

    barriers = np.zeros_like(interior)
    for r in range(n):
        for c in range(n):
            y0, y1 = edges[r], edges[r + 1]
            x0, x1 = edges[c], edges[c + 1]
            forward = rng.uniform() < p_diag  # "/" when true
            ys, xs = np.mgrid[0 : y1 - y0, 0 : x1 - x0]
            if forward:
                d = xs + ys - (y1 - y0 - 1)
            else:
                d = xs - ys
            barriers[y0:y1, x0:x1] = (d >= 0) & (d < line_width)
            primitives.append(
                {"type": "cell", "row": r, "col": c, "diag": "/" if forward else "\\"}
            )

    regions = connected_regions(interior, barriers)
    _fill_regions(canvas, regions, rng, req.colors, (0, 0), size, primitives)
    canvas.pixels[barriers & interior] = LINE_COLOR.rgba

    return Motif(image=canvas, caption="", style="tile", seed=req.seed,
                 primitives=primitives)


def _resize_mask(mask: np.ndarray, side: int) -> np.ndarray:
    h, w = mask.shape
    src_y = np.minimum((np.arange(side) + 0.5) * h / side, h - 1).astype(np.int64)
    src_x = np.minimum((np.arange(side) + 0.5) * w / side, w - 1).astype(np.int64)
    return mask[src_y[:, None], src_x[None, :]]


def glass(req: MotifRequest) -> Motif:
    """Translucent icon stamps layered over multiple passes, mimicking
    stained glass. Stamps come from the bundled topic shape set."""
    _require_colors(req)
    rng = Rng(req.seed)
    canvas = new_panel(req.shape)
    interior = req.shape.interior
    size = req.shape.canvas_size

    passes = req.params["passes"]
    per_pass = req.params["icons_per_pass"]
    scale_min, scale_max = req.params["scale_min"], req.params["scale_max"]
    alpha_min, alpha_max = req.params["alpha_min"], req.params["alpha_max"]

    shapes = bundled_shapes()
    topics = sorted(shapes.keys(), key=lambda t: t.value)
    stamps = [shapes[t].interior for t in topics]
    primitives: list[dict] = []

    for _ in range(passes):
        for _ in range(per_pass):
            pick = rng.below(len(stamps))
            side = max(1, round(rng.uniform(scale_min, scale_max) * size))
            side = min(side, size)
            x0 = rng.below(size - side + 1)
            y0 = rng.below(size - side + 1)
            color = rng.choice(req.colors)
            alpha = alpha_min + rng.below(alpha_max - alpha_min + 1)

            stamp = _resize_mask(stamps[pick], side)
            target = np.zeros_like(interior)
            target[y0 : y0 + side, x0 : x0 + side] = stamp
            region = np.flatnonzero(target & interior)
            composite_over(canvas, (*color.rgb, alpha), region)
            primitives.append(
                {
                    "type": "icon",
                    "topic": topics[pick].value,
                    "side": side,
                    "x": x0,
                    "y": y0,
                    "color": color.hex(),
                    "alpha": alpha,
                }
            )

    return Motif(image=canvas, caption="", style="glass", seed=req.seed,
                 primitives=primitives)


_CIRCLE_PARAMS = (
    ParamSpec("radii", "int_list", [24, 16, 10, 6], min=1, max=256),
    ParamSpec("counts", "int_list", [20, 40, 80, 160], min=0, max=10000),
    ParamSpec("max_trials", "int", 500, min=1, max=100000),
)
_STRING_PARAMS = (
    ParamSpec("n_strokes", "int", 60, min=0, max=1000),
    ParamSpec("w_min", "float", 4.0, min=1.0, max=64.0),
    ParamSpec("w_max", "float", 10.0, min=1.0, max=64.0),
    ParamSpec("sigma_frac", "float", 0.20, min=0.0, max=1.0),
)

register(StyleSpec("circle_packing", _CIRCLE_PARAMS, circle_packing, "emotions", "topic"))
register(StyleSpec("string_doll", _STRING_PARAMS, string_doll, "emotions", "topic"))
register(
    StyleSpec(
        "carpet",
        (
            ParamSpec("grid", "int", 4, min=1, max=64),
            ParamSpec("spacing", "int", 12, min=2, max=256),
            ParamSpec("thickness", "int", 2, min=1, max=32),
            ParamSpec("angles", "int_list", [0, 45, 90, 135], choices=(0, 45, 90, 135)),
        ),
        carpet,
        "emotions",
        "topic",
    )
)
register(
    StyleSpec(
        "tile",
        (
            ParamSpec("grid", "int", 8, min=1, max=64),
            ParamSpec("p_diag", "float", 0.5, min=0.0, max=1.0),
            ParamSpec("line_width", "int", 2, min=1, max=32),
        ),
        tile,
        "emotions",
        "topic",
    )
)
register(
    StyleSpec(
        "glass",
        (
            ParamSpec("passes", "int", 3, min=0, max=20),
            ParamSpec("icons_per_pass", "int", 12, min=0, max=200),
            ParamSpec("scale_min", "float", 0.15, min=0.01, max=1.0),
            ParamSpec("scale_max", "float", 0.45, min=0.01, max=1.0),
            ParamSpec("alpha_min", "int", 80, min=0, max=255),
            ParamSpec("alpha_max", "int", 180, min=0, max=255),
        ),
        glass,
        "emotions",
        "topic",
    )
)
