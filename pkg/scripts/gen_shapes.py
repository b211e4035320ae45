"""Generate the bundled topic shape masks (src/motifjournal/data/shapes/).

The original reference icons cannot be redistributed, so each topic gets a
simple synthetic geometric icon drawn here, run through the normal pipeline
(binarize -> crop/recenter/resize -> extreme-point outline -> dilate ->
fill). The pipeline invariants are asserted before anything is written.

Run from the repo root:  python scripts/gen_shapes.py
"""

from __future__ import annotations

import sys
from pathlib import Path

import numpy as np
from scipy import ndimage

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from motifjournal.domain import Topic
from motifjournal.iconproc import build_shape, save_shape_dir

SIZE = 512
YY, XX = np.mgrid[0:SIZE, 0:SIZE]


def disc(cx, cy, r):
    return (XX - cx) ** 2 + (YY - cy) ** 2 <= r * r


def rect(x0, y0, x1, y1):
    return (XX >= x0) & (XX < x1) & (YY >= y0) & (YY < y1)


def capsule(x0, y0, x1, y1, r):
    """All points within distance r of the segment (x0,y0)-(x1,y1)."""
    dx, dy = x1 - x0, y1 - y0
    t = ((XX - x0) * dx + (YY - y0) * dy) / float(dx * dx + dy * dy)
    t = np.clip(t, 0.0, 1.0)
    px, py = x0 + t * dx, y0 + t * dy
    return (XX - px) ** 2 + (YY - py) ** 2 <= r * r


def triangle(p0, p1, p2):
    def half_plane(a, b):
        return (XX - a[0]) * (b[1] - a[1]) - (YY - a[1]) * (b[0] - a[0])

    d0, d1, d2 = half_plane(p0, p1), half_plane(p1, p2), half_plane(p2, p0)
    pos = (d0 >= 0) & (d1 >= 0) & (d2 >= 0)
    neg = (d0 <= 0) & (d1 <= 0) & (d2 <= 0)
    return pos | neg


def person(cx, sh_y, top_hw, base_hw, head_r, head_sink, base_y=430):
    """Head dome over a trapezoid body.

    The head circle is sunk below the shoulder line and the body sides
    flare gently; this keeps every silhouette edge shallow enough for the
    extreme-point outline to stay closed after dilation.
    """
    head = disc(cx, sh_y + head_sink, head_r)
    shoulders = (YY >= sh_y) & (YY < base_y)
    t = (YY - sh_y) / float(base_y - sh_y)
    hw = top_hw + (base_hw - top_hw) * t
    body = shoulders & (np.abs(XX - cx) <= hw)
    return (head & (YY < sh_y)) | body


def icon_exercise():  # dumbbell
    return disc(120, 256, 72) | disc(392, 256, 72) | rect(120, 224, 392, 288)


def icon_family():  # adult and child, overlapping
    adult = person(175, 185, 80, 165, 70, 32)
    child = person(360, 265, 60, 115, 52, 24)
    return adult | child


def icon_food():  # apple with stem
    return disc(256, 300, 140) | rect(244, 120, 268, 190)


def icon_friends():  # two equal figures side by side
    a = person(170, 190, 78, 160, 66, 30)
    b = person(342, 190, 78, 160, 66, 30)
    return a | b


def icon_god():  # cross
    return rect(218, 90, 294, 430) | rect(130, 190, 382, 266)


def icon_health():  # diagonal capsule (pill)
    return capsule(160, 350, 350, 160, 88)


def icon_love():  # heart
    lobes = disc(185, 190, 85) | disc(327, 190, 85)
    point = triangle((103, 215), (409, 215), (256, 430))
    return lobes | point


def icon_recreation():  # pennant flag on a pole
    pole = rect(140, 90, 162, 430)
    flag = triangle((162, 95), (400, 160), (162, 225))
    return pole | flag


def icon_school():  # open book
    left = triangle((70, 140), (250, 170), (70, 390)) | triangle(
        (250, 170), (250, 420), (70, 390)
    )
    right = triangle((442, 140), (262, 170), (442, 390)) | triangle(
        (262, 170), (262, 420), (442, 390)
    )
    spine = rect(246, 168, 266, 422)
    return left | right | spine


def icon_sleep():  # crescent moon
    return disc(240, 256, 160) & ~disc(330, 210, 140)


def icon_work():  # briefcase
    body = rect(90, 190, 422, 410)
    handle = rect(196, 130, 316, 200)
    return body | handle


ICONS = {
    Topic.EXERCISE: icon_exercise,
    Topic.FAMILY: icon_family,
    Topic.FOOD: icon_food,
    Topic.FRIENDS: icon_friends,
    Topic.GOD: icon_god,
    Topic.HEALTH: icon_health,
    Topic.LOVE: icon_love,
    Topic.RECREATION: icon_recreation,
    Topic.SCHOOL: icon_school,
    Topic.SLEEP: icon_sleep,
    Topic.WORK: icon_work,
}

_CROSS4 = np.array([[0, 1, 0], [1, 1, 1], [0, 1, 0]], dtype=bool)


def main() -> None:
    out = (
        Path(__file__).resolve().parent.parent
        / "src"
        / "motifjournal"
        / "data"
        / "shapes"
    )
    shapes = []
    for topic, draw in ICONS.items():
        gray = np.where(draw(), 0, 255).astype(np.uint8)
        shape = build_shape(topic, gray, size=SIZE, dilation_radius=2)

        assert (shape.outline & ~shape.interior).sum() == 0, topic
        _, n = ndimage.label(shape.interior, structure=_CROSS4)
        assert n == 1, f"{topic}: interior has {n} components"
        frac = shape.interior.sum() / (SIZE * SIZE)
        print(f"{topic.value:12s} interior {frac:5.1%} of canvas")
        shapes.append(shape)

    save_shape_dir(out, shapes, dilation_radius=2)
    print(f"wrote {len(shapes)} shapes to {out}")


if __name__ == "__main__":
    main()
