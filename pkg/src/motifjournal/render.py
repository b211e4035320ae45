"""Deterministic seeded 2D raster primitives shared by all visualizers.

Masks are 2-D numpy bool arrays (row-major, True = foreground). The canvas
stores straight (non-premultiplied) 8-bit RGBA. All randomness comes from
`Rng`, a fixed splitmix64-seeded xoshiro256** generator that is bit-exact
across platforms, so any op sequence with a fixed seed reproduces exactly.
"""

from __future__ import annotations

import math
import struct
import zlib
from dataclasses import dataclass
from typing import Sequence

import numpy as np
from scipy import ndimage

_MASK64 = (1 << 64) - 1

# 4-connectivity structuring element for region labelling.
_CROSS4 = np.array([[0, 1, 0], [1, 1, 1], [0, 1, 0]], dtype=bool)


class BadStep(ValueError):
    """Raised for bezier step sizes outside (0, 0.5]."""


def _splitmix64(state: int) -> tuple[int, int]:
    state = (state + 0x9E3779B97F4A7C15) & _MASK64
    z = state
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
    return state, z ^ (z >> 31)


def _rotl(x: int, k: int) -> int:
    return ((x << k) | (x >> (64 - k))) & _MASK64


class Rng:
    """xoshiro256** seeded via splitmix64. One stream per generation job."""

    __slots__ = ("_s0", "_s1", "_s2", "_s3")

    def __init__(self, seed: int):
        state = seed & _MASK64
        state, self._s0 = _splitmix64(state)
        state, self._s1 = _splitmix64(state)
        state, self._s2 = _splitmix64(state)
        state, self._s3 = _splitmix64(state)

    def next_u64(self) -> int:
        s0, s1, s2, s3 = self._s0, self._s1, self._s2, self._s3
        result = (_rotl((s1 * 5) & _MASK64, 7) * 9) & _MASK64
        t = (s1 << 17) & _MASK64
        s2 ^= s0
        s3 ^= s1
        s1 ^= s2
        s0 ^= s3
        s2 ^= t
        self._s0, self._s1, self._s2 = s0, s1, s2
        self._s3 = _rotl(s3, 45)
        return result

    def uniform(self, lo: float = 0.0, hi: float = 1.0) -> float:
        """Uniform float in [lo, hi) with 53-bit resolution."""
        u = (self.next_u64() >> 11) * (2.0**-53)
        return lo + (hi - lo) * u

    def below(self, n: int) -> int:
        """Uniform int in [0, n). Modulo bias is negligible for n << 2^64."""
        if n <= 0:
            raise ValueError("below() requires n >= 1")
        return self.next_u64() % n

    def choice(self, seq: Sequence):
        return seq[self.below(len(seq))]

    def gauss(self, mu: float = 0.0, sigma: float = 1.0) -> float:
        """Box-Muller; consumes two uniforms per call (no cached spare)."""
        u1 = 1.0 - self.uniform()  # (0, 1], avoids log(0)
        u2 = self.uniform()
        return mu + sigma * math.sqrt(-2.0 * math.log(u1)) * math.cos(2.0 * math.pi * u2)

    def spawn(self) -> "Rng":
        """Derive an independent child stream (e.g. one per motif panel)."""
        return Rng(self.next_u64())


@dataclass
class Canvas:
    """Row-major RGBA raster, straight alpha. Single-writer per instance."""

    pixels: np.ndarray  # uint8, shape (height, width, 4)

    @classmethod
    def filled(cls, width: int, height: int, color=(255, 255, 255, 255)) -> "Canvas":
        if width <= 0 or height <= 0:
            raise ValueError("canvas dimensions must be positive")
        px = np.empty((height, width, 4), dtype=np.uint8)
        px[:, :] = np.asarray(_rgba(color), dtype=np.uint8)
        return cls(px)

    @property
    def width(self) -> int:
        return self.pixels.shape[1]

    @property
    def height(self) -> int:
        return self.pixels.shape[0]

    def copy(self) -> "Canvas":
        return Canvas(self.pixels.copy())


def _rgba(color) -> tuple[int, int, int, int]:
    """Accept Rgb-like objects or 3/4-tuples."""
    if hasattr(color, "rgba"):
        return color.rgba
    t = tuple(color)
    if len(t) == 3:
        return (*t, 255)
    return t


def quad_bezier_points(p0, p1, ctrl, step: float) -> list[tuple[float, float]]:
    """Evaluate the quadratic bezier at t = 0, step, 2*step, ..., 1.

    The endpoint t=1 is always included even when 1/step is not integral.
    """
    if not 0.0 < step <= 0.5:
        raise BadStep(f"step must be in (0, 0.5], got {step}")
    x0, y0 = p0
    x1, y1 = p1
    cx, cy = ctrl
    pts = []
    n = int(math.floor(1.0 / step + 1e-9))
    for k in range(n + 1):
        t = min(k * step, 1.0)
        a = (1.0 - t) ** 2
        b = 2.0 * (1.0 - t) * t
        c = t * t
        pts.append((a * x0 + b * cx + c * x1, a * y0 + b * cy + c * y1))
    if pts[-1] != (x1, y1):
        pts.append((float(x1), float(y1)))
    return pts


def _disc_offsets(radius: float) -> np.ndarray:
    """Integer (dy, dx) offsets with dy^2 + dx^2 <= radius^2."""
    r = int(math.floor(radius))
    if r < 0:
        return np.zeros((1, 2), dtype=np.int64)
    ys, xs = np.mgrid[-r : r + 1, -r : r + 1]
    keep = ys * ys + xs * xs <= radius * radius
    return np.stack([ys[keep], xs[keep]], axis=1)


def _paint(canvas: Canvas, rows: np.ndarray, cols: np.ndarray, color, clip) -> None:
    """Set color at the given pixel coordinates, honoring bounds and clip."""
    h, w = canvas.height, canvas.width
    ok = (rows >= 0) & (rows < h) & (cols >= 0) & (cols < w)
    rows, cols = rows[ok], cols[ok]
    if clip is not None:
        inside = clip[rows, cols]
        rows, cols = rows[inside], cols[inside]
    canvas.pixels[rows, cols] = np.asarray(_rgba(color), dtype=np.uint8)


def stroke_polyline(canvas: Canvas, pts, width: float, color, clip=None) -> Canvas:
    """Stamp each point as a filled disc of the given diameter, clipped."""
    if width < 1:
        raise ValueError("stroke width must be >= 1")
    if not pts:
        return canvas
    ipts = np.unique(np.rint(np.asarray(pts, dtype=float)).astype(np.int64), axis=0)
    offsets = _disc_offsets(width / 2.0)
    # pts are (x, y); offsets are (dy, dx)
    rows = (ipts[:, 1][:, None] + offsets[None, :, 0]).ravel()
    cols = (ipts[:, 0][:, None] + offsets[None, :, 1]).ravel()
    _paint(canvas, rows, cols, color, clip)
    return canvas


def fill_circle(canvas: Canvas, center, radius: float, color, clip=None) -> Canvas:
    """Set pixels with center distance <= radius, intersected with clip."""
    if radius < 1:
        raise ValueError("radius must be >= 1")
    cx, cy = center
    offsets = _disc_offsets(radius)
    rows = offsets[:, 0] + int(round(cy))
    cols = offsets[:, 1] + int(round(cx))
    _paint(canvas, rows, cols, color, clip)
    return canvas


def connected_regions(mask: np.ndarray, barriers: np.ndarray) -> list[np.ndarray]:
    """4-connected components of (mask AND NOT barriers) as flat index arrays.

    Regions are ordered by their smallest row-major pixel index; indices
    within each region are ascending.
    """
    if mask.shape != barriers.shape:
        raise ValueError("mask and barriers must have the same shape")
    free = mask & ~barriers
    labels, n = ndimage.label(free, structure=_CROSS4)
    if n == 0:
        return []
    flat = labels.ravel()
    order = np.argsort(flat, kind="stable")
    counts = np.bincount(flat, minlength=n + 1)
    groups = np.split(order, np.cumsum(counts)[:-1])
    regions = [g for g in groups[1:] if g.size]
    regions.sort(key=lambda g: int(g[0]))
    return regions


def composite_over(canvas: Canvas, src_color, region: np.ndarray) -> Canvas:
    """Source-over blend of one RGBA color onto a flat-index pixel set.

    Channel rule (round half up): out = (src*a + dst*(255-a) + round) / 255.
    Alpha accumulates as a_out = a_src + a_dst*(255-a_src)/255.
    """
    r, g, b, a = _rgba(src_color)
    if region.size == 0:
        return canvas
    h, w = canvas.height, canvas.width
    flat = canvas.pixels.reshape(h * w, 4)
    dst = flat[region].astype(np.uint32)
    src = np.array([r, g, b], dtype=np.uint32)
    num = src[None, :] * a + dst[:, :3] * (255 - a)
    out = np.empty_like(dst)
    out[:, :3] = (2 * num + 255) // 510
    anum = a * 255 + dst[:, 3] * (255 - a)
    out[:, 3] = (2 * anum + 255) // 510
    flat[region] = out.astype(np.uint8)
    return canvas


def lighten_darken(color, factor: float):
    """Blend toward white (factor > 0) or black (factor < 0), clamped.

    Returns an (r, g, b, a) tuple; alpha is preserved.
    """
    if not -1.0 <= factor <= 1.0:
        raise ValueError("factor must be in [-1, 1]")
    r, g, b, a = _rgba(color)
    target = 255.0 if factor > 0 else 0.0
    f = abs(factor)

    def blend(c: int) -> int:
        v = int(math.floor(c + (target - c) * f + 0.5))
        return max(0, min(255, v))

    return (blend(r), blend(g), blend(b), a)


def encode_png(canvas: Canvas) -> bytes:
    """Minimal 8-bit RGBA PNG encoder; decode(encode(c)) is pixel-identical."""
    h, w = canvas.height, canvas.width
    raw = bytearray()
    px = canvas.pixels
    for y in range(h):
        raw.append(0)  # filter type None
        raw.extend(px[y].tobytes())

    def chunk(tag: bytes, data: bytes) -> bytes:
        return (
            struct.pack(">I", len(data))
            + tag
            + data
            + struct.pack(">I", zlib.crc32(tag + data) & 0xFFFFFFFF)
        )

    header = struct.pack(">2I5B", w, h, 8, 6, 0, 0, 0)  # color type 6 = RGBA
    return (
        b"\x89PNG\r\n\x1a\n"
        + chunk(b"IHDR", header)
        + chunk(b"IDAT", zlib.compress(bytes(raw), 9))
        + chunk(b"IEND", b"")
    )


def encode_ppm(canvas: Canvas) -> bytes:
    """P6 PPM (alpha dropped), for debugging."""
    h, w = canvas.height, canvas.width
    return b"P6\n%d %d\n255\n" % (w, h) + canvas.pixels[:, :, :3].tobytes()
