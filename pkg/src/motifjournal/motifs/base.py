"""Shared motif types, style parameter schemas, and the style registry."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable

from ..domain import Rgb
from ..iconproc import ShapeMask
from ..render import Canvas

BACKGROUND = Rgb(255, 255, 255)
OUTLINE_COLOR = Rgb(64, 64, 64)
LINE_COLOR = Rgb(32, 32, 32)


class EmptyColorList(ValueError):
    pass


class DegenerateOutline(ValueError):
    pass


class UnknownStyle(KeyError):
    pass


class ParamError(ValueError):
    """Invalid style parameter; names the offending field."""

    def __init__(self, field_name: str, message: str):
        super().__init__(f"{field_name}: {message}")
        self.field = field_name


@dataclass(frozen=True)
class MotifRequest:
    """Everything a style generator needs for one panel."""

    shape: ShapeMask
    colors: tuple[Rgb, ...]
    params: dict
    seed: int

    @property
    def canvas_size(self) -> int:
        return self.shape.canvas_size


@dataclass
class Motif:
    """One rendered panel plus its caption and primitive log."""

    image: Canvas
    caption: str
    style: str
    seed: int
    primitives: list[dict] = field(default_factory=list)


@dataclass(frozen=True)
class ParamSpec:
    name: str
    type: str  # "int" | "float" | "int_list"
    default: object
    min: float | None = None
    max: float | None = None
    choices: tuple[int, ...] | None = None  # allowed values for list items

    def to_json(self) -> dict:
        out: dict = {"name": self.name, "type": self.type, "default": self.default}
        if self.min is not None:
            out["min"] = self.min
        if self.max is not None:
            out["max"] = self.max
        if self.choices is not None:
            out["choices"] = list(self.choices)
        return out


@dataclass(frozen=True)
class StyleSpec:
    id: str
    params: tuple[ParamSpec, ...]
    generate: Callable[[MotifRequest], Motif]
    color_mode: str  # "emotions" | "valence"
    mask_mode: str  # "topic" | "square"
    per_entry: bool = False  # one panel for the whole entry (b7)

    def schema_json(self) -> dict:
        return {"id": self.id, "params": [p.to_json() for p in self.params]}


_REGISTRY: dict[str, StyleSpec] = {}


def register(spec: StyleSpec) -> StyleSpec:
    _REGISTRY[spec.id] = spec
    return spec


def get_style(style_id: str) -> StyleSpec:
    try:
        return _REGISTRY[style_id]
    except KeyError:
        raise UnknownStyle(style_id) from None


def all_styles() -> list[StyleSpec]:
    return list(_REGISTRY.values())


def _check_scalar(spec: ParamSpec, value) -> float | int:
    if spec.type == "int":
        if isinstance(value, bool) or not isinstance(value, int):
            if isinstance(value, float) and value.is_integer():
                value = int(value)
            else:
                raise ParamError(spec.name, f"expected integer, got {value!r}")
    elif spec.type == "float":
        if isinstance(value, bool) or not isinstance(value, (int, float)):
            raise ParamError(spec.name, f"expected number, got {value!r}")
        value = float(value)
    if spec.min is not None and value < spec.min:
        raise ParamError(spec.name, f"{value} below minimum {spec.min}")
    if spec.max is not None and value > spec.max:
        raise ParamError(spec.name, f"{value} above maximum {spec.max}")
    return value


def validate_params(style: StyleSpec, overrides: dict | None) -> dict:
    """Merge user overrides over the style defaults, validating every field."""
    overrides = dict(overrides or {})
    known = {p.name for p in style.params}
    for key in overrides:
        if key not in known:
            raise ParamError(key, f"unknown parameter for style {style.id!r}")

    merged: dict = {}
    for spec in style.params:
        value = overrides.get(spec.name, spec.default)
        if spec.type == "int_list":
            if not isinstance(value, (list, tuple)) or not value:
                raise ParamError(spec.name, "expected a non-empty list of integers")
            items = []
            for item in value:
                if isinstance(item, bool) or not isinstance(item, int):
                    raise ParamError(spec.name, f"list item {item!r} is not an integer")
                if spec.choices is not None and item not in spec.choices:
                    raise ParamError(
                        spec.name, f"list item {item} not in {list(spec.choices)}"
                    )
                if spec.min is not None and item < spec.min:
                    raise ParamError(spec.name, f"list item {item} below {spec.min}")
                if spec.max is not None and item > spec.max:
                    raise ParamError(spec.name, f"list item {item} above {spec.max}")
                items.append(item)
            merged[spec.name] = list(items)
        else:
            merged[spec.name] = _check_scalar(spec, value)

    _cross_checks(style.id, merged)
    return merged


def _cross_checks(style_id: str, params: dict) -> None:
    if style_id in ("circle_packing", "b1"):
        radii = params["radii"]
        if any(a <= b for a, b in zip(radii, radii[1:])):
            raise ParamError("radii", "must be strictly descending")
        if len(params["counts"]) != len(radii):
            raise ParamError("counts", "must have the same length as radii")
    elif style_id in ("string_doll", "b2"):
        if params["w_min"] > params["w_max"]:
            raise ParamError("w_min", "must not exceed w_max")
    elif style_id == "glass":
        if params["scale_min"] > params["scale_max"]:
            raise ParamError("scale_min", "must not exceed scale_max")
        if params["alpha_min"] > params["alpha_max"]:
            raise ParamError("alpha_min", "must not exceed alpha_max")


def new_panel(shape: ShapeMask) -> Canvas:
    """White panel with the shape outline pre-drawn in dark gray."""
    canvas = Canvas.filled(shape.canvas_size, shape.canvas_size, BACKGROUND)
    canvas.pixels[shape.outline] = OUTLINE_COLOR.rgba
    return canvas
