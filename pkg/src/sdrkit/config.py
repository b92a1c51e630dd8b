"""Declarative JSON pipeline configuration.

A config names one encoder (a leaf or a "multi" of named parts), binds it to
CSV columns, and optionally picks an output format and a distance score for
evaluation runs.  Unknown keys anywhere are hard errors: a silently ignored
typo would corrupt every encoding downstream.

Top level::

    {
      "encoder":       { ... encoder spec ... },
      "field":         "temp"            (leaf encoders; geospatial takes
                                          ["x","y"] or ["lat","lon"])
      "speed_field":   "speed",          (optional; geospatial topw)
      "output_format": "dense",          (dense | sparse | sparse-n)
      "csv":           {"delimiter": ","},
      "distance":      "absolute"        (evaluate only; see below)
    }

Distances: "absolute", "discrete", "chebyshev",
{"name": "circular", "period": 7}, or {"expression": "abs(a - b)"} -- the
expression sees ``a``, ``b``, ``abs``/``min``/``max`` and the ``math``
module, and runs with Python semantics, so treat config files as code.
"""

from __future__ import annotations

import datetime as _dt
import math
from dataclasses import dataclass, field
from typing import Callable, Mapping

from .categories import CategoryEncoder
from .composite import DatetimeEncoder, MultiEncoder
from .errors import ConfigError, Finding, InputError
from .geospatial import GeospatialEncoder, GridCoordinate, gps_to_grid
from .quality import (
    absolute_difference,
    chebyshev_distance,
    circular_distance,
    discrete_distance,
)
from .scalars import CyclicEncoder, DeltaEncoder, ScalarEncoder, UnboundedScalarEncoder
from .sdr import SDR

OUTPUT_FORMATS = ("dense", "sparse", "sparse-n")
_FORMAT_ALIASES = {"self-describing-sparse": "sparse-n"}


def _check_keys(obj: Mapping, required: set[str], optional: set[str], context: str) -> None:
    if not isinstance(obj, Mapping):
        raise ConfigError(f"{context}: expected an object, got {type(obj).__name__}")
    keys = set(obj)
    unknown = keys - required - optional
    if unknown:
        raise ConfigError(f"{context}: unknown key(s) {sorted(unknown)}")
    missing = required - keys
    if missing:
        raise ConfigError(f"{context}: missing required key(s) {sorted(missing)}")


def _int(obj: Mapping, key: str, context: str) -> int:
    v = obj[key]
    if not isinstance(v, int) or isinstance(v, bool):
        raise ConfigError(f"{context}: key {key!r} must be an integer, got {v!r}")
    return v


def _num(obj: Mapping, key: str, context: str) -> float:
    v = obj[key]
    if isinstance(v, bool) or not isinstance(v, (int, float)) or not math.isfinite(v):
        raise ConfigError(f"{context}: key {key!r} must be a finite number, got {v!r}")
    return float(v)


def _str(obj: Mapping, key: str, context: str) -> str:
    v = obj[key]
    if not isinstance(v, str):
        raise ConfigError(f"{context}: key {key!r} must be a string, got {v!r}")
    return v


# --- value converters: CSV text -> encoder input ---------------------------

def _parse_float(text: str, column: str) -> float:
    try:
        return float(text)
    except ValueError:
        raise InputError(f"column {column!r}: cannot parse {text!r} as a number") from None


def _parse_int(text: str, column: str) -> int:
    try:
        return int(text)
    except ValueError:
        raise InputError(
            f"column {column!r}: cannot parse {text!r} as an integer grid index"
        ) from None


def _parse_datetime(text: str, column: str) -> _dt.datetime:
    try:
        return _dt.datetime.fromisoformat(text)
    except ValueError:
        raise InputError(
            f"column {column!r}: cannot parse {text!r} as an ISO timestamp"
        ) from None


@dataclass
class BoundEncoder:
    """One encoder plus its CSV column binding."""

    name: str
    encoder: object
    columns: tuple[str, ...]
    kind: str  # "number" | "text" | "datetime" | "grid" | "latlon"
    speed_column: str | None = None
    cell_size: float | None = None

    def value_from_row(self, row: Mapping[str, str]):
        """Convert this binding's column(s) of one CSV row into the encoder
        input value (raises InputError naming the column)."""
        if self.kind == "number":
            return _parse_float(row[self.columns[0]], self.columns[0])
        if self.kind == "text":
            return row[self.columns[0]]
        if self.kind == "datetime":
            return _parse_datetime(row[self.columns[0]], self.columns[0])
        if self.kind == "grid":
            cx, cy = self.columns
            coord = GridCoordinate(_parse_int(row[cx], cx), _parse_int(row[cy], cy))
        else:  # latlon
            clat, clon = self.columns
            coord = gps_to_grid(
                _parse_float(row[clat], clat),
                _parse_float(row[clon], clon),
                self.cell_size,
            )
        if self.speed_column is not None:
            speed = _parse_float(row[self.speed_column], self.speed_column)
            return (coord, speed)
        return coord

    @property
    def all_columns(self) -> tuple[str, ...]:
        if self.speed_column is not None:
            return self.columns + (self.speed_column,)
        return self.columns


class SpeedAdaptiveGeo:
    """Record-value adapter: encodes (coordinate, speed) pairs through a
    top-w geospatial encoder with the speed-adapted radius."""

    def __init__(self, inner: GeospatialEncoder):
        self.inner = inner
        self.warnings = inner.warnings

    @property
    def n(self) -> int:
        return self.inner.n

    @property
    def w(self) -> int:
        return self.inner.w

    def encode(self, value) -> SDR:
        coord, speed = value
        return self.inner.encode(coord, speed)


@dataclass
class PipelineConfig:
    bound: list[BoundEncoder]
    multi: MultiEncoder
    output_format: str
    delimiter: str
    distance: Callable | None
    distance_spec: object
    encoder_spec: dict
    warnings: list[Finding] = field(default_factory=list)

    @property
    def referenced_columns(self) -> list[str]:
        cols: list[str] = []
        for b in self.bound:
            cols.extend(b.all_columns)
        return cols

    def record_from_row(self, row: Mapping[str, str]) -> dict:
        return {b.name: b.value_from_row(row) for b in self.bound}

    def encode_row(self, row: Mapping[str, str]) -> SDR:
        return self.multi.encode(self.record_from_row(row))


# --- leaf encoder builders --------------------------------------------------

def _build_scalar(spec: Mapping, context: str):
    _check_keys(spec, {"type", "min", "max", "n", "w"}, set(), context)
    return ScalarEncoder(
        _num(spec, "min", context), _num(spec, "max", context),
        _int(spec, "n", context), _int(spec, "w", context),
    ), "number"


def _build_cyclic(spec: Mapping, context: str):
    _check_keys(spec, {"type", "period", "n", "w"}, set(), context)
    return CyclicEncoder(
        _num(spec, "period", context), _int(spec, "n", context), _int(spec, "w", context)
    ), "number"


def _build_delta(spec: Mapping, context: str):
    _check_keys(spec, {"type", "min", "max", "n", "w"}, set(), context)
    inner = ScalarEncoder(
        _num(spec, "min", context), _num(spec, "max", context),
        _int(spec, "n", context), _int(spec, "w", context),
    )
    return DeltaEncoder(inner), "number"


def _build_unbounded(spec: Mapping, context: str):
    _check_keys(spec, {"type", "resolution", "n", "w"}, {"seed"}, context)
    seed = _int(spec, "seed", context) if "seed" in spec else 0
    return UnboundedScalarEncoder(
        _num(spec, "resolution", context), _int(spec, "n", context),
        _int(spec, "w", context), seed=seed,
    ), "number"


def _build_category(spec: Mapping, context: str):
    _check_keys(spec, {"type", "categories", "w"}, {"unknown_policy"}, context)
    cats = spec["categories"]
    if not isinstance(cats, list) or not all(isinstance(c, str) for c in cats):
        raise ConfigError(f"{context}: 'categories' must be a list of strings")
    policy = _str(spec, "unknown_policy", context) if "unknown_policy" in spec else "error"
    return CategoryEncoder(cats, _int(spec, "w", context), unknown_policy=policy), "text"


def _build_geospatial(spec: Mapping, context: str):
    _check_keys(
        spec, {"type", "n"},
        {"variant", "radius", "w", "seed", "speed_scale",
         "radius_min", "radius_max", "cell_size"},
        context,
    )
    kwargs = dict(
        variant=_str(spec, "variant", context) if "variant" in spec else "fixed",
        seed=_int(spec, "seed", context) if "seed" in spec else 0,
    )
    if "w" in spec:
        kwargs["w"] = _int(spec, "w", context)
    if "speed_scale" in spec:
        kwargs["speed_scale"] = _num(spec, "speed_scale", context)
    for key in ("radius_min", "radius_max"):
        if key in spec:
            kwargs[key] = _int(spec, key, context)
    radius = _int(spec, "radius", context) if "radius" in spec else 2
    enc = GeospatialEncoder(_int(spec, "n", context), radius, **kwargs)
    cell_size = None
    if "cell_size" in spec:
        cell_size = _num(spec, "cell_size", context)
        if cell_size <= 0:
            raise ConfigError(f"{context}: 'cell_size' must be positive meters")
    kind = "latlon" if cell_size is not None else "grid"
    return enc, kind, cell_size


_DATETIME_COMPONENT_KEYS = {
    "weekend", "day_of_week", "time_of_day", "month_of_year", "day_of_month"
}


def _build_datetime(spec: Mapping, context: str):
    _check_keys(spec, {"type"}, _DATETIME_COMPONENT_KEYS, context)
    kwargs = {}
    for comp in _DATETIME_COMPONENT_KEYS:
        if comp not in spec:
            continue
        sub = spec[comp]
        sub_ctx = f"{context}.{comp}"
        if comp == "weekend":
            _check_keys(sub, {"w"}, set(), sub_ctx)
            kwargs[comp] = _int(sub, "w", sub_ctx)
        else:
            _check_keys(sub, {"n", "w"}, set(), sub_ctx)
            kwargs[comp] = (_int(sub, "n", sub_ctx), _int(sub, "w", sub_ctx))
    return DatetimeEncoder(**kwargs), "datetime"


_LEAF_BUILDERS = {
    "scalar": _build_scalar,
    "cyclic": _build_cyclic,
    "delta": _build_delta,
    "scalar_unbounded": _build_unbounded,
    "category": _build_category,
    "datetime": _build_datetime,
}


def _bind_leaf(enc_spec: Mapping, binding: Mapping, context: str) -> BoundEncoder:
    enc_type = _str(enc_spec, "type", context)
    field_spec = binding.get("field")
    speed_field = binding.get("speed_field")

    if enc_type == "geospatial":
        enc, kind, cell_size = _build_geospatial(enc_spec, context)
        if (
            not isinstance(field_spec, list)
            or len(field_spec) != 2
            or not all(isinstance(c, str) for c in field_spec)
        ):
            raise ConfigError(
                f"{context}: geospatial 'field' must be a two-column list "
                "([x, y] grid columns, or [lat, lon] when cell_size is set)"
            )
        if speed_field is not None:
            if not isinstance(speed_field, str):
                raise ConfigError(f"{context}: 'speed_field' must be a column name")
            if enc.variant != "topw":
                raise ConfigError(
                    f"{context}: 'speed_field' requires the 'topw' variant "
                    "(the fixed variant has no speed-adaptive radius)"
                )
            bound_enc: object = SpeedAdaptiveGeo(enc)
        else:
            bound_enc = enc
        name = ",".join(field_spec)
        return BoundEncoder(
            name=name, encoder=bound_enc, columns=tuple(field_spec),
            kind=kind, speed_column=speed_field, cell_size=cell_size,
        )

    if enc_type not in _LEAF_BUILDERS:
        raise ConfigError(
            f"{context}: unknown encoder type {enc_type!r}; expected one of "
            f"{sorted([*_LEAF_BUILDERS, 'geospatial', 'multi'])}"
        )
    if speed_field is not None:
        raise ConfigError(f"{context}: 'speed_field' only applies to geospatial encoders")
    if not isinstance(field_spec, str):
        raise ConfigError(f"{context}: 'field' must name one CSV column")
    enc, kind = _LEAF_BUILDERS[enc_type](enc_spec, context)
    return BoundEncoder(name=field_spec, encoder=enc, columns=(field_spec,), kind=kind)


def parse_pipeline_config(raw: Mapping) -> PipelineConfig:
    """Validate a config dict and construct the bound encoder pipeline."""
    _check_keys(
        raw, {"encoder"},
        {"field", "speed_field", "output_format", "csv", "distance"},
        "config",
    )
    enc_spec = raw["encoder"]
    if not isinstance(enc_spec, Mapping) or "type" not in enc_spec:
        raise ConfigError("config.encoder: must be an object with a 'type' key")

    bound: list[BoundEncoder] = []
    if enc_spec["type"] == "multi":
        if "field" in raw or "speed_field" in raw:
            raise ConfigError(
                "config: 'field'/'speed_field' belong on the parts of a multi encoder"
            )
        _check_keys(enc_spec, {"type", "parts"}, set(), "config.encoder")
        parts = enc_spec["parts"]
        if not isinstance(parts, list) or not parts:
            raise ConfigError("config.encoder.parts: must be a non-empty list")
        for i, part in enumerate(parts):
            ctx = f"config.encoder.parts[{i}]"
            _check_keys(part, {"field", "encoder"}, {"speed_field"}, ctx)
            sub = part["encoder"]
            if not isinstance(sub, Mapping) or "type" not in sub:
                raise ConfigError(f"{ctx}.encoder: must be an object with a 'type' key")
            if sub["type"] == "multi":
                raise ConfigError(f"{ctx}: multi encoders cannot nest")
            bound.append(_bind_leaf(sub, part, ctx))
    else:
        bound.append(_bind_leaf(enc_spec, raw, "config.encoder"))

    multi = MultiEncoder([(b.name, b.encoder) for b in bound])
    warnings = list(multi.warnings)

    fmt = "dense"
    if "output_format" in raw:
        fmt = _str(raw, "output_format", "config")
        fmt = _FORMAT_ALIASES.get(fmt, fmt)
        if fmt not in OUTPUT_FORMATS:
            raise ConfigError(
                f"config: output_format must be one of {OUTPUT_FORMATS}, got {raw['output_format']!r}"
            )

    delimiter = ","
    if "csv" in raw:
        _check_keys(raw["csv"], set(), {"delimiter"}, "config.csv")
        if "delimiter" in raw["csv"]:
            delimiter = _str(raw["csv"], "delimiter", "config.csv")
            if len(delimiter) != 1:
                raise ConfigError("config.csv: delimiter must be a single character")

    distance = None
    distance_spec = None
    if "distance" in raw:
        distance, distance_spec = build_distance(raw["distance"])

    return PipelineConfig(
        bound=bound,
        multi=multi,
        output_format=fmt,
        delimiter=delimiter,
        distance=distance,
        distance_spec=distance_spec,
        encoder_spec=serialize_encoder_spec(bound, enc_spec["type"] == "multi"),
        warnings=warnings,
    )


def build_distance(spec) -> tuple[Callable, object]:
    """Resolve a distance spec to a callable plus its canonical echo form."""
    named = {
        "absolute": absolute_difference,
        "discrete": discrete_distance,
        "chebyshev": chebyshev_distance,
    }
    if isinstance(spec, str):
        if spec in named:
            return named[spec], spec
        raise ConfigError(
            f"config.distance: unknown distance {spec!r}; expected one of "
            f"{sorted(named) + ['circular']}"
        )
    if isinstance(spec, Mapping):
        if "expression" in spec:
            _check_keys(spec, {"expression"}, set(), "config.distance")
            expr = _str(spec, "expression", "config.distance")
            return _expression_distance(expr), {"expression": expr}
        _check_keys(spec, {"name"}, {"period"}, "config.distance")
        name = _str(spec, "name", "config.distance")
        if name == "circular":
            if "period" not in spec:
                raise ConfigError("config.distance: circular distance requires 'period'")
            period = _num(spec, "period", "config.distance")
            return circular_distance(period), {"name": "circular", "period": period}
        if name in named:
            return named[name], name
        raise ConfigError(f"config.distance: unknown distance name {name!r}")
    raise ConfigError(f"config.distance: expected a name or object, got {spec!r}")


def _expression_distance(expr: str) -> Callable:
    try:
        code = compile(expr, "<distance expression>", "eval")
    except SyntaxError as exc:
        raise ConfigError(f"config.distance: invalid expression: {exc}") from exc
    env = {"abs": abs, "min": min, "max": max, "math": math}

    def dist(a, b):
        return eval(code, {"__builtins__": {}}, {**env, "a": a, "b": b})

    return dist


# --- canonical serialization -----------------------------------------------

def _leaf_spec(b: BoundEncoder) -> dict:
    enc = b.encoder
    if isinstance(enc, SpeedAdaptiveGeo):
        enc = enc.inner
    if isinstance(enc, DeltaEncoder):
        inner = enc.inner
        return {"type": "delta", "min": inner.min_value, "max": inner.max_value,
                "n": inner.n, "w": inner.w}
    if isinstance(enc, ScalarEncoder):
        return {"type": "scalar", "min": enc.min_value, "max": enc.max_value,
                "n": enc.n, "w": enc.w}
    if isinstance(enc, CyclicEncoder):
        return {"type": "cyclic", "period": enc.period, "n": enc.n, "w": enc.w}
    if isinstance(enc, UnboundedScalarEncoder):
        return {"type": "scalar_unbounded", "resolution": enc.resolution,
                "n": enc.n, "w": enc.w, "seed": enc.seed}
    if isinstance(enc, CategoryEncoder):
        return {"type": "category", "categories": list(enc.categories),
                "w": enc.w, "unknown_policy": enc.unknown_policy}
    if isinstance(enc, GeospatialEncoder):
        spec = {"type": "geospatial", "n": enc.n, "variant": enc.variant,
                "radius": enc.radius, "seed": enc.seed,
                "speed_scale": enc.speed_scale,
                "radius_min": enc.radius_min, "radius_max": enc.radius_max}
        if enc.variant == "topw":
            spec["w"] = enc.w
        if b.cell_size is not None:
            spec["cell_size"] = b.cell_size
        return spec
    if isinstance(enc, DatetimeEncoder):
        spec = {"type": "datetime"}
        for name, comp in enc.components:
            if isinstance(comp, CategoryEncoder):
                spec[name] = {"w": comp.w}
            else:
                spec[name] = {"n": comp.n, "w": comp.w}
        return spec
    raise ConfigError(f"cannot serialize encoder of type {type(enc).__name__}")


def serialize_encoder_spec(bound: list[BoundEncoder], is_multi: bool) -> dict:
    if not is_multi:
        return _leaf_spec(bound[0])
    parts = []
    for b in bound:
        part = {"field": b.name if len(b.columns) == 1 else list(b.columns),
                "encoder": _leaf_spec(b)}
        if b.speed_column is not None:
            part["speed_field"] = b.speed_column
        parts.append(part)
    return {"type": "multi", "parts": parts}


def serialize_pipeline(cfg: PipelineConfig) -> dict:
    """Canonical config dict: parsing it again reproduces the same pipeline."""
    out: dict = {"encoder": cfg.encoder_spec}
    if len(cfg.bound) == 1 and cfg.encoder_spec.get("type") != "multi":
        b = cfg.bound[0]
        out["field"] = b.name if len(b.columns) == 1 else list(b.columns)
        if b.speed_column is not None:
            out["speed_field"] = b.speed_column
    out["output_format"] = cfg.output_format
    out["csv"] = {"delimiter": cfg.delimiter}
    if cfg.distance_spec is not None:
        out["distance"] = cfg.distance_spec
    return out


__all__ = [
    "OUTPUT_FORMATS",
    "BoundEncoder",
    "SpeedAdaptiveGeo",
    "PipelineConfig",
    "parse_pipeline_config",
    "build_distance",
    "serialize_pipeline",
]
