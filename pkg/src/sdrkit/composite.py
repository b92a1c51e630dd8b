"""Combining encoders: concatenation of per-field SDRs, and a datetime
encoder assembled from category and cyclic parts."""

from __future__ import annotations

import calendar
import datetime as _dt
from typing import Mapping, Sequence

from .categories import CategoryEncoder
from .errors import ConfigError, Finding, InputError, MissingFieldError, SdrError
from .scalars import CyclicEncoder
from .sdr import SDR

# One child's code should not drown out another's: flag when some child has
# more than three times the one-bits of its smallest sibling.
DOMINANCE_RATIO = 3.0


def concat(parts: Sequence[SDR]) -> SDR:
    """Concatenate SDRs: total length is the sum of part lengths and each
    part's bits shift by the combined length of everything before it."""
    if not parts:
        raise InputError("cannot concatenate an empty list of SDRs")
    active: list[int] = []
    offset = 0
    for part in parts:
        active.extend(offset + i for i in part.active)
        offset += part.n
    return SDR(offset, tuple(active))


class MultiEncoder:
    """Encodes a record by running each named field through its own child
    encoder and concatenating the results in declared order.

    Bit positions are a stable function of the declared order; nothing is
    re-sorted.  A delta child makes the whole encoder stateful with the same
    single-writer-per-stream rule.
    """

    def __init__(self, parts: Sequence[tuple[str, object]]):
        parts = list(parts)
        if not parts:
            raise ConfigError("a multi encoder needs at least one part")
        names = [name for name, _ in parts]
        if len(set(names)) != len(names):
            raise ConfigError(f"field names must be unique, got {names}")
        self.parts = parts
        self.warnings: list[Finding] = []
        ws = [(name, enc.w) for name, enc in parts]
        w_lo = min(ws, key=lambda p: p[1])
        w_hi = max(ws, key=lambda p: p[1])
        if w_hi[1] > DOMINANCE_RATIO * w_lo[1]:
            self.warnings.append(
                Finding(
                    "warning",
                    f"field {w_hi[0]!r} (w={w_hi[1]}) has more than "
                    f"{DOMINANCE_RATIO:.0f}x the one-bits of {w_lo[0]!r} "
                    f"(w={w_lo[1]}) and may dominate the combined encoding",
                )
            )
        for name, enc in parts:
            for f in getattr(enc, "warnings", []):
                self.warnings.append(Finding(f.severity, f"field {name!r}: {f.message}"))

    @property
    def n(self) -> int:
        return sum(enc.n for _, enc in self.parts)

    @property
    def w(self) -> int:
        return sum(enc.w for _, enc in self.parts)

    def encode(self, record: Mapping[str, object]) -> SDR:
        """Encode the declared fields of ``record``; other keys are ignored.

        A missing field raises MissingFieldError; child failures propagate
        with the field name prepended.
        """
        encoded = []
        for name, enc in self.parts:
            if name not in record:
                raise MissingFieldError(f"record is missing field {name!r}")
            try:
                encoded.append(enc.encode(record[name]))
            except SdrError as exc:
                raise type(exc)(f"field {name!r}: {exc}") from exc
        return concat(encoded)


# Component order is fixed and documented: changing it would silently move
# every bit of every downstream consumer.
DATETIME_COMPONENT_ORDER = (
    "weekend",
    "day_of_week",
    "time_of_day",
    "month_of_year",
    "day_of_month",
)

_CYCLIC_PERIODS = {
    "day_of_week": 7.0,
    "time_of_day": 24.0,
    "month_of_year": 12.0,
    "day_of_month": 31.0,
}

DEFAULT_COMPONENT_N = 100
DEFAULT_COMPONENT_W = 21
DEFAULT_WEEKEND_W = 50


class DatetimeEncoder:
    """Calendar-instant encoder built from optional components.

    * weekend        -- two-block category (weekday / weekend); give w,
                        n is 2*w.
    * day_of_week    -- cyclic, period 7, day 0 = Sunday; the encoded value
                        includes the fraction of the day elapsed, so Saturday
                        evening and Sunday evening overlap smoothly.
    * time_of_day    -- cyclic, period 24, hours plus fractional hour.
    * month_of_year  -- cyclic, period 12, month plus fractional month.
    * day_of_month   -- cyclic, period 31, day plus fractional day.

    Cyclic components take an (n, w) pair or True for the defaults
    (n=100, w=21); weekend takes w or True (w=50).  Calendar fields are read
    from the timestamp exactly as given: resolve time zones before encoding,
    because identical wall-clock fields must encode identically on every
    machine.
    """

    def __init__(
        self,
        *,
        weekend=None,
        day_of_week=None,
        time_of_day=None,
        month_of_year=None,
        day_of_month=None,
    ):
        requested = {
            "weekend": weekend,
            "day_of_week": day_of_week,
            "time_of_day": time_of_day,
            "month_of_year": month_of_year,
            "day_of_month": day_of_month,
        }
        self.components: list[tuple[str, object]] = []
        for name in DATETIME_COMPONENT_ORDER:
            spec = requested[name]
            if spec is None:
                continue
            if name == "weekend":
                w = DEFAULT_WEEKEND_W if spec is True else spec
                if not isinstance(w, int) or isinstance(w, bool):
                    raise ConfigError(f"weekend component takes w as an integer, got {spec!r}")
                enc: object = CategoryEncoder(["weekday", "weekend"], w=w)
            else:
                if spec is True:
                    n, w = DEFAULT_COMPONENT_N, DEFAULT_COMPONENT_W
                else:
                    try:
                        n, w = spec
                    except (TypeError, ValueError):
                        raise ConfigError(
                            f"{name} component takes an (n, w) pair, got {spec!r}"
                        ) from None
                enc = CyclicEncoder(_CYCLIC_PERIODS[name], n=n, w=w)
            self.components.append((name, enc))
        if not self.components:
            raise ConfigError("enable at least one datetime component")
        self.warnings = [
            Finding(f.severity, f"{name}: {f.message}")
            for name, enc in self.components
            for f in getattr(enc, "warnings", [])
        ]

    @property
    def n(self) -> int:
        return sum(enc.n for _, enc in self.components)

    @property
    def w(self) -> int:
        return sum(enc.w for _, enc in self.components)

    def component_values(self, t: _dt.datetime) -> dict[str, object]:
        """The derived per-component value for each enabled component."""
        if not isinstance(t, _dt.datetime):
            raise InputError(f"expected a datetime, got {t!r}")
        day_fraction = (
            t.hour + t.minute / 60 + t.second / 3600 + t.microsecond / 3.6e9
        ) / 24.0
        sunday0 = (t.weekday() + 1) % 7  # Sunday = 0 ... Saturday = 6
        days_in_month = calendar.monthrange(t.year, t.month)[1]
        values: dict[str, object] = {
            "weekend": "weekend" if t.weekday() >= 5 else "weekday",
            "day_of_week": sunday0 + day_fraction,
            "time_of_day": day_fraction * 24.0,
            "month_of_year": (t.month - 1) + (t.day - 1 + day_fraction) / days_in_month,
            "day_of_month": (t.day - 1) + day_fraction,
        }
        return {name: values[name] for name, _ in self.components}

    def encode(self, t: _dt.datetime) -> SDR:
        values = self.component_values(t)
        return concat([enc.encode(values[name]) for name, enc in self.components])


__all__ = [
    "concat",
    "MultiEncoder",
    "DatetimeEncoder",
    "DATETIME_COMPONENT_ORDER",
    "DOMINANCE_RATIO",
]
