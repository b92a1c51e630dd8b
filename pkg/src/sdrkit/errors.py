"""Exception types and validation findings shared across the package."""

from __future__ import annotations

from dataclasses import dataclass


class SdrError(Exception):
    """Base class for all sdrkit errors."""


class DimensionMismatch(SdrError):
    """Two SDRs of different total length were compared."""


class InvalidSdr(SdrError):
    """An SDR violates its structural invariants."""


class ParseError(SdrError):
    """A serialized SDR could not be parsed."""


class ConfigError(SdrError):
    """An encoder or pipeline configuration is structurally invalid."""


class InputError(SdrError):
    """An input value cannot be encoded (non-finite, wrong type, ...)."""


class RangeError(SdrError):
    """A derived integer fell outside its required machine range."""


class UnknownCategoryError(SdrError):
    """A category label is not in the configured vocabulary."""


class MissingFieldError(SdrError):
    """A record is missing a field required by the encoder."""


class EvaluationError(SdrError):
    """A user-supplied distance function failed during evaluation."""


class ProjectionError(SdrError):
    """A geographic coordinate lies outside the projection's validity."""


@dataclass(frozen=True)
class Finding:
    """One validation finding: a hard error or an advisory warning."""

    severity: str  # "error" | "warning"
    message: str

    @property
    def is_error(self) -> bool:
        return self.severity == "error"

    def __str__(self) -> str:
        return f"{self.severity}: {self.message}"


def raise_on_errors(findings: list[Finding]) -> None:
    """Raise ConfigError summarizing every error-severity finding."""
    errors = [f.message for f in findings if f.is_error]
    if errors:
        raise ConfigError("; ".join(errors))


def warnings_only(findings: list[Finding]) -> list[Finding]:
    return [f for f in findings if not f.is_error]
