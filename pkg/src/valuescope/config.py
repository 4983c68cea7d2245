"""Run configuration: defaults, JSON config files, validation."""

from __future__ import annotations

import json
from dataclasses import asdict, dataclass, field, fields


class ConfigError(ValueError):
    """Invalid configuration value or config file."""


@dataclass
class RunConfig:
    """Everything tunable about a run.

    Band thresholds and the neutral sentiment band follow the calibrated
    defaults; ``centralization_positive`` controls whether the two
    centralization metrics count positively inside the connectivity
    composite (the default) or flipped.
    """

    corpus: str | None = None
    output_dir: str = "out"
    orientation_lexicon: str | None = None  # None -> packaged default
    sentiment_lexicon: str | None = None
    reference_dictionary: str | None = None  # None -> build from the corpus
    window_hours: float = 24.0
    gbco_mode: str = "group"  # rotating leadership: "group" or "actor"
    response_cutoff_hours: float | None = None
    interactivity_low: float = 0.30
    interactivity_high: float = 0.45
    connectivity_low: float = 0.50
    connectivity_high: float = 0.75
    attitude_negative_max: float = 0.45
    attitude_positive_min: float = 0.55
    centralization_positive: bool = True
    connectivity_weights: dict[str, float] = field(default_factory=dict)
    interactivity_weights: dict[str, float] = field(default_factory=dict)
    export_graphml: bool = False
    export_dot: bool = False
    window_csv: bool = False

    def validate(self) -> None:
        for low_name, high_name in (
            ("interactivity_low", "interactivity_high"),
            ("connectivity_low", "connectivity_high"),
        ):
            low = getattr(self, low_name)
            high = getattr(self, high_name)
            if not (0.0 < low < high < 1.0):
                raise ConfigError(
                    f"need 0 < {low_name} < {high_name} < 1, got {low} and {high}"
                )
        if not (0.0 < self.attitude_negative_max < self.attitude_positive_min < 1.0):
            raise ConfigError(
                "need 0 < attitude_negative_max < attitude_positive_min < 1"
            )
        if self.window_hours <= 0:
            raise ConfigError("window_hours must be positive")
        if self.gbco_mode not in ("group", "actor"):
            raise ConfigError(
                f"gbco_mode must be 'group' or 'actor', got {self.gbco_mode!r}"
            )
        if self.response_cutoff_hours is not None and self.response_cutoff_hours <= 0:
            raise ConfigError("response_cutoff_hours must be positive when set")
        for name in ("connectivity_weights", "interactivity_weights"):
            for metric, weight in getattr(self, name).items():
                if weight < 0:
                    raise ConfigError(f"{name}[{metric!r}] is negative")

    @classmethod
    def from_file(cls, path: str) -> "RunConfig":
        try:
            with open(path, encoding="utf-8") as handle:
                raw = json.load(handle)
        except OSError as exc:
            raise ConfigError(f"cannot read config {path!r}: {exc}") from exc
        except json.JSONDecodeError as exc:
            raise ConfigError(f"config {path!r} is not valid JSON: {exc}") from exc
        if not isinstance(raw, dict):
            raise ConfigError("config file must hold a JSON object")
        known = {f.name for f in fields(cls)}
        unknown = set(raw) - known
        if unknown:
            raise ConfigError(f"unknown config keys: {sorted(unknown)}")
        cfg = cls(**raw)
        cfg.validate()
        return cfg

    def as_dict(self) -> dict:
        return asdict(self)
