"""Experiment configuration: ``key = value`` text files with validated defaults.

Every key is optional. ``#`` starts a comment. Energies are in joules,
distances in meters::

    node_count = 100
    side_length = 200
    base_station = 100, 100
    eps_mp = 1.3e-15        # J/bit/m^4
    seeds = 0-19            # or 1, 5, 9
"""

from __future__ import annotations

import dataclasses
import re
from dataclasses import dataclass
from pathlib import Path

from .clustering import CostWeights
from .firefly import FireflyParams
from .jumper import JumperParams
from .network import FieldConfig
from .radio import RadioParams


class ConfigError(ValueError):
    def __init__(self, message: str, key: str | None = None, line: int | None = None):
        prefix = f"line {line}: " if line is not None else ""
        super().__init__(prefix + message)
        self.key = key
        self.line = line


def parse_seeds(text: str) -> list[int]:
    """``"0-4"`` -> ``[0, 1, 2, 3, 4]``; ``"1, 7 9"`` -> ``[1, 7, 9]``."""
    seeds = []
    for tok in re.split(r"[,\s]+", text.strip()):
        if not tok:
            continue
        m = re.fullmatch(r"(-?\d+)-(-?\d+)", tok)
        if m:
            lo, hi = int(m[1]), int(m[2])
            if hi < lo:
                raise ValueError(f"empty seed range {tok!r}")
            seeds.extend(range(lo, hi + 1))
        else:
            seeds.append(int(tok))
    if not seeds:
        raise ValueError("no seeds given")
    return seeds


def _point(text: str) -> tuple[float, float]:
    parts = [p for p in re.split(r"[,\s]+", text.strip()) if p]
    if len(parts) != 2:
        raise ValueError(f"expected 'x, y', got {text!r}")
    return float(parts[0]), float(parts[1])


def _optional_float(text: str):
    return None if text.strip().lower() in ("", "auto", "none") else float(text)


# key -> (section, attribute, parser)
_KEYS = {
    "side_length": ("field", "side_length", float),
    "node_count": ("field", "node_count", int),
    "base_station": ("field", "base_station", _point),
    "cluster_fraction": ("field", "cluster_fraction", float),
    "energy_mode": ("field", "energy_mode", str.strip),
    "initial_energy": ("field", "initial_energy", float),
    "e_elec": ("radio", "e_elec", float),
    "e_da": ("radio", "e_da", float),
    "eps_fs": ("radio", "eps_fs", float),
    "eps_mp": ("radio", "eps_mp", float),
    "payload_bits": ("radio", "payload_bits", int),
    "beta": ("weights", "beta", float),
    "population": ("firefly", "population", int),
    "max_generations": ("firefly", "max_generations", int),
    "beta0": ("firefly", "beta0", float),
    "gamma": ("firefly", "gamma", _optional_float),
    "alpha": ("firefly", "alpha", _optional_float),
    "attractiveness_exponent": ("firefly", "exponent", float),
    "eta": ("jumper", "eta", int),
    "omega": ("jumper", "omega", float),
    "leach_p": (None, "leach_p", _optional_float),
    "seeds": (None, "seeds", parse_seeds),
    "output_dir": (None, "output_dir", str.strip),
}
_ATTR_TO_KEY = {(sec, attr): key for key, (sec, attr, _) in _KEYS.items()}


@dataclass(frozen=True)
class ExperimentConfig:
    field: FieldConfig = dataclasses.field(default_factory=FieldConfig)
    radio: RadioParams = dataclasses.field(default_factory=RadioParams)
    weights: CostWeights = dataclasses.field(default_factory=CostWeights)
    firefly: FireflyParams = dataclasses.field(default_factory=FireflyParams)
    jumper: JumperParams = dataclasses.field(default_factory=JumperParams)
    leach_p: float | None = None
    seeds: tuple[int, ...] = (0,)
    output_dir: str = "results"

    def __post_init__(self):
        object.__setattr__(self, "seeds", tuple(int(s) for s in self.seeds))
        p = self.leach_p if self.leach_p is not None else self.field.cluster_fraction
        if not 0 < p < 1:
            raise ConfigError(f"leach_p must lie in (0, 1), got {p}", "leach_p")
        if not self.seeds:
            raise ConfigError("seeds must not be empty", "seeds")

    def resolved(self) -> ExperimentConfig:
        """Same config with every size-dependent default replaced by its value."""
        return dataclasses.replace(
            self,
            firefly=self.firefly.resolved(self.field.side_length),
            leach_p=self.field.cluster_fraction if self.leach_p is None else self.leach_p,
        )

    def replace(self, **overrides) -> ExperimentConfig:
        """Return a copy with flat config keys overridden, e.g. ``replace(node_count=6)``."""
        return build_config({**as_dict(self), **overrides})


def as_dict(config: ExperimentConfig) -> dict:
    out = {}
    for key, (sec, attr, _) in _KEYS.items():
        value = getattr(getattr(config, sec) if sec else config, attr)
        out[key] = value.value if hasattr(value, "value") else value
    return out


def build_config(values: dict) -> ExperimentConfig:
    sections = {"field": {}, "radio": {}, "weights": {}, "firefly": {}, "jumper": {}}
    top = {}
    for key, value in values.items():
        if key not in _KEYS:
            raise ConfigError(f"unknown key {key!r}", key)
        sec, attr, _ = _KEYS[key]
        (sections[sec] if sec else top)[attr] = value
    types = {"field": FieldConfig, "radio": RadioParams, "weights": CostWeights,
             "firefly": FireflyParams, "jumper": JumperParams}
    built = {}
    for sec, kwargs in sections.items():
        try:
            built[sec] = types[sec](**kwargs)
        except ValueError as exc:
            attr = str(exc).split(" ", 1)[0]
            key = _ATTR_TO_KEY.get((sec, attr), sec)
            raise ConfigError(f"invalid {key}: {exc}", key) from None
    return ExperimentConfig(**built, **top)


def parse_config(text: str) -> ExperimentConfig:
    values = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ConfigError(f"expected 'key = value', got {raw.strip()!r}", line=lineno)
        key, value = (s.strip() for s in line.split("=", 1))
        if key not in _KEYS:
            raise ConfigError(f"unknown key {key!r}", key, lineno)
        if key in values:
            raise ConfigError(f"duplicate key {key!r}", key, lineno)
        try:
            values[key] = _KEYS[key][2](value)
        except ValueError as exc:
            raise ConfigError(f"bad value for {key}: {exc}", key, lineno) from None
    return build_config(values).resolved()


def load_config(path) -> ExperimentConfig:
    """Read a config file; an empty file yields the default experiment."""
    return parse_config(Path(path).read_text(encoding="utf-8"))


def _format(value) -> str:
    if isinstance(value, tuple) and value and isinstance(value[0], float):
        return ", ".join(repr(v) for v in value)
    if isinstance(value, tuple):
        return ", ".join(str(v) for v in value)
    if value is None:
        return "auto"
    return repr(value) if isinstance(value, float) else str(value)


def dump_config(config: ExperimentConfig) -> str:
    """Fully resolved ``key = value`` text; :func:`parse_config` reads it back unchanged."""
    values = as_dict(config.resolved())
    return "".join(f"{k} = {_format(v)}\n" for k, v in values.items())
