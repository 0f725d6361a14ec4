"""Run configuration: a key = value text file with environment overrides."""
from __future__ import annotations

import configparser
import os
from dataclasses import asdict, dataclass, fields

from .exact.fields import DEFAULT_PRIME

ENV_PREFIX = "NINTHSCHUR_"
ENV_KEYS = ("digits", "seed")


class ConfigError(ValueError):
    pass


@dataclass
class Config:
    digits: int = 40
    M: int = 100_000
    prime: int = DEFAULT_PRIME
    trials: int = 20
    seed: int = 0
    slack: int = 4
    max_cells: int = 25
    table_cap: int = 12
    jobs: int = 1
    output: str = ""

    def __post_init__(self):
        for f in fields(self):
            if f.type in ("int", int):
                v = getattr(self, f.name)
                if not isinstance(v, int) or isinstance(v, bool):
                    raise ConfigError(f"{f.name} must be an integer, got {v!r}")
                if f.name == "seed":
                    if v < 0:
                        raise ConfigError("seed must be >= 0")
                elif v <= 0:
                    raise ConfigError(f"{f.name} must be positive, got {v}")

    def to_text(self) -> str:
        return "".join(f"{k} = {v}\n" for k, v in asdict(self).items())

    @classmethod
    def from_text(cls, text: str) -> "Config":
        cp = configparser.ConfigParser(interpolation=None)
        cp.optionxform = str
        try:
            cp.read_string("[config]\n" + text)
        except configparser.Error as exc:
            raise ConfigError(str(exc)) from exc
        return cls.from_mapping(dict(cp["config"]))

    @classmethod
    def from_mapping(cls, values: dict) -> "Config":
        known = {f.name: f for f in fields(cls)}
        kwargs = {}
        for k, v in values.items():
            if k not in known:
                raise ConfigError(f"unknown config key {k!r}")
            if known[k].type in ("int", int):
                try:
                    kwargs[k] = int(str(v).replace("_", ""))
                except ValueError as exc:
                    raise ConfigError(f"{k} must be an integer, got {v!r}") from exc
            else:
                kwargs[k] = str(v)
        return cls(**kwargs)

    def with_env(self, environ=None) -> "Config":
        """Apply NINTHSCHUR_DIGITS / NINTHSCHUR_SEED overrides."""
        environ = os.environ if environ is None else environ
        values = asdict(self)
        for k in ENV_KEYS:
            name = ENV_PREFIX + k.upper()
            if name in environ:
                values[k] = environ[name]
        return Config.from_mapping(values)

    def snapshot(self) -> dict:
        d = asdict(self)
        d.pop("output")
        d.pop("jobs")
        return d


def load_config(path: str | None = None, environ=None) -> Config:
    cfg = Config()
    if path:
        try:
            with open(path, encoding="utf-8") as fh:
                cfg = Config.from_text(fh.read())
        except OSError as exc:
            raise ConfigError(f"cannot read config {path}: {exc}") from exc
    return cfg.with_env(environ)
