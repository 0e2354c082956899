"""Resource bounds and their three override layers.

Precedence, lowest to highest: built-in defaults, config file (key=value
lines), UARG_* environment variables, explicit CLI flags.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, fields, replace

from .errors import ParseError

ENV_PREFIX = "UARG_"


@dataclass(frozen=True)
class Limits:
    max_uncertain: int = 20      # uncertain elements per framework (2^n subsets)
    max_arguments: int = 10_000  # generated structured arguments
    max_depth: int = 50          # structured argument height
    max_equiv_args: int = 16     # union size for equivalence search
    max_search_args: int = 6     # argument count for exhaustive framework search
    threads: int = 0             # 0 = auto


DEFAULT_LIMITS = Limits()

_INT_KEYS = {f.name for f in fields(Limits)}


def parse_config_text(text: str) -> dict[str, int]:
    """Parse TOML-style key=value lines (comments with #, blank lines ok)."""
    values: dict[str, int] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ParseError(f"expected key=value, got {line!r}", lineno, 1)
        key, _, value = line.partition("=")
        key = key.strip()
        if key not in _INT_KEYS:
            raise ParseError(f"unknown config key {key!r}", lineno, 1)
        try:
            values[key] = int(value.strip())
        except ValueError:
            raise ParseError(f"invalid integer for {key}: {value.strip()!r}",
                             lineno, 1) from None
    return values


def load_limits(config_path: str | None = None,
                overrides: dict[str, int] | None = None,
                env: dict[str, str] | None = None) -> Limits:
    limits = DEFAULT_LIMITS
    if config_path:
        with open(config_path, encoding="utf-8") as fh:
            limits = replace(limits, **parse_config_text(fh.read()))
    env = os.environ if env is None else env
    env_values = {
        key: int(env[ENV_PREFIX + key.upper()])
        for key in _INT_KEYS
        if ENV_PREFIX + key.upper() in env
    }
    if env_values:
        limits = replace(limits, **env_values)
    if overrides:
        limits = replace(limits, **{k: v for k, v in overrides.items()
                                    if v is not None})
    return limits
