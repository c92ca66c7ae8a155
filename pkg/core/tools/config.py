# core/tools/config.py
import os
from dataclasses import dataclass, replace
from typing import Dict

from dotenv import load_dotenv

load_dotenv()


@dataclass(frozen=True)
class GuardConfig:
    subsets: int
    perms: int
    orders: int
    tor_dim: int
    massey_k: int
    max_n: int
    bar_basis: int
    default_jmax: int
    threads: int


# set by the CLI for the duration of one job
_overrides: Dict[str, int] = {}


def _int_env(name: str, default: int) -> int:
    raw = os.getenv(name)
    if raw is None or raw.strip() == "":
        return default
    try:
        return int(raw)
    except ValueError:
        raise ValueError(f"{name} must be an integer, got {raw!r}")


def get_guard_config() -> GuardConfig:
    """Resource guards and defaults, overridable from the environment or a .env file."""
    base = GuardConfig(
        subsets=_int_env("GOLOD_GUARD_SUBSETS", 20),
        perms=_int_env("GOLOD_GUARD_PERMS", 10),
        orders=_int_env("GOLOD_GUARD_ORDERS", 8),
        tor_dim=_int_env("GOLOD_GUARD_TOR_DIM", 24),
        massey_k=_int_env("GOLOD_GUARD_MASSEY_K", 4),
        max_n=_int_env("GOLOD_GUARD_MAX_N", 6),
        bar_basis=_int_env("GOLOD_GUARD_BAR_BASIS", 200000),
        default_jmax=_int_env("GOLOD_DEFAULT_JMAX", 3),
        threads=_int_env("GOLOD_THREADS", 1),
    )
    return replace(base, **_overrides) if _overrides else base


def set_guard_overrides(**changes: int) -> None:
    unknown = set(changes) - set(GuardConfig.__dataclass_fields__)
    if unknown:
        raise ValueError(f"unknown guard(s): {sorted(unknown)}")
    _overrides.clear()
    _overrides.update({k: v for k, v in changes.items() if v is not None})


def clear_guard_overrides() -> None:
    _overrides.clear()


def get_log_level() -> str:
    return os.getenv("GOLOD_LOG_LEVEL", "WARNING").upper()
