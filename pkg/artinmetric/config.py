"""Load configuration from TOML file and merge environment variables."""

from __future__ import annotations

import os
from pathlib import Path

try:
    import tomllib  # Python 3.11+
except ImportError:
    import tomli as tomllib  # type: ignore[no-redef]


_DEFAULT_CONFIG_PATH = Path(__file__).parent.parent / "config" / "settings.toml"


def _load_toml(path: Path) -> dict:
    with open(path, "rb") as f:
        return tomllib.load(f)


def _env_int(key: str, default: int) -> int:
    val = os.environ.get(key, "").strip()
    if not val:
        return default
    try:
        return int(val)
    except ValueError:
        return default


class Config:
    """Application configuration.  Reads settings.toml then overlays env vars."""

    def __init__(self, config_path: Path | None = None) -> None:
        path = config_path or Path(os.environ.get("ARTINMETRIC_CONFIG", str(_DEFAULT_CONFIG_PATH)))
        raw = _load_toml(path)

        # ── Oracle budgets ────────────────────────────────────────────────────
        orc = raw["oracle"]
        self.artin_max_radius: int = int(orc["artin_max_radius"])
        self.dual_max_radius: int = int(orc["dual_max_radius"])

        # ── Horoboundary ──────────────────────────────────────────────────────
        hb = raw["horoboundary"]
        self.max_runs: int = int(hb["max_runs"])
        self.approach_first: int = int(hb["approach_first"])
        self.approach_last: int = int(hb["approach_last"])

        # ── Growth ────────────────────────────────────────────────────────────
        gr = raw["growth"]
        self.enumeration_max_n: int = int(gr["enumeration_max_n"])
        self.growth_order: int = int(gr["order"])

        # ── Sampling ──────────────────────────────────────────────────────────
        smp = raw["sampling"]
        self.sample_seed: int = _env_int("ARTINMETRIC_SEED", int(smp["seed"]))
        self.sample_points: int = int(smp["points"])
        self.sample_omega0_points: int = int(smp["omega0_points"])
        self.sample_pairs: int = int(smp["pairs"])

        # ── Output ────────────────────────────────────────────────────────────
        self.reports_dir: str = os.environ.get("REPORTS_DIR", raw["output"]["reports_dir"])

        # ── Logging ───────────────────────────────────────────────────────────
        log = raw["logging"]
        self.log_level: str = os.environ.get("LOG_LEVEL", log["level"]).upper()
        self.log_format: str = os.environ.get("LOG_FORMAT", log.get("format", "json")).lower()

    def max_radius(self, gens: str) -> int:
        """Feasibility budget for Cayley balls over *gens* ("artin" or "dual")."""
        return self.artin_max_radius if gens == "artin" else self.dual_max_radius


_instance: Config | None = None


def get_config(config_path: Path | None = None) -> Config:
    """Return the singleton Config, creating it on first call."""
    global _instance
    if _instance is None:
        _instance = Config(config_path)
    return _instance


def reset_config() -> None:
    """Reset the singleton (useful in tests)."""
    global _instance
    _instance = None
