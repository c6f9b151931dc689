"""Layered settings for orientnet.

Sources, strongest first: ``ORIENTNET_*`` environment variables, ``.orientnet.conf`` in the
working directory, ``~/.orientnet.conf``, then the built-in defaults. Files are INI with
one section per concern (``oracle``, ``runtime``, ``report``).
"""
from __future__ import annotations
import configparser
import logging
import os
from pathlib import Path
from typing import Dict, List, Optional

from .exceptions import ValidationError

LOGGER = logging.getLogger("orientnet.config")

DEFAULTS: Dict[str, Dict[str, str]] = {
    "oracle": {"max_edges": "20", "max_vertices": "16"},
    "runtime": {"threads": "1"},
    "report": {"format": "tsv"},
}

_ENV_KEYS = {
    ("oracle", "max_edges"): "ORIENTNET_ORACLE_MAX_EDGES",
    ("oracle", "max_vertices"): "ORIENTNET_ORACLE_MAX_VERTICES",
    ("runtime", "threads"): "ORIENTNET_THREADS",
    ("report", "format"): "ORIENTNET_FORMAT",
}

CONFIG_NAME = ".orientnet.conf"


def config_paths() -> List[Path]:
    """Candidate files, weakest first; later files override earlier ones."""
    return [Path.home() / CONFIG_NAME, Path.cwd() / CONFIG_NAME]


class Config:
    """Settings read once from files and the environment; ``reload`` re-reads both."""

    def __init__(self) -> None:
        self._parser = configparser.ConfigParser()
        self._env: Dict[tuple, Optional[str]] = {}
        self._load()

    def _load(self) -> None:
        found = self._parser.read([p for p in config_paths() if p.is_file()])
        if found:
            LOGGER.debug("Read configuration from %s", ", ".join(found))
        self._env = {key: os.environ.get(name) for key, name in _ENV_KEYS.items()}

    def get(self, section: str, key: str, default: Optional[str] = None) -> Optional[str]:
        """Raw string value: environment, then files, then ``default`` or the built-in one."""
        env = self._env.get((section, key))
        if env is not None:
            return env
        value = self._parser.get(section, key, fallback=None)
        if value is not None:
            return value
        return default if default is not None else DEFAULTS.get(section, {}).get(key)

    def get_int(self, section: str, key: str) -> int:
        raw = self.get(section, key)
        try:
            value = int(raw)  # type: ignore[arg-type]
        except (TypeError, ValueError):
            raise ValidationError(f"[{section}] {key} must be an integer, got {raw!r}")
        if value < 0:
            raise ValidationError(f"[{section}] {key} must be non-negative, got {value}")
        return value

    def oracle_max_edges(self) -> int:
        """Largest edge count the exhaustive orientation oracle will enumerate."""
        return self.get_int("oracle", "max_edges")

    def oracle_max_vertices(self) -> int:
        """Largest vertex count the clique / independent set oracles accept."""
        return self.get_int("oracle", "max_vertices")

    def threads(self) -> int:
        return max(1, self.get_int("runtime", "threads"))

    def report_format(self) -> str:
        fmt = (self.get("report", "format") or "tsv").lower()
        if fmt not in ("tsv", "json"):
            raise ValidationError(f"[report] format must be tsv or json, got {fmt!r}")
        return fmt

    def reload(self) -> None:
        self._parser = configparser.ConfigParser()
        self._load()


_config: Optional[Config] = None


def get_config() -> Config:
    """Process-wide settings, created on first use."""
    global _config
    if _config is None:
        _config = Config()
    return _config


SAMPLE_CONFIG = """# orientnet settings
# Environment variables win over ./.orientnet.conf, which wins over ~/.orientnet.conf.

[oracle]
# Exhaustive oracles refuse instances beyond these sizes.
# Also ORIENTNET_ORACLE_MAX_EDGES / ORIENTNET_ORACLE_MAX_VERTICES
# max_edges = 20
# max_vertices = 16

[runtime]
# Worker threads for enumeration loops; results do not depend on it.
# threads = 1

[report]
# tsv or json
# format = tsv
"""


def create_sample_config(path: Optional[Path] = None) -> str:
    """Return the commented sample, writing it to ``path`` when given."""
    if path is not None:
        path.write_text(SAMPLE_CONFIG, encoding="utf-8")
    return SAMPLE_CONFIG
