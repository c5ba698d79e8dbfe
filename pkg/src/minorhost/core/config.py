"""Application configuration."""
import json
from pathlib import Path
from typing import Any, Optional

from pydantic import BaseModel, ConfigDict
from pydantic_settings import BaseSettings, SettingsConfigDict


class Settings(BaseSettings):
    """Application settings."""

    model_config = SettingsConfigDict(
        env_file=".env",
        env_file_encoding="utf-8",
        env_prefix="MINORHOST_",
        case_sensitive=False,
        extra="ignore",
    )

    # Application
    app_name: str = "minorhost"
    app_version: str = "0.1.0"
    debug: bool = False

    # Search budgets (search-tree nodes, not wall clock)
    search_budget: int = 10_000_000
    embedding_budget: int = 2_000_000
    canonical_budget: int = 1_000_000

    # Size caps
    longest_path_cap: int = 25
    catalog_member_cap: int = 30
    catalog_max_vertices: int = 8
    catalog_max_graphs: int = 5_000
    model_max_tree_vertices: int = 12
    model_max_count: int = 20_000

    # Corpus runs
    seed: int = 42
    corpus_workers: int = 1

    # Unspecified tree-width / path constants w(k), p(k) used by f_bound
    wheel_width_constants: dict[int, int] = {}
    wheel_path_constants: dict[int, int] = {}

    # Logging
    log_level: str = "INFO"
    log_format: str = "json"  # json or console


def load_settings(config_path: Optional[str] = None) -> Settings:
    """Build settings from the environment, overridden by a JSON config file."""
    if not config_path:
        return Settings()
    overrides = json.loads(Path(config_path).read_text())
    return Settings(**overrides)


# Global settings instance
settings = Settings()


class RunConfig(BaseModel):
    """Settings for one CLI run: settings defaults overridden by flags."""

    model_config = ConfigDict(frozen=True)

    seed: int
    search_budget: int
    embedding_budget: int
    canonical_budget: int
    longest_path_cap: int
    catalog_member_cap: int
    workers: int = 1
    state: Optional[str] = None
    output: Optional[str] = None
    inject_mutant: bool = False

    @classmethod
    def from_settings(cls, source: Settings, **flags: Any) -> "RunConfig":
        values: dict[str, Any] = {
            "seed": source.seed,
            "search_budget": source.search_budget,
            "embedding_budget": source.embedding_budget,
            "canonical_budget": source.canonical_budget,
            "longest_path_cap": source.longest_path_cap,
            "catalog_member_cap": source.catalog_member_cap,
            "workers": source.corpus_workers,
        }
        values.update({k: v for k, v in flags.items() if v is not None})
        return cls(**values)

    def apply(self, target: Optional[Settings] = None) -> None:
        """Push budgets and caps into ``target`` (the global settings by default)."""
        target = settings if target is None else target
        for name in (
            "search_budget",
            "embedding_budget",
            "canonical_budget",
            "longest_path_cap",
            "catalog_member_cap",
        ):
            setattr(target, name, getattr(self, name))
        target.seed = self.seed
