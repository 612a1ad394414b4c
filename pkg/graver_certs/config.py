from functools import lru_cache
from pathlib import Path

from pydantic import Field, model_validator
from pydantic_settings import (
    BaseSettings,
    PydanticBaseSettingsSource,
    SettingsConfigDict,
    YamlConfigSettingsSource,
)


PACKAGE_ROOT = Path(__file__).resolve().parent.parent
CONFIG_PATH = PACKAGE_ROOT / "config" / "graver.yaml"

_LOG_LEVELS = {"CRITICAL", "ERROR", "WARNING", "INFO", "DEBUG"}


class Settings(BaseSettings):
    # -------------------------
    # Graver completion caps
    # -------------------------
    max_elements: int = Field(100_000)
    max_pair_reductions: int = Field(10_000_000)

    # -------------------------
    # Enumeration budgets
    # -------------------------
    oracle_max_vectors: int = Field(5_000_000)
    max_enumerated_circuits: int = Field(1_000_000)

    # -------------------------
    # Logging
    # -------------------------
    log_level: str = Field("WARNING")
    log_format: str = Field("%(asctime)s %(levelname)s %(name)s: %(message)s")

    model_config = SettingsConfigDict(
        yaml_file=CONFIG_PATH,
        yaml_file_encoding="utf-8",
        extra="ignore",
    )

    @classmethod
    def settings_customise_sources(
        cls,
        settings_cls: type[BaseSettings],
        init_settings: PydanticBaseSettingsSource,
        env_settings: PydanticBaseSettingsSource,
        dotenv_settings: PydanticBaseSettingsSource,
        file_secret_settings: PydanticBaseSettingsSource,
    ) -> tuple[PydanticBaseSettingsSource, ...]:
        # Constructor kwargs win over the YAML file; the environment is never read.
        return (init_settings, YamlConfigSettingsSource(settings_cls))

    @model_validator(mode="after")
    def _validate_caps(self) -> "Settings":
        for key in (
            "max_elements",
            "max_pair_reductions",
            "oracle_max_vectors",
            "max_enumerated_circuits",
        ):
            value = getattr(self, key)
            if value <= 0:
                raise ValueError(f"{key}={value!r} must be positive")
        return self

    @model_validator(mode="after")
    def _validate_log_level(self) -> "Settings":
        level = self.log_level.upper()
        if level not in _LOG_LEVELS:
            raise ValueError(f"log_level={self.log_level!r} is not a logging level")
        self.log_level = level
        return self


@lru_cache()
def get_settings() -> Settings:
    return Settings()


settings: Settings = get_settings()
