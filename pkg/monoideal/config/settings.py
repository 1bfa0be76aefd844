from typing import Any, Dict

from pydantic import Field, field_validator
from pydantic_settings import BaseSettings, SettingsConfigDict
from sympy import isprime


class Settings(BaseSettings):
    """Application settings."""

    # Logging settings
    LOG_LEVEL: str = Field(default="WARNING")
    LOG_FORMAT: str = Field(
        default="%(asctime)s - %(name)s - %(levelname)s - %(message)s"
    )

    # Algebra settings
    CHARACTERISTIC: int = Field(default=0, ge=0)
    KMAX: int = Field(default=5, ge=1)
    ORACLE_KMAX: int = Field(default=4, ge=1)

    # Resource limits
    MAX_TERMS: int = Field(default=1_000_000, ge=1)

    # Sampling
    SEED: int = Field(default=0)
    ORDER_SAMPLE_SIZE: int = Field(default=50, ge=1)

    # Output
    OUTPUT_FORMAT: str = Field(default="text")

    model_config = SettingsConfigDict(
        env_file=".env",
        env_prefix="MONOIDEAL_",
        case_sensitive=True,
        validate_assignment=True,
        extra="ignore",
    )

    @field_validator("CHARACTERISTIC")
    @classmethod
    def _characteristic_is_zero_or_prime(cls, value: int) -> int:
        if value != 0 and not isprime(value):
            raise ValueError(f"characteristic must be 0 or a prime, got {value}")
        return value

    @field_validator("OUTPUT_FORMAT")
    @classmethod
    def _known_format(cls, value: str) -> str:
        if value not in ("text", "json"):
            raise ValueError(f"unknown output format {value!r}")
        return value

    def overrides(self, **changes: Any) -> Dict[str, Any]:
        """Apply non-None overrides and return the previous values."""
        previous = {}
        try:
            for name, value in changes.items():
                if value is None:
                    continue
                previous[name] = getattr(self, name)
                setattr(self, name, value)
        except ValueError:
            for name, value in previous.items():
                setattr(self, name, value)
            raise
        return previous


# Create settings instance
settings = Settings()
