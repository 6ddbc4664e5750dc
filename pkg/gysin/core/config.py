import logging
from typing import Optional

from pydantic_settings import BaseSettings, SettingsConfigDict


class Settings(BaseSettings):
    # Service
    project_name: str = "Gysin Pushforward Calculator"
    app_version: str = "1.0.0"

    # Computation
    max_terms: int = 10_000_000  # ceiling on the size of any expanded product
    chunk_size: Optional[int] = None  # split extraction sums into chunks of this many terms
    max_exponent: int = 1000  # largest literal exponent accepted in an expression

    # Output
    default_format: str = "text"

    # Logging
    log_level: str = "INFO"
    log_file: Optional[str] = None

    model_config = SettingsConfigDict(env_file=".env", env_prefix="GYSIN_")


settings = Settings()


def setup_logging(level: Optional[str] = None) -> None:
    """Configure root logging for the CLI and the API."""
    handlers = [logging.StreamHandler()]  # Console output
    if settings.log_file:
        handlers.append(logging.FileHandler(settings.log_file))  # File output

    logging.basicConfig(
        level=(level or settings.log_level).upper(),
        format='%(asctime)s - %(name)s - %(levelname)s - %(message)s',
        handlers=handlers,
        force=True,
    )
