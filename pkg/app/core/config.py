"""Application configuration"""

from pydantic_settings import BaseSettings, SettingsConfigDict
from typing import Optional
from functools import lru_cache


class Settings(BaseSettings):
    APP_NAME: str = "lrpictures - Admissible Pictures and Littlewood-Richardson Crystals"
    APP_VERSION: str = "1.0.0"

    LOG_LEVEL: str = "WARNING"
    LOG_FILE: Optional[str] = None
    LOG_MAX_BYTES: int = 10485760
    LOG_BACKUP_COUNT: int = 5

    # Enumeration caps
    MAX_ORDERS: int = 10000
    MAX_PICTURE_SIZE: int = 8

    # Sweep caps; budget flags above these need --force
    MAX_NU_SIZE: int = 8
    MAX_ORDER_SWEEP_SIZE: int = 5
    MAX_NU_ROWS: int = 4
    MAX_ENTRY: int = 4

    # Worker pool for verification sweeps (1 runs inline)
    WORKERS: int = 1

    model_config = SettingsConfigDict(
        env_file=".env",
        env_prefix="LRP_",
        case_sensitive=True,
        extra="ignore"
    )


@lru_cache()
def get_settings() -> Settings:
    return Settings()


settings = get_settings()
