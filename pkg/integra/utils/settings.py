# Library imports
from typing import Literal
from pydantic_settings import BaseSettings, SettingsConfigDict


class IntegraSettings(BaseSettings):
    """Environment configuration. Only diagnostics colouring is configurable."""

    model_config = SettingsConfigDict(env_prefix="INTEGRA_", extra="ignore")

    color: Literal["auto", "always", "never"] = "auto"


def get_settings() -> IntegraSettings:
    return IntegraSettings()
