"""
Application Configuration
"""

import os
from typing import Optional
from pydantic_settings import BaseSettings, SettingsConfigDict

class Settings(BaseSettings):
    """Application settings"""
    
    # Logging
    LOG_LEVEL: str = os.getenv("LOG_LEVEL", "INFO")
    LOG_FILE: Optional[str] = os.getenv("LOG_FILE")
    
    # Polynomial rings
    DEFAULT_ORDER: str = "grevlex"
    
    # Dimension search enumerates all variable subsets
    MAX_DIMENSION_VARIABLES: int = 12
    
    # Minimal primes
    DECOMPOSE_MAX_DEPTH: int = 64
    
    # Cech engine
    MAX_CELLS: int = 1_000_000
    CECH_DEGREE_BOUND: int = 2
    
    # Corpus
    CORPUS_WORKERS: int = 4
    
    # Performance logging
    SLOW_COMPUTATION_SECONDS: float = 1.0
    
    model_config = SettingsConfigDict(env_file=".env", case_sensitive=True, extra="ignore")

settings = Settings()
