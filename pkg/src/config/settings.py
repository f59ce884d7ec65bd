from pydantic_settings import BaseSettings
from typing import Dict, List
from pydantic import Field

class Settings(BaseSettings):
    PYTHON_ENV: str = Field("development")
    LOG_LEVEL: str = Field("INFO")

    DEFAULT_CALCULUS: str = Field("vaccs")
    DEFAULT_VAL: List[str] = Field(default_factory=lambda: ["0", "1"])
    UNIT_VALUE: str = "()"

    # Exploration limits
    EXPLORATION_BOUND: int = Field(10_000)
    MAIL_CAPACITY: int = Field(3)

    OUTPUT_FORMAT: str = Field("human")
    SCHEMA_VERSION: str = "1"

    # Polarities that are non-blocking in each calculus
    CALCULUS_NONBLOCKING: Dict[str, List[str]] = {
        "ccs": [],
        "accs": ["!"],
        "vccs": [],
        "vaccs": ["!"],
    }

    # Abstraction presets accepted by --abstraction
    ABSTRACTION_PRESETS: Dict[str, str] = {
        "ccs": "phi = id, delta = id, H = {}",
        "accs": "phi = id, delta = id, H = outputs",
        "vccs": "phi: c!v -> c!v, c?v -> c?; delta: c!v -> c!, c? -> c?; H = {}",
        "vaccs": "phi: c?v -> c?, delta = id, H = outputs",
        "identity": "phi = id, delta = id, H of the calculus",
        "constant": "phi constant, delta = id, H of the calculus",
    }

    class Config:
        env_file = ".env"
        case_sensitive = True

# Create a global settings instance
settings = Settings()
