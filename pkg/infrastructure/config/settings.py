import os
from typing import List
from dotenv import load_dotenv

# Load environment variables from .env file
load_dotenv()


class Settings:
    """Application settings."""

    # Environment
    ENVIRONMENT: str = os.getenv("ENVIRONMENT", "development")
    LOG_LEVEL: str = os.getenv("LOG_LEVEL", "WARNING")
    LOG_FORMAT: str = os.getenv("LOG_FORMAT", "%(asctime)s [%(levelname)8s] %(name)s: %(message)s")

    # Analysis limits
    DEFAULT_WITNESS_DEPTH: int = int(os.getenv("DEFAULT_WITNESS_DEPTH", "3"))
    MAX_WITNESS_DEPTH: int = int(os.getenv("MAX_WITNESS_DEPTH", "8"))
    DEFAULT_FUSION_STAGES: int = int(os.getenv("DEFAULT_FUSION_STAGES", "5"))
    MAX_FUSION_STAGES: int = int(os.getenv("MAX_FUSION_STAGES", "64"))

    # Corpus generation
    CORPUS_SEED: int = int(os.getenv("CORPUS_SEED", "0"))
    CORPUS_COUNT: int = int(os.getenv("CORPUS_COUNT", "100"))
    CORPUS_MAX_DEPTH: int = int(os.getenv("CORPUS_MAX_DEPTH", "3"))
    CORPUS_MAX_PATTERN: int = int(os.getenv("CORPUS_MAX_PATTERN", "2"))
    CORPUS_MAX_HEAD: int = int(os.getenv("CORPUS_MAX_HEAD", "2"))
    CORPUS_MAX_PARTS: int = int(os.getenv("CORPUS_MAX_PARTS", "4"))
    CORPUS_MAX_WORKERS: int = int(os.getenv("CORPUS_MAX_WORKERS", "4"))
    CORPUS_WITNESS_DEPTH: int = int(os.getenv("CORPUS_WITNESS_DEPTH", "5"))

    # Output
    OUTPUT_FORMAT: str = os.getenv("OUTPUT_FORMAT", "text")

    # HTTP surface
    API_TITLE: str = os.getenv("API_TITLE", "Scattered Copies")
    API_VERSION: str = os.getenv("API_VERSION", "1.0.0")
    CORS_ORIGINS: str = os.getenv("CORS_ORIGINS", "http://localhost:3000")

    @property
    def is_development(self) -> bool:
        """Check if running in development environment."""
        return self.ENVIRONMENT.lower() in ["development", "dev", "local"]

    @property
    def cors_origins_list(self) -> List[str]:
        return [origin.strip() for origin in self.CORS_ORIGINS.split(",") if origin.strip()]


# Create a global settings instance
settings = Settings()
