from pydantic import field_validator
from pydantic_settings import BaseSettings
from typing import List

class Settings(BaseSettings):
    """Configuration du moteur de coloration et du banc de vérification"""
    # Parallélisme (HARNESS_JOBS, surchargé par --jobs)
    harness_jobs: int = 1

    # Budgets des solveurs exacts
    chromatic_dp_max_order: int = 20
    chromatic_node_budget: int = 2_000_000
    partition_budget: int = 200_000
    imax_branch_budget: int = 100_000
    bruteforce_perfection_max_order: int = 15
    rainbow_sample_size: int = 10_000
    max_counterexamples: int = 25
    # Graphes tirés par la recherche de conjecture aux ordres 8-9
    conjecture_random_count: int = 10_000

    log_level: str = "INFO"
    api_host: str = "0.0.0.0"
    api_port: int = 8000
    api_debug: bool = False
    cors_origins: List[str] = ["*"]

    model_config = {
        "env_file": ".env",
        "case_sensitive": False
    }

    @field_validator(
        "harness_jobs",
        "chromatic_dp_max_order",
        "chromatic_node_budget",
        "partition_budget",
        "imax_branch_budget",
        "bruteforce_perfection_max_order",
        "rainbow_sample_size",
        "max_counterexamples",
        "conjecture_random_count",
    )
    @classmethod
    def _positive(cls, value: int) -> int:
        if value < 1:
            raise ValueError("les budgets doivent être strictement positifs")
        return value

settings = Settings()
