"""
Hirzebruch Gluing Configuration
===============================
Central configuration for sampling sizes, float tolerances and SVG rendering.
"""
from pydantic_settings import BaseSettings
from dotenv import load_dotenv

load_dotenv()

# ============================================================================
# GLUING DEFAULTS
# ============================================================================

# Shifts (j1, j2) of the component hearts; the gluing condition needs j1 = j2 + 1
DEFAULT_SHIFTS = (1, 0)

# Lower bound of the m=4 support constant max{3, 1 + e/2}
M4_SUPPORT_FLOOR = 3

# ============================================================================
# REPORT RENDERING
# ============================================================================

# Fraction of the w-extent where a wall away from the vertex starts
WALL_OFFSET = 0.25

# Decimal places kept for SVG coordinates
SVG_PRECISION = 3


class Settings(BaseSettings):
    default_seed: int = 20240601
    float_tolerance: float = 1e-9

    # self-check sample sizes
    mukai_parameter_draws: int = 300
    mukai_vectors_per_draw: int = 50
    twisted_mukai_draws: int = 50
    wall_draws_per_type: int = 200
    consistency_draws: int = 500
    factorization_draws: int = 500

    svg_size: int = 640
    svg_margin: int = 40
    svg_extent: int = 4

    sweep_workers: int = 1
    log_level: str = "WARNING"

    model_config = {"env_file": ".env", "env_prefix": "HIRZEBRUCH_", "extra": "ignore"}


settings = Settings()
