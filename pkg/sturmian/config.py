from dataclasses import dataclass


@dataclass
class SturmianConfig:
    """Configuration defaults for table rendering, verification and SVG output."""
    digits: int = 6
    svg_digits: int = 6
    svg_width: int = 800
    svg_height: int = 160
    svg_radius: int = 150
    svg_max_period: int = 200
    oracle_safety_factor: int = 20
    verify_max_letters: int = 20_000_000
    verify_jobs: int = 1
    default_alpha: str = "fib"
    default_convention: str = "zero-in-b"
    lagrange_depth: int = 60
    verbose: bool = False
    level: str = "INFO"
