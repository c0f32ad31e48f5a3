from pathlib import Path

DEFAULT_LEVEL: int = 5
DEFAULT_SEED: int = 0
DEFAULT_SAMPLES: int = 1000
DEFAULT_PSI_SAMPLES: int = 20
DEFAULT_PROBE_SAMPLES: int = 100
DEFAULT_ORACLE_LEVEL: int = 3
DEFAULT_EXHAUSTIVE_LEVEL: int = 3
DEFAULT_COUNTING_LEVEL: int = 4
DEFAULT_CONTINUITY_LEVEL: int = 4
DEFAULT_TAIL_ORBIT_LEVEL: int = 2
DEFAULT_AMPLIFICATION_CAP: int = 2 ** 10
DEFAULT_GRID: str = "-1:1:4"
DEFAULT_REFINEMENTS: int = 3
DEFAULT_CYLINDER_FAMILY_SIZE: int = 6
DEFAULT_MAX_WORKERS: int = 5
DEFAULT_BIRKHOFF_STEPS: int = 10 ** 6
DEFAULT_SEARCH_LENGTH: int = 14
DEFAULT_QUICK: bool = False
DEFAULT_INSTANCES_FOLDER: Path = Path(__file__).resolve().parents[2].joinpath("resources", "instances")
DEFAULT_VERIFICATION_CATALOGUE: Path = Path(__file__).resolve().parents[2].joinpath("resources", "verification.yaml")
