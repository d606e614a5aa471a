import os
from dotenv import load_dotenv

# Load environment variables from .env file
load_dotenv()


def _int_env(name: str, default: int) -> int:
    value = os.getenv(name, '')
    if not value.strip():
        return default
    try:
        return int(value)
    except ValueError:
        raise ValueError(f"{name} must be an integer, got {value!r}")


TOOL_NAME = 'springer-kit'
TOOL_VERSION = '0.3.0'

# Enumeration bounds
MAX_N = _int_env('SPRINGER_KIT_MAX_N', 10)
TABLEAU_MAX_N = _int_env('SPRINGER_KIT_TABLEAU_MAX_N', 12)
PARSE_MAX_N = _int_env('SPRINGER_KIT_PARSE_MAX_N', 10000)

# Oracle bounds (exact elimination gets slow past these)
COMMUTANT_MAX_N = _int_env('SPRINGER_KIT_COMMUTANT_MAX_N', 10)
FLAG_MAX_N = _int_env('SPRINGER_KIT_FLAG_MAX_N', 9)

# Default worker count for sweeps
JOBS = _int_env('SPRINGER_KIT_JOBS', 1)
