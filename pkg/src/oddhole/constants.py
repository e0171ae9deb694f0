import os

from .errors import ConfigError

# size guards; flags win over env vars, env vars win over these
GREAT_PYRAMID_MAX_N = 10
ORACLE_MAX_N = 16
SUBSET_ORACLE_MAX_N = 9
PYRAMID_SEARCH_MAX_N = 12

GREAT_PYRAMID_MAX_N_ENV = "ODDHOLE_GREAT_PYRAMID_MAX_N"
ORACLE_MAX_N_ENV = "ODDHOLE_ORACLE_MAX_N"

MIN_ODD_HOLE = 5

EXIT_OK = 0
EXIT_INVALID_WITNESS = 1
EXIT_PARSE_ERROR = 2
EXIT_GUARD_REFUSAL = 3


def _env_int(name, default):
    value = os.environ.get(name)
    if value is None or value.strip() == "":
        return default
    try:
        parsed = int(value)
    except ValueError:
        raise ConfigError(f"${name} must be a positive integer, got {value!r}") from None
    if parsed <= 0:
        raise ConfigError(f"${name} must be a positive integer, got {parsed}")
    return parsed


def great_pyramid_max_n():
    return _env_int(GREAT_PYRAMID_MAX_N_ENV, GREAT_PYRAMID_MAX_N)


def oracle_max_n():
    return _env_int(ORACLE_MAX_N_ENV, ORACLE_MAX_N)
