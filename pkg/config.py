"""
Configuration management for spinlat
"""
import os
import sys

DEFAULT_WEYL_BOUND = 100000
DEFAULT_SINGULAR_EPS = 1e-12
DEFAULT_FLOAT_DIGITS = 15
DEFAULT_SELFTEST_SEED = 20240101
DEFAULT_DATA_DIR = os.path.join(os.path.dirname(os.path.abspath(__file__)), "data")


def _read_env(name, default, cast):
    raw = os.environ.get(name, "").strip()
    if not raw:
        return default
    try:
        return cast(raw)
    except ValueError:
        print(f"[Spinlat] Ignoring malformed {name}={raw!r}, using {default}", file=sys.stderr)
        return default


def get_weyl_bound():
    """
    Get the largest Weyl group the enumerator will build.

    Environment variable: SPINLAT_WEYL_BOUND
    Default: 100000
    """
    return _read_env("SPINLAT_WEYL_BOUND", DEFAULT_WEYL_BOUND, int)


def get_singular_threshold():
    """
    Get the modulus below which a numerical denominator counts as singular.

    Environment variable: SPINLAT_SINGULAR_EPS
    Default: 1e-12
    """
    return _read_env("SPINLAT_SINGULAR_EPS", DEFAULT_SINGULAR_EPS, float)


def get_float_digits():
    """
    Get the number of significant digits used when reporting floats.

    Environment variable: SPINLAT_FLOAT_DIGITS
    Default: 15
    """
    return _read_env("SPINLAT_FLOAT_DIGITS", DEFAULT_FLOAT_DIGITS, int)


def get_data_dir():
    """
    Get the directory holding the bundled datum fixtures.

    Environment variable: SPINLAT_DATA_DIR
    Default: the data/ directory next to this file

    To try your own fixtures, set:
    export SPINLAT_DATA_DIR=/path/to/my/data
    """
    return os.environ.get("SPINLAT_DATA_DIR", DEFAULT_DATA_DIR)


def get_selftest_seed():
    """
    Get the seed for the random corpora drawn by selftest.

    Environment variable: SPINLAT_SELFTEST_SEED
    Default: 20240101
    """
    return _read_env("SPINLAT_SELFTEST_SEED", DEFAULT_SELFTEST_SEED, int)
