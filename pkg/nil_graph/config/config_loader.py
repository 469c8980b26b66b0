import os
import json

from ..errors import ConfigError


def _get_home_dir():
    """Get the nil_graph data directory (e.g. ~/.nil_graph).

    The NILGRAPH_HOME environment variable relocates it, which is how the
    test suite keeps its configuration out of the real home directory.
    """
    override = os.environ.get("NILGRAPH_HOME")
    if override:
        return override
    return os.path.join(os.path.expanduser("~"), ".nil_graph")


def _get_user_data_dir():
    """Get the config directory inside the data directory.

    Returns path like: ~/.nil_graph/config
    """
    data_dir = os.path.join(_get_home_dir(), "config")
    os.makedirs(data_dir, exist_ok=True)
    return data_dir


def get_config_path():
    """Get the path to the config.json configuration file"""
    override = os.environ.get("NILGRAPH_CONFIG")
    if override:
        return override
    return os.path.join(_get_user_data_dir(), "config.json")


def get_log_dir():
    """Get the directory holding nil_graph.log.

    Returns path like: ~/.nil_graph/logs
    """
    log_dir = os.path.join(_get_home_dir(), "logs")
    os.makedirs(log_dir, exist_ok=True)
    return log_dir


DEFAULT_PRODUCTS = [
    "Z2xZ2",
    "Z2xZ3",
    "Z3xZ3",
    "Z4xZ2",
    "Z4xZ3",
    "Z2xZ9",
    "Z8xZ3",
    "Z3xZ5",
    "Z2xZ2xZ2",
    "GF(2,2)xZ3",
    "Z4xGF(2,2)",
]

DEFAULT_MATRICES = ["M2(Z2)", "M2(Z3)"]

DEFAULT_QUOTIENTS = ["Q(Z12)", "Q(Z8)", "Q(Z4xZ9)"]


def get_default_families():
    """Get the ring families scanned when no families file is given

    Returns:
        dict: Families block with Z_n range, GF bound and explicit spec lists
    """
    return {
        "zn_range": [2, 200],
        "gf_max_order": 343,
        "products": list(DEFAULT_PRODUCTS),
        "matrices": list(DEFAULT_MATRICES),
        "quotients": list(DEFAULT_QUOTIENTS),
        "specs": [],
    }


def get_default_config():
    """Get the default configuration settings

    Returns:
        dict: Default configuration with desk-scale search limits
    """
    return {
        "max_order": 4096,
        "exact_dominating_cap": 512,
        "dominating_time_limit": 120.0,
        "axiom_exhaustive_limit": 256,
        "table_limit": 1024,
        "jobs": 1,
        "log_to_file": False,
        "families": get_default_families(),
    }


def ensure_config_exists():
    """Ensure the configuration file exists, create with defaults if not

    Returns:
        bool: True if config exists or was created successfully, False on error
    """
    config_path = get_config_path()

    if not os.path.exists(config_path):
        if not save_config(get_default_config()):
            return False

    return True


def load_config():
    """Load settings from config.json, filling in defaults for missing keys"""
    config = get_default_config()
    config_path = get_config_path()

    if not os.path.exists(config_path):
        return config

    try:
        with open(config_path, "r", encoding="utf-8") as f:
            stored = json.load(f)
    except (json.JSONDecodeError, IOError):
        return config

    if isinstance(stored, dict):
        config.update(stored)
    return config


def save_config(config_data):
    """Save settings to config.json

    Args:
        config_data (dict): Configuration data to save

    Returns:
        bool: True if save was successful, False otherwise
    """
    config_path = get_config_path()

    try:
        parent = os.path.dirname(config_path)
        if parent:
            os.makedirs(parent, exist_ok=True)
        with open(config_path, "w", encoding="utf-8") as f:
            json.dump(config_data, f, indent=4, ensure_ascii=False)
        return True
    except IOError:
        return False


def _get_int(key):
    config = load_config()
    try:
        return int(config.get(key, get_default_config()[key]))
    except (TypeError, ValueError):
        return int(get_default_config()[key])


def get_max_order():
    """Get the largest ring order the scans and harness will build.

    NILGRAPH_MAX_ORDER in the environment wins over the config file.

    Returns:
        int: Maximum ring order
    """
    override = os.environ.get("NILGRAPH_MAX_ORDER")
    if override:
        try:
            return int(override)
        except ValueError:
            raise ConfigError(f"NILGRAPH_MAX_ORDER is not an integer: {override!r}")
    return _get_int("max_order")


def get_exact_dominating_cap():
    """Largest ring order for which the exact dominating search runs."""
    return _get_int("exact_dominating_cap")


def get_dominating_time_limit():
    """Seconds one CP-SAT solve of the dominating search may take."""
    config = load_config()
    try:
        return float(config.get("dominating_time_limit", 120.0))
    except (TypeError, ValueError):
        return 120.0


def get_axiom_exhaustive_limit():
    """Largest ring order whose axioms are checked exhaustively."""
    return _get_int("axiom_exhaustive_limit")


def get_table_limit():
    """Largest ring order whose add/mul tables are memoized."""
    return _get_int("table_limit")


def get_jobs():
    """Default worker count for scans and the verification suite."""
    return max(1, _get_int("jobs"))


def get_log_to_file():
    """Whether log lines are also appended to the log file."""
    return bool(load_config().get("log_to_file", False))


def get_families():
    """Get the families block, falling back to the defaults per key

    Returns:
        dict: Families block (see get_default_families)
    """
    families = get_default_families()
    stored = load_config().get("families", {})
    if isinstance(stored, dict):
        families.update(stored)
    return families


def load_families_file(path):
    """Load a families file given on the command line

    A JSON file holds either a full config with a "families" block or the
    block itself; any other file lists one ring spec per line ("#" comments).

    Args:
        path (str): Path to the families file

    Returns:
        dict: Families block with every key present
    """
    try:
        with open(path, "r", encoding="utf-8") as f:
            content = f.read()
    except IOError as e:
        raise ConfigError(f"cannot read families file {path}: {e}")

    families = {
        "zn_range": None,
        "gf_max_order": None,
        "products": [],
        "matrices": [],
        "quotients": [],
        "specs": [],
    }

    if path.endswith(".json"):
        try:
            data = json.loads(content)
        except json.JSONDecodeError as e:
            raise ConfigError(f"families file {path} is not valid JSON: {e}")
        block = data.get("families", data) if isinstance(data, dict) else None
        if not isinstance(block, dict):
            raise ConfigError(f"families file {path} has no families block")
        families.update(block)
        return families

    for line in content.splitlines():
        line = line.split("#", 1)[0].strip()
        if line:
            families["specs"].append(line)
    return families
