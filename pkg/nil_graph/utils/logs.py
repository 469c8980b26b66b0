import os
import sys

from ..config.config_loader import get_log_dir, get_log_to_file


def get_log_path():
    return os.path.join(get_log_dir(), "nil_graph.log")


def write_log(log_msg):
    with open(get_log_path(), "a", encoding="utf-8") as f:
        f.write(log_msg + "\n")


def log(tag, message):
    """Print a tagged line like "[SCAN] 19 rings" to stderr.

    stdout is reserved for command output (JSON, CSV, DOT), so log lines go
    to stderr and, when log_to_file is set, to the log file as well.
    """
    line = f"[{tag}] {message}"
    print(line, file=sys.stderr)
    if get_log_to_file():
        try:
            write_log(line)
        except IOError:
            pass
