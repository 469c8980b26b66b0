"""
Ring families: turn a families block into the list of ring specs to check.

A families block has the keys

    zn_range      [a, b]   Z_a .. Z_b
    gf_max_order  m        GF(p^k), k >= 2, p^k <= m (prime fields are Z_p)
    products, matrices, quotients, specs   explicit spec strings
"""

import os
from typing import List, Optional, Tuple

from sympy import primerange

from ..config.config_loader import get_families, load_families_file
from ..errors import ConfigError
from ..rings.ring_spec import format_spec, parse_spec, split_spec_list

EXPLICIT_KEYS = ("products", "matrices", "quotients", "specs")


def parse_range(text: str) -> Tuple[int, int]:
    """"2..20" -> (2, 20)."""
    try:
        low, high = (int(part) for part in text.split(".."))
    except ValueError:
        raise ConfigError(f"expected a range like 2..20, got {text!r}")
    if low > high:
        raise ConfigError(f"empty range {text!r}")
    return low, high


def gf_specs(max_order: int) -> List[str]:
    """GF(p,k) with k >= 2 and p^k <= max_order, by order then p."""
    specs = []
    for p in primerange(2, int(max_order**0.5) + 1):
        k = 2
        while p**k <= max_order:
            specs.append((p**k, p, f"GF({p},{k})"))
            k += 1
    return [s for _, _, s in sorted(specs)]


def family_specs(families: dict) -> List[str]:
    """Canonical spec strings of every ring in a families block, duplicates removed.

    Raises:
        RingSpecError: An explicit spec does not parse.
    """
    specs = []
    zn_range = families.get("zn_range")
    if zn_range:
        low, high = zn_range
        specs.extend(f"Z{n}" for n in range(int(low), int(high) + 1))
    gf_max_order = families.get("gf_max_order")
    if gf_max_order:
        specs.extend(gf_specs(int(gf_max_order)))
    for key in EXPLICIT_KEYS:
        specs.extend(format_spec(parse_spec(s)) for s in families.get(key) or [])

    seen = set()
    unique = []
    for s in specs:
        if s not in seen:
            seen.add(s)
            unique.append(s)
    return unique


def resolve_families(argument: Optional[str]) -> dict:
    """Families block from a --families argument.

    None means the configured families; an existing path is a families file;
    anything else is a comma separated spec list such as "Z6, GF(2,2)".
    """
    if argument is None:
        return get_families()
    if os.path.isfile(argument):
        return load_families_file(argument)
    return {"specs": split_spec_list(argument)}


def families_for_scan(
    zn_range: Optional[str] = None,
    gf_bound: Optional[int] = None,
    list_path: Optional[str] = None,
) -> dict:
    """Families block for the scan subcommand; the configured one when nothing is given."""
    if zn_range is None and gf_bound is None and list_path is None:
        return get_families()
    families = {"specs": []}
    if zn_range is not None:
        families["zn_range"] = list(parse_range(zn_range))
    if gf_bound is not None:
        families["gf_max_order"] = gf_bound
    if list_path is not None:
        listed = load_families_file(list_path)
        for key, value in listed.items():
            if key in EXPLICIT_KEYS:
                families.setdefault(key, [])
                families[key] = list(families[key]) + list(value or [])
            elif value is not None:
                families[key] = value
    return families
