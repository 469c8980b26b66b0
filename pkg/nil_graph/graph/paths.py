"""
Explicit paths in nil clean graphs: the Hamiltonian path of G_N(Z_n) and a
walk from any matrix over Z_m down to the zero matrix.
"""

from typing import List, Optional, Sequence, Tuple

import numpy as np

from ..errors import NilGraphError
from ..rings.finite_ring import FiniteRing
from ..rings.matrix import MatrixRing
from .nil_clean_graph import NilCleanGraph


def hamiltonian_path_zn(n: int) -> List[int]:
    """0, 1, n-1, 2, n-2, ... through all of Z_n.

    Consecutive sums alternate 1, 0, 1, ... which are nil clean in every Z_n.
    """
    if n < 2:
        raise NilGraphError(f"Z_{n} has no Hamiltonian path to build (n >= 2)")
    path = [0]
    low, high = 1, n - 1
    while low <= high:
        path.append(low)
        low += 1
        if low <= high:
            path.append(high)
            high -= 1
    return path


def _shortcut(walk: Sequence[int]) -> List[int]:
    """Drop repeated vertices from a walk, keeping it a walk in the same graph.

    When a vertex comes back, the loop between its two visits is cut out.
    """
    path: List[int] = []
    position = {}
    for v in walk:
        if v in position:
            for dropped in path[position[v] + 1 :]:
                del position[dropped]
            del path[position[v] + 1 :]
            continue
        position[v] = len(path)
        path.append(v)
    return path


def _diagonal_steps(ring: MatrixRing, diagonal: Sequence[int]) -> List[int]:
    """Diagonal matrices from diag(diagonal) to 0.

    Each entry walks back along the Z_m Hamiltonian path to 0 and then stays
    at 0. Consecutive sums are diagonal with entries in {0, 1}, hence
    idempotent.
    """
    order = hamiltonian_path_zn(ring.m)
    place = {v: i for i, v in enumerate(order)}
    tracks = [order[place[d] :: -1] for d in diagonal]
    length = max(len(t) for t in tracks)
    steps = []
    for t in range(length):
        entries = [track[t] if t < len(track) else 0 for track in tracks]
        steps.append(ring.from_rows(np.diag(entries)))
    return steps


def matrix_path_to_zero(ring: MatrixRing, a: int) -> List[int]:
    """A path from a to 0 in G_N(M_d(Z_m)).

    a is first joined to A1, minus the lower triangle of a with its diagonal
    (their sum is strictly upper triangular), then to A2, the diagonal of a
    (A1 + A2 is strictly lower triangular). From there the diagonal entries
    are walked to 0 independently.
    """
    if not isinstance(ring, MatrixRing):
        raise NilGraphError(f"{ring.name} is not a matrix ring over Z_m")
    rows = np.array(ring.to_rows(a), dtype=np.int64)
    first = ring.from_rows(-np.tril(rows))
    second = ring.from_rows(np.diag(np.diag(rows)))
    walk = [int(a), first, second] + _diagonal_steps(ring, [int(v) for v in np.diag(rows)])
    return _shortcut(walk)


def path_violation(g: NilCleanGraph, path: Sequence[int]) -> Optional[Tuple[int, int]]:
    """First consecutive pair that is not an edge, or a repeated vertex as (v, v)."""
    seen = set()
    for v in path:
        if v in seen:
            return (v, v)
        seen.add(v)
    for a, b in zip(path, path[1:]):
        if not g.has_edge(a, b):
            return (a, b)
    return None


def validate_path(g: NilCleanGraph, path: Sequence[int]) -> bool:
    return path_violation(g, path) is None


def path_sums(ring: FiniteRing, path: Sequence[int]) -> List[int]:
    return [int(ring.add(a, b)) for a, b in zip(path, path[1:])]
