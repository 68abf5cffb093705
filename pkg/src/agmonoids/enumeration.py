"""Isomorph-free enumeration of commutative monoids and AG-monoids.

Two independent routes produce AG-monoids of a given order:

* the construction route enumerates commutative monoids with a compiled
  backtracking search, then twists each one by a representative of every
  conjugacy class of involutive automorphisms;
* the brute-force route fills AG-monoid tables cell by cell in pure Python,
  checking only the left invertive law, and never touches the twist.

Both keep exactly the tables equal to their own canonical form, so their
outputs can be compared as sets.
"""

from __future__ import annotations

import logging
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Callable, Optional, Sequence

import numpy as np

from . import _kernels
from .automorphisms import automorphism_group, conjugacy_classes_of_involutions
from .core import AlgebraError, CayleyTable, StructureKind, canonical_form

log = logging.getLogger(__name__)

MAX_ORDER = 9
BRUTEFORCE_GUARANTEED_ORDER = 5

#: ``progress(nodes_visited, tables_found)``; called after each finished branch
ProgressCallback = Callable[[int, int], None]


@dataclass(frozen=True)
class EnumerationResult:
    order: int
    kind: StructureKind
    tables: tuple[CayleyTable, ...]

    @property
    def count(self) -> int:
        return len(self.tables)


def default_workers() -> int:
    try:
        return max(1, len(os.sched_getaffinity(0)))
    except AttributeError:  # pragma: no cover - non-Linux
        return os.cpu_count() or 1


def _check_order(n: int) -> None:
    if not isinstance(n, (int, np.integer)) or not 1 <= n <= MAX_ORDER:
        raise AlgebraError(f"order must be in 1..{MAX_ORDER}, got {n!r}")


def _check_workers(workers: int) -> None:
    if workers < 1:
        raise AlgebraError(f"worker count must be >= 1, got {workers}")


def _run_branch(n: int, prefix: Sequence[int]) -> tuple[np.ndarray, int]:
    perms, cells, posflat, src = _kernels._search_tables(n)
    found, _, nodes = _kernels.search_commutative_monoids(
        n, perms, cells, posflat, src, np.asarray(prefix, dtype=np.int64), 0
    )
    return found, nodes


def _branch_prefixes(n: int, target: int) -> list[tuple[int, ...]]:
    """Surviving partial assignments at the shallowest depth giving ``target`` branches."""
    perms, cells, posflat, src = _kernels._search_tables(n)
    ncell = cells.shape[0]
    empty = np.empty(0, dtype=np.int64)
    prefixes = [()]
    for depth in range(1, ncell + 1):
        recs, _, _ = _kernels.search_commutative_monoids(n, perms, cells, posflat, src, empty, depth)
        prefixes = [tuple(int(v) for v in r) for r in recs]
        if len(prefixes) >= target:
            break
    return prefixes


_cm_cache: dict[int, tuple[CayleyTable, ...]] = {}


def _commutative_monoid_tables(
    n: int, workers: int, progress: Optional[ProgressCallback]
) -> tuple[CayleyTable, ...]:
    if n in _cm_cache and progress is None:
        return _cm_cache[n]
    if n == 1:
        tables = (CayleyTable([[0]]),)
    else:
        prefixes = _branch_prefixes(n, 8 * workers)
        log.debug("order %d: %d branches over %d workers", n, len(prefixes), workers)
        nodes = 0
        flats: list[tuple[int, ...]] = []

        def collect(found: np.ndarray, branch_nodes: int) -> None:
            nonlocal nodes
            nodes += branch_nodes
            flats.extend(tuple(int(v) for v in row) for row in found)
            if progress is not None:
                progress(nodes, len(flats))

        if workers == 1:
            for prefix in prefixes:
                collect(*_run_branch(n, prefix))
        else:
            with ProcessPoolExecutor(max_workers=workers) as pool:
                for found, branch_nodes in pool.map(_run_branch, [n] * len(prefixes), prefixes):
                    collect(found, branch_nodes)
        flats.sort()
        tables = tuple(CayleyTable.from_flat(f, n) for f in flats)
    _cm_cache[n] = tables
    return tables


def enumerate_commutative_monoids(
    n: int, workers: int = 1, progress: Optional[ProgressCallback] = None
) -> EnumerationResult:
    """All commutative monoids of order ``n`` up to isomorphism, identity at 0."""
    _check_order(n)
    _check_workers(workers)
    tables = _commutative_monoid_tables(n, workers, progress)
    return EnumerationResult(n, StructureKind.COMMUTATIVE_MONOID, tables)


def _nonassociative_twists(monoids: Sequence[CayleyTable]) -> list[tuple[int, ...]]:
    """Canonical twists of each monoid, one per involution conjugacy class."""
    if not monoids:
        return []
    n = monoids[0].order
    perms = _kernels.fixing_permutations(n, 0)
    out = []
    for m in monoids:
        classes = conjugacy_classes_of_involutions(automorphism_group(m))
        for alpha in classes.representatives:
            flat = np.fromiter(
                (x for a in range(n) for x in m.rows[alpha(a)]), dtype=np.int8, count=n * n
            )
            out.append(tuple(int(v) for v in _kernels.canonical_flat(flat, n, perms)))
    return out


def _chunks(seq: Sequence, size: int) -> list[Sequence]:
    return [seq[i:i + size] for i in range(0, len(seq), size)]


def enumerate_ag_monoids_via_construction(
    n: int,
    include_associative: bool = False,
    workers: int = 1,
    progress: Optional[ProgressCallback] = None,
) -> EnumerationResult:
    """AG-monoids of order ``n`` up to isomorphism, built by twisting commutative monoids.

    Without ``include_associative`` only the non-associative ones (twists by
    a non-identity involution) are returned.
    """
    _check_order(n)
    _check_workers(workers)
    monoids = _commutative_monoid_tables(n, workers, progress)
    if workers == 1:
        flats = _nonassociative_twists(monoids)
    else:
        size = max(1, len(monoids) // (8 * workers))
        with ProcessPoolExecutor(max_workers=workers) as pool:
            flats = [f for part in pool.map(_nonassociative_twists, _chunks(monoids, size)) for f in part]
    found = set(flats)
    if len(found) != len(flats):
        # distinct conjugacy classes must give distinct AG-monoids
        log.warning("order %d: %d duplicate twists removed", n, len(flats) - len(found))
    if include_associative:
        found.update(m.flat for m in monoids)
    tables = tuple(CayleyTable.from_flat(f, n) for f in sorted(found))
    return EnumerationResult(n, StructureKind.AG_MONOID, tables)


def enumerate_ag_monoids_bruteforce(n: int) -> EnumerationResult:
    """AG-monoids with left identity 0 by direct search over table cells.

    Row 0 is fixed to the identity row; the remaining cells are filled in
    row-major order, rejecting any assignment that completes a violation of
    ``(xy)z = (zy)x``. Complete tables are kept when they equal their
    canonical form. Runtime grows steeply past order 5.
    """
    _check_order(n)
    if n > BRUTEFORCE_GUARANTEED_ORDER:
        log.warning("brute-force enumeration at order %d may not finish", n)
    T = [[-1] * n for _ in range(n)]
    T[0] = list(range(n))
    cells = [(a, b) for a in range(1, n) for b in range(n)]
    found: list[CayleyTable] = []

    def consistent(a: int, b: int) -> bool:
        # the law is symmetric in x and z, so it suffices to treat the new
        # cell as the inner product xy or as the outer lookup (xy)z
        for z in range(n):
            if not _triple_ok(T, a, b, z):
                return False
        for x in range(n):
            row = T[x]
            for y in range(n):
                if row[y] == a and not _triple_ok(T, x, y, b):
                    return False
        return True

    def extend(k: int) -> None:
        if k == len(cells):
            t = CayleyTable(T)
            if canonical_form(t, 0) == t:
                found.append(t)
            return
        a, b = cells[k]
        for v in range(n):
            T[a][b] = v
            if consistent(a, b):
                extend(k + 1)
        T[a][b] = -1

    extend(0)
    return EnumerationResult(n, StructureKind.AG_MONOID, tuple(sorted(found)))


def _triple_ok(T: list[list[int]], x: int, y: int, z: int) -> bool:
    xy = T[x][y]
    zy = T[z][y]
    if xy < 0 or zy < 0:
        return True
    lhs = T[xy][z]
    rhs = T[zy][x]
    return lhs < 0 or rhs < 0 or lhs == rhs


def table1_row(
    n: int, workers: int = 1, progress: Optional[ProgressCallback] = None
) -> tuple[int, int, int]:
    """``(commutative monoids, non-associative AG-monoids, total)`` of order ``n``."""
    _check_order(n)
    _check_workers(workers)
    monoids = _commutative_monoid_tables(n, workers, progress)
    nonassoc = sum(
        len(conjugacy_classes_of_involutions(automorphism_group(m))) for m in monoids
    )
    return len(monoids), nonassoc, len(monoids) + nonassoc
