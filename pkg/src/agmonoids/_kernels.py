"""Compiled inner loops for the construction pipeline.

Tables are flat ``int8`` arrays in row-major order, ``-1`` marking an
unassigned cell. Permutation sets are 2-d arrays with one permutation per row.
"""

from __future__ import annotations

import itertools
from functools import lru_cache

import numpy as np
from numba import njit


@lru_cache(maxsize=None)
def fixing_permutations(n: int, fixed: int = 0, include_identity: bool = False) -> np.ndarray:
    """All permutations of ``0..n-1`` fixing ``fixed``, lexicographic, as int8 rows."""
    others = [x for x in range(n) if x != fixed]
    rows = []
    for arrangement in itertools.permutations(others):
        p = list(range(n))
        for x, y in zip(others, arrangement):
            p[x] = y
        if include_identity or p != list(range(n)):
            rows.append(p)
    out = np.array(rows, dtype=np.int8).reshape(len(rows), n)
    out.setflags(write=False)
    return out


@lru_cache(maxsize=None)
def _search_tables(n: int):
    """Cells, positions and per-permutation source indices for the monoid search."""
    perms = fixing_permutations(n, 0)
    m = perms.shape[0]
    cells = np.array([(a, b) for a in range(1, n) for b in range(a, n)], dtype=np.int64).reshape(-1, 2)
    posflat = np.array([r * n + c for r in range(1, n) for c in range(1, n)], dtype=np.int64)
    inv = np.empty_like(perms)
    for i in range(m):
        inv[i, perms[i]] = np.arange(n, dtype=np.int8)
    src = np.empty((m, posflat.shape[0]), dtype=np.int64)
    for i in range(m):
        q = inv[i].astype(np.int64)
        src[i] = [q[r] * n + q[c] for r in range(1, n) for c in range(1, n)]
    return perms, cells, posflat, src


@njit(cache=True)
def _assoc_ok(T, n, a, b, v):
    """Check every fully assigned associativity triple that reads cell (a, b)."""
    for s in range(2):
        x = a if s == 0 else b
        y = b if s == 0 else a
        for z in range(n):
            # (xy)z versus x(yz)
            yz = T[y * n + z]
            if yz >= 0:
                lhs = T[v * n + z]
                rhs = T[x * n + yz]
                if lhs >= 0 and rhs >= 0 and lhs != rhs:
                    return False
            # z(xy) versus (zx)y
            zx = T[z * n + x]
            if zx >= 0:
                lhs = T[z * n + v]
                rhs = T[zx * n + y]
                if lhs >= 0 and rhs >= 0 and lhs != rhs:
                    return False
    # (a,b) as the outer lookup
    for s in range(2):
        x0 = a if s == 0 else b
        z0 = b if s == 0 else a
        for x in range(n):
            for y in range(n):
                if T[x * n + y] == x0:
                    # (xy)z0 = x(y z0)
                    yz = T[y * n + z0]
                    if yz >= 0:
                        rhs = T[x * n + yz]
                        if rhs >= 0 and rhs != v:
                            return False
                    # z0(yx) = (z0 y)x, with T[y][x] = x0 by symmetry
                    zy = T[z0 * n + y]
                    if zy >= 0:
                        lhs = T[zy * n + x]
                        if lhs >= 0 and lhs != v:
                            return False
    return True


@njit(cache=True)
def _grow(out, count):
    if count < out.shape[0]:
        return out
    bigger = np.empty((out.shape[0] * 2, out.shape[1]), dtype=out.dtype)
    bigger[:count] = out[:count]
    return bigger


@njit(cache=True)
def search_commutative_monoids(n, perms, cells, posflat, src, prefix, stop_depth):
    """Depth-first search for canonical commutative monoids with identity 0.

    Cells ``(a, b)``, ``1 <= a <= b``, are filled in row-major order. The
    first ``len(prefix)`` cells are forced to the given values. With
    ``stop_depth > 0`` the search records the partial assignments reached at
    that depth instead of complete tables.

    Canonicity is enforced incrementally: each identity-fixing permutation
    keeps a pointer to the first row-major position where its relabeled table
    is not yet known to equal the current one. A relabeling that is smaller at
    a decided position kills the node; one that is larger is dropped for the
    whole subtree.

    Returns ``(records, count, nodes)``.
    """
    ncell = cells.shape[0]
    npos = posflat.shape[0]
    m = perms.shape[0]
    T = np.full(n * n, -1, dtype=np.int64)
    for x in range(n):
        T[x] = x
        T[x * n] = x
    depth_limit = ncell if stop_depth <= 0 else min(stop_depth, ncell)
    width = n * n if stop_depth <= 0 else depth_limit
    out = np.empty((64, width), dtype=np.int8)
    count = 0
    nodes = 0

    alive = np.empty((ncell + 1, max(m, 1)), dtype=np.int32)
    aptr = np.empty((ncell + 1, max(m, 1)), dtype=np.int32)
    acount = np.zeros(ncell + 1, dtype=np.int64)
    for i in range(m):
        alive[0, i] = i
        aptr[0, i] = 0
    acount[0] = m

    cur = np.empty(ncell + 1, dtype=np.int64)
    npre = prefix.shape[0]
    if ncell == 0:
        out[0, :] = T[:width]
        return out[:1], 1, 0

    d = 0
    cur[0] = (prefix[0] if npre > 0 else 0) - 1
    while d >= 0:
        a = cells[d, 0]
        b = cells[d, 1]
        hi = prefix[d] if d < npre else n - 1
        cur[d] += 1
        if cur[d] > hi:
            T[a * n + b] = -1
            T[b * n + a] = -1
            d -= 1
            continue
        v = cur[d]
        T[a * n + b] = v
        T[b * n + a] = v
        nodes += 1
        if not _assoc_ok(T, n, a, b, v):
            continue
        # lexicographic leader test
        ok = True
        cnt = 0
        for i in range(acount[d]):
            pi = alive[d, i]
            k = aptr[d, i]
            dead = False
            while k < npos:
                cv = T[posflat[k]]
                if cv < 0:
                    break
                s = T[src[pi, k]]
                if s < 0:
                    break
                pv = perms[pi, s]
                if pv < cv:
                    ok = False
                    break
                if pv > cv:
                    dead = True
                    break
                k += 1
            if not ok:
                break
            if not dead:
                alive[d + 1, cnt] = pi
                aptr[d + 1, cnt] = k
                cnt += 1
        if not ok:
            continue
        acount[d + 1] = cnt
        if d + 1 == depth_limit:
            out = _grow(out, count)
            if stop_depth <= 0:
                for j in range(n * n):
                    out[count, j] = T[j]
            else:
                for j in range(depth_limit):
                    out[count, j] = cur[j]
            count += 1
            continue
        d += 1
        cur[d] = (prefix[d] if d < npre else 0) - 1
    return out[:count], count, nodes


@njit(cache=True)
def canonical_flat(flat, n, perms):
    """Least row-major relabeling of ``flat`` over the permutations in ``perms``.

    The table itself is the starting candidate, so ``perms`` need not contain
    the identity.
    """
    best = flat.copy()
    cand = np.empty(n * n, dtype=flat.dtype)
    inv = np.empty(n, dtype=np.int64)
    for i in range(perms.shape[0]):
        p = perms[i]
        for x in range(n):
            inv[p[x]] = x
        state = 0  # 0 equal so far, -1 smaller, 1 larger
        k = 0
        for x in range(n):
            qx = inv[x] * n
            for y in range(n):
                val = p[flat[qx + inv[y]]]
                if state == 0:
                    if val > best[k]:
                        state = 1
                        break
                    if val < best[k]:
                        state = -1
                cand[k] = val
                k += 1
            if state == 1:
                break
        if state == -1:
            best[:] = cand
    return best
