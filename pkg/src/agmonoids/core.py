"""Cayley tables, permutations, identity predicates and canonical forms.

Elements of a structure of order ``n`` are the integers ``0..n-1``. A table
entry ``t[a, b]`` is the product of ``a`` and ``b`` (row is the left operand).
Everything here is immutable and pure Python; this module is also the
reference the accelerated kernels are tested against.
"""

from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass
from typing import Iterable, Iterator, Optional, Sequence


class AlgebraError(ValueError):
    """Raised when an input violates a structural precondition."""


class StructureKind(enum.Enum):
    COMMUTATIVE_MONOID = "cm"
    AG_MONOID = "ag"


class CayleyTable:
    """An ``n x n`` operation table over ``0..n-1``."""

    __slots__ = ("_rows", "_flat")

    def __init__(self, rows: Iterable[Iterable[int]]):
        rows = tuple(tuple(int(x) for x in row) for row in rows)
        n = len(rows)
        if n < 1:
            raise AlgebraError("a Cayley table needs order >= 1")
        for row in rows:
            if len(row) != n:
                raise AlgebraError(f"table is not square: row of length {len(row)} in order {n}")
            for x in row:
                if not 0 <= x < n:
                    raise AlgebraError(f"entry {x} out of range for order {n}")
        self._rows = rows
        self._flat = tuple(itertools.chain.from_iterable(rows))

    @classmethod
    def from_flat(cls, flat: Sequence[int], n: int) -> "CayleyTable":
        if len(flat) != n * n:
            raise AlgebraError(f"expected {n * n} entries, got {len(flat)}")
        return cls(flat[i * n:(i + 1) * n] for i in range(n))

    @property
    def order(self) -> int:
        return len(self._rows)

    @property
    def rows(self) -> tuple[tuple[int, ...], ...]:
        return self._rows

    @property
    def flat(self) -> tuple[int, ...]:
        """Row-major entries."""
        return self._flat

    def __getitem__(self, ab: tuple[int, int]) -> int:
        a, b = ab
        return self._rows[a][b]

    def __iter__(self) -> Iterator[tuple[int, ...]]:
        return iter(self._rows)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, CayleyTable):
            return NotImplemented
        return self._rows == other._rows

    def __lt__(self, other: "CayleyTable") -> bool:
        return (self.order, self._flat) < (other.order, other._flat)

    def __hash__(self) -> int:
        return hash(self._flat)

    def __repr__(self) -> str:
        return f"CayleyTable({[list(r) for r in self._rows]})"

    def __str__(self) -> str:
        return "\n".join(" ".join(str(x) for x in row) for row in self._rows)


class Permutation:
    """A bijection of ``0..n-1``; ``images[i]`` is the image of ``i``.

    ``p * q`` is the composite ``p o q`` (apply ``q`` first).
    """

    __slots__ = ("_images",)

    def __init__(self, images: Iterable[int]):
        images = tuple(int(x) for x in images)
        if sorted(images) != list(range(len(images))):
            raise AlgebraError(f"{images} is not a permutation of 0..{len(images) - 1}")
        self._images = images

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(range(n))

    @classmethod
    def transposition(cls, n: int, i: int, j: int) -> "Permutation":
        images = list(range(n))
        images[i], images[j] = j, i
        return cls(images)

    @property
    def degree(self) -> int:
        return len(self._images)

    @property
    def images(self) -> tuple[int, ...]:
        return self._images

    def __call__(self, i: int) -> int:
        return self._images[i]

    def __mul__(self, other: "Permutation") -> "Permutation":
        if self.degree != other.degree:
            raise AlgebraError("cannot compose permutations of different degree")
        p = self._images
        return Permutation._trusted(tuple(p[x] for x in other._images))

    def inverse(self) -> "Permutation":
        inv = [0] * self.degree
        for i, x in enumerate(self._images):
            inv[x] = i
        return Permutation._trusted(tuple(inv))

    def is_identity(self) -> bool:
        return all(i == x for i, x in enumerate(self._images))

    def is_involution(self) -> bool:
        """True for a non-identity permutation that squares to the identity."""
        p = self._images
        return not self.is_identity() and all(p[x] == i for i, x in enumerate(p))

    def cycles(self) -> list[tuple[int, ...]]:
        """Non-trivial cycles, each starting at its least element, sorted."""
        seen = set()
        out = []
        for start in range(self.degree):
            if start in seen:
                continue
            cycle = [start]
            seen.add(start)
            x = self._images[start]
            while x != start:
                cycle.append(x)
                seen.add(x)
                x = self._images[x]
            if len(cycle) > 1:
                out.append(tuple(cycle))
        return out

    @classmethod
    def _trusted(cls, images: tuple[int, ...]) -> "Permutation":
        p = cls.__new__(cls)
        p._images = images
        return p

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Permutation):
            return NotImplemented
        return self._images == other._images

    def __lt__(self, other: "Permutation") -> bool:
        return self._images < other._images

    def __hash__(self) -> int:
        return hash(self._images)

    def __repr__(self) -> str:
        return f"Permutation({list(self._images)})"

    def __str__(self) -> str:
        cycles = self.cycles()
        if not cycles:
            return "()"
        return "".join("(" + ",".join(map(str, c)) + ")" for c in cycles)


@dataclass(frozen=True, eq=False)
class PropertyResult:
    """Outcome of an identity check.

    Truthiness and equality follow ``holds`` only; ``witness`` is the first
    violating tuple found, or None.
    """

    holds: bool
    witness: Optional[tuple[int, ...]] = None

    def __bool__(self) -> bool:
        return self.holds

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (PropertyResult, bool)):
            return self.holds == bool(other)
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.holds)


_OK = PropertyResult(True)


def is_associative(t: CayleyTable) -> PropertyResult:
    r = t.rows
    n = t.order
    for a in range(n):
        ra = r[a]
        for b in range(n):
            rab = r[ra[b]]
            rb = r[b]
            for c in range(n):
                if rab[c] != ra[rb[c]]:
                    return PropertyResult(False, (a, b, c))
    return _OK


def is_commutative(t: CayleyTable) -> PropertyResult:
    r = t.rows
    for a in range(t.order):
        for b in range(a + 1, t.order):
            if r[a][b] != r[b][a]:
                return PropertyResult(False, (a, b))
    return _OK


def left_identities(t: CayleyTable) -> frozenset[int]:
    ident = tuple(range(t.order))
    return frozenset(e for e in range(t.order) if t.rows[e] == ident)


def two_sided_identity(t: CayleyTable) -> Optional[int]:
    r = t.rows
    for e in sorted(left_identities(t)):
        if all(r[x][e] == x for x in range(t.order)):
            return e
    return None


def is_left_invertive(t: CayleyTable) -> PropertyResult:
    """Check ``(xy)z = (zy)x`` for all triples."""
    r = t.rows
    n = t.order
    for x in range(n):
        for y in range(n):
            rxy = r[r[x][y]]
            for z in range(n):
                if rxy[z] != r[r[z][y]][x]:
                    return PropertyResult(False, (x, y, z))
    return _OK


def is_medial(t: CayleyTable) -> PropertyResult:
    """Check ``(ab)(cd) = (ac)(bd)`` for all quadruples."""
    r = t.rows
    n = t.order
    for a in range(n):
        ra = r[a]
        for b in range(n):
            rab = r[ra[b]]
            rb = r[b]
            for c in range(n):
                rac = r[ra[c]]
                rc = r[c]
                for d in range(n):
                    if rab[rc[d]] != rac[rb[d]]:
                        return PropertyResult(False, (a, b, c, d))
    return _OK


def satisfies_paramedial_swap(t: CayleyTable) -> PropertyResult:
    """Check ``a(bc) = b(ac)`` for all triples."""
    r = t.rows
    n = t.order
    for a in range(n):
        for b in range(n):
            for c in range(n):
                if r[a][r[b][c]] != r[b][r[a][c]]:
                    return PropertyResult(False, (a, b, c))
    return _OK


def _check_degree(t: CayleyTable, p: Permutation) -> None:
    if p.degree != t.order:
        raise AlgebraError(f"permutation of degree {p.degree} does not act on a table of order {t.order}")


def apply_permutation(t: CayleyTable, p: Permutation) -> CayleyTable:
    """Relabel ``t`` along ``p``: the result ``u`` has ``u[p(a), p(b)] = p(t[a, b])``."""
    _check_degree(t, p)
    img = p.images
    q = p.inverse().images
    r = t.rows
    n = t.order
    return CayleyTable(tuple(img[r[q[x]][q[y]]] for y in range(n)) for x in range(n))


def is_homomorphic_image(t: CayleyTable, t2: CayleyTable, p: Permutation) -> bool:
    """True iff ``p(t[a, b]) == t2[p(a), p(b)]`` for every pair."""
    if t.order != t2.order:
        raise AlgebraError(f"tables of orders {t.order} and {t2.order} cannot be compared")
    _check_degree(t, p)
    img = p.images
    r, r2 = t.rows, t2.rows
    n = t.order
    return all(img[r[a][b]] == r2[img[a]][img[b]] for a in range(n) for b in range(n))


def canonical_form(t: CayleyTable, fixed: int = 0) -> CayleyTable:
    """Lexicographically least row-major relabeling over permutations fixing ``fixed``.

    Exhaustive over the ``(n-1)!`` candidates; a candidate is abandoned as
    soon as its row-major prefix exceeds the best one found so far.
    """
    n = t.order
    if not 0 <= fixed < n:
        raise AlgebraError(f"fixed element {fixed} out of range for order {n}")
    r = t.rows
    others = [x for x in range(n) if x != fixed]
    best = list(t.flat)
    for arrangement in itertools.permutations(others):
        # q is the inverse relabeling: position x of the result reads row q[x]
        q = [0] * n
        q[fixed] = fixed
        for x, src in zip(others, arrangement):
            q[x] = src
        p = [0] * n
        for x in range(n):
            p[q[x]] = x
        candidate = None
        k = 0
        for x in range(n):
            rq = r[q[x]]
            for y in range(n):
                v = p[rq[q[y]]]
                if candidate is None:
                    if v > best[k]:
                        break
                    if v < best[k]:
                        candidate = best[:k]
                        candidate.append(v)
                else:
                    candidate.append(v)
                k += 1
            else:
                continue
            break
        if candidate is not None:
            best = candidate
    return CayleyTable.from_flat(best, n)


def tables_isomorphic(t1: CayleyTable, t2: CayleyTable, fixed: int = 0) -> bool:
    """True iff some relabeling fixing ``fixed`` carries ``t1`` onto ``t2``."""
    if t1.order != t2.order:
        raise AlgebraError(f"tables of orders {t1.order} and {t2.order} cannot be compared")
    return canonical_form(t1, fixed) == canonical_form(t2, fixed)
