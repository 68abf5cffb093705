"""Automorphism groups of tables with identity 0, and their involution classes."""

from __future__ import annotations

from dataclasses import dataclass

from .core import AlgebraError, CayleyTable, Permutation, left_identities


@dataclass(frozen=True)
class AutomorphismGroup:
    """All automorphisms of ``base``, sorted by image sequence."""

    base: CayleyTable
    members: tuple[Permutation, ...]

    @property
    def order(self) -> int:
        return len(self.members)

    def __contains__(self, p: Permutation) -> bool:
        return p in self._member_set

    def __iter__(self):
        return iter(self.members)

    def __len__(self) -> int:
        return len(self.members)

    @property
    def _member_set(self) -> frozenset[Permutation]:
        # cached on first use; the dataclass is frozen
        try:
            return self.__dict__["_set"]
        except KeyError:
            s = frozenset(self.members)
            object.__setattr__(self, "_set", s)
            return s


@dataclass(frozen=True)
class InvolutionClasses:
    """Conjugacy classes of non-identity involutions, ordered by representative."""

    classes: tuple[tuple[Permutation, ...], ...]

    @property
    def representatives(self) -> tuple[Permutation, ...]:
        return tuple(c[0] for c in self.classes)

    def __len__(self) -> int:
        return len(self.classes)


def automorphism_group(t: CayleyTable) -> AutomorphismGroup:
    """Every identity-fixing permutation ``p`` with ``p(ab) = p(a)p(b)``.

    Images of ``1..n-1`` are assigned in order; a partial map is rejected as
    soon as some pair ``a, b`` with ``a``, ``b`` and ``ab`` all mapped breaks
    the homomorphism condition.
    """
    if 0 not in left_identities(t):
        raise AlgebraError("automorphism_group needs the (left) identity at index 0")
    n = t.order
    r = t.rows
    img = [-1] * n
    img[0] = 0
    used = [False] * n
    used[0] = True
    found: list[Permutation] = []

    def consistent(k: int) -> bool:
        # pairs touching the newly mapped element k, or whose product is k
        for a in range(k + 1):
            for a_, b_ in ((a, k), (k, a)):
                c = r[a_][b_]
                if c <= k and img[c] != r[img[a_]][img[b_]]:
                    return False
        for a in range(k + 1):
            for b in range(k + 1):
                if r[a][b] == k and img[k] != r[img[a]][img[b]]:
                    return False
        return True

    def extend(k: int) -> None:
        if k == n:
            found.append(Permutation(img))
            return
        for v in range(1, n):
            if used[v]:
                continue
            img[k] = v
            used[v] = True
            if consistent(k):
                extend(k + 1)
            used[v] = False
        img[k] = -1

    extend(1)
    return AutomorphismGroup(t, tuple(sorted(found)))


def involutions(g: AutomorphismGroup) -> list[Permutation]:
    return [p for p in g.members if p.is_involution()]


def conjugacy_classes_of_involutions(g: AutomorphismGroup) -> InvolutionClasses:
    remaining = involutions(g)
    pending = set(remaining)
    inverses = [p.inverse() for p in g.members]
    classes = []
    for q in remaining:
        if q not in pending:
            continue
        orbit = {p * q * pi for p, pi in zip(g.members, inverses)}
        pending -= orbit
        classes.append(tuple(sorted(orbit)))
    return InvolutionClasses(tuple(classes))


def are_conjugate(g: AutomorphismGroup, a: Permutation, b: Permutation) -> bool:
    if a not in g or b not in g:
        raise AlgebraError("both permutations must belong to the group")
    return any(p * a == b * p for p in g.members)
