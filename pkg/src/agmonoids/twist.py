"""Twisting a commutative monoid by an involutive automorphism, and back.

Given a commutative monoid ``(S, +)`` with identity 0 and an automorphism
``alpha`` with ``alpha**2 = 1``, the product ``a.b = alpha(a) + b`` is an
AG-monoid with left identity 0, and every AG-monoid arises this way from
exactly one such pair.
"""

from __future__ import annotations

from dataclasses import dataclass

from .automorphisms import automorphism_group, conjugacy_classes_of_involutions
from .core import (
    AlgebraError,
    CayleyTable,
    Permutation,
    is_associative,
    is_commutative,
    is_homomorphic_image,
    is_left_invertive,
    left_identities,
    two_sided_identity,
)


class NotAnAutomorphismError(AlgebraError):
    pass


class NotAGMonoidError(AlgebraError):
    pass


def _require_commutative_monoid(m: CayleyTable) -> None:
    comm = is_commutative(m)
    if not comm:
        raise AlgebraError(f"monoid is not commutative: witness {comm.witness}")
    assoc = is_associative(m)
    if not assoc:
        raise AlgebraError(f"monoid is not associative: witness {assoc.witness}")
    if two_sided_identity(m) != 0:
        raise AlgebraError("monoid identity is not at index 0")


@dataclass(frozen=True)
class TwistPair:
    """A commutative monoid with identity 0 and an involutive automorphism.

    ``alpha`` may be the identity. Invariants are checked on construction.
    """

    monoid: CayleyTable
    alpha: Permutation

    def __post_init__(self):
        _require_commutative_monoid(self.monoid)
        if self.alpha.degree != self.monoid.order:
            raise AlgebraError(
                f"alpha has degree {self.alpha.degree}, monoid has order {self.monoid.order}"
            )
        if not is_homomorphic_image(self.monoid, self.monoid, self.alpha):
            raise NotAnAutomorphismError(f"{self.alpha} is not an automorphism of the monoid")
        if not (self.alpha * self.alpha).is_identity():
            raise AlgebraError(f"{self.alpha} does not square to the identity")


def twist(pair: TwistPair) -> CayleyTable:
    """The table ``a.b = monoid(alpha(a), b)``: row ``a`` is row ``alpha(a)`` of the monoid."""
    rows = pair.monoid.rows
    return CayleyTable(rows[pair.alpha(a)] for a in range(pair.monoid.order))


def is_ag_monoid(t: CayleyTable) -> bool:
    return bool(is_left_invertive(t)) and bool(left_identities(t))


def untwist(t: CayleyTable) -> TwistPair:
    """Recover ``alpha(x) = x.0`` and ``x + y = alpha(x).y`` from an AG-monoid."""
    li = is_left_invertive(t)
    if not li:
        raise NotAGMonoidError(f"not an AG-monoid: left invertive law fails at {li.witness}")
    idents = left_identities(t)
    if not idents:
        raise NotAGMonoidError("not an AG-monoid: no left identity")
    if idents != {0}:
        raise NotAGMonoidError(f"left identity must be at index 0, found {sorted(idents)}")
    n = t.order
    alpha = Permutation(t[x, 0] for x in range(n))
    monoid = CayleyTable(t.rows[alpha(x)] for x in range(n))
    return TwistPair(monoid, alpha)


def ag_isomorphic_via_monoid(p1: TwistPair, p2: TwistPair) -> bool:
    """Is there an identity-fixing monoid isomorphism ``phi`` with ``phi alpha1 = alpha2 phi``?

    Backtracking over images of ``1..n-1``; both conditions are checked as
    soon as the elements involved are mapped.
    """
    n = p1.monoid.order
    if n != p2.monoid.order:
        raise AlgebraError(f"orders differ: {n} vs {p2.monoid.order}")
    r1, r2 = p1.monoid.rows, p2.monoid.rows
    a1, a2 = p1.alpha.images, p2.alpha.images
    img = [-1] * n
    img[0] = 0
    used = [False] * n
    used[0] = True

    def consistent(k: int) -> bool:
        for a in range(k + 1):
            # alpha intertwining on mapped elements
            if a1[a] <= k and img[a1[a]] != a2[img[a]]:
                return False
            c = r1[a][k]
            if c <= k and img[c] != r2[img[a]][img[k]]:
                return False
            for b in range(k + 1):
                if r1[a][b] == k and img[k] != r2[img[a]][img[b]]:
                    return False
        return True

    def extend(k: int) -> bool:
        if k == n:
            return True
        for v in range(1, n):
            if used[v]:
                continue
            img[k] = v
            used[v] = True
            if consistent(k) and extend(k + 1):
                return True
            used[v] = False
        img[k] = -1
        return False

    return extend(1)


def count_ag_monoids_from_monoid(m: CayleyTable) -> tuple[int, int]:
    """``(associative, non-associative)`` AG-monoid counts obtainable from ``m``.

    The associative one is the untwisted monoid itself; non-associative ones
    correspond to conjugacy classes of involutions in ``Aut(m)``.
    """
    _require_commutative_monoid(m)
    return 1, len(conjugacy_classes_of_involutions(automorphism_group(m)))
