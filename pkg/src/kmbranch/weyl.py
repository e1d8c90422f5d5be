"""Simple reflections, straightening and signed orbit enumeration.

Everything here is parametrized by a :class:`Basis`, so the same code serves
the Weyl group of g (plain basis) and the Weyl group of g[u] (dotted basis).
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from .algebra import AffineAlgebra, Coroot, Weight, WindingData, pair
from .errors import IndexOutOfRange, NotInTitsCone, NotStrictlyDominant


@dataclass(frozen=True, eq=False)
class Basis:
    """Simple roots and coroots used for reflections: plain ``(alpha_i, h_i)`` or dotted."""

    algebra: AffineAlgebra
    roots: tuple
    coroots: tuple
    u: int = 1
    dotted: bool = False

    def __post_init__(self):
        alg = self.algebra
        # plain coordinates of each basis root, used for box pruning
        object.__setattr__(self, "root_coords", tuple(alg.root_coords(r) for r in self.roots))
        # coroots that are unit vectors pair by a single lookup
        fast = []
        for h in self.coroots:
            nz = [j for j, x in enumerate(h) if x]
            fast.append(nz[0] if len(nz) == 1 and h[nz[0]] == 1 else None)
        object.__setattr__(self, "_fast", tuple(fast))

    @property
    def tag(self) -> str:
        return f"dotted({self.u})" if self.dotted else "plain"

    @property
    def n(self) -> int:
        return self.algebra.n

    def value(self, weight: Weight, i: int) -> Fraction:
        """``<weight, coroots[i]>``."""
        j = self._fast[i]
        if j is not None:
            return weight[j]
        return pair(weight, self.coroots[i])

    def labels(self, weight: Weight) -> tuple:
        return tuple(self.value(weight, i) for i in range(self.n))

    def is_dominant(self, weight: Weight) -> bool:
        return all(self.value(weight, i) >= 0 for i in range(self.n))

    def is_dominant_integral(self, weight: Weight) -> bool:
        return all(x >= 0 and x.denominator == 1 for x in self.labels(weight))

    def coords(self, nu: Weight):
        """Coordinates of ``nu`` over this basis' simple roots (None off the root span)."""
        k = self.algebra.root_coords(nu)
        if k is None or not self.dotted:
            return k
        # plain k = kd + ((u-1)/a_0) kd_0 * a
        a = self.algebra.a
        kd0 = k[0] / self.u
        shift = Fraction(self.u - 1, a[0]) * kd0
        return (kd0,) + tuple(k[i] - shift * a[i] for i in range(1, self.n))

    def __eq__(self, other):
        return (isinstance(other, Basis) and self.algebra == other.algebra
                and self.u == other.u and self.dotted == other.dotted)

    def __hash__(self):
        return hash((self.algebra, self.u, self.dotted))


def plain_basis(algebra: AffineAlgebra) -> Basis:
    return Basis(algebra, algebra.simple_roots, algebra.simple_coroots)


def dotted_basis(winding: WindingData) -> Basis:
    return Basis(winding.algebra, winding.roots, winding.coroots, u=winding.u, dotted=True)


def reflect(basis: Basis, i: int, weight: Weight) -> Weight:
    """``s_i(weight) = weight - <weight, h_i> alpha_i``."""
    if not 0 <= i < basis.n:
        raise IndexOutOfRange(f"index {i} not in 0..{basis.n - 1}")
    v = basis.value(weight, i)
    if not v:
        return weight
    return weight - v * basis.roots[i]


def to_dominant_signed(basis: Basis, mu: Weight, strict: bool = False, max_steps: int = 100000):
    """Reflect ``mu`` into the dominant chamber.

    Returns ``(dominant, sign, length)`` where ``sign = (-1)**length``.  With
    ``strict=True`` a representative lying on a wall (some label exactly 0)
    gets sign 0; this is the convention for rho-shifted straightening, where
    a wall means the shifted orbit is not regular.
    """
    steps = 0
    cur = mu
    n = basis.n
    while True:
        for i in range(n):
            if basis.value(cur, i) < 0:
                cur = reflect(basis, i, cur)
                steps += 1
                break
        else:
            break
        if steps > max_steps:
            raise NotInTitsCone(f"no dominant representative after {max_steps} reflections")
    sign = -1 if steps % 2 else 1
    if strict and any(basis.value(cur, i) == 0 for i in range(n)):
        sign = 0
    return cur, sign, steps


@dataclass(frozen=True)
class OrbitPoint:
    weight: Weight
    length: int
    sign: int
    parent_edge: Optional[int]
    coords: tuple  # plain simple-root coordinates of start - weight


def signed_orbit_in_box(basis: Basis, start: Weight, budget: Sequence) -> list[OrbitPoint]:
    """All points ``w(start)`` with ``start - w(start)`` inside the coordinate box ``budget``.

    Coordinates are plain simple-root coordinates, also for a dotted basis.
    A ``None`` budget entry leaves that coordinate unbounded; the alpha_0
    entry must be finite.  Points are returned sorted by (length, coords).
    """
    n = basis.n
    if any(basis.value(start, i) <= 0 for i in range(n)):
        raise NotStrictlyDominant(f"{start!r} is not strictly dominant for the {basis.tag} basis")
    if basis.algebra.level(start) <= 0:
        raise NotStrictlyDominant("start must have positive level")
    budget = tuple(None if b is None else Q_(b) for b in budget)
    if budget[0] is None:
        raise ValueError("the alpha_0 budget must be finite")

    def fits(k):
        return all(b is None or x <= b for x, b in zip(k, budget))

    zero = tuple(Fraction(0) for _ in range(n))
    root = OrbitPoint(start, 0, 1, None, zero)
    seen = {start: root}
    out = [root]
    frontier = [root]
    while frontier:
        nxt = []
        for pt in sorted(frontier, key=lambda p: p.coords):
            for i in range(n):
                v = basis.value(pt.weight, i)
                if v <= 0:
                    continue
                k = tuple(x + v * r for x, r in zip(pt.coords, basis.root_coords[i]))
                if not fits(k):
                    continue
                w = pt.weight - v * basis.roots[i]
                if w in seen:
                    continue
                child = OrbitPoint(w, pt.length + 1, -pt.sign, i, k)
                seen[w] = child
                out.append(child)
                nxt.append(child)
        frontier = nxt
    out.sort(key=lambda p: (p.length, p.coords))
    return out


def Q_(x):
    return x if isinstance(x, Fraction) else Fraction(x)


def walk_parent_chain(basis: Basis, start: Weight, points: Sequence[OrbitPoint], target: OrbitPoint):
    """Rebuild ``target`` from ``start`` by replaying parent edges; returns (weight, steps)."""
    by_weight = {p.weight: p for p in points}
    edges = []
    cur = target
    while cur.parent_edge is not None:
        edges.append(cur.parent_edge)
        cur = by_weight[reflect(basis, cur.parent_edge, cur.weight)]
    w = start
    for i in reversed(edges):
        w = reflect(basis, i, w)
    return w, len(edges)
