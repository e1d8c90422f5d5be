"""Piecewise-linear paths and the root operators e_i, f_i.

A path is stored as its canonical sequence of nonzero segment vectors, no two
consecutive ones positively proportional, so equality of :class:`Path`
objects is equality up to reparametrization.  Positions along a path are
measured by a parameter ``t`` in ``[0, r]`` (``r`` = number of segments):
breakpoint ``k`` sits at ``t = k`` and segments are traversed linearly.
"""
from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional, Sequence

from .algebra import AffineAlgebra, Weight, WindingData
from .errors import IndexOutOfRange, NotDominantIntegral
from .weyl import Basis, dotted_basis, plain_basis


def _positively_proportional(v: Weight, w: Weight) -> bool:
    for x, y in zip(v, w):
        if x:
            c = y / x
            break
    else:
        return False
    if c <= 0:
        return False
    return all(y == c * x for x, y in zip(v, w))


class Path:
    __slots__ = ("segments", "n", "_hash")

    def __init__(self, segments: Iterable[Weight], n: int):
        merged: list[Weight] = []
        for s in segments:
            if s.is_zero():
                continue
            if merged and _positively_proportional(merged[-1], s):
                merged[-1] = merged[-1] + s
            else:
                merged.append(s)
        self.segments = tuple(merged)
        self.n = n
        self._hash = hash(self.segments)

    def __eq__(self, other):
        return isinstance(other, Path) and self.n == other.n and self.segments == other.segments

    def __hash__(self):
        return self._hash

    def __len__(self):
        return len(self.segments)

    def __repr__(self):
        return f"Path({list(self.segments)!r})"

    def zero(self) -> Weight:
        return Weight._raw([Fraction(0)] * (self.n + 1))

    def breakpoints(self) -> list[Weight]:
        pts = [self.zero()]
        for s in self.segments:
            pts.append(pts[-1] + s)
        return pts

    @property
    def endpoint(self) -> Weight:
        return self.breakpoints()[-1]

    def at(self, t) -> Weight:
        """The point at parameter ``t``."""
        pts = self.breakpoints()
        return _point(pts, Fraction(t))

    def sort_key(self):
        return self.segments


def _point(pts: Sequence[Weight], t: Fraction) -> Weight:
    j = math.floor(t)
    if j >= len(pts) - 1:
        return pts[-1]
    if t == j:
        return pts[j]
    return pts[j] + (t - j) * (pts[j + 1] - pts[j])


def straight_path(weight: Weight) -> Path:
    return Path([weight], len(weight) - 1)


def canonicalize(breakpoints: Sequence[Weight]) -> Path:
    """Build the canonical path through ``breakpoints`` (which must start at 0)."""
    pts = list(breakpoints)
    if not pts or not pts[0].is_zero():
        raise ValueError("breakpoints must start at the origin")
    return Path([pts[k + 1] - pts[k] for k in range(len(pts) - 1)], len(pts[0]) - 1)


def concat(p1: Path, p2: Path) -> Path:
    return Path(p1.segments + p2.segments, p1.n)


def reflect_path(basis: Basis, i: int, path: Path) -> Path:
    if not 0 <= i < basis.n:
        raise IndexOutOfRange(f"index {i} not in 0..{basis.n - 1}")
    return Path([_reflect_vec(basis, i, s) for s in path.segments], path.n)


def _reflect_vec(basis, i, v):
    h = basis.value(v, i)
    return v - h * basis.roots[i] if h else v


# -- h-profiles ---------------------------------------------------------------

@dataclass(frozen=True)
class HProfile:
    """Values ``h(t) = <pi(t), coroot_i>`` at the breakpoints and the derived markers.

    ``Q`` is the least integer attained, ``q``/``p`` the first/last parameter
    where it is attained.  ``x`` and ``y`` are the crossings used by f and e;
    they are None when the operator vanishes.
    """

    values: tuple
    Q: int
    q: Fraction
    p: Fraction
    x: Optional[Fraction]
    y: Optional[Fraction]

    @property
    def f_string(self) -> int:
        """``[h(1) - Q]``: how many times f can be applied."""
        return math.floor(self.values[-1] - self.Q)

    @property
    def e_string(self) -> int:
        return -self.Q


def _solve(H, j, v):
    # parameter in segment j where h == v (segment must be non-constant)
    return j + (v - H[j]) / (H[j + 1] - H[j])


def _first_hit(H, v, after=None):
    """Smallest t (strictly greater than ``after`` if given) with h(t) == v."""
    r = len(H) - 1
    if after is None:
        if H[0] == v:
            return Fraction(0)
        start = 0
    else:
        start = math.floor(after)
    for j in range(start, r):
        h0, h1 = H[j], H[j + 1]
        if h0 == v and (after is None or j > after):
            return Fraction(j)
        if (h0 - v) * (h1 - v) < 0:
            t = _solve(H, j, v)
            if after is None or t > after:
                return t
        if h1 == v and (after is None or j + 1 > after):
            return Fraction(j + 1)
    return None


def _last_hit(H, v, before=None):
    """Largest t (strictly smaller than ``before`` if given) with h(t) == v."""
    r = len(H) - 1
    if before is None:
        if H[r] == v:
            return Fraction(r)
        start = r - 1
    else:
        start = min(math.ceil(before), r) - 1
    for j in range(start, -1, -1):
        h0, h1 = H[j], H[j + 1]
        if h1 == v and (before is None or j + 1 < before):
            return Fraction(j + 1)
        if (h0 - v) * (h1 - v) < 0:
            t = _solve(H, j, v)
            if before is None or t < before:
                return t
        if h0 == v and (before is None or j < before):
            return Fraction(j)
    return None


def h_values(basis: Basis, i: int, path: Path) -> tuple:
    vals = [Fraction(0)]
    for s in path.segments:
        vals.append(vals[-1] + basis.value(s, i))
    return tuple(vals)


def h_profile(basis: Basis, i: int, path: Path) -> HProfile:
    if not 0 <= i < basis.n:
        raise IndexOutOfRange(f"index {i} not in 0..{basis.n - 1}")
    H = h_values(basis, i, path)
    Qmin = math.ceil(min(H))
    q = _first_hit(H, Qmin)
    p = _last_hit(H, Qmin)
    x = y = None
    if math.floor(H[-1] - Qmin) > 0:
        x = _first_hit(H, Qmin + 1, after=p)
    if Qmin < 0:
        y = _last_hit(H, Qmin + 1, before=q)
    return HProfile(H, Qmin, q, p, x, y)


def _surgery(basis: Basis, i: int, path: Path, t1: Fraction, t2: Fraction) -> Path:
    """Reflect the piece of ``path`` between parameters t1 < t2 and glue the rest back."""
    pts = path.breakpoints()
    marks = sorted({Fraction(k) for k in range(len(pts))} | {t1, t2})
    new_pts = [_point(pts, t) for t in marks]
    segs = []
    for k in range(len(marks) - 1):
        s = new_pts[k + 1] - new_pts[k]
        if t1 <= marks[k] and marks[k + 1] <= t2:
            s = _reflect_vec(basis, i, s)
        segs.append(s)
    return Path(segs, path.n)


def f_op(basis: Basis, i: int, path: Path) -> Optional[Path]:
    """The lowering operator f_i; None stands for the zero path."""
    prof = h_profile(basis, i, path)
    if prof.x is None:
        return None
    return _surgery(basis, i, path, prof.p, prof.x)


def e_op(basis: Basis, i: int, path: Path) -> Optional[Path]:
    """The raising operator e_i; None stands for the zero path."""
    prof = h_profile(basis, i, path)
    if prof.y is None:
        return None
    return _surgery(basis, i, path, prof.y, prof.q)


def apply_power(op, basis, i, path, n):
    for _ in range(n):
        if path is None:
            return None
        path = op(basis, i, path)
    return path


# -- LS paths -----------------------------------------------------------------

def enumerate_ls_paths(algebra: AffineAlgebra, weight: Weight, max_depth: int) -> list[Path]:
    """All paths ``f_{i1} ... f_{is}(pi_weight)`` ending at depth <= ``max_depth``.

    Breadth first from the straight path, children in index order; the
    result is sorted by (depth, endpoint, segments).
    """
    if not algebra.is_dominant_integral(weight):
        raise NotDominantIntegral(f"{weight!r} is not dominant integral")
    if algebra.level(weight) <= 0 and not weight.is_zero():
        raise NotDominantIntegral("highest weight must have positive level")
    basis = plain_basis(algebra)
    top_d = weight.d
    start = straight_path(weight)
    seen = {start}
    queue = deque([start])
    while queue:
        path = queue.popleft()
        for i in range(algebra.n):
            child = f_op(basis, i, path)
            if child is None or child in seen:
                continue
            if top_d - child.endpoint.d > max_depth:
                continue
            seen.add(child)
            queue.append(child)
    return sorted(seen, key=lambda p: (top_d - p.endpoint.d, p.endpoint, p.segments))


def path_depth(weight: Weight, path: Path) -> Fraction:
    return weight.d - path.endpoint.d


def is_dominant_path(winding: WindingData, path: Path) -> bool:
    """True iff every breakpoint pairs nonnegatively with every dotted coroot."""
    basis = dotted_basis(winding)
    for b in path.breakpoints():
        for i in range(basis.n):
            if basis.value(b, i) < 0:
                return False
    return True
