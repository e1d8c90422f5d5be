"""Positive roots with multiplicities and the generalized Kostant partition function."""
from __future__ import annotations

import threading
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Optional, Sequence

import numpy as np

from .algebra import AffineAlgebra, Weight
from .errors import TwistedUnsupported


@dataclass(frozen=True)
class RootWithMult:
    root: Weight
    coords: tuple  # nonnegative integers over the simple roots
    mult: int
    is_imaginary: bool

    @property
    def depth(self) -> int:
        return self.coords[0]


def finite_positive_roots(algebra: AffineAlgebra) -> list[tuple]:
    """Positive roots of the finite part (nodes 1..l) as coordinate tuples over alpha_1..alpha_l.

    Built by height using root strings: ``beta + alpha_j`` is a root iff
    ``p - <beta, h_j> > 0`` where ``p`` is how far the string extends below beta.
    """
    l = algebra.l
    A = algebra.cartan
    simple = [tuple(1 if k == j else 0 for k in range(l)) for j in range(l)]
    roots = set(simple)
    layer = list(simple)
    while layer:
        nxt = set()
        for beta in layer:
            for j in range(l):
                pairing = sum(A[j + 1][k + 1] * beta[k] for k in range(l))
                p = 0
                down = list(beta)
                while True:
                    down[j] -= 1
                    if tuple(down) in roots:
                        p += 1
                    else:
                        break
                if p - pairing > 0:
                    up = list(beta)
                    up[j] += 1
                    nxt.add(tuple(up))
        nxt -= roots
        roots |= nxt
        layer = sorted(nxt)
    return sorted(roots, key=lambda r: (sum(r), r))


def is_untwisted(algebra: AffineAlgebra) -> bool:
    """``a_0 = 1`` and ``(a_1, ..., a_l)`` is the highest root of the finite part."""
    if algebra.a[0] != 1:
        return False
    fin = finite_positive_roots(algebra)
    return fin[-1] == tuple(algebra.a[1:])


def _untwisted_roots(algebra: AffineAlgebra, max_depth: int) -> list[RootWithMult]:
    fin = finite_positive_roots(algebra)
    a = algebra.a
    out = []

    def make(coords, mult, imag):
        out.append(RootWithMult(algebra.weight_from_coords(coords), coords, mult, imag))

    for beta in fin:
        make((0,) + beta, 1, False)
    signed = [tuple(-x for x in b) for b in reversed(fin)] + fin
    for n in range(1, max_depth + 1):
        for beta in signed:
            make((n * a[0],) + tuple(n * a[k + 1] + beta[k] for k in range(algebra.l)), 1, False)
        make(tuple(n * x for x in a), algebra.l, True)
    return out


RootProvider = Callable[[AffineAlgebra, int], Sequence[RootWithMult]]


def positive_roots_up_to_depth(algebra: AffineAlgebra, max_depth: int,
                               provider: Optional[RootProvider] = None) -> list[RootWithMult]:
    """Positive roots ``beta + n delta`` with ``n <= max_depth``, ordered by depth.

    The built-in rule covers untwisted algebras: real roots have
    multiplicity 1 and ``n delta`` has multiplicity ``l``.  Pass ``provider``
    to supply the roots of any other affine algebra.
    """
    if provider is not None:
        return list(provider(algebra, max_depth))
    if not is_untwisted(algebra):
        raise TwistedUnsupported(f"{algebra!r} is not untwisted; supply a root provider")
    return _untwisted_roots(algebra, max_depth)


class PartitionFunction:
    """Dynamic-programming table for the partition function of one algebra.

    The table covers a coordinate box and is rebuilt on a larger box when a
    query falls outside it.  A lock confines rebuilds, so one instance may be
    shared across threads.
    """

    def __init__(self, algebra: AffineAlgebra, provider: Optional[RootProvider] = None):
        self.algebra = algebra
        self.provider = provider
        self._box: Optional[tuple] = None
        self._table = None
        self._lock = threading.Lock()

    def _coins(self, box):
        a0 = self.algebra.a[0]
        max_depth = box[0] // a0 if a0 else box[0]
        for r in positive_roots_up_to_depth(self.algebra, max_depth, self.provider):
            if all(0 <= c <= b for c, b in zip(r.coords, box)):
                for _ in range(r.mult):
                    yield r.coords

    def _build(self, box):
        T = np.zeros(tuple(b + 1 for b in box), dtype=object)
        T[(0,) * len(box)] = 1
        for coin in self._coins(box):
            _add_coin(T, coin)
        self._table = T
        self._box = box

    def count(self, coords: Sequence) -> int:
        """Number of ways to write ``sum k_i alpha_i`` as a sum of positive roots."""
        k = []
        for x in coords:
            x = Fraction(x)
            if x.denominator != 1 or x < 0:
                return 0
            k.append(int(x))
        k = tuple(k)
        with self._lock:
            if self._box is None or any(x > b for x, b in zip(k, self._box)):
                box = k if self._box is None else tuple(max(x, b) for x, b in zip(k, self._box))
                self._build(box)
            return int(self._table[k])

    def __call__(self, zeta: Weight) -> int:
        k = self.algebra.root_coords(zeta)
        if k is None:
            return 0
        return self.count(k)


def _add_coin(T, coin):
    # unbounded coin: T[v] += T[v - coin], sweeping the pivot axis upward
    shape = T.shape
    j = next(ax for ax, c in enumerate(coin) if c > 0)
    dst = []
    src = []
    for ax, c in enumerate(coin):
        if ax == j:
            dst.append(None)
            src.append(None)
        else:
            if c >= shape[ax]:
                return
            dst.append(slice(c, shape[ax]))
            src.append(slice(0, shape[ax] - c))
    cj = coin[j]
    for s in range(cj, shape[j]):
        d = tuple(s if ax == j else dst[ax] for ax in range(len(coin)))
        r = tuple(s - cj if ax == j else src[ax] for ax in range(len(coin)))
        T[d] = T[d] + T[r]


_CACHE: dict = {}
_CACHE_LOCK = threading.Lock()


def partition_function(algebra: AffineAlgebra) -> PartitionFunction:
    """Shared per-algebra instance with the built-in root rule."""
    with _CACHE_LOCK:
        pf = _CACHE.get(algebra)
        if pf is None:
            pf = _CACHE[algebra] = PartitionFunction(algebra)
        return pf


def partition_value(algebra: AffineAlgebra, zeta: Weight) -> int:
    return partition_function(algebra)(zeta)
