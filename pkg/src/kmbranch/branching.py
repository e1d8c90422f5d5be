"""Weight multiplicities, characters and branching to the winding subalgebra g[u].

Four routes to the branching multiplicities ``c(lam -> lam')``:

* :func:`branch_via_paths` counts LS paths whose image stays in the dotted
  dominant chamber;
* :func:`branch_via_steinberg` evaluates the double Weyl-group sum over the
  partition function;
* :func:`branch_signed_paths` straightens every path endpoint with the
  rho-shifted dotted action and sums signs;
* :func:`peel_oracle` repeatedly subtracts dotted characters from ch(lam).
"""
from __future__ import annotations

import threading
from collections import Counter, defaultdict
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Sequence

from .algebra import AffineAlgebra, Weight, WindingData, pair, winding_construct
from .errors import (CutoffUnstable, DominantInput, InconsistentTruncation, LevelMismatch,
                     NotDominant, NotDominantIntegral, PartnerUnavailable)
from .kostant import partition_function
from .paths import (Path, _first_hit, apply_power, e_op, enumerate_ls_paths, f_op, h_values,
                    is_dominant_path)
from .weyl import Basis, dotted_basis, plain_basis, signed_orbit_in_box, to_dominant_signed

METHODS = ("paths", "steinberg", "signed", "peel")


@dataclass
class FormalSeries:
    """Finitely supported ``Weight -> int`` map, truncated below ``top`` at ``truncation_depth``."""

    support: dict
    top: Weight
    truncation_depth: int

    def depth(self, weight: Weight) -> Fraction:
        return self.top.d - weight.d

    def __getitem__(self, weight):
        return self.support.get(weight, 0)

    def __len__(self):
        return len(self.support)

    def items(self):
        return self.support.items()


# -- helpers ------------------------------------------------------------------

def _require_dominant(algebra: AffineAlgebra, lam: Weight):
    if not algebra.is_dominant_integral(lam):
        raise NotDominantIntegral(f"{lam!r} is not dominant integral")
    if algebra.level(lam) <= 0:
        raise NotDominantIntegral(f"{lam!r} does not have positive level")


def _rho(basis: Basis) -> Weight:
    if not basis.dotted:
        return basis.algebra.rho
    return winding_construct(basis.algebra, basis.u).rho


def _integral_nonneg(k) -> bool:
    return k is not None and all(x >= 0 and x.denominator == 1 for x in k)


class _OrbitCache:
    """Signed orbits keyed by (basis, start), stored for the largest budget requested."""

    def __init__(self):
        self._store = {}
        self._lock = threading.Lock()

    def get(self, basis: Basis, start: Weight, budget: Sequence):
        key = (basis, start)
        with self._lock:
            hit = self._store.get(key)
        if hit is not None and _box_le(budget, hit[0]):
            return [p for p in hit[1] if _in_box(p.coords, budget)]
        if hit is not None:
            budget_big = tuple(None if (x is None or y is None) else max(x, y)
                               for x, y in zip(budget, hit[0]))
        else:
            budget_big = tuple(budget)
        pts = signed_orbit_in_box(basis, start, budget_big)
        with self._lock:
            self._store[key] = (budget_big, pts)
        return [p for p in pts if _in_box(p.coords, budget)]


def _box_le(b1, b2):
    return all(y is None or (x is not None and x <= y) for x, y in zip(b1, b2))


def _in_box(k, budget):
    return all(b is None or x <= b for x, b in zip(k, budget))


_ORBITS = _OrbitCache()


# -- weight multiplicities and characters -------------------------------------

def weight_multiplicity(algebra: AffineAlgebra, lam: Weight, mu: Weight,
                        cutoff_check: bool = False, basis: Optional[Basis] = None) -> int:
    """Multiplicity of ``mu`` in L(lam) by the signed Weyl sum over the partition function.

    With a dotted ``basis`` this is the multiplicity in the g[u]-module of
    highest weight ``lam``.
    """
    basis = basis or plain_basis(algebra)
    if not basis.is_dominant_integral(lam) or algebra.level(lam) <= 0:
        raise NotDominantIntegral(f"{lam!r} is not dominant integral of positive level")
    value = _multiplicity(basis, lam, mu, extra=0)
    if cutoff_check and _multiplicity(basis, lam, mu, extra=1) != value:
        raise CutoffUnstable(f"multiplicity of {mu!r} changed when the box was enlarged")
    return value


def _multiplicity(basis: Basis, lam: Weight, mu: Weight, extra: int) -> int:
    algebra = basis.algebra
    diff = lam - mu
    k = algebra.root_coords(diff)
    kb = basis.coords(diff) if k is not None else None
    if not _integral_nonneg(kb):
        return 0
    start = lam + _rho(basis)
    budget = tuple(x + extra for x in k)
    pf = partition_function(algebra)
    total = 0
    for pt in _ORBITS.get(basis, start, budget):
        x = _plain_to_basis(basis, pt.coords)
        total += pt.sign * pf.count([a - b for a, b in zip(kb, x)])
    return total


def _plain_to_basis(basis: Basis, k):
    if not basis.dotted:
        return k
    a = basis.algebra.a
    kd0 = k[0] / basis.u
    shift = Fraction(basis.u - 1, a[0]) * kd0
    return (kd0,) + tuple(k[i] - shift * a[i] for i in range(1, basis.n))


def weight_support(basis: Basis, lam: Weight, depth: int) -> list[Weight]:
    """Weights of the module of highest weight ``lam`` down to ``depth``, by closing under root strings."""
    seen = {lam}
    stack = [lam]
    n = basis.n
    while stack:
        nu = stack.pop()
        for i in range(n):
            v = basis.value(nu, i)
            if v <= 0:
                continue
            step = basis.roots[i]
            cur = nu
            for _ in range(int(v)):
                cur = cur - step
                if lam.d - cur.d > depth:
                    break
                if cur not in seen:
                    seen.add(cur)
                    stack.append(cur)
    return sorted(seen, key=lambda w: (lam.d - w.d, w))


def character_by_kostant(algebra: AffineAlgebra, lam: Weight, depth: int,
                         basis: Optional[Basis] = None) -> FormalSeries:
    basis = basis or plain_basis(algebra)
    if not basis.is_dominant_integral(lam):
        raise NotDominantIntegral(f"{lam!r} is not dominant integral")
    support = {}
    for mu in weight_support(basis, lam, depth):
        m = _multiplicity(basis, lam, mu, extra=0)
        if m:
            support[mu] = m
    return FormalSeries(support, lam, depth)


def character_by_paths(algebra: AffineAlgebra, lam: Weight, depth: int) -> FormalSeries:
    """Coefficient of mu = number of LS paths of shape ``lam`` ending at mu."""
    counts = Counter(p.endpoint for p in enumerate_ls_paths(algebra, lam, depth))
    return FormalSeries(dict(counts), lam, depth)


def _alternating_orbit(basis: Basis, start: Weight, depth: int) -> dict:
    budget = (depth,) + (None,) * (basis.n - 1)
    return {p.weight: p.sign for p in signed_orbit_in_box(basis, start, budget)}


def verify_kac_character(algebra: AffineAlgebra, lam: Weight, depth: int, margin: int = 1,
                         character: Optional[FormalSeries] = None) -> bool:
    """Check ``ch(lam) * sum eps(w) e^{w rho} == sum eps(w) e^{w(lam + rho)}`` up to ``depth - margin``.

    ``character`` defaults to the LS-path character.
    """
    if not algebra.is_dominant_integral(lam):
        raise NotDominantIntegral(f"{lam!r} is not dominant integral")
    basis = plain_basis(algebra)
    rho = algebra.rho
    ch = character if character is not None else character_by_paths(algebra, lam, depth)
    top = lam + rho
    limit = depth - margin
    numer = {w: s for w, s in _alternating_orbit(basis, top, depth).items()
             if top.d - w.d <= limit}
    denom = _alternating_orbit(basis, rho, depth)
    prod = defaultdict(int)
    for mu, m in ch.items():
        for w, s in denom.items():
            key = mu + w
            if top.d - key.d <= limit:
                prod[key] += m * s
    prod = {k: v for k, v in prod.items() if v}
    return prod == numer


# -- branching tables ---------------------------------------------------------

@dataclass
class BranchRow:
    weight: Weight
    mult: int
    methods: dict = field(default_factory=dict)


@dataclass
class BranchTable:
    algebra: AffineAlgebra
    u: int
    lam: Weight
    depth: int
    margin: int
    rows: list
    verified: bool = False

    def row_depth(self, row: BranchRow) -> Fraction:
        return self.lam.d - row.weight.d

    def as_dict(self) -> dict:
        """``{weight: mult}`` for the rows with nonzero multiplicity."""
        return {r.weight: r.mult for r in self.rows if r.mult}

    def within(self, depth) -> dict:
        return {w: m for w, m in self.as_dict().items() if self.lam.d - w.d <= depth}


def _sorted_rows(lam, rows):
    return sorted(rows, key=lambda r: (lam.d - r.weight.d, r.weight.labels, r.weight.d))


def _table(algebra, winding, lam, depth, margin, counts, method, limit=None):
    rows = []
    for w, m in counts.items():
        if m == 0:
            continue
        if limit is not None and lam.d - w.d > limit:
            continue
        rows.append(BranchRow(w, m, {method: m}))
    return BranchTable(algebra, winding.u, lam, depth, margin, _sorted_rows(lam, rows))


def branch_via_paths(algebra: AffineAlgebra, lam: Weight, winding: WindingData,
                     depth: int, paths: Optional[Sequence[Path]] = None) -> BranchTable:
    """Count g[u]-dominant LS paths of shape ``lam`` by endpoint."""
    _require_dominant(algebra, lam)
    if paths is None:
        paths = enumerate_ls_paths(algebra, lam, depth)
    counts = Counter(p.endpoint for p in paths if is_dominant_path(winding, p))
    return _table(algebra, winding, lam, depth, 0, counts, "paths")


def branch_via_steinberg(algebra: AffineAlgebra, lam: Weight, lam_prime: Weight,
                         winding: WindingData) -> int:
    """Double signed Weyl sum over the partition function for one target ``lam_prime``."""
    _require_dominant(algebra, lam)
    dotted = dotted_basis(winding)
    if not dotted.is_dominant_integral(lam_prime):
        raise NotDominant(f"{lam_prime!r} is not dominant integral for g[u]")
    if _dotted_level(winding, lam_prime) != winding.u * algebra.level(lam):
        raise LevelMismatch(f"{lam_prime!r} does not have level u * level(lam)")
    k = algebra.root_coords(lam - lam_prime)
    if not _integral_nonneg(k):
        return 0
    plain = plain_basis(algebra)
    xs = _ORBITS.get(plain, lam + algebra.rho, k)
    ys = _ORBITS.get(dotted, winding.rho, k)
    pf = partition_function(algebra)
    total = 0
    for x in xs:
        rest = [a - b for a, b in zip(k, x.coords)]
        for y in ys:
            z = [a - b for a, b in zip(rest, y.coords)]
            if any(c < 0 for c in z):
                continue
            total += x.sign * y.sign * pf.count(z)
    if total < 0:
        raise AssertionError(f"negative branching multiplicity {total} at {lam_prime!r}")
    return total


def _dotted_level(winding: WindingData, weight: Weight) -> Fraction:
    return pair(weight, winding.K)


def straighten(winding: WindingData, mu: Weight):
    """``(p(mu), {mu})``: sign and dominant weight with ``sigma(mu + rho') - rho'`` dominant.

    Returns ``(0, None)`` when ``mu + rho'`` lies on a wall of the dotted chamber.
    """
    rep, sign, _ = to_dominant_signed(dotted_basis(winding), mu + winding.rho, strict=True)
    if sign == 0:
        return 0, None
    return sign, rep - winding.rho


def is_weight(algebra: AffineAlgebra, lam: Weight, mu: Weight) -> bool:
    """Whether ``mu`` is a weight of L(lam): its dominant conjugate lies in ``lam - Q_+``."""
    if not _integral_nonneg_or_any(algebra.root_coords(lam - mu)):
        return False
    dom, _, _ = to_dominant_signed(plain_basis(algebra), mu)
    return _integral_nonneg(algebra.root_coords(lam - dom))


def _integral_nonneg_or_any(k) -> bool:
    return k is not None and all(x.denominator == 1 for x in k)


def signed_row_certified(algebra: AffineAlgebra, lam: Weight, winding: WindingData,
                         eta: Weight, depth: int) -> bool:
    """True when every weight of L(lam) feeding row ``eta`` of the signed sum lies within ``depth``.

    The row collects ``p(mu)`` over weights ``mu`` with ``mu + rho'`` in the
    dotted orbit of ``eta + rho'``.  The orbit is walked downward and each
    branch stops at the first non-weight: if a deeper point were a weight,
    the root string through it would make its parent a weight too.
    """
    dotted = dotted_basis(winding)
    rho = winding.rho
    start = eta + rho
    seen = {start}
    frontier = [start]
    while frontier:
        nxt = []
        for nu in frontier:
            mu = nu - rho
            if not is_weight(algebra, lam, mu):
                continue
            if lam.d - mu.d > depth:
                return False
            for i in range(dotted.n):
                v = dotted.value(nu, i)
                if v > 0:
                    child = nu - v * dotted.roots[i]
                    if child not in seen:
                        seen.add(child)
                        nxt.append(child)
        frontier = nxt
    return True


def branch_signed_paths(algebra: AffineAlgebra, lam: Weight, winding: WindingData, depth: int,
                        margin: Optional[int] = None,
                        paths: Optional[Sequence[Path]] = None,
                        certify: bool = True) -> BranchTable:
    """Sum ``p(pi(1))`` over all LS paths, grouped by the straightened endpoint.

    Rows deeper than ``depth - margin`` are dropped.  With ``certify`` a row
    is also dropped unless :func:`signed_row_certified` shows that no
    contribution to it was cut off by the truncation.
    """
    _require_dominant(algebra, lam)
    margin = winding.u if margin is None else margin
    if paths is None:
        paths = enumerate_ls_paths(algebra, lam, depth)
    acc = defaultdict(int)
    for p in paths:
        sign, eta = straighten(winding, p.endpoint)
        if sign:
            acc[eta] += sign
    if certify:
        acc = {w: v for w, v in acc.items()
               if lam.d - w.d <= depth - margin
               and signed_row_certified(algebra, lam, winding, w, depth)}
    return _table(algebra, winding, lam, depth, margin, acc, "signed", limit=depth - margin)


def cancel_partner(path: Path, winding: WindingData) -> Path:
    """Partner path of opposite sign and equal straightened endpoint.

    Finds the first point along ``path`` where some dotted coroot takes the
    value -1 (lowest index on ties) and moves the endpoint across the
    rho-shifted wall with f (or e) along that dotted root.
    """
    if is_dominant_path(winding, path):
        raise DominantInput("path lies in the dotted dominant chamber")
    basis = dotted_basis(winding)
    best = None
    for i in range(basis.n):
        t = _first_hit(h_values(basis, i, path), -1)
        if t is not None and (best is None or t < best[0]):
            best = (t, i)
    if best is None:
        raise PartnerUnavailable("no dotted coroot reaches -1 along the path")
    i = best[1]
    n = 1 + basis.value(path.endpoint, i)
    n = int(n) if n.denominator == 1 else None
    if n is None:
        raise PartnerUnavailable("endpoint value is not integral")
    if n >= 0:
        out = apply_power(f_op, basis, i, path, n)
    else:
        out = apply_power(e_op, basis, i, path, -n)
    if out is None:
        raise PartnerUnavailable(f"root operator string along dotted root {i} is too short")
    return out


def _peel_order(algebra: AffineAlgebra, lam: Weight):
    def key(w):
        k = algebra.root_coords(lam - w)
        return (k[0], sum(k), w.labels, w.d)
    return key


def peel_oracle(algebra: AffineAlgebra, lam: Weight, winding: WindingData, depth: int,
                margin: Optional[int] = None) -> BranchTable:
    """Peel dotted characters off the truncated ch(lam), highest first."""
    _require_dominant(algebra, lam)
    margin = winding.u if margin is None else margin
    dotted = dotted_basis(winding)
    ch = character_by_kostant(algebra, lam, depth)
    residual = dict(ch.support)
    candidates = sorted((w for w in residual if dotted.is_dominant_integral(w)),
                        key=_peel_order(algebra, lam))
    found = {}
    for eta in candidates:
        c = residual[eta]
        if c < 0:
            raise InconsistentTruncation(f"negative coefficient {c} at {eta!r}")
        if c == 0:
            continue
        found[eta] = c
        sub = character_by_kostant(algebra, eta, depth - int(lam.d - eta.d), basis=dotted)
        for mu, m in sub.items():
            if mu not in residual:
                raise InconsistentTruncation(f"{mu!r} is a weight of the g[u] component but not of L(lam)")
            residual[mu] -= c * m
    bad = {w: v for w, v in residual.items() if v}
    if bad:
        w, v = min(bad.items(), key=lambda kv: _peel_order(algebra, lam)(kv[0]))
        raise InconsistentTruncation(f"nonzero residual {v} at {w!r}")
    return _table(algebra, winding, lam, depth, margin, found, "peel", limit=depth - margin)


def dominant_candidates(algebra: AffineAlgebra, lam: Weight, winding: WindingData, depth: int):
    """Dotted-dominant weights of L(lam) down to ``depth``."""
    dotted = dotted_basis(winding)
    return [w for w in weight_support(plain_basis(algebra), lam, depth)
            if dotted.is_dominant_integral(w)]


# order used to pick the reported multiplicity when methods disagree
PREFERENCE = ("steinberg", "peel", "signed", "paths")


def branch(algebra: AffineAlgebra, lam: Weight, winding: WindingData, depth: int,
           methods: Sequence[str] = ("steinberg",), margin: Optional[int] = None) -> BranchTable:
    """Run the selected methods and merge them into one table.

    ``paths`` and ``steinberg`` values are shown at every depth, ``peel``
    down to ``depth - margin`` and ``signed`` on its certified rows.
    ``verified`` is set when at least two methods ran and all of them agree
    on every row down to ``depth - margin``.
    """
    _require_dominant(algebra, lam)
    unknown = set(methods) - set(METHODS)
    methods = [m for m in METHODS if m in set(methods)]
    if not methods or unknown:
        raise ValueError(f"methods must be a nonempty subset of {METHODS}")
    margin = winding.u if margin is None else margin
    limit = depth - margin
    results = {}
    paths = None
    if "paths" in methods or "signed" in methods:
        paths = enumerate_ls_paths(algebra, lam, depth)
    if "paths" in methods:
        results["paths"] = branch_via_paths(algebra, lam, winding, depth, paths=paths).as_dict()
    if "signed" in methods:
        results["signed"] = branch_signed_paths(algebra, lam, winding, depth, margin, paths=paths,
                                                certify=False).as_dict()
    if "peel" in methods:
        results["peel"] = peel_oracle(algebra, lam, winding, depth, margin).as_dict()
    if "steinberg" in methods:
        targets = set(dominant_candidates(algebra, lam, winding, depth))
        for r in results.values():
            targets |= set(r)
        values = {w: branch_via_steinberg(algebra, lam, w, winding) for w in sorted(targets)}
        results["steinberg"] = {w: v for w, v in values.items() if v}

    keys = set()
    for r in results.values():
        keys |= set(r)
    rows = []
    agree = True
    for w in keys:
        d = lam.d - w.d
        vals = {}
        for m in methods:
            if m in ("paths", "steinberg"):
                shown = True
            elif m == "peel":
                shown = d <= limit
            else:
                shown = d <= limit and signed_row_certified(algebra, lam, winding, w, depth)
            if shown:
                vals[m] = results[m].get(w, 0)
        if d <= limit and len(set(vals.values())) > 1:
            agree = False
        if not any(vals.values()):
            continue
        mult = next(vals[m] for m in PREFERENCE if m in vals)
        rows.append(BranchRow(w, mult, vals))
    table = BranchTable(algebra, winding.u, lam, depth, margin, _sorted_rows(lam, rows))
    table.verified = agree and len(methods) > 1
    return table
