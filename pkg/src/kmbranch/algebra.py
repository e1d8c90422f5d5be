"""Affine generalized Cartan matrices, exact weights and the winding realization.

Weights are stored by their values on the basis ``(h_0, ..., h_l, d)`` of the
Cartan subalgebra, so ``Weight((1, 0), 0)`` is the fundamental weight
``Lambda_0`` of type A_1^(1).  The scaling element is normalized by
``alpha_i(d) = 1 if i == 0 else 0`` and ``Lambda_i(d) = 0``.
"""
from __future__ import annotations

import re
from fractions import Fraction
from math import gcd
from typing import Iterable, Sequence

import sympy

from .errors import IndexOutOfRange, NonPositive, NotAffine, NotCoprime, NotGCM


def Q(x) -> Fraction:
    """Coerce ints, Fractions and ``"p/q"`` / decimal strings to a Fraction."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, float):
        raise TypeError("floats are not accepted; pass an int, Fraction or string")
    return Fraction(x)


class Weight(tuple):
    """Element of h^*: the tuple ``(lambda(h_0), ..., lambda(h_l), lambda(d))``."""

    __slots__ = ()

    def __new__(cls, labels: Iterable, d=0):
        return tuple.__new__(cls, [Q(x) for x in labels] + [Q(d)])

    @classmethod
    def _raw(cls, values) -> "Weight":
        # values already Fractions, d last
        return tuple.__new__(cls, values)

    @property
    def labels(self) -> tuple:
        return tuple(self[:-1])

    @property
    def d(self) -> Fraction:
        return self[-1]

    def __add__(self, other):
        return Weight._raw([x + y for x, y in zip(self, other)])

    def __sub__(self, other):
        return Weight._raw([x - y for x, y in zip(self, other)])

    def __neg__(self):
        return Weight._raw([-x for x in self])

    def __mul__(self, c):
        c = Q(c)
        return Weight._raw([c * x for x in self])

    __rmul__ = __mul__

    def is_zero(self) -> bool:
        return not any(self)

    def __repr__(self):
        labels = ", ".join(_fmt(x) for x in self[:-1])
        return f"Weight(({labels}), d={_fmt(self[-1])})"


class Coroot(tuple):
    """Element of h: coefficients over ``(h_0, ..., h_l, d)``."""

    __slots__ = ()

    def __new__(cls, coeffs: Iterable):
        return tuple.__new__(cls, [Q(x) for x in coeffs])

    def __add__(self, other):
        return Coroot(x + y for x, y in zip(self, other))

    def __mul__(self, c):
        return Coroot(Q(c) * x for x in self)

    __rmul__ = __mul__

    def __repr__(self):
        return "Coroot((" + ", ".join(_fmt(x) for x in self) + "))"


def pair(weight: Weight, coroot: Coroot) -> Fraction:
    """The exact pairing ``<weight, coroot>``."""
    return sum((x * y for x, y in zip(weight, coroot) if y), Fraction(0))


def _fmt(x: Fraction) -> str:
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def _primitive_positive(vec) -> tuple[int, ...]:
    fracs = [Fraction(int(sympy.numer(v)), int(sympy.denom(v))) for v in vec]
    den = 1
    for f in fracs:
        den = den * f.denominator // gcd(den, f.denominator)
    ints = [int(f * den) for f in fracs]
    g = 0
    for x in ints:
        g = gcd(g, x)
    ints = [x // g for x in ints]
    if all(x < 0 for x in ints):
        ints = [-x for x in ints]
    if not all(x > 0 for x in ints):
        raise NotAffine(f"null vector {ints} is not strictly positive")
    return tuple(ints)


class AffineAlgebra:
    """A validated affine GCM with its null vectors and derived data.

    Build instances with :func:`build_affine` or :func:`preset`.
    """

    def __init__(self, cartan, a, c, name=None):
        self.cartan = tuple(tuple(int(x) for x in row) for row in cartan)
        self.a = tuple(a)
        self.c = tuple(c)
        self.name = name
        self.n = len(self.cartan)
        self.l = self.n - 1
        self.coxeter = sum(self.a)
        self.dual_coxeter = sum(self.c)
        A = self.cartan
        # alpha_i(h_j) = A_ji
        self._simple_roots = tuple(
            Weight([A[j][i] for j in range(self.n)], 1 if i == 0 else 0)
            for i in range(self.n)
        )
        self._simple_coroots = tuple(
            Coroot([1 if j == i else 0 for j in range(self.n + 1)]) for i in range(self.n)
        )
        fin = sympy.Matrix([[A[j][i] for i in range(1, self.n)] for j in range(1, self.n)])
        inv = fin.inv() if self.l else sympy.Matrix([])
        self._fin_inv = tuple(
            tuple(Fraction(int(sympy.numer(inv[r, s])), int(sympy.denom(inv[r, s])))
                  for s in range(self.l))
            for r in range(self.l)
        )

    def __eq__(self, other):
        return isinstance(other, AffineAlgebra) and self.cartan == other.cartan

    def __hash__(self):
        return hash(self.cartan)

    def __repr__(self):
        tag = self.name or f"{self.cartan}"
        return f"AffineAlgebra({tag})"

    def _check(self, i):
        if not 0 <= i < self.n:
            raise IndexOutOfRange(f"index {i} not in 0..{self.l}")

    def simple_root(self, i: int) -> Weight:
        self._check(i)
        return self._simple_roots[i]

    def simple_coroot(self, i: int) -> Coroot:
        self._check(i)
        return self._simple_coroots[i]

    @property
    def simple_roots(self) -> tuple[Weight, ...]:
        return self._simple_roots

    @property
    def simple_coroots(self) -> tuple[Coroot, ...]:
        return self._simple_coroots

    def fundamental(self, i: int) -> Weight:
        self._check(i)
        return Weight([1 if j == i else 0 for j in range(self.n)], 0)

    def weight(self, labels, d=0) -> Weight:
        if len(labels) != self.n:
            raise IndexOutOfRange(f"expected {self.n} labels, got {len(labels)}")
        return Weight(labels, d)

    def zero(self) -> Weight:
        return Weight([0] * self.n, 0)

    @property
    def delta(self) -> Weight:
        return self.weight_from_coords(self.a)

    @property
    def rho(self) -> Weight:
        return Weight([1] * self.n, 0)

    @property
    def K(self) -> Coroot:
        return Coroot(list(self.c) + [0])

    @property
    def d_element(self) -> Coroot:
        return Coroot([0] * self.n + [1])

    def level(self, weight: Weight) -> Fraction:
        return pair(weight, self.K)

    def weight_from_coords(self, k: Sequence) -> Weight:
        """``sum_i k_i alpha_i``."""
        out = [Fraction(0)] * (self.n + 1)
        for ki, root in zip(k, self._simple_roots):
            if ki:
                ki = Q(ki)
                for j, x in enumerate(root):
                    if x:
                        out[j] += ki * x
        return Weight._raw(out)

    def root_coords(self, nu: Weight):
        """Coordinates ``k`` with ``nu = sum k_i alpha_i``, or None outside the root span."""
        A = self.cartan
        k0 = nu[-1]
        rhs = [nu[j] - k0 * A[j][0] for j in range(1, self.n)]
        rest = [sum((self._fin_inv[r][s] * rhs[s] for s in range(self.l)), Fraction(0))
                for r in range(self.l)]
        k = (k0, *rest)
        if nu[0] != sum((A[0][i] * k[i] for i in range(self.n)), Fraction(0)):
            return None
        return k

    def depth(self, nu: Weight):
        """The alpha_0-coordinate of ``nu`` (None outside the root span)."""
        k = self.root_coords(nu)
        return None if k is None else k[0]

    def is_dominant_integral(self, weight: Weight) -> bool:
        return all(x >= 0 and x.denominator == 1 for x in weight[:-1])


def build_affine(matrix, name=None) -> AffineAlgebra:
    """Validate an affine GCM and compute its primitive positive null vectors."""
    try:
        rows = [list(r) for r in matrix]
    except TypeError as exc:
        raise NotGCM("matrix must be a list of rows") from exc
    n = len(rows)
    if n < 2 or any(len(r) != n for r in rows):
        raise NotGCM("matrix must be square of size at least 2")
    for r in rows:
        for x in r:
            if isinstance(x, bool) or Fraction(x).denominator != 1:
                raise NotGCM(f"entry {x!r} is not an integer")
    A = [[int(x) for x in r] for r in rows]
    for i in range(n):
        if A[i][i] != 2:
            raise NotGCM(f"diagonal entry ({i},{i}) is {A[i][i]}, expected 2")
        for j in range(n):
            if i != j:
                if A[i][j] > 0:
                    raise NotGCM(f"positive off-diagonal entry at ({i},{j})")
                if (A[i][j] == 0) != (A[j][i] == 0):
                    raise NotGCM(f"asymmetric zero pattern at ({i},{j})")
    M = sympy.Matrix(A)
    if M.rank() != n - 1:
        raise NotAffine(f"corank is {n - M.rank()}, expected 1")
    a = _primitive_positive(M.nullspace()[0])
    c = _primitive_positive(M.T.nullspace()[0])
    return AffineAlgebra(A, a, c, name=name)


def affine_type_a(l: int) -> AffineAlgebra:
    """The GCM of type A_l^(1)."""
    if l < 1:
        raise NotGCM("A_l^(1) needs l >= 1")
    if l == 1:
        return build_affine([[2, -2], [-2, 2]], name="A1_1")
    n = l + 1
    A = [[2 if i == j else (-1 if (i - j) % n in (1, n - 1) else 0) for j in range(n)]
         for i in range(n)]
    return build_affine(A, name=f"A{l}_1")


_PRESET = re.compile(r"^A(\d+)_1$")


def preset(name: str) -> AffineAlgebra:
    """Look up a preset by name, e.g. ``"A1_1"`` or ``"A2_1"``."""
    m = _PRESET.match(name)
    if not m or not 1 <= int(m.group(1)) <= 4:
        raise KeyError(f"unknown preset {name!r}; presets are A1_1 .. A4_1")
    return affine_type_a(int(m.group(1)))


class WindingData:
    """Simple roots, coroots, fundamental weights and rho of the winding subalgebra g[u]."""

    def __init__(self, algebra: AffineAlgebra, u: int):
        self.algebra = algebra
        self.u = u
        alg = algebra
        a0, c0 = alg.a[0], alg.c[0]
        shift = Fraction(u - 1, a0)
        self.roots = (alg.simple_roots[0] + shift * alg.delta,) + alg.simple_roots[1:]
        self.coroots = (alg.simple_coroots[0] + Fraction(u - 1, c0) * alg.K,) + alg.simple_coroots[1:]
        scale = Fraction(1, u) - 1
        lam0 = alg.fundamental(0)
        self.fundamentals = tuple(
            alg.fundamental(i) + (scale * Fraction(alg.c[i], c0)) * lam0 for i in range(alg.n)
        )
        rho = alg.zero()
        for f in self.fundamentals:
            rho = rho + f
        self.rho = rho

    @property
    def K(self) -> Coroot:
        out = Coroot([0] * (self.algebra.n + 1))
        for ci, h in zip(self.algebra.c, self.coroots):
            out = out + ci * h
        return out

    @property
    def delta(self) -> Weight:
        out = self.algebra.zero()
        for ai, r in zip(self.algebra.a, self.roots):
            out = out + ai * r
        return out

    def labels(self, weight: Weight) -> tuple:
        """Values of ``weight`` on the dotted coroots."""
        return tuple(pair(weight, h) for h in self.coroots)

    def is_dominant_integral(self, weight: Weight) -> bool:
        return all(x >= 0 and x.denominator == 1 for x in self.labels(weight))

    def __repr__(self):
        return f"WindingData({self.algebra!r}, u={self.u})"


def winding_construct(algebra: AffineAlgebra, u: int) -> WindingData:
    """Build the realization of g[u]; ``u`` must be positive and coprime to ``a_0``."""
    if isinstance(u, bool) or int(u) != u:
        raise NonPositive(f"u must be a positive integer, got {u!r}")
    u = int(u)
    if u <= 0:
        raise NonPositive(f"u must be positive, got {u}")
    if gcd(u, algebra.a[0]) != 1:
        raise NotCoprime(f"u={u} is not coprime to a_0={algebra.a[0]}")
    return WindingData(algebra, u)
