"""Brute-force references, deliberately sharing no code with the engine."""
from functools import lru_cache
from itertools import product

from kmbranch.algebra import Weight


def simply_laced_positive_roots(cartan, a, box):
    """Positive roots k <= box of a simply-laced affine algebra, as (coords, mult).

    Real roots are the k >= 0 with k.A.k = 2; imaginary ones are the
    multiples of the null vector, of multiplicity l.
    """
    n = len(cartan)
    out = []
    for k in product(*(range(b + 1) for b in box)):
        if not any(k):
            continue
        norm = sum(k[i] * cartan[i][j] * k[j] for i in range(n) for j in range(n))
        if norm == 2:
            out.append((k, 1))
        elif norm == 0:
            # must be a multiple of a
            m = k[0] // a[0]
            if all(x == m * y for x, y in zip(k, a)):
                out.append((k, n - 1))
    return out


def partition_count(cartan, a, zeta):
    """Number of multisets of positive roots (with multiplicity) summing to zeta."""
    if any(x < 0 for x in zeta):
        return 0
    coins = []
    for k, m in simply_laced_positive_roots(cartan, a, zeta):
        coins.extend([k] * m)

    @lru_cache(maxsize=None)
    def go(i, rest):
        if not any(rest):
            return 1
        if i == len(coins):
            return 0
        total = go(i + 1, rest)
        c = coins[i]
        nxt = tuple(r - x for r, x in zip(rest, c))
        if all(x >= 0 for x in nxt):
            total += go(i, nxt)
        return total

    return go(0, tuple(zeta))


def reflect_raw(cartan, i, w):
    # w = (labels..., d); s_i(w) = w - w(h_i) alpha_i, alpha_i = column i, alpha_i(d) = [i == 0]
    v = w[i]
    if not v:
        return w
    n = len(cartan)
    labels = tuple(w[j] - v * cartan[j][i] for j in range(n))
    return labels + (w[n] - (v if i == 0 else 0),)


def weyl_words(cartan, start, max_len):
    """{weight: minimal word length} over all words of length <= max_len."""
    n = len(cartan)
    best = {tuple(start): 0}
    layer = {tuple(start)}
    for length in range(1, max_len + 1):
        nxt = set()
        for w in layer:
            for i in range(n):
                r = reflect_raw(cartan, i, w)
                if r not in best:
                    best[r] = length
                    nxt.add(r)
        layer = nxt
    return {Weight(w[:-1], w[-1]): L for w, L in best.items()}
