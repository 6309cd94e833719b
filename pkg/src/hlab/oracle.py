"""Geometric side: Bott's formula on P^{n-1}, HKR / Hodge assembly, and the
fixed-point count for twisted group rings of diagonal cyclic actions.

Nothing here touches an algebra; these are the independent answers the
algebraic engine is compared against.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from math import comb

from .constructions import CyclicActionSpec, monomials
from .linalg import QQ, ExactMatrix, rank
from .tables import DimTable


@dataclass(frozen=True)
class BottQuery:
    """``h^q(P^{n-1}, Omega^p(m))``."""

    n: int
    p: int
    q: int
    m: int

    @property
    def in_range(self) -> bool:
        return 0 <= self.p <= self.n - 1 and 0 <= self.q <= self.n - 1


def bott(query: BottQuery) -> int:
    """Bott's formula.  Out-of-range ``p`` or ``q`` give 0 (check ``in_range``).

    With ``N = n - 1``:

    * ``q = 0, m > p``: ``C(m + N - p, m) * C(m - 1, p)``
    * ``q = p, m = 0``: 1
    * ``q = N, m < p - N``: ``C(-m + p, -m) * C(-m - 1, N - p)``
    * otherwise 0
    """
    n, p, q, m = query.n, query.p, query.q, query.m
    if n < 2:
        raise ValueError("projective space P^{n-1} needs n >= 2")
    if not query.in_range:
        return 0
    N = n - 1
    if q == 0 and m > p:
        return comb(m + N - p, m) * comb(m - 1, p)
    if q == p and m == 0:
        return 1
    if q == N and m < p - N:
        return comb(-m + p, -m) * comb(-m - 1, N - p)
    return 0


def h(n: int, p: int, q: int, m: int) -> int:
    return bott(BottQuery(n, p, q, m))


def h0_by_koszul(n: int, p: int, m: int) -> int:
    """``h^0(P^{n-1}, Omega^p(m))`` as the kernel of Euler contraction
    ``Lambda^p (x) S_{m-p} -> Lambda^{p-1} (x) S_{m-p+1}``, by exact rank."""
    if not 0 <= p <= n - 1 or m - p < 0:
        return 0
    subsets = list(combinations(range(n), p))
    src = [(s, a) for s in subsets for a in monomials(n, m - p)]
    if p == 0:
        return len(src)
    tgt_subsets = list(combinations(range(n), p - 1))
    tgt = [(s, a) for s in tgt_subsets for a in monomials(n, m - p + 1)]
    tindex = {key: i for i, key in enumerate(tgt)}
    entries = []
    for col, (s, a) in enumerate(src):
        # iota_E(dx_{s_1} ^ ... ^ dx_{s_p}) = sum_k (-1)^k x_{s_k} dx_{s without s_k}
        for k, j in enumerate(s):
            rest = s[:k] + s[k + 1:]
            b = list(a)
            b[j] += 1
            entries.append((tindex[(rest, tuple(b))], col, (-1) ** k))
    merged: dict = {}
    for r, c, x in entries:
        merged[(r, c)] = merged.get((r, c), 0) + x
    m_ = ExactMatrix(QQ, len(tgt), len(src), ((r, c, x) for (r, c), x in merged.items() if x))
    return len(src) - rank(m_)


def hkr_cohomology(n: int, max_i: int) -> DimTable:
    """``HH^i(P^{n-1}) = sum_{p+q=i} h^q(Lambda^p T)``, with
    ``Lambda^p T = Omega^{N-p}(n)`` because ``omega = O(-n)``."""
    N = n - 1
    table = DimTable(max_i=max_i)
    for i in range(max_i + 1):
        table[i] = sum(h(n, N - p, i - p, n) for p in range(0, N + 1) if 0 <= i - p <= N)
    return table


def hodge_homology(n: int, max_i: int | None = None) -> DimTable:
    """``HH_i(P^{n-1}) = sum_{p-q=i} h^{p,q}`` for ``-(n-1) <= i <= max_i``
    (``max_i`` defaults to ``n-1``; beyond that every sum is empty)."""
    N = n - 1
    top = N if max_i is None else max(N, max_i)
    table = DimTable(max_i=top, min_i=-N)
    for i in range(-N, top + 1):
        table[i] = sum(h(n, p, p - i, 0) for p in range(N + 1) if 0 <= p - i <= N)
    return table


def hodge_diamond(n: int) -> list[list[int]]:
    N = n - 1
    return [[h(n, p, q, 0) for q in range(N + 1)] for p in range(N + 1)]


# -- fixed points of diagonal cyclic actions ---------------------------------

@dataclass(frozen=True)
class FixedPointQuery:
    action: CyclicActionSpec
    D: int
    i: int | None = None  # form degree; None for all

    def __post_init__(self):
        if self.i is not None and not 0 <= self.i <= self.action.n_vars:
            raise ValueError(f"form degree {self.i} outside 0..{self.action.n_vars}")
        if self.D < 0:
            raise ValueError("D must be nonnegative")


def fixed_subspace(action: CyclicActionSpec, s: int) -> tuple[int, ...]:
    """Coordinates fixed by the group element ``g^s``."""
    r = action.group_order
    return tuple(j for j, w in enumerate(action.weights) if (w * s) % r == 0)


def _count_forms(action: CyclicActionSpec, coords: tuple[int, ...], form_degree: int,
                 d: int, residue: int) -> int:
    """Monomial forms ``x^a dx_S`` on ``coords`` with ``|S| = form_degree``,
    total degree ``|a| + |S| = d`` and weight ``= residue (mod r)``."""
    r = action.group_order
    w = action.weights
    if form_degree > len(coords) or d < form_degree:
        return 0
    total = 0
    for S in combinations(coords, form_degree):
        ws = sum(w[j] for j in S)
        if not coords:
            total += 1 if d == 0 and ws % r == residue % r else 0
            continue
        for a in monomials(len(coords), d - form_degree):
            wa = sum(e * w[j] for e, j in zip(a, coords))
            if (wa + ws - residue) % r == 0:
                total += 1
    return total


def _fixed_point_table(query: FixedPointQuery, cohomology: bool) -> DimTable:
    act = query.action
    nv = act.n_vars
    lo, hi = (0, nv) if query.i is None else (query.i, query.i)
    table = DimTable(max_i=hi, min_i=lo, degrees=(0, query.D))
    residue = act.det_weight if cohomology else 0
    for s in range(act.group_order):
        coords = fixed_subspace(act, s)
        for i in range(lo, hi + 1):
            form_degree = nv - i if cohomology else i
            for d in range(query.D + 1):
                c = _count_forms(act, coords, form_degree, d, residue)
                if c:
                    table[(i, d)] = table[(i, d)] + c
    return table


def fixed_point_hh_homology(query: FixedPointQuery) -> DimTable:
    """``(i, d) -> dim`` of G-invariant i-forms on the fixed-point scheme,
    summed over group elements (every class is a singleton, ``C_g = G``)."""
    return _fixed_point_table(query, cohomology=False)


def fixed_point_hh_cohomology(query: FixedPointQuery) -> DimTable:
    """``(i, d) ->`` invariant ``(n_vars - i)``-forms twisted by the inverse
    determinant: weight condition ``= sum(weights) (mod r)``."""
    return _fixed_point_table(query, cohomology=True)


def identity_summand(action: CyclicActionSpec, i: int, D: int) -> tuple[int, ...]:
    """The ``g = 1`` contribution to ``fixed_point_hh_homology`` at form degree ``i``."""
    coords = tuple(range(action.n_vars))
    return tuple(_count_forms(action, coords, i, d, 0) for d in range(D + 1))


def isolated_fixed_point_count(action: CyclicActionSpec) -> int:
    """Number of group elements whose fixed subspace is just the origin."""
    return sum(1 for s in range(action.group_order) if not fixed_subspace(action, s))


def canonical_bundle_forms(n: int, p: int, m: int) -> tuple[int, int]:
    """Two counts of the Veronese-degree-``m`` part of ``H^0(X, Omega^p_X)``
    on the total space ``X`` of the canonical bundle of ``P^{n-1}``.

    First: invariant ``p``-forms on ``V = k^n`` under scalar ``mu_n`` in
    total degree ``m n``.  Second: ``h^0(Omega^p(mn)) + h^0(Omega^{p-1}(mn))``
    on ``P^{n-1}`` (the second term only for ``m >= 1``).
    """
    act = CyclicActionSpec.standard(n)
    invariant = identity_summand(act, p, m * n)[m * n]
    geometric = h(n, p, 0, m * n) if p <= n - 1 else 0
    if m >= 1 and p >= 1:
        geometric += h(n, p - 1, 0, m * n)
    return invariant, geometric
