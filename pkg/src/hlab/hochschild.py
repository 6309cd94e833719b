"""Hochschild (co)homology of graded quiver algebras.

The engine uses the reduced complex relative to the vertex subalgebra
``E = k^N``: tensor powers of the radical ``J`` over ``E``, so a chain
``j_1 (x) ... (x) j_m`` only exists when consecutive factors compose
(``source(j_i) == target(j_{i+1})``).  Separability of ``E`` makes this
compute the same groups as the ordinary bar complex; ``full_bar_complex``
is the unreduced complex over the ground field, kept as an independent check.

Homology, ``C_m = A (x)_{E-E} J^{(x)m}``::

    b(a|j1|...|jm) = a j1|j2|...|jm + sum_i (-1)^i a|...|j_i j_{i+1}|...
                     + (-1)^m jm a|j1|...|j_{m-1}

Cohomology, ``C^m = Hom_{E-E}(J^{(x)m}, A)``::

    (bf)(j1|...|j_{m+1}) = j1 f(j2|...) + sum_i (-1)^i f(...|j_i j_{i+1}|...)
                           + (-1)^{m+1} f(j1|...|jm) j_{m+1}

Both differentials preserve internal degree (``deg a + deg chain`` for
homology, ``deg a - deg chain`` for cohomology), so every complex is built
one internal degree at a time.
"""

from __future__ import annotations

from collections import defaultdict
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field as dc_field
from itertools import product

from . import resources
from .algebra import GradedAlgebra, center_dim
from .errors import HlabError, InsufficientPrecisionError, NotAComplexError
from .linalg import ExactMatrix, axpy, rank
from .tables import DimTable

HOMOLOGY = "homology"
COHOMOLOGY = "cohomology"


@dataclass
class Complex:
    """A finite stretch ``C_0 .. C_top`` of a (co)chain complex.

    ``diffs[m]`` leaves ``C_m``: to ``C_{m-1}`` for homology, to ``C^{m+1}``
    for cohomology.  ``complete`` means every term above ``top`` is zero.
    """

    direction: str
    dims: list[int]
    diffs: dict[int, ExactMatrix]
    complete: bool = False
    internal_degree: int | None = None
    labels: list[list] = dc_field(default_factory=list, repr=False)

    @property
    def top(self) -> int:
        return len(self.dims) - 1

    def _d(self, m: int) -> ExactMatrix | None:
        return self.diffs.get(m)

    def _rank(self, m: int) -> int:
        d = self._d(m)
        return 0 if d is None else rank(d)

    def homology(self, i: int) -> int:
        """Dimension of the homology at position ``i`` (needs ``i + 1 <= top``
        unless the complex is complete)."""
        if i < 0:
            return 0
        if i > self.top:
            if self.complete:
                return 0
            raise InsufficientPrecisionError(f"position {i} beyond built range {self.top}")
        if self.direction == HOMOLOGY:
            if i + 1 > self.top and not self.complete:
                raise InsufficientPrecisionError(f"need C_{i + 1} to compute H_{i}")
            return self.dims[i] - self._rank(i) - self._rank(i + 1)
        if i + 1 > self.top and not self.complete:
            raise InsufficientPrecisionError(f"need C^{i + 1} to compute H^{i}")
        return self.dims[i] - self._rank(i) - self._rank(i - 1)

    def certified_top(self) -> int:
        return self.top if self.complete else self.top - 1

    def check_square_zero(self) -> bool:
        for m in range(self.top + 1):
            d1 = self._d(m)
            if d1 is None:
                continue
            nxt = m - 1 if self.direction == HOMOLOGY else m + 1
            d2 = self._d(nxt)
            if d2 is None:
                continue
            if not (d2 @ d1).is_zero():
                return False
        return True

    def euler_identity(self, k: int | None = None) -> bool:
        """``sum_{m<=k} (-1)^m dim C_m == sum_{i<=k} (-1)^i h_i + (-1)^k rank(boundary)``.

        The boundary correction is ``rank d_{k+1}`` (homology) or ``rank d^k``
        (cohomology); it vanishes when the complex stops at ``k``.
        """
        if k is None:
            k = self.certified_top()
        lhs = sum((-1) ** m * self.dims[m] for m in range(k + 1))
        hs = sum((-1) ** i * self.homology(i) for i in range(k + 1))
        if self.direction == HOMOLOGY:
            edge = self._rank(k + 1)
        else:
            edge = self._rank(k)
        return lhs == hs + (-1) ** k * edge


# -- chains -------------------------------------------------------------------

class _Chains:
    """Composable radical chains, grouped by (length, target vertex)."""

    def __init__(self, a: GradedAlgebra, cap: int | None):
        self.a = a
        self.cap = cap
        rad = [i for i in a.radical() if cap is None or a.degree[i] <= cap]
        self.by_target: dict[int, list[int]] = defaultdict(list)
        for j in rad:
            self.by_target[a.target[j]].append(j)
        # level m: list of (chain, target, source, degree)
        self.levels: list[list[tuple[tuple[int, ...], int, int, int]]] = [[]]

    def level(self, m: int):
        a = self.a
        while len(self.levels) <= m:
            k = len(self.levels)
            if k == 1:
                nxt = [((j,), a.target[j], a.source[j], a.degree[j])
                       for v in sorted(self.by_target) for j in self.by_target[v]]
            else:
                nxt = []
                for chain, t, s, deg in self.levels[k - 1]:
                    for j in self.by_target.get(s, ()):
                        d = deg + a.degree[j]
                        if self.cap is None or d <= self.cap:
                            nxt.append((chain + (j,), t, a.source[j], d))
            resources.require(len(nxt), f"chains of length {k}")
            self.levels.append(nxt)
        return self.levels[m]


def _basis_by_block(a: GradedAlgebra):
    """(source, target, degree) -> list of basis indices."""
    out: dict[tuple[int, int, int], list[int]] = defaultdict(list)
    for i in range(len(a)):
        out[(a.source[i], a.target[i], a.degree[i])].append(i)
    return out


def _reduced_terms(a: GradedAlgebra, direction: str, top: int, cap: int | None):
    """Term bases ``[m] -> list of (chain_key, a_index, internal_degree)``.

    A chain key is ``(vertex, ())`` for the empty chain at a vertex and
    ``(target, (j1, ..., jm))`` otherwise.
    """
    chains = _Chains(a, cap)
    blocks = _basis_by_block(a)
    max_deg = len(a.by_degree) - 1
    terms = []
    for m in range(top + 1):
        if m == 0:
            items = [(v, (), v, v, 0) for v in range(a.vertex_count)]
        else:
            items = [(t, ch, t, s, deg) for ch, t, s, deg in chains.level(m)]
        basis = []
        for key_v, ch, t, s, cdeg in items:
            if direction == HOMOLOGY:
                # a runs from target(chain) back to source(chain)
                src, tgt = t, s
                degs = range(0, max_deg + 1) if cap is None else range(0, cap - cdeg + 1)
                for e in degs:
                    for ai in blocks.get((src, tgt, e), ()):
                        basis.append(((key_v, ch), ai, cdeg + e))
            else:
                src, tgt = s, t
                for e in range(0, max_deg + 1):
                    for ai in blocks.get((src, tgt, e), ()):
                        basis.append(((key_v, ch), ai, e - cdeg))
        terms.append(basis)
    return terms, chains


def _homology_image(a: GradedAlgebra, chain: tuple[int, ...], ai: int) -> list:
    """b(a|chain) as a list of ((target_vertex, chain'), a', coef)."""
    m = len(chain)
    out = []
    if m == 0:
        return out
    f = a.field
    j1 = chain[0]
    rest = chain[1:]
    key_rest = (a.target[rest[0]] if rest else a.source[j1], rest)
    for k, x in a.mul(ai, j1).items():
        out.append((key_rest, k, x))
    for i in range(1, m):
        prod = a.mul(chain[i - 1], chain[i])
        sign = 1 if i % 2 == 0 else -1
        for k, x in prod.items():
            new = chain[: i - 1] + (k,) + chain[i + 1:]
            out.append(((a.target[new[0]], new), ai, f.norm(sign * x)))
    jm = chain[-1]
    head = chain[:-1]
    key_head = (a.target[head[0]] if head else a.source[ai], head)
    sign = 1 if m % 2 == 0 else -1
    for k, x in a.mul(jm, ai).items():
        out.append((key_head, k, f.norm(sign * x)))
    return out


def _cohomology_rows(a: GradedAlgebra, chain: tuple[int, ...], col_index):
    """Entries of the row block for an (m+1)-chain: yields (row_key, col, coef).

    ``col_index`` maps (chain_key, a) of the previous term to a column.
    """
    f = a.field
    m1 = len(chain)
    j1 = chain[0]
    rest = chain[1:]
    key_rest = (a.target[rest[0]] if rest else a.source[j1], rest)
    head = chain[:-1]
    jl = chain[-1]
    key_head = (a.target[head[0]] if head else a.target[jl], head)
    chain_key = (a.target[j1], chain)
    entries: dict[tuple, dict[int, object]] = defaultdict(dict)

    def add(row_a, col, x):
        row = entries[(chain_key, row_a)]
        s = f.norm(row.get(col, 0) + x)
        if s:
            row[col] = s
        else:
            row.pop(col, None)

    # j1 * f(rest)
    for (ck, b), col in col_index.get(key_rest, {}).items():
        for k, x in a.mul(j1, b).items():
            add(k, col, x)
    # middle faces
    for i in range(1, m1):
        sign = 1 if i % 2 == 0 else -1
        for k, x in a.mul(chain[i - 1], chain[i]).items():
            new = chain[: i - 1] + (k,) + chain[i + 1:]
            nk = (a.target[new[0]], new)
            for (ck, b), col in col_index.get(nk, {}).items():
                add(b, col, f.norm(sign * x))
    # (-1)^{m+1} f(head) * j_last, where m + 1 = len(chain)
    sign = 1 if m1 % 2 == 0 else -1
    for (ck, b), col in col_index.get(key_head, {}).items():
        for k, x in a.mul(b, jl).items():
            add(k, col, f.norm(sign * x))
    return entries


def reduced_complexes(a: GradedAlgebra, direction: str, max_i: int,
                      internal_degree: int | None = None) -> dict[int, Complex]:
    """Reduced complexes ``C_0 .. C_{max_i + 1}``, one per internal degree.

    With ``internal_degree`` set only that degree is built (and, for
    homology, chains are capped at that degree so infinite algebras are
    fine); otherwise the algebra must be finite-dimensional.
    """
    if direction not in (HOMOLOGY, COHOMOLOGY):
        raise ValueError(f"direction must be {HOMOLOGY!r} or {COHOMOLOGY!r}")
    if internal_degree is None:
        if not a.finite:
            raise HlabError(f"{a.name} is truncated at degree {a.truncation}; "
                            "use an internal-degree window")
        cap = None
    else:
        if direction == COHOMOLOGY and not a.finite:
            raise InsufficientPrecisionError(
                "graded cohomology windows need a finite-dimensional algebra")
        if direction == HOMOLOGY:
            if internal_degree < 0:
                raise ValueError("homology internal degrees are nonnegative")
            if not a.certifies(internal_degree):
                raise InsufficientPrecisionError(
                    f"internal degree {internal_degree} beyond truncation {a.truncation} of {a.name}")
        cap = internal_degree if direction == HOMOLOGY else None
    top = max_i + 1
    terms, chains = _reduced_terms(a, direction, top, cap)
    resources.require(sum(len(t) for t in terms), "Hochschild terms")

    # split by internal degree
    degrees = sorted({deg for t in terms for (_, _, deg) in t})
    if internal_degree is not None:
        degrees = [internal_degree]
    # complete when J^{(x) top} vanishes (no chains of that length)
    complete = not chains.level(top)
    out: dict[int, Complex] = {}
    for delta in degrees:
        layer = [[(ck, ai) for ck, ai, deg in t if deg == delta] for t in terms]
        out[delta] = _assemble(a, direction, layer, complete, delta)
    return out


def _assemble(a: GradedAlgebra, direction: str, layer: list[list], complete: bool,
              delta: int) -> Complex:
    f = a.field
    index = [{key: n for n, key in enumerate(t)} for t in layer]
    dims = [len(t) for t in layer]
    diffs: dict[int, ExactMatrix] = {}
    top = len(layer) - 1
    if direction == HOMOLOGY:
        for m in range(1, top + 1):
            rows: dict[int, dict] = defaultdict(dict)
            target_index = index[m - 1]
            for col, ((tv, ch), ai) in enumerate(layer[m]):
                for key, k, x in _homology_image(a, ch, ai):
                    r = target_index.get((key, k))
                    if r is None:
                        # only possible if the product left the window
                        raise HlabError(f"boundary term {(key, k)} missing from C_{m - 1}")
                    s = f.norm(rows[r].get(col, 0) + x)
                    if s:
                        rows[r][col] = s
                    else:
                        rows[r].pop(col, None)
            diffs[m] = ExactMatrix.from_rows(f, dims[m - 1], dims[m], rows)
    else:
        for m in range(0, top):
            # columns: C^m grouped by chain key
            col_index: dict[tuple, dict] = defaultdict(dict)
            for col, (ck, ai) in enumerate(layer[m]):
                col_index[ck][(ck, ai)] = col
            row_index = index[m + 1]
            rows: dict[int, dict] = {}
            seen_chains = []
            seen = set()
            for (ck, ai) in layer[m + 1]:
                if ck not in seen:
                    seen.add(ck)
                    seen_chains.append(ck)
            for ck in seen_chains:
                tv, ch = ck
                for (rk, b), row in _cohomology_rows(a, ch, col_index).items():
                    r = row_index.get((rk, b))
                    if r is None:
                        if row:
                            raise HlabError(f"coboundary lands outside C^{m + 1}: {(rk, b)}")
                        continue
                    if row:
                        rows[r] = row
            diffs[m] = ExactMatrix.from_rows(f, dims[m + 1], dims[m], rows)
    cx = Complex(direction, dims, diffs, complete=complete, internal_degree=delta, labels=layer)
    if not cx.check_square_zero():
        raise NotAComplexError(f"b^2 != 0 in {direction} complex of {a.name}, degree {delta}")
    return cx


def _block_dims(args):
    a, direction, max_i, delta = args
    cx = reduced_complexes(a, direction, max_i, delta)[delta]
    return [cx.homology(i) for i in range(max_i + 1)]


def _semisimple(a: GradedAlgebra) -> bool:
    return not a.radical()


def _ungraded(a: GradedAlgebra, direction: str, max_i: int, jobs: int) -> DimTable:
    if max_i < 0:
        raise ValueError("max_i must be nonnegative")
    table = DimTable(max_i=max_i)
    if _semisimple(a):
        # HH^0 = HH_0 = centre = k^N; nothing above
        table[0] = a.vertex_count
        return table
    if jobs > 1:
        degrees = sorted(reduced_complexes(a, direction, max_i).keys())
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_block_dims, [(a, direction, max_i, d) for d in degrees]))
        totals = [sum(r[i] for r in results) for i in range(max_i + 1)]
    else:
        cxs = reduced_complexes(a, direction, max_i)
        totals = [sum(cx.homology(i) for cx in cxs.values()) for i in range(max_i + 1)]
    for i, v in enumerate(totals):
        table[i] = v
    return table


def hh_cohomology(a: GradedAlgebra, max_i: int, jobs: int = 1) -> DimTable:
    """``i -> dim HH^i(A)`` for a finite-dimensional algebra."""
    if not a.finite:
        raise HlabError(f"{a.name} is infinite-dimensional; use hh_graded")
    return _ungraded(a, COHOMOLOGY, max_i, jobs)


def hh_homology(a: GradedAlgebra, max_i: int, jobs: int = 1) -> DimTable:
    """``i -> dim HH_i(A)`` for a finite-dimensional algebra."""
    if not a.finite:
        raise HlabError(f"{a.name} is infinite-dimensional; use hh_graded")
    return _ungraded(a, HOMOLOGY, max_i, jobs)


def hh_graded(a: GradedAlgebra, direction: str, internal_degree: int, max_i: int) -> DimTable:
    """Internal-degree-``d`` component of HH_i (or HH^i), ``0 <= i <= max_i``.

    For homology the degree-``d`` part of ``J^{(x)m}`` vanishes when
    ``m > d``, so entries above ``d`` are certified zeros.
    """
    d = internal_degree
    table = DimTable(max_i=max_i, degrees=(d, d))
    if _semisimple(a):
        if d == 0:
            table[(0, 0)] = a.vertex_count
        return table
    built = min(max_i, d) if direction == HOMOLOGY else max_i
    cx = reduced_complexes(a, direction, built, d)[d]
    for i in range(built + 1):
        table[(i, d)] = cx.homology(i)
    return table


def hh_graded_range(a: GradedAlgebra, direction: str, degrees, max_i: int,
                    jobs: int = 1) -> DimTable:
    """``hh_graded`` over several internal degrees, merged into one table."""
    degrees = list(degrees)
    if jobs > 1 and len(degrees) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            parts = list(pool.map(_graded_task, [(a, direction, d, max_i) for d in degrees]))
    else:
        parts = [hh_graded(a, direction, d, max_i) for d in degrees]
    out = DimTable(max_i=max_i, degrees=(min(degrees), max(degrees)))
    for t in parts:
        out.entries.update(t.entries)
    return out


def _graded_task(args):
    return hh_graded(*args)


def center_total(a: GradedAlgebra) -> int:
    """Sum of ``center_dim`` over all degrees of a finite-dimensional algebra."""
    return sum(center_dim(a, d) for d in range(a.top_degree() + 1))


# -- unreduced bar complex over the ground field (independent check) ----------

def full_bar_complex(a: GradedAlgebra, direction: str, max_i: int) -> Complex:
    """The standard Hochschild complex over ``k``: ``Hom_k(A^{(x)m}, A)`` or
    ``A (x) A^{(x)m}``, built straight from the multiplication table with no
    vertex bookkeeping.  Exponential in ``m``; for small algebras only."""
    if not a.finite:
        raise HlabError("full bar complex needs a finite-dimensional algebra")
    f = a.field
    n = len(a)
    top = max_i + 1
    resources.require(n ** (top + 1), "full bar complex")
    tuples = [list(product(range(n), repeat=m)) for m in range(top + 1)]
    dims = [n * len(t) for t in tuples]

    def idx(m, tup, b):
        # column-major in (tuple, output/coefficient slot)
        return tuples_index[m][tup] * n + b

    tuples_index = [{t: k for k, t in enumerate(ts)} for ts in tuples]
    diffs: dict[int, ExactMatrix] = {}
    if direction == HOMOLOGY:
        for m in range(1, top + 1):
            rows: dict[int, dict] = defaultdict(dict)
            for tup in tuples[m]:
                for b in range(n):
                    col = idx(m, tup, b)
                    acc: dict[int, object] = {}
                    for k, x in a.mul(b, tup[0]).items():
                        axpy(f, acc, x, {idx(m - 1, tup[1:], k): 1})
                    for i in range(1, m):
                        sign = 1 if i % 2 == 0 else -1
                        for k, x in a.mul(tup[i - 1], tup[i]).items():
                            new = tup[: i - 1] + (k,) + tup[i + 1:]
                            axpy(f, acc, sign * x, {idx(m - 1, new, b): 1})
                    sign = 1 if m % 2 == 0 else -1
                    for k, x in a.mul(tup[-1], b).items():
                        axpy(f, acc, sign * x, {idx(m - 1, tup[:-1], k): 1})
                    for r, x in acc.items():
                        rows[r][col] = x
            diffs[m] = ExactMatrix.from_rows(f, dims[m - 1], dims[m], rows)
    elif direction == COHOMOLOGY:
        for m in range(0, top):
            rows = defaultdict(dict)
            # column by column: the basis cochain sending tup to b
            for tup in tuples[m]:
                for b in range(n):
                    col = idx(m, tup, b)
                    acc = {}
                    # (bf)(x1..x_{m+1}) = x1 f(x2..) + sum (-1)^i f(..x_i x_{i+1}..)
                    #                    + (-1)^{m+1} f(x1..xm) x_{m+1}
                    for x1 in range(n):
                        for k, x in a.mul(x1, b).items():
                            axpy(f, acc, x, {idx(m + 1, (x1,) + tup, k): 1})
                    for i in range(1, m + 1):
                        sign = 1 if i % 2 == 0 else -1
                        # tup[i-1] arises as a product y*z of two inputs
                        for y in range(n):
                            for z in range(n):
                                c = a.mul(y, z).get(tup[i - 1])
                                if c:
                                    new = tup[: i - 1] + (y, z) + tup[i:]
                                    axpy(f, acc, sign * c, {idx(m + 1, new, b): 1})
                    sign = 1 if (m + 1) % 2 == 0 else -1
                    for xl in range(n):
                        for k, x in a.mul(b, xl).items():
                            axpy(f, acc, sign * x, {idx(m + 1, tup + (xl,), k): 1})
                    for r, x in acc.items():
                        rows[r][col] = x
            diffs[m] = ExactMatrix.from_rows(f, dims[m + 1], dims[m], rows)
    else:
        raise ValueError(direction)
    cx = Complex(direction, dims, diffs, complete=False)
    if not cx.check_square_zero():
        raise NotAComplexError("b^2 != 0 in the full bar complex")
    return cx


def full_bar_dims(a: GradedAlgebra, direction: str, max_i: int) -> DimTable:
    cx = full_bar_complex(a, direction, max_i)
    return DimTable.from_sequence(cx.homology(i) for i in range(max_i + 1))
