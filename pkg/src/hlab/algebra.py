"""Graded quiver algebras with homogeneous relations.

Composition convention: a product ``a*b`` means "first ``b``, then ``a``".  A
path is stored as the tuple of arrow indices in product order, so the
rightmost arrow is traversed first; ``a*b`` is nonzero only when
``source(a) == target(b)``.  Right modules are representations on which paths
act from the right.

Each degree of the algebra is computed on its own: the degree-``d`` part of
the two-sided ideal is the span of the degree-``d`` relations together with
``arrow * I[d - deg]`` and ``I[d - deg] * arrow``.  Inside each degree the
basis is the set of paths chosen greedily in lexicographic order of arrow
indices, i.e. a path is kept when it is independent of the ideal plus the
paths kept before it.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from fractions import Fraction
from typing import Hashable, Mapping, Sequence

from . import resources
from .errors import RelationError
from .linalg import QQ, Echelon, ExactMatrix, Field, axpy, kernel_basis, rank

# Paths longer than this are refused outright, independent of memory.
MAX_PATHS_PER_DEGREE = 250_000


@dataclass(frozen=True)
class Arrow:
    id: str
    source: int
    target: int
    degree: int = 1


@dataclass(frozen=True)
class Quiver:
    vertex_count: int
    arrows: tuple[Arrow, ...]

    def __post_init__(self):
        object.__setattr__(self, "arrows", tuple(self.arrows))
        if self.vertex_count < 1:
            raise ValueError("a quiver needs at least one vertex")
        seen = set()
        for a in self.arrows:
            if a.id in seen:
                raise ValueError(f"duplicate arrow id {a.id!r}")
            seen.add(a.id)
            if not (0 <= a.source < self.vertex_count and 0 <= a.target < self.vertex_count):
                raise ValueError(f"arrow {a.id!r} has an endpoint out of range")
            if a.degree < 1:
                raise ValueError(f"arrow {a.id!r} must have positive degree")
            if a.id in ("+", "-") or _looks_numeric(a.id) or not a.id or any(ch.isspace() for ch in a.id):
                raise ValueError(f"arrow id {a.id!r} is not a valid identifier")

    def index(self, arrow_id: str) -> int:
        for i, a in enumerate(self.arrows):
            if a.id == arrow_id:
                return i
        raise RelationError(f"unknown arrow {arrow_id!r}")

    def path_from_ids(self, ids: Sequence[str]) -> tuple[int, ...]:
        path = tuple(self.index(i) for i in ids)
        for left, right in zip(path, path[1:]):
            if self.arrows[left].source != self.arrows[right].target:
                raise RelationError(
                    f"path {' '.join(ids)} is not composable at "
                    f"{self.arrows[left].id}*{self.arrows[right].id}")
        return path

    def path_source(self, path: tuple[int, ...]) -> int:
        return self.arrows[path[-1]].source

    def path_target(self, path: tuple[int, ...]) -> int:
        return self.arrows[path[0]].target

    def path_degree(self, path: tuple[int, ...]) -> int:
        return sum(self.arrows[i].degree for i in path)


def _looks_numeric(token: str) -> bool:
    try:
        Fraction(token)
    except (ValueError, ZeroDivisionError):
        return False
    return True


@dataclass(frozen=True)
class Relation:
    """A linear combination of paths; each term is ``(coef, arrow ids)``."""

    terms: tuple[tuple[Fraction, tuple[str, ...]], ...]

    def __post_init__(self):
        object.__setattr__(self, "terms", tuple(
            (Fraction(c), tuple(ids)) for c, ids in self.terms))
        if not self.terms:
            raise RelationError("empty relation")
        for c, ids in self.terms:
            if not ids:
                raise RelationError("relations must lie in the radical (no trivial paths)")

    def resolve(self, quiver: Quiver) -> tuple[int, int, int, dict[tuple[int, ...], Fraction]]:
        """Returns ``(source, target, degree, {path: coef})``; checks homogeneity."""
        combo: dict[tuple[int, ...], Fraction] = {}
        shape = None
        for c, ids in self.terms:
            path = quiver.path_from_ids(ids)
            key = (quiver.path_source(path), quiver.path_target(path), quiver.path_degree(path))
            if shape is None:
                shape = key
            elif key != shape:
                raise RelationError(
                    f"inhomogeneous relation: term {' '.join(ids)} has "
                    f"(source, target, degree) {key}, expected {shape}")
            combo[path] = combo.get(path, Fraction(0)) + c
        combo = {p: c for p, c in combo.items() if c}
        return shape[0], shape[1], shape[2], combo


@dataclass
class GradedAlgebra:
    """A graded basic algebra with an explicit basis and multiplication table.

    Basis elements ``0..N-1`` are the vertex idempotents ``e_0..e_{N-1}``;
    everything else spans the radical.  ``mult`` maps composable pairs of
    basis indices to sparse combinations of basis indices; missing pairs
    multiply to zero.  Products whose degree exceeds ``truncation`` are not
    recorded, and are only known to vanish when ``finite`` is set.
    """

    field: Field
    vertex_count: int
    labels: list[Hashable]
    degree: list[int]
    source: list[int]
    target: list[int]
    mult: dict[tuple[int, int], dict[int, object]]
    truncation: int
    finite: bool
    generators: list[dict[int, object]]
    quiver: Quiver | None = None
    relations: tuple[Relation, ...] = ()
    name: str = "algebra"
    by_degree: list[list[int]] = dc_field(default_factory=list)

    def __post_init__(self):
        if not self.by_degree:
            by_degree: list[list[int]] = [[] for _ in range(self.truncation + 1)]
            for i, d in enumerate(self.degree):
                by_degree[d].append(i)
            self.by_degree = by_degree
        self.index = {lab: i for i, lab in enumerate(self.labels)}

    # -- queries ----------------------------------------------------------------
    def __len__(self):
        return len(self.labels)

    @property
    def dim(self) -> int:
        return len(self.labels)

    def dims(self) -> list[int]:
        return [len(b) for b in self.by_degree]

    def radical(self) -> list[int]:
        return [i for i, d in enumerate(self.degree) if d >= 1]

    def idempotent(self, v: int) -> int:
        return v

    def top_degree(self) -> int:
        nonzero = [d for d, b in enumerate(self.by_degree) if b]
        return max(nonzero)

    def certifies(self, d: int) -> bool:
        """True when the degree-``d`` part is known (possibly zero)."""
        return d <= self.truncation or self.finite

    def mul(self, i: int, j: int) -> dict:
        return self.mult.get((i, j), {})

    def mul_vec(self, u: Mapping, v: Mapping) -> dict:
        out: dict = {}
        field = self.field
        for i, a in u.items():
            for j, b in v.items():
                prod = self.mult.get((i, j))
                if prod:
                    axpy(field, out, field.norm(a * b), prod)
        return out

    def composable(self, i: int, j: int) -> bool:
        return self.source[i] == self.target[j]

    def summary(self) -> str:
        return f"{self.name}: dims {self.dims()} over {self.field}"


def _paths_by_degree(quiver: Quiver, max_degree: int) -> list[list[tuple[int, ...]]]:
    paths: list[list[tuple[int, ...]]] = [[] for _ in range(max_degree + 1)]
    # degree 0 handled separately (idempotents)
    for d in range(1, max_degree + 1):
        out = []
        for ai, a in enumerate(quiver.arrows):
            if a.degree == d:
                out.append((ai,))
            elif a.degree < d:
                for p in paths[d - a.degree]:
                    if quiver.path_target(p) == a.source:
                        out.append((ai,) + p)
        if len(out) > MAX_PATHS_PER_DEGREE:
            raise resources.ResourceLimitError(
                f"{len(out)} paths in degree {d} exceeds the per-degree bound")
        out.sort()
        paths[d] = out
    resources.require(sum(len(p) for p in paths), "path enumeration")
    return paths


def build_algebra(quiver: Quiver, relations: Sequence[Relation], max_degree: int,
                  field: Field = QQ, name: str = "algebra") -> GradedAlgebra:
    """Quotient of the path algebra by the ideal generated by ``relations``.

    The basis is computed in every degree up to ``max_degree``.  The result is
    marked finite-dimensional when some window of ``max arrow degree``
    consecutive degrees is zero, which forces every longer path into the
    ideal.
    """
    if max_degree < 0:
        raise ValueError("max_degree must be nonnegative")
    relations = tuple(relations)
    resolved = [r.resolve(quiver) for r in relations]
    for s, t, d, combo in resolved:
        if not combo:
            raise RelationError("relation cancels to zero")
    paths = _paths_by_degree(quiver, max_degree)
    max_arrow = max((a.degree for a in quiver.arrows), default=1)

    # Per (degree, source, target) block: column index of each path.  Column 0
    # is the lexicographically largest path, so echelon pivots fall on large
    # paths and the surviving basis consists of the greedy lex-smallest ones.
    blocks: dict[tuple[int, int, int], list[tuple[int, ...]]] = {}
    for d in range(1, max_degree + 1):
        for p in paths[d]:
            blocks.setdefault((d, quiver.path_source(p), quiver.path_target(p)), []).append(p)
    col_of: dict[tuple[int, ...], int] = {}
    for key, plist in blocks.items():
        plist.sort(reverse=True)
        for c, p in enumerate(plist):
            col_of[p] = c

    ideal: dict[tuple[int, int, int], Echelon] = {
        key: Echelon(field) for key in blocks}
    # rows of the ideal in path coordinates, per degree, for padding
    ideal_rows: dict[int, list[tuple[int, int, dict[tuple[int, ...], object]]]] = {}

    rels_by_degree: dict[int, list] = {}
    for s, t, d, combo in resolved:
        rels_by_degree.setdefault(d, []).append((s, t, combo))

    def insert(d, s, t, combo):
        key = (d, s, t)
        vec = {col_of[p]: field.convert(c) for p, c in combo.items()}
        vec = {k: v for k, v in vec.items() if v}
        if vec and ideal[key].add(vec):
            ideal_rows.setdefault(d, []).append((s, t, combo))

    for d in range(1, max_degree + 1):
        for s, t, combo in rels_by_degree.get(d, ()):
            insert(d, s, t, combo)
        for ai, a in enumerate(quiver.arrows):
            e = d - a.degree
            if e < 1:
                continue
            for s, t, combo in ideal_rows.get(e, ()):
                if t == a.source:  # a * r
                    insert(d, s, a.target, {(ai,) + p: c for p, c in combo.items()})
                if s == a.target:  # r * a
                    insert(d, a.source, t, {p + (ai,): c for p, c in combo.items()})

    # basis: idempotents, then non-pivot paths in each degree
    n = quiver.vertex_count
    labels: list[Hashable] = [("e", v) for v in range(n)]
    degree = [0] * n
    source = list(range(n))
    target = list(range(n))
    for d in range(1, max_degree + 1):
        for p in paths[d]:
            key = (d, quiver.path_source(p), quiver.path_target(p))
            if col_of[p] not in ideal[key].pivots:
                labels.append(p)
                degree.append(d)
                source.append(key[1])
                target.append(key[2])
    index = {lab: i for i, lab in enumerate(labels)}

    nf_cache: dict[tuple[int, ...], dict[int, object]] = {}

    def normal_form(p: tuple[int, ...]) -> dict[int, object]:
        got = nf_cache.get(p)
        if got is not None:
            return got
        d = quiver.path_degree(p)
        if d > max_degree:
            raise AssertionError("normal form requested beyond truncation")
        key = (d, quiver.path_source(p), quiver.path_target(p))
        plist = blocks[key]
        red = ideal[key].reduce({col_of[p]: field.one})
        out = {index[plist[c]]: x for c, x in red.items()}
        nf_cache[p] = out
        return out

    mult: dict[tuple[int, int], dict[int, object]] = {}
    for i in range(len(labels)):
        for j in range(len(labels)):
            if source[i] != target[j] or degree[i] + degree[j] > max_degree:
                continue
            if degree[i] == 0:
                mult[(i, j)] = {j: field.one}
            elif degree[j] == 0:
                mult[(i, j)] = {i: field.one}
            else:
                prod = normal_form(labels[i] + labels[j])
                if prod:
                    mult[(i, j)] = prod

    dims = [0] * (max_degree + 1)
    for d in degree:
        dims[d] += 1
    finite = any(all(dims[e] == 0 for e in range(d, d + max_arrow))
                 for d in range(1, max_degree - max_arrow + 2))
    if not quiver.arrows:
        finite = True
    truncation = max_degree
    if finite:
        truncation = max(d for d in range(max_degree + 1) if dims[d])

    generators = []
    for ai, a in enumerate(quiver.arrows):
        if a.degree <= max_degree:
            g = normal_form((ai,))
            if g:
                generators.append(g)

    return GradedAlgebra(
        field=field, vertex_count=n, labels=labels, degree=degree, source=source,
        target=target, mult=mult, truncation=truncation, finite=finite,
        generators=generators, quiver=quiver, relations=relations, name=name)


def hilbert_function(a: GradedAlgebra) -> "HilbertSeries":
    from .tables import HilbertSeries
    return HilbertSeries(tuple(a.dims()), a.truncation, a.finite)


def check_associativity(a: GradedAlgebra, max_total_degree: int | None = None) -> bool:
    """Exhaustive ``(xy)z == x(yz)`` over basis triples within the truncation."""
    bound = a.truncation if max_total_degree is None else min(max_total_degree, a.truncation)
    n = len(a)
    for i in range(n):
        for j in range(n):
            if a.source[i] != a.target[j] or a.degree[i] + a.degree[j] > bound:
                continue
            ij = a.mul(i, j)
            for k in range(n):
                if a.source[j] != a.target[k] or a.degree[i] + a.degree[j] + a.degree[k] > bound:
                    continue
                left = a.mul_vec(ij, {k: a.field.one})
                right = a.mul_vec({i: a.field.one}, a.mul(j, k))
                if left != right:
                    return False
    return True


def check_idempotents(a: GradedAlgebra) -> bool:
    """``e_i e_j = delta_ij e_i`` and ``sum_i e_i`` acts as the identity."""
    one = a.field.one
    n = a.vertex_count
    for i in range(n):
        for j in range(n):
            expect = {i: one} if i == j else {}
            if a.mul(i, j) != expect:
                return False
    unit = {v: one for v in range(n)}
    for b in range(len(a)):
        if a.degree[b] > a.truncation:
            continue
        if a.mul_vec(unit, {b: one}) != {b: one} or a.mul_vec({b: one}, unit) != {b: one}:
            return False
    return True


def center_dim(a: GradedAlgebra, d: int) -> int:
    """Dimension of the degree-``d`` elements commuting with every basis element.

    Only products that stay within the truncation are tested.
    """
    if not a.certifies(d):
        from .errors import InsufficientPrecisionError
        raise InsufficientPrecisionError(f"degree {d} beyond truncation {a.truncation}")
    if d >= len(a.by_degree):
        return 0
    unknowns = a.by_degree[d]
    if not unknowns:
        return 0
    rows: dict[tuple[int, int], dict[int, object]] = {}
    field = a.field
    for b in range(len(a)):
        if a.degree[b] + d > a.truncation and not a.finite:
            continue
        for col, z in enumerate(unknowns):
            # z*b - b*z
            for k, x in a.mul(z, b).items():
                row = rows.setdefault((b, k), {})
                s = field.norm(row.get(col, 0) + x)
                if s:
                    row[col] = s
                else:
                    row.pop(col)
            for k, x in a.mul(b, z).items():
                row = rows.setdefault((b, k), {})
                s = field.norm(row.get(col, 0) - x)
                if s:
                    row[col] = s
                else:
                    row.pop(col)
    keys = sorted(rows)
    m = ExactMatrix.from_rows(field, len(keys), len(unknowns),
                              {r: rows[k] for r, k in enumerate(keys)})
    return len(unknowns) - rank(m)


@dataclass
class AlgebraModule:
    """A finite-dimensional graded right module given by its action table.

    ``action[(m, b)]`` is ``m * b`` as a sparse combination of module basis
    indices; missing entries act by zero.
    """

    algebra: GradedAlgebra
    vertex: list[int]
    degree: list[int]
    action: dict[tuple[int, int], dict[int, object]]

    @property
    def dim(self) -> int:
        return len(self.vertex)

    def act(self, m: int, b: int) -> dict:
        return self.action.get((m, b), {})


def simple_module(a: GradedAlgebra, vertex: int) -> AlgebraModule:
    if not 0 <= vertex < a.vertex_count:
        raise IndexError(f"vertex {vertex} out of range 0..{a.vertex_count - 1}")
    return AlgebraModule(a, [vertex], [0], {(0, vertex): {0: a.field.one}})


def check_module(m: AlgebraModule) -> bool:
    """Unital and associative on all module/algebra basis triples."""
    a = m.algebra
    one = a.field.one
    unit = {v: one for v in range(a.vertex_count)}
    field = a.field

    def act_vec(vec, b):
        out: dict = {}
        for i, x in vec.items():
            axpy(field, out, x, m.act(i, b))
        return out

    for i in range(m.dim):
        acc: dict = {}
        for v, x in unit.items():
            axpy(field, acc, x, m.act(i, v))
        if acc != {i: one}:
            return False
        for b in range(len(a)):
            mb = m.act(i, b)
            for c in range(len(a)):
                if a.degree[b] + a.degree[c] > a.truncation:
                    continue
                left = act_vec(mb, c)
                right: dict = {}
                for k, x in a.mul(b, c).items():
                    axpy(field, right, x, m.act(i, k))
                if left != right:
                    return False
    return True


def quadratic_presentation(a: GradedAlgebra) -> tuple[Quiver, tuple[Relation, ...]]:
    """Quiver and quadratic relations read off from the multiplication table.

    Arrows are the degree-one basis elements; relations span the kernel of the
    multiplication map from composable arrow pairs onto degree two.  Only
    meaningful for algebras generated in degree one with quadratic relations.
    """
    field = a.field
    ones = a.by_degree[1] if len(a.by_degree) > 1 else []
    arrows = tuple(Arrow(f"a{k}", a.source[i], a.target[i], 1) for k, i in enumerate(ones))
    quiver = Quiver(a.vertex_count, arrows)
    pairs = [(x, y) for x in range(len(ones)) for y in range(len(ones))
             if a.source[ones[x]] == a.target[ones[y]]]
    relations: list[Relation] = []
    if pairs and a.certifies(2):
        cols = [a.mul(ones[x], ones[y]) for x, y in pairs]
        m = ExactMatrix.from_columns(field, len(a), cols)
        for vec in kernel_basis(m).basis:
            terms = []
            for c in sorted(vec):
                x, y = pairs[c]
                terms.append((_as_fraction(field, vec[c]), (arrows[x].id, arrows[y].id)))
            relations.append(Relation(tuple(terms)))
    return quiver, tuple(relations)


def _as_fraction(field: Field, x) -> Fraction:
    if field.characteristic == 0:
        return Fraction(x)
    p = field.characteristic
    x = int(x) % p
    # symmetric representative keeps files readable (e.g. -1 rather than p-1)
    return Fraction(x - p if x > p // 2 else x)
