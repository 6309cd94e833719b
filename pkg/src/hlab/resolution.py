"""Minimal graded projective resolutions of right modules.

Indecomposable projectives are ``e_v A`` (spanned by basis elements ending at
``v``).  Each step takes the kernel ``K`` of the previous differential,
computes ``K J`` as the span of ``K * g`` over the algebra generators ``g``
(``J = sum_g A g``), and lifts a vertex-homogeneous complement of ``K J`` in
``K`` to the generators of the next free module.

Everything is graded.  For truncated (infinite-dimensional) algebras the
computation is exact in internal degrees up to the truncation and the result
says so through ``degree_window``.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field as dc_field
from enum import Enum

from .algebra import AlgebraModule, GradedAlgebra, simple_module
from .linalg import Echelon, ExactMatrix, axpy, kernel_basis
from .tables import DimTable


class _Free:
    """``sum_t e_{v_t} A(-g_t)`` with coordinates ``(t, b)``."""

    def __init__(self, a: GradedAlgebra, gens: list[tuple[int, int]], cap: int | None):
        self.a = a
        self.gens = gens
        self.cap = cap
        self.coords: list[tuple[int, int]] = []
        self.by_degree: dict[int, list[int]] = defaultdict(list)
        for t, (v, g) in enumerate(gens):
            for b in range(len(a)):
                d = g + a.degree[b]
                if a.target[b] == v and (cap is None or d <= cap):
                    self.by_degree[d].append(len(self.coords))
                    self.coords.append((t, b))
        self.index = {c: i for i, c in enumerate(self.coords)}

    @property
    def dim(self) -> int:
        return len(self.coords)

    def degree_of(self, i: int) -> int:
        t, b = self.coords[i]
        return self.gens[t][1] + self.a.degree[b]

    def act(self, vec: dict, elem: dict) -> dict:
        """Right action of an algebra element (sparse in the basis)."""
        a, f = self.a, self.a.field
        out: dict = {}
        for i, x in vec.items():
            t, b = self.coords[i]
            for c, y in elem.items():
                for k, z in a.mul(b, c).items():
                    j = self.index.get((t, k))
                    if j is None:
                        continue  # beyond the degree window
                    s = f.norm(out.get(j, 0) + x * y * z)
                    if s:
                        out[j] = s
                    else:
                        out.pop(j, None)
        return out

    def vertex_part(self, vec: dict, w: int) -> dict:
        """``vec * e_w``: keep coordinates whose basis element starts at ``w``."""
        a = self.a
        return {i: x for i, x in vec.items() if a.source[self.coords[i][1]] == w}


@dataclass
class ResolutionStep:
    gens: list[tuple[int, int]]  # (vertex, internal degree) of each summand
    differential: ExactMatrix  # from this free module to the previous one (or the module)

    def multiplicities(self, vertex_count: int) -> list[int]:
        out = [0] * vertex_count
        for v, _ in self.gens:
            out[v] += 1
        return out


@dataclass
class Resolution:
    module: AlgebraModule
    steps: list[ResolutionStep]
    finished: bool
    max_len: int
    degree_window: int | None  # None: exact in every degree
    minimal: bool = True
    _free: list = dc_field(default_factory=list, repr=False)

    @property
    def length(self) -> int | None:
        """Projective dimension, or None when the resolution did not finish."""
        return len(self.steps) - 1 if self.finished else None

    def ext_dims(self) -> list[int]:
        return [len(s.gens) for s in self.steps]

    def check_complex(self) -> bool:
        for k in range(1, len(self.steps)):
            if not (self.steps[k - 1].differential @ self.steps[k].differential).is_zero():
                return False
        return True

    def check_minimal(self) -> bool:
        """Every differential past the augmentation lands in ``F J``."""
        for k in range(1, len(self.steps)):
            free = self._free[k - 1]
            d = self.steps[k].differential
            for r in d.rows():
                t, b = free.coords[r]
                if free.a.degree[b] == 0:
                    return False
        return True


def _module_generators(m: AlgebraModule):
    """Top of ``M``: vertex-homogeneous basis vectors spanning ``M / M J``."""
    a = m.algebra
    f = a.field
    mj = Echelon(f)
    for i in range(m.dim):
        for g in a.generators:
            v: dict = {}
            for c, y in g.items():
                axpy(f, v, y, m.act(i, c))
            if v:
                mj.add(v)
    gens = []
    for d in sorted(set(m.degree)):
        for w in range(a.vertex_count):
            for i in range(m.dim):
                if m.degree[i] == d and m.vertex[i] == w and mj.add({i: f.one}):
                    gens.append((w, d, {i: f.one}))
    return gens


def _kernel_by_degree(src: _Free, images: dict[int, dict], target_dim: int) -> dict[int, list[dict]]:
    f = src.a.field
    out: dict[int, list[dict]] = {}
    for d, cols in sorted(src.by_degree.items()):
        rows: dict[int, dict] = defaultdict(dict)
        for c, i in enumerate(cols):
            for r, x in images[i].items():
                rows[r][c] = x
        m = ExactMatrix.from_rows(f, target_dim, len(cols), rows)
        ker = kernel_basis(m).basis
        if ker:
            out[d] = [{cols[c]: x for c, x in v.items()} for v in ker]
    return out


def _next_generators(free: _Free, kernel: dict[int, list[dict]]):
    a = free.a
    f = a.field
    gens = []
    for d in sorted(kernel):
        kj = Echelon(f)
        for g in a.generators:
            gdeg = a.degree[next(iter(g))]
            for v in kernel.get(d - gdeg, ()):
                prod = free.act(v, g)
                if prod:
                    kj.add(prod)
        for w in range(a.vertex_count):
            ech = Echelon(f)
            for row in kj.pivots.values():
                part = free.vertex_part(row, w)
                if part:
                    ech.add(part)
            for v in kernel[d]:
                part = free.vertex_part(v, w)
                if part and ech.add(part):
                    gens.append((w, d, part))
    return gens


def minimal_resolution(m: AlgebraModule, max_len: int, window: int | None = None) -> Resolution:
    """Minimal projective resolution up to ``max_len`` steps.

    ``window`` bounds the internal degrees tracked; it defaults to the
    truncation for infinite-dimensional algebras and to no bound otherwise.
    A resolution still running after ``max_len`` steps comes back with
    ``finished=False``.
    """
    a = m.algebra
    f = a.field
    if window is None and not a.finite:
        window = a.truncation
    if window is not None and not a.finite and window > a.truncation:
        raise ValueError(f"window {window} exceeds truncation {a.truncation}")

    tops = _module_generators(m)
    free = _Free(a, [(w, d) for w, d, _ in tops], window)
    images: dict[int, dict] = {}
    for i, (t, b) in enumerate(free.coords):
        vec: dict = {}
        for k, x in tops[t][2].items():
            axpy(f, vec, x, m.act(k, b))
        images[i] = vec
    aug = ExactMatrix.from_columns(f, m.dim, [images[i] for i in range(free.dim)])
    steps = [ResolutionStep(free.gens, aug)]
    frees = [free]
    kernel = _kernel_by_degree(free, images, m.dim)
    finished = not kernel
    while not finished and len(steps) <= max_len:
        gens = _next_generators(free, kernel)
        nxt = _Free(a, [(w, d) for w, d, _ in gens], window)
        images = {}
        for i, (t, b) in enumerate(nxt.coords):
            images[i] = free.act(gens[t][2], {b: f.one})
        diff = ExactMatrix.from_columns(f, free.dim, [images[i] for i in range(nxt.dim)])
        steps.append(ResolutionStep(nxt.gens, diff))
        frees.append(nxt)
        kernel = _kernel_by_degree(nxt, images, free.dim)
        free = nxt
        finished = not kernel
    return Resolution(m, steps, finished, max_len, window, _free=frees)


def projective_dimension(m: AlgebraModule, max_len: int, window: int | None = None) -> int | None:
    return minimal_resolution(m, max_len, window).length


def global_dimension(a: GradedAlgebra, max_len: int, window: int | None = None) -> int | None:
    """Max over vertex simples of their projective dimension; None if any
    resolution is still running after ``max_len`` steps."""
    best = 0
    for v in range(a.vertex_count):
        pd = projective_dimension(simple_module(a, v), max_len, window)
        if pd is None:
            return None
        best = max(best, pd)
    return best


class Smoothness(str, Enum):
    SMOOTH = "smooth"
    NOT_SMOOTH_UP_TO_BOUND = "not-smooth-up-to-bound"


def smoothness_check(a: GradedAlgebra, max_len: int) -> Smoothness:
    """Smooth exactly when the global dimension is finite (within ``max_len``)."""
    if global_dimension(a, max_len) is None:
        return Smoothness.NOT_SMOOTH_UP_TO_BOUND
    return Smoothness.SMOOTH


def ext_algebra_dims(a: GradedAlgebra, max_i: int) -> DimTable:
    """``i -> dim Ext^i(A/J, A/J)``, read off the generator counts of the
    minimal resolutions of the vertex simples."""
    table = DimTable(max_i=max_i)
    totals = [0] * (max_i + 1)
    for v in range(a.vertex_count):
        res = minimal_resolution(simple_module(a, v), max_i)
        for i, n in enumerate(res.ext_dims()[: max_i + 1]):
            totals[i] += n
    for i, n in enumerate(totals):
        table[i] = n
    return table
