"""Builders for the explicit algebras: Beilinson, rolled-up, twisted group algebras."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from math import comb
from typing import Iterator

from .algebra import Arrow, GradedAlgebra, Quiver, Relation, build_algebra
from .errors import HlabError
from .linalg import QQ, Field, PrimeField, smallest_prime_congruent_one
from .tables import HilbertSeries


@dataclass(frozen=True)
class BeilinsonSpec:
    n: int
    variant: str = "symmetric"  # or "exterior"

    def __post_init__(self):
        if self.n < 2:
            raise ValueError("Beilinson algebras need n >= 2")
        if self.variant not in ("symmetric", "exterior"):
            raise ValueError(f"unknown variant {self.variant!r}")


@dataclass(frozen=True)
class CyclicActionSpec:
    """Diagonal action of Z/r on ``n_vars`` variables: the generator scales
    ``x_i`` by ``zeta**weights[i]``."""

    n_vars: int
    group_order: int
    weights: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "weights", tuple(self.weights))
        if self.n_vars < 1:
            raise ValueError("need at least one variable")
        if self.group_order < 1:
            raise ValueError("group order must be positive")
        if len(self.weights) != self.n_vars:
            raise ValueError(f"expected {self.n_vars} weights, got {len(self.weights)}")
        if any(not 0 <= w < self.group_order for w in self.weights):
            raise ValueError(f"weights must lie in [0, {self.group_order})")

    @property
    def det_weight(self) -> int:
        return sum(self.weights) % self.group_order

    @property
    def is_sl(self) -> bool:
        return self.det_weight == 0

    @classmethod
    def standard(cls, n: int) -> "CyclicActionSpec":
        """mu_n acting on n variables by scalars."""
        return cls(n, n, (1,) * n)


def sym_dim(n: int, d: int) -> int:
    """dim Sym_d(k^n)."""
    if d < 0:
        return 0
    return comb(n + d - 1, d)


def monomials(n: int, d: int) -> Iterator[tuple[int, ...]]:
    """Exponent vectors of total degree ``d`` in ``n`` variables, lex descending."""
    if n == 1:
        yield (d,)
        return
    for first in range(d, -1, -1):
        for rest in monomials(n - 1, d - first):
            yield (first,) + rest


# -- quiver presentations --------------------------------------------------------

def _arrow_id(a: int, i: int) -> str:
    return f"x{a}_{i}"


def _linear_or_cyclic(n: int, cyclic: bool, variant: str):
    steps = range(n) if cyclic else range(n - 1)
    arrows = [Arrow(_arrow_id(a, i), i, (i + 1) % n) for i in steps for a in range(1, n + 1)]
    quiver = Quiver(n, tuple(arrows))
    # consecutive pairs i -> i+1 -> i+2
    mids = range(n) if cyclic else range(n - 2)
    rels = []
    sign = -1 if variant == "symmetric" else 1
    for i in mids:
        j = (i + 1) % n
        for a in range(1, n + 1):
            for b in range(a + 1, n + 1):
                rels.append(Relation((
                    (1, (_arrow_id(a, j), _arrow_id(b, i))),
                    (sign, (_arrow_id(b, j), _arrow_id(a, i))))))
            if variant == "exterior":
                rels.append(Relation(((1, (_arrow_id(a, j), _arrow_id(a, i))),)))
    return quiver, tuple(rels)


def beilinson(spec: BeilinsonSpec, field: Field = QQ) -> GradedAlgebra:
    """A_0 (symmetric relations) or A_1 (exterior relations) on the linear quiver."""
    quiver, rels = _linear_or_cyclic(spec.n, cyclic=False, variant=spec.variant)
    tag = "sym" if spec.variant == "symmetric" else "ext"
    # one degree past the top certifies finite dimensionality
    return build_algebra(quiver, rels, spec.n, field=field, name=f"beilinson-{tag}:{spec.n}")


def rolled_up(n: int, D: int, field: Field = QQ) -> GradedAlgebra:
    """B_0: cyclic quiver, commutativity relations on every consecutive pair."""
    if n < 2:
        raise ValueError("rolled-up algebra needs n >= 2")
    if D < 0:
        raise ValueError("truncation must be nonnegative")
    quiver, rels = _linear_or_cyclic(n, cyclic=True, variant="symmetric")
    return build_algebra(quiver, rels, D, field=field, name=f"rolled-up:{n}")


def dual_numbers(field: Field = QQ) -> GradedAlgebra:
    quiver = Quiver(1, (Arrow("x", 0, 0),))
    return build_algebra(quiver, (Relation(((1, ("x", "x")),)),), 2, field=field,
                         name="dual-numbers")


def kronecker(field: Field = QQ) -> GradedAlgebra:
    return beilinson(BeilinsonSpec(2), field)


# -- twisted group algebra ------------------------------------------------------

def default_prime(r: int) -> int:
    return smallest_prime_congruent_one(r)


def twisted_group_algebra(spec: CyclicActionSpec, D: int, p: int | None = None) -> GradedAlgebra:
    """S * Z/r over F_p, rewritten in the idempotent (Fourier) basis.

    The multiplication is first written down in the basis ``x^a g^s``, where
    ``g^s x^b = zeta^(s <w, b>) x^b g^s``.  The basis is then changed to
    ``x^a e_k`` with ``e_k = (1/r) sum_s zeta^(-ks) g^s`` and the structure
    constants are recomputed through that change of basis.  Source and target
    vertices are read off from which idempotents fix each new basis element;
    if any element fails to be homogeneous for the idempotents, the build
    fails.
    """
    r = spec.group_order
    if p is None:
        p = default_prime(r)
    field = PrimeField(p)
    if (p - 1) % r:
        raise HlabError(f"p = {p} is not 1 mod {r}: F_p lacks {r}-th roots of unity")
    if D < 0:
        raise ValueError("truncation must be nonnegative")
    zeta = field.root_of_unity(r)
    w = spec.weights
    monos = [m for d in range(D + 1) for m in monomials(spec.n_vars, d)]
    mono_index = {m: i for i, m in enumerate(monos)}
    mdeg = [sum(m) for m in monos]

    def raw_mul(a: int, s: int, b: int, t: int):
        ma, mb = monos[a], monos[b]
        if mdeg[a] + mdeg[b] > D:
            return None
        weight = sum(x * y for x, y in zip(w, mb))
        coef = pow(zeta, (s * weight) % r, p)
        mc = tuple(x + y for x, y in zip(ma, mb))
        return mono_index[mc], (s + t) % r, coef

    r_inv = field.inv(r)

    def to_raw(a: int, k: int) -> dict:
        # x^a e_k = (1/r) sum_s zeta^(-ks) x^a g^s
        return {(a, s): r_inv * pow(zeta, (-k * s) % r, p) % p for s in range(r)}

    def from_raw(vec: dict) -> dict:
        # x^a g^s = sum_k zeta^(ks) x^a e_k
        out: dict = {}
        for (a, s), x in vec.items():
            for k in range(r):
                key = (a, k)
                v = (out.get(key, 0) + x * pow(zeta, (k * s) % r, p)) % p
                if v:
                    out[key] = v
                else:
                    out.pop(key, None)
        return out

    # basis ordering: degree, then monomial, then Fourier index
    labels = [("x", monos[a], k) for a in range(len(monos)) for k in range(r)]
    lab_index = {(a, k): i for i, (a, k) in enumerate(
        (a, k) for a in range(len(monos)) for k in range(r))}
    degree = [mdeg[a] for a in range(len(monos)) for _ in range(r)]
    n_basis = len(labels)

    raw_cache = [to_raw(a, k) for a in range(len(monos)) for k in range(r)]

    def basis_mul(i: int, j: int) -> dict | None:
        if degree[i] + degree[j] > D:
            return None
        acc: dict = {}
        for (a, s), x in raw_cache[i].items():
            for (b, t), y in raw_cache[j].items():
                c, u, coef = raw_mul(a, s, b, t)
                key = (c, u)
                v = (acc.get(key, 0) + x * y * coef) % p
                if v:
                    acc[key] = v
                else:
                    acc.pop(key, None)
        return {lab_index[key]: v for key, v in from_raw(acc).items()}

    # e_k are the degree-zero basis elements with monomial index 0
    idem = [lab_index[(0, k)] for k in range(r)]
    source, target = [], []
    for i in range(n_basis):
        tgt = [k for k in range(r) if basis_mul(idem[k], i) == {i: 1}]
        src = [k for k in range(r) if basis_mul(i, idem[k]) == {i: 1}]
        if len(tgt) != 1 or len(src) != 1:
            raise HlabError(f"basis element {labels[i]} is not idempotent-homogeneous")
        source.append(src[0])
        target.append(tgt[0])

    mult: dict[tuple[int, int], dict] = {}
    for i in range(n_basis):
        for j in range(n_basis):
            if degree[i] + degree[j] > D:
                continue
            prod = basis_mul(i, j)
            if prod:
                if source[i] != target[j]:
                    raise HlabError("Fourier basis product violates vertex composability")
                mult[(i, j)] = prod

    generators = [{lab_index[(mono_index[m], k)]: 1}
                  for m in monomials(spec.n_vars, 1) for k in range(r)] if D >= 1 else []
    weights = ",".join(map(str, spec.weights))
    return GradedAlgebra(
        field=field, vertex_count=r, labels=labels, degree=degree, source=source,
        target=target, mult=mult, truncation=D, finite=False, generators=generators,
        name=f"twisted:{spec.n_vars}:{r}:{weights}")


# -- closed forms (independent of any algebra build) -------------------------

def beilinson_closed_form(n: int, variant: str) -> tuple[int, ...]:
    """Degree-d dimension of A_0 / A_1 from the Hom-space decomposition."""
    dims = [0] * n
    for i in range(n):
        for j in range(n):
            if variant == "symmetric" and i >= j:
                dims[i - j] += sym_dim(n, i - j)
            elif variant == "exterior" and j >= i:
                dims[j - i] += comb(n, j - i)
    return tuple(dims)


def rolled_up_closed_form(n: int, D: int) -> tuple[int, ...]:
    """sum over matrix positions (i, j) of the degree-d part of S(i-j)^(n).

    Position (i, j) holds polynomials of degree i - j + m n for m >= 0.
    """
    out = []
    for d in range(D + 1):
        total = 0
        for i, j in product(range(n), repeat=2):
            shift = i - j
            if d >= shift and (d - shift) % n == 0:
                total += sym_dim(n, d)
        out.append(total)
    return tuple(out)


def veronese_hilbert(n: int, D: int) -> HilbertSeries:
    if n < 1:
        raise ValueError("n >= 1 required")
    return HilbertSeries(tuple(comb(d + n - 1, n - 1) if d % n == 0 else 0
                               for d in range(D + 1)), D)


def twisted_closed_form(spec: CyclicActionSpec, D: int) -> tuple[int, ...]:
    return tuple(spec.group_order * sym_dim(spec.n_vars, d) for d in range(D + 1))
