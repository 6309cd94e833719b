"""Exact sparse linear algebra over the rationals and prime fields.

Vectors are plain ``dict`` objects mapping a column index to a nonzero field
element.  Rationals are :class:`fractions.Fraction`; prime-field residues are
``int`` in ``[0, p)``.  Everything here is exact; there is no floating point.
"""

from __future__ import annotations

import heapq
from fractions import Fraction
from typing import Iterable, Mapping

from .errors import FieldMismatchError, NotAComplexError, ShapeError

DEFAULT_PRIME = 1000003


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    f = 3
    while f * f <= p:
        if p % f == 0:
            return False
        f += 2
    return True


class Field:
    """Base class for the two supported coefficient fields."""

    name: str
    characteristic: int

    def convert(self, x):
        raise NotImplementedError

    def norm(self, x):
        """Bring the result of native +,-,* back into canonical form."""
        raise NotImplementedError

    def inv(self, x):
        raise NotImplementedError

    def __eq__(self, other):
        return type(self) is type(other) and self.characteristic == other.characteristic

    def __hash__(self):
        return hash((type(self).__name__, self.characteristic))

    def __repr__(self):
        return self.name


class RationalField(Field):
    name = "rat"
    characteristic = 0
    zero = Fraction(0)
    one = Fraction(1)

    def convert(self, x) -> Fraction:
        if isinstance(x, bool):
            raise FieldMismatchError(f"cannot use bool {x!r} as a rational")
        if isinstance(x, (int, Fraction)):
            return Fraction(x)
        if isinstance(x, str):
            return Fraction(x)
        raise FieldMismatchError(f"{x!r} ({type(x).__name__}) is not an exact rational")

    def norm(self, x):
        return x

    def inv(self, x):
        if x == 0:
            raise ZeroDivisionError("inverse of zero")
        return 1 / x


class PrimeField(Field):
    def __init__(self, p: int):
        if not is_prime(p):
            raise ValueError(f"{p} is not prime")
        self.characteristic = p
        self.name = f"fp:{p}"
        self.zero = 0
        self.one = 1

    def convert(self, x) -> int:
        p = self.characteristic
        if isinstance(x, bool):
            raise FieldMismatchError(f"cannot use bool {x!r} in F_{p}")
        if isinstance(x, int):
            return x % p
        if isinstance(x, Fraction):
            if x.denominator % p == 0:
                raise FieldMismatchError(f"{x} has denominator divisible by {p}")
            return x.numerator * pow(x.denominator, -1, p) % p
        if isinstance(x, str):
            return self.convert(Fraction(x))
        raise FieldMismatchError(f"{x!r} ({type(x).__name__}) is not an element of F_{p}")

    def norm(self, x):
        return x % self.characteristic

    def inv(self, x):
        if x % self.characteristic == 0:
            raise ZeroDivisionError("inverse of zero")
        return pow(x, -1, self.characteristic)

    def root_of_unity(self, r: int) -> int:
        """A primitive r-th root of unity; requires r | p - 1."""
        p = self.characteristic
        if (p - 1) % r:
            raise ValueError(f"F_{p} has no primitive {r}-th root of unity")
        if r == 1:
            return 1
        factors = _prime_factors(r)
        for g in range(2, p):
            z = pow(g, (p - 1) // r, p)
            if all(pow(z, r // q, p) != 1 for q in factors):
                return z
        raise AssertionError("unreachable for prime p")


def _prime_factors(m: int) -> list[int]:
    out, f = [], 2
    while f * f <= m:
        if m % f == 0:
            out.append(f)
            while m % f == 0:
                m //= f
        f += 1
    if m > 1:
        out.append(m)
    return out


QQ = RationalField()


def parse_field(spec: str) -> Field:
    """``"rat"`` or ``"fp:<p>"``."""
    if spec in ("rat", "QQ", "q"):
        return QQ
    if spec.startswith("fp:"):
        return PrimeField(int(spec[3:]))
    raise ValueError(f"unknown field {spec!r}; expected 'rat' or 'fp:<p>'")


def smallest_prime_congruent_one(r: int, start: int = DEFAULT_PRIME) -> int:
    p = start
    while not (is_prime(p) and (p - 1) % r == 0):
        p += 1
    return p


# -- sparse vectors ------------------------------------------------------------

def axpy(field: Field, y: dict, a, x: Mapping) -> None:
    """In place ``y += a * x``; drops entries that cancel."""
    norm = field.norm
    for k, v in x.items():
        s = norm(y.get(k, 0) + a * v)
        if s:
            y[k] = s
        else:
            y.pop(k, None)


def scale(field: Field, a, x: Mapping) -> dict:
    if not a:
        return {}
    norm = field.norm
    return {k: norm(a * v) for k, v in x.items()}


class Echelon:
    """Incrementally maintained echelon basis of a subspace.

    Each stored row has a distinct leading (smallest) column with coefficient
    one.  ``reduce`` returns the unique normal form of a vector modulo the
    span: no pivot column survives in the result.
    """

    def __init__(self, field: Field):
        self.field = field
        self.pivots: dict[int, dict] = {}

    def __len__(self):
        return len(self.pivots)

    def reduce(self, vec: Mapping) -> dict:
        field, pivots = self.field, self.pivots
        v = dict(vec)
        if not pivots or not v:
            return v
        heap = [c for c in v if c in pivots]
        heapq.heapify(heap)
        seen = set()
        while heap:
            c = heapq.heappop(heap)
            if c in seen:
                continue
            seen.add(c)
            a = v.get(c)
            if not a:
                continue
            row = pivots[c]
            norm = field.norm
            for k, x in row.items():
                s = norm(v.get(k, 0) - a * x)
                if s:
                    v[k] = s
                    if k in pivots and k not in seen:
                        heapq.heappush(heap, k)
                else:
                    v.pop(k, None)
        return v

    def add(self, vec: Mapping) -> bool:
        """Insert ``vec``; returns False if it was already in the span."""
        v = self.reduce(vec)
        if not v:
            return False
        lead = min(v)
        inv = self.field.inv(v[lead])
        self.pivots[lead] = scale(self.field, inv, v)
        return True

    def contains(self, vec: Mapping) -> bool:
        return not self.reduce(vec)

    def rref_rows(self) -> dict[int, dict]:
        """Fully reduced rows: each pivot column appears in exactly one row."""
        field = self.field
        done: dict[int, dict] = {}
        for c in sorted(self.pivots, reverse=True):
            row = dict(self.pivots[c])
            for k in [k for k in row if k != c and k in done]:
                a = row.get(k)
                if a:
                    axpy(field, row, -a, done[k])
            done[c] = row
        return done


# -- matrices ------------------------------------------------------------------

class ExactMatrix:
    """Sparse matrix over a fixed exact field (row-major dict of dicts)."""

    __slots__ = ("field", "nrows", "ncols", "_rows")

    def __init__(self, field: Field, nrows: int, ncols: int, entries: Iterable = ()):
        self.field = field
        self.nrows = nrows
        self.ncols = ncols
        rows: dict[int, dict] = {}
        for r, c, x in entries:
            if not (0 <= r < nrows and 0 <= c < ncols):
                raise ShapeError(f"entry ({r}, {c}) outside {nrows}x{ncols}")
            x = field.convert(x)
            if not x:
                continue
            row = rows.setdefault(r, {})
            if c in row:
                raise ValueError(f"duplicate entry at ({r}, {c})")
            row[c] = x
        self._rows = rows

    @classmethod
    def from_rows(cls, field: Field, nrows: int, ncols: int, rows: Mapping[int, Mapping]):
        """Trusted constructor: ``rows`` already hold normalized nonzero entries."""
        m = cls(field, nrows, ncols)
        m._rows = {r: dict(row) for r, row in rows.items() if row}
        return m

    @classmethod
    def from_columns(cls, field: Field, nrows: int, cols: list[Mapping]):
        rows: dict[int, dict] = {}
        for c, col in enumerate(cols):
            for r, x in col.items():
                rows.setdefault(r, {})[c] = x
        return cls.from_rows(field, nrows, len(cols), rows)

    @classmethod
    def dense(cls, field: Field, data: list[list]):
        nrows = len(data)
        ncols = len(data[0]) if data else 0
        return cls(field, nrows, ncols,
                   ((r, c, x) for r, row in enumerate(data) for c, x in enumerate(row)))

    @classmethod
    def identity(cls, field: Field, n: int):
        return cls(field, n, n, ((i, i, 1) for i in range(n)))

    @classmethod
    def zero(cls, field: Field, nrows: int, ncols: int):
        return cls(field, nrows, ncols)

    @property
    def shape(self):
        return self.nrows, self.ncols

    def entries(self):
        for r in sorted(self._rows):
            row = self._rows[r]
            for c in sorted(row):
                yield r, c, row[c]

    def rows(self):
        return self._rows

    def nnz(self) -> int:
        return sum(len(r) for r in self._rows.values())

    def is_zero(self) -> bool:
        return not self._rows

    def to_dense(self) -> list[list]:
        out = [[self.field.zero] * self.ncols for _ in range(self.nrows)]
        for r, c, x in self.entries():
            out[r][c] = x
        return out

    def transpose(self) -> "ExactMatrix":
        rows: dict[int, dict] = {}
        for r, row in self._rows.items():
            for c, x in row.items():
                rows.setdefault(c, {})[r] = x
        return ExactMatrix.from_rows(self.field, self.ncols, self.nrows, rows)

    def _check_field(self, other: "ExactMatrix"):
        if self.field != other.field:
            raise FieldMismatchError(f"{self.field} vs {other.field}")

    def __matmul__(self, other: "ExactMatrix") -> "ExactMatrix":
        self._check_field(other)
        if self.ncols != other.nrows:
            raise ShapeError(f"cannot multiply {self.shape} by {other.shape}")
        field = self.field
        orows = other._rows
        out: dict[int, dict] = {}
        for r, row in self._rows.items():
            acc: dict = {}
            for k, a in row.items():
                orow = orows.get(k)
                if orow:
                    axpy(field, acc, a, orow)
            if acc:
                out[r] = acc
        return ExactMatrix.from_rows(field, self.nrows, other.ncols, out)

    def __eq__(self, other):
        if not isinstance(other, ExactMatrix):
            return NotImplemented
        return (self.field == other.field and self.shape == other.shape
                and self._rows == other._rows)

    def __repr__(self):
        return f"ExactMatrix({self.field}, {self.nrows}x{self.ncols}, nnz={self.nnz()})"

    def apply(self, vec: Mapping) -> dict:
        """Matrix times a sparse column vector."""
        field = self.field
        out = {}
        for r, row in self._rows.items():
            s = 0
            for c, x in row.items():
                y = vec.get(c)
                if y:
                    s += x * y
            s = field.norm(s)
            if s:
                out[r] = s
        return out

    def over(self, field: Field) -> "ExactMatrix":
        """Reduce (or lift) the entries into another field."""
        return ExactMatrix(field, self.nrows, self.ncols,
                           ((r, c, field.convert(x)) for r, c, x in self.entries()))

    def echelon(self) -> Echelon:
        ech = Echelon(self.field)
        for r in sorted(self._rows):
            ech.add(self._rows[r])
        return ech


class Subspace:
    """A subspace of ``field^ambient_dim`` given by independent sparse vectors."""

    def __init__(self, field: Field, ambient_dim: int, basis: list[dict]):
        self.field = field
        self.ambient_dim = ambient_dim
        self.basis = basis

    @property
    def dim(self) -> int:
        return len(self.basis)

    def __len__(self):
        return len(self.basis)

    def as_matrix(self) -> ExactMatrix:
        """Basis vectors as the columns of an ``ambient_dim x dim`` matrix."""
        return ExactMatrix.from_columns(self.field, self.ambient_dim, self.basis)

    def contains(self, vec: Mapping) -> bool:
        ech = Echelon(self.field)
        for b in self.basis:
            ech.add(b)
        return ech.contains(vec)


def rank(m: ExactMatrix) -> int:
    # eliminate along the shorter side
    if m.ncols < m.nrows:
        m = m.transpose()
    return len(m.echelon())


def kernel_basis(m: ExactMatrix) -> Subspace:
    rref = m.echelon().rref_rows()
    pivot_cols = set(rref)
    field = m.field
    # free column f -> pivot columns whose row mentions f
    mentions: dict[int, list[int]] = {}
    for c, row in rref.items():
        for k in row:
            if k != c:
                mentions.setdefault(k, []).append(c)
    basis = []
    for f in range(m.ncols):
        if f in pivot_cols:
            continue
        v = {f: field.one}
        for c in mentions.get(f, ()):
            v[c] = field.norm(-rref[c][f])
        basis.append(v)
    return Subspace(field, m.ncols, basis)


def image_basis(m: ExactMatrix) -> Subspace:
    ech = m.transpose().echelon()
    return Subspace(m.field, m.nrows, list(ech.rref_rows().values()))


def homology_dim(d_in: ExactMatrix, d_out: ExactMatrix) -> int:
    """``dim ker(d_out) - rank(d_in)`` for ``U --d_in--> M --d_out--> W``."""
    if d_in.field != d_out.field:
        raise FieldMismatchError(f"{d_in.field} vs {d_out.field}")
    if d_out.ncols != d_in.nrows:
        raise ShapeError(f"middle dimensions differ: {d_in.shape} then {d_out.shape}")
    if not (d_out @ d_in).is_zero():
        raise NotAComplexError("d_out . d_in != 0")
    return d_out.ncols - rank(d_out) - rank(d_in)
