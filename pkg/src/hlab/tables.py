"""Dimension tables with explicit validity windows."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterator

from .errors import OutsideValidityError


@dataclass
class DimTable:
    """Map ``(i,)`` or ``(i, d)`` to a dimension.

    ``max_i`` bounds the homological index.  When the table is internally
    graded, ``degrees`` is the inclusive ``(lo, hi)`` range of internal
    degrees the entries are certified for.  Entries inside the window that
    were never set are zero; queries outside the window raise.
    """

    max_i: int
    degrees: tuple[int, int] | None = None
    entries: dict[tuple[int, ...], int] = field(default_factory=dict)
    min_i: int = 0

    @property
    def graded(self) -> bool:
        return self.degrees is not None

    def _check(self, key: tuple[int, ...]) -> None:
        i = key[0]
        if self.graded:
            if len(key) != 2:
                raise KeyError(f"graded table needs (i, d), got {key}")
            lo, hi = self.degrees
            if not lo <= key[1] <= hi:
                raise OutsideValidityError(f"internal degree {key[1]} outside certified {lo}..{hi}")
        elif len(key) != 1:
            raise KeyError(f"ungraded table needs (i,), got {key}")
        if not self.min_i <= i <= self.max_i:
            raise OutsideValidityError(f"index {i} outside certified {self.min_i}..{self.max_i}")

    def __getitem__(self, key) -> int:
        if isinstance(key, int):
            key = (key,)
        key = tuple(key)
        self._check(key)
        return self.entries.get(key, 0)

    def __setitem__(self, key, value: int) -> None:
        if isinstance(key, int):
            key = (key,)
        key = tuple(key)
        self._check(key)
        if value < 0:
            raise ValueError("dimensions are nonnegative")
        if value:
            self.entries[key] = value
        else:
            self.entries.pop(key, None)

    def keys(self) -> Iterator[tuple[int, ...]]:
        for i in range(self.min_i, self.max_i + 1):
            if self.graded:
                for d in range(self.degrees[0], self.degrees[1] + 1):
                    yield (i, d)
            else:
                yield (i,)

    def as_tuple(self) -> tuple[int, ...]:
        """Ungraded tables as ``(dim_0, ..., dim_max_i)``."""
        if self.graded:
            raise TypeError("graded table; use column(d) or row(i)")
        return tuple(self[i] for i in range(self.min_i, self.max_i + 1))

    def column(self, d: int) -> tuple[int, ...]:
        """Graded table at fixed internal degree, as a tuple over ``i``."""
        return tuple(self[(i, d)] for i in range(self.min_i, self.max_i + 1))

    def row(self, i: int) -> tuple[int, ...]:
        lo, hi = self.degrees
        return tuple(self[(i, d)] for d in range(lo, hi + 1))

    def total(self, i: int) -> int:
        if not self.graded:
            return self[i]
        return sum(self.row(i))

    @classmethod
    def from_sequence(cls, values, min_i: int = 0) -> "DimTable":
        values = list(values)
        t = cls(max_i=min_i + len(values) - 1, min_i=min_i)
        for k, v in enumerate(values):
            t[min_i + k] = v
        return t

    def window(self) -> dict:
        return {"min_i": self.min_i, "max_i": self.max_i,
                "degrees": list(self.degrees) if self.degrees else None}

    def to_json(self) -> dict:
        return {
            "window": self.window(),
            "entries": {",".join(map(str, k)): self[k] for k in self.keys()},
        }

    @classmethod
    def from_json(cls, obj: dict) -> "DimTable":
        w = obj["window"]
        t = cls(max_i=w["max_i"], min_i=w["min_i"],
                degrees=tuple(w["degrees"]) if w["degrees"] else None)
        for k, v in obj["entries"].items():
            t[tuple(int(x) for x in k.split(","))] = v
        return t

    def __eq__(self, other):
        if not isinstance(other, DimTable):
            return NotImplemented
        return (self.window() == other.window()
                and {k: v for k, v in self.entries.items() if v}
                == {k: v for k, v in other.entries.items() if v})

    def merged(self, other: "DimTable") -> "DimTable":
        """Union of two graded tables over adjacent degree windows."""
        if not (self.graded and other.graded):
            raise TypeError("merge needs graded tables")
        if (self.min_i, self.max_i) != (other.min_i, other.max_i):
            raise ValueError("homological windows differ")
        lo = min(self.degrees[0], other.degrees[0])
        hi = max(self.degrees[1], other.degrees[1])
        if hi - lo + 1 != (self.degrees[1] - self.degrees[0] + 1) + (other.degrees[1] - other.degrees[0] + 1):
            raise ValueError("degree windows must be disjoint and adjacent")
        out = DimTable(self.max_i, (lo, hi), min_i=self.min_i)
        out.entries.update(self.entries)
        out.entries.update(other.entries)
        return out

    def pretty(self) -> str:
        if not self.graded:
            return " ".join(f"{i}:{self[i]}" for i in range(self.min_i, self.max_i + 1))
        lo, hi = self.degrees
        head = "i\\d " + " ".join(f"{d:>4}" for d in range(lo, hi + 1))
        lines = [head]
        for i in range(self.min_i, self.max_i + 1):
            lines.append(f"{i:>3} " + " ".join(f"{self[(i, d)]:>4}" for d in range(lo, hi + 1)))
        return "\n".join(lines)


def compare(left: DimTable, right: DimTable) -> tuple[bool, list[tuple[int, ...]]]:
    """Agreement on the intersection of the two validity windows.

    Returns ``(comparable, mismatched keys)``; ``comparable`` is False when
    the windows do not intersect.
    """
    if left.graded != right.graded:
        raise TypeError("cannot compare graded with ungraded table")
    lo_i = max(left.min_i, right.min_i)
    hi_i = min(left.max_i, right.max_i)
    if lo_i > hi_i:
        return False, []
    if left.graded:
        lo_d = max(left.degrees[0], right.degrees[0])
        hi_d = min(left.degrees[1], right.degrees[1])
        if lo_d > hi_d:
            return False, []
        keys = [(i, d) for i in range(lo_i, hi_i + 1) for d in range(lo_d, hi_d + 1)]
    else:
        keys = [(i,) for i in range(lo_i, hi_i + 1)]
    bad = [k for k in keys if left[k] != right[k]]
    return True, bad


@dataclass(frozen=True)
class HilbertSeries:
    """Degree -> dimension, certified up to ``truncation`` (or everywhere if finite)."""

    dims: tuple[int, ...]
    truncation: int
    finite: bool = False

    def __getitem__(self, d: int) -> int:
        if d < 0:
            return 0
        if d > self.truncation:
            if self.finite:
                return 0
            raise OutsideValidityError(f"degree {d} beyond truncation {self.truncation}")
        return self.dims[d] if d < len(self.dims) else 0

    def upto(self, d: int) -> tuple[int, ...]:
        return tuple(self[e] for e in range(d + 1))

    def total(self) -> int:
        if not self.finite:
            raise OutsideValidityError("total dimension of a truncated infinite algebra")
        return sum(self.dims)

    def as_table(self, upto: int | None = None) -> DimTable:
        """As a table indexed by degree (used when comparing with Ext dims)."""
        hi = self.truncation if upto is None else upto
        return DimTable.from_sequence(self.upto(hi))
