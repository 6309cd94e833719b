"""Plain-text algebra descriptions.

Grammar (one directive per line, ``#`` starts a comment)::

    name <token>                       optional
    field rat | fp:<p>                 optional, default rat
    truncation <D>                     optional
    vertices <N>                       required, before any arrow
    arrow <id> <source> <target> <degree>
    rel <coef> <id> <id> ... [(+|-) <coef> <id> <id> ...]

Arrow ids in a ``rel`` term are written in product order: ``rel 1 b a``
is the path ``b*a``, i.e. ``a`` followed by ``b``.  Coefficients are
rationals (``3``, ``-1/2``); in ``fp:<p>`` files they are reduced mod p at
build time.

``serialize`` writes the canonical form; ``parse(serialize(x)) == x`` and
``serialize(parse(text)) == text`` for canonical text.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .algebra import (Arrow, GradedAlgebra, Quiver, Relation, _looks_numeric, build_algebra,
                      quadratic_presentation)
from .errors import FormatError, RelationError
from .linalg import QQ, Field, parse_field

DEFAULT_TRUNCATION = 6


@dataclass(frozen=True)
class AlgebraFile:
    quiver: Quiver
    relations: tuple[Relation, ...]
    field: str = "rat"
    truncation: int | None = None
    name: str | None = None

    def build(self, max_degree: int | None = None, field: Field | None = None) -> GradedAlgebra:
        D = max_degree if max_degree is not None else self.truncation
        if D is None:
            D = DEFAULT_TRUNCATION
        f = field if field is not None else parse_field(self.field)
        return build_algebra(self.quiver, self.relations, D, field=f,
                             name=self.name or "file")


def _coef(token: str, lineno: int) -> Fraction:
    try:
        return Fraction(token)
    except (ValueError, ZeroDivisionError):
        raise FormatError(f"line {lineno}: bad coefficient {token!r}") from None


def _int(token: str, what: str, lineno: int) -> int:
    try:
        return int(token)
    except ValueError:
        raise FormatError(f"line {lineno}: {what} must be an integer, got {token!r}") from None


def _parse_relation(tokens: list[str], lineno: int) -> Relation:
    terms = []
    sign = 1
    k = 0
    while k < len(tokens):
        if terms:
            if tokens[k] not in ("+", "-"):
                raise FormatError(f"line {lineno}: expected + or - before {tokens[k]!r}")
            sign = 1 if tokens[k] == "+" else -1
            k += 1
        if k >= len(tokens):
            raise FormatError(f"line {lineno}: dangling sign")
        c = sign * _coef(tokens[k], lineno)
        k += 1
        ids = []
        while k < len(tokens) and tokens[k] not in ("+", "-"):
            if _looks_numeric(tokens[k]):
                raise FormatError(f"line {lineno}: expected + or - before {tokens[k]!r}")
            ids.append(tokens[k])
            k += 1
        if not ids:
            raise FormatError(f"line {lineno}: term without arrows")
        terms.append((c, tuple(ids)))
    if not terms:
        raise FormatError(f"line {lineno}: empty relation")
    return Relation(tuple(terms))


def parse(text: str) -> AlgebraFile:
    name = None
    field = "rat"
    truncation = None
    vertices = None
    arrows: list[Arrow] = []
    rels: list[Relation] = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        head, *rest = line.split()
        if head == "name":
            if len(rest) != 1:
                raise FormatError(f"line {lineno}: name takes one token")
            name = rest[0]
        elif head == "field":
            if len(rest) != 1:
                raise FormatError(f"line {lineno}: field takes one token")
            try:
                parse_field(rest[0])
            except ValueError as e:
                raise FormatError(f"line {lineno}: {e}") from None
            field = rest[0]
        elif head == "truncation":
            if len(rest) != 1:
                raise FormatError(f"line {lineno}: truncation takes one integer")
            truncation = _int(rest[0], "truncation", lineno)
        elif head == "vertices":
            if len(rest) != 1:
                raise FormatError(f"line {lineno}: vertices takes one integer")
            vertices = _int(rest[0], "vertex count", lineno)
        elif head == "arrow":
            if vertices is None:
                raise FormatError(f"line {lineno}: arrow before vertices")
            if len(rest) != 4:
                raise FormatError(f"line {lineno}: arrow <id> <src> <dst> <deg>")
            aid, s, t, d = rest
            arrows.append(Arrow(aid, _int(s, "source", lineno), _int(t, "target", lineno),
                                _int(d, "degree", lineno)))
        elif head == "rel":
            try:
                rels.append(_parse_relation(rest, lineno))
            except RelationError as e:
                raise FormatError(f"line {lineno}: {e}") from None
        else:
            raise FormatError(f"line {lineno}: unknown directive {head!r}")
    if vertices is None:
        raise FormatError("missing 'vertices' line")
    try:
        quiver = Quiver(vertices, tuple(arrows))
        for r in rels:
            r.resolve(quiver)
    except (ValueError, RelationError) as e:
        raise FormatError(str(e)) from None
    return AlgebraFile(quiver, tuple(rels), field, truncation, name)


def _serialize_relation(r: Relation) -> str:
    parts = ["rel"]
    for k, (c, ids) in enumerate(r.terms):
        if k == 0:
            parts.append(str(c))
        else:
            parts.append("-" if c < 0 else "+")
            parts.append(str(abs(c)))
        parts.extend(ids)
    return " ".join(parts)


def serialize(af: AlgebraFile) -> str:
    lines = []
    if af.name is not None:
        lines.append(f"name {af.name}")
    lines.append(f"field {af.field}")
    if af.truncation is not None:
        lines.append(f"truncation {af.truncation}")
    lines.append(f"vertices {af.quiver.vertex_count}")
    for a in af.quiver.arrows:
        lines.append(f"arrow {a.id} {a.source} {a.target} {a.degree}")
    for r in af.relations:
        lines.append(_serialize_relation(r))
    return "\n".join(lines) + "\n"


def from_algebra(a: GradedAlgebra) -> AlgebraFile:
    """Description of a built algebra.  Algebras without a stored quiver
    (the Fourier-basis twisted group algebras) are written through their
    quadratic presentation."""
    if a.quiver is not None:
        quiver, rels = a.quiver, a.relations
    else:
        quiver, rels = quadratic_presentation(a)
    name = a.name.replace(" ", "_") if a.name else None
    D = a.truncation
    if a.finite:
        # one arrow degree past the top, so the rebuild certifies finiteness again
        D = a.top_degree() + max((x.degree for x in quiver.arrows), default=1)
    return AlgebraFile(quiver, tuple(rels), a.field.name if a.field != QQ else "rat", D, name)


def read(path) -> AlgebraFile:
    with open(path, encoding="utf-8") as fh:
        return parse(fh.read())


def write(af: AlgebraFile, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(serialize(af))
