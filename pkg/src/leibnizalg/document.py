"""Definition-file grammar for algebras and r-matrices.

Algebra files::

    # comment
    name: heisenberg-ish
    dim: 2
    side: left            # left | right | both | auto
    f 1 1 2 = 1           # [e_1, e_1] = e_2
    f 1 2 2 = 1/1

R-matrix files reuse the same directives with ``r <i> <j> = <p>/<q>``
entry lines and no ``side``.  Lines may appear in any order; duplicate
entries are errors; undeclared entries are zero; indices are 1-based.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction

from .core import MAX_DIM, Chirality, LeibnizAlgebra, StructureTensor, classify
from .errors import ChiralityError, ParseError
from .linalg import Matrix

SIDES = ("left", "right", "both", "auto")

_RAT = re.compile(r"^-?\d+(/\d+)?$")


def _parse_rational(text: str, line: int) -> Fraction:
    text = text.strip()
    if not _RAT.match(text):
        raise ParseError(f"bad rational {text!r} (want p or p/q)", line)
    return Fraction(text)


def _parse_index(text: str, line: int) -> int:
    if not text.isdigit():
        raise ParseError(f"bad index {text!r}", line)
    return int(text)


@dataclass
class AlgebraDocument:
    name: str = ""
    dim: int = 0
    declared_side: str = "auto"
    entries: dict[tuple[int, int, int], Fraction] = field(default_factory=dict)

    def tensor(self) -> StructureTensor:
        return StructureTensor.from_entries(self.dim, self.entries)

    def algebra(self) -> LeibnizAlgebra:
        """Build and, when a side is declared, verify it actually holds."""
        t = self.tensor()
        chir = classify(t)
        alg = LeibnizAlgebra(t, chir, self.name)
        want = self.declared_side
        if want == "auto":
            return alg
        ok = {
            "left": chir in (Chirality.LEFT, Chirality.BOTH, Chirality.LIE),
            "right": chir in (Chirality.RIGHT, Chirality.BOTH, Chirality.LIE),
            "both": chir in (Chirality.BOTH, Chirality.LIE),
        }[want]
        if not ok:
            raise ChiralityError(
                f"declared side {want!r} does not hold; tensor classifies as "
                f"{chir.value}"
            )
        return alg


@dataclass
class RMatrixDocument:
    name: str = ""
    dim: int = 0
    entries: dict[tuple[int, int], Fraction] = field(default_factory=dict)

    def matrix(self) -> Matrix:
        n = self.dim
        return tuple(
            tuple(self.entries.get((i, j), Fraction(0)) for j in range(1, n + 1))
            for i in range(1, n + 1)
        )


def _scan(text: str, kind: str):
    """Common scanner; yields (line-number, directive-or-entry tokens)."""
    doc_dim = None
    name = ""
    side = None
    entries = {}
    for ln, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if ":" in line and not line.startswith(("f ", "r ")):
            key, _, value = line.partition(":")
            key = key.strip().lower()
            value = value.strip()
            if key == "name":
                name = value
            elif key == "dim":
                if doc_dim is not None:
                    raise ParseError("duplicate dim directive", ln)
                if not value.isdigit():
                    raise ParseError(f"bad dimension {value!r}", ln)
                doc_dim = int(value)
                if not 1 <= doc_dim <= MAX_DIM:
                    raise ParseError(
                        f"dimension {doc_dim} outside 1..{MAX_DIM}", ln
                    )
            elif key == "side":
                if kind != "f":
                    raise ParseError("side directive not allowed here", ln)
                if value.lower() not in SIDES:
                    raise ParseError(f"bad side {value!r}", ln)
                side = value.lower()
            else:
                raise ParseError(f"unknown directive {key!r}", ln)
            continue
        tokens = line.split()
        if tokens[0] != kind:
            raise ParseError(f"unrecognized line {raw.strip()!r}", ln)
        want = 3 if kind == "f" else 2
        if len(tokens) != want + 3 or tokens[want + 1] != "=":
            raise ParseError(f"malformed {kind!r} entry", ln)
        idx = tuple(_parse_index(tok, ln) for tok in tokens[1 : want + 1])
        value = _parse_rational(tokens[want + 2], ln)
        if idx in entries:
            raise ParseError(f"duplicate entry for {idx}", ln)
        entries[idx] = (ln, value)
    if doc_dim is None:
        raise ParseError("missing dim directive")
    for idx, (ln, _) in entries.items():
        for component in idx:
            if not 1 <= component <= doc_dim:
                raise ParseError(
                    f"index {component} outside 1..{doc_dim}", ln
                )
    clean = {idx: value for idx, (_, value) in entries.items()}
    return name, doc_dim, side, clean


def parse_algebra(text: str) -> AlgebraDocument:
    name, dim, side, entries = _scan(text, "f")
    return AlgebraDocument(name, dim, side or "auto", entries)


def parse_rmatrix(text: str) -> RMatrixDocument:
    name, dim, _, entries = _scan(text, "r")
    return RMatrixDocument(name, dim, entries)


def serialize_algebra(doc: AlgebraDocument) -> str:
    lines = []
    if doc.name:
        lines.append(f"name: {doc.name}")
    lines.append(f"dim: {doc.dim}")
    lines.append(f"side: {doc.declared_side}")
    for (i, j, k) in sorted(doc.entries):
        v = doc.entries[(i, j, k)]
        if v != 0:
            lines.append(f"f {i} {j} {k} = {v}")
    return "\n".join(lines) + "\n"


def serialize_rmatrix(doc: RMatrixDocument) -> str:
    lines = []
    if doc.name:
        lines.append(f"name: {doc.name}")
    lines.append(f"dim: {doc.dim}")
    for (i, j) in sorted(doc.entries):
        v = doc.entries[(i, j)]
        if v != 0:
            lines.append(f"r {i} {j} = {v}")
    return "\n".join(lines) + "\n"
