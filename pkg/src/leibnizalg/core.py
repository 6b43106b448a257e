"""Structure-constant tensors, Leibniz identities and adjoint matrices.

Conventions frozen across the whole package:

* A bracket table is a dense rank-3 tensor ``t`` with ``[X_i, X_j] = sum_k
  t(i,j,k) X_k``.  Public indices are 1-based; internal storage is 0-based.
  A dual bracket table uses the identical layout, read as two upper indices
  and one lower one.
* Adjoint matrices are stored with row = input basis index and column =
  output coefficient.  ``first_slot[i]`` has entry ``(j, k) = -t(i,j,k)``,
  ``second_slot[m]`` has ``(i, k) = -t(i,m,k)`` and ``output_slot[k]`` has
  ``(i, j) = -t(i,j,k)``; each of the three families reconstructs the tensor
  on its own.
* Coadjoint matrices are the negated transposes of the matching adjoint
  matrices in those coordinates.

Supported dimensions are 1 through 8; everything is exact rational.
"""

from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass
from fractions import Fraction

from .errors import ChiralityError, DimensionError
from .linalg import Matrix, frac, mat_neg, transpose

MAX_DIM = 8

Rank3 = tuple[tuple[tuple[Fraction, ...], ...], ...]
Rank4 = tuple[tuple[tuple[tuple[Fraction, ...], ...], ...], ...]


class Side(enum.Enum):
    LEFT = "left"
    RIGHT = "right"


class Chirality(enum.Enum):
    NEITHER = "neither"
    LEFT = "left"
    RIGHT = "right"
    BOTH = "both"
    LIE = "lie"

    def admits(self, side: Side) -> bool:
        if self is Chirality.NEITHER:
            return False
        if self is Chirality.LEFT:
            return side is Side.LEFT
        if self is Chirality.RIGHT:
            return side is Side.RIGHT
        return True


@dataclass(frozen=True)
class StructureTensor:
    """Dense rank-3 tensor of exact rationals; absent entries are zero."""

    dim: int
    data: Rank3

    def __post_init__(self):
        if not 1 <= self.dim <= MAX_DIM:
            raise DimensionError(f"dimension {self.dim} outside 1..{MAX_DIM}")
        if len(self.data) != self.dim or any(
            len(plane) != self.dim or any(len(row) != self.dim for row in plane)
            for plane in self.data
        ):
            raise DimensionError("tensor storage does not match dimension")

    @classmethod
    def zero(cls, dim: int) -> "StructureTensor":
        z = Fraction(0)
        return cls(dim, tuple(tuple((z,) * dim for _ in range(dim)) for _ in range(dim)))

    @classmethod
    def from_entries(cls, dim: int, entries) -> "StructureTensor":
        """Build from a mapping {(i, j, k): value} with 1-based indices."""
        if not 1 <= dim <= MAX_DIM:
            raise DimensionError(f"dimension {dim} outside 1..{MAX_DIM}")
        cube = [[[Fraction(0)] * dim for _ in range(dim)] for _ in range(dim)]
        for (i, j, k), value in entries.items():
            for idx in (i, j, k):
                if not 1 <= idx <= dim:
                    raise DimensionError(f"index {idx} outside 1..{dim}")
            cube[i - 1][j - 1][k - 1] = frac(value)
        return cls(dim, tuple(tuple(tuple(row) for row in plane) for plane in cube))

    def entry(self, i: int, j: int, k: int) -> Fraction:
        """1-based accessor."""
        return self.data[i - 1][j - 1][k - 1]

    def items(self):
        """Nonzero entries as ((i, j, k), value) with 1-based indices, sorted."""
        n = self.dim
        for i, j, k in itertools.product(range(n), repeat=3):
            v = self.data[i][j][k]
            if v != 0:
                yield (i + 1, j + 1, k + 1), v

    def is_zero(self) -> bool:
        return all(v == 0 for plane in self.data for row in plane for v in row)

    def opposite(self) -> "StructureTensor":
        """Swap the two argument slots of the bracket."""
        n = self.dim
        return StructureTensor(
            n,
            tuple(
                tuple(tuple(self.data[j][i][k] for k in range(n)) for j in range(n))
                for i in range(n)
            ),
        )

    def scaled(self, c) -> "StructureTensor":
        c = frac(c)
        return StructureTensor(
            self.dim,
            tuple(
                tuple(tuple(c * v for v in row) for row in plane)
                for plane in self.data
            ),
        )

    def plus(self, other: "StructureTensor") -> "StructureTensor":
        if other.dim != self.dim:
            raise DimensionError("tensor dimensions differ")
        return StructureTensor(
            self.dim,
            tuple(
                tuple(
                    tuple(a + b for a, b in zip(ra, rb))
                    for ra, rb in zip(pa, pb)
                )
                for pa, pb in zip(self.data, other.data)
            ),
        )


def leibniz_residual(t: StructureTensor, side: Side) -> Rank4:
    """Defect of the derivation identity, indexed (i, j, k, m), 0-based.

    The right-handed identity compares [[Y,Z],X] against [[Y,X],Z] + [Y,[Z,X]]
    with (X, Y, Z) = (X_i, X_j, X_k); the left-handed one compares [X,[Y,Z]]
    against [[X,Y],Z] + [Y,[X,Z]].  The tensor vanishes identically exactly
    when the identity holds.
    """
    n = t.dim
    f = t.data
    out = []
    for i in range(n):
        plane_i = []
        for j in range(n):
            plane_j = []
            for k in range(n):
                row = []
                for m in range(n):
                    s = Fraction(0)
                    if side is Side.RIGHT:
                        for p in range(n):
                            s += (
                                f[j][k][p] * f[p][i][m]
                                - f[j][i][p] * f[p][k][m]
                                - f[k][i][p] * f[j][p][m]
                            )
                    else:
                        for p in range(n):
                            s += (
                                f[j][k][p] * f[i][p][m]
                                - f[i][j][p] * f[p][k][m]
                                - f[i][k][p] * f[j][p][m]
                            )
                    row.append(s)
                plane_j.append(tuple(row))
            plane_i.append(tuple(plane_j))
        out.append(tuple(plane_i))
    return tuple(out)


def residual_is_zero(res: Rank4) -> bool:
    return all(v == 0 for a in res for b in a for c in b for v in c)


def first_nonzero(res: Rank4):
    """First nonzero residual component as ((i, j, k, m) 1-based, value)."""
    for i, a in enumerate(res):
        for j, b in enumerate(a):
            for k, c in enumerate(b):
                for m, v in enumerate(c):
                    if v != 0:
                        return (i + 1, j + 1, k + 1, m + 1), v
    return None


def is_antisymmetric(t: StructureTensor) -> bool:
    n = t.dim
    return all(
        t.data[i][j][k] == -t.data[j][i][k]
        for i, j, k in itertools.product(range(n), repeat=3)
    )


def classify(t: StructureTensor) -> Chirality:
    """Strongest applicable label for the bracket table."""
    left = residual_is_zero(leibniz_residual(t, Side.LEFT))
    right = residual_is_zero(leibniz_residual(t, Side.RIGHT))
    if left and right:
        return Chirality.LIE if is_antisymmetric(t) else Chirality.BOTH
    if left:
        return Chirality.LEFT
    if right:
        return Chirality.RIGHT
    return Chirality.NEITHER


@dataclass(frozen=True)
class LeibnizAlgebra:
    tensor: StructureTensor
    chirality: Chirality
    name: str = ""

    @classmethod
    def analyze(cls, tensor: StructureTensor, name: str = "") -> "LeibnizAlgebra":
        return cls(tensor, classify(tensor), name)

    @property
    def dim(self) -> int:
        return self.tensor.dim

    def admits(self, side: Side) -> bool:
        return self.chirality.admits(side)

    def require(self, side: Side) -> None:
        if not self.admits(side):
            raise ChiralityError(
                f"algebra {self.name or '<anonymous>'} is {self.chirality.value}; "
                f"operation needs the {side.value}-handed identity"
            )


def bracket(t: StructureTensor, x, y):
    """Coordinates of [x, y] for coefficient vectors x, y."""
    n = t.dim
    x = tuple(frac(v) for v in x)
    y = tuple(frac(v) for v in y)
    if len(x) != n or len(y) != n:
        raise DimensionError("coordinate vectors must have length dim")
    out = []
    for k in range(n):
        s = Fraction(0)
        for i in range(n):
            if x[i] == 0:
                continue
            for j in range(n):
                s += x[i] * y[j] * t.data[i][j][k]
        out.append(s)
    return tuple(out)


@dataclass(frozen=True)
class AdjointMatrices:
    """The three families of slice matrices of one tensor (see module notes)."""

    first_slot: tuple[Matrix, ...]
    second_slot: tuple[Matrix, ...]
    output_slot: tuple[Matrix, ...]


def adjoint_matrices(t: StructureTensor) -> AdjointMatrices:
    n = t.dim
    f = t.data
    first = tuple(
        tuple(tuple(-f[i][j][k] for k in range(n)) for j in range(n))
        for i in range(n)
    )
    second = tuple(
        tuple(tuple(-f[i][m][k] for k in range(n)) for i in range(n))
        for m in range(n)
    )
    output = tuple(
        tuple(tuple(-f[i][j][k] for j in range(n)) for i in range(n))
        for k in range(n)
    )
    return AdjointMatrices(first, second, output)


def tensor_from_first_slot(mats: tuple[Matrix, ...]) -> StructureTensor:
    n = len(mats)
    return StructureTensor(
        n,
        tuple(
            tuple(tuple(-mats[i][j][k] for k in range(n)) for j in range(n))
            for i in range(n)
        ),
    )


def tensor_from_second_slot(mats: tuple[Matrix, ...]) -> StructureTensor:
    n = len(mats)
    return StructureTensor(
        n,
        tuple(
            tuple(tuple(-mats[m][i][k] for k in range(n)) for m in range(n))
            for i in range(n)
        ),
    )


def tensor_from_output_slot(mats: tuple[Matrix, ...]) -> StructureTensor:
    n = len(mats)
    return StructureTensor(
        n,
        tuple(
            tuple(tuple(-mats[k][i][j] for k in range(n)) for j in range(n))
            for i in range(n)
        ),
    )


@dataclass(frozen=True)
class CoadjointMatrices:
    """Dual-space actions; entrywise the negated transposes of the adjoints."""

    left: tuple[Matrix, ...]
    right: tuple[Matrix, ...]


def coadjoint_matrices(adj: AdjointMatrices) -> CoadjointMatrices:
    left = tuple(mat_neg(transpose(m)) for m in adj.first_slot)
    right = tuple(mat_neg(transpose(m)) for m in adj.second_slot)
    return CoadjointMatrices(left, right)
