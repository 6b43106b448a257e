"""Scenario table, linear cocycle systems, exact nullspaces and the
quadratic residuals that sit on top of them.

A scenario picks one of the four compatibility forms together with a
handedness for the dual bracket; the six admissible pairings are fixed
below in the order their defining systems are conventionally listed.  The
solver handles the linear stage exactly and exposes the quadratic stage as
polynomials in the family parameters; it never attempts to solve the
quadratic variety.

Column contract: the unknown dual entries are flattened in lexicographic
(m, n, k) order, 1-based, and parameters are named t1..td in the order of
the free columns.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

from .cohomology import cocycle_residual_tensor
from .core import (
    Chirality,
    LeibnizAlgebra,
    Side,
    StructureTensor,
    first_nonzero,
    leibniz_residual,
)
from .errors import ChiralityError, DimensionError
from .linalg import Matrix, kernel_basis
from .poly import Poly


@dataclass(frozen=True)
class Scenario:
    key: str
    form: int
    primal: str  # "any" | "right" | "left"
    dual_side: Side

    def compatible(self, alg: LeibnizAlgebra) -> bool:
        if alg.chirality is Chirality.NEITHER:
            return False
        if self.primal == "any":
            return True
        return alg.admits(Side.RIGHT if self.primal == "right" else Side.LEFT)

    def require(self, alg: LeibnizAlgebra) -> None:
        if not self.compatible(alg):
            raise ChiralityError(
                f"scenario {self.key} needs a {self.primal}-handed algebra; "
                f"got {alg.chirality.value}"
            )


SCENARIOS: tuple[Scenario, ...] = (
    Scenario("lr-1-r", 1, "any", Side.RIGHT),
    Scenario("r-2-r", 2, "right", Side.RIGHT),
    Scenario("r-2-l", 2, "right", Side.LEFT),
    Scenario("lr-4-l", 4, "any", Side.LEFT),
    Scenario("l-3-r", 3, "left", Side.RIGHT),
    Scenario("l-3-l", 3, "left", Side.LEFT),
)

SCENARIO_BY_KEY = {sc.key: sc for sc in SCENARIOS}


def scenario(key: str) -> Scenario:
    try:
        return SCENARIO_BY_KEY[key.lower()]
    except KeyError:
        raise DimensionError(
            f"unknown scenario {key!r}; choose from "
            + ", ".join(sc.key for sc in SCENARIOS)
        ) from None


def column_order(dim: int):
    """Flattened unknown order: (m, n, k) lexicographic, 1-based."""
    return [
        (m, n, k)
        for m in range(1, dim + 1)
        for n in range(1, dim + 1)
        for k in range(1, dim + 1)
    ]


def column_index(dim: int, m: int, n: int, k: int) -> int:
    return ((m - 1) * dim + (n - 1)) * dim + (k - 1)


@dataclass(frozen=True)
class LinearSystem:
    dim: int
    form: int
    matrix: Matrix  # n^4 rows by n^3 columns
    row_provenance: tuple[tuple[int, int, int, int], ...]  # (i, j, m, n), 1-based

    def apply(self, ftilde: StructureTensor):
        """Residual vector of a candidate dual; independent of elimination."""
        if ftilde.dim != self.dim:
            raise DimensionError("tensor dimension does not match system")
        flat = flatten_tensor(ftilde)
        return tuple(
            sum((c * v for c, v in zip(row, flat)), Fraction(0))
            for row in self.matrix
        )

    def annihilates(self, ftilde: StructureTensor) -> bool:
        return all(v == 0 for v in self.apply(ftilde))


def flatten_tensor(t: StructureTensor):
    n = t.dim
    return tuple(
        t.data[m][ncol][k]
        for m in range(n)
        for ncol in range(n)
        for k in range(n)
    )


def unflatten_tensor(dim: int, vec) -> StructureTensor:
    it = iter(vec)
    data = tuple(
        tuple(tuple(Fraction(next(it)) for _ in range(dim)) for _ in range(dim))
        for _ in range(dim)
    )
    return StructureTensor(dim, data)


def assemble_cocycle_system(alg: LeibnizAlgebra, sc: Scenario) -> LinearSystem:
    """Linear constraints on the dual table imposed by the scenario's form.

    One row per residual component (i, j, m, n), lexicographic and 1-based;
    substituting any tensor into the rows reproduces the residual exactly.
    """
    sc.require(alg)
    n = alg.dim
    f = alg.tensor.data
    form = sc.form
    rows = []
    provenance = []
    for i, j, m, ncol in itertools.product(range(n), repeat=4):
        row = [Fraction(0)] * (n ** 3)

        def add(a, b, c, value):
            if value != 0:
                row[(a * n + b) * n + c] += value

        for k in range(n):
            add(m, ncol, k, f[i][j][k])
        if form == 1:
            for a in range(n):
                add(a, ncol, j, -f[i][a][m])
                add(a, ncol, i, -f[a][j][m])
        elif form == 2:
            for a in range(n):
                add(m, a, i, -f[a][j][ncol])
                add(a, ncol, i, -f[a][j][m])
        elif form == 3:
            for a in range(n):
                add(m, a, j, -f[i][a][ncol])
                add(a, ncol, j, -f[i][a][m])
        else:
            for a in range(n):
                add(m, a, j, -f[i][a][ncol])
                add(m, a, i, -f[a][j][ncol])
        rows.append(tuple(row))
        provenance.append((i + 1, j + 1, m + 1, ncol + 1))
    return LinearSystem(n, form, tuple(rows), tuple(provenance))


@dataclass(frozen=True)
class DualFamily:
    """Affine-linear family sum_a t_a * basis_a of candidate dual tables."""

    dim: int
    basis: tuple[StructureTensor, ...]
    parameters: tuple[str, ...]

    def member(self, assignment) -> StructureTensor:
        if len(assignment) != len(self.parameters):
            raise DimensionError(
                f"expected {len(self.parameters)} parameter values"
            )
        out = StructureTensor.zero(self.dim)
        for value, b in zip(assignment, self.basis):
            out = out.plus(b.scaled(value))
        return out

    def poly_tensor(self):
        """Entries of the generic member as polynomials in t1..td."""
        n = self.dim
        grid = [[[Poly() for _ in range(n)] for _ in range(n)] for _ in range(n)]
        for a, b in enumerate(self.basis):
            for i in range(n):
                for j in range(n):
                    for k in range(n):
                        v = b.data[i][j][k]
                        if v != 0:
                            grid[i][j][k] = grid[i][j][k] + Poly({(a,): v})
        return grid

    def __len__(self):
        return len(self.basis)


def family_from_tensors(tensors) -> DualFamily:
    tensors = tuple(tensors)
    if not tensors:
        raise DimensionError("family needs at least one generator")
    dim = tensors[0].dim
    params = tuple(f"t{a + 1}" for a in range(len(tensors)))
    return DualFamily(dim, tensors, params)


def nullspace(system: LinearSystem) -> DualFamily:
    """Exact kernel of the linear stage as a parameterized family.

    Deterministic: leftmost-pivot elimination; free columns in ascending
    flattened order become t1..td in that order.  A full-rank system gives
    an empty family.
    """
    vecs = kernel_basis(system.matrix, system.dim ** 3)
    basis = tuple(unflatten_tensor(system.dim, v) for v in vecs)
    params = tuple(f"t{a + 1}" for a in range(len(basis)))
    return DualFamily(system.dim, basis, params)


@dataclass(frozen=True)
class QuadraticResidual:
    """Dual-handedness defect of a family, componentwise in the parameters.

    ``polynomials[x]`` is the residual component with 1-based provenance
    ``provenance[x] = (i, j, k, m)``; evaluating every polynomial at an
    assignment agrees entry for entry with running ``leibniz_residual`` on
    the corresponding member tensor.
    """

    side: Side
    parameters: tuple[str, ...]
    polynomials: tuple[Poly, ...]
    provenance: tuple[tuple[int, int, int, int], ...]

    def is_identically_zero(self) -> bool:
        return all(p.is_zero() for p in self.polynomials)

    def evaluate(self, assignment):
        vals = list(assignment)
        return tuple(p.evaluate(vals) for p in self.polynomials)

    def first_nonconstant(self):
        for prov, p in zip(self.provenance, self.polynomials):
            if not p.is_zero():
                return prov, p
        return None


def dual_leibniz_residual(family: DualFamily, side: Side) -> QuadraticResidual:
    """Quadratic polynomials whose simultaneous vanishing marks the members
    of the family whose bracket satisfies the requested identity.

    An empty family (trivial kernel) has nothing to constrain and gets an
    empty polynomial list.
    """
    if not family.basis:
        return QuadraticResidual(side, (), (), ())
    n = family.dim
    g = family.poly_tensor()
    polys = []
    provenance = []
    for i, j, k, m in itertools.product(range(n), repeat=4):
        acc = Poly()
        if side is Side.RIGHT:
            for p in range(n):
                acc = acc + g[j][k][p] * g[p][i][m]
                acc = acc - g[j][i][p] * g[p][k][m]
                acc = acc - g[k][i][p] * g[j][p][m]
        else:
            for p in range(n):
                acc = acc + g[j][k][p] * g[i][p][m]
                acc = acc - g[i][j][p] * g[p][k][m]
                acc = acc - g[i][k][p] * g[j][p][m]
        polys.append(acc)
        provenance.append((i + 1, j + 1, k + 1, m + 1))
    return QuadraticResidual(side, family.parameters, tuple(polys), tuple(provenance))


@dataclass(frozen=True)
class BialgebraVerdict:
    scenario_key: str
    cocycle_ok: bool
    dual_leibniz_ok: bool
    witness: tuple | None  # (check-name, (indices), value) for the first defect

    @property
    def ok(self) -> bool:
        return self.cocycle_ok and self.dual_leibniz_ok


def verify_bialgebra(
    alg: LeibnizAlgebra, sc: Scenario, ftilde: StructureTensor
) -> BialgebraVerdict:
    """Check one candidate dual table against one scenario."""
    sc.require(alg)
    if ftilde.dim != alg.dim:
        raise DimensionError("dual tensor dimension does not match the algebra")
    res = cocycle_residual_tensor(alg.tensor, ftilde, sc.form)
    hit = first_nonzero(res)
    cocycle_ok = hit is None
    witness = None
    if hit is not None:
        witness = ("cocycle", hit[0], hit[1])
    dres = leibniz_residual(ftilde, sc.dual_side)
    dhit = first_nonzero(dres)
    dual_ok = dhit is None
    if witness is None and dhit is not None:
        witness = ("dual-leibniz", dhit[0], dhit[1])
    return BialgebraVerdict(sc.key, cocycle_ok, dual_ok, witness)


@dataclass(frozen=True)
class SweepEntry:
    scenario: Scenario
    family: DualFamily
    quadratic: QuadraticResidual


def scenario_sweep(alg: LeibnizAlgebra) -> dict[str, SweepEntry]:
    """Solve the linear stage of every compatible scenario, in table order."""
    out: dict[str, SweepEntry] = {}
    for sc in SCENARIOS:
        if not sc.compatible(alg):
            continue
        system = assemble_cocycle_system(alg, sc)
        family = nullspace(system)
        quadratic = dual_leibniz_residual(family, sc.dual_side)
        out[sc.key] = SweepEntry(sc, family, quadratic)
    return out


def family_is_cocycle(alg: LeibnizAlgebra, sc: Scenario, family: DualFamily) -> bool:
    """Every generic member of the family solves the scenario's linear stage."""
    system = assemble_cocycle_system(alg, sc)
    return all(system.annihilates(b) for b in family.basis)


def family_verdict(alg: LeibnizAlgebra, sc: Scenario, family: DualFamily):
    """Symbolic verify_bialgebra for a whole parameterized family."""
    cocycle_ok = family_is_cocycle(alg, sc, family)
    dual_ok = dual_leibniz_residual(family, sc.dual_side).is_identically_zero()
    return cocycle_ok, dual_ok
