"""The four two-sided actions of an algebra on its tensor square.

Elements of the tensor square are coefficient matrices ``u`` with
``u[a][b]`` multiplying ``X_{a+1} (x) X_{b+1}``.  Per case, with ``L`` the
left bracket slot and ``R`` the right one:

* case 1:  [X, u]_L acts on the first factor from the left,
           [u, X]_R acts on the first factor from the right;
* case 2:  [X, u]_L = 0 (right-handed algebras only),
           [u, X]_R acts on both factors from the right;
* case 3:  [X, u]_L acts on both factors from the left (left-handed only),
           [u, X]_R = 0;
* case 4:  [X, u]_L acts on the second factor from the left,
           [u, X]_R acts on the second factor from the right.

Each case makes the tensor square a module over a compatible algebra, for
the module-axiom set matching the case's handedness.  The residuals of all
three axioms are exposed so that claim is checkable rather than assumed.
Measured outcome on the bundled corpus (see tests): cases 1 and 4 satisfy
the right-handed axiom set on right-compatible algebras and the left-handed
set on left-compatible ones; case 2 satisfies the right-handed set only and
case 3 the left-handed set only.  On a two-sided algebra the crossed sets
(case 2 with the left-handed axioms, case 3 with the right-handed ones) do
fail; probe them via the ``sides`` override.
"""

from __future__ import annotations

import enum

from fractions import Fraction

from .core import LeibnizAlgebra, Side
from .errors import ChiralityError, DimensionError
from .linalg import Matrix, zeros


class ActionCase(enum.Enum):
    CASE1 = 1
    CASE2 = 2
    CASE3 = 3
    CASE4 = 4

    @property
    def required_side(self) -> Side | None:
        if self is ActionCase.CASE2:
            return Side.RIGHT
        if self is ActionCase.CASE3:
            return Side.LEFT
        return None


def _require_case(case: ActionCase, alg: LeibnizAlgebra) -> None:
    need = case.required_side
    if need is not None and not alg.admits(need):
        raise ChiralityError(
            f"action case {case.value} needs a {need.value}-handed algebra; "
            f"got {alg.chirality.value}"
        )


def _act_first_left(alg, x, u):
    # first factor -> [X_x, .]
    n = alg.dim
    f = alg.tensor.data
    return tuple(
        tuple(
            sum((u[a][b] * f[x][a][m] for a in range(n)), Fraction(0))
            for b in range(n)
        )
        for m in range(n)
    )


def _act_first_right(alg, x, u):
    # first factor -> [., X_x]
    n = alg.dim
    f = alg.tensor.data
    return tuple(
        tuple(
            sum((u[a][b] * f[a][x][m] for a in range(n)), Fraction(0))
            for b in range(n)
        )
        for m in range(n)
    )


def _act_second_left(alg, x, u):
    n = alg.dim
    f = alg.tensor.data
    return tuple(
        tuple(
            sum((u[a][b] * f[x][b][m] for b in range(n)), Fraction(0))
            for m in range(n)
        )
        for a in range(n)
    )


def _act_second_right(alg, x, u):
    n = alg.dim
    f = alg.tensor.data
    return tuple(
        tuple(
            sum((u[a][b] * f[b][x][m] for b in range(n)), Fraction(0))
            for m in range(n)
        )
        for a in range(n)
    )


def _mat_sum(n, *mats):
    out = [[Fraction(0)] * n for _ in range(n)]
    for m in mats:
        for a in range(n):
            for b in range(n):
                out[a][b] += m[a][b]
    return tuple(tuple(row) for row in out)


def act(case: ActionCase, side: Side, alg: LeibnizAlgebra, x: int, u: Matrix) -> Matrix:
    """Apply [X_x, u]_L (side LEFT) or [u, X_x]_R (side RIGHT); x is 1-based."""
    _require_case(case, alg)
    n = alg.dim
    if not 1 <= x <= n:
        raise DimensionError(f"basis index {x} outside 1..{n}")
    if len(u) != n or any(len(row) != n for row in u):
        raise DimensionError("tensor-square element has wrong shape")
    x0 = x - 1
    if side is Side.LEFT:
        if case is ActionCase.CASE1:
            return _act_first_left(alg, x0, u)
        if case is ActionCase.CASE2:
            return zeros(n, n)
        if case is ActionCase.CASE3:
            return _mat_sum(n, _act_first_left(alg, x0, u), _act_second_left(alg, x0, u))
        return _act_second_left(alg, x0, u)
    if case is ActionCase.CASE1:
        return _act_first_right(alg, x0, u)
    if case is ActionCase.CASE2:
        return _mat_sum(n, _act_first_right(alg, x0, u), _act_second_right(alg, x0, u))
    if case is ActionCase.CASE3:
        return zeros(n, n)
    return _act_second_right(alg, x0, u)


def _act_vec(case, side, alg, coeffs, u):
    """Action of the element sum_k coeffs[k] X_{k+1}; coeffs are 0-based."""
    n = alg.dim
    out = [[Fraction(0)] * n for _ in range(n)]
    for k in range(n):
        c = coeffs[k]
        if c == 0:
            continue
        m = act(case, side, alg, k + 1, u)
        for a in range(n):
            for b in range(n):
                out[a][b] += c * m[a][b]
    return tuple(tuple(row) for row in out)


def _basis_element(n, a, b):
    return tuple(
        tuple(Fraction(1 if (i, j) == (a, b) else 0) for j in range(n))
        for i in range(n)
    )


def module_axiom_residuals(case: ActionCase, alg: LeibnizAlgebra, sides=None):
    """Module-axiom defects of the case's action pair on the tensor square.

    Returns labelled rank-6 arrays, one per axiom, indexed
    ``[x][y][a][b][m][n]``: basis pair (X_x, X_y), module basis element
    X_a (x) X_b, coefficient slot (m, n).  By default the axiom sets checked
    are the ones the case claims: its required handedness for cases 2 and 3,
    every handedness the algebra admits for cases 1 and 4.  Pass ``sides``
    explicitly to probe other combinations.
    """
    _require_case(case, alg)
    if sides is None:
        need = case.required_side
        if need is not None:
            sides = (need,)
        else:
            sides = tuple(s for s in (Side.RIGHT, Side.LEFT) if alg.admits(s))
    n = alg.dim
    f = alg.tensor.data

    def L(x, u):
        return act(case, Side.LEFT, alg, x + 1, u)

    def R(x, u):
        return act(case, Side.RIGHT, alg, x + 1, u)

    def Lv(coeffs, u):
        return _act_vec(case, Side.LEFT, alg, coeffs, u)

    def Rv(coeffs, u):
        return _act_vec(case, Side.RIGHT, alg, coeffs, u)

    def diff(p, q, s):
        return tuple(
            tuple(p[a][b] - q[a][b] - s[a][b] for b in range(n)) for a in range(n)
        )

    def build(residual_fn):
        return tuple(
            tuple(
                tuple(
                    tuple(residual_fn(x, y, _basis_element(n, a, b)) for b in range(n))
                    for a in range(n)
                )
                for y in range(n)
            )
            for x in range(n)
        )

    out = []
    if Side.RIGHT in sides:
        out.append(
            ("right-1", build(lambda x, y, m: diff(Lv(f[x][y], m), R(y, L(x, m)), L(x, L(y, m)))))
        )
        out.append(
            ("right-2", build(lambda x, y, m: diff(R(x, R(y, m)), R(y, R(x, m)), Rv(f[y][x], m))))
        )
        out.append(
            ("right-3", build(lambda x, y, m: diff(R(x, L(y, m)), Lv(f[y][x], m), L(y, R(x, m)))))
        )
    if Side.LEFT in sides:
        out.append(
            ("left-1", build(lambda x, y, m: diff(Rv(f[x][y], m), R(y, R(x, m)), L(x, R(y, m)))))
        )
        out.append(
            ("left-2", build(lambda x, y, m: diff(L(x, R(y, m)), R(y, L(x, m)), Rv(f[x][y], m))))
        )
        out.append(
            ("left-3", build(lambda x, y, m: diff(L(x, L(y, m)), Lv(f[x][y], m), L(y, L(x, m)))))
        )
    return out


def _all_zero(arr) -> bool:
    return all(
        v == 0
        for p1 in arr
        for p2 in p1
        for p3 in p2
        for p4 in p3
        for row in p4
        for v in row
    )


def axioms_hold(case: ActionCase, alg: LeibnizAlgebra, sides=None) -> bool:
    return all(_all_zero(arr) for _, arr in module_axiom_residuals(case, alg, sides))


def axiom_report(case: ActionCase, alg: LeibnizAlgebra) -> dict[str, bool]:
    """Per-axiom verdicts for the case's claimed axiom sets."""
    return {
        label: _all_zero(arr) for label, arr in module_axiom_residuals(case, alg)
    }


def complex_compatible(case: ActionCase, side: Side) -> bool:
    """Whether the case's actions form a complex for the given handedness.

    Cases 1 and 4 pair with either complex; case 2 only with the
    right-handed one and case 3 only with the left-handed one (the crossed
    pairings fail the matching module axioms, see module notes).
    """
    if case is ActionCase.CASE2:
        return side is Side.RIGHT
    if case is ActionCase.CASE3:
        return side is Side.LEFT
    return True
