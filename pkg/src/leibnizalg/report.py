"""Deterministic report assembly.

Reports are plain dicts serialized with sorted keys; every rational is a
``p`` or ``p/q`` string, never a float, so byte-identical inputs (and seed)
give byte-identical reports.
"""

from __future__ import annotations

import hashlib
import json
import random
from fractions import Fraction

from . import __version__ as _version
from .actions import ActionCase, axiom_report, complex_compatible
from .cohomology import coboundary0, coboundary1
from .core import (
    LeibnizAlgebra,
    Side,
    StructureTensor,
    adjoint_matrices,
    coadjoint_matrices,
    first_nonzero,
    leibniz_residual,
)
from .document import AlgebraDocument
from .rmatrix import (
    CoboundaryCase,
    coboundary_cocommutator,
    cocommutator_matrix_route,
    crosscheck_dual_defect,
    dual_bracket_from_r,
    schouten,
    triple_products,
)
from .solver import scenario_sweep


def rational_str(x: Fraction) -> str:
    return str(x)


def matrix_json(m):
    return [[rational_str(v) for v in row] for row in m]


def tensor_json(t: StructureTensor):
    return [[i, j, k, rational_str(v)] for (i, j, k), v in t.items()]


def witness_json(hit, label):
    if hit is None:
        return None
    indices, value = hit
    return {"check": label, "component": list(indices), "value": rational_str(value)}


def chirality_section(alg: LeibnizAlgebra):
    out = {"chirality": alg.chirality.value, "witnesses": []}
    for side in (Side.LEFT, Side.RIGHT):
        hit = first_nonzero(leibniz_residual(alg.tensor, side))
        if hit is not None:
            out["witnesses"].append(witness_json(hit, f"{side.value}-identity"))
    return out


def adjoint_section(alg: LeibnizAlgebra):
    adj = adjoint_matrices(alg.tensor)
    coad = coadjoint_matrices(adj)
    return {
        "first_slot": [matrix_json(m) for m in adj.first_slot],
        "second_slot": [matrix_json(m) for m in adj.second_slot],
        "output_slot": [matrix_json(m) for m in adj.output_slot],
        "coadjoint_left": [matrix_json(m) for m in coad.left],
        "coadjoint_right": [matrix_json(m) for m in coad.right],
    }


def actions_section(alg: LeibnizAlgebra):
    out = {}
    for case in ActionCase:
        need = case.required_side
        if need is not None and not alg.admits(need):
            continue
        out[f"case{case.value}"] = {
            label: ("pass" if ok else "fail")
            for label, ok in axiom_report(case, alg).items()
        }
    return out


def duals_section(alg: LeibnizAlgebra):
    out = {}
    for key, entry in scenario_sweep(alg).items():
        quad = entry.quadratic
        nonzero = [
            {
                "component": list(prov),
                "polynomial": poly.render(quad.parameters),
            }
            for prov, poly in zip(quad.provenance, quad.polynomials)
            if not poly.is_zero()
        ]
        out[key] = {
            "form": entry.scenario.form,
            "dual_side": entry.scenario.dual_side.value,
            "kernel_dimension": len(entry.family),
            "parameters": list(entry.family.parameters),
            "basis": [tensor_json(b) for b in entry.family.basis],
            "quadratic_identically_zero": quad.is_identically_zero(),
            "quadratic_nonzero_components": nonzero,
        }
    return out


def _random_matrix(rng: random.Random, n: int):
    return tuple(
        tuple(Fraction(rng.randint(-4, 4), rng.randint(1, 3)) for _ in range(n))
        for _ in range(n)
    )


def selfcheck_section(alg: LeibnizAlgebra, seed: int, trials: int = 5):
    """Seeded randomized identity battery recorded inside the report."""
    rng = random.Random(seed)
    n = alg.dim
    results = {}
    complex_ok = True
    for case in ActionCase:
        need = case.required_side
        if need is not None and not alg.admits(need):
            continue
        for side in (Side.LEFT, Side.RIGHT):
            if not alg.admits(side) or not complex_compatible(case, side):
                continue
            for _ in range(trials):
                m = _random_matrix(rng, n)
                d0 = coboundary0(alg, case, side, m)
                if not coboundary1(alg, case, side, d0).is_zero():
                    complex_ok = False
    results["coboundary_squares_to_zero"] = complex_ok
    route_ok = True
    defect_ok = True
    decomp_ok = True
    for side in (Side.LEFT, Side.RIGHT):
        if not alg.admits(side):
            continue
        cases = (
            (CoboundaryCase.RIGHT_1, CoboundaryCase.RIGHT_4)
            if side is Side.RIGHT
            else (CoboundaryCase.LEFT_1, CoboundaryCase.LEFT_4)
        )
        bracket_case = cases[0] if side is Side.RIGHT else cases[1]
        for _ in range(trials):
            r = _random_matrix(rng, n)
            for case in cases:
                if coboundary_cocommutator(alg, r, case) != cocommutator_matrix_route(
                    alg, r, case
                ):
                    route_ok = False
            if dual_bracket_from_r(alg, r, side) != coboundary_cocommutator(
                alg, r, bracket_case
            ):
                route_ok = False
            if not crosscheck_dual_defect(alg, r, side):
                defect_ok = False
            s = schouten(alg, r, side).entries
            p1, p2, _ = triple_products(alg, r, side)
            total = tuple(
                tuple(
                    tuple(
                        p1.entries[a][b][c] + p2.entries[a][b][c] for c in range(n)
                    )
                    for b in range(n)
                )
                for a in range(n)
            )
            if total != s:
                decomp_ok = False
    results["cocommutator_routes_agree"] = route_ok
    results["dual_defect_identity"] = defect_ok
    results["schouten_decomposition"] = decomp_ok
    results["seed"] = seed
    results["trials"] = trials
    return results


def build_report(doc: AlgebraDocument, alg: LeibnizAlgebra, raw: bytes, seed: int):
    return {
        "tool": {"name": "leibnizalg", "version": _version},
        "input": {
            "digest": hashlib.sha256(raw).hexdigest(),
            "name": doc.name,
            "dim": doc.dim,
            "declared_side": doc.declared_side,
        },
        "check": chirality_section(alg),
        "adjoint": adjoint_section(alg),
        "actions": actions_section(alg),
        "duals": duals_section(alg),
        "selfcheck": selfcheck_section(alg, seed),
    }


def render_json(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2) + "\n"
