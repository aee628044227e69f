"""Structured output: one JSON-able document per tower.

The renderers in render.py consume nothing but these documents, so
every display decision (including which form of a slice representation
gets printed) is made here, once.
"""

from __future__ import annotations

from typing import Any

from .rep import Rep, render_rep, rho_form, strip_planes
from .tower import Tower, VerificationReport

FORMAT = "slicetower/1"
VERSION = "0.1.0"


def rep_payload(v: Rep) -> dict[str, Any]:
    return {
        "trivial": v.trivial,
        "planes": list(v.planes),
        "dim": v.dim,
        "display": render_rep(v),
        "latex": render_rep(v, latex=True),
    }


def _printed_rep(desc_rep: Rep, kind: str, coeff_j: int | None) -> Rep:
    """What the slice's sphere is displayed as.

    Torsion coefficients cannot see planes at or below their vanishing
    range, so those summands are stripped from the display unless the
    representation is an exact regular multiple over a group with at
    least two plane levels, where that shorthand is shorter and exact.
    """
    if kind != "torsion":
        return desc_rep
    if desc_rep.group.k >= 2 and rho_form(desc_rep) is not None:
        return desc_rep
    return strip_planes(desc_rep, coeff_j + 1)


def _failure_payload(f: Any) -> dict[str, Any]:
    return {
        "level": f.level,
        "check": f.check,
        "epsilon": f.epsilon,
        "t": f.t,
        "group": None if f.group is None else str(f.group),
    }


def tower_document(tower: Tower,
                   reports: list[VerificationReport] | None = None) -> dict[str, Any]:
    group = tower.group
    stages = []
    for i, stage in enumerate(tower.stages):
        desc = stage.descriptor
        if desc.is_torsion:
            coeff = {"family": "B", "i": desc.coeff_i, "j": desc.coeff_j,
                     "display": f"B({desc.coeff_i},{desc.coeff_j})"}
        else:
            coeff = {"family": "Z", "display": "Z"}
        printed = _printed_rep(desc.rep, desc.kind, desc.coeff_j)
        entry: dict[str, Any] = {
            "index": i,
            "slice": {
                "dim": desc.dim,
                "kind": desc.kind,
                "a": desc.a,
                "b": desc.b,
                "rep": rep_payload(desc.rep),
                "printed": {"display": render_rep(printed),
                            "latex": render_rep(printed, latex=True)},
                "coefficient": coeff,
            },
            "section": rep_payload(stage.section),
            "verification": None,
        }
        if reports is not None:
            r = reports[i]
            entry["verification"] = {
                "passed": r.passed,
                "checks": r.checks,
                "failures": [_failure_payload(f) for f in r.failures],
            }
        stages.append(entry)

    return {
        "format": FORMAT,
        "tool": {"name": "slicetower", "version": VERSION},
        "group": {"p": group.p, "k": group.k, "order": group.order,
                  "display": str(group)},
        "n": tower.n,
        "stage_count": len(stages),
        "stages": stages,
    }
