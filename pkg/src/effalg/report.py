"""JSON report assembly with a fixed key layout.

Top-level keys, in order: "model", "valid", "violations", "profile",
"witnesses", "theorems".  Booleans are never null; witnesses are rendered
with element labels so reports are readable without the table at hand.
The schema shipped at ``data/report.schema.json`` pins the layout.
"""

from __future__ import annotations

import importlib.resources
import json
from typing import Any

from .core import FiniteEffectAlgebra, ValidationReport, validate
from .properties import PROFILE_FLAGS, PropertyProfile, profile
from .theorems import CHECK_IDS, TheoremReport, run_all


def schema() -> dict:
    data = importlib.resources.files("effalg").joinpath("data/report.schema.json")
    return json.loads(data.read_text(encoding="utf-8"))


def _violations_json(alg: FiniteEffectAlgebra, report: ValidationReport) -> list[dict]:
    return [
        {
            "axiom": v.axiom,
            "witness": [alg.label(i) for i in v.witness],
            "message": v.message,
        }
        for v in report.violations
    ]


def _witness_json(alg: FiniteEffectAlgebra, value: Any) -> Any:
    """Render witness payloads with labels; element indices become strings."""
    if isinstance(value, bool) or value is None or isinstance(value, (str, float)):
        return value
    if isinstance(value, int):
        return alg.label(value)
    if isinstance(value, dict):
        return {_key(alg, k): _witness_json(alg, v) for k, v in value.items()}
    if isinstance(value, (list, tuple, set, frozenset)):
        items = sorted(value) if isinstance(value, (set, frozenset)) else value
        return [_witness_json(alg, v) for v in items]
    return str(value)


def _key(alg: FiniteEffectAlgebra, k: Any) -> str:
    return alg.label(k) if isinstance(k, int) and not isinstance(k, bool) else str(k)


def _profile_json(alg: FiniteEffectAlgebra, prof: PropertyProfile) -> dict:
    out: dict[str, Any] = {name: prof.flags()[name] for name in PROFILE_FLAGS}
    out["atoms"] = [alg.label(a) for a in prof.atoms]
    return out


def _theorems_json(alg: FiniteEffectAlgebra, report: TheoremReport) -> dict:
    out = {}
    for cid in CHECK_IDS:
        res = report.results[cid]
        entry: dict[str, Any] = {"status": res.status}
        if res.witness is not None:
            entry["witness"] = _witness_json(alg, res.witness)
        out[cid] = entry
    return out


def build_report(alg: FiniteEffectAlgebra, name: str | None = None) -> dict:
    """The full JSON report for one model (profile only when valid)."""
    validation = validate(alg)
    doc: dict[str, Any] = {
        "model": {"name": name if name is not None else alg.name, "size": alg.size},
        "valid": validation.valid,
        "violations": _violations_json(alg, validation),
        "profile": {},
        "witnesses": {},
        "theorems": {},
    }
    if validation.valid:
        prof = profile(alg)
        doc["profile"] = _profile_json(alg, prof)
        doc["witnesses"] = {str(k): _witness_json(alg, v) for k, v in prof.witnesses.items()}
        doc["theorems"] = _theorems_json(alg, run_all(alg))
    return doc


def dumps_report(doc: dict) -> str:
    return json.dumps(doc, ensure_ascii=False, indent=2) + "\n"
