"""JSON documents for spaces, belief structures and computed results.

Sets are written as label arrays in universe order and rationals as
``"a/b"`` strings, so equal inputs always give byte-identical output.
"""

from __future__ import annotations

import json
from collections.abc import Mapping
from typing import Any

from .bridges import InducedMassResult
from .core import Decider, ElementSet, SApproxError, SApproxSpace, Universe, build_space
from .evidence import BeliefStructure, build_belief_structure, format_rational, to_rational
from .regions import QualityPair, RegionDecomposition


def dumps(doc: Any) -> str:
    return json.dumps(doc, separators=(",", ":"), ensure_ascii=False)


def _require_keys(doc: Any, required: set[str], optional: frozenset[str] = frozenset(), what: str = "document") -> None:
    if not isinstance(doc, Mapping):
        raise SApproxError(f"{what} must be a JSON object")
    missing = required - set(doc)
    if missing:
        raise SApproxError(f"{what} is missing keys {sorted(missing)}")
    extra = set(doc) - required - optional
    if extra:
        raise SApproxError(f"unknown keys in {what}: {sorted(extra)}")


def decider_to_doc(s: Decider) -> dict[str, Any]:
    if s.kind == "card_threshold":
        return {"kind": "card_threshold", "k": s.k}
    if s.kind != "table":
        return {"kind": s.kind}
    w = s.universe
    assert w is not None
    return {
        "kind": "table",
        "entries": [{"A": w.labels_of(a), "minimal": [w.labels_of(m) for m in minimal]} for a, minimal in s.entries],
    }


def space_to_doc(g: SApproxSpace) -> dict[str, Any]:
    return {
        "U": list(g.u.labels),
        "W": list(g.w.labels),
        "T": {x: g.t[i].labels for i, x in enumerate(g.u.labels)},
        "S": decider_to_doc(g.s),
    }


def space_from_doc(doc: Any) -> SApproxSpace:
    _require_keys(doc, {"U", "W", "T", "S"}, what="space document")
    if not isinstance(doc["U"], list) or not isinstance(doc["W"], list) or not isinstance(doc["T"], Mapping):
        raise SApproxError("space document needs list 'U', list 'W' and object 'T'")
    return build_space(doc["U"], doc["W"], doc["T"], doc["S"])


def belief_to_doc(bs: BeliefStructure) -> dict[str, Any]:
    return {"W": list(bs.w.labels), "m": [{"set": s.labels, "value": format_rational(m)} for s, m in bs.focal]}


def _mass_entries(doc: Mapping[str, Any]) -> list[tuple[list[str], Any]]:
    if not isinstance(doc["W"], list) or not isinstance(doc["m"], list):
        raise SApproxError("belief document needs list 'W' and list 'm'")
    entries = []
    for entry in doc["m"]:
        _require_keys(entry, {"set", "value"}, what="mass entry")
        if isinstance(entry["value"], float):
            raise SApproxError(f"mass {entry['value']!r} is a decimal; write it as 'a/b'")
        entries.append((entry["set"], entry["value"]))
    return entries


def belief_from_doc(doc: Any) -> BeliefStructure:
    _require_keys(doc, {"W", "m"}, what="belief document")
    return build_belief_structure(doc["W"], _mass_entries(doc))


def induced_to_doc(result: InducedMassResult) -> dict[str, Any]:
    return {
        "W": list(result.w.labels),
        "m": [{"set": s.labels, "value": format_rational(result.masses[s])} for s in result.support],
        "valid": result.valid,
        "diagnostics": list(result.diagnostics),
    }


def induced_from_doc(doc: Any) -> InducedMassResult:
    _require_keys(doc, {"W", "m", "valid", "diagnostics"}, what="induced mass document")
    w = Universe(tuple(doc["W"]))
    masses: dict[ElementSet, Any] = {}
    for labels, value in _mass_entries(doc):
        s = w.subset(labels)
        if s in masses:
            raise SApproxError(f"duplicate set {s} in induced mass document")
        masses[s] = to_rational(value)
    if not isinstance(doc["valid"], bool) or not isinstance(doc["diagnostics"], list):
        raise SApproxError("'valid' must be a boolean and 'diagnostics' a list")
    return InducedMassResult(w, masses, doc["valid"], tuple(str(d) for d in doc["diagnostics"]))


def regions_to_doc(lower: ElementSet, upper: ElementSet, dec: RegionDecomposition) -> dict[str, Any]:
    return {"lower": lower.labels, "upper": upper.labels, "pos": dec.pos.labels, "neg": dec.neg.labels, "br": dec.br.labels}


def quality_to_doc(x: ElementSet, q: QualityPair) -> dict[str, Any]:
    return {"set": x.labels, "q_lower": format_rational(q.q_lower), "q_upper": format_rational(q.q_upper)}


def inflection_to_doc(points: Mapping[str, tuple[ElementSet, ...]]) -> dict[str, list[list[str]]]:
    return {x: [s.labels for s in sets] for x, sets in points.items()}
