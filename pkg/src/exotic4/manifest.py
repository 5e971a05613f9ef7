"""JSON manifests: the one interchange format of the command line tool."""

from __future__ import annotations

import json

from . import __version__
from .assemble import AssembledManifold
from .blocks import (
    BlockDescriptor,
    build_gurtas,
    build_hyperelliptic_metadata,
    build_korkmaz,
    build_luttinger_family_A,
    build_luttinger_family_B,
)
from .constructions import (
    build_X,
    build_X0,
    build_X_cyclic,
    build_X_free,
    build_X_m,
)
from .fpgroup.presentation import Presentation, parse_presentation

FAMILIES = ("X", "Xm", "X0", "Xfree", "Xcyclic")
BLOCKS = ("korkmaz", "gurtas", "hyperelliptic", "familyA", "familyB")


def build_from_recipe(family: str, params: dict):
    """Dispatch on a family name (``X`` .. ``Xcyclic`` or ``block:<name>``)."""
    p = dict(params)
    rel = p.get("relations", "vanishing")
    if family == "X":
        return build_X(p["n"], p["k"], relations=rel)
    if family == "Xm":
        return build_X_m(p["n"], p["k"], p["m"], relations=rel)
    if family == "X0":
        return build_X0(p["n"], p["k"], relations=rel)
    if family == "Xfree":
        return build_X_free(p["n"], p["k"], p.get("p"), p.get("q"), relations=rel)
    if family == "Xcyclic":
        return build_X_cyclic(p["n"], p["k"], p["q"], relations=rel)
    if family.startswith("block:"):
        name = family.split(":", 1)[1]
        if name == "korkmaz":
            return build_korkmaz(p["k"], rel)
        if name == "gurtas":
            return build_gurtas(p["n"], p["k"], rel)
        if name == "hyperelliptic":
            return build_hyperelliptic_metadata(p["g"])
        if name == "familyA":
            return build_luttinger_family_A(p["n"], p["p"], p["q"])
        if name == "familyB":
            return build_luttinger_family_B(p["n"], p.get("p", 1), p.get("m", 1), p.get("q", 1))
    raise ValueError(f"unknown family {family!r}")


def presentation_json(P: Presentation) -> dict:
    return {
        "generators": list(P.generators),
        "relators": [str(r) for r in P.relators],
        "text": str(P),
    }


def block_manifest(B: BlockDescriptor) -> dict:
    out = {
        "label": B.label,
        "boundary_genus": B.boundary_genus,
        "boundary_marking": [str(w) for w in B.boundary_marking],
        "meridian": str(B.meridian),
        "char": B.char.to_json(),
        "sections": B.sections,
        "symplectic": B.symplectic,
        "notes": list(B.notes),
        "recipe": B.recipe,
    }
    if B.complement is not None:
        out["generators"] = list(B.complement.generators)
        out["relators"] = [str(r) for r in B.complement.relators]
        out["presentation"] = str(B.complement)
    return out


def make_manifest(family: str, params: dict, obj, verdict=None, claim_status=None,
                  homeo=None, seconds: float | None = None) -> dict:
    doc = {
        "tool": "exotic4",
        "version": __version__,
        "family": family,
        "params": params,
        "timing": {"seconds": round(seconds, 3) if seconds is not None else None},
    }
    if isinstance(obj, BlockDescriptor):
        doc["block"] = block_manifest(obj)
        doc["label"] = obj.label
        doc["char"] = obj.char.to_json()
        doc["notes"] = list(obj.notes)
        if obj.complement is not None:
            doc["presentation"] = presentation_json(obj.complement)
    else:
        assert isinstance(obj, AssembledManifold)
        doc["label"] = obj.label
        doc["recipe"] = obj.recipe
        doc["claim"] = obj.claim
        doc["presentation"] = presentation_json(obj.presentation)
        doc["char"] = obj.char.to_json()
        doc["symplectic"] = obj.symplectic
        doc["identifications"] = [[str(x), str(y)] for x, y in obj.identifications]
        doc["notes"] = list(obj.notes)
    if verdict is not None:
        doc["verdict"] = verdict.to_json()
        doc["claim_status"] = claim_status
    doc["homeo"] = homeo.to_json() if homeo is not None else None
    return doc


def dumps(doc: dict) -> str:
    return json.dumps(doc, sort_keys=True, indent=2) + "\n"


def strip_timing(doc: dict) -> dict:
    return {k: v for k, v in doc.items() if k != "timing"}


def load_presentation(doc: dict) -> Presentation:
    return parse_presentation(doc["presentation"]["text"], doc.get("label", ""))


def rebuild(doc: dict):
    return build_from_recipe(doc["family"], doc["params"])


__all__ = [
    "BLOCKS",
    "FAMILIES",
    "block_manifest",
    "build_from_recipe",
    "dumps",
    "load_presentation",
    "make_manifest",
    "presentation_json",
    "rebuild",
    "strip_timing",
]
