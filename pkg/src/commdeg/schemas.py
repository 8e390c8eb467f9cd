"""JSON documents for towers, actions, and Lie certificate sets.

Group specs themselves are documented in specs.py. The remaining schemas:

Tower:        {"name": "...", "levels": [groupspec, ...],
               "bonds": [[image array], ...]}       # bonds[k]: level k+2 -> k+1
Action:       {"group": groupspec, "set_size": X, "act": [[...], ...]}
Certificates: {"name": "...", "dim": d, "component_count": c,
               "certificates": [{"label": "...", "component": 0,
                                 "order": 2 | "unknown",
                                 "adjoint": [["1.0", ...], ...]}, ...]}

Adjoint entries are decimal strings so documents stay exact and
language-neutral.
"""
from __future__ import annotations

import json

from commdeg.actions import FiniteAction
from commdeg.groups import Homomorphism
from commdeg.lie import LieElement, LiePreset
from commdeg.specs import build_group
from commdeg.towers import Tower


def _load(path) -> dict:
    with open(path, "r", encoding="utf-8") as fh:
        doc = json.load(fh)
    if not isinstance(doc, dict):
        raise ValueError(f"{path}: expected a JSON object")
    return doc


def tower_from_doc(doc: dict, order_cap: int | None = None) -> Tower:
    kwargs = {} if order_cap is None else {"order_cap": order_cap}
    levels = tuple(build_group(spec, **kwargs) for spec in doc["levels"])
    bonds = tuple(
        Homomorphism(levels[k + 1], levels[k], image)
        for k, image in enumerate(doc["bonds"])
    )
    return Tower(levels, bonds, name=doc.get("name", "tower"))


def load_tower(path, order_cap: int | None = None) -> Tower:
    return tower_from_doc(_load(path), order_cap)


def action_from_doc(doc: dict, order_cap: int | None = None) -> FiniteAction:
    kwargs = {} if order_cap is None else {"order_cap": order_cap}
    group = build_group(doc["group"], **kwargs)
    act = doc["act"]
    if "set_size" in doc and doc["set_size"] != len(act[0]):
        raise ValueError("set_size does not match the action table width")
    return FiniteAction(group, act)


def load_action(path, order_cap: int | None = None) -> FiniteAction:
    return action_from_doc(_load(path), order_cap)


def certificates_from_doc(doc: dict) -> LiePreset:
    certs = []
    for entry in doc["certificates"]:
        order = entry.get("order", "unknown")
        declared = None if order == "unknown" else int(order)
        adjoint = [[float(v) for v in row] for row in entry["adjoint"]]
        certs.append(
            LieElement(
                adjoint,
                declared_order=declared,
                label=entry.get("label", ""),
                component=int(entry.get("component", 0)),
            )
        )
    return LiePreset(
        name=doc.get("name", "custom"),
        dim=int(doc["dim"]),
        certificates=tuple(certs),
        component_count=int(doc.get("component_count", 1)),
    )


def load_certificates(path) -> LiePreset:
    return certificates_from_doc(_load(path))
