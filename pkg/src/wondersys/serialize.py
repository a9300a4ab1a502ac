"""JSON document format for spherical systems.

A document is a single object with `root_system`, `spherical_roots` and
`colors` fields.  Simple roots are labelled a1, a2, ... in the canonical
order of the components; functionals are listed in spherical-root order,
with halves written as "p/2" strings.  Parsing errors name the offending
field and label.
"""
from __future__ import annotations

import json
from fractions import Fraction
from typing import Any, Dict, List

from .rootlat import Functional, LatticeVector, RootSystemError, build_root_system
from .sphsys import Color, SphericalSystem

SERIES_SET = set("ABCDEFG")


class DocumentError(ValueError):
    """Malformed spherical-system document."""


def _encode_value(v: Fraction) -> Any:
    if v.denominator == 1:
        return int(v)
    if v.denominator == 2:
        return f"{v.numerator}/2"
    raise DocumentError(f"functional value {v} has denominator > 2")


def _decode_value(raw: Any, where: str) -> Fraction:
    if isinstance(raw, bool):
        raise DocumentError(f"{where}: expected integer or 'p/2' string, got bool")
    if isinstance(raw, int):
        return Fraction(raw)
    if isinstance(raw, str):
        try:
            v = Fraction(raw)
        except (ValueError, ZeroDivisionError):
            raise DocumentError(f"{where}: cannot parse rational {raw!r}") from None
        if v.denominator not in (1, 2):
            raise DocumentError(f"{where}: denominator of {raw!r} must divide 2")
        return v
    raise DocumentError(f"{where}: expected integer or 'p/2' string, got {type(raw).__name__}")


def system_to_document(system: SphericalSystem) -> Dict[str, Any]:
    """Serialize with labels renamed canonically to a1..aN in system order."""
    rename = {lab: f"a{i + 1}" for i, lab in enumerate(system.rs.simple_roots)}
    doc: Dict[str, Any] = {
        "root_system": {
            "components": [
                {"series": c.series, "rank": c.rank} for c in system.rs.components
            ]
        },
        "spherical_roots": [
            {"coeffs": {rename[lab]: v for lab, v in sigma.items()}}
            for sigma in system.psi
        ],
        "colors": [
            {
                "id": d.id,
                "moved_by": sorted(
                    (rename[lab] for lab in d.moved_by),
                    key=lambda s: int(s[1:]),
                ),
                "phi": [_encode_value(v) for v in d.phi.values],
            }
            for d in system.colors
        ],
    }
    return doc


def document_to_system(doc: Any) -> SphericalSystem:
    if not isinstance(doc, dict):
        raise DocumentError("document must be a JSON object")
    try:
        components = doc["root_system"]["components"]
    except (KeyError, TypeError):
        raise DocumentError("missing root_system.components") from None
    if not isinstance(components, list):
        raise DocumentError("root_system.components must be a list")
    spec = []
    for k, comp in enumerate(components):
        if not isinstance(comp, dict) or "series" not in comp or "rank" not in comp:
            raise DocumentError(f"root_system.components[{k}]: need series and rank")
        series, rank = comp["series"], comp["rank"]
        if series not in SERIES_SET or not isinstance(rank, int):
            raise DocumentError(
                f"root_system.components[{k}]: invalid series/rank {series!r}/{rank!r}"
            )
        spec.append((series, rank))
    try:
        rs = build_root_system(spec)
    except RootSystemError as exc:
        raise DocumentError(f"root_system: {exc}") from None

    psi: List[LatticeVector] = []
    raw_roots = doc.get("spherical_roots", [])
    if not isinstance(raw_roots, list):
        raise DocumentError("spherical_roots must be a list")
    for k, raw in enumerate(raw_roots):
        if not isinstance(raw, dict) or not isinstance(raw.get("coeffs"), dict):
            raise DocumentError(f"spherical_roots[{k}]: need a coeffs object")
        coeffs = {}
        for lab, v in raw["coeffs"].items():
            if lab not in rs:
                raise DocumentError(f"spherical_roots[{k}]: unknown label {lab!r}")
            if not isinstance(v, int) or isinstance(v, bool):
                raise DocumentError(f"spherical_roots[{k}]: coefficient of {lab!r} not an integer")
            coeffs[lab] = v
        psi.append(LatticeVector(coeffs))

    colors: List[Color] = []
    raw_colors = doc.get("colors", [])
    if not isinstance(raw_colors, list):
        raise DocumentError("colors must be a list")
    for k, raw in enumerate(raw_colors):
        if not isinstance(raw, dict):
            raise DocumentError(f"colors[{k}]: must be an object")
        cid = raw.get("id")
        if not isinstance(cid, str) or not cid:
            raise DocumentError(f"colors[{k}]: missing id")
        moved = raw.get("moved_by")
        if not isinstance(moved, list) or not moved:
            raise DocumentError(f"colors[{k}] ({cid}): moved_by must be a nonempty list")
        for lab in moved:
            if lab not in rs:
                raise DocumentError(f"colors[{k}] ({cid}): unknown label {lab!r}")
        phi_raw = raw.get("phi")
        if not isinstance(phi_raw, list):
            raise DocumentError(f"colors[{k}] ({cid}): phi must be a list")
        if len(phi_raw) != len(psi):
            raise DocumentError(
                f"colors[{k}] ({cid}): phi has {len(phi_raw)} values for "
                f"{len(psi)} spherical roots"
            )
        phi = Functional(
            _decode_value(v, f"colors[{k}] ({cid}).phi[{j}]")
            for j, v in enumerate(phi_raw)
        )
        colors.append(Color(cid, frozenset(moved), phi))

    return SphericalSystem(rs, psi, colors)


def dumps(system: SphericalSystem) -> str:
    return json.dumps(system_to_document(system), indent=2, sort_keys=True) + "\n"


def loads(text: str) -> SphericalSystem:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DocumentError(f"invalid JSON: line {exc.lineno}: {exc.msg}") from None
    return document_to_system(doc)
