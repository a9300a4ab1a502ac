"""Localization of a spherical system at a subset of the simple roots.

The localized system lives on the induced sub-root-system, keeps the
spherical roots supported inside the subset, and restricts each surviving
color's functional to the kept spherical roots.  Color ids are preserved,
so the color correspondence with the parent system is the identity on ids
and localization composes strictly.
"""
from __future__ import annotations

from typing import Iterable, List

from .rootlat import Component, RootSystem, RootSystemError, detect_subdiagram_type
from .sphsys import Color, SphericalSystem, TYPE_A


def _induced_root_system(rs: RootSystem, subset: frozenset) -> RootSystem:
    comps: List[Component] = []
    full = {frozenset(c.labels): c for c in rs.components}
    for comp in detect_subdiagram_type(rs, subset):
        original = full.get(frozenset(comp.labels))
        # Reuse the ambient component verbatim when the subset covers it,
        # so localizing at the full set is the identity.
        comps.append(original if original is not None else comp)
    return RootSystem(comps)


def localize(system: SphericalSystem, subset: Iterable[str]) -> SphericalSystem:
    """Localize at a subset of simple roots; raises on labels outside the system."""
    sub = frozenset(subset)
    for lab in sub:
        if lab not in system.rs:
            raise RootSystemError(f"label {lab!r} is not a simple root of the system")
    rs = _induced_root_system(system.rs, sub)
    kept = [i for i, sigma in enumerate(system.psi) if sigma.support <= sub]
    psi = [system.psi[i] for i in kept]
    colors = []
    for d in system.colors:
        moved = d.moved_by & sub
        if not moved:
            continue
        colors.append(Color(d.id, moved, d.phi.restrict(kept)))
    return SphericalSystem(rs, psi, colors)


def type_a_roots(system: SphericalSystem) -> frozenset:
    """Simple roots moved by no color and not related to a spherical root."""
    return frozenset(
        lab for lab in system.rs.simple_roots if system.type_map[lab] == TYPE_A
    )
