"""Single-field mutations of catalog systems with the axiom each must trip.

Color drops are only generated for colors of type-b or type-c roots:
removing the single color of a type-d root legitimately degrades it to
type a, which stays valid.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Iterator, Tuple

from wondersys import Color, Functional, LatticeVector, SphericalSystem
from wondersys.catalog import catalog_entries


def _with_phi(system: SphericalSystem, ci: int, j: int, delta: int) -> SphericalSystem:
    colors = list(system.colors)
    old = colors[ci]
    values = list(old.phi.values)
    values[j] += Fraction(delta)
    colors[ci] = Color(old.id, old.moved_by, Functional(values))
    return SphericalSystem(system.rs, system.psi, colors)


def _without_color(system: SphericalSystem, ci: int) -> SphericalSystem:
    colors = [d for k, d in enumerate(system.colors) if k != ci]
    return SphericalSystem(system.rs, system.psi, colors)


def _with_negated_coeff(system: SphericalSystem, si: int, lab: str) -> SphericalSystem:
    psi = list(system.psi)
    sigma = psi[si]
    psi[si] = LatticeVector(
        {l: (-v if l == lab else v) for l, v in sigma.items()}
    )
    return SphericalSystem(system.rs, psi, system.colors)


def mutation_cases() -> Iterator[Tuple[str, SphericalSystem, str]]:
    """Yield (description, mutated system, expected axiom id)."""
    for entry in catalog_entries():
        system = entry.system
        for ci, color in enumerate(system.colors):
            for j in range(len(system.psi)):
                for delta in (1, -1):
                    yield (
                        f"{entry.name}: phi({color.id})[{j}] {delta:+d}",
                        _with_phi(system, ci, j, delta),
                        "P1",
                    )
            if any(system.type_map[lab] in ("b", "c") for lab in color.moved_by):
                yield (
                    f"{entry.name}: drop color {color.id}",
                    _without_color(system, ci),
                    "P1",
                )
        for si, sigma in enumerate(system.psi):
            for lab in sorted(sigma.support):
                yield (
                    f"{entry.name}: negate coefficient of {lab} in psi[{si}]",
                    _with_negated_coeff(system, si, lab),
                    "BASE",
                )
