"""Spherical systems and their axiom validation.

A spherical system is a root system together with an ordered list of
spherical roots (nonnegative lattice vectors forming a base of a root
system in their span) and a list of colors, each carrying the set of
simple roots moving it and a rational functional on the spherical roots.
Validation checks the base property and the three color axioms; every
violation is collected with a witness, nothing is thrown.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

from .rootlat import (
    Functional,
    LatticeVector,
    RootSystem,
    cartan_integer,
    restricted_coroot,
)

TYPE_A, TYPE_B, TYPE_C, TYPE_D = "a", "b", "c", "d"


@dataclass(frozen=True)
class Color:
    """A B-stable divisor surrogate: its id, the simple roots moving it,
    and its functional on the spherical roots."""

    id: str
    moved_by: frozenset
    phi: Functional

    def __post_init__(self):
        object.__setattr__(self, "moved_by", frozenset(self.moved_by))


@dataclass(frozen=True)
class Violation:
    axiom: str  # BASE, P1, P2 or P3
    message: str

    def __str__(self) -> str:
        return f"{self.axiom}: {self.message}"


@dataclass(frozen=True)
class ValidationReport:
    violations: Tuple[Violation, ...]

    @property
    def ok(self) -> bool:
        return not self.violations

    def axiom_ids(self) -> frozenset:
        return frozenset(v.axiom for v in self.violations)


class SphericalSystem:
    """Root system + spherical roots + colors, immutable."""

    def __init__(
        self,
        rs: RootSystem,
        psi: Sequence[LatticeVector],
        colors: Sequence[Color],
    ):
        self.rs = rs
        self.psi: Tuple[LatticeVector, ...] = tuple(psi)
        self.colors: Tuple[Color, ...] = tuple(colors)
        self._psi_index = {sigma: i for i, sigma in enumerate(self.psi)}
        self._type_map: Optional[Dict[str, str]] = None

    def psi_index(self, sigma: LatticeVector) -> Optional[int]:
        return self._psi_index.get(sigma)

    def colors_moved_by(self, alpha: str) -> Tuple[Color, ...]:
        return tuple(d for d in self.colors if alpha in d.moved_by)

    @property
    def type_map(self) -> Dict[str, str]:
        if self._type_map is None:
            self._type_map = assign_types(self)
        return self._type_map

    def coroot_on_psi(self, alpha: str) -> Functional:
        return restricted_coroot(self.rs, alpha, self.psi)

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, SphericalSystem)
            and self.rs == other.rs
            and self.psi == other.psi
            and self.colors == other.colors
        )

    def __hash__(self) -> int:
        return hash((self.rs, self.psi, self.colors))

    def __repr__(self) -> str:
        return (
            f"SphericalSystem({self.rs!r}, psi=[{', '.join(map(str, self.psi))}], "
            f"colors={[c.id for c in self.colors]})"
        )


def assign_types(system: SphericalSystem) -> Dict[str, str]:
    """Classify each simple root as type a, b, c or d.

    Membership in the spherical roots wins over color counts: a root equal
    to (half of) a spherical root is typed b (c) even when its colors are
    missing; validation flags the cardinality separately.
    """
    psi_set = set(system.psi)
    out: Dict[str, str] = {}
    for lab in system.rs.simple_roots:
        alpha = system.rs.simple_root(lab)
        if alpha in psi_set:
            out[lab] = TYPE_B
        elif 2 * alpha in psi_set:
            out[lab] = TYPE_C
        elif system.colors_moved_by(lab):
            out[lab] = TYPE_D
        else:
            out[lab] = TYPE_A
    return out


def spherical_lattice_rank(system: SphericalSystem) -> int:
    """Rank of the lattice generated by the spherical roots."""
    return len(system.psi)


def _check_base(system: SphericalSystem, out: List[Violation]) -> None:
    seen = set()
    for sigma in system.psi:
        if sigma in seen:
            out.append(Violation("BASE", f"duplicate spherical root {sigma}"))
        seen.add(sigma)
        if sigma.is_zero():
            out.append(Violation("BASE", "spherical root with empty support"))
            continue
        for lab, coeff in sigma.items():
            if coeff < 0:
                out.append(
                    Violation("BASE", f"negative coefficient of {lab} in {sigma}")
                )
    for i, sigma in enumerate(system.psi):
        if sigma.is_zero() or system.rs.form(sigma, sigma) == 0:
            continue
        for j, tau in enumerate(system.psi):
            if i == j or tau == sigma:
                continue
            num = 2 * system.rs.form(sigma, tau) / system.rs.form(sigma, sigma)
            if num.denominator != 1 or num > 0:
                out.append(
                    Violation(
                        "BASE",
                        f"Cartan number of ({sigma}, {tau}) is {num}, "
                        "not a nonpositive integer",
                    )
                )


def _check_p1(system: SphericalSystem, out: List[Violation]) -> None:
    for lab in system.rs.simple_roots:
        kind = system.type_map[lab]
        moved = system.colors_moved_by(lab)
        coroot = system.coroot_on_psi(lab)
        if kind == TYPE_A:
            if moved:
                out.append(
                    Violation(
                        "P1",
                        f"{lab} is type a but moved colors "
                        f"{[d.id for d in moved]} exist",
                    )
                )
        elif kind == TYPE_B:
            if len(moved) != 2:
                out.append(
                    Violation("P1", f"type-b root {lab} has {len(moved)} colors, expected 2")
                )
                continue
            dplus, dminus = moved
            if dplus.phi + dminus.phi != coroot:
                out.append(
                    Violation(
                        "P1",
                        f"type-b root {lab}: phi({dplus.id}) + phi({dminus.id}) = "
                        f"{dplus.phi + dminus.phi} differs from coroot {coroot}",
                    )
                )
            idx = system.psi_index(system.rs.simple_root(lab))
            for d in moved:
                if d.phi[idx] != 1:
                    out.append(
                        Violation(
                            "P1",
                            f"type-b root {lab}: <phi({d.id}), {lab}> = {d.phi[idx]} != 1",
                        )
                    )
        elif kind == TYPE_C:
            if len(moved) != 1:
                out.append(
                    Violation("P1", f"type-c root {lab} has {len(moved)} colors, expected 1")
                )
            for d in moved:
                if d.phi != coroot.scale(Fraction(1, 2)):
                    out.append(
                        Violation(
                            "P1",
                            f"type-c root {lab}: phi({d.id}) = {d.phi} differs from "
                            f"half coroot {coroot.scale(Fraction(1, 2))}",
                        )
                    )
        else:  # TYPE_D
            if len(moved) != 1:
                out.append(
                    Violation("P1", f"type-d root {lab} has {len(moved)} colors, expected 1")
                )
            for d in moved:
                if d.phi != coroot:
                    out.append(
                        Violation(
                            "P1",
                            f"type-d root {lab}: phi({d.id}) = {d.phi} differs from "
                            f"coroot {coroot}",
                        )
                    )


def _check_p2(system: SphericalSystem, out: List[Violation]) -> None:
    for lab in system.rs.simple_roots:
        beta = system.rs.simple_root(lab)
        if system.psi_index(beta) is None:
            continue
        for d in system.colors_moved_by(lab):
            for j, sigma in enumerate(system.psi):
                value = d.phi[j]
                sigma_label = system.rs.as_simple_label(sigma)
                simple_and_moved = sigma_label is not None and sigma_label in d.moved_by
                if value > 1:
                    out.append(
                        Violation(
                            "P2",
                            f"<phi({d.id}), {sigma}> = {value} > 1 (color of {lab})",
                        )
                    )
                elif value == 1 and not simple_and_moved:
                    out.append(
                        Violation(
                            "P2",
                            f"<phi({d.id}), {sigma}> = 1 but {sigma} is not a simple "
                            f"root moving {d.id}",
                        )
                    )
                elif value != 1 and simple_and_moved:
                    out.append(
                        Violation(
                            "P2",
                            f"<phi({d.id}), {sigma}> = {value} != 1 although {sigma} "
                            f"is a simple root moving {d.id}",
                        )
                    )


def _sum_in_psi(system: SphericalSystem, alpha: LatticeVector, beta: LatticeVector) -> bool:
    total = alpha + beta
    if system.psi_index(total) is not None:
        return True
    half = total.halved()
    return half is not None and system.psi_index(half) is not None


def _check_p3(system: SphericalSystem, out: List[Violation]) -> None:
    labels = system.rs.simple_roots
    for i, la in enumerate(labels):
        for lb in labels[i + 1 :]:
            da = set(system.colors_moved_by(la))
            db = set(system.colors_moved_by(lb))
            shared = da & db
            ta, tb = system.type_map[la], system.type_map[lb]
            if shared:
                if ta == TYPE_B and tb == TYPE_B:
                    if len(shared) != 1:
                        out.append(
                            Violation(
                                "P3",
                                f"type-b roots {la}, {lb} share {len(shared)} colors, "
                                "expected exactly 1",
                            )
                        )
                elif ta == TYPE_D and tb == TYPE_D:
                    if cartan_integer(system.rs, la, system.rs.simple_root(lb)) != 0:
                        out.append(
                            Violation("P3", f"shared-color roots {la}, {lb} not orthogonal")
                        )
                    if system.coroot_on_psi(la) != system.coroot_on_psi(lb):
                        out.append(
                            Violation(
                                "P3",
                                f"shared-color roots {la}, {lb} have different "
                                "restricted coroots",
                            )
                        )
                    if not _sum_in_psi(
                        system, system.rs.simple_root(la), system.rs.simple_root(lb)
                    ):
                        out.append(
                            Violation(
                                "P3",
                                f"{la}+{lb} is neither a spherical root nor twice one",
                            )
                        )
                else:
                    out.append(
                        Violation(
                            "P3",
                            f"roots {la} (type {ta}) and {lb} (type {tb}) share a color",
                        )
                    )
            if ta == TYPE_D and tb == TYPE_D:
                cond = (
                    cartan_integer(system.rs, la, system.rs.simple_root(lb)) == 0
                    and system.coroot_on_psi(la) == system.coroot_on_psi(lb)
                    and _sum_in_psi(
                        system, system.rs.simple_root(la), system.rs.simple_root(lb)
                    )
                )
                if cond and da != db:
                    out.append(
                        Violation(
                            "P3",
                            f"type-d roots {la}, {lb} satisfy the sharing conditions "
                            "but have different color sets",
                        )
                    )


def validate_system(system: SphericalSystem) -> ValidationReport:
    """Check the base property and the three color axioms, exhaustively."""
    out: List[Violation] = []
    _check_base(system, out)
    for d in system.colors:
        if len(d.phi) != len(system.psi):
            out.append(
                Violation(
                    "P1",
                    f"color {d.id}: functional has {len(d.phi)} values for "
                    f"{len(system.psi)} spherical roots",
                )
            )
        if not d.moved_by:
            out.append(Violation("P1", f"color {d.id} is moved by no simple root"))
    if any(len(d.phi) != len(system.psi) for d in system.colors):
        return ValidationReport(tuple(out))
    _check_p1(system, out)
    _check_p2(system, out)
    _check_p3(system, out)
    return ValidationReport(tuple(out))
