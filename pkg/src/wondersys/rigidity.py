"""Distinguished spherical roots, rigidity, and criticality.

A spherical root is distinguished if it is a simple root whose two colors
carry equal functionals, or the full sum of a B_k chain whose tail is of
type a, or the pattern long + twice-short inside a G_2 pair.  A system is
rigid when nothing is distinguished.  A non-distinguished root is critical
when it becomes distinguished in every proper localization containing the
type-a roots and its support.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import List, Optional, Tuple

from .localize import localize, type_a_roots
from .rootlat import LatticeVector, detect_subdiagram_type
from .sphsys import SphericalSystem, TYPE_A


@dataclass(frozen=True)
class DistinguishedWitness:
    root: LatticeVector
    condition: int  # 1: equal color pair, 2: B_k chain sum, 3: G_2 pattern
    witness: str


@dataclass(frozen=True)
class RigidityReport:
    distinguished: Tuple[DistinguishedWitness, ...]

    @property
    def rigid(self) -> bool:
        return not self.distinguished

    def roots(self) -> frozenset:
        return frozenset(w.root for w in self.distinguished)


@dataclass(frozen=True)
class CriticalityEntry:
    root: LatticeVector
    distinguished: bool
    critical: bool
    vacuous: bool = False
    failing_subset: Optional[frozenset] = None


@dataclass(frozen=True)
class CriticalityReport:
    entries: Tuple[CriticalityEntry, ...]

    def entry(self, sigma: LatticeVector) -> CriticalityEntry:
        for e in self.entries:
            if e.root == sigma:
                return e
        raise KeyError(str(sigma))

    def critical_roots(self) -> frozenset:
        return frozenset(e.root for e in self.entries if e.critical)


def _distinguished_witness(
    system: SphericalSystem, sigma: LatticeVector
) -> Optional[DistinguishedWitness]:
    # Condition 1: a simple spherical root with two equal color functionals.
    label = system.rs.as_simple_label(sigma)
    if label is not None:
        moved = system.colors_moved_by(label)
        for d1, d2 in itertools.combinations(moved, 2):
            if d1.phi == d2.phi:
                return DistinguishedWitness(
                    sigma, 1, f"colors {d1.id}, {d2.id} of {label} have equal phi"
                )
    supp = sorted(sigma.support, key=system.rs.index)
    if len(supp) < 2:
        return None
    comps = detect_subdiagram_type(system.rs, supp)
    if len(comps) != 1:
        return None
    comp = comps[0]
    # Condition 2: sigma is the full chain sum of a B_k sub-diagram whose
    # roots after the first are all of type a.
    if comp.series == "B" and all(sigma.coeff(lab) == 1 for lab in comp.labels):
        tail = comp.labels[1:]
        if all(system.type_map[lab] == TYPE_A for lab in tail):
            return DistinguishedWitness(
                sigma,
                2,
                f"B{comp.rank} chain {'+'.join(comp.labels)} with type-a tail",
            )
    # Condition 3: long + twice the short root of a G_2 sub-diagram.
    if comp.series == "G":
        long_root, short_root = comp.labels
        if sigma.coeff(long_root) == 1 and sigma.coeff(short_root) == 2:
            return DistinguishedWitness(
                sigma, 3, f"G2 pair ({long_root} long, {short_root} short)"
            )
    return None


def distinguished_elements(system: SphericalSystem) -> RigidityReport:
    found = []
    for sigma in system.psi:
        w = _distinguished_witness(system, sigma)
        if w is not None:
            found.append(w)
    return RigidityReport(tuple(found))


def is_rigid(system: SphericalSystem) -> bool:
    return distinguished_elements(system).rigid


def _admissible_subsets(system: SphericalSystem, base: frozenset, coatoms_only: bool):
    """Proper subsets of the simple roots containing `base`, largest first."""
    all_labels = tuple(system.rs.simple_roots)
    free = [lab for lab in all_labels if lab not in base]
    max_extra = len(free) - 1  # proper subsets only
    if coatoms_only:
        sizes = [max_extra] if max_extra >= 0 else []
    else:
        sizes = range(max_extra, -1, -1)
    for size in sizes:
        for extra in itertools.combinations(free, size):
            yield base | frozenset(extra)


def _criticality_entry(
    system: SphericalSystem, sigma: LatticeVector, coatoms_only: bool
) -> CriticalityEntry:
    if _distinguished_witness(system, sigma) is not None:
        return CriticalityEntry(sigma, distinguished=True, critical=False)
    base = type_a_roots(system) | sigma.support
    if base >= frozenset(system.rs.simple_roots):
        return CriticalityEntry(sigma, distinguished=False, critical=True, vacuous=True)
    for subset in _admissible_subsets(system, base, coatoms_only):
        sub = localize(system, subset)
        if sigma not in distinguished_elements(sub).roots():
            return CriticalityEntry(
                sigma, distinguished=False, critical=False, failing_subset=subset
            )
    return CriticalityEntry(sigma, distinguished=False, critical=True)


def critical_roots_oracle(system: SphericalSystem) -> CriticalityReport:
    """Brute-force criticality: quantify over every admissible proper subset."""
    return CriticalityReport(
        tuple(_criticality_entry(system, sigma, coatoms_only=False) for sigma in system.psi)
    )


def critical_roots(system: SphericalSystem) -> CriticalityReport:
    """Criticality via the co-atom reduction.

    By monotonicity of distinguishedness under localization it suffices to
    test the maximal proper subsets; agreement with the oracle is enforced
    by the test suite.
    """
    return CriticalityReport(
        tuple(_criticality_entry(system, sigma, coatoms_only=True) for sigma in system.psi)
    )
