"""Exact combinatorics of spherical systems: root-system arithmetic,
axiom validation, localization, rigidity, criticality and orbit posets."""
from __future__ import annotations

from .catalog import CatalogEntry, catalog_entries, catalog_entry
from .localize import localize, type_a_roots
from .orbits import OrbitPoset, emit_graph, orbit_poset, poset_of_rank
from .rigidity import (
    CriticalityEntry,
    CriticalityReport,
    DistinguishedWitness,
    RigidityReport,
    critical_roots,
    critical_roots_oracle,
    distinguished_elements,
    is_rigid,
)
from .rootlat import (
    Component,
    Functional,
    LatticeVector,
    RootSystem,
    RootSystemError,
    build_root_system,
    cartan_integer,
    detect_subdiagram_type,
    positive_roots,
    restricted_coroot,
    support,
)
from .serialize import (
    DocumentError,
    document_to_system,
    dumps,
    loads,
    system_to_document,
)
from .sphsys import (
    Color,
    SphericalSystem,
    ValidationReport,
    Violation,
    assign_types,
    spherical_lattice_rank,
    validate_system,
)

__all__ = [
    "CatalogEntry",
    "Color",
    "Component",
    "CriticalityEntry",
    "CriticalityReport",
    "DistinguishedWitness",
    "DocumentError",
    "Functional",
    "LatticeVector",
    "OrbitPoset",
    "RigidityReport",
    "RootSystem",
    "RootSystemError",
    "SphericalSystem",
    "ValidationReport",
    "Violation",
    "assign_types",
    "build_root_system",
    "cartan_integer",
    "catalog_entries",
    "catalog_entry",
    "critical_roots",
    "critical_roots_oracle",
    "detect_subdiagram_type",
    "distinguished_elements",
    "document_to_system",
    "dumps",
    "emit_graph",
    "is_rigid",
    "loads",
    "localize",
    "orbit_poset",
    "poset_of_rank",
    "positive_roots",
    "restricted_coroot",
    "spherical_lattice_rank",
    "support",
    "system_to_document",
    "type_a_roots",
    "validate_system",
]

__version__ = "0.1.0"
