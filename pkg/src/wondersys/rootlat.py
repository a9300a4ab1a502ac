"""Exact root-system arithmetic over the root lattice.

Semisimple Dynkin data with integer Cartan matrices and a rational
Weyl-invariant form, normalized so that the short roots of every simple
component have squared length 2.  All arithmetic is exact; no floats.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator, Mapping, Optional, Sequence, Tuple

SERIES = ("A", "B", "C", "D", "E", "F", "G")


class RootSystemError(ValueError):
    """Invalid series/rank data or unknown simple-root label."""


class LatticeVector:
    """Integer vector over simple-root labels, finitely supported.

    Zero coefficients are dropped on construction; equality and hashing
    are coefficient-wise.
    """

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Mapping[str, int] | Iterable[Tuple[str, int]] = ()):
        items = coeffs.items() if isinstance(coeffs, Mapping) else coeffs
        self._coeffs = {k: int(v) for k, v in items if int(v) != 0}

    def coeff(self, label: str) -> int:
        return self._coeffs.get(label, 0)

    @property
    def support(self) -> frozenset:
        return frozenset(self._coeffs)

    def items(self) -> Iterator[Tuple[str, int]]:
        return iter(sorted(self._coeffs.items()))

    def is_zero(self) -> bool:
        return not self._coeffs

    def __add__(self, other: "LatticeVector") -> "LatticeVector":
        merged = dict(self._coeffs)
        for k, v in other._coeffs.items():
            merged[k] = merged.get(k, 0) + v
        return LatticeVector(merged)

    def __sub__(self, other: "LatticeVector") -> "LatticeVector":
        return self + (-other)

    def __neg__(self) -> "LatticeVector":
        return LatticeVector({k: -v for k, v in self._coeffs.items()})

    def __mul__(self, n: int) -> "LatticeVector":
        return LatticeVector({k: n * v for k, v in self._coeffs.items()})

    __rmul__ = __mul__

    def halved(self) -> Optional["LatticeVector"]:
        """Return self/2 if it stays integral, else None."""
        if any(v % 2 for v in self._coeffs.values()):
            return None
        return LatticeVector({k: v // 2 for k, v in self._coeffs.items()})

    def __eq__(self, other: object) -> bool:
        return isinstance(other, LatticeVector) and self._coeffs == other._coeffs

    def __hash__(self) -> int:
        return hash(frozenset(self._coeffs.items()))

    def __str__(self) -> str:
        if not self._coeffs:
            return "0"
        parts = []
        for k, v in sorted(self._coeffs.items(), key=_label_key):
            if v == 1:
                parts.append(k)
            elif v == -1:
                parts.append(f"-{k}")
            else:
                parts.append(f"{v}*{k}")
        return "+".join(parts).replace("+-", "-")

    def __repr__(self) -> str:
        return f"LatticeVector({dict(sorted(self._coeffs.items()))})"


def _label_key(item) -> Tuple[int, str]:
    label = item[0] if isinstance(item, tuple) else item
    digits = "".join(c for c in label if c.isdigit())
    return (int(digits) if digits else 0, label)


class Functional:
    """Rational linear functional given by its values on an ordered base.

    Used for color functionals and restricted coroots: the values are
    indexed by the position of each spherical root in the ambient system.
    """

    __slots__ = ("values",)

    def __init__(self, values: Iterable[Fraction | int]):
        self.values: Tuple[Fraction, ...] = tuple(Fraction(v) for v in values)

    def __add__(self, other: "Functional") -> "Functional":
        if len(self.values) != len(other.values):
            raise ValueError("functional length mismatch")
        return Functional(a + b for a, b in zip(self.values, other.values))

    def scale(self, c: Fraction | int) -> "Functional":
        c = Fraction(c)
        return Functional(c * v for v in self.values)

    def restrict(self, indices: Sequence[int]) -> "Functional":
        return Functional(self.values[i] for i in indices)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Functional) and self.values == other.values

    def __hash__(self) -> int:
        return hash(self.values)

    def __len__(self) -> int:
        return len(self.values)

    def __getitem__(self, i: int) -> Fraction:
        return self.values[i]

    def __str__(self) -> str:
        return "(" + ", ".join(str(v) for v in self.values) + ")"

    __repr__ = __str__


def _chain_cartan(n: int) -> list:
    cartan = [[0] * n for _ in range(n)]
    for i in range(n):
        cartan[i][i] = 2
    for i in range(n - 1):
        cartan[i][i + 1] = cartan[i + 1][i] = -1
    return cartan


def component_cartan(series: str, rank: int) -> Tuple[list, list]:
    """Standard Cartan matrix and squared lengths for one simple component.

    Ordering follows the usual Bourbaki numbering; in B_k the short simple
    root is last, in G_2 it is the second one.  Short roots have squared
    length 2.
    """
    n = rank
    if series == "A" and n >= 1:
        return _chain_cartan(n), [2] * n
    if series == "B" and n >= 2:
        cartan = _chain_cartan(n)
        cartan[n - 1][n - 2] = -2
        return cartan, [4] * (n - 1) + [2]
    if series == "C" and n >= 2:
        cartan = _chain_cartan(n)
        cartan[n - 2][n - 1] = -2
        return cartan, [2] * (n - 1) + [4]
    if series == "D" and n >= 3:
        cartan = [[0] * n for _ in range(n)]
        for i in range(n):
            cartan[i][i] = 2
        for i in range(n - 3):
            cartan[i][i + 1] = cartan[i + 1][i] = -1
        cartan[n - 3][n - 2] = cartan[n - 2][n - 3] = -1
        cartan[n - 3][n - 1] = cartan[n - 1][n - 3] = -1
        return cartan, [2] * n
    if series == "E" and n in (6, 7, 8):
        cartan = [[0] * n for _ in range(n)]
        for i in range(n):
            cartan[i][i] = 2
        edges = [(0, 2), (1, 3), (2, 3), (3, 4), (4, 5)]
        if n >= 7:
            edges.append((5, 6))
        if n == 8:
            edges.append((6, 7))
        for i, j in edges:
            cartan[i][j] = cartan[j][i] = -1
        return cartan, [2] * n
    if series == "F" and n == 4:
        cartan = _chain_cartan(4)
        cartan[2][1] = -2
        return cartan, [4, 4, 2, 2]
    if series == "G" and n == 2:
        return [[2, -1], [-3, 2]], [6, 2]
    raise RootSystemError(f"invalid component {series}{rank}")


@dataclass(frozen=True)
class Component:
    series: str
    rank: int
    labels: Tuple[str, ...]


class RootSystem:
    """Semisimple root system with exact Cartan and form data.

    Immutable after construction; safe for concurrent use.
    """

    def __init__(self, components: Sequence[Component]):
        self.components: Tuple[Component, ...] = tuple(components)
        self.simple_roots: Tuple[str, ...] = tuple(
            lab for comp in self.components for lab in comp.labels
        )
        if len(set(self.simple_roots)) != len(self.simple_roots):
            raise RootSystemError("duplicate simple-root labels")
        self._index = {lab: i for i, lab in enumerate(self.simple_roots)}
        n = len(self.simple_roots)
        cartan = [[0] * n for _ in range(n)]
        lengths: list = [Fraction(0)] * n
        offset = 0
        for comp in self.components:
            cmat, lens = component_cartan(comp.series, comp.rank)
            if len(comp.labels) != comp.rank:
                raise RootSystemError("component label count mismatch")
            for i in range(comp.rank):
                lengths[offset + i] = Fraction(lens[i])
                for j in range(comp.rank):
                    cartan[offset + i][offset + j] = cmat[i][j]
            offset += comp.rank
        self._cartan = tuple(tuple(row) for row in cartan)
        self._lengths = tuple(lengths)
        # Gram matrix of the invariant form on simple roots.
        gram = [
            [cartan[i][j] * lengths[i] / 2 for j in range(n)] for i in range(n)
        ]
        for i in range(n):
            for j in range(n):
                assert gram[i][j] == gram[j][i]
        self._gram = tuple(tuple(row) for row in gram)

    @property
    def rank(self) -> int:
        return len(self.simple_roots)

    def index(self, label: str) -> int:
        try:
            return self._index[label]
        except KeyError:
            raise RootSystemError(f"unknown simple-root label {label!r}") from None

    def __contains__(self, label: str) -> bool:
        return label in self._index

    def cartan_entry(self, a: str, b: str) -> int:
        return self._cartan[self.index(a)][self.index(b)]

    def simple_root(self, label: str) -> LatticeVector:
        self.index(label)
        return LatticeVector({label: 1})

    def as_simple_label(self, v: LatticeVector) -> Optional[str]:
        """Label of v if v is a simple root of this system, else None."""
        items = list(v.items())
        if len(items) == 1 and items[0][1] == 1 and items[0][0] in self._index:
            return items[0][0]
        return None

    def form(self, v: LatticeVector, w: LatticeVector) -> Fraction:
        total = Fraction(0)
        for a, x in v.items():
            i = self.index(a)
            for b, y in w.items():
                total += x * y * self._gram[i][self.index(b)]
        return total

    def __eq__(self, other: object) -> bool:
        return isinstance(other, RootSystem) and self.components == other.components

    def __hash__(self) -> int:
        return hash(self.components)

    def __repr__(self) -> str:
        inner = ", ".join(f"{c.series}{c.rank}" for c in self.components)
        return f"RootSystem({inner})"


def build_root_system(spec: Sequence[Tuple[str, int]]) -> RootSystem:
    """Build a root system from (series, rank) pairs with labels a1, a2, ...."""
    comps = []
    next_i = 1
    for series, rank in spec:
        component_cartan(series, rank)  # raises on invalid data
        labels = tuple(f"a{next_i + k}" for k in range(rank))
        comps.append(Component(series, rank, labels))
        next_i += rank
    return RootSystem(comps)


def cartan_integer(rs: RootSystem, alpha: str, lam: LatticeVector) -> int:
    """The pairing of the coroot of alpha with lam, an exact integer."""
    i = rs.index(alpha)
    return sum(v * rs._cartan[i][rs.index(b)] for b, v in lam.items())


def support(lam: LatticeVector) -> frozenset:
    """Simple-root labels with nonzero coefficient in lam."""
    return lam.support


def restricted_coroot(rs: RootSystem, alpha: str, psi: Sequence[LatticeVector]) -> Functional:
    """The coroot of alpha as a functional on the span of psi."""
    return Functional(cartan_integer(rs, alpha, sigma) for sigma in psi)


def _candidate_series(size: int) -> Iterator[str]:
    yield "A"
    if size >= 2:
        yield "B"
        yield "C"
    if size >= 3:
        yield "D"
    if size in (6, 7, 8):
        yield "E"
    if size == 4:
        yield "F"
    if size == 2:
        yield "G"


def detect_subdiagram_type(rs: RootSystem, sigma: Iterable[str]) -> list:
    """Decompose the induced sub-diagram on a label set into typed components.

    Returns a list of Component, each with its labels in the canonical
    ordering of its series (short root last for B, second for G).
    Orderings and tie-breaks depend only on the labels and their Cartan
    entries, never on the ambient indexing, so repeated localization is
    stable.  Brute-force permutation matching; inputs are tiny.
    """
    labels = sorted(set(sigma), key=_label_key)
    for lab in labels:
        rs.index(lab)
    # Connected components under Cartan adjacency.
    remaining = set(labels)
    groups = []
    while remaining:
        seed = min(remaining, key=_label_key)
        stack, comp = [seed], {seed}
        remaining.discard(seed)
        while stack:
            cur = stack.pop()
            for other in list(remaining):
                if rs.cartan_entry(cur, other) != 0:
                    comp.add(other)
                    remaining.discard(other)
                    stack.append(other)
        groups.append(sorted(comp, key=_label_key))
    out = []
    for members in groups:
        out.append(_identify_component(rs, members))
    return out


def _identify_component(rs: RootSystem, members: Sequence[str]) -> Component:
    n = len(members)
    for series in _candidate_series(n):
        target, _ = component_cartan(series, n)
        for perm in itertools.permutations(members):
            if all(
                rs.cartan_entry(perm[i], perm[j]) == target[i][j]
                for i in range(n)
                for j in range(n)
            ):
                return Component(series, n, tuple(perm))
    raise RootSystemError(f"unclassifiable sub-diagram on {members}")


def positive_roots(rs: RootSystem) -> frozenset:
    """All positive roots, generated by root-string closure from the simple ones."""
    roots = {rs.simple_root(lab) for lab in rs.simple_roots}
    frontier = set(roots)
    while frontier:
        new = set()
        for beta in frontier:
            for lab in rs.simple_roots:
                alpha = rs.simple_root(lab)
                q = 0
                down = beta - alpha
                while down in roots:
                    q += 1
                    down = down - alpha
                if q - cartan_integer(rs, lab, beta) > 0:
                    cand = beta + alpha
                    if cand not in roots:
                        new.add(cand)
        roots |= new
        frontier = new
    return frozenset(roots)
