"""Building a spherical system by hand, validating it, localizing it."""
from wondersys import (
    Color,
    Functional,
    LatticeVector,
    SphericalSystem,
    build_root_system,
    dumps,
    localize,
    type_a_roots,
    validate_system,
)

# The rank-2 group-compactification data on A1 x A1: one color shared by
# both simple roots plus one split color per factor.
rs = build_root_system([("A", 1), ("A", 1)])
system = SphericalSystem(
    rs,
    [LatticeVector({"a1": 1}), LatticeVector({"a2": 1})],
    [
        Color("Dp", frozenset({"a1", "a2"}), Functional([1, 1])),
        Color("D1m", frozenset({"a1"}), Functional([1, -1])),
        Color("D2m", frozenset({"a2"}), Functional([-1, 1])),
    ],
)
report = validate_system(system)
print("valid:", report.ok)
print("type map:", system.type_map)
print("type-a roots:", sorted(type_a_roots(system)))

# Break one functional value and watch the axioms flag it.
broken = SphericalSystem(
    rs,
    system.psi,
    [Color("Dp", frozenset({"a1", "a2"}), Functional([2, 1]))] + list(system.colors[1:]),
)
for v in validate_system(broken).violations:
    print("violation", v)

# Localizing at {a1} keeps the first spherical root and projects the two
# colors moved by a1 onto it; both restrict to the same functional.
sub = localize(system, {"a1"})
print(dumps(sub))
