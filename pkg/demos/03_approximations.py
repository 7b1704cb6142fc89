"""The four kinds of lower/upper approximation, fuzzy and crisp."""

from betacover import (
    CrispSubset,
    IVFuzzySet,
    IntervalValue,
    SoftMapping,
    SoftSpace,
    Universe,
    approximate,
    fuzzy_lower,
    fuzzy_upper,
)

iv = IntervalValue.parse
u = Universe(("x", "y", "z"))

space = SoftSpace(
    SoftMapping.from_dict(
        u,
        {
            "e1": {"x": iv("[0.6,0.7]"), "y": iv("[0.5,0.6]"), "z": iv("[0.3,0.6]")},
            "e2": {"x": iv("[0.5,0.8]"), "y": iv("[0.4,0.9]"), "z": iv("[0.7,0.8]")},
            "e3": {"x": iv("[0.2,0.3]"), "y": iv("[0.6,0.7]"), "z": iv("[0.5,0.55]")},
        },
    ),
    iv("[0.5,0.6]"),
)

target = IVFuzzySet.from_dict(
    u, {"x": iv("[0.5,0.5]"), "y": iv("[0.2,0.3]"), "z": iv("[0.6,0.8]")}
)

for kind in (1, 2, 3, 4):
    pair = approximate(space, kind, target)
    lo = {o: str(pair.lower.grade(o)) for o in u}
    hi = {o: str(pair.upper.grade(o)) for o in u}
    print(f"kind {kind}: lower={lo}")
    print(f"        upper={hi}  definable={pair.definable}")

# Kind 4 composes kinds 1 and 2 exactly: its lower operator is their
# pointwise meet, its upper operator their pointwise join.
l1 = fuzzy_lower(space, 1, target)
l2 = fuzzy_lower(space, 2, target)
assert fuzzy_lower(space, 4, target) == l1.intersect(l2)
assert fuzzy_upper(space, 4, target) == fuzzy_upper(space, 1, target).union(
    fuzzy_upper(space, 2, target)
)
print("kind-4 composition identities hold.")

# Kind 3 only composes one-sidedly: the union of the kind-1 and kind-2
# lowers is contained in the kind-3 lower, and the containment can be
# strict (see the audit demo for a concrete refutation of equality).
l3 = fuzzy_lower(space, 3, target)
assert l1.union(l2).is_subset(l3)

# Crisp targets: on this space every neighborhood pins its own object
# down tightly enough that crisp sets are definable for all four kinds.
for members in (("x", "z"), ("y",)):
    crisp = CrispSubset.of(u, members)
    results = {kind: approximate(space, kind, crisp).definable for kind in (1, 2, 3, 4)}
    print(f"X={set(members)}: definable per kind -> {results}")
