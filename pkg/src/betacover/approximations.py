"""Four kinds of lower/upper approximation operators, fuzzy and crisp.

Fuzzy operators fold a per-kind kernel over the universe:

  kind 1 uses the fuzzy neighborhood N, kind 2 its transpose M,
  kind 3 the meet-style combination of the two, kind 4 the join-style
  combination.  The kind-4 kernels parenthesize as
  ``((N^c and M^c) or X)`` for the lower operator and
  ``((N or M) and X)`` for the upper operator; only this reading makes
  the proved identities lower4 = lower1 meet lower2 and
  upper4 = upper1 join upper2 hold, and the audit asserts them.

Crisp operators are the defining set comprehensions over the crisp
neighborhoods and their transposes.

The fast path consumes precomputed neighborhood matrices and runs on
raw rational endpoints; the definition-literal slow path lives in
``betacover.oracle`` and is kept as the independent cross-check.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Optional, Tuple, Union

from .errors import UniverseMismatchError
from .fuzzysets import CrispSubset, IVFuzzySet
from .intervals import IntervalValue
from .neighborhoods import NeighborhoodSystem
from .space import SoftSpace


class Kind(Enum):
    K1 = 1
    K2 = 2
    K3 = 3
    K4 = 4

    @classmethod
    def of(cls, value: Union[int, str, "Kind"]) -> "Kind":
        if isinstance(value, Kind):
            return value
        return cls(int(value))


Target = Union[IVFuzzySet, CrispSubset]


@dataclass(frozen=True)
class ApproximationPair:
    lower: Target
    upper: Target
    kind: Kind
    mode: str  # "fuzzy" | "crisp"
    definable: bool


def _system(space: SoftSpace, system: Optional[NeighborhoodSystem]) -> NeighborhoodSystem:
    if system is not None:
        if system.space is not space and system.space != space:
            raise ValueError("neighborhood system belongs to a different space")
        return system
    return NeighborhoodSystem(space)


def _check_universe(space: SoftSpace, target: Target) -> None:
    if target.universe != space.universe:
        raise UniverseMismatchError("target set is over a different universe")


def _lower_base(ns: NeighborhoodSystem, kind: Kind):
    # Complement-side kernel matrix for the lower operator, cached per kind.
    cache = ns.__dict__.setdefault("_lower_base_cache", {})
    if kind not in cache:
        nc, mc = ns._nc, ns._mc
        if kind is Kind.K1:
            base = nc
        elif kind is Kind.K2:
            base = mc
        elif kind is Kind.K3:
            base = tuple(
                tuple(a.join(b) for a, b in zip(r1, r2)) for r1, r2 in zip(nc, mc)
            )
        else:
            base = tuple(
                tuple(a.meet(b) for a, b in zip(r1, r2)) for r1, r2 in zip(nc, mc)
            )
        cache[kind] = base
    return cache[kind]


def _upper_base(ns: NeighborhoodSystem, kind: Kind):
    cache = ns.__dict__.setdefault("_upper_base_cache", {})
    if kind not in cache:
        n, m = ns._n, ns._m
        if kind is Kind.K1:
            base = n
        elif kind is Kind.K2:
            base = m
        elif kind is Kind.K3:
            base = tuple(
                tuple(a.meet(b) for a, b in zip(r1, r2)) for r1, r2 in zip(n, m)
            )
        else:
            base = tuple(
                tuple(a.join(b) for a, b in zip(r1, r2)) for r1, r2 in zip(n, m)
            )
        cache[kind] = base
    return cache[kind]


def fuzzy_lower(
    space: SoftSpace,
    kind: Union[int, Kind],
    target: IVFuzzySet,
    system: Optional[NeighborhoodSystem] = None,
) -> IVFuzzySet:
    """Per-object meet over y of (kernel-complement(y) or target(y))."""
    kind = Kind.of(kind)
    _check_universe(space, target)
    ns = _system(space, system)
    base = _lower_base(ns, kind)
    glo = [g.lo for g in target.grades]
    ghi = [g.hi for g in target.grades]
    n = len(glo)
    out = []
    for i in range(n):
        row = base[i]
        acc_lo = acc_hi = None
        for j in range(n):
            b = row[j]
            vlo = b.lo if b.lo > glo[j] else glo[j]
            vhi = b.hi if b.hi > ghi[j] else ghi[j]
            if acc_lo is None or vlo < acc_lo:
                acc_lo = vlo
            if acc_hi is None or vhi < acc_hi:
                acc_hi = vhi
        out.append(IntervalValue(acc_lo, acc_hi))
    return IVFuzzySet(space.universe, tuple(out))


def fuzzy_upper(
    space: SoftSpace,
    kind: Union[int, Kind],
    target: IVFuzzySet,
    system: Optional[NeighborhoodSystem] = None,
) -> IVFuzzySet:
    """Per-object join over y of (kernel(y) and target(y))."""
    kind = Kind.of(kind)
    _check_universe(space, target)
    ns = _system(space, system)
    base = _upper_base(ns, kind)
    glo = [g.lo for g in target.grades]
    ghi = [g.hi for g in target.grades]
    n = len(glo)
    out = []
    for i in range(n):
        row = base[i]
        acc_lo = acc_hi = None
        for j in range(n):
            b = row[j]
            vlo = b.lo if b.lo < glo[j] else glo[j]
            vhi = b.hi if b.hi < ghi[j] else ghi[j]
            if acc_lo is None or vlo > acc_lo:
                acc_lo = vlo
            if acc_hi is None or vhi > acc_hi:
                acc_hi = vhi
        out.append(IntervalValue(acc_lo, acc_hi))
    return IVFuzzySet(space.universe, tuple(out))


def crisp_lower(
    space: SoftSpace,
    kind: Union[int, Kind],
    target: CrispSubset,
    system: Optional[NeighborhoodSystem] = None,
) -> CrispSubset:
    kind = Kind.of(kind)
    _check_universe(space, target)
    ns = _system(space, system)
    u = space.universe
    x_idx = frozenset(u.index(o) for o in target.members)
    members = []
    for i, obj in enumerate(u.objects):
        n_in = ns._crisp[i] <= x_idx
        if kind is Kind.K1:
            keep = n_in
        else:
            m_in = ns._crisp_co[i] <= x_idx
            if kind is Kind.K2:
                keep = m_in
            elif kind is Kind.K3:
                keep = n_in or m_in
            else:
                keep = n_in and m_in
        if keep:
            members.append(obj)
    return CrispSubset(u, frozenset(members))


def crisp_upper(
    space: SoftSpace,
    kind: Union[int, Kind],
    target: CrispSubset,
    system: Optional[NeighborhoodSystem] = None,
) -> CrispSubset:
    kind = Kind.of(kind)
    _check_universe(space, target)
    ns = _system(space, system)
    u = space.universe
    x_idx = frozenset(u.index(o) for o in target.members)
    members = []
    for i, obj in enumerate(u.objects):
        n_hits = bool(ns._crisp[i] & x_idx)
        if kind is Kind.K1:
            keep = n_hits
        else:
            m_hits = bool(ns._crisp_co[i] & x_idx)
            if kind is Kind.K2:
                keep = m_hits
            elif kind is Kind.K3:
                keep = n_hits and m_hits
            else:
                keep = n_hits or m_hits
        if keep:
            members.append(obj)
    return CrispSubset(u, frozenset(members))


def approximate(
    space: SoftSpace,
    kind: Union[int, Kind],
    target: Target,
    system: Optional[NeighborhoodSystem] = None,
) -> ApproximationPair:
    """Lower/upper pair plus the definability verdict for either mode."""
    kind = Kind.of(kind)
    ns = _system(space, system)
    if isinstance(target, IVFuzzySet):
        lower = fuzzy_lower(space, kind, target, ns)
        upper = fuzzy_upper(space, kind, target, ns)
        mode = "fuzzy"
    else:
        lower = crisp_lower(space, kind, target, ns)
        upper = crisp_upper(space, kind, target, ns)
        mode = "crisp"
    return ApproximationPair(lower, upper, kind, mode, definable=lower == upper)


def is_definable(
    space: SoftSpace,
    kind: Union[int, Kind],
    target: Target,
    system: Optional[NeighborhoodSystem] = None,
) -> bool:
    """True iff the lower and upper approximations coincide exactly."""
    return approximate(space, kind, target, system).definable
