"""Theorem registry, counterexample search, and the audit driver.

Every algebraic law in the library's scope is an executable check with
exact pass/fail semantics.  Registry entries carry a status:

  law        - claimed to hold universally; a failure is either a
               library bug or a refuted claim, and always comes with a
               replayable counterexample.
  conjecture - plausible analogues never claimed anywhere; failures are
               reported as empirical findings, not errors.
  witness    - existence claims (strict inclusions); a trial either
               exhibits a witness or reports that this instance has
               none.

Checks are deterministic functions of (space, inputs); the driver
derives per-trial seeds from the master seed so a report is replayable
bit for bit.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass, field, replace
from typing import Callable, Dict, List, Optional, Sequence, Tuple

from . import __version__
from .approximations import Kind, crisp_lower, crisp_upper, fuzzy_lower, fuzzy_upper
from .errors import NotACoveringError, UnknownTheoremError
from .fuzzysets import CrispSubset, IVFuzzySet, Universe
from .generate import (
    GenConfig,
    drop_object,
    drop_parameter,
    gen_space,
    sample_beta_below,
    sample_crisp_subset,
    sample_fuzzy_set,
    sample_hypothesis_set,
    sample_interval,
    snap_candidates,
    snap_grade,
)
from .intervals import IntervalValue, family_join, family_meet, leq_bool
from .neighborhoods import NeighborhoodSystem
from .serialize import parse_space_doc, set_to_doc, space_to_doc
from .space import SoftMapping, SoftSpace

SCHEMA_VERSION = 1

PASS = "pass"
FAIL = "fail"
SKIP = "skip"


@dataclass(frozen=True)
class CheckResult:
    outcome: str
    reason: Optional[str] = None
    detail: Optional[dict] = None


def _pass() -> CheckResult:
    return CheckResult(PASS)


def _fail(**detail) -> CheckResult:
    return CheckResult(FAIL, detail={k: str(v) for k, v in detail.items()})


def _skip(reason: str) -> CheckResult:
    return CheckResult(SKIP, reason=reason)


def _verdict(ok: bool, **detail) -> CheckResult:
    return _pass() if ok else _fail(**detail)


@dataclass(frozen=True)
class CheckInputs:
    """Sampled inputs a single trial feeds to every checker."""

    fuzzy_x: IVFuzzySet
    fuzzy_y: IVFuzzySet
    crisp_x: CrispSubset
    crisp_y: CrispSubset
    hypothesis_x: Optional[IVFuzzySet]
    beta_low: IntervalValue
    objects: Tuple[str, ...]
    family: Tuple[IntervalValue, ...]
    extra_family: Tuple[IntervalValue, ...]
    probe: IntervalValue
    space2: Optional[SoftSpace]


def sample_inputs(space: SoftSpace, rng: random.Random, grid_denominator: int) -> CheckInputs:
    u = space.universe
    d = grid_denominator
    fuzzy_x = sample_fuzzy_set(u, rng, d)
    fuzzy_y = sample_fuzzy_set(u, rng, d)
    crisp_x = sample_crisp_subset(u, rng)
    crisp_y = sample_crisp_subset(u, rng)
    ns = NeighborhoodSystem(space)
    hypothesis_x = sample_hypothesis_set(ns, rng, d)
    beta_low = sample_beta_below(space.beta, rng, d)
    k = rng.randrange(1, len(u) + 1)
    objects = tuple(rng.sample(list(u.objects), k))
    family = tuple(sample_interval(rng, d) for _ in range(rng.randrange(1, 5)))
    extra_family = tuple(sample_interval(rng, d) for _ in range(rng.randrange(0, 3)))
    probe = family_meet(family) if rng.random() < 0.5 else sample_interval(rng, d)
    space2 = _companion_space(space, rng)
    return CheckInputs(
        fuzzy_x,
        fuzzy_y,
        crisp_x,
        crisp_y,
        hypothesis_x,
        beta_low,
        objects,
        family,
        extra_family,
        probe,
        space2,
    )


def _companion_space(space: SoftSpace, rng: random.Random) -> Optional[SoftSpace]:
    """A second space over the same universe and beta, different parameters.

    Built by duplicating and/or dropping parameters of the original; the
    crisp-neighborhood premise of the two-space law is checked, never
    assumed, so a companion that changes the neighborhoods only causes a
    skip.
    """
    params = list(space.parameters)
    table = {
        p: {o: space.mapping.set_for(p).grade(o) for o in space.universe.objects}
        for p in params
    }
    mode = rng.randrange(3)
    if mode in (0, 2):
        source = rng.choice(params)
        table[f"{source}*"] = dict(table[source])
    if mode in (1, 2) and len(table) > 1:
        victim = rng.choice(params)
        del table[victim]
    try:
        return SoftSpace(SoftMapping.from_dict(space.universe, table), space.beta)
    except NotACoveringError:
        return None


class TrialContext:
    """Per-trial caches: one neighborhood system, memoized approximations."""

    def __init__(self, space: SoftSpace, inputs: CheckInputs):
        self.space = space
        self.inputs = inputs
        self._ns: Optional[NeighborhoodSystem] = None
        self._memo: Dict[tuple, object] = {}

    @property
    def ns(self) -> NeighborhoodSystem:
        if self._ns is None:
            self._ns = NeighborhoodSystem(self.space)
        return self._ns

    def fl(self, kind: Kind, target: IVFuzzySet) -> IVFuzzySet:
        key = ("fl", kind, target.grades)
        if key not in self._memo:
            self._memo[key] = fuzzy_lower(self.space, kind, target, self.ns)
        return self._memo[key]

    def fu(self, kind: Kind, target: IVFuzzySet) -> IVFuzzySet:
        key = ("fu", kind, target.grades)
        if key not in self._memo:
            self._memo[key] = fuzzy_upper(self.space, kind, target, self.ns)
        return self._memo[key]

    def cl(self, kind: Kind, target: CrispSubset) -> CrispSubset:
        key = ("cl", kind, target.members)
        if key not in self._memo:
            self._memo[key] = crisp_lower(self.space, kind, target, self.ns)
        return self._memo[key]

    def cu(self, kind: Kind, target: CrispSubset) -> CrispSubset:
        key = ("cu", kind, target.members)
        if key not in self._memo:
            self._memo[key] = crisp_upper(self.space, kind, target, self.ns)
        return self._memo[key]

    def cached(self, key: str, build: Callable[[], object]):
        if key not in self._memo:
            self._memo[key] = build()
        return self._memo[key]

    @property
    def top(self) -> IVFuzzySet:
        return self.cached("top", lambda: IVFuzzySet.top(self.space.universe))

    @property
    def bottom(self) -> IVFuzzySet:
        return self.cached("bottom", lambda: IVFuzzySet.bottom(self.space.universe))


Checker = Callable[[TrialContext], CheckResult]


@dataclass(frozen=True)
class TheoremSpec:
    id: str
    statement: str
    status: str  # law | conjecture | witness
    checker: Checker


REGISTRY: Dict[str, TheoremSpec] = {}


def _register(theorem_id: str, status: str, statement: str, checker: Checker) -> None:
    REGISTRY[theorem_id] = TheoremSpec(theorem_id, statement, status, checker)


# -- interval-family lemma ---------------------------------------------------


def _check_lfam1(ctx: TrialContext) -> CheckResult:
    fam, probe = ctx.inputs.family, ctx.inputs.probe
    lhs = leq_bool(probe, family_meet(fam))
    rhs = all(leq_bool(probe, i) for i in fam)
    return _verdict(lhs == rhs, probe=probe, family=[str(i) for i in fam])


def _check_lfam2(ctx: TrialContext) -> CheckResult:
    fam, probe = ctx.inputs.family, ctx.inputs.probe
    if any(leq_bool(probe, i) for i in fam):
        return _verdict(
            leq_bool(probe, family_join(fam)), probe=probe, family=[str(i) for i in fam]
        )
    return _pass()


def _check_lfam3(ctx: TrialContext) -> CheckResult:
    fam = ctx.inputs.family
    superfam = fam + ctx.inputs.extra_family
    return _verdict(
        leq_bool(family_meet(superfam), family_meet(fam)),
        family=[str(i) for i in fam],
        superfamily=[str(i) for i in superfam],
    )


_register("L-FAM-1", "law", "probe <= meet(family) iff probe <= every member", _check_lfam1)
_register("L-FAM-2", "law", "probe <= some member implies probe <= join(family)", _check_lfam2)
_register("L-FAM-3", "law", "larger family has smaller meet", _check_lfam3)


# -- fuzzy neighborhood laws -------------------------------------------------


def _check_nrefl(ctx: TrialContext) -> CheckResult:
    ns, beta = ctx.ns, ctx.space.beta
    for i, obj in enumerate(ctx.space.universe.objects):
        if not leq_bool(beta, ns._n[i][i]):
            return _fail(object=obj, grade=ns._n[i][i])
    return _pass()


def _check_ntrans(ctx: TrialContext) -> CheckResult:
    ns, beta = ctx.ns, ctx.space.beta
    u = ctx.space.universe.objects
    n = ns._n
    size = len(u)
    for i in range(size):
        for j in range(size):
            if not leq_bool(beta, n[i][j]):
                continue
            for k in range(size):
                if leq_bool(beta, n[j][k]) and not leq_bool(beta, n[i][k]):
                    return _fail(x=u[i], y=u[j], z=u[k], grade=n[i][k])
    return _pass()


def _check_nmono(ctx: TrialContext) -> CheckResult:
    low = ctx.inputs.beta_low
    space_low = SoftSpace(ctx.space.mapping, low)  # valid: low <= beta
    ns_low = NeighborhoodSystem(space_low)
    n_hi, n_lo = ctx.ns._n, ns_low._n
    u = ctx.space.universe.objects
    for i in range(len(u)):
        for j in range(len(u)):
            if not leq_bool(n_lo[i][j], n_hi[i][j]):
                return _fail(x=u[i], y=u[j], low_beta=low, low=n_lo[i][j], high=n_hi[i][j])
    return _pass()


def _check_ncontain(ctx: TrialContext) -> CheckResult:
    ns, beta = ctx.ns, ctx.space.beta
    n = ns._n
    u = ctx.space.universe.objects
    size = len(u)
    for i in range(size):
        for j in range(size):
            member = leq_bool(beta, n[i][j])
            contained = all(leq_bool(n[j][k], n[i][k]) for k in range(size))
            if member != contained:
                return _fail(x=u[i], y=u[j], member=member, contained=contained)
    return _pass()


def _check_neq(ctx: TrialContext) -> CheckResult:
    ns, beta = ctx.ns, ctx.space.beta
    n = ns._n
    u = ctx.space.universe.objects
    for i in range(len(u)):
        for j in range(len(u)):
            mutual = leq_bool(beta, n[i][j]) and leq_bool(beta, n[j][i])
            if mutual != (n[i] == n[j]):
                return _fail(x=u[i], y=u[j], mutual=mutual, equal=n[i] == n[j])
    return _pass()


_register("N-REFL", "law", "beta <= N_x(x) for every x", _check_nrefl)
_register(
    "N-TRANS",
    "law",
    "beta <= N_x(y) and beta <= N_y(z) imply beta <= N_x(z)",
    _check_ntrans,
)
_register(
    "N-MONO",
    "law",
    "beta1 <= beta2 implies N^beta1_x is a fuzzy subset of N^beta2_x",
    _check_nmono,
)
_register(
    "N-CONTAIN",
    "law",
    "beta <= N_x(y) iff N_y is a fuzzy subset of N_x",
    _check_ncontain,
)
_register(
    "N-EQ",
    "law",
    "beta <= N_x(y) and beta <= N_y(x) iff N_x = N_y",
    _check_neq,
)


# -- crisp neighborhood laws -------------------------------------------------


def _check_cnrefl(ctx: TrialContext) -> CheckResult:
    ns = ctx.ns
    for i, obj in enumerate(ctx.space.universe.objects):
        if i not in ns._crisp[i]:
            return _fail(object=obj)
    return _pass()


def _check_cnmemb(ctx: TrialContext) -> CheckResult:
    crisp = ctx.ns._crisp
    u = ctx.space.universe.objects
    for i in range(len(u)):
        for j in range(len(u)):
            if (j in crisp[i]) != (crisp[j] <= crisp[i]):
                return _fail(x=u[i], y=u[j])
    return _pass()


def _check_cntrans(ctx: TrialContext) -> CheckResult:
    crisp = ctx.ns._crisp
    u = ctx.space.universe.objects
    for i in range(len(u)):
        for j in crisp[i]:
            if not crisp[j] <= crisp[i]:
                return _fail(x=u[i], y=u[j])
    return _pass()


def _check_cneq(ctx: TrialContext) -> CheckResult:
    crisp, n = ctx.ns._crisp, ctx.ns._n
    u = ctx.space.universe.objects
    for i in range(len(u)):
        for j in range(len(u)):
            if (crisp[i] == crisp[j]) != (n[i] == n[j]):
                return _fail(x=u[i], y=u[j])
    return _pass()


def _cut(ctx: TrialContext, grades: Sequence[IntervalValue]) -> frozenset:
    beta = ctx.space.beta
    return frozenset(k for k, g in enumerate(grades) if leq_bool(beta, g))


def _row_join(rows, indices):
    return [family_join([rows[i][k] for i in indices]) for k in range(len(rows))]


def _row_meet(rows, indices):
    return [family_meet([rows[i][k] for i in indices]) for k in range(len(rows))]


def _check_cnlattice1(ctx: TrialContext) -> CheckResult:
    ns = ctx.ns
    u = ctx.space.universe.objects
    for i in range(len(u)):
        for j in range(len(u)):
            lhs = ns._crisp[i] | ns._crisp[j]
            rhs = _cut(ctx, _row_join(ns._n, (i, j)))
            if not lhs <= rhs:
                return _fail(x=u[i], y=u[j], lhs=sorted(lhs), rhs=sorted(rhs))
    return _pass()


def _check_cnlattice2(ctx: TrialContext) -> CheckResult:
    ns = ctx.ns
    u = ctx.space.universe.objects
    for i in range(len(u)):
        for j in range(len(u)):
            lhs = ns._crisp[i] & ns._crisp[j]
            rhs = _cut(ctx, _row_meet(ns._n, (i, j)))
            if lhs != rhs:
                return _fail(x=u[i], y=u[j], lhs=sorted(lhs), rhs=sorted(rhs))
    return _pass()


def _family_indices(ctx: TrialContext) -> List[int]:
    u = ctx.space.universe
    return [u.index(o) for o in ctx.inputs.objects]


def _check_cnlattice3(ctx: TrialContext) -> CheckResult:
    ns = ctx.ns
    idx = _family_indices(ctx)
    lhs = frozenset().union(*(ns._crisp[i] for i in idx))
    rhs = _cut(ctx, _row_join(ns._n, idx))
    return _verdict(lhs <= rhs, family=list(ctx.inputs.objects), lhs=sorted(lhs), rhs=sorted(rhs))


def _check_cnlattice4(ctx: TrialContext) -> CheckResult:
    ns = ctx.ns
    idx = _family_indices(ctx)
    lhs = ns._crisp[idx[0]]
    for i in idx[1:]:
        lhs = lhs & ns._crisp[i]
    rhs = _cut(ctx, _row_meet(ns._n, idx))
    return _verdict(lhs == rhs, family=list(ctx.inputs.objects), lhs=sorted(lhs), rhs=sorted(rhs))


_register("CN-REFL", "law", "x belongs to its own crisp neighborhood", _check_cnrefl)
_register(
    "CN-MEMB",
    "law",
    "y in crisp(x) iff crisp(y) is a subset of crisp(x)",
    _check_cnmemb,
)
_register("CN-TRANS", "law", "crisp neighborhood membership is transitive", _check_cntrans)
_register(
    "CN-EQ",
    "law",
    "crisp neighborhoods equal iff fuzzy neighborhoods equal",
    _check_cneq,
)
_register(
    "CN-LATTICE-1",
    "law",
    "crisp(x) union crisp(y) is contained in the cut of N_x join N_y",
    _check_cnlattice1,
)
_register(
    "CN-LATTICE-2",
    "law",
    "crisp(x) intersect crisp(y) equals the cut of N_x meet N_y",
    _check_cnlattice2,
)
_register(
    "CN-LATTICE-3",
    "law",
    "indexed union of crisp neighborhoods is contained in the cut of the joined rows",
    _check_cnlattice3,
)
_register(
    "CN-LATTICE-4",
    "law",
    "indexed intersection of crisp neighborhoods equals the cut of the met rows",
    _check_cnlattice4,
)


# -- fuzzy approximation operator properties ---------------------------------


def _hypothesis_holds(ctx: TrialContext, target: IVFuzzySet) -> bool:
    n = ctx.ns._n
    for i in range(len(ctx.space.universe)):
        diag = n[i][i]
        g = target.grades[i]
        if not (leq_bool(diag.complement(), g) and leq_bool(g, diag)):
            return False
    return True


def _hypothesis_target(ctx: TrialContext) -> Optional[IVFuzzySet]:
    target = ctx.inputs.hypothesis_x
    if target is None or not _hypothesis_holds(ctx, target):
        return None
    return target


def _check_a_p1(kind: Kind):
    def checker(ctx: TrialContext) -> CheckResult:
        ok = ctx.fl(kind, ctx.top) == ctx.top and ctx.fu(kind, ctx.bottom) == ctx.bottom
        return _verdict(
            ok,
            lower_of_top=ctx.fl(kind, ctx.top).to_json()["grades"],
            upper_of_bottom=ctx.fu(kind, ctx.bottom).to_json()["grades"],
        )

    return checker


def _check_a_p2(kind: Kind):
    def checker(ctx: TrialContext) -> CheckResult:
        x = ctx.inputs.fuzzy_x
        xc = x.complement()
        ok = (
            ctx.fl(kind, xc) == ctx.fu(kind, x).complement()
            and ctx.fu(kind, xc) == ctx.fl(kind, x).complement()
        )
        return _verdict(ok, target=set_to_doc(x))

    return checker


def _check_a_p3(kind: Kind):
    def checker(ctx: TrialContext) -> CheckResult:
        x, y = ctx.inputs.fuzzy_x, ctx.inputs.fuzzy_y
        ok = (
            ctx.fl(kind, x.intersect(y)) == ctx.fl(kind, x).intersect(ctx.fl(kind, y))
            and ctx.fu(kind, x.union(y)) == ctx.fu(kind, x).union(ctx.fu(kind, y))
        )
        return _verdict(ok, x=set_to_doc(x), y=set_to_doc(y))

    return checker


def _check_a_p4(kind: Kind):
    def checker(ctx: TrialContext) -> CheckResult:
        x = ctx.inputs.fuzzy_x
        big = x.union(ctx.inputs.fuzzy_y)
        ok = ctx.fl(kind, x).is_subset(ctx.fl(kind, big)) and ctx.fu(kind, x).is_subset(
            ctx.fu(kind, big)
        )
        return _verdict(ok, small=set_to_doc(x), large=set_to_doc(big))

    return checker


def _check_a_p5(kind: Kind):
    def checker(ctx: TrialContext) -> CheckResult:
        x, y = ctx.inputs.fuzzy_x, ctx.inputs.fuzzy_y
        ok = (
            ctx.fl(kind, x).union(ctx.fl(kind, y)).is_subset(ctx.fl(kind, x.union(y)))
            and ctx.fu(kind, x.intersect(y)).is_subset(
                ctx.fu(kind, x).intersect(ctx.fu(kind, y))
            )
        )
        return _verdict(ok, x=set_to_doc(x), y=set_to_doc(y))

    return checker


def _check_a_p6(kind: Kind):
    def checker(ctx: TrialContext) -> CheckResult:
        target = _hypothesis_target(ctx)
        if target is None:
            return _skip("boundedness hypothesis infeasible or unsatisfied")
        ok = ctx.fl(kind, target).is_subset(target) and target.is_subset(ctx.fu(kind, target))
        return _verdict(ok, target=set_to_doc(target))

    return checker


def _check_a_p7(kind: Kind):
    def checker(ctx: TrialContext) -> CheckResult:
        target = _hypothesis_target(ctx)
        if target is None:
            return _skip("boundedness hypothesis infeasible or unsatisfied")
        lower = ctx.fl(kind, target)
        upper = ctx.fu(kind, target)
        ok = (
            ctx.fl(kind, lower).is_subset(lower)
            and lower.is_subset(target)
            and target.is_subset(upper)
            and upper.is_subset(ctx.fu(kind, upper))
        )
        return _verdict(ok, target=set_to_doc(target))

    return checker


def _check_a_p8(kind: Kind):
    def checker(ctx: TrialContext) -> CheckResult:
        x = ctx.inputs.fuzzy_x
        y = x.union(ctx.inputs.fuzzy_y)  # guarantees x subset y
        ok = (
            ctx.fl(kind, x).union(ctx.fl(kind, y)) == ctx.fl(kind, x.union(y))
            and ctx.fu(kind, x.intersect(y)) == ctx.fu(kind, x).intersect(ctx.fu(kind, y))
        )
        return _verdict(ok, small=set_to_doc(x), large=set_to_doc(y))

    return checker


_A_PROPS = {
    1: ("lower of the full set is full; upper of the empty set is empty", _check_a_p1),
    2: ("lower and upper are dual under complement", _check_a_p2),
    3: ("lower is a meet morphism; upper is a join morphism", _check_a_p3),
    4: ("lower and upper are monotone under fuzzy inclusion", _check_a_p4),
    5: ("lower sub-distributes over union; upper over intersection", _check_a_p5),
    6: ("bounded targets sit between lower and upper", _check_a_p6),
    7: ("iterating tightens: LL(X) in L(X) in X in U(X) in UU(X)", _check_a_p7),
    8: ("with X in Y the sub-distributions become equalities", _check_a_p8),
}

for _kind in Kind:
    for _prop, (_stmt, _factory) in _A_PROPS.items():
        _register(
            f"A{_kind.value}-P{_prop}",
            "law",
            f"kind {_kind.value} fuzzy operators: {_stmt}",
            _factory(_kind),
        )


# -- crisp approximation operator properties ---------------------------------


def _check_ca_p1(kind: Kind):
    def checker(ctx: TrialContext) -> CheckResult:
        u = ctx.space.universe
        empty, full = CrispSubset.empty(u), CrispSubset.full(u)
        ok = ctx.cl(kind, empty) == empty and ctx.cl(kind, full) == full
        return _verdict(ok)

    return checker


def _check_ca_p2(kind: Kind):
    def checker(ctx: TrialContext) -> CheckResult:
        u = ctx.space.universe
        empty, full = CrispSubset.empty(u), CrispSubset.full(u)
        ok = ctx.cu(kind, empty) == empty and ctx.cu(kind, full) == full
        return _verdict(ok)

    return checker


def _check_ca_p3(kind: Kind):
    def checker(ctx: TrialContext) -> CheckResult:
        x = ctx.inputs.crisp_x
        big = x.union(ctx.inputs.crisp_y)
        ok = ctx.cl(kind, x).is_subset(ctx.cl(kind, big)) and ctx.cu(kind, x).is_subset(
            ctx.cu(kind, big)
        )
        return _verdict(ok, small=sorted(x.members), large=sorted(big.members))

    return checker


def _check_ca_p4(kind: Kind):
    def checker(ctx: TrialContext) -> CheckResult:
        x, y = ctx.inputs.crisp_x, ctx.inputs.crisp_y
        ok = (
            ctx.cl(kind, x).union(ctx.cl(kind, y)).is_subset(ctx.cl(kind, x.union(y)))
            and ctx.cu(kind, x.intersection(y)).is_subset(
                ctx.cu(kind, x).intersection(ctx.cu(kind, y))
            )
        )
        return _verdict(ok, x=sorted(x.members), y=sorted(y.members))

    return checker


def _check_ca_p5(kind: Kind):
    def checker(ctx: TrialContext) -> CheckResult:
        x, y = ctx.inputs.crisp_x, ctx.inputs.crisp_y
        ok = (
            ctx.cl(kind, x).intersection(ctx.cl(kind, y)) == ctx.cl(kind, x.intersection(y))
            and ctx.cu(kind, x.union(y)) == ctx.cu(kind, x).union(ctx.cu(kind, y))
        )
        return _verdict(ok, x=sorted(x.members), y=sorted(y.members))

    return checker


def _check_ca_p6(kind: Kind):
    def checker(ctx: TrialContext) -> CheckResult:
        x = ctx.inputs.crisp_x
        xc = x.complement()
        ok = (
            ctx.cl(kind, xc) == ctx.cu(kind, x).complement()
            and ctx.cu(kind, xc) == ctx.cl(kind, x).complement()
        )
        return _verdict(ok, x=sorted(x.members))

    return checker


def _check_ca_p7(kind: Kind):
    def checker(ctx: TrialContext) -> CheckResult:
        x = ctx.inputs.crisp_x
        ok = ctx.cl(kind, x).is_subset(x) and x.is_subset(ctx.cu(kind, x))
        return _verdict(ok, x=sorted(x.members))

    return checker


_CA_PROPS = {
    1: ("lower preserves the empty and full sets", _check_ca_p1),
    2: ("upper preserves the empty and full sets", _check_ca_p2),
    3: ("lower and upper are monotone", _check_ca_p3),
    4: ("lower sub-distributes over union; upper over intersection", _check_ca_p4),
    5: ("lower is an intersection morphism; upper is a union morphism", _check_ca_p5),
    6: ("lower and upper are dual under complement", _check_ca_p6),
    7: ("lower(X) in X in upper(X)", _check_ca_p7),
}

for _kind in Kind:
    status = "law" if _kind is Kind.K1 else "conjecture"
    for _prop, (_stmt, _factory) in _CA_PROPS.items():
        _register(
            f"CA{_kind.value}-P{_prop}",
            status,
            f"kind {_kind.value} crisp operators: {_stmt}",
            _factory(_kind),
        )


# -- relationships between the four kinds -------------------------------------


def _check_rel_f(index: int):
    def checker(ctx: TrialContext) -> CheckResult:
        x = ctx.inputs.fuzzy_x
        fl, fu = ctx.fl, ctx.fu
        if index == 1:
            ok = fl(Kind.K3, x) == fl(Kind.K1, x).union(fl(Kind.K2, x))
        elif index == 2:
            ok = fu(Kind.K3, x) == fu(Kind.K1, x).intersect(fu(Kind.K2, x))
        elif index == 3:
            ok = fl(Kind.K4, x) == fl(Kind.K1, x).intersect(fl(Kind.K2, x))
        elif index == 4:
            ok = fu(Kind.K4, x) == fu(Kind.K1, x).union(fu(Kind.K2, x))
        elif index == 5:
            ok = fl(Kind.K4, x).is_subset(fl(Kind.K1, x)) and fl(Kind.K1, x).is_subset(
                fl(Kind.K3, x)
            )
        elif index == 6:
            ok = fl(Kind.K4, x).is_subset(fl(Kind.K2, x)) and fl(Kind.K2, x).is_subset(
                fl(Kind.K3, x)
            )
        elif index == 7:
            ok = fu(Kind.K3, x).is_subset(fu(Kind.K1, x)) and fu(Kind.K1, x).is_subset(
                fu(Kind.K4, x)
            )
        else:
            ok = fu(Kind.K3, x).is_subset(fu(Kind.K2, x)) and fu(Kind.K2, x).is_subset(
                fu(Kind.K4, x)
            )
        return _verdict(ok, target=set_to_doc(x))

    return checker


def _check_rel_c(index: int):
    def checker(ctx: TrialContext) -> CheckResult:
        x = ctx.inputs.crisp_x
        cl, cu = ctx.cl, ctx.cu
        if index == 1:
            ok = cl(Kind.K3, x) == cl(Kind.K1, x).union(cl(Kind.K2, x))
        elif index == 2:
            ok = cu(Kind.K3, x) == cu(Kind.K1, x).intersection(cu(Kind.K2, x))
        elif index == 3:
            ok = cl(Kind.K4, x) == cl(Kind.K1, x).intersection(cl(Kind.K2, x))
        elif index == 4:
            ok = cu(Kind.K4, x) == cu(Kind.K1, x).union(cu(Kind.K2, x))
        elif index == 5:
            ok = cl(Kind.K4, x).is_subset(cl(Kind.K1, x)) and cl(Kind.K1, x).is_subset(
                cl(Kind.K3, x)
            )
        elif index == 6:
            ok = cl(Kind.K4, x).is_subset(cl(Kind.K2, x)) and cl(Kind.K2, x).is_subset(
                cl(Kind.K3, x)
            )
        elif index == 7:
            ok = cu(Kind.K3, x).is_subset(cu(Kind.K1, x)) and cu(Kind.K1, x).is_subset(
                cu(Kind.K4, x)
            )
        else:
            ok = cu(Kind.K3, x).is_subset(cu(Kind.K2, x)) and cu(Kind.K2, x).is_subset(
                cu(Kind.K4, x)
            )
        return _verdict(ok, target=sorted(x.members))

    return checker


_REL_F_STATEMENTS = {
    1: "fuzzy lower3 equals lower1 union lower2",
    2: "fuzzy upper3 equals upper1 intersect upper2",
    3: "fuzzy lower4 equals lower1 intersect lower2",
    4: "fuzzy upper4 equals upper1 union upper2",
    5: "fuzzy lower4 in lower1 in lower3",
    6: "fuzzy lower4 in lower2 in lower3",
    7: "fuzzy upper3 in upper1 in upper4",
    8: "fuzzy upper3 in upper2 in upper4",
}

for _i, _stmt in _REL_F_STATEMENTS.items():
    _register(f"REL-F{_i}", "law", _stmt, _check_rel_f(_i))

_REL_C_STATEMENTS = {k: v.replace("fuzzy", "crisp") for k, v in _REL_F_STATEMENTS.items()}
for _i, _stmt in _REL_C_STATEMENTS.items():
    _register(f"REL-C{_i}", "law", _stmt, _check_rel_c(_i))


def _check_sandwich(ctx: TrialContext) -> CheckResult:
    target = _hypothesis_target(ctx)
    if target is None:
        return _skip("boundedness hypothesis infeasible or unsatisfied")
    chain = [
        ctx.fl(Kind.K4, target),
        ctx.fl(Kind.K2, target),
        ctx.fl(Kind.K3, target),
        target,
        ctx.fu(Kind.K3, target),
        ctx.fu(Kind.K1, target),
        ctx.fu(Kind.K4, target),
    ]
    for a, b in zip(chain, chain[1:]):
        if not a.is_subset(b):
            return _fail(target=set_to_doc(target))
    return _pass()


_register(
    "SANDWICH",
    "law",
    "bounded targets: lower4 in lower2 in lower3 in X in upper3 in upper1 in upper4",
    _check_sandwich,
)


def _check_two_space(ctx: TrialContext) -> CheckResult:
    other = ctx.inputs.space2
    if other is None:
        return _skip("no valid companion space for this instance")
    ns2 = NeighborhoodSystem(other)
    if ctx.ns._crisp != ns2._crisp:
        return _skip("companion space has different crisp neighborhoods")
    x = ctx.inputs.crisp_x
    x2 = CrispSubset(other.universe, x.members)
    ok = (
        ctx.cl(Kind.K1, x).members == crisp_lower(other, Kind.K1, x2, ns2).members
        and ctx.cu(Kind.K1, x).members == crisp_upper(other, Kind.K1, x2, ns2).members
    )
    return _verdict(ok, target=sorted(x.members))


_register(
    "TWO-SPACE",
    "law",
    "equal crisp neighborhoods give equal kind-1 crisp approximations across spaces",
    _check_two_space,
)


# -- strictness witnesses ------------------------------------------------------


def _check_w_union_strict(ctx: TrialContext) -> CheckResult:
    ns = ctx.ns
    u = ctx.space.universe.objects
    for i in range(len(u)):
        for j in range(len(u)):
            lhs = ns._crisp[i] | ns._crisp[j]
            rhs = _cut(ctx, _row_join(ns._n, (i, j)))
            if lhs < rhs:
                gained = sorted(u[k] for k in rhs - lhs)
                return CheckResult(PASS, detail={"x": u[i], "y": u[j], "gained": str(gained)})
    return _skip("no strict instance in this space")


def _check_w_lower_strict(ctx: TrialContext) -> CheckResult:
    x, y = ctx.inputs.fuzzy_x, ctx.inputs.fuzzy_y
    lhs = ctx.fl(Kind.K1, x).union(ctx.fl(Kind.K1, y))
    rhs = ctx.fl(Kind.K1, x.union(y))
    if lhs.is_subset(rhs) and lhs != rhs:
        return CheckResult(PASS, detail={"x": str(set_to_doc(x)), "y": str(set_to_doc(y))})
    return _skip("no strict instance for these inputs")


_register(
    "W-UNION-STRICT",
    "witness",
    "exists x,y with crisp(x) union crisp(y) strictly inside the cut of the joined rows",
    _check_w_union_strict,
)
_register(
    "W-LOWER-STRICT",
    "witness",
    "exists X,Y with lower(X) union lower(Y) strictly inside lower(X union Y)",
    _check_w_lower_strict,
)


# -- driver --------------------------------------------------------------------


def all_theorem_ids() -> List[str]:
    return list(REGISTRY)


def check(theorem: str, space: SoftSpace, inputs: CheckInputs) -> CheckResult:
    """Evaluate one registry statement on one concrete instance."""
    spec = REGISTRY.get(theorem)
    if spec is None:
        raise UnknownTheoremError(f"unknown theorem id {theorem!r}")
    return spec.checker(TrialContext(space, inputs))


def inputs_to_doc(inputs: CheckInputs) -> dict:
    return {
        "fuzzy_x": set_to_doc(inputs.fuzzy_x),
        "fuzzy_y": set_to_doc(inputs.fuzzy_y),
        "crisp_x": set_to_doc(inputs.crisp_x),
        "crisp_y": set_to_doc(inputs.crisp_y),
        "hypothesis_x": None
        if inputs.hypothesis_x is None
        else set_to_doc(inputs.hypothesis_x),
        "beta_low": inputs.beta_low.text(),
        "objects": list(inputs.objects),
        "family": [i.text() for i in inputs.family],
        "extra_family": [i.text() for i in inputs.extra_family],
        "probe": inputs.probe.text(),
        "space2": None if inputs.space2 is None else space_to_doc(inputs.space2),
    }


def inputs_from_doc(doc: dict, universe: Universe) -> CheckInputs:
    from .serialize import parse_set_doc

    space2 = None
    if doc.get("space2") is not None:
        mapping, beta = parse_space_doc(doc["space2"])
        space2 = SoftSpace(mapping, beta)
    hypothesis = doc.get("hypothesis_x")
    return CheckInputs(
        fuzzy_x=parse_set_doc(doc["fuzzy_x"], universe),
        fuzzy_y=parse_set_doc(doc["fuzzy_y"], universe),
        crisp_x=parse_set_doc(doc["crisp_x"], universe),
        crisp_y=parse_set_doc(doc["crisp_y"], universe),
        hypothesis_x=None if hypothesis is None else parse_set_doc(hypothesis, universe),
        beta_low=IntervalValue.parse(doc["beta_low"]),
        objects=tuple(doc["objects"]),
        family=tuple(IntervalValue.parse(t) for t in doc["family"]),
        extra_family=tuple(IntervalValue.parse(t) for t in doc["extra_family"]),
        probe=IntervalValue.parse(doc["probe"]),
        space2=space2,
    )


def replay(counterexample: dict) -> CheckResult:
    """Re-run a serialized counterexample; must reproduce its verdict."""
    mapping, beta = parse_space_doc(counterexample["space"])
    space = SoftSpace(mapping, beta)
    inputs = inputs_from_doc(counterexample["inputs"], space.universe)
    return check(counterexample["theorem"], space, inputs)


def _project_fuzzy(fs: IVFuzzySet, universe: Universe) -> IVFuzzySet:
    return IVFuzzySet(universe, tuple(fs.grade(o) for o in universe.objects))


def _project_inputs(inputs: CheckInputs, universe: Universe) -> CheckInputs:
    objects = tuple(o for o in inputs.objects if o in universe) or (universe.objects[0],)
    return replace(
        inputs,
        fuzzy_x=_project_fuzzy(inputs.fuzzy_x, universe),
        fuzzy_y=_project_fuzzy(inputs.fuzzy_y, universe),
        crisp_x=CrispSubset(universe, inputs.crisp_x.members & set(universe.objects)),
        crisp_y=CrispSubset(universe, inputs.crisp_y.members & set(universe.objects)),
        hypothesis_x=None
        if inputs.hypothesis_x is None
        else _project_fuzzy(inputs.hypothesis_x, universe),
        objects=objects,
        space2=None,
    )


def _replace_fuzzy_grade(fs: IVFuzzySet, index: int, grade: IntervalValue) -> IVFuzzySet:
    grades = list(fs.grades)
    grades[index] = grade
    return IVFuzzySet(fs.universe, tuple(grades))


def shrink_counterexample(
    theorem: str, space: SoftSpace, inputs: CheckInputs, max_evals: int = 300
) -> Tuple[SoftSpace, CheckInputs]:
    """Greedy minimization: drop objects/parameters, snap grades to {0,1/2,1}.

    Every accepted candidate still fails the same theorem and is still a
    valid covering, so the result is a no-larger failing instance.
    """
    if theorem == "TWO-SPACE":
        return space, inputs  # companion space makes projection ambiguous

    def fails(sp: SoftSpace, inp: CheckInputs) -> bool:
        return check(theorem, sp, inp).outcome == FAIL

    evals = 0
    improved = True
    while improved and evals < max_evals:
        improved = False
        for obj in space.universe.objects:
            candidate = drop_object(space, obj)
            if candidate is None:
                continue
            cand_inputs = _project_inputs(inputs, candidate.universe)
            evals += 1
            if fails(candidate, cand_inputs):
                space, inputs = candidate, cand_inputs
                improved = True
                break
        if improved:
            continue
        for param in space.parameters:
            candidate = drop_parameter(space, param)
            if candidate is None:
                continue
            evals += 1
            if fails(candidate, inputs):
                space = candidate
                improved = True
                break
        if improved:
            continue
        for param in space.parameters:
            for obj in space.universe.objects:
                current = space.mapping.set_for(param).grade(obj)
                for snapped in snap_candidates(current):
                    candidate = snap_grade(space, param, obj, snapped)
                    if candidate is None:
                        continue
                    evals += 1
                    if fails(candidate, inputs):
                        space = candidate
                        improved = True
                        break
                if improved:
                    break
            if improved:
                break
        if improved:
            continue
        for attr in ("fuzzy_x", "fuzzy_y", "hypothesis_x"):
            fs = getattr(inputs, attr)
            if fs is None:
                continue
            for i, grade in enumerate(fs.grades):
                for snapped in snap_candidates(grade):
                    candidate = replace(inputs, **{attr: _replace_fuzzy_grade(fs, i, snapped)})
                    evals += 1
                    if fails(space, candidate):
                        inputs = candidate
                        improved = True
                        break
                if improved:
                    break
            if improved:
                break
    return space, inputs


@dataclass
class TheoremStats:
    theorem: str
    statement: str
    status: str
    trials: int = 0
    passes: int = 0
    failures: int = 0
    skips: int = 0
    skip_reasons: Dict[str, int] = field(default_factory=dict)
    first_counterexample: Optional[dict] = None

    def to_doc(self) -> dict:
        return {
            "theorem": self.theorem,
            "statement": self.statement,
            "status": self.status,
            "trials": self.trials,
            "passes": self.passes,
            "failures": self.failures,
            "skips": self.skips,
            "skip_reasons": dict(sorted(self.skip_reasons.items())),
            "first_counterexample": self.first_counterexample,
        }


@dataclass
class AuditReport:
    seed: int
    trials: int
    config: GenConfig
    stats: Dict[str, TheoremStats]
    wall_time: float

    @property
    def law_failures(self) -> List[str]:
        return [
            t for t, s in self.stats.items() if s.status == "law" and s.failures > 0
        ]

    @property
    def ok(self) -> bool:
        return not self.law_failures

    def to_doc(self) -> dict:
        return {
            "version": __version__,
            "schema_version": SCHEMA_VERSION,
            "seed": self.seed,
            "trials": self.trials,
            "config": {
                "universe_size": self.config.universe_size,
                "parameter_count": self.config.parameter_count,
                "grid_denominator": self.config.grid_denominator,
                "beta_policy": str(self.config.beta_policy),
                "covering_policy": self.config.covering_policy,
            },
            "ok": self.ok,
            "law_failures": self.law_failures,
            "wall_time_seconds": round(self.wall_time, 3),
            "theorems": {t: s.to_doc() for t, s in self.stats.items()},
        }


def _trial_seed(seed: int, trial: int) -> int:
    return (seed * 1_000_003 + trial) & 0xFFFFFFFFFFFFFFFF


def run_audit(
    config: GenConfig,
    theorems: Optional[Sequence[str]] = None,
    trials: int = 1000,
    shrink: bool = True,
) -> AuditReport:
    """Check the requested statements over freshly generated instances.

    Deterministic for a fixed (config, trials): trial seeds derive from
    the config seed and the trial index.  The first failure per theorem
    is shrunk and serialized for replay.
    """
    if trials < 1:
        raise ValueError("trials must be >= 1")
    if theorems is None:
        ids = all_theorem_ids()
    else:
        ids = list(theorems)
        for t in ids:
            if t not in REGISTRY:
                raise UnknownTheoremError(f"unknown theorem id {t!r}")
    stats = {
        t: TheoremStats(t, REGISTRY[t].statement, REGISTRY[t].status) for t in ids
    }
    start = time.perf_counter()
    for trial in range(trials):
        trial_config = replace(config, seed=_trial_seed(config.seed, trial))
        space = gen_space(trial_config)
        rng = random.Random(f"betacover-inputs:{config.seed}:{trial}")
        inputs = sample_inputs(space, rng, config.grid_denominator)
        ctx = TrialContext(space, inputs)
        for theorem in ids:
            result = REGISTRY[theorem].checker(ctx)
            entry = stats[theorem]
            entry.trials += 1
            if result.outcome == PASS:
                entry.passes += 1
            elif result.outcome == SKIP:
                entry.skips += 1
                reason = result.reason or "unspecified"
                entry.skip_reasons[reason] = entry.skip_reasons.get(reason, 0) + 1
            else:
                entry.failures += 1
                if entry.first_counterexample is None:
                    ce_space, ce_inputs = (
                        shrink_counterexample(theorem, space, inputs)
                        if shrink
                        else (space, inputs)
                    )
                    entry.first_counterexample = {
                        "theorem": theorem,
                        "trial": trial,
                        "space": space_to_doc(ce_space),
                        "inputs": inputs_to_doc(ce_inputs),
                        "detail": check(theorem, ce_space, ce_inputs).detail,
                    }
    wall = time.perf_counter() - start
    return AuditReport(config.seed, trials, config, stats, wall)
