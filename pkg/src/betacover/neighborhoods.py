"""Fuzzy and crisp beta-neighborhood systems.

For each object x the fuzzy neighborhood is the pointwise meet of all
parameter sets whose grade at x dominates beta.  Because the product
order is partial, the selecting index set can be empty even in a valid
covering (the join may dominate beta while no single grade does); the
empty intersection is taken to be the top set [1,1]^U, and the affected
objects are surfaced as metadata.

The complementary neighborhood is the transpose of the fuzzy
neighborhood matrix.  Crisp neighborhoods threshold the fuzzy grades at
beta; the crisp complementary neighborhood is defined by the same
thresholding applied to the transpose.
"""

from __future__ import annotations

from typing import Dict, List, Tuple

from .fuzzysets import CrispSubset, IVFuzzySet
from .intervals import TOP, IntervalValue, leq_bool
from .space import SoftSpace


def crisp_of(g: IVFuzzySet, beta: IntervalValue) -> CrispSubset:
    """{y : beta <= g(y)} - the beta-cut of an arbitrary fuzzy set."""
    return CrispSubset(
        g.universe,
        frozenset(o for o, v in zip(g.universe.objects, g.grades) if leq_bool(beta, v)),
    )


def _fuzzy_row(space: SoftSpace, i: int) -> Tuple[Tuple[IntervalValue, ...], bool]:
    """Meet of selected parameter sets for object index i.

    Returns the grade row plus a flag marking the empty-index convention.
    """
    beta = space.beta
    selected = [fs for fs in space.mapping.assignment if leq_bool(beta, fs.at(i))]
    n = len(space.universe)
    if not selected:
        return tuple(TOP for _ in range(n)), True
    lo_rows = [[g.lo for g in fs.grades] for fs in selected]
    hi_rows = [[g.hi for g in fs.grades] for fs in selected]
    row = tuple(
        IntervalValue(min(r[j] for r in lo_rows), min(r[j] for r in hi_rows))
        for j in range(n)
    )
    return row, False


class NeighborhoodSystem:
    """Eagerly computed neighborhood matrices for one space.

    Immutable after construction; approximation operators consume the
    whole grade matrix, so rows, transposes, complements and crisp index
    sets are all precomputed once.
    """

    def __init__(self, space: SoftSpace):
        self.space = space
        universe = space.universe
        n = len(universe)
        rows: List[Tuple[IntervalValue, ...]] = []
        empty: List[str] = []
        for i, obj in enumerate(universe.objects):
            row, used_convention = _fuzzy_row(space, i)
            rows.append(row)
            if used_convention:
                empty.append(obj)
        self._n = tuple(rows)
        self._m = tuple(
            tuple(rows[j][i] for j in range(n)) for i in range(n)
        )
        self._nc = tuple(tuple(v.complement() for v in row) for row in self._n)
        self._mc = tuple(tuple(v.complement() for v in row) for row in self._m)
        beta = space.beta
        self._crisp = tuple(
            frozenset(j for j in range(n) if leq_bool(beta, row[j])) for row in self._n
        )
        self._crisp_co = tuple(
            frozenset(j for j in range(n) if leq_bool(beta, row[j])) for row in self._m
        )
        self.empty_index_objects = frozenset(empty)

    # -- fuzzy accessors -------------------------------------------------

    def fuzzy_row(self, i: int) -> Tuple[IntervalValue, ...]:
        return self._n[i]

    def fuzzy_neighborhood(self, obj: str) -> IVFuzzySet:
        return IVFuzzySet(self.space.universe, self._n[self.space.universe.index(obj)])

    def complementary_fuzzy_neighborhood(self, obj: str) -> IVFuzzySet:
        return IVFuzzySet(self.space.universe, self._m[self.space.universe.index(obj)])

    # -- crisp accessors -------------------------------------------------

    def crisp_indices(self, i: int) -> frozenset:
        return self._crisp[i]

    def crisp_neighborhood(self, obj: str) -> CrispSubset:
        u = self.space.universe
        return CrispSubset(u, frozenset(u.objects[j] for j in self._crisp[u.index(obj)]))

    def complementary_crisp_neighborhood(self, obj: str) -> CrispSubset:
        u = self.space.universe
        return CrispSubset(u, frozenset(u.objects[j] for j in self._crisp_co[u.index(obj)]))

    def matrix_json(self) -> Dict[str, Dict[str, str]]:
        """Full fuzzy grade matrix as nested text literals."""
        u = self.space.universe.objects
        return {
            x: {y: self._n[i][j].text() for j, y in enumerate(u)}
            for i, x in enumerate(u)
        }


# Lazy per-object entry points (no full-matrix precomputation); useful for
# large spaces where only a few neighborhoods are needed.


def fuzzy_neighborhood(space: SoftSpace, obj: str) -> IVFuzzySet:
    row, _ = _fuzzy_row(space, space.universe.index(obj))
    return IVFuzzySet(space.universe, row)


def crisp_neighborhood(space: SoftSpace, obj: str) -> CrispSubset:
    return crisp_of(fuzzy_neighborhood(space, obj), space.beta)


def complementary_fuzzy_neighborhood(space: SoftSpace, obj: str) -> IVFuzzySet:
    i = space.universe.index(obj)
    grades = tuple(
        _fuzzy_row(space, j)[0][i] for j in range(len(space.universe))
    )
    return IVFuzzySet(space.universe, grades)


def complementary_crisp_neighborhood(space: SoftSpace, obj: str) -> CrispSubset:
    return crisp_of(complementary_fuzzy_neighborhood(space, obj), space.beta)
