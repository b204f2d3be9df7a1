"""Parametrized conductance families on cycles with fixed global resistance.

Each family fixes all but one edge conductance through formulas in a single
parameter and solves the remaining one so that the cycle's global resistance
hits a target value. Constraint solvers are the source of truth for the free
conductance; the catalogued closed-form expressions for families ``fig2`` and
``fig4`` fail the constant-resistance check and are kept only as reference
curves so the discrepancy stays visible (see ``reference_conductance``).

Conductance tuples for 3-cycles are ordered (c01, c02, c12), matching
``three_cycle_rho``; longer cycles use edge order (c01, c12, ..., c_{n-1,0}).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, NamedTuple, Sequence

import numpy as np

from .graphs import WeightedGraph, build_graph, cycle, laplacian
from .linalg import SymmetricMatrix, eigen_sym
from .resistance import global_resistance

THREE_CYCLE_TARGET_RHO = 2.0
FOUR_CYCLE_TARGET_RHO = 3.0
_DENOMINATOR_FLOOR = 1e-14


class InfeasibleFamilyError(ValueError):
    """The requested parameters admit no positive conductance solution."""


@dataclass(frozen=True)
class CyclePoint:
    """One realized family member: conductances, spectrum, global resistance, products."""

    family: str
    parameter: float
    conductances: tuple[float, ...]
    rho: float
    eigenvalues: tuple[float, ...]
    products: tuple[float, ...]

    @property
    def lambda1_rho(self) -> float:
        return self.products[0]

    @property
    def lambdamax_rho(self) -> float:
        return self.products[-1]


@dataclass(frozen=True)
class FamilySpec:
    """Declarative family: fixed-edge formulas plus one solved edge and a target rho."""

    name: str
    n: int
    fixed: tuple[tuple[int, Callable[[float], float]], ...]
    solved_edge: int
    target_rho: float

    def __post_init__(self):
        if not self.target_rho > 0.0:
            raise ValueError("target rho must be positive")
        indices = {idx for idx, _ in self.fixed} | {self.solved_edge}
        if len(self.fixed) != self.n - 1 or len(indices) != self.n:
            raise ValueError("family must fix all edges except exactly one")


class ClosedFormEigenvalues(NamedTuple):
    """Positive eigenvalues of the two-equal family, raw and ascending."""

    values: tuple[float, float]
    ordered: tuple[float, float]


def three_cycle_graph(c01: float, c02: float, c12: float) -> WeightedGraph:
    """3-cycle from the (c01, c02, c12) conductance triple."""
    return build_graph(3, [(0, 1, c01), (0, 2, c02), (1, 2, c12)])


def three_cycle_laplacian(c01: float, c02: float, c12: float) -> SymmetricMatrix:
    """Laplacian of the 3-cycle without going through graph construction."""
    return SymmetricMatrix(np.array([
        [c01 + c02, -c01, -c02],
        [-c01, c01 + c12, -c12],
        [-c02, -c12, c02 + c12],
    ]))


def _graph_from_tuple(n: int, conductances: Sequence[float]) -> WeightedGraph:
    if n == 3:
        return three_cycle_graph(*conductances)
    return cycle(n, list(conductances))


def _realize(family: str, n: int, parameter: float,
             conductances: Sequence[float]) -> CyclePoint:
    values = tuple(float(c) for c in conductances)
    for c in values:
        if not (np.isfinite(c) and c > 0.0):
            raise InfeasibleFamilyError(
                f"family {family!r} at parameter {parameter!r}: "
                f"conductances {values} are not all positive"
            )
    graph = _graph_from_tuple(n, values)
    spectrum = eigen_sym(laplacian(graph))
    rho = global_resistance(graph)
    eigenvalues = tuple(float(x) for x in spectrum.eigenvalues)
    products = tuple(x * rho for x in eigenvalues[1:])
    return CyclePoint(
        family=family,
        parameter=float(parameter),
        conductances=values,
        rho=rho,
        eigenvalues=eigenvalues,
        products=products,
    )


def two_equal_family(b: float) -> CyclePoint:
    """3-cycle with two conductances b and the third b(2-b)/(2b-1), so rho = 2.

    Positivity of the solved conductance restricts b to the open interval
    (1/2, 2); b = 2 would give a zero conductance, i.e. a path, and is
    rejected even though the limit is well defined.
    """
    b = float(b)
    if not 0.5 < b < 2.0:
        raise InfeasibleFamilyError(
            f"two-equal family needs b strictly inside (1/2, 2), got {b!r}"
        )
    c01 = b * (2.0 - b) / (2.0 * b - 1.0)
    return _realize("two-equal", 3, b, (c01, b, b))


def two_equal_eigenvalues(b: float) -> ClosedFormEigenvalues:
    """Closed-form positive eigenvalues 3b/(2b-1) and 3b of the two-equal family.

    ``values`` keeps that fixed order; ``ordered`` sorts ascending, so
    ``ordered[0]`` is 3b for b <= 1 and 3b/(2b-1) for b >= 1.
    """
    b = float(b)
    if not 0.5 < b < 2.0:
        raise InfeasibleFamilyError(
            f"two-equal family needs b strictly inside (1/2, 2), got {b!r}"
        )
    pair = (3.0 * b / (2.0 * b - 1.0), 3.0 * b)
    lo, hi = sorted(pair)
    return ClosedFormEigenvalues(values=pair, ordered=(lo, hi))


def solve_third_conductance(x: float, y: float, target_rho: float) -> float:
    """Conductance z making the 3-cycle (z, x, y) have global resistance target_rho.

    Solves 2(z+x+y) = rho (zx + zy + xy) for z; infeasible pairs (vanishing
    denominator or non-positive z) raise :class:`InfeasibleFamilyError`.
    """
    if not (x > 0.0 and y > 0.0):
        raise InfeasibleFamilyError(f"fixed conductances must be positive, got ({x!r}, {y!r})")
    if not target_rho > 0.0:
        raise InfeasibleFamilyError(f"target rho must be positive, got {target_rho!r}")
    denominator = 2.0 - target_rho * (x + y)
    if abs(denominator) <= _DENOMINATOR_FLOOR:
        raise InfeasibleFamilyError(
            f"infeasible pair for target rho: denominator {denominator!r} vanishes "
            f"at (x={x!r}, y={y!r}, rho={target_rho!r})"
        )
    z = (target_rho * x * y - 2.0 * (x + y)) / denominator
    if not z > 0.0:
        raise InfeasibleFamilyError(
            f"infeasible pair for target rho: solved conductance {z!r} is not positive "
            f"at (x={x!r}, y={y!r}, rho={target_rho!r})"
        )
    return z


def solve_last_cycle_conductance(known: Sequence[float], target_rho: float) -> float:
    """Remaining conductance of an n-cycle with n-1 edges known and rho prescribed.

    In resistance terms, with S and P the sum and sum of squares of the known
    edge resistances, the missing resistance is t = (rho S - S^2 + P)/(2S - rho).
    """
    c = np.asarray(known, dtype=float)
    if c.ndim != 1 or c.size < 2:
        raise InfeasibleFamilyError(f"need at least 2 known conductances, got {c.size}")
    if not np.all(c > 0.0):
        raise InfeasibleFamilyError("known conductances must all be positive")
    if not target_rho > 0.0:
        raise InfeasibleFamilyError(f"target rho must be positive, got {target_rho!r}")
    r = 1.0 / c
    s = float(r.sum())
    p = float(r @ r)
    denominator = 2.0 * s - target_rho
    if abs(denominator) <= _DENOMINATOR_FLOOR:
        raise InfeasibleFamilyError(
            f"infeasible known edges for target rho: denominator {denominator!r} vanishes "
            f"(S={s!r}, rho={target_rho!r})"
        )
    t = (target_rho * s - s * s + p) / denominator
    if not t > 0.0:
        raise InfeasibleFamilyError(
            f"infeasible known edges for target rho: solved resistance {t!r} is not positive "
            f"(S={s!r}, P={p!r}, rho={target_rho!r})"
        )
    return 1.0 / t


FIGURE_FAMILIES: dict[str, FamilySpec] = {
    # 3-cycles, rho = 2; edge positions are (0: c01, 1: c02, 2: c12).
    "fig1": FamilySpec("fig1", 3, ((1, lambda b: b), (2, lambda b: b)), 0, THREE_CYCLE_TARGET_RHO),
    "fig2": FamilySpec("fig2", 3, ((1, lambda r: r), (2, lambda r: 1.5)), 0, THREE_CYCLE_TARGET_RHO),
    "fig3": FamilySpec("fig3", 3, ((0, lambda r: 0.75), (1, lambda r: r)), 2, THREE_CYCLE_TARGET_RHO),
    # 4-cycles, rho = 3; edge positions are (0: c01, 1: c12, 2: c23, 3: c03).
    "fig4": FamilySpec("fig4", 4, ((1, lambda c: 1.0 / c), (2, lambda c: c), (3, lambda c: 1.0)), 0,
                       FOUR_CYCLE_TARGET_RHO),
    "fig5": FamilySpec("fig5", 4, ((1, lambda c: 1.0 / c), (2, lambda c: c), (3, lambda c: (c + 1.0) / 2.0)), 0,
                       FOUR_CYCLE_TARGET_RHO),
}

# Catalogued closed forms for the solved edge. fig1 and fig3 agree with the
# constraint solver; the fig2 and fig4 expressions do NOT satisfy the family's
# fixed global resistance and are emitted only for comparison.
REFERENCE_FORMULAS: dict[str, Callable[[float], float]] = {
    "fig1": lambda b: b * (2.0 - b) / (2.0 * b - 1.0),
    "fig2": lambda r: (3.0 - r) / (r + 1.0),
    "fig3": lambda r: (r + 3.0) / (4.0 * r - 1.0),
    "fig4": lambda c: (1.0 + c * c - c) / (1.0 + c * c + c),
}

#: Families whose catalogued formula disagrees with the constraint solver.
DISPUTED_REFERENCES = frozenset({"fig2", "fig4"})


def reference_conductance(family: str, param: float) -> float | None:
    """Catalogued closed-form value of the solved edge, or None if not catalogued."""
    formula = REFERENCE_FORMULAS.get(family)
    if formula is None:
        return None
    try:
        return float(formula(float(param)))
    except ZeroDivisionError:
        return math.nan


def figure_family(family: str, param: float) -> CyclePoint:
    """Realize one parameter value of a catalogued figure family.

    The free edge always comes from the constraint solver, so every returned
    point satisfies the family's target global resistance to round-off.
    """
    try:
        spec = FIGURE_FAMILIES[family]
    except KeyError:
        raise ValueError(
            f"unknown family {family!r}; choose from {sorted(FIGURE_FAMILIES)}"
        ) from None
    param = float(param)
    conductances: list[float | None] = [None] * spec.n
    for idx, formula in spec.fixed:
        value = float(formula(param))
        if not (np.isfinite(value) and value > 0.0):
            raise InfeasibleFamilyError(
                f"family {family!r} at parameter {param!r}: fixed edge {idx} "
                f"has non-positive value {value!r}"
            )
        conductances[idx] = value
    known = [c for c in conductances if c is not None]
    if spec.n == 3:
        solved = solve_third_conductance(known[0], known[1], spec.target_rho)
    else:
        solved = solve_last_cycle_conductance(known, spec.target_rho)
    conductances[spec.solved_edge] = solved
    return _realize(family, spec.n, param, conductances)
