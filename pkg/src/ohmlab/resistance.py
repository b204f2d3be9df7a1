"""Effective-resistance metric and global resistance of weighted graphs.

The canonical route eliminates all vertices except the probed pair from the
Laplacian: with the pair relabeled to positions 0 and 1 and blocks

    H = [[M, J'], [J, L]],

the minimal energy of a potential pinned to 1 and 0 at the pair is
``<(M - J' L^-1 J) f0, f0>`` with ``f0 = (1, 0)``, and the resistance
distance is its reciprocal. A grounded-node solve provides a numerically
independent second route, and series-parallel closed forms cover cycles.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .graphs import DisconnectedGraphError, GraphError, WeightedGraph, is_connected, laplacian
from .linalg import NotPositiveDefiniteError, solve_spd

ILL_CONDITIONED_PIVOT_RATIO = 1e14


class IllConditionedWarning(RuntimeWarning):
    """Extreme conductance ratios made the eliminated block nearly singular."""


@dataclass(frozen=True)
class ResistanceReport:
    """Resistance distance of one vertex pair and the minimizing energy (its reciprocal)."""

    pair: tuple[int, int]
    value: float
    energy_min: float


def _check_pair(g: WeightedGraph, i: int, j: int) -> None:
    if not (0 <= i < g.n and 0 <= j < g.n):
        raise GraphError(f"vertex pair ({i}, {j}) out of range for n={g.n}")
    if i == j:
        raise GraphError("resistance distance requires two distinct vertices")


def _require_connected(g: WeightedGraph) -> None:
    if not is_connected(g):
        raise DisconnectedGraphError("graph is not connected")


def _schur_energy(h: np.ndarray, n: int, i: int, j: int) -> float:
    """Minimal pinned energy by block elimination of every vertex except i, j."""
    order = [i, j] + [k for k in range(n) if k != i and k != j]
    hp = h[np.ix_(order, order)]
    m = hp[:2, :2]
    if n == 2:
        return float(m[0, 0])
    jblk = hp[2:, :2]
    lblk = hp[2:, 2:]
    try:
        x, pivot_ratio = solve_spd(lblk, jblk, return_pivot_ratio=True)
    except NotPositiveDefiniteError as exc:
        raise DisconnectedGraphError(
            "eliminated block is not positive definite (graph disconnected?)"
        ) from exc
    if pivot_ratio > ILL_CONDITIONED_PIVOT_RATIO:
        warnings.warn(
            f"eliminated block is ill conditioned (pivot ratio {pivot_ratio:.3e}); "
            "resistance values may lose accuracy",
            IllConditionedWarning,
            stacklevel=3,
        )
    schur = m - jblk.T @ x
    return float(schur[0, 0])


def effective_resistance(g: WeightedGraph, i: int, j: int) -> ResistanceReport:
    """Resistance distance between vertices i and j with the minimizing energy."""
    _check_pair(g, i, j)
    _require_connected(g)
    energy_min = _schur_energy(laplacian(g).entries, g.n, i, j)
    return ResistanceReport(pair=(i, j), value=1.0 / energy_min, energy_min=energy_min)


def effective_resistance_oracle(g: WeightedGraph, i: int, j: int) -> float:
    """Resistance distance by grounding vertex j and injecting unit current at i.

    Deletes row and column j from the Laplacian and solves the remaining
    system with a general (LU) solver, giving a route through entirely
    different arithmetic than :func:`effective_resistance`.
    """
    _check_pair(g, i, j)
    _require_connected(g)
    h = laplacian(g).entries
    keep = [k for k in range(g.n) if k != j]
    reduced = h[np.ix_(keep, keep)]
    rhs = np.zeros(g.n - 1)
    pos = keep.index(i)
    rhs[pos] = 1.0
    potential = np.linalg.solve(reduced, rhs)
    return float(potential[pos])


def global_resistance(g: WeightedGraph) -> float:
    """Sum of resistance distances over adjacent vertex pairs only."""
    if not g.edges:
        raise GraphError("global resistance needs at least one edge")
    _require_connected(g)
    h = laplacian(g).entries
    total = 0.0
    for i, j, _ in g.edges:
        total += 1.0 / _schur_energy(h, g.n, i, j)
    return total


def three_cycle_rho(c01: float, c02: float, c12: float) -> float:
    """Global resistance of a 3-cycle: 2(c01+c02+c12) / (c01*c02 + c01*c12 + c02*c12)."""
    for c in (c01, c02, c12):
        if not c > 0.0:
            raise GraphError(f"conductances must be positive, got {c!r}")
    return 2.0 * (c01 + c02 + c12) / (c01 * c02 + c01 * c12 + c02 * c12)


def cycle_rho_closed_form(conductances: Sequence[float]) -> float:
    """Global resistance of an n-cycle by series-parallel reduction.

    With edge resistances r_e = 1/c_e and R their sum, each adjacent pair
    sees r_e (R - r_e) / R, so the total is R - (sum of r_e^2) / R.
    """
    c = np.asarray(conductances, dtype=float)
    if c.ndim != 1 or c.size < 3:
        raise GraphError(f"a cycle needs at least 3 conductances, got {c.size}")
    if not np.all(c > 0.0):
        raise GraphError("conductances must all be positive")
    r = 1.0 / c
    total = float(r.sum())
    return total - float(r @ r) / total


def metric_check(g: WeightedGraph, tol: float = 1e-10) -> bool:
    """Numerically confirm the resistance distance is a metric on the vertices.

    Checks symmetry (both orientations computed independently) and the
    triangle inequality over all vertex triples, each with slack ``tol``.
    """
    _require_connected(g)
    h = laplacian(g).entries
    d = np.zeros((g.n, g.n))
    for a in range(g.n):
        for b in range(g.n):
            if a != b:
                d[a, b] = 1.0 / _schur_energy(h, g.n, a, b)
    if np.max(np.abs(d - d.T)) > tol:
        return False
    for a in range(g.n):
        for b in range(g.n):
            if b == a:
                continue
            for c in range(g.n):
                if c == a or c == b:
                    continue
                if d[a, c] > d[a, b] + d[b, c] + tol:
                    return False
    return True
