"""Finite group actions: orbits, isotropy, fixed sets, and the two exact
evaluations of the probability that a random (g, x) pair satisfies g.x = x.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from commdeg.degrees import Distribution
from commdeg.groups import GroupTable, Subgroup

# Composition law act[g][act[h][x]] == act[gh][x] is checked exhaustively
# while |G| * setSize stays below this bound, sampled above it.
_EXHAUSTIVE_MAX = 10**6
_SAMPLE_TRIPLES = 200_000


class FiniteAction:
    """A finite group acting on a finite set via a |G| x setSize table."""

    __slots__ = ("group", "set_size", "act")

    def __init__(self, group: GroupTable, act):
        act = np.ascontiguousarray(act, dtype=np.int32)
        if act.shape[0] != group.order or act.ndim != 2:
            raise ValueError("action table must have one row per group element")
        n, x = act.shape
        idx = np.arange(x, dtype=np.int32)
        if not np.array_equal(np.sort(act, axis=1), np.broadcast_to(idx, (n, x))):
            raise ValueError("some action row is not a permutation of the set")
        if not np.array_equal(act[0], idx):
            raise ValueError("identity row must be the identity permutation")
        if n * x <= _EXHAUSTIVE_MAX:
            for h in range(n):
                if not np.array_equal(act[group.mult[:, h]], act[:, act[h]]):
                    raise ValueError(f"action law fails against element {h}")
        else:
            rng = np.random.default_rng(n * 0x9E3779B1 + x)
            g, h = rng.integers(0, n, size=(2, _SAMPLE_TRIPLES))
            p = rng.integers(0, x, size=_SAMPLE_TRIPLES)
            lhs = act[g, act[h, p]]
            rhs = act[group.mult[g, h], p]
            if not np.array_equal(lhs, rhs):
                raise ValueError("action law fails on a sampled triple")
        self.group = group
        self.set_size = x
        act = act.copy()
        act.flags.writeable = False
        self.act = act

    def __repr__(self):
        return f"FiniteAction({self.group.name} on {self.set_size} points)"


def conjugation_action(G: GroupTable) -> FiniteAction:
    """G acting on itself by g.x = g x g^-1."""
    act = G.mult[G.mult[:, :], np.broadcast_to(G.inv[:, None], (G.order, G.order))]
    return FiniteAction(G, act)


def translation_action(G: GroupTable) -> FiniteAction:
    """The regular action g.x = g x."""
    return FiniteAction(G, G.mult)


def orbits(a: FiniteAction) -> list[tuple[int, ...]]:
    """Orbit partition of the point set, ordered by least point."""
    seen = np.zeros(a.set_size, dtype=bool)
    out = []
    for x in range(a.set_size):
        if seen[x]:
            continue
        orb = np.unique(a.act[:, x])
        seen[orb] = True
        out.append(tuple(int(v) for v in orb))
    return out


def isotropy(a: FiniteAction, x: int) -> Subgroup:
    """G_x, the stabilizer of point x."""
    if not 0 <= x < a.set_size:
        raise IndexError(f"point index {x} out of range")
    return Subgroup(a.group, np.flatnonzero(a.act[:, x] == x))


def fixed_set(a: FiniteAction, g: int) -> tuple[int, ...]:
    """X_g, the points fixed by g."""
    if not 0 <= g < a.group.order:
        raise IndexError(f"group index {g} out of range")
    pts = np.flatnonzero(a.act[g] == np.arange(a.set_size))
    return tuple(int(v) for v in pts)


def point_measure(weights) -> tuple[Fraction, ...]:
    """Validate a rational probability vector on the point set."""
    ws = tuple(Fraction(w) for w in weights)
    if any(w < 0 for w in ws):
        raise ValueError("point weights must be nonnegative")
    if sum(ws) != 1:
        raise ValueError("point weights must sum to exactly 1")
    return ws


def _check_measures(a: FiniteAction, mu: Distribution, nu) -> tuple[Fraction, ...]:
    if mu.group is not a.group:
        raise ValueError("mu must be a distribution on the acting group")
    nu = point_measure(nu)
    if len(nu) != a.set_size:
        raise ValueError("nu length must equal the point-set size")
    return nu


def equalizer_prob_via_points(a: FiniteAction, mu: Distribution, nu) -> Fraction:
    """P(g.x = x) integrated over points: sum_x nu(x) * mu(G_x)."""
    nu = _check_measures(a, mu, nu)
    total = Fraction(0)
    for x in range(a.set_size):
        if nu[x] == 0:
            continue
        total += nu[x] * mu.mass(isotropy(a, x).members)
    return total


def equalizer_prob_via_group(a: FiniteAction, mu: Distribution, nu) -> Fraction:
    """Same probability integrated over the group: sum_g mu(g) * nu(X_g)."""
    nu = _check_measures(a, mu, nu)
    total = Fraction(0)
    for g in range(a.group.order):
        if mu.weights[g] == 0:
            continue
        total += mu.weights[g] * sum((nu[x] for x in fixed_set(a, g)), Fraction(0))
    return total


@dataclass(frozen=True)
class FiniteOrbitReport:
    """All points with finite orbit (everything, here) plus orbit sizes."""

    points: tuple[int, ...]
    orbit_sizes: tuple[int, ...]


def finite_orbit_set(a: FiniteAction) -> FiniteOrbitReport:
    """Per-point orbit sizes; in the finite setting every orbit is finite.

    Kept for interface symmetry with the tower module, where orbit growth
    across levels is the interesting signal.
    """
    size_of = {}
    for orb in orbits(a):
        for x in orb:
            size_of[x] = len(orb)
    pts = tuple(range(a.set_size))
    return FiniteOrbitReport(points=pts, orbit_sizes=tuple(size_of[x] for x in pts))


def orbit_count(a: FiniteAction) -> int:
    return len(orbits(a))
