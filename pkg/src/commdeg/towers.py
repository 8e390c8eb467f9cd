"""Truncated inverse systems of finite groups.

A profinite group is represented here by finitely many finite quotients
with surjective bonding maps; limit statements are reported as
stabilization-plus-monotonicity evidence over the computed levels, never
asserted as proven.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from commdeg.degrees import degree_bruteforce, degree_mn
from commdeg.errors import (
    AntitoneViolation,
    CrossCheckMismatch,
    IncompatiblePath,
    IncompatibleSelector,
    OrderCapExceeded,
)
from commdeg.groups import (
    DEFAULT_ORDER_CAP,
    GroupTable,
    Homomorphism,
    Subgroup,
    center,
    commutator_subgroup,
    conjugacy_classes,
    direct_product,
    power_map,
)
from commdeg.presets import cyclic, elementary, heisenberg_level, require_prime


@dataclass(frozen=True)
class Tower:
    """Finite levels, coarsest first, with bonds[k]: levels[k+1] -> levels[k]."""

    levels: tuple[GroupTable, ...]
    bonds: tuple[Homomorphism, ...]
    name: str = "tower"

    def __post_init__(self):
        if len(self.bonds) != len(self.levels) - 1:
            raise ValueError("need exactly one bond per adjacent level pair")
        for k, bond in enumerate(self.bonds):
            if bond.source is not self.levels[k + 1] or bond.target is not self.levels[k]:
                raise ValueError(f"bond {k} does not connect level {k + 2} to {k + 1}")
            if not bond.is_surjective():
                raise ValueError(f"bond {k} is not surjective")

    @property
    def depth(self) -> int:
        return len(self.levels)


@dataclass(frozen=True)
class TowerReport:
    """Per-level degrees of a tower, with monotonicity and stabilization."""

    degrees: tuple[Fraction, ...]
    is_antitone: bool
    stabilized_value: Fraction | None
    per_level_orders: tuple[int, ...]
    m: int = 1
    n: int = 1


def _check_depth_cap(p, depth, exponent, order_cap):
    cap = DEFAULT_ORDER_CAP if order_cap is None else order_cap
    if depth < 1 or depth > 4:
        raise ValueError("depth must be between 1 and 4")
    if p**exponent > cap:
        raise OrderCapExceeded(
            f"top level of order {p ** exponent} exceeds the cap {cap}"
        )


def heisenberg_tower(p: int, depth: int, order_cap: int | None = None) -> Tower:
    """Levels of triples (a, b, z), a and b mod p^k, z mod p.

    Bonds reduce a and b mod p^(k-1); the cocycle a*b' mod p only depends
    on a, b' mod p, so every bond is a homomorphism.
    """
    require_prime(p)
    _check_depth_cap(p, depth, 2 * depth + 1, order_cap)
    levels = [heisenberg_level(p, k) for k in range(1, depth + 1)]
    bonds = []
    for k in range(1, depth):
        hi, lo = levels[k], levels[k - 1]
        qhi, qlo = p**(k + 1), p**k
        idx = np.arange(hi.order)
        a, b, z = idx // (qhi * p), (idx // p) % qhi, idx % p
        image = ((a % qlo) * qlo + (b % qlo)) * p + z
        bonds.append(Homomorphism(hi, lo, image))
    return Tower(tuple(levels), tuple(bonds), name=f"heisenberg(p={p})")


def elementary_tower(p: int, depth: int, order_cap: int | None = None) -> Tower:
    """Levels (Z/p)^k with coordinate-forgetting bonds."""
    require_prime(p)
    _check_depth_cap(p, depth, depth, order_cap)
    levels = [elementary(p, k) for k in range(1, depth + 1)]
    bonds = []
    for k in range(1, depth):
        hi, lo = levels[k], levels[k - 1]
        image = np.arange(hi.order) % (p**k)
        bonds.append(Homomorphism(hi, lo, image))
    return Tower(tuple(levels), tuple(bonds), name=f"elementary(p={p})")


def cyclic_tower(
    p: int, depth: int, start: int = 1, order_cap: int | None = None
) -> Tower:
    """Levels Z/p^k for k = start .. start+depth-1, with reduction bonds.

    ``start`` picks where the truncation begins; the inverse system of all
    cyclic p-power quotients contains every such window.
    """
    require_prime(p)
    if start < 1:
        raise ValueError("start exponent must be >= 1")
    _check_depth_cap(p, depth, start + depth - 1, order_cap)
    exps = range(start, start + depth)
    levels = [cyclic(p**k) for k in exps]
    bonds = []
    for i, k in enumerate(list(exps)[:-1]):
        hi, lo = levels[i + 1], levels[i]
        image = np.arange(hi.order) % (p**k)
        bonds.append(Homomorphism(hi, lo, image))
    return Tower(tuple(levels), tuple(bonds), name=f"cyclic(p={p})")


def tower_degrees(
    t: Tower, m: int = 1, n: int = 1, stabilization_window: int = 2,
    order_cap: int | None = None,
) -> TowerReport:
    """Per-level exact degrees; raises AntitoneViolation if they increase.

    Level k is a quotient of level k+1, so the sequence must be
    non-increasing; a violation signals a construction bug, not a
    mathematical possibility.
    """
    degs = tuple(degree_mn(level, m, n, order_cap=order_cap).value for level in t.levels)
    for k in range(1, len(degs)):
        if degs[k] > degs[k - 1]:
            raise AntitoneViolation(
                f"degree rose from level {k} to {k + 1}: {degs[k - 1]} -> {degs[k]}"
            )
    stabilized = None
    w = stabilization_window
    if len(degs) >= w and len(set(degs[-w:])) == 1:
        stabilized = degs[-1]
    return TowerReport(
        degrees=degs,
        is_antitone=True,
        stabilized_value=stabilized,
        per_level_orders=tuple(level.order for level in t.levels),
        m=m,
        n=n,
    )


_SELECTORS = {
    "trivial": lambda G: Subgroup(G, (0,)),
    "center": center,
    "commutator": commutator_subgroup,
}


@dataclass(frozen=True)
class StraightnessReport:
    """Per-level fraction of elements whose n-th power lands in H_k.

    ``non_straight_evidence`` flags the desk-scale shadow of a positive-
    measure witness: the fractions stabilize at a positive value while
    the index of H_k keeps growing. Finitely many levels can only exhibit
    evidence, not certify the topological property.
    """

    power: int
    fractions: tuple[Fraction, ...]
    subgroup_indices: tuple[int, ...]
    non_straight_evidence: bool


def straightness_fraction(t: Tower, n: int, selector) -> StraightnessReport:
    """Fractions |{g : g^n in H_k}| / |G_k| for a bond-compatible selector.

    ``selector`` is "trivial", "center", "commutator", or a callable
    mapping a level to one of its Subgroups.
    """
    if n < 1:
        raise ValueError("power must be >= 1")
    if isinstance(selector, str):
        try:
            selector_fn = _SELECTORS[selector]
        except KeyError:
            raise IncompatibleSelector(
                f"unknown selector {selector!r}; known: {sorted(_SELECTORS)}"
            ) from None
    else:
        selector_fn = selector
    subs = [selector_fn(level) for level in t.levels]
    for k, bond in enumerate(t.bonds):
        lo_members = set(subs[k].members)
        mapped = {int(bond.image[g]) for g in subs[k + 1].members}
        if not mapped <= lo_members:
            raise IncompatibleSelector(
                f"bond {k} maps the selected subgroup outside its lower-level image"
            )
    fractions = []
    indices = []
    for level, sub in zip(t.levels, subs):
        memb = np.zeros(level.order, dtype=bool)
        memb[list(sub.members)] = True
        count = int(memb[power_map(level, n)].sum())
        fractions.append(Fraction(count, level.order))
        indices.append(level.order // sub.order)
    growing = all(indices[k] < indices[k + 1] for k in range(len(indices) - 1))
    stabilized_positive = (
        len(fractions) >= 2
        and fractions[-1] == fractions[-2]
        and fractions[-1] > 0
    )
    evidence = len(indices) >= 2 and growing and stabilized_positive
    return StraightnessReport(
        power=n,
        fractions=tuple(fractions),
        subgroup_indices=tuple(indices),
        non_straight_evidence=evidence,
    )


@dataclass(frozen=True)
class ClassGrowthReport:
    """Conjugacy class sizes of one element tracked along the tower."""

    element_path: tuple[int, ...]
    class_sizes: tuple[int, ...]
    stable: bool


def fc_class_growth(t: Tower, element_path) -> ClassGrowthReport:
    """Class size of a bond-compatible element at each level."""
    path = tuple(int(e) for e in element_path)
    if len(path) != t.depth:
        raise IncompatiblePath(
            f"path length {len(path)} does not match tower depth {t.depth}"
        )
    for k, bond in enumerate(t.bonds):
        if int(bond.image[path[k + 1]]) != path[k]:
            raise IncompatiblePath(
                f"bond {k} maps element {path[k + 1]} to"
                f" {int(bond.image[path[k + 1]])}, expected {path[k]}"
            )
    sizes = []
    for level, g in zip(t.levels, path):
        if not 0 <= g < level.order:
            raise IncompatiblePath(f"element {g} out of range at order {level.order}")
        for cls in conjugacy_classes(level):
            if g in cls:
                sizes.append(len(cls))
                break
    stable = len(sizes) >= 2 and sizes[-1] == sizes[-2]
    return ClassGrowthReport(element_path=path, class_sizes=tuple(sizes), stable=stable)


def product_degree_partials(factors, factor_groups=None) -> tuple[Fraction, ...]:
    """Partial products d1, d1*d2, ... of per-factor degrees.

    When ``factor_groups`` is supplied, the first two partials are
    re-counted by brute force on the explicit direct products and a
    mismatch raises CrossCheckMismatch.
    """
    fs = [Fraction(f) for f in factors]
    if any(not 0 <= f <= 1 for f in fs):
        raise ValueError("factors must lie in [0, 1]")
    partials = []
    acc = Fraction(1)
    for f in fs:
        acc *= f
        partials.append(acc)
    if factor_groups is not None:
        groups = list(factor_groups)[:2]
        prod = None
        for k, g in enumerate(groups):
            prod = g if prod is None else direct_product(prod, g)
            direct = degree_bruteforce(prod).value
            if direct != partials[k]:
                raise CrossCheckMismatch(
                    f"partial {k + 1} is {partials[k]} but the explicit"
                    f" product brute-forces to {direct}"
                )
    return tuple(partials)
