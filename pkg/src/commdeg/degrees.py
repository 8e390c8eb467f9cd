"""Commuting probabilities with exact rational arithmetic.

Three independent exact routes to the same number (pair count, centralizer
index sum, central-coset decomposition) plus the power-pair variants and
their pushforward cross-check. No floating point anywhere in this module:
every value is a reduced Fraction whose denominator divides |G|^2.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from commdeg import kernels
from commdeg.errors import CrossCheckMismatch, OrderCapExceeded
from commdeg.groups import (
    DEFAULT_ORDER_CAP,
    GroupTable,
    center,
    centralizer,
    conjugacy_classes,
    direct_product,
    power_map,
    semidirect_product,
)
from commdeg.presets import cyclic

Rational = Fraction

# Above this order, plain pair counting switches to class-size aggregation
# (number of commuting pairs = sum over classes of |C| * |Z(rep)|).
_PAIRWISE_MAX = 2000


def _check_cap(G: GroupTable, order_cap) -> None:
    cap = DEFAULT_ORDER_CAP if order_cap is None else order_cap
    if G.order > cap:
        raise OrderCapExceeded(
            f"group of order {G.order} exceeds the counting cap {cap}"
        )


@dataclass(frozen=True)
class Distribution:
    """Probability measure on a finite group with exact rational weights."""

    group: GroupTable
    weights: tuple[Fraction, ...]

    def __post_init__(self):
        if len(self.weights) != self.group.order:
            raise ValueError("weight vector length must equal the group order")
        if any(w < 0 for w in self.weights):
            raise ValueError("weights must be nonnegative")
        if sum(self.weights) != 1:
            raise ValueError("weights must sum to exactly 1")

    def mass(self, members) -> Fraction:
        return sum((self.weights[m] for m in members), Fraction(0))

    def support(self) -> tuple[int, ...]:
        return tuple(i for i, w in enumerate(self.weights) if w > 0)


@dataclass(frozen=True)
class DegreeReport:
    """An exact commuting probability plus how it was obtained."""

    value: Fraction
    method: str
    group_name: str
    group_order: int
    m: int = 1
    n: int = 1
    breakdown: tuple[tuple[int, Fraction], ...] | None = None

    def __post_init__(self):
        if not 0 <= self.value <= 1:
            raise ValueError("degree must lie in [0, 1]")
        if (self.group_order**2) % self.value.denominator != 0:
            raise ValueError("denominator must divide |G|^2")


def haar(G: GroupTable) -> Distribution:
    """Uniform distribution: the Haar measure of a finite group."""
    w = Fraction(1, G.order)
    return Distribution(G, (w,) * G.order)


def _commuting_pair_count(G: GroupTable) -> int:
    if G.order <= _PAIRWISE_MAX:
        return int(kernels.count_commuting_pairs(G.mult))
    total = 0
    for cls in conjugacy_classes(G):
        total += len(cls) * centralizer(G, cls[0]).order
    return total


def degree_bruteforce(G: GroupTable, order_cap: int | None = None) -> DegreeReport:
    """d(G) by exhaustive ordered-pair counting."""
    _check_cap(G, order_cap)
    count = _commuting_pair_count(G)
    return DegreeReport(
        value=Fraction(count, G.order**2),
        method="bruteforce",
        group_name=G.name,
        group_order=G.order,
    )


def degree_centralizer_sum(G: GroupTable) -> DegreeReport:
    """d(G) = (1/|G|) * sum over g of 1/[G : Z(g, G)]."""
    sizes = kernels.centralizer_sizes(G.mult)
    acc = Fraction(0)
    for size in sizes:
        acc += Fraction(1, G.order // int(size))
    return DegreeReport(
        value=acc / G.order,
        method="centralizer_sum",
        group_name=G.name,
        group_order=G.order,
    )


def central_coset_representatives(G: GroupTable) -> list[int]:
    """Least-index representatives of the cosets of the center, ascending."""
    zmemb = np.array(center(G).members, dtype=np.int32)
    assigned = np.zeros(G.order, dtype=bool)
    reps = []
    for g in range(G.order):
        if assigned[g]:
            continue
        assigned[G.mult[g, zmemb]] = True
        reps.append(g)
    return reps


def degree_structural(G: GroupTable) -> DegreeReport:
    """d(G) from the central-coset decomposition.

    One representative g_j per coset of the center contributes
    1/[G : Z(g_j, G)]; the total is averaged over the coset count. The
    value is representative-independent because the centralizer index is
    constant on each coset.
    """
    reps = central_coset_representatives(G)
    breakdown = []
    acc = Fraction(0)
    for g in reps:
        term = Fraction(1, centralizer(G, g).index)
        breakdown.append((g, term))
        acc += term
    return DegreeReport(
        value=acc / len(reps),
        method="structural",
        group_name=G.name,
        group_order=G.order,
        breakdown=tuple(breakdown),
    )


def pushforward_power(G: GroupTable, n: int) -> Distribution:
    """Distribution of x^n when x is Haar-distributed."""
    counts = np.bincount(power_map(G, n), minlength=G.order)
    return Distribution(G, tuple(Fraction(int(c), G.order) for c in counts))


def degree_mn(
    G: GroupTable, m: int, n: int, order_cap: int | None = None
) -> DegreeReport:
    """Probability that x^m and y^n commute, by exhaustive pair count."""
    if m < 1 or n < 1:
        raise ValueError("powers must be >= 1")
    _check_cap(G, order_cap)
    pm = power_map(G, m)
    pn = power_map(G, n)
    count = int(kernels.count_commuting_pairs_mn(G.mult, pm, pn))
    return DegreeReport(
        value=Fraction(count, G.order**2),
        method="bruteforce",
        group_name=G.name,
        group_order=G.order,
        m=m,
        n=n,
    )


def degree_mn_pushforward(G: GroupTable, m: int, n: int) -> DegreeReport:
    """Same probability evaluated on the pushforward measures.

    Computes sum over commuting (u, v) of mu1(u) * mu2(v) where mu1 and
    mu2 are the m-th and n-th power pushforwards of Haar measure.
    """
    if m < 1 or n < 1:
        raise ValueError("powers must be >= 1")
    n_ord = G.order
    mu1 = pushforward_power(G, m)
    mu2 = pushforward_power(G, n)
    cm = np.array([int(w * n_ord) for w in mu1.weights], dtype=np.int64)
    cn = np.array([int(w * n_ord) for w in mu2.weights], dtype=np.int64)
    total = 0
    block = max(1, (1 << 24) // n_ord)
    for start in range(0, n_ord, block):
        stop = min(start + block, n_ord)
        commute = G.mult[start:stop, :] == G.mult[:, start:stop].T
        total += int(cm[start:stop] @ commute @ cn)
    return DegreeReport(
        value=Fraction(total, n_ord**2),
        method="pushforward",
        group_name=G.name,
        group_order=G.order,
        m=m,
        n=n,
    )


def degree_of_product(
    A: GroupTable, B: GroupTable, verify: bool = False, order_cap: int | None = None
) -> Fraction:
    """d(A x B) = d(A) * d(B); optionally re-counted on the explicit product."""
    value = degree_bruteforce(A, order_cap).value * degree_bruteforce(B, order_cap).value
    if verify:
        direct = degree_bruteforce(direct_product(A, B), order_cap).value
        if direct != value:
            raise CrossCheckMismatch(
                f"product degree {value} != explicit product count {direct}"
            )
    return value


# ---------------------------------------------------------------------------
# Inversion-flip semidirect audit


@dataclass(frozen=True)
class SignFlipAudit:
    """Brute-force audit of d(A x| {1,-1}) for cyclic A against two closed forms.

    With t the fraction of 2-torsion in A, the pair count gives
    (1 + 3t)/4; the competing expansion ((1 + t)/2)^2 agrees only at t = 0.
    """

    a_order: int
    t: Fraction
    value: Fraction
    linear_form: Fraction
    square_form: Fraction

    @property
    def matches_linear(self) -> bool:
        return self.value == self.linear_form

    @property
    def matches_square(self) -> bool:
        return self.value == self.square_form

    def report(self) -> str:
        lines = [
            f"A = C{self.a_order}, t = {self.t}: brute force d = {self.value}",
            f"  (1+3t)/4      = {self.linear_form}"
            f" -> {'MATCH' if self.matches_linear else 'MISMATCH'}",
            f"  ((1+t)/2)^2   = {self.square_form}"
            f" -> {'MATCH' if self.matches_square else 'MISMATCH'}",
        ]
        if self.matches_linear and not self.matches_square:
            lines.append(
                "  discrepancy: the squared form overcounts the flip-flip part;"
                " the commuting condition there is 2(a - a') = 0, of measure t,"
                " not membership of both angles in the 2-torsion set."
            )
        lines.append("  at t = 0 both forms give 1/4.")
        return "\n".join(lines)


def sign_flip_audit(a_order: int) -> SignFlipAudit:
    """Brute-force d(C_n x| {1,-1}) with the inversion action, vs closed forms."""
    A = cyclic(a_order)
    action = [list(range(a_order)), [(-i) % a_order for i in range(a_order)]]
    G = semidirect_product(A, cyclic(2), action)
    value = degree_bruteforce(G).value
    t = Fraction(sum(1 for a in range(a_order) if (2 * a) % a_order == 0), a_order)
    return SignFlipAudit(
        a_order=a_order,
        t=t,
        value=value,
        linear_form=(1 + 3 * t) / 4,
        square_form=((1 + t) / 2) ** 2,
    )
