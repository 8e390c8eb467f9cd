"""Shared fixtures: the group corpus and independent brute-force oracles.

Oracles here deliberately avoid the library's own code paths (plain Python
loops, independent constructions) so expected values are computed twice.
"""
from __future__ import annotations

import itertools
from fractions import Fraction

import pytest

from commdeg.groups import GroupTable, Subgroup, quotient
from commdeg.specs import build_group

# ---------------------------------------------------------------------------
# independent oracles


def oracle_commuting_count(table) -> int:
    n = len(table)
    return sum(
        1 for x in range(n) for y in range(n) if table[x][y] == table[y][x]
    )


def oracle_commuting_count_mn(table, m, n_pow) -> int:
    n = len(table)

    def power(g, k):
        acc = 0
        for _ in range(k):
            acc = table[acc][g]
        return acc

    pm = [power(g, m) for g in range(n)]
    pn = [power(g, n_pow) for g in range(n)]
    return sum(
        1
        for x in range(n)
        for y in range(n)
        if table[pm[x]][pn[y]] == table[pn[y]][pm[x]]
    )


def oracle_inverse(table, g) -> int:
    return next(h for h in range(len(table)) if table[g][h] == 0)


def oracle_centralizer(table, g):
    return [h for h in range(len(table)) if table[g][h] == table[h][g]]


def oracle_classes(table):
    n = len(table)
    seen = set()
    classes = []
    for x in range(n):
        if x in seen:
            continue
        orbit = set()
        for g in range(n):
            orbit.add(table[table[g][x]][oracle_inverse(table, g)])
        seen |= orbit
        classes.append(tuple(sorted(orbit)))
    return classes


def oracle_subgroup_closure(table, gens):
    members = {0}
    frontier = [0]
    gens = set(gens) | {oracle_inverse(table, g) for g in gens}
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = table[x][g]
                if y not in members:
                    members.add(y)
                    nxt.append(y)
        frontier = nxt
    return sorted(members)


def oracle_char_abelian(table):
    """Z(Z(G', G)) straight from its definition, all plain loops."""
    n = len(table)
    comms = {
        table[table[oracle_inverse(table, x)][oracle_inverse(table, y)]][table[x][y]]
        for x in range(n)
        for y in range(n)
    }
    gprime = oracle_subgroup_closure(table, comms)
    zc = [g for g in range(n) if all(table[g][c] == table[c][g] for c in gprime)]
    return [c for c in zc if all(table[c][d] == table[d][c] for d in zc)]


def oracle_q8_table():
    """Q8 as signed integer quaternions under the quaternion product.

    Independent of the package's symbol-table construction; elements are
    4-tuples over {-1,0,1} ordered 1,-1,i,-i,j,-j,k,-k.
    """

    def qmul(a, b):
        w1, x1, y1, z1 = a
        w2, x2, y2, z2 = b
        return (
            w1 * w2 - x1 * x2 - y1 * y2 - z1 * z2,
            w1 * x2 + x1 * w2 + y1 * z2 - z1 * y2,
            w1 * y2 - x1 * z2 + y1 * w2 + z1 * x2,
            w1 * z2 + x1 * y2 - y1 * x2 + z1 * w2,
        )

    elems = [
        (1, 0, 0, 0), (-1, 0, 0, 0), (0, 1, 0, 0), (0, -1, 0, 0),
        (0, 0, 1, 0), (0, 0, -1, 0), (0, 0, 0, 1), (0, 0, 0, -1),
    ]
    pos = {e: i for i, e in enumerate(elems)}
    return [[pos[qmul(a, b)] for b in elems] for a in elems]


def oracle_s3_table():
    """S3 from itertools.permutations with (p*q)(i) = p(q(i))."""
    perms = [(0, 1, 2)] + [p for p in itertools.permutations(range(3)) if p != (0, 1, 2)]
    pos = {p: i for i, p in enumerate(perms)}
    return [
        [pos[tuple(p[q[i]] for i in range(3))] for q in perms] for p in perms
    ]


def oracle_normal_subgroups(G: GroupTable, max_classes=12):
    """All normal subgroups as class-union subsets (None if too many classes)."""
    table = G.mult.tolist()
    classes = oracle_classes(table)
    if len(classes) > max_classes:
        return None
    rest = [c for c in classes if 0 not in c]
    out = []
    for r in range(len(rest) + 1):
        for combo in itertools.combinations(rest, r):
            members = set(classes[0][:1])
            members.add(0)
            for c in combo:
                members |= set(c)
            if G.order % len(members) != 0:
                continue
            if all(table[a][b] in members for a in members for b in members):
                out.append(tuple(sorted(members)))
    return out


# a 5x5 Latin square with two-sided identity that is not associative
NONASSOCIATIVE_LOOP = [
    [0, 1, 2, 3, 4],
    [1, 0, 3, 4, 2],
    [2, 3, 4, 0, 1],
    [3, 4, 1, 2, 0],
    [4, 2, 0, 1, 3],
]


# ---------------------------------------------------------------------------
# corpus


def _preset(name, **params):
    return {"kind": "preset", "name": name, "params": params}


def _mult_action(modulus, multiplier, acting_order):
    """C_{acting_order} acting on Z/modulus by repeated multiplication."""
    act = []
    m = 1
    for _ in range(acting_order):
        act.append([(x * m) % modulus for x in range(modulus)])
        m = (m * multiplier) % modulus
    return act


def _inversion_action(n):
    return [list(range(n)), [(-x) % n for x in range(n)]]


def corpus_specs():
    specs = {}
    for n in (1, 2, 3, 4, 5, 6, 7, 8, 9, 12, 16, 24, 32, 64, 128):
        specs[f"C{n}"] = _preset("cyclic", n=n)
    specs["V4"] = _preset("klein4")
    specs["E2^3"] = _preset("elementary", p=2, k=3)
    specs["E3^2"] = _preset("elementary", p=3, k=2)
    specs["Q8"] = _preset("quaternion8")
    for n in (3, 4, 5, 6, 7, 8):
        specs[f"D{n}"] = _preset("dihedral", n=n)
    specs["S3"] = _preset("s3")
    specs["S4"] = _preset("s4")
    specs["A4"] = _preset("a4")
    specs["H2"] = _preset("heisenberg-mod", p=2)
    specs["H3"] = _preset("heisenberg-mod", p=3)
    specs["C3xQ8"] = {"kind": "product", "a": _preset("cyclic", n=3), "b": _preset("quaternion8")}
    specs["Q8xQ8"] = {"kind": "product", "a": _preset("quaternion8"), "b": _preset("quaternion8")}
    specs["D4xD4"] = {"kind": "product", "a": _preset("dihedral", n=4), "b": _preset("dihedral", n=4)}
    specs["Q8xD4"] = {"kind": "product", "a": _preset("quaternion8"), "b": _preset("dihedral", n=4)}
    specs["S3xS3"] = {"kind": "product", "a": _preset("s3"), "b": _preset("s3")}
    specs["C2xD4"] = {"kind": "product", "a": _preset("cyclic", n=2), "b": _preset("dihedral", n=4)}
    specs["F20"] = {
        "kind": "semidirect", "normal": _preset("cyclic", n=5),
        "acting": _preset("cyclic", n=4), "action": _mult_action(5, 2, 4),
    }
    specs["C7:C3"] = {
        "kind": "semidirect", "normal": _preset("cyclic", n=7),
        "acting": _preset("cyclic", n=3), "action": _mult_action(7, 2, 3),
    }
    specs["C9:C3"] = {
        "kind": "semidirect", "normal": _preset("cyclic", n=9),
        "acting": _preset("cyclic", n=3), "action": _mult_action(9, 4, 3),
    }
    specs["C8:C2"] = {
        "kind": "semidirect", "normal": _preset("cyclic", n=8),
        "acting": _preset("cyclic", n=2), "action": _inversion_action(8),
    }
    specs["Q8/Z"] = {"kind": "quotient", "group": _preset("quaternion8"), "normal": [0, 1]}
    specs["S3viaPerm"] = {"kind": "permgen", "degree": 3, "generators": [[1, 0, 2], [1, 2, 0]]}
    return specs


@pytest.fixture(scope="session")
def corpus():
    """name -> GroupTable for every corpus spec (>= 30 groups, order <= 128)."""
    built = {name: build_group(spec) for name, spec in corpus_specs().items()}
    assert len(built) >= 30
    assert all(g.order <= 128 for g in built.values())
    return built


@pytest.fixture(scope="session")
def q8(corpus):
    return corpus["Q8"]


def build_action_suite():
    """Ten-plus validated actions: conjugations, translations, custom tables."""
    from commdeg.actions import FiniteAction, conjugation_action, translation_action
    from commdeg.presets import cyclic, elementary, quaternion8, symmetric

    return [
        conjugation_action(quaternion8()),
        conjugation_action(symmetric(3)),
        conjugation_action(symmetric(4)),
        conjugation_action(elementary(2, 2)),
        conjugation_action(cyclic(6)),
        translation_action(cyclic(5)),
        translation_action(symmetric(3)),
        FiniteAction(cyclic(2), [[0, 1, 2], [0, 2, 1]]),  # inversion on 3 points
        FiniteAction(cyclic(4), [list(range(3))] * 4),  # trivial
        FiniteAction(cyclic(4), [[0, 1, 2], [1, 0, 2], [0, 1, 2], [1, 0, 2]]),
        FiniteAction(cyclic(2), [list(range(6)), [1, 0, 3, 2, 5, 4]]),
    ]


def pytest_runtest_logreport(report):
    # acceptance criteria print their own [PASS] lines; surface failures too
    if report.when == "call" and "test_acceptance" in report.nodeid and report.failed:
        name = report.nodeid.split("::")[-1]
        print(f"\n[FAIL] {name}")


def quotient_by_members(G, members):
    return quotient(G, Subgroup(G, members))[0]


def degree_fraction_oracle(table) -> Fraction:
    return Fraction(oracle_commuting_count(table), len(table) ** 2)
