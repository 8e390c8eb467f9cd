"""Finite groups as explicit multiplication tables, plus the subgroup and
conjugacy machinery every probability computation consumes.

Conventions: elements are dense indices 0..order-1, the identity is pinned
at index 0, and all member sets are sorted index tuples. Tables are
C-contiguous int32 numpy arrays frozen after construction, so every
operation here is a pure function and safe to call concurrently.
"""
from __future__ import annotations

import bisect

import numpy as np

from commdeg.errors import InvalidAction, NonAssociative, NotLatin, NotNormal

DEFAULT_ORDER_CAP = 20000

# Associativity is verified exhaustively up to this order (cubic but
# vectorized); beyond it we sample 10*order^2 random triples in chunks.
_ASSOC_EXHAUSTIVE_MAX = 256
_ASSOC_SAMPLE_FACTOR = 10
_ASSOC_CHUNK = 1 << 20


def _frozen(arr, dtype=np.int32):
    out = np.ascontiguousarray(arr, dtype=dtype)
    out.flags.writeable = False
    return out


def _check_associativity(mult: np.ndarray) -> None:
    n = mult.shape[0]
    if n <= _ASSOC_EXHAUSTIVE_MAX:
        block = max(1, (1 << 22) // max(n * n, 1))
        for start in range(0, n, block):
            rows = slice(start, min(start + block, n))
            left = mult[mult[rows], :]
            right = mult[rows][:, mult]
            if not np.array_equal(left, right):
                a, b, c = np.argwhere(left != right)[0]
                raise NonAssociative(
                    f"associativity fails at triple ({a + start}, {b}, {c})"
                )
        return
    rng = np.random.default_rng(n * 0x9E3779B1 + 1)
    remaining = _ASSOC_SAMPLE_FACTOR * n * n
    while remaining > 0:
        k = min(remaining, _ASSOC_CHUNK)
        a, b, c = rng.integers(0, n, size=(3, k))
        if not np.array_equal(mult[mult[a, b], c], mult[a, mult[b, c]]):
            raise NonAssociative("associativity fails on a sampled triple")
        remaining -= k


class GroupTable:
    """A finite group as an explicit order x order multiplication table.

    ``mult[g, h]`` is the index of g*h; ``inv[g]`` the index of the inverse.
    Construction validates the full set of group axioms (Latin square,
    identity at 0, inverses, associativity).
    """

    __slots__ = ("order", "mult", "inv", "labels", "name")

    def __init__(self, mult, labels=None, name="G"):
        mult = np.ascontiguousarray(mult, dtype=np.int32)
        if mult.ndim != 2 or mult.shape[0] != mult.shape[1]:
            raise NotLatin("multiplication table must be square")
        n = mult.shape[0]
        if n == 0:
            raise NotLatin("empty table")
        idx = np.arange(n, dtype=np.int32)
        if mult.min() < 0 or mult.max() >= n:
            raise NotLatin("table entries out of range")
        if not np.array_equal(np.sort(mult, axis=1), np.broadcast_to(idx, (n, n))):
            raise NotLatin("some row is not a permutation")
        if not np.array_equal(np.sort(mult, axis=0), np.broadcast_to(idx[:, None], (n, n))):
            raise NotLatin("some column is not a permutation")
        if not (np.array_equal(mult[0], idx) and np.array_equal(mult[:, 0], idx)):
            raise NotLatin("element 0 is not a two-sided identity")
        _check_associativity(mult)
        inv = np.argmax(mult == 0, axis=1).astype(np.int32)
        # Latin + associativity makes right inverses two-sided; keep the
        # cheap sanity check anyway.
        assert np.array_equal(mult[idx, inv], np.zeros(n, dtype=np.int32))
        self.order = n
        self.mult = _frozen(mult)
        self.inv = _frozen(inv)
        self.labels = tuple(labels) if labels is not None else None
        self.name = name
        if self.labels is not None and len(self.labels) != n:
            raise NotLatin("labels length does not match order")

    identity = 0

    def mul(self, a: int, b: int) -> int:
        return int(self.mult[a, b])

    def inverse(self, a: int) -> int:
        return int(self.inv[a])

    def conj(self, g: int, x: int) -> int:
        """g * x * g^-1."""
        return int(self.mult[self.mult[g, x], self.inv[g]])

    def power(self, g: int, n: int) -> int:
        if n < 0:
            return self.power(self.inverse(g), -n)
        acc, base = 0, g
        while n:
            if n & 1:
                acc = self.mul(acc, base)
            n >>= 1
            if n:
                base = self.mul(base, base)
        return acc

    def element_order(self, g: int) -> int:
        k, x = 1, g
        while x != 0:
            x = self.mul(x, g)
            k += 1
        return k

    def is_abelian(self) -> bool:
        return bool(np.array_equal(self.mult, self.mult.T))

    def label(self, g: int) -> str:
        return self.labels[g] if self.labels is not None else str(g)

    def __repr__(self):
        return f"GroupTable({self.name!r}, order={self.order})"


class Subgroup:
    """A sorted member set of a parent group, validated at construction."""

    __slots__ = ("parent", "members")

    def __init__(self, parent: GroupTable, members):
        members = tuple(sorted(int(m) for m in set(members)))
        if not members or members[0] != 0:
            raise ValueError("subgroup must contain the identity")
        memb = np.zeros(parent.order, dtype=bool)
        memb[list(members)] = True
        arr = np.array(members, dtype=np.int32)
        if not memb[parent.mult[np.ix_(arr, arr)]].all():
            raise ValueError("member set is not closed under multiplication")
        if not memb[parent.inv[arr]].all():
            raise ValueError("member set is not closed under inverses")
        assert parent.order % len(members) == 0, "Lagrange violation"
        self.parent = parent
        self.members = members

    @property
    def order(self) -> int:
        return len(self.members)

    @property
    def index(self) -> int:
        return self.parent.order // len(self.members)

    def __contains__(self, g: int) -> bool:
        i = bisect.bisect_left(self.members, g)
        return i < len(self.members) and self.members[i] == g

    def __len__(self):
        return len(self.members)

    def __repr__(self):
        return f"Subgroup(order={self.order} of {self.parent.name})"


class Homomorphism:
    """Elementwise map between two group tables, validated at construction."""

    __slots__ = ("source", "target", "image")

    def __init__(self, source: GroupTable, target: GroupTable, image):
        image = np.ascontiguousarray(image, dtype=np.int32)
        if image.shape != (source.order,):
            raise ValueError("image length does not match source order")
        if image[0] != 0:
            raise ValueError("homomorphism must send identity to identity")
        lhs = image[source.mult]
        rhs = target.mult[image[:, None], image[None, :]]
        if not np.array_equal(lhs, rhs):
            raise ValueError("map does not respect multiplication")
        self.source = source
        self.target = target
        self.image = _frozen(image)

    def __call__(self, g: int) -> int:
        return int(self.image[g])

    def is_surjective(self) -> bool:
        return len(np.unique(self.image)) == self.target.order

    def kernel(self) -> Subgroup:
        return Subgroup(self.source, np.flatnonzero(self.image == 0))

    def __repr__(self):
        return f"Homomorphism({self.source.name} -> {self.target.name})"


# ---------------------------------------------------------------------------
# subgroup machinery


def centralizer(G: GroupTable, g: int) -> Subgroup:
    """Z(g, G): all elements commuting with g."""
    if not 0 <= g < G.order:
        raise IndexError(f"element index {g} out of range")
    mask = G.mult[:, g] == G.mult[g, :]
    return Subgroup(G, np.flatnonzero(mask))


def conjugacy_classes(G: GroupTable) -> list[tuple[int, ...]]:
    """Partition of 0..order-1 into conjugacy classes, ordered by least member."""
    seen = np.zeros(G.order, dtype=bool)
    classes = []
    for x in range(G.order):
        if seen[x]:
            continue
        orbit = np.unique(G.mult[G.mult[:, x], G.inv])
        seen[orbit] = True
        classes.append(tuple(int(v) for v in orbit))
    return classes


def center(G: GroupTable) -> Subgroup:
    mask = (G.mult == G.mult.T).all(axis=1)
    return Subgroup(G, np.flatnonzero(mask))


def subgroup_generated(G: GroupTable, gens) -> Subgroup:
    """Closure of a generator set inside an existing group table."""
    gens = sorted({int(g) for g in gens} | {int(G.inv[g]) for g in gens})
    members = {0}
    frontier = [0]
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = int(G.mult[x, g])
                if y not in members:
                    members.add(y)
                    nxt.append(y)
        frontier = nxt
    return Subgroup(G, members)


def commutator_subgroup(G: GroupTable) -> Subgroup:
    """Subgroup generated by all commutators x^-1 y^-1 x y."""
    left = G.mult[np.ix_(G.inv, G.inv)]
    comms = np.unique(G.mult[left, G.mult])
    return subgroup_generated(G, comms)


def subgroup_centralizer(G: GroupTable, S) -> Subgroup:
    """Z(S, G): elements commuting with every member of S."""
    arr = np.asarray(sorted({int(s) for s in S}), dtype=np.int32)
    mask = (G.mult[:, arr] == G.mult[arr, :].T).all(axis=1)
    return Subgroup(G, np.flatnonzero(mask))


def characteristic_abelian_subgroup(G: GroupTable) -> Subgroup:
    """Center of the centralizer of the commutator subgroup.

    Always abelian and normal; contains the center of G.
    """
    gprime = commutator_subgroup(G)
    c = subgroup_centralizer(G, gprime.members)
    carr = np.array(c.members, dtype=np.int32)
    block = G.mult[np.ix_(carr, carr)]
    central = (block == block.T).all(axis=1)
    result = Subgroup(G, carr[central])
    assert is_normal(G, result)
    assert set(center(G).members) <= set(result.members)
    sub = np.array(result.members, dtype=np.int32)
    blk = G.mult[np.ix_(sub, sub)]
    assert np.array_equal(blk, blk.T), "result must be abelian"
    return result


def is_normal(G: GroupTable, S: Subgroup) -> bool:
    arr = np.array(S.members, dtype=np.int32)
    memb = np.zeros(G.order, dtype=bool)
    memb[arr] = True
    conj = G.mult[G.mult[:, arr], G.inv[:, None]]
    return bool(memb[conj].all())


def quotient(G: GroupTable, N: Subgroup) -> tuple[GroupTable, Homomorphism]:
    """Coset group G/N with its projection; cosets numbered by least member."""
    if N.parent is not G:
        raise ValueError("subgroup does not belong to this group")
    if not is_normal(G, N):
        raise NotNormal(f"subgroup of order {N.order} is not normal in {G.name}")
    narr = np.array(N.members, dtype=np.int32)
    coset_of = np.full(G.order, -1, dtype=np.int32)
    reps = []
    for g in range(G.order):
        if coset_of[g] >= 0:
            continue
        coset_of[G.mult[g, narr]] = len(reps)
        reps.append(g)
    reps = np.array(reps, dtype=np.int32)
    qmult = coset_of[G.mult[np.ix_(reps, reps)]]
    labels = tuple(f"{G.label(int(r))}N" for r in reps)
    Q = GroupTable(qmult, labels=labels, name=f"{G.name}/N{N.order}")
    return Q, Homomorphism(G, Q, coset_of)


def direct_product(A: GroupTable, B: GroupTable) -> GroupTable:
    """Product group on pairs (a, b), indexed a * |B| + b."""
    nA, nB = A.order, B.order
    mult = (A.mult[:, None, :, None].astype(np.int64) * nB
            + B.mult[None, :, None, :]).reshape(nA * nB, nA * nB)
    labels = None
    if A.labels is not None or B.labels is not None:
        labels = tuple(
            f"({A.label(a)},{B.label(b)})" for a in range(nA) for b in range(nB)
        )
    return GroupTable(mult, labels=labels, name=f"{A.name}x{B.name}")


def _as_action_table(N: GroupTable, H: GroupTable, action) -> np.ndarray:
    act = np.ascontiguousarray(action, dtype=np.int32)
    if act.shape != (H.order, N.order):
        raise InvalidAction(
            f"action table must be {H.order} x {N.order}, got {act.shape}"
        )
    idx = np.arange(N.order, dtype=np.int32)
    if not np.array_equal(np.sort(act, axis=1), np.broadcast_to(idx, act.shape)):
        raise InvalidAction("some action row is not a permutation")
    if not np.array_equal(act[0], idx):
        raise InvalidAction("identity of H must act trivially")
    for h in range(H.order):
        row = act[h]
        if not np.array_equal(row[N.mult], N.mult[row[:, None], row[None, :]]):
            raise InvalidAction(f"element {h} of H does not act by an automorphism")
    for h1 in range(H.order):
        for h2 in range(H.order):
            if not np.array_equal(act[H.mult[h1, h2]], act[h1][act[h2]]):
                raise InvalidAction("action is not a homomorphism into Aut(N)")
    return act


def semidirect_product(N: GroupTable, H: GroupTable, action) -> GroupTable:
    """N x| H with (a, h)(a', h') = (a * phi_h(a'), h h'); indexed a * |H| + h.

    ``action`` is one permutation of N's indices per element of H; it must
    be by automorphisms and a homomorphism into Aut(N) (InvalidAction
    otherwise). The trivial action reproduces direct_product(N, H) exactly.
    """
    act = _as_action_table(N, H, action)
    nN, nH = N.order, H.order
    acted = act  # acted[h, a2] = phi_h(a2)
    n_part = N.mult[:, acted]  # [a, h, a2]
    mult = (n_part[:, :, :, None].astype(np.int64) * nH
            + H.mult[None, :, None, :]).reshape(nN * nH, nN * nH)
    return GroupTable(mult, name=f"{N.name}x|{H.name}")


def power_map(G: GroupTable, n: int) -> np.ndarray:
    """Table g -> g^n by square-and-multiply on indices (read-only int32)."""
    if n < 1:
        raise ValueError("power must be >= 1")
    acc = np.zeros(G.order, dtype=np.int32)
    base = np.arange(G.order, dtype=np.int32)
    e = n
    while e:
        if e & 1:
            acc = G.mult[acc, base]
        e >>= 1
        if e:
            base = G.mult[base, base]
    return _frozen(acc)


def trivial_group() -> GroupTable:
    return GroupTable([[0]], labels=("e",), name="1")
