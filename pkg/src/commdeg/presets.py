"""Named finite-group presets, all elaborated to validated GroupTables.

Everything here is deterministic: identical name + params produce
bit-identical tables.
"""
from __future__ import annotations

import numpy as np

from commdeg.errors import NotPrime, UnknownPreset
from commdeg.groups import GroupTable, direct_product, semidirect_product


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


def require_prime(p) -> int:
    if not isinstance(p, int) or isinstance(p, bool) or not is_prime(p):
        raise NotPrime(f"{p!r} is not a prime")
    return p


def cyclic(n: int) -> GroupTable:
    if n < 1:
        raise ValueError("cyclic order must be >= 1")
    idx = np.arange(n)
    mult = (idx[:, None] + idx[None, :]) % n
    return GroupTable(mult, labels=tuple(str(i) for i in range(n)), name=f"C{n}")


def elementary(p: int, k: int) -> GroupTable:
    """(Z/p)^k with little-endian digit encoding: index = sum x_i * p^i."""
    require_prime(p)
    if k < 1:
        raise ValueError("rank must be >= 1")
    n = p**k
    idx = np.arange(n)
    digits = (idx[:, None] // p ** np.arange(k)[None, :]) % p
    sums = (digits[:, None, :] + digits[None, :, :]) % p
    mult = sums @ (p ** np.arange(k))
    labels = tuple("(" + ",".join(str(d) for d in row) + ")" for row in digits)
    return GroupTable(mult, labels=labels, name=f"E{p}^{k}")


def heisenberg_level(p: int, k: int) -> GroupTable:
    """Triples (a, b, z) with a, b mod p^k and z mod p, multiplied by
    (a, b, z)(a', b', z') = (a + a', b + b', z + z' + a b').

    Index encoding: (a * p^k + b) * p + z. Level k = 1 is the order p^3
    mod-p Heisenberg group.
    """
    require_prime(p)
    if k < 1:
        raise ValueError("level must be >= 1")
    q = p**k
    idx = np.arange(q * q * p)
    a, b, z = idx // (q * p), (idx // p) % q, idx % p
    aa = (a[:, None] + a[None, :]) % q
    bb = (b[:, None] + b[None, :]) % q
    zz = (z[:, None] + z[None, :] + a[:, None] * b[None, :]) % p
    mult = (aa * q + bb) * p + zz
    labels = tuple(f"({ai},{bi},{zi})" for ai, bi, zi in zip(a, b, z))
    return GroupTable(mult, labels=labels, name=f"H(p={p},k={k})")


def quaternion8() -> GroupTable:
    """The 8-element quaternion group; indices 1,-1,i,-i,j,-j,k,-k."""
    units = "1ijk"
    # (sign, axis) pairs; axis multiplication with sign tracking
    axis_mul = {
        ("1", "1"): (1, "1"), ("1", "i"): (1, "i"), ("1", "j"): (1, "j"), ("1", "k"): (1, "k"),
        ("i", "1"): (1, "i"), ("i", "i"): (-1, "1"), ("i", "j"): (1, "k"), ("i", "k"): (-1, "j"),
        ("j", "1"): (1, "j"), ("j", "i"): (-1, "k"), ("j", "j"): (-1, "1"), ("j", "k"): (1, "i"),
        ("k", "1"): (1, "k"), ("k", "i"): (1, "j"), ("k", "j"): (-1, "i"), ("k", "k"): (-1, "1"),
    }
    elems = [(s, u) for u in units for s in (1, -1)]
    pos = {e: i for i, e in enumerate(elems)}
    mult = [
        [pos[(sa * sb * axis_mul[(ua, ub)][0], axis_mul[(ua, ub)][1])] for (sb, ub) in elems]
        for (sa, ua) in elems
    ]
    labels = tuple(("" if s == 1 else "-") + u for (s, u) in elems)
    return GroupTable(mult, labels=labels, name="Q8")


def dihedral(n: int) -> GroupTable:
    """Dihedral group of order 2n as C_n x| C_2 with the inversion action."""
    cn = cyclic(n)
    c2 = cyclic(2)
    invert = [list(range(n)), [(-i) % n for i in range(n)]]
    G = semidirect_product(cn, c2, invert)
    return GroupTable(G.mult, name=f"D{n}")


def klein4() -> GroupTable:
    G = elementary(2, 2)
    return GroupTable(G.mult, labels=G.labels, name="V4")


def _perm_closure_table(degree: int, gens: list[tuple[int, ...]], name: str) -> GroupTable:
    from commdeg.specs import permutation_closure

    return permutation_closure(degree, gens, name=name)


def symmetric(n: int) -> GroupTable:
    if not 1 <= n <= 6:
        raise ValueError("symmetric preset supports 1 <= n <= 6")
    if n == 1:
        return GroupTable([[0]], labels=("()",), name="S1")
    gens = [tuple([1, 0] + list(range(2, n)))]
    if n > 2:
        gens.append(tuple(list(range(1, n)) + [0]))
    return _perm_closure_table(n, gens, f"S{n}")


def alternating(n: int) -> GroupTable:
    if not 1 <= n <= 6:
        raise ValueError("alternating preset supports 1 <= n <= 6")
    if n <= 2:
        return GroupTable([[0]], labels=("()",), name=f"A{n}")
    gens = [tuple([1, 2, 0] + list(range(3, n)))]
    if n > 3:
        if n % 2 == 1:
            gens.append(tuple(list(range(1, n)) + [0]))
        else:
            gens.append(tuple([0] + list(range(2, n)) + [1]))
    return _perm_closure_table(n, gens, f"A{n}")


_PRESETS = {
    "trivial": lambda params: GroupTable([[0]], labels=("e",), name="1"),
    "cyclic": lambda params: cyclic(int(params["n"])),
    "klein4": lambda params: klein4(),
    "quaternion8": lambda params: quaternion8(),
    "dihedral": lambda params: dihedral(int(params["n"])),
    "symmetric": lambda params: symmetric(int(params["n"])),
    "alternating": lambda params: alternating(int(params["n"])),
    "s3": lambda params: symmetric(3),
    "s4": lambda params: symmetric(4),
    "a4": lambda params: alternating(4),
    "elementary": lambda params: elementary(int(params["p"]), int(params.get("k", params.get("n", 1)))),
    "heisenberg-mod": lambda params: heisenberg_level(int(params["p"]), 1),
}


def preset_names() -> tuple[str, ...]:
    return tuple(sorted(_PRESETS))


def build_preset(name: str, params: dict | None = None) -> GroupTable:
    try:
        builder = _PRESETS[name]
    except KeyError:
        raise UnknownPreset(
            f"unknown group preset {name!r}; known: {', '.join(preset_names())}"
        ) from None
    try:
        return builder(params or {})
    except KeyError as exc:
        raise ValueError(f"preset {name!r} is missing parameter {exc}") from None


__all__ = [
    "alternating",
    "build_preset",
    "cyclic",
    "dihedral",
    "direct_product",
    "elementary",
    "heisenberg_level",
    "is_prime",
    "klein4",
    "preset_names",
    "quaternion8",
    "require_prime",
    "symmetric",
]
