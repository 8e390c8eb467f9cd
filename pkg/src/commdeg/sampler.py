"""Monte Carlo estimation of commuting probabilities on preset compact groups.

Commutation is decided by exact structural predicates, never by a numeric
tolerance: a tolerance test would assign positive empirical mass to the
measure-zero commuting sets of the continuous presets and bias every
estimate upward. On the continuous presets the probability-zero clauses
(doubling conditions, parallel axes) compare derived floats for exact
equality and essentially never fire on sampled data.

Trial i draws from RNG substream i (see rng.py), so estimates are
bit-reproducible for a given (preset, m, n, trials, seed) regardless of
chunking or evaluation order.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import sqrt

import numpy as np

from commdeg.degrees import degree_mn
from commdeg.errors import PresetMismatch, UnknownPreset
from commdeg.groups import GroupTable, power_map
from commdeg.presets import quaternion8
from commdeg.rng import gaussians_from_uniforms, to_uniform, words

_CHUNK = 1 << 16


@dataclass(frozen=True)
class SampledElement:
    """One Haar sample from a preset; ``params`` is preset-specific."""

    preset: str
    params: tuple


@dataclass(frozen=True)
class Estimate:
    """A Bernoulli estimate of a commuting probability."""

    preset: str
    m: int
    n: int
    trials: int
    seed: int
    successes: int
    mean: float
    stderr: float
    exact: Fraction | None = None

    @property
    def sigma_off(self) -> float | None:
        """|mean - exact| in stderr units; None without a closed form."""
        if self.exact is None:
            return None
        diff = abs(self.mean - float(self.exact))
        if self.stderr == 0.0:
            return 0.0 if diff == 0.0 else float("inf")
        return diff / self.stderr

    @property
    def consistency(self) -> str | None:
        """ok below 4 sigma, flagged between 4 and 6, failed beyond 6."""
        off = self.sigma_off
        if off is None:
            return None
        if off < 4.0:
            return "ok"
        if off <= 6.0:
            return "flagged"
        return "failed"


def _bernoulli(preset_name, m, n, trials, seed, successes, exact) -> Estimate:
    mean = successes / trials
    return Estimate(
        preset=preset_name,
        m=m,
        n=n,
        trials=trials,
        seed=seed,
        successes=successes,
        mean=mean,
        stderr=sqrt(mean * (1.0 - mean) / trials),
        exact=exact,
    )


class TorusPreset:
    """T^dim with angles in [0, 1) per coordinate; everything commutes."""

    def __init__(self, dim: int = 1):
        if dim < 1:
            raise ValueError("torus dimension must be >= 1")
        self.dim = dim
        self.name = "torus" if dim == 1 else f"torus{dim}"
        self.words_per_element = dim

    def from_words(self, w):
        return to_uniform(w)

    def to_params(self, arrays):
        return [tuple(float(a) for a in row) for row in arrays]

    def power_arrays(self, arrays, k):
        return (k * arrays) % 1.0

    def commute_arrays(self, xa, ya):
        return np.ones(len(xa), dtype=bool)

    def power_scalar(self, params, k):
        return tuple((k * a) % 1.0 for a in params)

    def commute_scalar(self, xp, yp):
        return True

    def exact_degree(self, m, n):
        return Fraction(1)


class DihedralPreset:
    """The circle extended by a sign flip: elements (angle, sign).

    (a, 1)(a', 1) always commute; a flip commutes with a rotation only
    under the exact doubling condition 2a' = 0, and two flips only when
    2(a - a') = 0 -- probability-zero events for Haar samples.
    """

    name = "dihedral"
    words_per_element = 2

    def from_words(self, w):
        u = to_uniform(w)
        angles = u[:, 0]
        signs = np.where(w[:, 1] < np.uint32(1 << 31), 1, -1).astype(np.int8)
        return angles, signs

    def to_params(self, arrays):
        angles, signs = arrays
        return [(float(a), int(s)) for a, s in zip(angles, signs)]

    def power_arrays(self, arrays, k):
        angles, signs = arrays
        if k % 2 == 0:
            pos = (k * angles) % 1.0
            out_angles = np.where(signs == 1, pos, 0.0)
            out_signs = np.ones_like(signs)
        else:
            out_angles = np.where(signs == 1, (k * angles) % 1.0, angles)
            out_signs = signs
        return out_angles, out_signs

    def commute_arrays(self, xa, ya):
        ax, sx = xa
        ay, sy = ya
        both_rot = (sx == 1) & (sy == 1)
        flip_rot = (sx == -1) & (sy == 1) & ((2.0 * ay) % 1.0 == 0.0)
        rot_flip = (sx == 1) & (sy == -1) & ((2.0 * ax) % 1.0 == 0.0)
        both_flip = (sx == -1) & (sy == -1) & ((2.0 * (ax - ay)) % 1.0 == 0.0)
        return both_rot | flip_rot | rot_flip | both_flip

    def power_scalar(self, params, k):
        a, s = params
        if k % 2 == 0:
            return ((k * a) % 1.0 if s == 1 else 0.0, 1)
        return ((k * a) % 1.0 if s == 1 else a, s)

    def commute_scalar(self, xp, yp):
        ax, sx = xp
        ay, sy = yp
        if sx == 1 and sy == 1:
            return True
        if sx == -1 and sy == 1:
            return (2.0 * ay) % 1.0 == 0.0
        if sx == 1 and sy == -1:
            return (2.0 * ax) % 1.0 == 0.0
        return (2.0 * (ax - ay)) % 1.0 == 0.0

    def exact_degree(self, m, n):
        return Fraction(1, (1 if m % 2 == 0 else 2) * (1 if n % 2 == 0 else 2))


def _quat_mul(q, p):
    w1, x1, y1, z1 = q[..., 0], q[..., 1], q[..., 2], q[..., 3]
    w2, x2, y2, z2 = p[..., 0], p[..., 1], p[..., 2], p[..., 3]
    return np.stack(
        [
            w1 * w2 - x1 * x2 - y1 * y2 - z1 * z2,
            w1 * x2 + x1 * w2 + y1 * z2 - z1 * y2,
            w1 * y2 - x1 * z2 + y1 * w2 + z1 * x2,
            w1 * z2 + x1 * y2 - y1 * x2 + z1 * w2,
        ],
        axis=-1,
    )


class QuaternionPreset:
    """SU(2) via normalized 4-dimensional Gaussian vectors; so3 reads the
    sample as the covering rotation.

    Commutation in SU(2) is exact parallelism of the vector parts (zero
    cross product); in SO(3) two half-turns about exactly orthogonal axes
    commute as well, so that clause is included for the pushed-down group.
    """

    words_per_element = 4

    def __init__(self, so3: bool):
        self.so3 = so3
        self.name = "so3" if so3 else "su2"

    def from_words(self, w):
        g = gaussians_from_uniforms(to_uniform(w))
        norm = np.sqrt(g[:, 0] ** 2 + g[:, 1] ** 2 + g[:, 2] ** 2 + g[:, 3] ** 2)
        return g / norm[:, None]

    def to_params(self, arrays):
        return [tuple(float(v) for v in row) for row in arrays]

    def power_arrays(self, arrays, k):
        acc = np.zeros_like(arrays)
        acc[:, 0] = 1.0
        for _ in range(k):
            acc = _quat_mul(acc, arrays)
        return acc

    def commute_arrays(self, xa, ya):
        cx = xa[:, 2] * ya[:, 3] - xa[:, 3] * ya[:, 2]
        cy = xa[:, 3] * ya[:, 1] - xa[:, 1] * ya[:, 3]
        cz = xa[:, 1] * ya[:, 2] - xa[:, 2] * ya[:, 1]
        parallel = (cx == 0.0) & (cy == 0.0) & (cz == 0.0)
        if not self.so3:
            return parallel
        dot = xa[:, 1] * ya[:, 1] + xa[:, 2] * ya[:, 2] + xa[:, 3] * ya[:, 3]
        half_turns = (xa[:, 0] == 0.0) & (ya[:, 0] == 0.0) & (dot == 0.0)
        return parallel | half_turns

    def power_scalar(self, params, k):
        acc = (1.0, 0.0, 0.0, 0.0)
        for _ in range(k):
            w1, x1, y1, z1 = acc
            w2, x2, y2, z2 = params
            acc = (
                w1 * w2 - x1 * x2 - y1 * y2 - z1 * z2,
                w1 * x2 + x1 * w2 + y1 * z2 - z1 * y2,
                w1 * y2 - x1 * z2 + y1 * w2 + z1 * x2,
                w1 * z2 + x1 * y2 - y1 * x2 + z1 * w2,
            )
        return acc

    def commute_scalar(self, xp, yp):
        cx = xp[2] * yp[3] - xp[3] * yp[2]
        cy = xp[3] * yp[1] - xp[1] * yp[3]
        cz = xp[1] * yp[2] - xp[2] * yp[1]
        parallel = cx == 0.0 and cy == 0.0 and cz == 0.0
        if not self.so3:
            return parallel
        dot = xp[1] * yp[1] + xp[2] * yp[2] + xp[3] * yp[3]
        return parallel or (xp[0] == 0.0 and yp[0] == 0.0 and dot == 0.0)

    def exact_degree(self, m, n):
        return Fraction(0)


class FinitePreset:
    """Uniform sampling of a finite group by element index.

    Indices come from a 64-bit word reduced mod the order; the residual
    nonuniformity is below 2^-48 per element and invisible at Monte Carlo
    scale.
    """

    words_per_element = 2

    def __init__(self, G: GroupTable):
        self.group = G
        self.name = f"finite:{G.name}"
        self._pow_cache: dict[int, np.ndarray] = {}

    def _power_table(self, k):
        if k not in self._pow_cache:
            self._pow_cache[k] = power_map(self.group, k)
        return self._pow_cache[k]

    def from_words(self, w):
        w64 = w[:, 0].astype(np.uint64) << np.uint64(32) | w[:, 1].astype(np.uint64)
        return (w64 % np.uint64(self.group.order)).astype(np.int64)

    def to_params(self, arrays):
        return [(int(i),) for i in arrays]

    def power_arrays(self, arrays, k):
        return self._power_table(k)[arrays]

    def commute_arrays(self, xa, ya):
        mult = self.group.mult
        return mult[xa, ya] == mult[ya, xa]

    def power_scalar(self, params, k):
        return (self.group.power(params[0], k),)

    def commute_scalar(self, xp, yp):
        return self.group.mul(xp[0], yp[0]) == self.group.mul(yp[0], xp[0])

    def exact_degree(self, m, n):
        return degree_mn(self.group, m, n).value


class ProductPreset:
    """Independent product of component presets; commutes componentwise."""

    def __init__(self, name: str, components):
        self.name = name
        self.components = list(components)
        self.words_per_element = sum(c.words_per_element for c in self.components)

    def _split(self, w):
        out = []
        at = 0
        for c in self.components:
            out.append(w[:, at : at + c.words_per_element])
            at += c.words_per_element
        return out

    def from_words(self, w):
        return [c.from_words(part) for c, part in zip(self.components, self._split(w))]

    def to_params(self, arrays):
        per = [c.to_params(a) for c, a in zip(self.components, arrays)]
        return [tuple(parts) for parts in zip(*per)]

    def power_arrays(self, arrays, k):
        return [c.power_arrays(a, k) for c, a in zip(self.components, arrays)]

    def commute_arrays(self, xa, ya):
        mask = None
        for c, xc, yc in zip(self.components, xa, ya):
            m = c.commute_arrays(xc, yc)
            mask = m if mask is None else (mask & m)
        return mask

    def power_scalar(self, params, k):
        return tuple(c.power_scalar(p, k) for c, p in zip(self.components, params))

    def commute_scalar(self, xp, yp):
        return all(
            c.commute_scalar(px, py)
            for c, px, py in zip(self.components, xp, yp)
        )

    def exact_degree(self, m, n):
        acc = Fraction(1)
        for c in self.components:
            e = c.exact_degree(m, n)
            if e is None:
                return None
            acc *= e
        return acc


def get_sampler_preset(name: str, dim: int = 1):
    if name == "torus":
        return TorusPreset(dim)
    if name == "dihedral":
        return DihedralPreset()
    if name == "so3":
        return QuaternionPreset(so3=True)
    if name == "su2":
        return QuaternionPreset(so3=False)
    if name == "torus-x-quaternion8":
        return ProductPreset(name, [TorusPreset(1), FinitePreset(quaternion8())])
    raise UnknownPreset(
        f"unknown sampler preset {name!r}; known: dihedral, so3, su2, torus,"
        " torus-x-quaternion8"
    )


def _resolve(preset):
    return get_sampler_preset(preset) if isinstance(preset, str) else preset


def sample(preset, count: int, seed: int):
    """``count`` Haar samples as SampledElements, one per RNG substream."""
    if count < 1:
        raise ValueError("count must be >= 1")
    p = _resolve(preset)
    out = []
    for lo in range(0, count, _CHUNK):
        hi = min(lo + _CHUNK, count)
        arrays = p.from_words(words(seed, lo, hi, p.words_per_element, tag=0))
        out.extend(SampledElement(p.name, params) for params in p.to_params(arrays))
    return out


def commutes(preset, x: SampledElement, y: SampledElement, m: int, n: int) -> bool:
    """Exact structural commutation test for x^m and y^n."""
    p = _resolve(preset)
    if x.preset != p.name or y.preset != p.name:
        raise PresetMismatch(
            f"elements from {x.preset!r} and {y.preset!r} fed to preset {p.name!r}"
        )
    if m < 1 or n < 1:
        raise ValueError("powers must be >= 1")
    return bool(p.commute_scalar(p.power_scalar(x.params, m), p.power_scalar(y.params, n)))


def _success_count(p, m, n, trials, seed) -> int:
    total = 0
    for lo in range(0, trials, _CHUNK):
        hi = min(lo + _CHUNK, trials)
        xa = p.from_words(words(seed, lo, hi, p.words_per_element, tag=0))
        ya = p.from_words(words(seed, lo, hi, p.words_per_element, tag=1))
        mask = p.commute_arrays(p.power_arrays(xa, m), p.power_arrays(ya, n))
        total += int(mask.sum())
    return total


def estimate_degree_mn(preset, m: int, n: int, trials: int, seed: int) -> Estimate:
    """Bernoulli estimate of P([x^m, y^n] = 1) over independent Haar pairs."""
    p = _resolve(preset)
    if trials < 100:
        raise ValueError("need at least 100 trials")
    if m < 1 or n < 1:
        raise ValueError("powers must be >= 1")
    successes = _success_count(p, m, n, trials, seed)
    return _bernoulli(p.name, m, n, trials, seed, successes, p.exact_degree(m, n))


def estimate_finite(G: GroupTable, m: int, n: int, trials: int, seed: int) -> Estimate:
    """Sampling bridge to the exact engine on an explicit finite group."""
    return estimate_degree_mn(FinitePreset(G), m, n, trials, seed)
