"""Counter-based random words: Philox4x32-10, vectorized over trials.

Trial i draws from substream i: the counter carries (trial, block, tag)
and the key carries the 64-bit seed, so any slice of trials can be
generated independently and in any order with identical results. Output
words depend only on (seed, trial, block, tag).
"""
from __future__ import annotations

import numpy as np

_M0 = np.uint64(0xD2511F53)
_M1 = np.uint64(0xCD9E8D57)
_W0 = np.uint64(0x9E3779B9)
_W1 = np.uint64(0xBB67AE85)
_MASK32 = np.uint64(0xFFFFFFFF)
_ROUNDS = 10


def philox4x32(counter: np.ndarray, key0: int, key1: int) -> np.ndarray:
    """One Philox4x32-10 block per row of ``counter`` (shape (N, 4), uint32).

    Returns an (N, 4) uint32 array.
    """
    c = counter.astype(np.uint64)
    x0, x1, x2, x3 = c[:, 0], c[:, 1], c[:, 2], c[:, 3]
    k0 = np.uint64(key0)
    k1 = np.uint64(key1)
    for _ in range(_ROUNDS):
        p0 = _M0 * x0
        p1 = _M1 * x2
        hi0, lo0 = p0 >> np.uint64(32), p0 & _MASK32
        hi1, lo1 = p1 >> np.uint64(32), p1 & _MASK32
        x0, x1, x2, x3 = hi1 ^ x1 ^ k0, lo1, hi0 ^ x3 ^ k1, lo0
        k0 = (k0 + _W0) & _MASK32
        k1 = (k1 + _W1) & _MASK32
    return np.stack([x0, x1, x2, x3], axis=1).astype(np.uint32)


def words(seed: int, trial_lo: int, trial_hi: int, n_words: int, tag: int) -> np.ndarray:
    """uint32 words for trials [trial_lo, trial_hi): shape (N, n_words).

    Word j of trial i is word j % 4 of the Philox block with counter
    (i_low32, i_high32, j // 4, tag) under key = seed.
    """
    seed &= (1 << 64) - 1
    k0, k1 = seed & 0xFFFFFFFF, seed >> 32
    trials = np.arange(trial_lo, trial_hi, dtype=np.uint64)
    n = len(trials)
    blocks = (n_words + 3) // 4
    out = np.empty((n, 4 * blocks), dtype=np.uint32)
    ctr = np.empty((n, 4), dtype=np.uint32)
    ctr[:, 0] = (trials & np.uint64(0xFFFFFFFF)).astype(np.uint32)
    ctr[:, 1] = (trials >> np.uint64(32)).astype(np.uint32)
    ctr[:, 3] = tag
    for b in range(blocks):
        ctr[:, 2] = b
        out[:, 4 * b : 4 * b + 4] = philox4x32(ctr, k0, k1)
    return out[:, :n_words]


def to_uniform(w: np.ndarray) -> np.ndarray:
    """Map uint32 words to doubles in (0, 1): (w + 0.5) / 2^32."""
    return (w.astype(np.float64) + 0.5) * 2.0**-32


def gaussians_from_uniforms(u: np.ndarray) -> np.ndarray:
    """Box-Muller on consecutive uniform pairs; input (..., 2k) -> (..., 2k)."""
    if u.shape[-1] % 2:
        raise ValueError("need an even number of uniforms")
    u1 = u[..., 0::2]
    u2 = u[..., 1::2]
    r = np.sqrt(-2.0 * np.log(u1))
    theta = 2.0 * np.pi * u2
    out = np.empty_like(u)
    out[..., 0::2] = r * np.cos(theta)
    out[..., 1::2] = r * np.sin(theta)
    return out
