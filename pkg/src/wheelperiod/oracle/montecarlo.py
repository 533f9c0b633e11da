"""Position-space Monte Carlo for the residue of the three-spoke wheel.

With the max-norm regulator, rotation invariance fixes ``x_0 = e`` on the
unit sphere and

    res G_3 = 3 |S^3| int_{|x1|<1} int_{|x2|<1} d^4x1 d^4x2
              1 / (x1^2 x2^2 (e-x1)^2 (x1-x2)^2 (x2-e)^2).

The integrand has integrable ``1/distance^2`` singularities at ``x_i = 0``,
``x_i = e`` and ``x1 = x2``; its square is only log-integrable there, so
uniform sampling has unbounded variance.  Samples are drawn from a mixture:

* product channels: ``x1 - a`` and ``x2 - b`` independently with density
  ``~ 1/|y|^2`` on a ball, for ``a, b`` in ``{0, e}``;
* chain channels: one point ``~ 1/|y|^2`` around ``a``, the other at
  ``x_p + |x_p - a| z`` with ``z ~ 1/(|z|^2 (1 + |z|^2))``, which follows the
  nested approach of both points to ``a`` and to each other;
* a uniform channel on the product of unit balls.

Random numbers come from ``default_rng([seed, block])`` for fixed-size
blocks, so the estimate does not depend on how blocks are shared out.
"""

from __future__ import annotations

import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

import numpy as np

from ..errors import DomainError

BLOCK_SIZE = 1 << 16
MIN_SAMPLES = 10**5

_PI2 = math.pi**2
_E = np.array([1.0, 0.0, 0.0, 0.0])
_BALL_VOLUME = _PI2 / 2.0
# (centre, radius) of the 1/|y|^2 point densities; radius 2 around e covers the unit ball
_CENTRES = {"0": (np.zeros(4), 1.0), "e": (_E, 2.0)}
PREFACTOR = 3.0 * 2.0 * _PI2

CHANNELS = (
    ("chain", "0", 0), ("chain", "0", 1), ("chain", "e", 0), ("chain", "e", 1),
    ("product", "0", "0"), ("product", "0", "e"), ("product", "e", "0"), ("product", "e", "e"),
    ("uniform",),
)


@dataclass(frozen=True)
class McEstimate:
    value: float
    stderr: float
    samples: int
    seed: int


def _sq(v):
    return np.einsum("ij,ij->i", v, v)


def _directions(rng, n):
    g = rng.standard_normal((n, 4))
    return g / np.linalg.norm(g, axis=1)[:, None]


def _sample_point(rng, n, radius):
    # density 1 / (pi^2 R^2 |y|^2) on |y| < R: radial density 2 rho / R^2
    return (radius * np.sqrt(rng.random(n)))[:, None] * _directions(rng, n)


def _point_density(y, radius):
    r2 = _sq(y)
    with np.errstate(divide="ignore"):
        return np.where(r2 < radius * radius, 1.0 / (_PI2 * radius * radius * r2), 0.0)


def _sample_relative(rng, n, radius):
    # density 1 / (pi^2 ln(1+R^2) |z|^2 (1+|z|^2)) on |z| < R
    z = np.sqrt(np.expm1(rng.random(n) * np.log1p(radius * radius)))
    return z[:, None] * _directions(rng, n)


def _relative_density(z, radius):
    r2 = _sq(z)
    with np.errstate(divide="ignore"):
        return np.where(
            r2 < radius * radius,
            1.0 / (_PI2 * np.log1p(radius * radius) * r2 * (1.0 + r2)),
            0.0,
        )


def _sample_ball(rng, n):
    return (rng.random(n) ** 0.25)[:, None] * _directions(rng, n)


def _draw(rng, n, channel):
    kind = channel[0]
    if kind == "uniform":
        return _sample_ball(rng, n), _sample_ball(rng, n)
    if kind == "product":
        (ca, ra), (cb, rb) = _CENTRES[channel[1]], _CENTRES[channel[2]]
        return ca + _sample_point(rng, n, ra), cb + _sample_point(rng, n, rb)
    centre, radius = _CENTRES[channel[1]]
    y = _sample_point(rng, n, radius)
    scale = np.linalg.norm(y, axis=1)
    primary = centre + y
    # |x1 - x2| <= 2 for points that can contribute
    secondary = primary + scale[:, None] * _sample_relative(rng, n, 2.0 / scale)
    return (primary, secondary) if channel[2] == 0 else (secondary, primary)


def _density(channel, x1, x2):
    kind = channel[0]
    if kind == "uniform":
        inside = (_sq(x1) < 1.0) & (_sq(x2) < 1.0)
        return np.where(inside, 1.0 / _BALL_VOLUME**2, 0.0)
    if kind == "product":
        (ca, ra), (cb, rb) = _CENTRES[channel[1]], _CENTRES[channel[2]]
        return _point_density(x1 - ca, ra) * _point_density(x2 - cb, rb)
    centre, radius = _CENTRES[channel[1]]
    primary, secondary = (x1, x2) if channel[2] == 0 else (x2, x1)
    y = primary - centre
    scale = np.sqrt(_sq(y))
    with np.errstate(divide="ignore", invalid="ignore"):
        rel = _relative_density((secondary - primary) / scale[:, None], 2.0 / scale)
        return np.where(scale > 0, _point_density(y, radius) * rel / scale**4, 0.0)


def wheel3_integrand(x1, x2):
    """Integrand over the two unit balls (zero outside them)."""
    inside = (_sq(x1) < 1.0) & (_sq(x2) < 1.0)
    with np.errstate(divide="ignore"):
        value = 1.0 / (_sq(x1) * _sq(x2) * _sq(x1 - _E) * _sq(x1 - x2) * _sq(x2 - _E))
    return np.where(inside, value, 0.0)


def mixture_density(x1, x2):
    w = 1.0 / len(CHANNELS)
    return sum(w * _density(c, x1, x2) for c in CHANNELS)


def _block_sums(seed: int, block: int, n: int) -> tuple[float, float]:
    rng = np.random.default_rng([seed, block])
    which = rng.integers(len(CHANNELS), size=n)
    x1 = np.empty((n, 4))
    x2 = np.empty((n, 4))
    for ci, channel in enumerate(CHANNELS):
        mask = which == ci
        count = int(mask.sum())
        if count:
            x1[mask], x2[mask] = _draw(rng, count, channel)
    weights = PREFACTOR * wheel3_integrand(x1, x2) / mixture_density(x1, x2)
    return float(np.sum(weights)), float(np.sum(weights * weights))


def _run_blocks(seed, blocks):
    return [_block_sums(seed, b, n) for b, n in blocks]


def mc_full_residue(samples: int, seed: int, workers: int = 1) -> McEstimate:
    """Importance-sampled estimate of ``res G_3`` with its standard error."""
    if samples < MIN_SAMPLES:
        raise DomainError(f"need at least {MIN_SAMPLES} samples, got {samples}")
    if not 0 <= seed < 2**64:
        raise DomainError("seed must be a 64-bit unsigned integer")
    blocks = []
    start = 0
    b = 0
    while start < samples:
        n = min(BLOCK_SIZE, samples - start)
        blocks.append((b, n))
        start += n
        b += 1

    if workers <= 1:
        sums = _run_blocks(seed, blocks)
    else:
        parts = [blocks[i::workers] for i in range(workers)]
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(_run_blocks, [seed] * workers, parts))
        by_block = {}
        for part, res in zip(parts, results):
            for (bi, _), s in zip(part, res):
                by_block[bi] = s
        sums = [by_block[bi] for bi, _ in blocks]

    total = math.fsum(s for s, _ in sums)
    total_sq = math.fsum(q for _, q in sums)
    mean = total / samples
    var = max(total_sq / samples - mean * mean, 0.0) * samples / (samples - 1)
    return McEstimate(mean, math.sqrt(var / samples), samples, seed)
