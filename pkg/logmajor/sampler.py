r"""Deterministic, seeded random inputs for the falsification sweeps.

Every draw is addressed by a SamplerSeed (master, trial, purpose). The
triple is mixed with ``numpy.random.SeedSequence`` (the purpose tag enters
through its CRC-32) into the key of a counter-based Philox generator, so
trial k can be regenerated on its own, in any process and in any order.

Complex standard normals are built with the Box-Muller transform from the
generator's uniforms: z = sqrt(-log u1) exp(2 pi i u2), so E|z|^2 = 1 and
the real and imaginary parts are N(0, 1/2).
"""
import zlib
from typing import NamedTuple

import numpy as np

from logmajor.linalg import functions
from logmajor.linalg.matrix import DTYPE, freeze

MASK64 = (1 << 64) - 1
STRICT_DELTA = 1e-6
GOLDEN_SEED = 42
GOLDEN_DIMENSION = 4
CONCAVE_FAMILIES = ("power", "log_shift", "rational", "piecewise_linear")


class SamplerSeed(NamedTuple):
    """Address of one random draw.

    Attributes:
        master (int): master seed, reduced to 64 bits
        trial (int): trial index within a cell
        purpose (str): tag naming the cell and the role of the draw
    """

    master: int
    trial: int
    purpose: str

    def child(self, tag):
        """Independent stream for a sub-draw, e.g. the left unitary."""
        return SamplerSeed(self.master, self.trial, f"{self.purpose}/{tag}")

    def entropy(self):
        return [self.master & MASK64, self.trial & MASK64, zlib.crc32(self.purpose.encode("utf-8"))]

    def generator(self):
        return np.random.Generator(np.random.Philox(np.random.SeedSequence(self.entropy())))


def complex_normals(count, seed):
    """``count`` complex standard normals by Box-Muller."""
    uniforms = seed.generator().random((2, count))
    radius = np.sqrt(-np.log1p(-uniforms[0]))
    angle = 2.0 * np.pi * uniforms[1]
    return radius * np.cos(angle) + 1j * radius * np.sin(angle)


def sample_ginibre(n, seed):
    """n x n matrix of independent complex standard normals scaled by 1/sqrt(n)."""
    entries = complex_normals(n * n, seed).reshape(n, n) / np.sqrt(n)
    return freeze(np.array(entries, dtype=DTYPE))


def sample_haar_unitary(n, seed):
    """Haar unitary: QR of a Ginibre draw with the diagonal of R made positive."""
    q, r = np.linalg.qr(np.array(sample_ginibre(n, seed.child("ginibre"))))
    phases = np.diagonal(r)
    q = q * (phases / np.abs(phases))
    return freeze(np.array(q, dtype=DTYPE))


def sample_contraction(n, seed, strict=True):
    """U diag(sigma) V^* with Haar U, V and sigma uniform on [0, 1 - delta].

    Args:
        n (int): dimension
        seed (SamplerSeed): draw address
        strict (bool): use delta = 1e-6; otherwise sigma is uniform on [0, 1]
    """
    top = 1.0 - STRICT_DELTA if strict else 1.0
    sigma = top * seed.child("sigma").generator().random(n)
    left = sample_haar_unitary(n, seed.child("left"))
    right = sample_haar_unitary(n, seed.child("right"))
    return freeze((left * sigma) @ np.conj(right.T))


def sample_positive(n, seed):
    """g^* g for a Ginibre g."""
    g = sample_ginibre(n, seed)
    product = np.conj(g.T) @ g
    return freeze((product + np.conj(product.T)) / 2)


def sample_selfadjoint_contraction(n, seed):
    """U diag(lambda) U^* with lambda uniform on [-1, 1] and U Haar."""
    eigenvalues = 2.0 * seed.child("spectrum").generator().random(n) - 1.0
    unitary = sample_haar_unitary(n, seed.child("unitary"))
    product = (unitary * eigenvalues) @ np.conj(unitary.T)
    return freeze((product + np.conj(product.T)) / 2)


def sample_concave(seed, families=CONCAVE_FAMILIES):
    """A concave increasing ScalarFunction with f(0) = 0.

    Uniform choice among the requested ``families``: power(alpha) with alpha
    in (0, 1] (alpha = 1 with probability 1/8), c log(1 + t/c) and
    c t/(c + t) with log c uniform on [log 1/4, log 4], and a 4-knot concave
    piecewise-linear function through the origin.

    Raises:
        ValueError: on an unknown family name
    """
    unknown = set(families) - set(CONCAVE_FAMILIES)
    if unknown or not families:
        raise ValueError(f"unknown concave families {sorted(unknown)}, choose from {CONCAVE_FAMILIES}")
    rng = seed.generator()
    family = families[int(rng.integers(len(families)))]
    if family == "power":
        alpha = 1.0 if rng.random() < 0.125 else 1.0 - rng.random()
        return functions.power(alpha, family="concave")
    if family in ("log_shift", "rational"):
        c = float(np.exp(rng.uniform(np.log(0.25), np.log(4.0))))
        if family == "log_shift":
            return functions.log_shift(c, family="concave")
        return functions.rational(c, family="concave")
    # strictly increasing even for tied draws
    breaks = np.concatenate([[0.0], np.sort(rng.uniform(0.1, 4.0, 3))]) + np.arange(4) * 1e-3
    slopes = np.sort(rng.uniform(0.1, 2.0, 3))[::-1]
    values = np.concatenate([[0.0], np.cumsum(slopes * np.diff(breaks))])
    return functions.piecewise_linear(np.column_stack([breaks, values]), family="concave")


def sample_exponents(m, seed):
    """m Hoelder exponents p_i > 1 with sum 1/p_i = 1.

    Weights w_i uniform on (0, 1] are normalized into 1/p_i; the last
    reciprocal is 1 minus the others so the sum is 1 up to one rounding.
    """
    if m < 2:
        raise ValueError(f"need at least two exponents, got m = {m}")
    weights = 1.0 - seed.generator().random(m)
    reciprocals = weights / np.sum(weights)
    reciprocals[-1] = 1.0 - np.sum(reciprocals[:-1])
    return tuple(float(1.0 / q) for q in reciprocals)


def golden_draws(master=GOLDEN_SEED, n=GOLDEN_DIMENSION):
    """The committed reference draws: one per sampler for seed 42 and n = 4.

    Returns:
        tuple: (matrices dict, functions dict, params dict) in witness layout
    """
    def seed(name):
        return SamplerSeed(master, 0, f"golden/{name}")

    matrices = {
        "ginibre": sample_ginibre(n, seed("ginibre")),
        "haar_unitary": sample_haar_unitary(n, seed("haar_unitary")),
        "contraction": sample_contraction(n, seed("contraction")),
        "positive": sample_positive(n, seed("positive")),
        "selfadjoint_contraction": sample_selfadjoint_contraction(n, seed("selfadjoint_contraction")),
    }
    concave = {"concave": sample_concave(seed("concave"))}
    params = {"exponents": sample_exponents(3, seed("exponents"))}
    return matrices, concave, params
