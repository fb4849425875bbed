"""Primitive noise channels with reproducible per-stream randomness."""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

CODE_CAPACITY = "code_capacity"
PHENOMENOLOGICAL = "phenomenological"
CIRCUIT_LEVEL = "circuit_level"
MODELS = (CODE_CAPACITY, PHENOMENOLOGICAL, CIRCUIT_LEVEL)

SIXTEEN_UNIFORM = "sixteen_uniform"
FIFTEEN_NONTRIVIAL = "fifteen_nontrivial"

# two-qubit Pauli products indexed 0..15 as (x1, z1, x2, z2) bit nibbles
_PAULI_LABEL = {(0, 0): "I", (1, 0): "X", (1, 1): "Y", (0, 1): "Z"}


@dataclass(frozen=True)
class NoiseParams:
    p: float
    model: str = CODE_CAPACITY
    dp_variant: str = SIXTEEN_UNIFORM

    def __post_init__(self):
        if not 0.0 <= self.p <= 1.0:
            raise ValueError(f"p must be in [0,1], got {self.p}")
        if self.model not in MODELS:
            raise ValueError(f"unknown model {self.model!r}")
        if self.dp_variant not in (SIXTEEN_UNIFORM, FIFTEEN_NONTRIVIAL):
            raise ValueError(f"unknown dp variant {self.dp_variant!r}")


class RngStream:
    """Deterministic random stream keyed by (master_seed, stream_id).

    The same key reproduces the same sample sequence regardless of how
    many worker processes a campaign uses.
    """

    def __init__(self, master_seed: int, stream_id: int = 0):
        self.master_seed = int(master_seed)
        self.stream_id = int(stream_id)
        seq = np.random.SeedSequence(entropy=self.master_seed,
                                     spawn_key=(self.stream_id,))
        self.gen = np.random.Generator(np.random.PCG64(seq))

    def __repr__(self):
        return f"RngStream(master_seed={self.master_seed}, stream_id={self.stream_id})"


def sample_iid(n: int, p: float, rng: RngStream,
               size: int | None = None) -> np.ndarray:
    """Bernoulli(p) bit pattern(s) of length n; (size, n) when batched."""
    if not 0.0 <= p <= 1.0:
        raise ValueError(f"p must be in [0,1], got {p}")
    shape = (n,) if size is None else (size, n)
    return (rng.gen.random(shape) < p).astype(np.uint8)


def sample_two_qubit_pauli(p: float, rng: RngStream,
                           variant: str = SIXTEEN_UNIFORM) -> str:
    """One two-qubit Pauli product drawn from the DP channel."""
    x1, z1, x2, z2 = sample_two_qubit_pauli_bits(p, rng, variant, size=1)[0]
    return _PAULI_LABEL[(x1, z1)] + _PAULI_LABEL[(x2, z2)]


def sample_two_qubit_pauli_bits(p: float, rng: RngStream,
                                variant: str = SIXTEEN_UNIFORM,
                                size: int = 1) -> np.ndarray:
    """(size, 4) array of (x1, z1, x2, z2) bits from the DP channel.

    sixteen_uniform: with probability p a uniform choice among all 16
    two-factor products (so identity keeps 1 - 15p/16 in total).
    fifteen_nontrivial: with probability p a uniform choice among the 15
    nontrivial products.
    """
    if not 0.0 <= p <= 1.0:
        raise ValueError(f"p must be in [0,1], got {p}")
    hit = rng.gen.random(size) < p
    out = np.zeros((size, 4), dtype=np.uint8)
    k = int(hit.sum())
    if k:
        if variant == SIXTEEN_UNIFORM:
            codes = rng.gen.integers(0, 16, size=k)
        elif variant == FIFTEEN_NONTRIVIAL:
            codes = rng.gen.integers(1, 16, size=k)
        else:
            raise ValueError(f"unknown dp variant {variant!r}")
        bits = ((codes[:, None] >> np.arange(4)) & 1).astype(np.uint8)
        out[hit] = bits
    return out
