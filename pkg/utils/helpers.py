# utils/helpers.py
# Seeded randomness helpers. Every random draw in the package flows from one
# master seed so that runs are reproducible.

import numpy as np


def make_rng(seed=None) -> np.random.Generator:
    """
    Return a numpy Generator; pass an existing Generator through unchanged.
    """
    if isinstance(seed, np.random.Generator):
        return seed
    return np.random.default_rng(seed)


def derive_seeds(master_seed: int, count: int) -> list[int]:
    """
    Child seeds derived deterministically from a master seed, in index order.
    """
    children = np.random.SeedSequence(master_seed).spawn(count)
    return [int(child.generate_state(1)[0]) for child in children]


def jitter(x: np.ndarray, rng: np.random.Generator, scale: float) -> np.ndarray:
    """
    Perturb a starting vector for an optimizer restart.
    """
    x = np.asarray(x, dtype=float)
    return x + rng.normal(0.0, scale, size=x.shape) * np.maximum(1.0, np.abs(x))
