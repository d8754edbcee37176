"""
Seeded random streams.

Every stream is a numpy PCG64 generator keyed by a SeedSequence:

    row stream    SeedSequence(seed, spawn_key=(row,))
    derived seed  SeedSequence(master, spawn_key=keys) -> first uint64 word

so rows and trials can run in any order, or in parallel, and still
reproduce the same numbers.
"""

from typing import Tuple

import numpy as np

MAX_SEED = 2 ** 64 - 1


def row_generator(seed: int, row: int) -> np.random.Generator:
    """Independent stream for one sampler row"""
    return generator_for(seed, row)


def derive_seed(master: int, *keys: int) -> int:
    """64-bit seed derived from a master seed and a counter tuple"""
    sequence = np.random.SeedSequence(master, spawn_key=tuple(keys))
    return int(sequence.generate_state(1, dtype=np.uint64)[0])


def generator_for(seed: int, *keys: int) -> np.random.Generator:
    """Stream for a generator or experiment step"""
    spawn_key: Tuple[int, ...] = tuple(keys)
    return np.random.Generator(np.random.PCG64(np.random.SeedSequence(seed, spawn_key=spawn_key)))


def fresh_seed() -> int:
    """New random 64-bit seed from OS entropy"""
    return int(np.random.SeedSequence().generate_state(1, dtype=np.uint64)[0])
