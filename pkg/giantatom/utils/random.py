# Standard Library
from typing import List

# Third Party
import numpy as np


def spawn_generators(seed: int, n: int) -> List[np.random.Generator]:
    """Independent, reproducible generators, one per restart or worker."""
    children = np.random.SeedSequence(seed).spawn(n)
    return [np.random.default_rng(child) for child in children]
