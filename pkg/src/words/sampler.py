"""Uniform sampling of minimal transitive star factorizations."""

import random
from typing import Optional

from .bijection import AnchorTuple, phi_inverse
from .enumeration import DEFAULT_WORD_GUARD, enumerate_words
from ..core.factorization import StarFactorization
from ..core.permutation import Permutation, cycle_decomposition
from ..utils.logger import get_logger


class FactorizationSampler:
    """Draws a uniform word and an independent uniform anchor tuple, then inverts the bijection.

    The word list is enumerated once, so repeated draws are cheap. Draws are
    deterministic for a fixed seed.
    """

    def __init__(self, p: Permutation, seed: int = 0, guard: int = DEFAULT_WORD_GUARD):
        self.decomp = cycle_decomposition(p)
        self.words = enumerate_words(self.decomp, guard=guard)
        self.rng = random.Random(seed)
        self.logger = get_logger("starfact.sampler")
        self.logger.debug(f"sampler ready: {len(self.words)} words, seed={seed}")

    def draw(self) -> StarFactorization:
        word = self.words[self.rng.randrange(len(self.words))]
        anchors = AnchorTuple(tuple(self.rng.choice(orbit) for orbit in self.decomp.cycles[1:]))
        return phi_inverse(word, anchors, self.decomp)


def sample_factorization(p: Permutation, seed: int = 0, guard: Optional[int] = None) -> StarFactorization:
    return FactorizationSampler(p, seed=seed, guard=guard or DEFAULT_WORD_GUARD).draw()
