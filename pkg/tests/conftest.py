"""Shared helpers: seeded random word generators, an independent permutation
simulator used as an oracle, and relation-rewriting moves."""

from __future__ import annotations

import random

from unplait import BraidWord, compose
from unplait.garside import _permutation_word
from unplait.words import permutation

# The two showcase braids and their straightened forms.
SENNIT_TEXT = "B5: (3 4 -2 -1)^5"
THETA_TEXT = "B6: (-2 -1 -3 -2 4 3 5 4)^3"

# The fully expanded rewritten words for the two fixtures, as displayed after
# straightening (s) and after removing the tracked strand (s'), with the
# obvious cancellations already applied.
SENNIT_S = (3, 4, -2, 3, 4, 1, 2, 3, 4, 4, 3, 1, 2, 3, 4, 4, 3, 2, 3, 4, -2,
            -1, 3, 4, -2, -1, -4, -4, -3, -2, -1, -1, -2, -4, -3, -2, -1, -1,
            -2, -3, -2, -1)
SENNIT_S_PRIME = (3, -2, 3, 1, 2, 3, 3, 2, 1, 2, 3, 3, 2, 1, 2, 3, -1, 2, 3,
                  -1, -3, -3, -2, -1, -1, -2, -3, -2, -1, -1, -2, -3, -2, -1)
THETA_S = (-2, -1, -3, -2, 4, 3, 5, 4, -2, -1, 2, 1, 1, 2, 3, 4, 5, 5, 4, 1,
           1, 2, 3, 4, 5, 5, 4, 3, 4, 3, 5, 4, -2, -1, -3, -2, -5, -5, -4,
           -3, -2, -1, -1, -2, -5, -4, -3, -2, -1, -1, -2, -3)
THETA_S_PRIME = (-2, -1, -3, -2, 4, 3, -2, -1, 2, 1, 1, 2, 3, 4, 4, 3, 1, 1,
                 2, 3, 4, 4, 3, 2, 3, 2, 4, 3, -1, -2, -4, -4, -3, -2, -1,
                 -1, -2, -4, -3, -2, -1, -1, -2, -3)


def rand_word(rng: random.Random, n: int, length: int) -> BraidWord:
    if n < 2 or length == 0:
        return BraidWord.identity(n)
    values = [rng.randint(1, n - 1) * rng.choice((1, -1)) for _ in range(length)]
    return BraidWord.from_ints(n, values)


def rand_pure_word(rng: random.Random, n: int, max_len: int) -> BraidWord:
    """Random pure braid: a random word closed up by the positive lift of the
    inverse of its permutation (at most n(n-1)/2 extra letters)."""
    reserve = n * (n - 1) // 2
    body = rand_word(rng, n, rng.randint(0, max(0, max_len - reserve)))
    image = permutation(body).image
    inv = [0] * n
    for start, end in enumerate(image):
        inv[end - 1] = start
    lift = _permutation_word(tuple(inv))
    return compose(body, BraidWord.from_ints(n, lift))


def sim_permutation(values: tuple[int, ...], n: int) -> tuple[int, ...]:
    """Brute-force strand tracker, written independently of the library:
    apply each letter right to left as a swap of adjacent positions."""
    strand_at = list(range(n + 1))  # position -> strand label
    for v in reversed(values):
        j = abs(v)
        strand_at[j], strand_at[j + 1] = strand_at[j + 1], strand_at[j]
    image = [0] * n
    for position in range(1, n + 1):
        image[strand_at[position] - 1] = position
    return tuple(image)


def artin_rewrite(rng: random.Random, values: tuple[int, ...], n: int, steps: int) -> list[int]:
    """Apply random braid-relation moves: free insertion/cancellation, far
    commutation, and the same-sign triple rewrite aba <-> bab."""
    vals = list(values)
    for _ in range(steps):
        move = rng.randrange(4)
        if move == 0 and n > 1:
            i = rng.randint(1, n - 1) * rng.choice((1, -1))
            k = rng.randint(0, len(vals))
            vals[k:k] = [i, -i]
        elif move == 1:
            spots = [k for k in range(len(vals) - 1) if vals[k] == -vals[k + 1]]
            if spots:
                k = rng.choice(spots)
                del vals[k:k + 2]
        elif move == 2:
            spots = [k for k in range(len(vals) - 1)
                     if abs(abs(vals[k]) - abs(vals[k + 1])) >= 2]
            if spots:
                k = rng.choice(spots)
                vals[k], vals[k + 1] = vals[k + 1], vals[k]
        else:
            spots = [k for k in range(len(vals) - 2)
                     if vals[k] == vals[k + 2]
                     and abs(abs(vals[k]) - abs(vals[k + 1])) == 1
                     and (vals[k] > 0) == (vals[k + 1] > 0)]
            if spots:
                k = rng.choice(spots)
                a, b = vals[k], vals[k + 1]
                vals[k:k + 3] = [b, a, b]
    return vals
