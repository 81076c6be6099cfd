"""Word constructors for the moves that generate the trivial subgroup.

The full twist, the strand flips, and the belt elements are the families of
pure braids realizable by moving a tied end of the braid; ribbon flips are
flips performed on adjacent strand pairs.  ``conjugated_flip`` gives the
closed form of a flip conjugated by a single generator, which witnesses that
the subgroup generated by the flips is normal.
"""

from __future__ import annotations

from .words import BraidWord, compose, inverse, power

__all__ = [
    "full_twist",
    "flip",
    "belt_element",
    "ribbon_flip",
    "conjugated_flip",
]


def full_twist(n: int) -> BraidWord:
    """(sigma_{n-1} ... sigma_2 sigma_1)^n: every strand turned once about the axis.

    Pure, writhe n(n-1), and central.
    """
    if n < 2:
        raise ValueError(f"full twist needs at least 2 strands, got {n}")
    return power(BraidWord.from_ints(n, range(n - 1, 0, -1)), n)


def flip(i: int, n: int) -> BraidWord:
    """Pass the i-th strand around one end of the braid (pure, writhe 2(n-1)).

    The three word shapes, with chains that collapse to nothing for small n:

        i = 1:          s1 s2 ... s_{n-2} s_{n-1}^2 s_{n-2} ... s1
        1 < i < n:      s_{i-1} ... s2 s1^2 s2 ... s_{n-2} s_{n-1}^2 s_{n-2} ... s_i
        i = n:          s_{n-1} ... s2 s1^2 s2 ... s_{n-2} s_{n-1}
    """
    if n < 2:
        raise ValueError(f"flips need at least 2 strands, got {n}")
    if not 1 <= i <= n:
        raise ValueError(f"flip index must be in 1..{n}, got {i}")
    if i == 1:
        values = [*range(1, n - 1), n - 1, n - 1, *range(n - 2, 0, -1)]
    elif i == n:
        values = [*range(n - 1, 1, -1), 1, 1, *range(2, n)]
    else:
        values = [
            *range(i - 1, 1, -1),
            1,
            1,
            *range(2, n - 1),
            n - 1,
            n - 1,
            *range(n - 2, i - 1, -1),
        ]
    return BraidWord.from_ints(n, values)


def belt_element(k: int, n: int) -> BraidWord:
    """Pass the tied end between the first k strands and the remaining n-k.

    (s_{k-1} ... s2 s1)^-k (s_{n-1} ... s_{k+2} s_{k+1})^{n-k}; k = 0 is the
    full twist and k = n its inverse.
    """
    if n < 2:
        raise ValueError(f"belt elements need at least 2 strands, got {n}")
    if not 0 <= k <= n:
        raise ValueError(f"belt index must be in 0..{n}, got {k}")
    lower = power(BraidWord.from_ints(n, range(k - 1, 0, -1)), -k)
    upper = power(BraidWord.from_ints(n, range(n - 1, k, -1)), n - k)
    return compose(lower, upper)


def ribbon_flip(i: int, m: int) -> BraidWord:
    """Flip the i-th ribbon (strand pair 2i-1, 2i) on 2m strands.

    The word is flip(2i) flip(2i-1); it moves the pair together and twists
    the ribbon by 720 degrees.
    """
    if m < 1:
        raise ValueError(f"ribbon count must be >= 1, got {m}")
    if not 1 <= i <= m:
        raise ValueError(f"ribbon index must be in 1..{m}, got {i}")
    n = 2 * m
    return compose(flip(2 * i, n), flip(2 * i - 1, n))


def conjugated_flip(j: int, sign: int, i: int, n: int) -> BraidWord:
    """Closed form of sigma_j^sign . flip(i) . sigma_j^-sign as a flip product.

    Generators touching neither strand i-1 nor i leave the flip unchanged;
    the four adjacent cases permute the flips, possibly up to conjugation by
    the flip itself.
    """
    if sign not in (1, -1):
        raise ValueError(f"sign must be +1 or -1, got {sign}")
    if not 1 <= j <= n - 1:
        raise ValueError(f"conjugating index must be in 1..{n - 1}, got {j}")
    if not 1 <= i <= n:
        raise ValueError(f"flip index must be in 1..{n}, got {i}")
    if j <= i - 2 or j > i:
        return flip(i, n)
    if j == i - 1:
        if sign > 0:
            return compose(compose(flip(i, n), flip(i - 1, n)), inverse(flip(i, n)))
        return flip(i - 1, n)
    # j == i, which forces i <= n-1
    if sign > 0:
        return flip(i + 1, n)
    return compose(compose(inverse(flip(i, n)), flip(i + 1, n)), flip(i, n))
