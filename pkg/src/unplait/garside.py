"""Left-greedy canonical forms: the word-problem and classification oracle.

Every braid on n strands factors uniquely as Delta^p s_1 ... s_l, where Delta
is the positive half twist, each simple factor s_i is a permutation braid (a
positive braid in which any two strands cross at most once), no factor is the
identity or Delta, and each adjacent pair is left-weighted: every generator
that left-divides s_{i+1} already right-divides s_i.  Two words are equal as
braids iff they produce identical forms; the quotient by the center <Delta^2>
is taken by reducing the Delta power mod 2.

Simple factors are stored as permutations and all normalization arithmetic is
permutation arithmetic, so intermediate results never blow up the way raw
words do under the Artin relations.  The conjugation automorphism by Delta
(sigma_i -> sigma_{n-i}) is applied internally when Delta powers are pushed
to the front.
"""

from __future__ import annotations

from dataclasses import dataclass

from .words import BraidWord, Permutation, inverse

__all__ = [
    "SimpleFactor",
    "NormalForm",
    "half_twist",
    "normal_form",
    "is_identity",
    "equals",
    "center_coset_rep",
    "to_word",
]

# A permutation braid is determined by its permutation.
SimpleFactor = Permutation


@dataclass(frozen=True, slots=True)
class NormalForm:
    """Canonical form Delta^inf s_1 ... s_l of a braid on ``n`` strands.

    Factors are the permutations of the simple elements, in order.  Equal
    braids always yield equal (==) NormalForm values.
    """

    n: int
    inf: int
    factors: tuple[Permutation, ...]

    def is_identity(self) -> bool:
        return self.inf == 0 and not self.factors

    def canonical_length(self) -> int:
        return len(self.factors)

    def to_json(self) -> dict:
        return {"inf": self.inf, "factors": [list(f.image) for f in self.factors]}


def half_twist(n: int) -> BraidWord:
    """The positive half twist sigma_1 (sigma_2 sigma_1) ... (sigma_{n-1} ... sigma_1)."""
    if n < 2:
        raise ValueError(f"half twist needs at least 2 strands, got {n}")
    values = [j for i in range(1, n) for j in range(i, 0, -1)]
    return BraidWord.from_ints(n, values)


def normal_form(b: BraidWord) -> NormalForm:
    """Compute the left-greedy canonical form of a word."""
    base, factors = _word_to_factors(b)
    extra, normalized = _left_normalize(b.n, factors)
    wrapped = tuple(Permutation(tuple(v + 1 for v in f)) for f in normalized)
    return NormalForm(b.n, base + extra, wrapped)


def is_identity(b: BraidWord) -> bool:
    """True iff the word represents the identity braid."""
    nf = normal_form(b)
    return nf.inf == 0 and not nf.factors


def equals(a: BraidWord, b: BraidWord) -> bool:
    """Braid equality via canonical forms."""
    if a.n != b.n:
        raise ValueError(f"strand counts differ: {a.n} vs {b.n}")
    return normal_form(a) == normal_form(b)


def center_coset_rep(b: BraidWord) -> NormalForm:
    """Canonical coset representative modulo the full twist <Delta^2>.

    Two braids receive the same value iff they differ by a power of the full
    twist.  For n < 3 the quotient is degenerate (on 2 strands every pure
    braid is a power of the full twist, so pure inputs always map to the
    identity form); the same inf-mod-2 rule is applied throughout.
    """
    nf = normal_form(b)
    return NormalForm(nf.n, nf.inf % 2, nf.factors)


def to_word(nf: NormalForm) -> BraidWord:
    """Expand a normal form back into a braid word."""
    values: list[int] = []
    if nf.inf:
        half = half_twist(nf.n)
        block = half.to_ints() if nf.inf > 0 else inverse(half).to_ints()
        values.extend(block * abs(nf.inf))
    for factor in nf.factors:
        values.extend(_permutation_word(tuple(v - 1 for v in factor.image)))
    return BraidWord.from_ints(nf.n, values)


# -- internal permutation arithmetic (0-based one-line arrays) --------------
#
# Composition convention: (x . y)[i] = x[y[i]], matching word concatenation
# with the rightmost letter applied first.  Under it:
#   sigma_s right-divides x  <=>  x[s-1] > x[s]        (0-based s-1)
#   sigma_s left-divides  y  <=>  y^-1[s-1] > y^-1[s]


def _invert(p: list[int] | tuple[int, ...]) -> list[int]:
    inv = [0] * len(p)
    for i, v in enumerate(p):
        inv[v] = i
    return inv


def _right_descents(p: list[int] | tuple[int, ...]) -> int:
    mask = 0
    for i in range(len(p) - 1):
        if p[i] > p[i + 1]:
            mask |= 1 << i
    return mask


def _tau(p: tuple[int, ...]) -> tuple[int, ...]:
    """Conjugation by the half twist: w0 . p . w0."""
    m = len(p) - 1
    return tuple(m - p[m - i] for i in range(len(p)))


def _word_to_factors(b: BraidWord) -> tuple[int, list[tuple[int, ...]]]:
    """Rewrite a word as Delta^total f_1 ... f_k with permutation-braid factors.

    Positive runs are greedily coalesced into single factors; each negative
    letter sigma_i^-1 contributes Delta^-1 times the factor w0 . s_i, and the
    Delta powers are then pushed to the front through the tau automorphism.
    """
    n = b.n
    ident = tuple(range(n))
    facs: list[tuple[int, ...]] = []
    dpows: list[int] = []  # Delta power attached immediately left of each factor
    cur: list[int] | None = None

    def flush() -> None:
        nonlocal cur
        if cur is not None:
            facs.append(tuple(cur))
            dpows.append(0)
            cur = None

    for letter in b.letters:
        i = letter.index - 1
        if letter.sign > 0:
            if cur is None or cur[i] > cur[i + 1]:
                flush()
                cur = list(ident)
            cur[i], cur[i + 1] = cur[i + 1], cur[i]
        else:
            flush()
            comp = list(range(n - 1, -1, -1))
            comp[i], comp[i + 1] = comp[i + 1], comp[i]
            facs.append(tuple(comp))
            dpows.append(-1)
    flush()

    total = 0
    for j in range(len(facs) - 1, -1, -1):
        if total % 2:
            facs[j] = _tau(facs[j])
        total += dpows[j]
    return total, facs


def _fix_pair(x: list[int], ix: list[int], y: list[int], iy: list[int]) -> bool:
    """Make the pair (x, y) left-weighted in place.

    While some sigma_s left-divides y but does not right-divide x, move it:
    x gains an inversion at position s, y loses its leading occurrence.  The
    braid product x*y is unchanged and the resulting pair is the unique
    left-weighted decomposition of it.
    """
    n = len(x)
    moved = False
    while True:
        s = -1
        for k in range(n - 1):
            if iy[k] > iy[k + 1] and x[k] < x[k + 1]:
                s = k
                break
        if s < 0:
            return moved
        moved = True
        a, b = x[s], x[s + 1]
        x[s], x[s + 1] = b, a
        ix[a], ix[b] = s + 1, s
        i1, i2 = iy[s], iy[s + 1]
        y[i1], y[i2] = s + 1, s
        iy[s], iy[s + 1] = i2, i1


def _left_normalize(
    n: int, factors: list[tuple[int, ...]]
) -> tuple[int, list[tuple[int, ...]]]:
    """Left-weight a factor sequence; returns (extracted Delta power, factors).

    Sweeps right to left until every adjacent pair is left-weighted, dropping
    identity factors as they appear; at the fixed point all Delta factors sit
    at the front and are converted into the returned power.
    """
    if n < 2:
        return 0, []
    ident = list(range(n))
    w0 = list(range(n - 1, -1, -1))
    facs = [list(f) for f in factors if list(f) != ident]
    if not facs:
        return 0, []
    invs = [_invert(f) for f in facs]
    rmask = [_right_descents(f) for f in facs]
    lmask = [_right_descents(inv) for inv in invs]

    changed = True
    while changed:
        changed = False
        i = len(facs) - 2
        while i >= 0:
            if i + 1 < len(facs) and lmask[i + 1] & ~rmask[i]:
                changed = True
                _fix_pair(facs[i], invs[i], facs[i + 1], invs[i + 1])
                rmask[i] = _right_descents(facs[i])
                lmask[i] = _right_descents(invs[i])
                if facs[i + 1] == ident:
                    del facs[i + 1], invs[i + 1], rmask[i + 1], lmask[i + 1]
                else:
                    rmask[i + 1] = _right_descents(facs[i + 1])
                    lmask[i + 1] = _right_descents(invs[i + 1])
            i -= 1

    power = 0
    while facs and facs[0] == w0:
        power += 1
        del facs[0]
    return power, [tuple(f) for f in facs]


def _permutation_word(p: tuple[int, ...]) -> list[int]:
    """A reduced positive word (1-based letters) whose permutation is ``p``."""
    q = list(p)
    out: list[int] = []
    while True:
        for k in range(len(q) - 1):
            if q[k] > q[k + 1]:
                q[k], q[k + 1] = q[k + 1], q[k]
                out.append(k + 1)
                break
        else:
            break
    out.reverse()
    return out
