import random

import pytest

from conftest import SENNIT_TEXT, THETA_TEXT, rand_word, sim_permutation
from unplait import (
    BraidWord,
    Letter,
    Permutation,
    compose,
    free_reduce,
    inverse,
    is_identity,
    is_pure,
    parse,
    permutation,
    power,
    writhe,
)
from unplait.garside import equals


def test_letter_validation():
    with pytest.raises(ValueError):
        Letter(0, 1)
    with pytest.raises(ValueError):
        Letter(1, 2)
    with pytest.raises(ValueError):
        Letter.from_int(0)
    assert Letter.from_int(-3) == Letter(3, -1)
    assert Letter(2, -1).inverse() == Letter(2, 1)


def test_word_validation():
    with pytest.raises(ValueError):
        BraidWord(0)
    with pytest.raises(ValueError):
        BraidWord.from_ints(3, [3])
    assert len(BraidWord.identity(1)) == 0
    assert BraidWord.from_ints(4, [1, -3]).to_ints() == (1, -3)


def test_permutation_validation():
    with pytest.raises(ValueError):
        Permutation((1, 1, 3))
    p = Permutation((2, 1, 3))
    assert p.n == 3 and not p.is_identity()
    assert p[1] == 2 and p[3] == 3


def test_compose():
    assert compose(parse("B3: 1"), parse("B3: -1")).to_ints() == (1, -1)
    assert compose(BraidWord.identity(3), parse("B3: 2 2")).to_ints() == (2, 2)
    assert compose(parse("B5: 3 4"), parse("B5: -2 -1")).to_ints() == (3, 4, -2, -1)
    with pytest.raises(ValueError):
        compose(BraidWord.identity(3), BraidWord.identity(4))


def test_inverse():
    assert inverse(parse("B3: 1 -2")).to_ints() == (2, -1)
    assert inverse(BraidWord.identity(3)).to_ints() == ()
    assert inverse(parse("B5: 3 4 -2 -1")).to_ints() == (1, 2, -4, -3)


def test_power():
    assert power(parse("B3: 2 1"), 3).to_ints() == (2, 1, 2, 1, 2, 1)
    assert power(parse("B3: 1 -2"), -2).to_ints() == (2, -1, 2, -1)
    assert power(parse("B3: 1"), 0).to_ints() == ()


def test_free_reduce():
    assert free_reduce(parse("B3: 1 -1 2")).to_ints() == (2,)
    assert free_reduce(parse("B3: 1 2 -2 -1")).to_ints() == ()
    assert free_reduce(parse("B4: 1 3")).to_ints() == (1, 3)


def test_permutation_of_words():
    assert permutation(parse("B3: 1")).image == (2, 1, 3)
    assert permutation(parse("B3: 2 2")).image == (1, 2, 3)
    # the sennit is pure: verified against the independent simulator
    sennit = parse(SENNIT_TEXT)
    assert sim_permutation(sennit.to_ints(), 5) == (1, 2, 3, 4, 5)
    assert permutation(sennit).image == (1, 2, 3, 4, 5)


def test_is_pure():
    assert not is_pure(parse("B3: 1"))
    assert is_pure(parse("B3: 1 1"))
    theta = parse(THETA_TEXT)
    assert sim_permutation(theta.to_ints(), 6) == (1, 2, 3, 4, 5, 6)
    assert is_pure(theta)


def test_writhe():
    assert writhe(parse("B3: (2 1)^3")) == 6
    assert writhe(parse("B3: 1 -1")) == 0
    sennit = parse(SENNIT_TEXT)
    assert sum(1 for v in sennit.to_ints() if v > 0) == 10
    assert writhe(sennit) == 0


def test_writhe_and_permutation_are_homomorphisms():
    rng = random.Random(101)
    for _ in range(100):
        n = rng.randint(2, 6)
        a = rand_word(rng, n, rng.randint(0, 20))
        b = rand_word(rng, n, rng.randint(0, 20))
        ab = compose(a, b)
        assert writhe(ab) == writhe(a) + writhe(b)
        pa, pb = permutation(a), permutation(b)
        assert permutation(ab).image == tuple(pa[pb[p]] for p in range(1, n + 1))


def test_free_reduce_preserves_the_braid():
    rng = random.Random(202)
    for _ in range(100):
        n = rng.randint(2, 6)
        w = rand_word(rng, n, rng.randint(0, 24))
        r = free_reduce(w)
        for k in range(len(r) - 1):
            assert r.letters[k].inverse() != r.letters[k + 1]
        assert permutation(r) == permutation(w)
        assert writhe(r) == writhe(w)
        assert equals(r, w)


def test_word_times_inverse_is_identity():
    rng = random.Random(303)
    for _ in range(100):
        n = rng.randint(1, 6)
        w = rand_word(rng, n, rng.randint(0, 40))
        assert is_identity(compose(w, inverse(w)))
