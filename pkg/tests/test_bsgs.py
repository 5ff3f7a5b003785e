"""Stabilizer chain cross-checked against plain breadth-first enumeration."""

import random

from cppo.bsgs import StabilizerChain
from cppo.permutation import identity_raw, mul_raw


def enumerate_raw(degree, gens):
    ident = identity_raw(degree)
    seen = {ident}
    frontier = [ident]
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = mul_raw(x, g)
                if y not in seen:
                    seen.add(y)
                    nxt.append(y)
        frontier = nxt
    return seen


CASES = [
    ("trivial", 3, []),
    ("c2", 2, [(1, 0)]),
    ("s3", 3, [(1, 0, 2), (1, 2, 0)]),
    ("c6", 6, [(1, 2, 3, 4, 5, 0)]),
    ("s5", 5, [(1, 0, 2, 3, 4), (1, 2, 3, 4, 0)]),
    ("a5", 5, [(1, 2, 0, 3, 4), (1, 2, 3, 4, 0)]),
    ("d8", 4, [(1, 2, 3, 0), (3, 2, 1, 0)]),
    ("v4", 4, [(1, 0, 3, 2), (2, 3, 0, 1)]),
    ("s4xc2", 6, [(1, 0, 2, 3, 4, 5), (1, 2, 3, 0, 4, 5), (0, 1, 2, 3, 5, 4)]),
    ("a6", 6, [(1, 2, 0, 3, 4, 5), (0, 1, 2, 3, 5, 4), (1, 0, 3, 2, 4, 5), (0, 2, 1, 4, 3, 5)]),
]


def test_order_matches_enumeration():
    for name, degree, gens in CASES:
        chain = StabilizerChain.from_raw_generators(degree, gens)
        elems = enumerate_raw(degree, gens)
        assert chain.order() == len(elems), name


def test_membership_matches_enumeration():
    rng = random.Random(7)
    for name, degree, gens in CASES:
        chain = StabilizerChain.from_raw_generators(degree, gens)
        elems = enumerate_raw(degree, gens)
        for x in elems:
            assert chain.contains_raw(x), (name, x)
        # a handful of outside elements must be rejected
        for _ in range(30):
            images = list(range(degree))
            rng.shuffle(images)
            x = tuple(images)
            assert chain.contains_raw(x) == (x in elems), (name, x)


def test_sift_gives_identity_exactly_for_members():
    degree, gens = 5, [(1, 0, 2, 3, 4), (1, 2, 3, 4, 0)]
    chain = StabilizerChain.from_raw_generators(degree, gens)
    ident = identity_raw(degree)
    for x in enumerate_raw(degree, gens):
        assert chain.sift(x) == ident


def test_chain_orders_multiply_along_orbits():
    degree, gens = 5, [(1, 0, 2, 3, 4), (1, 2, 3, 4, 0)]
    chain = StabilizerChain.from_raw_generators(degree, gens)
    prod = 1
    for n in chain.orbit_sizes():
        prod *= n
    assert prod == 120


def test_incremental_extension():
    chain = StabilizerChain(4)
    assert chain.order() == 1
    chain._insert((1, 0, 2, 3))
    chain._schreier_sims()
    assert chain.order() == 2
    chain._insert((0, 1, 3, 2))
    chain._schreier_sims()
    assert chain.order() == 4
    chain._insert((1, 2, 3, 0))
    chain._schreier_sims()
    assert chain.order() == 24


def test_transversal_elements_do_what_they_claim():
    degree, gens = 5, [(1, 0, 2, 3, 4), (1, 2, 3, 4, 0)]
    chain = StabilizerChain.from_raw_generators(degree, gens)
    for level, b in enumerate(chain.base):
        for point in range(degree):
            u = chain.coset_representative(level, point)
            if u is None:
                continue
            assert u[b] == point
            # representatives at deeper levels fix the earlier base points
            for earlier in chain.base[:level]:
                assert u[earlier] == earlier


def test_random_subgroups_of_s6_agree_with_enumeration():
    rng = random.Random(2024)
    degree = 6
    for _ in range(25):
        k = rng.randint(1, 3)
        gens = []
        for _ in range(k):
            images = list(range(degree))
            rng.shuffle(images)
            gens.append(tuple(images))
        chain = StabilizerChain.from_raw_generators(degree, gens)
        assert chain.order() == len(enumerate_raw(degree, gens))
