"""Shared quivers, partitions and random symmetric polynomials for the tests."""
from __future__ import annotations

import itertools
import random

from coha.algebra import CohaElement
from coha.poly import MPoly, monomial_symmetric, omega
from coha.quiver import validate_partition, validate_quiver

A1 = validate_quiver(1, [])
A2 = validate_quiver(2, [(2, 1)])
A3 = validate_quiver(3, [(2, 1), (3, 2)])
D4 = validate_quiver(4, [(2, 1), (3, 1), (4, 1)])
KRONECKER = validate_quiver(2, [(2, 1), (2, 1)])
E6 = validate_quiver(6, [(2, 1), (3, 2), (4, 3), (5, 4), (6, 3)])
E7 = validate_quiver(7, [(2, 1), (3, 2), (4, 3), (5, 4), (6, 5), (7, 3)])
E8 = validate_quiver(8, [(2, 1), (3, 2), (4, 3), (5, 4), (6, 5), (7, 6), (8, 3)])


def whole(q):
    return validate_partition(q, [list(q.vertices)], require_dynkin=True)


def part(q, blocks):
    return validate_partition(q, blocks, require_dynkin=True)


def partitions_of(d, parts, largest=None):
    largest = d if largest is None else largest
    if d == 0:
        yield ()
        return
    if parts == 0:
        return
    for first in range(min(d, largest), 0, -1):
        for rest in partitions_of(d - first, parts - 1, first):
            yield (first,) + rest


def random_symmetric(rng: random.Random, gamma, degree: int, homogeneous=True) -> MPoly:
    """Random polynomial symmetric in each vertex's variables."""
    out = MPoly()
    degrees = [degree] if homogeneous else range(degree + 1)
    for d in degrees:
        for split in itertools.product(range(d + 1), repeat=len(gamma)):
            if sum(split) != d:
                continue
            for lams in itertools.product(*(list(partitions_of(k, g)) for k, g in zip(split, gamma))):
                if rng.random() < 0.5:
                    continue
                term = MPoly.const(rng.randint(-3, 3))
                for i, (lam, g) in enumerate(zip(lams, gamma), start=1):
                    term = term * monomial_symmetric(lam, [omega(i, j) for j in range(1, g + 1)])
                out = out + term
    return out


def random_element(rng, q, gamma, degree, homogeneous=True):
    return CohaElement(q, tuple(gamma), random_symmetric(rng, gamma, degree, homogeneous))
