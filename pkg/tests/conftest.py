"""Shared fixture spaces used across the test modules."""

from __future__ import annotations

from itertools import permutations

import pytest

from multiring import (
    MixedLawViolationError,
    MultiRingSpace,
    Universe,
    build_multispace,
    cyclic_ring_on,
)


def space_of_cyclics(*sizes: int, prefix: str = "r") -> MultiRingSpace:
    """A space of disjoint integers-mod-n rings, labelled r0e0, r0e1, ..."""
    labels = []
    for idx, n in enumerate(sizes):
        labels.extend(f"{prefix}{idx}e{i}" for i in range(n))
    universe = Universe(tuple(labels))
    rings = []
    offset = 0
    for idx, n in enumerate(sizes):
        rings.append(cyclic_ring_on(universe, tuple(range(offset, offset + n)),
                                    f"Z{n}_{idx}"))
        offset += n
    return build_multispace(universe, rings)


def z4z6_space() -> MultiRingSpace:
    """The standard two-ring fixture: Z4 on a0..a3, Z6 on b0..b5."""
    universe = Universe(tuple(f"a{i}" for i in range(4))
                        + tuple(f"b{i}" for i in range(6)))
    r1 = cyclic_ring_on(universe, tuple(range(4)), "Z4")
    r2 = cyclic_ring_on(universe, tuple(range(4, 10)), "Z6")
    return build_multispace(universe, (r1, r2))


def single_ring_space(n: int) -> MultiRingSpace:
    universe = Universe(tuple(str(i) for i in range(n)))
    ring = cyclic_ring_on(universe, tuple(range(n)), f"Z{n}")
    return build_multispace(universe, (ring,))


def duplicated_z2_space() -> MultiRingSpace:
    """Two identical copies of Z2 sharing the same two elements."""
    universe = Universe(("e0", "e1"))
    r1 = cyclic_ring_on(universe, (0, 1), "Z2a")
    r2 = cyclic_ring_on(universe, (0, 1), "Z2b")
    return build_multispace(universe, (r1, r2))


def overlap_counterexample():
    """A second ring on {e0,e1,e4,e5} whose addition breaks a mixed law.

    Found by scanning candidate cyclic tables on those four elements until
    the space validator produces a witness, exactly how the fixture is meant
    to be constructed; the scan order is deterministic.
    """
    universe = Universe(tuple(f"e{i}" for i in range(6)))
    first = cyclic_ring_on(universe, (0, 1, 2, 3), "Z4")
    for perm in permutations((0, 1, 4, 5)):
        candidate = cyclic_ring_on(universe, perm, "R2")
        try:
            build_multispace(universe, (first, candidate))
        except MixedLawViolationError as exc:
            return universe, first, candidate, exc.violation
    raise AssertionError("no overlapping counterexample found")


@pytest.fixture(scope="session")
def z4z6():
    return z4z6_space()


@pytest.fixture(scope="session")
def z6_space():
    return single_ring_space(6)


@pytest.fixture(scope="session")
def z4_space():
    return single_ring_space(4)


@pytest.fixture(scope="session")
def dup_z2():
    return duplicated_z2_space()
