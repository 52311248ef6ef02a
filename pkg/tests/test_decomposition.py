"""Directed sums, non-reducibility, and decompose_artin certificates."""

from __future__ import annotations

import pytest

from multiring import (
    FiniteRing,
    MixedModeMismatch,
    NoDecomposition,
    NotIdealSubspace,
    SubsetSelection,
    SumMode,
    Universe,
    build_multispace,
    decompose_artin,
    decompose_unit,
    directed_sum_check,
    enumerate_ideal_subspaces,
    is_non_reducible,
)
from conftest import duplicated_z2_space, single_ring_space, space_of_cyclics


def sel(elements, ops):
    return SubsetSelection(frozenset(elements), frozenset(ops))


def klein_zero_mul_space():
    """Additive Klein four-group with all products zero: a ring without unit."""
    universe = Universe(("0", "a", "b", "c"))
    add_rows = {
        0: (0, 1, 2, 3),
        1: (1, 0, 3, 2),
        2: (2, 3, 0, 1),
        3: (3, 2, 1, 0),
    }
    add = tuple(add_rows[i] for i in range(4))
    mul = tuple((0, 0, 0, 0) for _ in range(4))
    ring = FiniteRing(name="V0", universe=universe, carrier=(0, 1, 2, 3),
                      add_table=add, mul_table=mul, zero=0, unit=None)
    return build_multispace(universe, (ring,))


class TestDirectedSumCheck:
    def test_additive_split_of_z6(self, z6_space):
        assert directed_sum_check(
            z6_space, z6_space.full_selection(),
            sel({0, 3}, {1}), sel({0, 2, 4}, {1}), SumMode.ADDITIVE)

    def test_union_of_disjoint_rings(self, z4z6):
        assert directed_sum_check(
            z4z6, z4z6.full_selection(),
            sel({0, 1, 2, 3}, {1}), sel(range(4, 10), {2}), SumMode.UNION)

    def test_union_with_large_intersection_fails(self, z4_space):
        assert not directed_sum_check(
            z4_space, z4_space.full_selection(),
            sel({0, 2}, {1}), sel({0, 1, 2, 3}, {1}), SumMode.UNION)

    def test_additive_rejects_non_ideal_summand(self, z6_space):
        with pytest.raises(NotIdealSubspace):
            directed_sum_check(
                z6_space, z6_space.full_selection(),
                sel({0, 1}, {1}), sel({0, 2, 4}, {1}), SumMode.ADDITIVE)

    def test_additive_needs_a_single_ring(self, z4z6):
        with pytest.raises(MixedModeMismatch):
            directed_sum_check(
                z4z6, z4z6.full_selection(),
                sel({0, 1, 2, 3}, {1}), sel(range(4, 10), {2}),
                SumMode.ADDITIVE)

    def test_accepts_mode_strings(self, z6_space):
        assert directed_sum_check(
            z6_space, z6_space.full_selection(),
            sel({0, 3}, {1}), sel({0, 2, 4}, {1}), "additive")

    def test_additive_intersection_must_be_exactly_zero(self, z6_space):
        whole = z6_space.full_selection()
        assert not directed_sum_check(
            z6_space, whole, sel({0, 2, 4}, {1}), sel({0, 2, 4}, {1}),
            SumMode.ADDITIVE)

    def test_mode_soundness_size_formula(self):
        """Additive splits satisfy |whole| = |i1|*|i2|/|i1 & i2|."""
        for n in range(2, 13):
            space = single_ring_space(n)
            whole = space.full_selection()
            parts = enumerate_ideal_subspaces(space, whole)
            for a in parts:
                for b in parts:
                    if directed_sum_check(space, whole, a, b, SumMode.ADDITIVE):
                        meet = a.elements & b.elements
                        assert (len(whole.elements)
                                == len(a.elements) * len(b.elements) // len(meet))


class TestEnumerateIdealSubspaces:
    def test_z6_full_restriction(self, z6_space):
        parts = enumerate_ideal_subspaces(z6_space, z6_space.full_selection())
        assert [sorted(p.elements) for p in parts] == [
            [0], [0, 3], [0, 2, 4], [0, 1, 2, 3, 4, 5]]

    def test_two_ring_restriction_builds_unions(self, z4z6):
        parts = enumerate_ideal_subspaces(z4z6, z4z6.full_selection())
        # 3 ideals of Z4 (+ empty) x 4 ideals of Z6 (+ empty), minus all-empty
        assert len(parts) == 4 * 5 - 1
        elems = {frozenset(p.elements) for p in parts}
        assert frozenset({0, 4}) in elems
        assert frozenset(range(10)) in elems


class TestNonReducible:
    def test_z6_whole_space_splits(self, z6_space):
        assert not is_non_reducible(z6_space, z6_space.full_selection())

    def test_z4_whole_space_does_not_split(self, z4_space):
        assert is_non_reducible(z4_space, z4_space.full_selection())

    def test_minimal_nonzero_ideal_is_non_reducible(self, z6_space):
        assert is_non_reducible(z6_space, sel({0, 3}, {1}))

    def test_non_ideal_argument_rejected(self, z6_space):
        with pytest.raises(NotIdealSubspace):
            is_non_reducible(z6_space, sel({0, 1}, {1}))

    def test_two_ring_full_carrier_is_reducible(self, z4z6):
        assert not is_non_reducible(z4z6, z4z6.full_selection())


class TestDecomposeArtin:
    def test_z6(self, z6_space):
        deco = decompose_artin(z6_space)
        assert [sorted(c.elements) for c in deco.components] == [[0, 3], [0, 2, 4]]
        assert deco.per_ring_idempotents[1] == (3, 4)
        assert deco.per_ring_route[1] == "idempotent"

    def test_z10(self):
        space = single_ring_space(10)
        deco = decompose_artin(space)
        assert [sorted(c.elements) for c in deco.components] == [
            [0, 5], [0, 2, 4, 6, 8]]
        assert deco.per_ring_idempotents[1] == (5, 6)

    def test_z12(self):
        space = single_ring_space(12)
        deco = decompose_artin(space)
        assert [sorted(c.elements) for c in deco.components] == [
            [0, 4, 8], [0, 3, 6, 9]]
        assert deco.per_ring_idempotents[1] == (4, 9)

    def test_z4z6_union_of_per_ring_routes(self, z4z6):
        deco = decompose_artin(z4z6)
        assert [sorted(c.elements) for c in deco.components] == [
            [0, 1, 2, 3], [4, 7], [4, 6, 8]]
        assert deco.component_rings == (1, 2, 2)
        assert deco.per_ring_idempotents == {1: (1,), 2: (7, 8)}
        assert deco.mode_per_join[(0, 1)] is SumMode.UNION
        assert deco.mode_per_join[(0, 2)] is SumMode.UNION
        assert deco.mode_per_join[(1, 2)] is SumMode.ADDITIVE

    def test_single_ring_components_match_unit_spans(self):
        for n in (4, 6, 10, 12):
            space = single_ring_space(n)
            ring = space.ring(1)
            deco = decompose_artin(space)
            spans = []
            for e in decompose_unit(ring):
                span = frozenset(ring.mul(x, e) for x in ring.carrier)
                spans.append(span)
            assert [c.elements for c in deco.components] == spans

    def test_components_replay_invariants(self, z4z6):
        deco = decompose_artin(z4z6)
        for idx, comp in enumerate(deco.components):
            assert is_non_reducible(z4z6, comp), idx
        zeros = z4z6.zerolike()
        for (a, b), mode in deco.mode_per_join.items():
            meet = deco.components[a].elements & deco.components[b].elements
            if mode is SumMode.ADDITIVE:
                ring = z4z6.ring(deco.component_rings[a])
                assert meet == frozenset({ring.zero})
            else:
                assert meet <= zeros

    def test_search_route_for_non_unital_ring(self):
        space = klein_zero_mul_space()
        deco = decompose_artin(space)
        assert deco.per_ring_route[1] == "search"
        assert deco.per_ring_idempotents[1] == ()
        assert [sorted(c.elements) for c in deco.components] == [[0, 1], [0, 2]]
        for comp in deco.components:
            assert is_non_reducible(space, comp)

    def test_non_splittable_non_unital_ring_stays_whole(self):
        universe = Universe(("0", "x"))
        ring = FiniteRing(name="N2", universe=universe, carrier=(0, 1),
                          add_table=((0, 1), (1, 0)), mul_table=((0, 0), (0, 0)),
                          zero=0, unit=None)
        space = build_multispace(universe, (ring,))
        deco = decompose_artin(space)
        assert [sorted(c.elements) for c in deco.components] == [[0, 1]]

    def test_overlapping_unital_rings_fail_loudly(self):
        space = duplicated_z2_space()
        with pytest.raises(NoDecomposition):
            decompose_artin(space)

    def test_determinism(self, z4z6):
        assert decompose_artin(z4z6) == decompose_artin(z4z6)

    def test_mixed_family(self):
        space = space_of_cyclics(4, 6)
        deco = decompose_artin(space)
        assert len(deco.components) == 3
