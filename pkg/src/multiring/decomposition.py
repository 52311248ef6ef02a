"""Directed sums, non-reducibility, and idempotent-driven decompositions.

Two join semantics coexist.  Across rings, ideal subspaces combine by set
union and may only meet in elements that are additive zeros of every ring
containing them.  Within one ring, components combine by elementwise addition
(the classical internal direct sum) and must meet exactly in that ring's
zero.  A unital ring decomposes along its primitive orthogonal idempotents;
a non-unital ring is split by exhaustive search over its ideal pairs.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from itertools import product
from typing import Mapping, Optional

from .errors import (
    CapExceeded,
    MixedModeMismatch,
    NoDecomposition,
    NotIdealSubspace,
)
from .rings import (
    DEFAULT_RING_CAP,
    DEFAULT_SUBSET_BUDGET,
    FiniteRing,
    decompose_unit,
    enumerate_ideals,
    restrict_ring,
)
from .spaces import (
    MultiRingSpace,
    SubsetSelection,
    ideal_subspace_any_ops,
    ideal_subspace_within,
    is_ideal_subspace_t23,
)

NONREDUCIBLE_VERIFY_LIMIT = 12


class SumMode(Enum):
    """How two ideal subspaces are joined into a directed sum."""

    UNION = "union"
    ADDITIVE = "additive"


@dataclass(frozen=True)
class DirectedSumDecomposition:
    """Non-reducible components covering a space, with their certificates.

    ``component_rings[c]`` is the 1-based ring owning component c;
    ``per_ring_idempotents`` holds the orthogonal idempotents that generated
    a ring's components (empty tuple for search-route rings), and
    ``mode_per_join`` annotates every unordered component pair with its join
    semantics: additive inside one ring, union across rings.
    """

    components: tuple[SubsetSelection, ...]
    component_rings: tuple[int, ...]
    per_ring_idempotents: Mapping[int, tuple[int, ...]]
    per_ring_route: Mapping[int, str]
    mode_per_join: Mapping[tuple[int, int], SumMode]

    __hash__ = None


def _coerce_mode(mode: SumMode | str) -> SumMode:
    return mode if isinstance(mode, SumMode) else SumMode(mode)


def _zerolike_within(m: MultiRingSpace, whole: SubsetSelection) -> frozenset[int]:
    """Elements that are the zero of every selected ring containing them."""
    out = set()
    for x in whole.elements:
        owners = [m.ring(k) for k in whole.ops if x in m.ring(k).members]
        if owners and all(x == r.zero for r in owners):
            out.add(x)
    return frozenset(out)


def _spanned_rings(m: MultiRingSpace, sel: SubsetSelection) -> list[int]:
    return [k for k in sorted(sel.ops)
            if sel.elements & m.ring(k).members]


def directed_sum_check(m: MultiRingSpace, whole: SubsetSelection,
                       i1: SubsetSelection, i2: SubsetSelection,
                       mode: SumMode | str) -> bool:
    """Decide whether i1 and i2 form a directed sum of ``whole``.

    Both parts must first be ideal subspaces of the restriction named by
    ``whole``.  Union mode requires their union to be all of ``whole`` and
    their intersection to contain only zero-like elements; additive mode (one
    ring only) requires intersection exactly the ring zero and the sumset to
    reach all of ``whole``.
    """
    mode = _coerce_mode(mode)
    for name, part in (("first", i1), ("second", i2)):
        ok, reason = ideal_subspace_within(m, whole, part)
        if not ok:
            raise NotIdealSubspace(
                f"{name} summand is not an ideal subspace of the whole: {reason}")
    if mode is SumMode.UNION:
        if i1.elements | i2.elements != whole.elements:
            return False
        meet = i1.elements & i2.elements
        return meet <= _zerolike_within(m, whole)
    spanned = _spanned_rings(m, whole)
    if len(spanned) != 1:
        raise MixedModeMismatch(
            f"additive mode needs a single ring, whole spans {spanned}")
    ring = m.ring(spanned[0])
    if (i1.elements | i2.elements) - ring.members:
        raise MixedModeMismatch("additive summands must lie in the single ring")
    if i1.elements & i2.elements != frozenset({ring.zero}):
        return False
    sums = frozenset(ring.add(a, b) for a in i1.elements for b in i2.elements)
    return sums == whole.elements


def enumerate_ideal_subspaces(m: MultiRingSpace, ambient: SubsetSelection, *,
                              cap: int = DEFAULT_RING_CAP,
                              budget: int = DEFAULT_SUBSET_BUDGET
                              ) -> list[SubsetSelection]:
    """Every ideal subspace of the restriction named by ``ambient``.

    Candidates are unions of one ideal (or nothing) per ambient component;
    each union is re-validated, which matters when carriers overlap.  Sorted
    canonically by element set.
    """
    per_ring: list[list[Optional[frozenset[int]]]] = []
    total = 1
    for k in sorted(ambient.ops):
        ring = m.ring(k)
        whole = frozenset(ambient.elements & ring.members)
        if not whole:
            continue
        comp_ring = ring if whole == ring.members else restrict_ring(ring, whole)
        choices: list[Optional[frozenset[int]]] = [None]
        choices.extend(enumerate_ideals(comp_ring, cap=cap, budget=budget))
        per_ring.append(choices)
        total *= len(choices)
        if total > budget:
            raise CapExceeded(
                f"ideal-subspace enumeration over {total} unions exceeds budget")
    seen: dict[frozenset[int], SubsetSelection] = {}
    for combo in product(*per_ring):
        parts = [c for c in combo if c is not None]
        if not parts:
            continue
        elems = frozenset().union(*parts)
        if elems in seen:
            continue
        candidate = ideal_subspace_any_ops(m, ambient, elems)
        if candidate is not None:
            seen[elems] = candidate
    return [seen[e] for e in sorted(seen, key=lambda s: (len(s), sorted(s)))]


def is_non_reducible(m: MultiRingSpace, i: SubsetSelection, *,
                     cap: int = DEFAULT_RING_CAP,
                     budget: int = DEFAULT_SUBSET_BUDGET) -> bool:
    """True iff every directed-sum splitting of ``i`` is trivial.

    Exhausts all pairs of ideal subspaces of i's restriction under the
    applicable mode: additive when i spans a single ring, union otherwise.
    """
    ok, reason = ideal_subspace_within(m, m.full_selection(), i)
    if not ok:
        raise NotIdealSubspace(f"argument is not an ideal subspace: {reason}")
    candidates = enumerate_ideal_subspaces(m, i, cap=cap, budget=budget)
    if len(candidates) ** 2 > budget:
        raise CapExceeded(
            f"splitting search over {len(candidates)}^2 pairs exceeds budget")
    mode = (SumMode.ADDITIVE if len(_spanned_rings(m, i)) == 1
            else SumMode.UNION)
    for a_idx, part_a in enumerate(candidates):
        for part_b in candidates[a_idx:]:
            if part_a.elements == i.elements or part_b.elements == i.elements:
                continue
            if directed_sum_check(m, i, part_a, part_b, mode):
                return False
    return True


def _two_sided_span(ring: FiniteRing, e: int) -> frozenset[int]:
    """Additive span of all products of the ring with e, on both sides."""
    seed = {ring.mul(x, e) for x in ring.carrier}
    seed |= {ring.mul(e, x) for x in ring.carrier}
    span = set(seed)
    span.add(ring.zero)
    frontier = list(span)
    while frontier:
        a = frontier.pop()
        for b in list(span):
            for c in (ring.add(a, b), ring.add(b, a)):
                if c not in span:
                    span.add(c)
                    frontier.append(c)
        n = ring.neg(a)
        if n not in span:
            span.add(n)
            frontier.append(n)
    return frozenset(span)


def _first_additive_split(ring: FiniteRing, cap: int, budget: int
                          ) -> Optional[tuple[frozenset[int], frozenset[int]]]:
    """Canonically first pair of proper ideals forming an internal direct sum."""
    ideals = enumerate_ideals(ring, cap=cap, budget=budget)
    whole = ring.members
    zero_only = frozenset({ring.zero})
    for i1 in ideals:
        if i1 == whole:
            continue
        for i2 in ideals:
            if i2 == whole:
                continue
            if i1 & i2 != zero_only:
                continue
            sums = frozenset(ring.add(a, b) for a in i1 for b in i2)
            if sums == whole:
                return (i1, i2)
    return None


def _nonreducible_parts(ring: FiniteRing, cap: int,
                        budget: int) -> list[frozenset[int]]:
    split = _first_additive_split(ring, cap, budget)
    if split is None:
        return [ring.members]
    i1, i2 = split
    return (_nonreducible_parts(restrict_ring(ring, i1), cap, budget)
            + _nonreducible_parts(restrict_ring(ring, i2), cap, budget))


def decompose_artin(m: MultiRingSpace, *, cap: int = DEFAULT_RING_CAP,
                    budget: int = DEFAULT_SUBSET_BUDGET,
                    verify_limit: int = NONREDUCIBLE_VERIFY_LIMIT
                    ) -> DirectedSumDecomposition:
    """Decompose the space into non-reducible ideal subspaces.

    A unital ring contributes the additive spans of its primitive orthogonal
    idempotents; a non-unital ring is split exhaustively into non-reducible
    ideals.  The assembled output is verified against every decomposition
    invariant (and, for rings within ``verify_limit``, per-component
    non-reducibility); a failed certificate raises NoDecomposition rather
    than returning an unsound result.
    """
    components: list[SubsetSelection] = []
    component_rings: list[int] = []
    idem_map: dict[int, tuple[int, ...]] = {}
    route_map: dict[int, str] = {}
    for k in range(1, m.m + 1):
        ring = m.ring(k)
        if ring.unit is not None:
            idems = decompose_unit(ring)
            idem_map[k] = tuple(idems)
            route_map[k] = "idempotent"
            spans = [_two_sided_span(ring, e) for e in idems]
        else:
            idem_map[k] = ()
            route_map[k] = "search"
            spans = _nonreducible_parts(ring, cap, budget)
        for span in spans:
            components.append(SubsetSelection(span, frozenset({k})))
            component_rings.append(k)
    modes: dict[tuple[int, int], SumMode] = {}
    for a in range(len(components)):
        for b in range(a + 1, len(components)):
            same = component_rings[a] == component_rings[b]
            modes[(a, b)] = SumMode.ADDITIVE if same else SumMode.UNION
    deco = DirectedSumDecomposition(
        components=tuple(components),
        component_rings=tuple(component_rings),
        per_ring_idempotents=idem_map,
        per_ring_route=route_map,
        mode_per_join=modes,
    )
    _verify_decomposition(m, deco, cap, budget, verify_limit)
    return deco


def _verify_decomposition(m: MultiRingSpace, deco: DirectedSumDecomposition,
                          cap: int, budget: int, verify_limit: int) -> None:
    comps = deco.components
    zerolike = m.zerolike()
    rebuilt: list[frozenset[int]] = []

    def fail(msg: str):
        raise NoDecomposition(f"decomposition failed verification: {msg}")

    for k in range(1, m.m + 1):
        ring = m.ring(k)
        idems = deco.per_ring_idempotents.get(k, ())
        for e in idems:
            if ring.mul(e, e) != e:
                fail(f"ring {k}: {e} is not idempotent")
        for a_idx, e in enumerate(idems):
            for f in idems[a_idx + 1:]:
                if ring.mul(e, f) != ring.zero or ring.mul(f, e) != ring.zero:
                    fail(f"ring {k}: idempotents {e},{f} not orthogonal")
        if idems:
            total = idems[0]
            for e in idems[1:]:
                total = ring.add(total, e)
            if total != ring.unit:
                fail(f"ring {k}: idempotents do not sum to the unit")
        ring_comps = [c.elements for c, rk in zip(comps, deco.component_rings)
                      if rk == k]
        if not ring_comps:
            fail(f"ring {k} received no components")
        combined = ring_comps[0]
        for nxt in ring_comps[1:]:
            combined = frozenset(ring.add(a, b) for a in combined for b in nxt)
        if combined != ring.members:
            fail(f"ring {k}: components do not rebuild the ring additively")
        rebuilt.append(combined)
    # Additive joins inside a ring, union joins across rings.
    covered = frozenset().union(*rebuilt)
    if covered != m.carrier:
        fail("components do not cover the carrier")
    for (a, b), mode in deco.mode_per_join.items():
        meet = comps[a].elements & comps[b].elements
        if mode is SumMode.ADDITIVE:
            zero = m.ring(deco.component_rings[a]).zero
            if meet != frozenset({zero}):
                fail(f"components {a},{b} meet outside the ring zero")
        else:
            if not meet <= zerolike:
                fail(f"components {a},{b} meet outside the zero-like set")
    for idx, comp in enumerate(comps):
        if not is_ideal_subspace_t23(m, comp):
            fail(f"component {idx} is not an ideal subspace")
        if m.ring(deco.component_rings[idx]).size <= verify_limit:
            if not is_non_reducible(m, comp, cap=cap, budget=budget):
                fail(f"component {idx} is reducible")
