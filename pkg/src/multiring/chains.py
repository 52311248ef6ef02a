"""Maximal ideal chains per ring and their composition across a space.

A chain descends one operation pair at a time, following a chosen order of
the m pairs: during stage s the component of the active ring walks its own
maximal ideal chain down to the zero ideal while every other component stays
put, earlier rings resting at their zeros and later rings still whole.  Each
produced term is re-validated as a maximal ideal subspace of its predecessor,
so carrier overlaps that would silently break ideality abort loudly instead.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import product
from typing import Optional

from .errors import CapExceeded, StepInvalid
from .rings import (
    DEFAULT_RING_CAP,
    DEFAULT_SUBSET_BUDGET,
    FiniteRing,
    enumerate_ideals,
    maximal_ideals,
    restrict_ring,
)
from .spaces import (
    MultiRingSpace,
    SubsetSelection,
    _ring_restriction_ok,
    ideal_subspace_any_ops,
    ideal_subspace_within,
)


@dataclass(frozen=True)
class OperationOrder:
    """A permutation of the 1-based operation-pair indices."""

    order: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "order", tuple(self.order))
        if sorted(self.order) != list(range(1, len(self.order) + 1)):
            raise ValueError(f"{self.order} is not a permutation of 1..m")


@dataclass(frozen=True)
class IdealChain:
    """A strictly descending chain of ideal subspaces under one order.

    ``stage_boundaries[s]`` is the index in ``terms`` of the first term
    produced while descending operation ``order.order[s]``; a stage that
    produced no terms shares its boundary with the next stage.  When
    alternatives were recorded, ``alternatives[t-1]`` lists every maximal
    choice that was available for the component replaced at term t.
    """

    order: OperationOrder
    terms: tuple[SubsetSelection, ...]
    stage_boundaries: tuple[int, ...]
    alternatives: Optional[tuple[tuple[frozenset[int], ...], ...]] = None


@lru_cache(maxsize=None)
def _max_chain_cached(r: FiniteRing, cap: int,
                      budget: int) -> tuple[frozenset[int], ...]:
    chain: list[frozenset[int]] = [r.members]
    current = r
    while current.size > 1:
        choices = maximal_ideals(current, cap=cap, budget=budget)
        nxt = choices[0]
        chain.append(nxt)
        current = restrict_ring(current, nxt)
    return tuple(chain)


def max_ideal_chain(r: FiniteRing, *, cap: int = DEFAULT_RING_CAP,
                    budget: int = DEFAULT_SUBSET_BUDGET) -> list[frozenset[int]]:
    """Unrefinable descending chain from the carrier to the zero ideal.

    Each step takes the canonically smallest maximal ideal of the previous
    term viewed as a ring of its own, so the result is deterministic.
    """
    return list(_max_chain_cached(r, cap, budget))


def _between_candidates(m: MultiRingSpace, prev: SubsetSelection,
                        cur: SubsetSelection, cap: int,
                        budget: int) -> Optional[SubsetSelection]:
    """Search for an ideal subspace strictly between cur and prev.

    Candidates are unions of one interval ideal per ambient component; every
    strictly-between ideal subspace is the union of its own per-ring
    components, so the search is complete.  Returns a witness or None.
    """
    intervals: list[list[frozenset[int]]] = []
    total = 1
    for k in sorted(prev.ops):
        ring = m.ring(k)
        whole = frozenset(prev.elements & ring.members)
        if not whole:
            continue
        comp_ring = ring if whole == ring.members else restrict_ring(ring, whole)
        lower = cur.elements & whole
        ideals = [s for s in enumerate_ideals(comp_ring, cap=cap, budget=budget)
                  if lower <= s]
        intervals.append(ideals)
        total *= len(ideals)
        if total > budget:
            raise CapExceeded(
                f"between-term search over {total} candidates exceeds budget")
    for combo in product(*intervals):
        elems = frozenset().union(*combo) if combo else frozenset()
        if not (cur.elements < elems < prev.elements):
            continue
        candidate = ideal_subspace_any_ops(m, prev, elems)
        if candidate is not None:
            return candidate
    return None


def ideal_subspace_chain(m: MultiRingSpace, order: OperationOrder | tuple[int, ...],
                         *, cap: int = DEFAULT_RING_CAP,
                         budget: int = DEFAULT_SUBSET_BUDGET,
                         record_alternatives: bool = False) -> IdealChain:
    """Compose per-ring maximal ideal chains into a chain for the space.

    Stage s replaces the component of ring order[s] along that component's
    maximal ideal chain while the other components are carried over, then
    certifies each term: strictly smaller, an ideal subspace of its
    predecessor, and nothing enumerable strictly between.  Any failure
    (possible when ring carriers overlap) raises StepInvalid.
    """
    if not isinstance(order, OperationOrder):
        order = OperationOrder(tuple(order))
    if len(order.order) != m.m:
        raise ValueError(f"order must permute 1..{m.m}")
    all_ops = m.all_ops
    components: dict[int, frozenset[int]] = {
        k: m.ring(k).members for k in range(1, m.m + 1)}
    terms = [m.full_selection()]
    boundaries: list[int] = []
    alts: list[tuple[frozenset[int], ...]] = []
    for k in order.order:
        boundaries.append(len(terms))
        active_start = terms[-1].elements & m.ring(k).members
        why = _ring_restriction_ok(m.ring(k), frozenset(active_start))
        if why is not None:
            raise StepInvalid(
                f"component of ring {k} is not a ring at stage start: {why}")
        active_ring = (m.ring(k) if active_start == m.ring(k).members
                       else restrict_ring(m.ring(k), frozenset(active_start)))
        stage_chain = _max_chain_cached(active_ring, cap, budget)
        for step, nxt in enumerate(stage_chain[1:]):
            components[k] = nxt
            elems = frozenset().union(*components.values())
            term = SubsetSelection(elems, all_ops)
            prev = terms[-1]
            if not term.elements < prev.elements:
                raise StepInvalid(
                    f"stage for ring {k} produced a non-descending term "
                    f"(carrier overlap)", term)
            ok, reason = ideal_subspace_within(m, prev, term)
            if not ok:
                raise StepInvalid(
                    f"term after stage-{k} step {step + 1} is not an ideal "
                    f"subspace of its predecessor: {reason}", term)
            witness = _between_candidates(m, prev, term, cap, budget)
            if witness is not None:
                raise StepInvalid(
                    f"term after stage-{k} step {step + 1} is not maximal "
                    f"in its predecessor", term)
            if record_alternatives:
                prev_comp = prev.elements & m.ring(k).members
                comp_ring = (m.ring(k) if prev_comp == m.ring(k).members
                             else restrict_ring(m.ring(k), frozenset(prev_comp)))
                alts.append(tuple(maximal_ideals(comp_ring, cap=cap,
                                                 budget=budget)))
            terms.append(term)
    return IdealChain(order=order, terms=tuple(terms),
                      stage_boundaries=tuple(boundaries),
                      alternatives=tuple(alts) if record_alternatives else None)


def chain_is_valid(m: MultiRingSpace, chain: IdealChain, *,
                   budget: int = DEFAULT_SUBSET_BUDGET) -> bool:
    """Replay the maximal-ideal-subspace-chain definition against a chain.

    Checks descent, per-step ideality, and — by exhausting every element set
    between consecutive terms — that no ideal subspace was skipped.  The
    between-term search is the independent oracle for the construction above.
    """
    terms = chain.terms
    if not terms:
        return False
    first = terms[0]
    if first.elements != m.carrier or first.ops != m.all_ops:
        return False
    for prev, cur in zip(terms, terms[1:]):
        if not cur.elements < prev.elements:
            return False
        ok, _ = ideal_subspace_within(m, prev, cur)
        if not ok:
            return False
        free = sorted(prev.elements - cur.elements)
        if 1 << len(free) > budget:
            raise CapExceeded(
                f"between-term subset sweep over 2^{len(free)} exceeds budget")
        for mask in range(1, (1 << len(free)) - 1):
            extra = frozenset(e for i, e in enumerate(free) if mask >> i & 1)
            if ideal_subspace_any_ops(m, prev, cur.elements | extra) is not None:
                return False
    return True


@dataclass(frozen=True)
class ArtinReport:
    """Finite-chain certificate: a witness chain plus per-ring chain lengths."""

    artin: bool
    witness: IdealChain
    ring_chain_lengths: tuple[int, ...]


def is_artin(m: MultiRingSpace, *, cap: int = DEFAULT_RING_CAP,
             budget: int = DEFAULT_SUBSET_BUDGET) -> ArtinReport:
    """Certify that every ideal subspace chain of the space is finite.

    Every finite ring has finite ideal chains, so the verdict is always true;
    the value of the operation is the produced witness chain (canonical
    order) and the per-ring maximal chain lengths it composes.
    """
    order = OperationOrder(tuple(range(1, m.m + 1)))
    witness = ideal_subspace_chain(m, order, cap=cap, budget=budget)
    lengths = tuple(len(_max_chain_cached(r, cap, budget)) for r in m.rings)
    return ArtinReport(artin=True, witness=witness, ring_chain_lengths=lengths)
