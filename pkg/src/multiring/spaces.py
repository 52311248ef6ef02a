"""Multi-ring spaces: validated unions of finite rings over one universe.

A space holds m rings indexed 1..m, each bringing its own operation pair.
Element identity is global: a universe id shared by two rings is one element.
An expression like (x +_1 y) +_2 z is defined only when the operands of each
operation lie in the ring owning it; the build-time validator exhausts every
fully-defined mixed triple for the cross-operation associativity and
distributivity laws.

Subspace and ideal-subspace selections are tested three ways: the direct
definition replay (restriction is itself a ring family), the per-ring subring
criterion, and the per-ring additive-subgroup-plus-closure criterion; the
ideal analogues likewise.  Agreement of the routes is part of the test suite.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Optional, Sequence

from .errors import (
    EmptyFamily,
    EmptyOps,
    ForeignElement,
    MixedLawViolationError,
    RingInvalid,
)
from .rings import (
    FiniteRing,
    Universe,
    _is_add_subgroup,
    _is_ideal,
    _is_subring,
    restrict_ring,
    validate_ring,
)


@dataclass(frozen=True)
class SubsetSelection:
    """A candidate sub-multi-space: element ids plus 1-based ring indices."""

    elements: frozenset[int]
    ops: frozenset[int]

    def __post_init__(self):
        object.__setattr__(self, "elements", frozenset(self.elements))
        object.__setattr__(self, "ops", frozenset(self.ops))


@dataclass(frozen=True)
class MixedLawViolation:
    """Witness that two operation pairs break a mixed law.

    ``ops`` is the ordered pair (i, j) of 1-based ring indices and ``witness``
    the (x, y, z) element ids; lhs/rhs are the two evaluations that differ.
    """

    law: str
    ops: tuple[int, int]
    witness: tuple[int, int, int]
    lhs: int
    rhs: int

    def __str__(self) -> str:
        i, j = self.ops
        x, y, z = self.witness
        return (f"{self.law} fails for pair ({i},{j}) at elements "
                f"({x},{y},{z}): {self.lhs} != {self.rhs}")


@dataclass(frozen=True)
class MultiRingSpace:
    """An ordered family of rings over one universe; build via build_multispace."""

    universe: Universe
    rings: tuple[FiniteRing, ...]

    def __post_init__(self):
        carrier = frozenset()
        for r in self.rings:
            carrier |= r.members
        object.__setattr__(self, "carrier", carrier)
        object.__setattr__(self, "_hash", hash((self.universe.labels, self.rings)))

    def __hash__(self) -> int:
        return self._hash

    @property
    def m(self) -> int:
        return len(self.rings)

    def ring(self, k: int) -> FiniteRing:
        """Ring owning operation pair k (1-based)."""
        if not 1 <= k <= self.m:
            raise ForeignElement(f"operation index {k} not in 1..{self.m}")
        return self.rings[k - 1]

    @property
    def all_ops(self) -> frozenset[int]:
        return frozenset(range(1, self.m + 1))

    def full_selection(self) -> SubsetSelection:
        return SubsetSelection(self.carrier, self.all_ops)

    def zeros(self) -> frozenset[int]:
        """The per-ring additive identities."""
        return frozenset(r.zero for r in self.rings)

    def zerolike(self) -> frozenset[int]:
        """Elements that are the additive zero of every ring containing them."""
        out = set()
        for x in self.carrier:
            if all(x == r.zero for r in self.rings if x in r):
                out.add(x)
        return frozenset(out)


_MIXED_LAWS = ("add-associativity", "mul-associativity",
               "distributivity-left", "distributivity-right")


def _find_mixed_violation(rings: Sequence[FiniteRing]) -> Optional[MixedLawViolation]:
    """First mixed-law violation in canonical scan order, or None.

    Only fully-defined evaluation trees are quantified, so the scan iterates
    the overlap of the two carriers first and is vacuous for disjoint rings.
    """
    m = len(rings)
    for i in range(1, m + 1):
        for j in range(1, m + 1):
            if i == j:
                continue
            ri, rj = rings[i - 1], rings[j - 1]
            overlap = sorted(ri.members & rj.members)
            if not overlap:
                continue
            for law in _MIXED_LAWS:
                if law in ("add-associativity", "mul-associativity"):
                    if law == "add-associativity":
                        op_i, op_j = ri.add, rj.add
                    else:
                        op_i, op_j = ri.mul, rj.mul
                    # (x op_i y) op_j z = x op_i (y op_j z); y must sit in both.
                    for y in overlap:
                        for x in sorted(ri.members):
                            a = op_i(x, y)
                            if a not in rj:
                                continue
                            for z in sorted(rj.members):
                                b = op_j(y, z)
                                if b not in ri:
                                    continue
                                lhs, rhs = op_j(a, z), op_i(x, b)
                                if lhs != rhs:
                                    return MixedLawViolation(
                                        law, (i, j), (x, y, z), lhs, rhs)
                elif law == "distributivity-left":
                    # x *_i (y +_j z) = (x *_i y) +_j (x *_i z)
                    for y in overlap:
                        for z in overlap:
                            b = rj.add(y, z)
                            if b not in ri:
                                continue
                            for x in sorted(ri.members):
                                ay, az = ri.mul(x, y), ri.mul(x, z)
                                if ay not in rj or az not in rj:
                                    continue
                                lhs, rhs = ri.mul(x, b), rj.add(ay, az)
                                if lhs != rhs:
                                    return MixedLawViolation(
                                        law, (i, j), (x, y, z), lhs, rhs)
                else:
                    # (y +_j z) *_i x = (y *_i x) +_j (z *_i x)
                    for y in overlap:
                        for z in overlap:
                            b = rj.add(y, z)
                            if b not in ri:
                                continue
                            for x in sorted(ri.members):
                                ya, za = ri.mul(y, x), ri.mul(z, x)
                                if ya not in rj or za not in rj:
                                    continue
                                lhs, rhs = ri.mul(b, x), rj.add(ya, za)
                                if lhs != rhs:
                                    return MixedLawViolation(
                                        law, (i, j), (x, y, z), lhs, rhs)
    return None


def build_multispace(universe: Universe,
                     rings: Sequence[FiniteRing]) -> MultiRingSpace:
    """Validate and assemble a multi-ring space.

    Every ring must live on the given universe and pass the full axiom check;
    every fully-defined mixed triple must satisfy the cross-operation laws.
    The first failure found in canonical order is raised.
    """
    rings = tuple(rings)
    if not rings:
        raise EmptyFamily("a multi-ring space needs at least one ring")
    for r in rings:
        if r.universe != universe:
            raise ForeignElement(
                f"ring {r.name!r} is not defined over the shared universe")
        report = validate_ring(r)
        if not report.ok:
            raise RingInvalid(r.name, report)
    violation = _find_mixed_violation(rings)
    if violation is not None:
        raise MixedLawViolationError(violation)
    return MultiRingSpace(universe=universe, rings=rings)


def _check_selection(m: MultiRingSpace, s: SubsetSelection) -> None:
    if not s.ops:
        raise EmptyOps("selection must pick at least one operation pair")
    for k in s.ops:
        if not 1 <= k <= m.m:
            raise ForeignElement(f"operation index {k} not in 1..{m.m}")
    stray = s.elements - m.carrier
    if stray:
        worst = sorted(stray)[0]
        shown = (m.universe.label(worst) if 0 <= worst < len(m.universe)
                 else str(worst))
        raise ForeignElement(f"element {shown!r} not in the space carrier")


def _side_conditions(m: MultiRingSpace, s: SubsetSelection,
                     ambient: frozenset[int]) -> Optional[str]:
    """Coverage and nonemptiness shared by all subspace criteria.

    Every selected element must lie in a selected ring's component, and at
    least one selected component must be nonempty.  Returns a failure reason
    or None.
    """
    covered = set()
    nonempty = False
    for k in sorted(s.ops):
        comp = s.elements & m.ring(k).members & ambient
        covered |= comp
        nonempty = nonempty or bool(comp)
    if not nonempty:
        return "selection meets no selected ring"
    uncovered = s.elements - covered
    if uncovered:
        label = m.universe.label(sorted(uncovered)[0])
        return f"element {label!r} lies in no selected ring"
    return None


def _restriction_is_ring(ring: FiniteRing, sub: frozenset[int]) -> Optional[str]:
    """Replay every ring axiom on the restriction of the tables to ``sub``.

    This is the definition-level oracle: it checks totality of both operations
    on the subset and then re-verifies the abelian group, semigroup and
    distributivity axioms from scratch, without the subring shortcut.
    """
    elems = sorted(sub)
    for x in elems:
        for y in elems:
            if ring.add(x, y) not in sub:
                return (f"addition leaves the selection at "
                        f"({ring.universe.label(x)},{ring.universe.label(y)})")
            if ring.mul(x, y) not in sub:
                return (f"multiplication leaves the selection at "
                        f"({ring.universe.label(x)},{ring.universe.label(y)})")
    zero = None
    for e in elems:
        if all(ring.add(e, x) == x and ring.add(x, e) == x for x in elems):
            zero = e
            break
    if zero is None:
        return "restriction has no additive identity"
    for x in elems:
        if not any(ring.add(x, y) == zero and ring.add(y, x) == zero
                   for y in elems):
            return f"element {ring.universe.label(x)} has no additive inverse"
    for x in elems:
        for y in elems:
            if ring.add(x, y) != ring.add(y, x):
                return "restricted addition is not commutative"
            for z in elems:
                if ring.add(ring.add(x, y), z) != ring.add(x, ring.add(y, z)):
                    return "restricted addition is not associative"
                if ring.mul(ring.mul(x, y), z) != ring.mul(x, ring.mul(y, z)):
                    return "restricted multiplication is not associative"
                if ring.mul(x, ring.add(y, z)) != ring.add(ring.mul(x, y),
                                                           ring.mul(x, z)):
                    return "restriction breaks left distributivity"
                if ring.mul(ring.add(y, z), x) != ring.add(ring.mul(y, x),
                                                           ring.mul(z, x)):
                    return "restriction breaks right distributivity"
    return None


@lru_cache(maxsize=None)
def _ring_restriction_ok(ring: FiniteRing, sub: frozenset[int]) -> Optional[str]:
    return _restriction_is_ring(ring, sub)


def _subspace_report(m: MultiRingSpace, s: SubsetSelection,
                     criterion: str) -> tuple[bool, Optional[str]]:
    _check_selection(m, s)
    reason = _side_conditions(m, s, m.carrier)
    if reason:
        return False, reason
    for k in sorted(s.ops):
        ring = m.ring(k)
        comp = s.elements & ring.members
        if not comp:
            continue
        if criterion == "t21":
            if not _is_subring(ring, comp):
                return False, f"component of ring {k} is not a subring"
        elif criterion == "t22":
            if not _is_add_subgroup(ring, comp):
                return False, f"component of ring {k} is not an additive subgroup"
            if not all(ring.mul(x, y) in comp for x in comp for y in comp):
                return False, f"component of ring {k} is not closed under product"
        elif criterion == "direct":
            why = _ring_restriction_ok(ring, comp)
            if why:
                return False, f"ring {k}: {why}"
        else:
            raise ValueError(f"unknown criterion {criterion!r}")
    return True, None


def is_subspace_t21(m: MultiRingSpace, s: SubsetSelection) -> bool:
    """Per-ring subring criterion: each selected component a subring or empty."""
    return _subspace_report(m, s, "t21")[0]


def is_subspace_t22(m: MultiRingSpace, s: SubsetSelection) -> bool:
    """Per-ring criterion via additive subgroup plus product closure."""
    return _subspace_report(m, s, "t22")[0]


def is_subspace_direct(m: MultiRingSpace, s: SubsetSelection) -> bool:
    """Definition replay: each selected component is itself a ring (or empty)."""
    return _subspace_report(m, s, "direct")[0]


def subspace_report(m: MultiRingSpace, s: SubsetSelection,
                    criterion: str = "t21") -> tuple[bool, Optional[str]]:
    """Criterion verdict plus a deterministic failure reason for reporting."""
    return _subspace_report(m, s, criterion)


def _ideal_subspace_report(m: MultiRingSpace, i: SubsetSelection, criterion: str,
                           ambient: frozenset[int] | None = None
                           ) -> tuple[bool, Optional[str]]:
    _check_selection(m, i)
    amb = m.carrier if ambient is None else ambient
    reason = _side_conditions(m, i, amb)
    if reason:
        return False, reason
    for k in sorted(i.ops):
        ring = m.ring(k)
        whole = ring.members & amb
        comp = i.elements & whole
        if not comp:
            continue
        if criterion == "t23":
            if amb is m.carrier or whole == ring.members:
                if not _is_ideal(ring, comp):
                    return False, f"component of ring {k} is not an ideal"
            else:
                sub = restrict_ring(ring, frozenset(whole))
                if not _is_ideal(sub, comp):
                    return False, f"component of ring {k} is not an ideal"
        elif criterion == "direct":
            if not _is_add_subgroup(ring, comp):
                return False, f"component of ring {k} is not an additive subgroup"
            for a in sorted(comp):
                for x in sorted(whole):
                    if ring.mul(x, a) not in i.elements:
                        return False, (f"ring {k}: product "
                                       f"{m.universe.label(x)}*{m.universe.label(a)}"
                                       " escapes the selection")
                    if ring.mul(a, x) not in i.elements:
                        return False, (f"ring {k}: product "
                                       f"{m.universe.label(a)}*{m.universe.label(x)}"
                                       " escapes the selection")
        else:
            raise ValueError(f"unknown criterion {criterion!r}")
    return True, None


def is_ideal_subspace_t23(m: MultiRingSpace, i: SubsetSelection) -> bool:
    """Per-ring criterion: each selected component an ideal or empty."""
    return _ideal_subspace_report(m, i, "t23")[0]


def is_ideal_subspace_direct(m: MultiRingSpace, i: SubsetSelection) -> bool:
    """Definition replay: per-op additive subgroup plus two-sided absorption."""
    return _ideal_subspace_report(m, i, "direct")[0]


def ideal_subspace_report(m: MultiRingSpace, i: SubsetSelection,
                          criterion: str = "t23") -> tuple[bool, Optional[str]]:
    """Criterion verdict plus a deterministic failure reason for reporting."""
    return _ideal_subspace_report(m, i, criterion)


def ideal_subspace_within(m: MultiRingSpace, ambient: SubsetSelection,
                          i: SubsetSelection,
                          criterion: str = "t23") -> tuple[bool, Optional[str]]:
    """Ideal-subspace test relative to the restriction named by ``ambient``.

    Components are taken inside ambient's per-ring components, which must be
    closed under their ring operations for the restriction to make sense.
    """
    if not i.elements <= ambient.elements:
        return False, "selection is not contained in the ambient restriction"
    if not i.ops <= ambient.ops:
        return False, "selection uses operations outside the ambient restriction"
    for k in sorted(ambient.ops):
        ring = m.ring(k)
        comp = ambient.elements & ring.members
        if comp and _ring_restriction_ok(ring, frozenset(comp)) is not None:
            return False, f"ambient component of ring {k} is not a ring"
    return _ideal_subspace_report(m, i, criterion, ambient=ambient.elements)


def ideal_subspace_any_ops(m: MultiRingSpace, ambient: SubsetSelection,
                           elements: frozenset[int]) -> Optional[SubsetSelection]:
    """The most permissive valid selection on ``elements``, if any.

    Picks every ambient operation whose component of ``elements`` is an ideal
    (or empty) of the ambient component, then demands those rings cover all of
    ``elements``.  Used when enumerating ideal subspaces by element set alone.
    """
    if not elements or not elements <= ambient.elements:
        return None
    good_ops = set()
    covered: set[int] = set()
    for k in sorted(ambient.ops):
        ring = m.ring(k)
        whole = frozenset(ambient.elements & ring.members)
        comp = elements & whole
        if not comp:
            good_ops.add(k)
            continue
        if whole == ring.members:
            ok = _is_ideal(ring, comp)
        else:
            if _ring_restriction_ok(ring, whole) is not None:
                return None
            ok = _is_ideal(restrict_ring(ring, whole), comp)
        if ok:
            good_ops.add(k)
            covered |= comp
    if covered != set(elements):
        return None
    return SubsetSelection(elements, frozenset(good_ops))


def is_multi_field(m: MultiRingSpace) -> bool:
    """True iff every ring is a field (the one-element ring does not count)."""
    return multi_field_report(m)[0]


def multi_field_report(m: MultiRingSpace) -> tuple[bool, Optional[str]]:
    """Field check per ring with a deterministic failure reason."""
    for k in range(1, m.m + 1):
        ring = m.ring(k)
        if ring.unit is None:
            return False, f"ring {k} ({ring.name}) has no unit"
        if ring.unit == ring.zero:
            return False, f"ring {k} ({ring.name}) is the one-element ring"
        for x in ring.carrier:
            for y in ring.carrier:
                if ring.mul(x, y) != ring.mul(y, x):
                    return False, (f"ring {k} ({ring.name}) is not commutative")
        for x in ring.carrier:
            if x == ring.zero:
                continue
            if not any(ring.mul(x, y) == ring.unit for y in ring.carrier):
                return False, (f"ring {k} ({ring.name}): element "
                               f"{m.universe.label(x)} has no inverse")
    return True, None
