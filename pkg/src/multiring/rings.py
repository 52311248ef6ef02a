"""Finite rings stored extensionally as operation tables over a label universe.

Elements are integers indexing into a Universe of labels; a FiniteRing owns a
subset of the universe (its carrier) plus full addition/multiplication tables.
Everything here is decided by exhaustion over the tables: axiom validation,
subring/ideal tests, ideal enumeration, idempotents and the refinement of the
unit into primitive orthogonal idempotents.  All values are immutable and
hashable, so results of the per-ring predicates are memoized.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Optional, Sequence

from .errors import (
    AxiomViolation,
    CapExceeded,
    ForeignElement,
    MalformedTable,
    MultiRingError,
    NoUnit,
)

DEFAULT_RING_CAP = 64
DEFAULT_SUBSET_BUDGET = 1 << 20
EXHAUSTIVE_SIZE_LIMIT = 16


@dataclass(frozen=True)
class Universe:
    """An ordered list of distinct element labels; order is canonical."""

    labels: tuple[str, ...]

    def __post_init__(self):
        labels = tuple(self.labels)
        object.__setattr__(self, "labels", labels)
        if any(not isinstance(l, str) or not l for l in labels):
            raise ValueError("universe labels must be non-empty strings")
        if len(set(labels)) != len(labels):
            dupe = next(l for i, l in enumerate(labels) if l in labels[:i])
            raise ValueError(f"duplicate universe label {dupe!r}")
        object.__setattr__(self, "_index", {l: i for i, l in enumerate(labels)})

    def __len__(self) -> int:
        return len(self.labels)

    def label(self, eid: int) -> str:
        return self.labels[eid]

    def id_of(self, label: str) -> int:
        try:
            return self._index[label]
        except KeyError:
            raise ForeignElement(f"label {label!r} not in universe") from None


@dataclass(frozen=True)
class ValidationReport:
    """Outcome of an exhaustive axiom check.

    ``failures`` holds one (axiom-name, witness) pair per broken axiom, the
    witness being the first offending element tuple in canonical order.
    """

    ok: bool
    failures: tuple[tuple[str, tuple[int, ...]], ...]


@dataclass(frozen=True)
class FiniteRing:
    """A finite ring given by explicit tables.

    ``carrier`` lists element ids in table-row order; ``add_table[i][j]`` is
    the element id of carrier[i] + carrier[j], likewise ``mul_table``.  The
    constructor checks shape only; ring axioms are the job of validate_ring.
    """

    name: str
    universe: Universe
    carrier: tuple[int, ...]
    add_table: tuple[tuple[int, ...], ...]
    mul_table: tuple[tuple[int, ...], ...]
    zero: int
    unit: Optional[int]

    def __post_init__(self):
        n = len(self.carrier)
        if n == 0:
            raise MalformedTable("ring carrier is empty")
        if len(set(self.carrier)) != n:
            raise MalformedTable("ring carrier repeats an element")
        size = len(self.universe)
        if any(not (0 <= e < size) for e in self.carrier):
            raise ForeignElement("carrier element outside universe")
        for label, table in (("add", self.add_table), ("mul", self.mul_table)):
            if len(table) != n or any(len(row) != n for row in table):
                raise MalformedTable(f"{label} table is not {n}x{n}")
            if any(not (0 <= e < size) for row in table for e in row):
                raise MalformedTable(f"{label} table entry outside universe")
        if self.zero not in self.carrier:
            raise MalformedTable("zero not in carrier")
        if self.unit is not None and self.unit not in self.carrier:
            raise MalformedTable("unit not in carrier")
        object.__setattr__(self, "_pos", {e: i for i, e in enumerate(self.carrier)})
        object.__setattr__(self, "_members", frozenset(self.carrier))
        object.__setattr__(
            self,
            "_hash",
            hash((self.name, self.universe.labels, self.carrier,
                  self.add_table, self.mul_table, self.zero, self.unit)),
        )

    def __hash__(self) -> int:
        return self._hash

    @property
    def size(self) -> int:
        return len(self.carrier)

    @property
    def members(self) -> frozenset[int]:
        return self._members

    def __contains__(self, eid: int) -> bool:
        return eid in self._members

    def add(self, x: int, y: int) -> int:
        return self.add_table[self._pos[x]][self._pos[y]]

    def mul(self, x: int, y: int) -> int:
        return self.mul_table[self._pos[x]][self._pos[y]]

    def neg(self, x: int) -> int:
        """Additive inverse of x; requires a validated abelian group."""
        cache = getattr(self, "_neg", None)
        if cache is None:
            cache = {}
            object.__setattr__(self, "_neg", cache)
        y = cache.get(x)
        if y is not None:
            return y
        for y in self.carrier:
            if self.add(x, y) == self.zero and self.add(y, x) == self.zero:
                cache[x] = y
                return y
        raise MultiRingError(f"element {x} has no additive inverse in {self.name}")

    def sub(self, x: int, y: int) -> int:
        return self.add(x, self.neg(y))

    def labels_of(self, eids: Iterable[int]) -> list[str]:
        return [self.universe.label(e) for e in sorted(eids)]


def _check_cap(n: int, cap: int) -> None:
    if n > cap:
        raise CapExceeded(f"ring size {n} exceeds cap {cap}")


def make_cyclic_ring(n: int, name: str | None = None, *,
                     cap: int = DEFAULT_RING_CAP) -> FiniteRing:
    """Integers mod n on a fresh universe labelled "0".."n-1"."""
    if n < 1:
        raise ValueError("cyclic ring needs n >= 1")
    _check_cap(n, cap)
    universe = Universe(tuple(str(i) for i in range(n)))
    return cyclic_ring_on(universe, tuple(range(n)), name or f"Z{n}")


def cyclic_ring_on(universe: Universe, element_ids: Sequence[int],
                   name: str) -> FiniteRing:
    """Integers-mod-n structure where element_ids[k] plays the integer k."""
    ids = tuple(element_ids)
    n = len(ids)
    if n == 0:
        raise MalformedTable("cyclic ring needs at least one element")
    add = tuple(tuple(ids[(i + j) % n] for j in range(n)) for i in range(n))
    mul = tuple(tuple(ids[(i * j) % n] for j in range(n)) for i in range(n))
    return FiniteRing(name=name, universe=universe, carrier=ids,
                      add_table=add, mul_table=mul,
                      zero=ids[0], unit=ids[1 % n])


def make_product_ring(a: FiniteRing, b: FiniteRing, name: str | None = None, *,
                      cap: int = DEFAULT_RING_CAP) -> FiniteRing:
    """Componentwise product of two rings on a fresh universe of pair labels."""
    n = a.size * b.size
    _check_cap(n, cap)
    pairs = [(x, y) for x in a.carrier for y in b.carrier]
    labels = tuple(f"({a.universe.label(x)},{b.universe.label(y)})" for x, y in pairs)
    universe = Universe(labels)
    pos = {p: i for i, p in enumerate(pairs)}
    add = tuple(
        tuple(pos[(a.add(x1, x2), b.add(y1, y2))] for (x2, y2) in pairs)
        for (x1, y1) in pairs
    )
    mul = tuple(
        tuple(pos[(a.mul(x1, x2), b.mul(y1, y2))] for (x2, y2) in pairs)
        for (x1, y1) in pairs
    )
    unit = None
    if a.unit is not None and b.unit is not None:
        unit = pos[(a.unit, b.unit)]
    return FiniteRing(name=name or f"{a.name}x{b.name}", universe=universe,
                      carrier=tuple(range(n)), add_table=add, mul_table=mul,
                      zero=pos[(a.zero, b.zero)], unit=unit)


def ring_on_universe(name: str, universe: Universe, element_ids: Sequence[int],
                     add_ids: Sequence[Sequence[int]],
                     mul_ids: Sequence[Sequence[int]]) -> FiniteRing:
    """Ring over a shared universe from tables of element ids; validates axioms."""
    ids = tuple(element_ids)
    add = tuple(tuple(row) for row in add_ids)
    mul = tuple(tuple(row) for row in mul_ids)
    zero = _detect_zero(ids, add)
    if zero is None:
        report = ValidationReport(False, (("add-identity", ()),))
        raise AxiomViolation(report)
    unit = _detect_unit(ids, mul)
    ring = FiniteRing(name=name, universe=universe, carrier=ids,
                      add_table=add, mul_table=mul, zero=zero, unit=unit)
    report = validate_ring(ring)
    if not report.ok:
        raise AxiomViolation(report)
    return ring


def make_ring_from_tables(labels: Sequence[str],
                          add_table: Sequence[Sequence[str]],
                          mul_table: Sequence[Sequence[str]],
                          name: str | None = None) -> FiniteRing:
    """Ring from label-keyed tables on a fresh universe; rejects invalid axioms.

    Zero and unit are auto-detected by scanning for two-sided identities.
    """
    labels = tuple(labels)
    n = len(labels)
    if len(set(labels)) != n:
        raise MalformedTable("duplicate label in ring table header")
    for tname, table in (("add", add_table), ("mul", mul_table)):
        if len(table) != n or any(len(row) != n for row in table):
            raise MalformedTable(f"{tname} table is not {n}x{n}")
    universe = Universe(labels)
    try:
        add_ids = [[universe.id_of(v) for v in row] for row in add_table]
        mul_ids = [[universe.id_of(v) for v in row] for row in mul_table]
    except ForeignElement as exc:
        raise MalformedTable(str(exc)) from None
    return ring_on_universe(name or "R", universe, tuple(range(n)),
                            add_ids, mul_ids)


def _detect_zero(carrier: tuple[int, ...],
                 add: tuple[tuple[int, ...], ...]) -> Optional[int]:
    pos = {e: i for i, e in enumerate(carrier)}
    for e in carrier:
        i = pos[e]
        if all(add[i][pos[x]] == x and add[pos[x]][i] == x for x in carrier):
            return e
    return None


def _detect_unit(carrier: tuple[int, ...],
                 mul: tuple[tuple[int, ...], ...]) -> Optional[int]:
    pos = {e: i for i, e in enumerate(carrier)}
    for e in carrier:
        i = pos[e]
        if all(mul[i][pos[x]] == x and mul[pos[x]][i] == x for x in carrier):
            return e
    return None


def validate_ring(r: FiniteRing) -> ValidationReport:
    """Exhaustively check every ring axiom; first witness per failed axiom.

    Scans run in carrier order, so the report is deterministic.  The returned
    witnesses replay: evaluating the named axiom at the witness elements
    against the tables reproduces the failure.
    """
    failures: list[tuple[str, tuple[int, ...]]] = []
    car = r.carrier
    members = r.members

    def closed(table) -> Optional[tuple[int, int]]:
        for i, x in enumerate(car):
            for j, y in enumerate(car):
                if table[i][j] not in members:
                    return (x, y)
        return None

    w = closed(r.add_table)
    if w:
        failures.append(("add-closure", w))
    w = closed(r.mul_table)
    if w:
        failures.append(("mul-closure", w))
    if failures:
        # Without closure the remaining scans would index foreign elements.
        return ValidationReport(False, tuple(failures))

    for x in car:
        for y in car:
            if r.add(x, y) != r.add(y, x):
                failures.append(("add-commutativity", (x, y)))
                break
        else:
            continue
        break

    def assoc(op) -> Optional[tuple[int, int, int]]:
        for x in car:
            for y in car:
                for z in car:
                    if op(op(x, y), z) != op(x, op(y, z)):
                        return (x, y, z)
        return None

    w = assoc(r.add)
    if w:
        failures.append(("add-associativity", w))

    for x in car:
        if r.add(r.zero, x) != x or r.add(x, r.zero) != x:
            failures.append(("add-identity", (r.zero, x)))
            break

    for x in car:
        if not any(r.add(x, y) == r.zero and r.add(y, x) == r.zero for y in car):
            failures.append(("add-inverse", (x,)))
            break

    w = assoc(r.mul)
    if w:
        failures.append(("mul-associativity", w))

    for x in car:
        for y in car:
            for z in car:
                if r.mul(x, r.add(y, z)) != r.add(r.mul(x, y), r.mul(x, z)):
                    failures.append(("distributivity-left", (x, y, z)))
                    break
            else:
                continue
            break
        else:
            continue
        break

    for x in car:
        for y in car:
            for z in car:
                if r.mul(r.add(y, z), x) != r.add(r.mul(y, x), r.mul(z, x)):
                    failures.append(("distributivity-right", (x, y, z)))
                    break
            else:
                continue
            break
        else:
            continue
        break

    if r.unit is not None:
        for x in car:
            if r.mul(r.unit, x) != x or r.mul(x, r.unit) != x:
                failures.append(("unit", (r.unit, x)))
                break

    return ValidationReport(not failures, tuple(failures))


def _require_subset(r: FiniteRing, s: frozenset[int]) -> None:
    if not s <= r.members:
        stray = sorted(s - r.members)[0]
        shown = (r.universe.label(stray) if 0 <= stray < len(r.universe)
                 else str(stray))
        raise ForeignElement(f"element {shown!r} not in carrier of {r.name}")


@lru_cache(maxsize=None)
def _is_add_subgroup(r: FiniteRing, s: frozenset[int]) -> bool:
    if not s:
        return False
    for x in s:
        for y in s:
            if r.sub(x, y) not in s:
                return False
    return True


@lru_cache(maxsize=None)
def _is_subring(r: FiniteRing, s: frozenset[int]) -> bool:
    if not _is_add_subgroup(r, s):
        return False
    return all(r.mul(x, y) in s for x in s for y in s)


@lru_cache(maxsize=None)
def _is_ideal(r: FiniteRing, s: frozenset[int]) -> bool:
    if not _is_add_subgroup(r, s):
        return False
    for a in s:
        for x in r.carrier:
            if r.mul(x, a) not in s or r.mul(a, x) not in s:
                return False
    return True


def is_add_subgroup(r: FiniteRing, s: Iterable[int]) -> bool:
    """True iff s is a subgroup of the ring's additive group."""
    fs = frozenset(s)
    _require_subset(r, fs)
    return _is_add_subgroup(r, fs)


def is_subring(r: FiniteRing, s: Iterable[int]) -> bool:
    """True iff s is nonempty, closed under x - y, and closed under x * y."""
    fs = frozenset(s)
    _require_subset(r, fs)
    return _is_subring(r, fs)


def is_ideal(r: FiniteRing, s: Iterable[int]) -> bool:
    """True iff s is an additive subgroup absorbing products from all of r."""
    fs = frozenset(s)
    _require_subset(r, fs)
    return _is_ideal(r, fs)


def _canon_key(s: frozenset[int]) -> tuple[int, list[int]]:
    return (len(s), sorted(s))


def _generated_ideal(r: FiniteRing, g: int) -> frozenset[int]:
    """Smallest ideal containing g: closure under -, +, and outer products."""
    s = {r.zero, g}
    frontier = [g]
    while frontier:
        a = frontier.pop()
        new = set()
        new.add(r.neg(a))
        for b in s:
            new.add(r.add(a, b))
            new.add(r.add(b, a))
        for x in r.carrier:
            new.add(r.mul(x, a))
            new.add(r.mul(a, x))
        for v in new:
            if v not in s:
                s.add(v)
                frontier.append(v)
    return frozenset(s)


@lru_cache(maxsize=None)
def _ideals_by_closure(r: FiniteRing) -> tuple[frozenset[int], ...]:
    found = {frozenset({r.zero})}
    found.update(_generated_ideal(r, g) for g in r.carrier)
    # Close under ideal sums; a sumset of two ideals is already an ideal.
    worklist = list(found)
    while worklist:
        cur = worklist.pop()
        for other in list(found):
            sumset = frozenset(r.add(a, b) for a in cur for b in other)
            if sumset not in found:
                found.add(sumset)
                worklist.append(sumset)
    return tuple(sorted(found, key=_canon_key))


@lru_cache(maxsize=None)
def _ideals_by_filter(r: FiniteRing, budget: int) -> tuple[frozenset[int], ...]:
    others = [e for e in r.carrier if e != r.zero]
    if 1 << len(others) > budget:
        raise CapExceeded(
            f"subset filter over 2^{len(others)} subsets exceeds budget {budget}")
    out = []
    for mask in range(1 << len(others)):
        s = frozenset([r.zero] + [e for i, e in enumerate(others) if mask >> i & 1])
        if _is_ideal(r, s):
            out.append(s)
    return tuple(sorted(out, key=_canon_key))


def enumerate_ideals(r: FiniteRing, *, method: str = "closure",
                     cap: int = DEFAULT_RING_CAP,
                     budget: int = DEFAULT_SUBSET_BUDGET) -> list[frozenset[int]]:
    """All ideals of r, sorted by size then element order.

    ``method="closure"`` sums up generated ideals; ``method="exhaustive"``
    filters every subset containing zero (meant for rings of size <= 16 and
    used as the cross-check oracle in tests).
    """
    _check_cap(r.size, cap)
    if method == "closure":
        return list(_ideals_by_closure(r))
    if method == "exhaustive":
        if r.size > EXHAUSTIVE_SIZE_LIMIT:
            raise CapExceeded(
                f"exhaustive ideal filter limited to size {EXHAUSTIVE_SIZE_LIMIT}")
        return list(_ideals_by_filter(r, budget))
    raise ValueError(f"unknown method {method!r}")


def maximal_ideals(r: FiniteRing, *, cap: int = DEFAULT_RING_CAP,
                   budget: int = DEFAULT_SUBSET_BUDGET) -> list[frozenset[int]]:
    """Proper ideals maximal under inclusion, in canonical element order."""
    ideals = enumerate_ideals(r, cap=cap, budget=budget)
    whole = r.members
    proper = [s for s in ideals if s != whole]
    out = [s for s in proper if not any(s < t for t in proper)]
    return sorted(out, key=sorted)


def idempotents(r: FiniteRing) -> list[int]:
    """All e with e*e = e, ascending; always contains zero."""
    return sorted(e for e in r.carrier if r.mul(e, e) == e)


def decompose_unit(r: FiniteRing) -> list[int]:
    """Primitive orthogonal idempotents summing to the unit.

    Starts from [unit] and repeatedly splits a component e into f + (e - f)
    whenever both halves are nonzero orthogonal idempotents, taking the
    smallest eligible f each time; a component no such f splits is primitive.
    """
    if r.unit is None:
        raise NoUnit(f"{r.name} has no unit")
    nonzero_idems = [e for e in idempotents(r) if e != r.zero]
    idem_set = set(nonzero_idems)

    def first_split(e: int) -> Optional[tuple[int, int]]:
        for f in nonzero_idems:
            if f == e:
                continue
            g = r.sub(e, f)
            if g == r.zero or g not in idem_set:
                continue
            if r.mul(f, g) == r.zero and r.mul(g, f) == r.zero:
                return (f, g)
        return None

    comps = [r.unit]
    while True:
        for idx, e in enumerate(comps):
            split = first_split(e)
            if split is not None:
                comps[idx:idx + 1] = list(split)
                break
        else:
            return sorted(comps)


@lru_cache(maxsize=None)
def restrict_ring(r: FiniteRing, subset: frozenset[int],
                  name: str | None = None) -> FiniteRing:
    """View a subset closed under both operations as a ring of its own.

    The subset must contain the additive identity (true for any ideal or
    subring); the unit of the restriction is re-detected, since an ideal can
    gain a unit the ambient ring's unit does not induce.
    """
    _require_subset(r, subset)
    ids = tuple(sorted(subset))
    for x in ids:
        for y in ids:
            if r.add(x, y) not in subset or r.mul(x, y) not in subset:
                raise MultiRingError(
                    f"subset of {r.name} not closed under its operations")
    if r.zero not in subset:
        raise MultiRingError("restriction must contain the additive identity")
    add = tuple(tuple(r.add(x, y) for y in ids) for x in ids)
    mul = tuple(tuple(r.mul(x, y) for y in ids) for x in ids)
    unit = _detect_unit(ids, mul)
    label = name or f"{r.name}[{','.join(r.universe.label(e) for e in ids)}]"
    return FiniteRing(name=label, universe=r.universe, carrier=ids,
                      add_table=add, mul_table=mul, zero=r.zero, unit=unit)
