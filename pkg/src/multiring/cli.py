"""Command-line surface over the library.

Every subcommand loads a description file, runs the corresponding library
call, and reports the verdict; none of them re-implement any decision logic.
Exit codes: 0 property holds / construction succeeded, 1 property fails
(witness on stdout), 2 invalid input, 3 budget exceeded.  ``--json`` output
is built with a fixed field order and is byte-stable for identical inputs.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional, Sequence

from .chains import OperationOrder, chain_is_valid, ideal_subspace_chain, is_artin
from .decomposition import decompose_artin
from .errors import (
    AxiomViolation,
    CapExceeded,
    MixedLawViolationError,
    MultiRingError,
    NoDecomposition,
    RingInvalid,
    SpecError,
    StepInvalid,
)
from .rings import enumerate_ideals, idempotents
from .spaces import (
    MultiRingSpace,
    SubsetSelection,
    ideal_subspace_report,
    multi_field_report,
    subspace_report,
)
from .specfile import build_space, parse_spec

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_INVALID = 2
EXIT_BUDGET = 3


def _common_flags() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true",
                        help="emit machine-readable output with stable fields")
    common.add_argument("--max-ring-size", type=int, default=64, metavar="N",
                        help="reject rings larger than N (default 64)")
    common.add_argument("--subset-budget", type=int, default=1 << 20, metavar="N",
                        help="cap on subset enumerations (default 2^20)")
    common.add_argument("--seed", type=int, default=None,
                        help="reserved; all current algorithms are deterministic")
    return common


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="multiring",
        description="Analyze finite multi-ring spaces described in a file.")
    sub = parser.add_subparsers(dest="command", required=True)
    common = _common_flags()

    def add(name: str, help_: str) -> argparse.ArgumentParser:
        p = sub.add_parser(name, parents=[common], help=help_)
        p.add_argument("file", help="description file")
        return p

    add("validate", "check the file describes a valid multi-ring space")

    p = add("subspace", "test a selection with a subspace criterion")
    p.add_argument("--elements", required=True, metavar="L1,L2,..")
    p.add_argument("--ops", required=True, metavar="I,J,..")
    p.add_argument("--criterion", choices=["t21", "t22", "direct"],
                   default="t21")

    p = add("ideal", "test a selection with an ideal-subspace criterion")
    p.add_argument("--elements", required=True, metavar="L1,L2,..")
    p.add_argument("--ops", required=True, metavar="I,J,..")
    p.add_argument("--criterion", choices=["t23", "direct"], default="t23")

    p = add("ideals", "enumerate all ideals of one ring")
    p.add_argument("--ring", required=True, type=int, metavar="K")

    p = add("chain", "build the ideal subspace chain for an operation order")
    p.add_argument("--order", required=True, metavar="I,J,..")

    add("artin", "certify finite chains and report per-ring chain lengths")
    add("decompose", "directed-sum decomposition into non-reducible parts")

    p = add("idempotents", "list the idempotent elements of one ring")
    p.add_argument("--ring", required=True, type=int, metavar="K")

    add("multifield", "test whether every ring is a field")
    return parser


def _load(args) -> MultiRingSpace:
    with open(args.file, "r", encoding="utf-8") as fh:
        text = fh.read()
    space = build_space(parse_spec(text))
    for ring in space.rings:
        if ring.size > args.max_ring_size:
            raise CapExceeded(
                f"ring {ring.name!r} has {ring.size} elements, "
                f"over --max-ring-size {args.max_ring_size}")
    return space


def _emit(args, payload: dict, human_lines: list[str]) -> None:
    if args.json:
        print(json.dumps(payload, indent=2))
    else:
        for line in human_lines:
            print(line)


def _labels(space: MultiRingSpace, elements) -> list[str]:
    return [space.universe.label(e) for e in sorted(elements)]


def _braced(space: MultiRingSpace, elements) -> str:
    return "{" + ", ".join(_labels(space, elements)) + "}"


def _parse_elements(space: MultiRingSpace, text: str) -> frozenset[int]:
    labels = [part for part in text.split(",") if part]
    return frozenset(space.universe.id_of(l) for l in labels)


def _parse_ints(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(part) for part in text.split(",") if part)
    except ValueError:
        raise SpecError(f"expected a comma-separated list of integers: {text!r}")


def _term_payload(space: MultiRingSpace, sel: SubsetSelection) -> dict:
    return {"elements": _labels(space, sel.elements),
            "ops": sorted(sel.ops)}


def _cmd_validate(args) -> int:
    with open(args.file, "r", encoding="utf-8") as fh:
        text = fh.read()
    doc = parse_spec(text)
    labels = doc.universe

    def named(eids) -> list[str]:
        return [labels[e] for e in eids]

    try:
        space = build_space(doc)
    except RingInvalid as exc:
        axiom, witness = exc.report.failures[0]
        payload = {"command": "validate", "ok": False, "error": "ring-invalid",
                   "ring": exc.ring_name, "axiom": axiom,
                   "witness": named(witness)}
        _emit(args, payload,
              [f"invalid: ring {exc.ring_name!r} breaks {axiom} "
               f"at witness ({', '.join(named(witness))})"])
        return EXIT_FAIL
    except AxiomViolation as exc:
        axiom, witness = exc.report.failures[0]
        payload = {"command": "validate", "ok": False, "error": "ring-invalid",
                   "axiom": axiom, "witness": named(witness)}
        _emit(args, payload,
              [f"invalid: ring tables break {axiom} at witness "
               f"({', '.join(named(witness))})"])
        return EXIT_FAIL
    except MixedLawViolationError as exc:
        v = exc.violation
        payload = {"command": "validate", "ok": False, "error": "mixed-law",
                   "law": v.law, "ops": list(v.ops),
                   "witness": named(v.witness),
                   "lhs": labels[v.lhs], "rhs": labels[v.rhs]}
        i, j = v.ops
        x, y, z = named(v.witness)
        _emit(args, payload,
              [f"invalid: {v.law} fails for pair ({i},{j}) at elements "
               f"({x},{y},{z}): {labels[v.lhs]} != {labels[v.rhs]}"])
        return EXIT_FAIL
    for ring in space.rings:
        if ring.size > args.max_ring_size:
            raise CapExceeded(
                f"ring {ring.name!r} has {ring.size} elements, "
                f"over --max-ring-size {args.max_ring_size}")
    overlapping = any(
        space.rings[i].members & space.rings[j].members
        for i in range(space.m) for j in range(i + 1, space.m))
    mixed = ("checked (overlapping carriers)" if overlapping
             else "vacuous (disjoint carriers)")
    payload = {"command": "validate", "ok": True, "rings": space.m,
               "ring_names": [r.name for r in space.rings],
               "mixed_laws": mixed}
    _emit(args, payload, [f"{space.m} rings, mixed laws: {mixed}"])
    return EXIT_OK


def _cmd_subspace(args) -> int:
    space = _load(args)
    sel = SubsetSelection(_parse_elements(space, args.elements),
                          frozenset(_parse_ints(args.ops)))
    holds, reason = subspace_report(space, sel, args.criterion)
    payload = {"command": "subspace", "criterion": args.criterion,
               "elements": _labels(space, sel.elements),
               "ops": sorted(sel.ops), "holds": holds, "reason": reason}
    verdict = "yes" if holds else "no"
    line = f"subspace: {verdict} (criterion: {args.criterion})"
    if reason:
        line += f": {reason}"
    _emit(args, payload, [line])
    return EXIT_OK if holds else EXIT_FAIL


def _cmd_ideal(args) -> int:
    space = _load(args)
    sel = SubsetSelection(_parse_elements(space, args.elements),
                          frozenset(_parse_ints(args.ops)))
    holds, reason = ideal_subspace_report(space, sel, args.criterion)
    payload = {"command": "ideal", "criterion": args.criterion,
               "elements": _labels(space, sel.elements),
               "ops": sorted(sel.ops), "holds": holds, "reason": reason}
    verdict = "yes" if holds else "no"
    line = f"ideal subspace: {verdict} (criterion: {args.criterion})"
    if reason:
        line += f": {reason}"
    _emit(args, payload, [line])
    return EXIT_OK if holds else EXIT_FAIL


def _cmd_ideals(args) -> int:
    space = _load(args)
    ring = space.ring(args.ring)
    found = enumerate_ideals(ring, cap=args.max_ring_size,
                             budget=args.subset_budget)
    payload = {"command": "ideals", "ring": args.ring, "ring_name": ring.name,
               "count": len(found),
               "ideals": [_labels(space, s) for s in found]}
    lines = [f"{len(found)} ideals of ring {args.ring} ({ring.name})"]
    lines.extend(f"  {_braced(space, s)}" for s in found)
    _emit(args, payload, lines)
    return EXIT_OK


def _cmd_chain(args) -> int:
    space = _load(args)
    order = OperationOrder(_parse_ints(args.order))
    try:
        chain = ideal_subspace_chain(space, order, cap=args.max_ring_size,
                                     budget=args.subset_budget)
    except StepInvalid as exc:
        payload = {"command": "chain", "order": list(order.order),
                   "ok": False, "error": str(exc),
                   "term": (_term_payload(space, exc.term)
                            if exc.term is not None else None)}
        lines = [f"chain construction failed: {exc}"]
        if exc.term is not None:
            lines.append(f"offending term: {_braced(space, exc.term.elements)}")
        _emit(args, payload, lines)
        return EXIT_FAIL
    valid = chain_is_valid(space, chain, budget=args.subset_budget)
    payload = {"command": "chain", "order": list(order.order), "ok": valid,
               "stage_boundaries": list(chain.stage_boundaries),
               "terms": [_term_payload(space, t) for t in chain.terms]}
    boundaries = ",".join(str(b) for b in chain.stage_boundaries)
    lines = [f"{len(chain.terms)} terms (order "
             f"{','.join(str(k) for k in order.order)}; "
             f"stage boundaries {boundaries}; valid: {'yes' if valid else 'no'})"]
    for idx, term in enumerate(chain.terms):
        ops = ",".join(str(k) for k in sorted(term.ops))
        lines.append(f"  term {idx}: {_braced(space, term.elements)} ops {ops}")
    _emit(args, payload, lines)
    return EXIT_OK if valid else EXIT_FAIL


def _cmd_artin(args) -> int:
    space = _load(args)
    report = is_artin(space, cap=args.max_ring_size, budget=args.subset_budget)
    payload = {"command": "artin", "artin": report.artin,
               "ring_chain_lengths": list(report.ring_chain_lengths),
               "witness_terms": len(report.witness.terms),
               "terms": [_term_payload(space, t) for t in report.witness.terms]}
    lengths = ", ".join(str(n) for n in report.ring_chain_lengths)
    lines = [f"artin: yes (ring chain lengths {lengths}; "
             f"witness chain has {len(report.witness.terms)} terms)"]
    _emit(args, payload, lines)
    return EXIT_OK


def _cmd_decompose(args) -> int:
    space = _load(args)
    try:
        deco = decompose_artin(space, cap=args.max_ring_size,
                               budget=args.subset_budget)
    except NoDecomposition as exc:
        payload = {"command": "decompose", "ok": False, "error": str(exc)}
        _emit(args, payload, [f"decomposition failed: {exc}"])
        return EXIT_FAIL
    comp_payload = []
    lines = [f"{len(deco.components)} components"]
    for idx, comp in enumerate(deco.components):
        ring_index = deco.component_rings[idx]
        ring = space.ring(ring_index)
        idems = deco.per_ring_idempotents[ring_index]
        same_ring = [i for i, rk in enumerate(deco.component_rings)
                     if rk == ring_index]
        label: Optional[str] = None
        if idems:
            label = space.universe.label(idems[same_ring.index(idx)])
        comp_payload.append({
            "index": idx, "ring": ring_index, "ring_name": ring.name,
            "route": deco.per_ring_route[ring_index], "idempotent": label,
            "elements": _labels(space, comp.elements)})
        tag = f"idempotent {label}" if label is not None else "search"
        lines.append(f"  component {idx} (ring {ring_index}, {tag}): "
                     f"{_braced(space, comp.elements)}")
    joins = [{"a": a, "b": b, "mode": mode.value}
             for (a, b), mode in sorted(deco.mode_per_join.items())]
    payload = {"command": "decompose", "ok": True,
               "components": comp_payload, "joins": joins}
    _emit(args, payload, lines)
    return EXIT_OK


def _cmd_idempotents(args) -> int:
    space = _load(args)
    ring = space.ring(args.ring)
    found = idempotents(ring)
    payload = {"command": "idempotents", "ring": args.ring,
               "ring_name": ring.name,
               "idempotents": _labels(space, found)}
    _emit(args, payload,
          [f"idempotents of ring {args.ring} ({ring.name}): "
           f"{_braced(space, found)}"])
    return EXIT_OK


def _cmd_multifield(args) -> int:
    space = _load(args)
    holds, reason = multi_field_report(space)
    payload = {"command": "multifield", "multi_field": holds, "reason": reason}
    line = "multi-field: yes" if holds else f"multi-field: no: {reason}"
    _emit(args, payload, [line])
    return EXIT_OK if holds else EXIT_FAIL


_HANDLERS = {
    "validate": _cmd_validate,
    "subspace": _cmd_subspace,
    "ideal": _cmd_ideal,
    "ideals": _cmd_ideals,
    "chain": _cmd_chain,
    "artin": _cmd_artin,
    "decompose": _cmd_decompose,
    "idempotents": _cmd_idempotents,
    "multifield": _cmd_multifield,
}


def run_cli(argv: Optional[Sequence[str]] = None) -> int:
    """Dispatch one command; returns the process exit code."""
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        code = exc.code
        return int(code) if code is not None else 0
    try:
        return _HANDLERS[args.command](args)
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except CapExceeded as exc:
        print(f"budget exceeded: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except (SpecError, ValueError, MultiRingError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID


def main() -> None:
    sys.exit(run_cli())
