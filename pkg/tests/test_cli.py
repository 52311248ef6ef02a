"""Command-line contract: golden outputs, exit codes, and byte stability."""

from __future__ import annotations

import contextlib
import io
import json
from pathlib import Path

import pytest

from multiring.cli import run_cli

DATA = Path(__file__).parent / "data"
GOLD = DATA / "golden"


def run(argv) -> tuple[int, str, str]:
    out, err = io.StringIO(), io.StringIO()
    with contextlib.redirect_stdout(out), contextlib.redirect_stderr(err):
        rc = run_cli(argv)
    return rc, out.getvalue(), err.getvalue()


GOLDEN_CASES = {
    "validate_z4z6": (["validate", "z4z6.spec"], 0),
    "subspace_yes": (["subspace", "z4z6.spec",
                      "--elements", "a0,a2,b0,b3", "--ops", "1,2"], 0),
    "subspace_no": (["subspace", "z4z6.spec",
                     "--elements", "a0,a1", "--ops", "1"], 1),
    "subspace_direct": (["subspace", "z4z6.spec",
                         "--elements", "b0,b2,b4", "--ops", "2",
                         "--criterion", "direct"], 0),
    "ideal_yes": (["ideal", "z4z6.spec",
                   "--elements", "a0,a2,b0", "--ops", "1,2"], 0),
    "ideal_no": (["ideal", "z4z6.spec",
                  "--elements", "b0,b1", "--ops", "2"], 1),
    "ideals_ring2": (["ideals", "z4z6.spec", "--ring", "2"], 0),
    "chain_12": (["chain", "z4z6.spec", "--order", "1,2"], 0),
    "chain_21": (["chain", "z4z6.spec", "--order", "2,1"], 0),
    "artin_z4z6": (["artin", "z4z6.spec"], 0),
    "decompose_z4z6": (["decompose", "z4z6.spec"], 0),
    "decompose_z10": (["decompose", "z10.spec"], 0),
    "idempotents_ring2": (["idempotents", "z4z6.spec", "--ring", "2"], 0),
    "multifield_yes": (["multifield", "z2z3.spec"], 0),
    "multifield_no": (["multifield", "z4z6.spec"], 1),
    "validate_dup_z2": (["validate", "dup_z2.spec"], 0),
    "validate_overlap_bad": (["validate", "overlap_bad.spec"], 1),
    "validate_bad_ring": (["validate", "bad_ring.spec"], 1),
}


def expand(argv):
    return [str(DATA / a) if a.endswith(".spec") else a for a in argv]


class TestGoldenOutputs:
    @pytest.mark.parametrize("name", sorted(GOLDEN_CASES))
    def test_human_output_matches_golden(self, name):
        argv, want_rc = GOLDEN_CASES[name]
        rc, out, _ = run(expand(argv))
        assert rc == want_rc
        assert out == (GOLD / f"{name}.txt").read_text()

    @pytest.mark.parametrize("name", sorted(GOLDEN_CASES))
    def test_json_output_matches_golden(self, name):
        argv, want_rc = GOLDEN_CASES[name]
        rc, out, _ = run(expand(argv) + ["--json"])
        assert rc == want_rc
        assert out == (GOLD / f"{name}.json").read_text()
        json.loads(out)  # machine output must be well-formed

    @pytest.mark.parametrize("name", sorted(GOLDEN_CASES))
    def test_json_output_byte_identical_across_runs(self, name):
        argv, _ = GOLDEN_CASES[name]
        first = run(expand(argv) + ["--json"])
        second = run(expand(argv) + ["--json"])
        assert first == second


class TestExitCodes:
    def test_malformed_inputs_exit_2(self):
        for name in ("bad_json.spec", "dup_label.spec", "unknown_key.spec",
                     "bad_shape.spec"):
            rc, out, err = run(["validate", str(DATA / name)])
            assert rc == 2, (name, out, err)
            assert err

    def test_missing_file_exits_2(self):
        rc, _, err = run(["validate", str(DATA / "nope.spec")])
        assert rc == 2 and err

    def test_unknown_label_in_flags_exits_2(self):
        rc, _, err = run(["ideal", str(DATA / "z4z6.spec"),
                          "--elements", "zz", "--ops", "1"])
        assert rc == 2 and err

    def test_bad_order_exits_2(self):
        rc, _, err = run(["chain", str(DATA / "z4z6.spec"), "--order", "1,1"])
        assert rc == 2 and err

    def test_over_budget_exits_3(self):
        rc, _, err = run(["validate", str(DATA / "z4z6.spec"),
                          "--max-ring-size", "4"])
        assert rc == 3 and "budget" in err

    def test_tiny_subset_budget_exits_3(self):
        rc, _, err = run(["chain", str(DATA / "z4z6.spec"),
                          "--order", "1,2", "--subset-budget", "2"])
        assert rc == 3 and "budget" in err

    def test_chain_on_overlapping_space_exits_1_with_witness(self):
        rc, out, _ = run(["chain", str(DATA / "dup_z2.spec"),
                          "--order", "1,2"])
        assert rc == 1
        assert "chain construction failed" in out

    def test_decompose_on_overlapping_space_exits_1(self):
        rc, out, _ = run(["decompose", str(DATA / "dup_z2.spec")])
        assert rc == 1
        assert "decomposition failed" in out

    def test_argparse_usage_error_exits_2(self):
        rc, _, _ = run(["subspace", str(DATA / "z4z6.spec")])
        assert rc == 2

    def test_seed_flag_accepted_and_ignored(self):
        base = run(["validate", str(DATA / "z4z6.spec"), "--json"])
        seeded = run(["validate", str(DATA / "z4z6.spec"), "--json",
                      "--seed", "7"])
        assert base == seeded


class TestThinShell:
    """CLI verdicts must equal the corresponding library results."""

    def test_subspace_verdict_matches_library(self):
        from multiring import SubsetSelection, is_subspace_t21, load_space
        space = load_space((DATA / "z4z6.spec").read_text())
        cases = [("a0,a2,b0,b3", "1,2"), ("a0,a1", "1"), ("b0,b2,b4", "2")]
        for elements, ops in cases:
            rc, _, _ = run(["subspace", str(DATA / "z4z6.spec"),
                            "--elements", elements, "--ops", ops])
            ids = frozenset(space.universe.id_of(l) for l in elements.split(","))
            want = is_subspace_t21(
                space, SubsetSelection(ids, frozenset(int(k) for k in ops.split(","))))
            assert rc == (0 if want else 1)

    def test_chain_terms_match_library(self):
        from multiring import ideal_subspace_chain, load_space
        space = load_space((DATA / "z4z6.spec").read_text())
        chain = ideal_subspace_chain(space, (1, 2))
        rc, out, _ = run(["chain", str(DATA / "z4z6.spec"),
                          "--order", "1,2", "--json"])
        assert rc == 0
        payload = json.loads(out)
        got = [set(t["elements"]) for t in payload["terms"]]
        want = [{space.universe.label(e) for e in t.elements}
                for t in chain.terms]
        assert got == want
