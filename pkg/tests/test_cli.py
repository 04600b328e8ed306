"""End-to-end command-line behaviour, exit codes, and report formats."""

import json

import pytest

import effalg as ea
from effalg import report as report_mod
from effalg.cli import cover_pairs, main
from effalg.models import dumps

jsonschema = pytest.importorskip("jsonschema")


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


class TestCheck:
    def test_valid_file(self, tmp_path, capsys):
        path = tmp_path / "c3.efa"
        ea.save(ea.chain(3), path)
        code, out, _ = run(capsys, "check", str(path))
        assert code == 0 and "valid effect algebra" in out

    def test_invalid_file_exits_1(self, tmp_path, capsys):
        path = tmp_path / "bad.efa"
        path.write_text("elements: 3\none: 2\n", encoding="utf-8")
        code, out, _ = run(capsys, "check", str(path))
        assert code == 1 and "A3" in out

    def test_parse_error_exits_2(self, tmp_path, capsys):
        path = tmp_path / "junk.efa"
        path.write_text("elements: 3\none: 2\nsum: 1 2 3 4\n", encoding="utf-8")
        code, _, err = run(capsys, "check", str(path))
        assert code == 2 and "line 3" in err

    def test_missing_file_exits_2(self, capsys):
        code, _, err = run(capsys, "check", "/nonexistent/x.efa")
        assert code == 2


class TestExampleAndProps:
    def test_chain_example_props_json(self, tmp_path, capsys):
        path = tmp_path / "c5.efa"
        code, _, _ = run(capsys, "example", "chain", "5", "-o", str(path))
        assert code == 0
        code, out, _ = run(capsys, "props", str(path), "--json")
        assert code == 0
        doc = json.loads(out)
        assert doc["profile"]["atomistic"] is False
        assert doc["profile"]["orthoatomistic"] is True
        jsonschema.validate(doc, report_mod.schema())

    def test_even6_props(self, tmp_path, capsys):
        path = tmp_path / "e6.efa"
        run(capsys, "example", "even_subsets", "6", "-o", str(path))
        code, out, _ = run(capsys, "props", str(path), "--json")
        doc = json.loads(out)
        assert code == 0
        assert doc["profile"]["omp"] is True and doc["profile"]["lattice"] is False

    def test_horizontal_sum_example(self, tmp_path, capsys):
        path = tmp_path / "h.efa"
        code, out, _ = run(capsys, "example", "horizontal_sum", "chain:2", "chain:3",
                           "-o", str(path))
        assert code == 0
        assert ea.load(path).size == 5

    def test_unknown_example_name_exits_2(self, tmp_path, capsys):
        code, _, err = run(capsys, "example", "weird", "3", "-o", str(tmp_path / "x.efa"))
        assert code == 2 and "unknown recipe" in err

    def test_props_on_invalid_model_exits_1(self, tmp_path, capsys):
        path = tmp_path / "bad.efa"
        path.write_text("elements: 3\none: 2\n", encoding="utf-8")
        code, out, _ = run(capsys, "props", str(path), "--json")
        assert code == 1
        doc = json.loads(out)
        assert doc["valid"] is False and doc["profile"] == {}
        jsonschema.validate(doc, report_mod.schema())

    def test_round_trip_for_all_builtins(self, tmp_path, capsys):
        # every family, every parameter in range (large power sets included)
        recipes = [("chain", str(n)) for n in range(1, 65)]
        recipes += [("boolean", str(k)) for k in range(1, 9)]
        recipes += [("even_subsets", str(m)) for m in (2, 4, 6, 8, 10)]
        recipes += [("horizontal_sum", "chain:2", "boolean:2"),
                    ("horizontal_sum", "even_subsets:4", "chain:3")]
        for i, parts in enumerate(recipes):
            path = tmp_path / f"m{i}.efa"
            code, _, _ = run(capsys, "example", *parts, "-o", str(path))
            assert code == 0
            code, _, _ = run(capsys, "check", str(path))
            assert code == 0


class TestGoldenReports:
    @pytest.mark.parametrize("maker,golden", [
        (lambda: ea.chain(5), "chain5.json"),
        (lambda: ea.even_subset_omp(6), "even6.json"),
        (lambda: ea.boolean_algebra(3), "boolean3.json"),
    ])
    def test_golden(self, maker, golden, request):
        alg = maker()
        doc = report_mod.build_report(alg)
        golden_path = request.path.parent / "golden" / golden
        expected = json.loads(golden_path.read_text(encoding="utf-8"))
        assert doc == expected
        jsonschema.validate(doc, report_mod.schema())
        # stable top-level key order
        assert list(doc) == ["model", "valid", "violations", "profile", "witnesses", "theorems"]


class TestHasse:
    def test_dot_output(self, tmp_path, capsys):
        src = tmp_path / "b2.efa"
        ea.save(ea.boolean_algebra(2), src)
        out_path = tmp_path / "b2.dot"
        code, _, _ = run(capsys, "hasse", str(src), "-o", str(out_path))
        assert code == 0
        text = out_path.read_text(encoding="utf-8")
        assert text.startswith("digraph hasse {")
        assert text.count("->") == 4  # the diamond
        assert "lightblue" in text    # atoms marked

    def test_hasse_on_invalid_model_exits_1(self, tmp_path, capsys):
        path = tmp_path / "bad.efa"
        path.write_text("elements: 3\none: 2\n", encoding="utf-8")
        code, _, err = run(capsys, "hasse", str(path), "-o", str(tmp_path / "x.dot"))
        assert code == 1 and "not a valid" in err

    def test_cover_relation_is_transitive_reduction(self, small_corpus):
        for alg in small_corpus:
            covers = set(cover_pairs(alg))
            order = ea.derive_order(alg)
            for a, b in covers:
                assert order.le(a, b) and a != b
            # no edge is implied by two others
            for a, b in covers:
                for c, d in covers:
                    if b == c:
                        assert (a, d) not in covers
            # covers generate the order: transitive closure equals <=
            reach = {a: {a} for a in range(alg.size)}
            changed = True
            while changed:
                changed = False
                for a, b in covers:
                    new = reach[b] - reach[a]
                    if new:
                        reach[a] |= new
                        changed = True
            for a in range(alg.size):
                assert reach[a] == set(order.above(a))


class TestEnumerateCommand:
    def test_counts_and_files(self, tmp_path, capsys):
        out_dir = tmp_path / "models"
        code, out, _ = run(capsys, "enumerate", "--max-size", "4",
                           "--out", str(out_dir), "--verify-theorems")
        assert code == 0
        assert "order 2: 1 models" in out
        assert "order 4: 3 models" in out
        files = sorted(p.name for p in out_dir.glob("*.efa"))
        assert files == ["order2_000.efa", "order3_000.efa",
                         "order4_000.efa", "order4_001.efa", "order4_002.efa"]
        for p in out_dir.glob("*.efa"):
            assert ea.validate(ea.load(p)).valid

    def test_big_gate(self, capsys):
        code, _, err = run(capsys, "enumerate", "--max-size", "7")
        assert code == 2 and "--big" in err

    def test_big_allows_order_seven(self, capsys):
        code, out, _ = run(capsys, "enumerate", "--max-size", "7", "--big")
        assert code == 0
        assert "order 7: 14 models" in out

    def test_verify_theorems_prints_summary_table(self, capsys):
        code, out, _ = run(capsys, "enumerate", "--max-size", "4", "--verify-theorems")
        assert code == 0
        assert "failures: 0" in out
        assert "thm_3_7_finite" in out

    def test_determinism_across_jobs(self, tmp_path, capsys):
        dir1, dir2 = tmp_path / "j1", tmp_path / "j4"
        code1, out1, _ = run(capsys, "enumerate", "--max-size", "5", "--jobs", "1",
                             "--out", str(dir1))
        code2, out2, _ = run(capsys, "enumerate", "--max-size", "5", "--jobs", "4",
                             "--out", str(dir2))
        assert code1 == code2 == 0
        assert out1 == out2
        files1 = sorted(p.name for p in dir1.glob("*.efa"))
        files2 = sorted(p.name for p in dir2.glob("*.efa"))
        assert files1 == files2
        for name in files1:
            assert (dir1 / name).read_bytes() == (dir2 / name).read_bytes()


class TestSearchCommand:
    def test_positive(self, capsys):
        code, out, _ = run(capsys, "search", "--require", "orthoatomistic",
                           "--forbid", "atomistic", "--max-size", "4")
        assert code == 0
        assert "elements: 3" in out

    def test_negative_prints_none_exits_1(self, capsys):
        code, out, _ = run(capsys, "search", "--require", "atomic",
                           "--forbid", "orthoatomistic", "--max-size", "5")
        assert code == 1
        assert out.splitlines()[0] == "none"

    def test_unknown_property_exits_2(self, capsys):
        code, _, err = run(capsys, "search", "--require", "shiny", "--max-size", "4")
        assert code == 2 and "unknown property" in err


class TestWitnessCommand:
    def test_ex39_output(self, capsys):
        code, out, _ = run(capsys, "witness", "ex39")
        assert code == 0
        assert "upper bounds (3):" in out
        assert "minimal upper bounds (2):" in out
        assert "incomparable: yes" in out
        assert "supremum: none" in out

    def test_ex38_output(self, capsys):
        code, out, _ = run(capsys, "witness", "ex38", "--depth", "20")
        assert code == 0
        assert "5': unreachable" in out
        assert "strictly decreasing" in out

    def test_ex34_and_ex36(self, capsys):
        for name in ("ex34", "ex36-meet", "ex36-sup"):
            code, out, _ = run(capsys, "witness", name, "--candidates", "10")
            assert code == 0
            assert "refuted 10/10" in out
            assert "re-verified" in out

    def test_unknown_witness_exits_2(self, capsys):
        code, _, _ = run(capsys, "witness", "ex99")
        assert code == 2

    def test_witness_json_channel(self, capsys):
        code, out, _ = run(capsys, "witness", "ex39", "--json")
        assert code == 0
        doc = json.loads(out)
        jsonschema.validate(doc, report_mod.schema())
        payload = doc["witnesses"]["ex39"]
        assert payload["supremum"] is None
        assert len(payload["upper_bounds"]) == 3
        code, out, _ = run(capsys, "witness", "ex34", "--candidates", "5", "--json")
        doc = json.loads(out)
        assert doc["witnesses"]["ex34"]["refuted"] == 5
        jsonschema.validate(doc, report_mod.schema())


class TestExitCodeThree:
    def test_props_maps_theorem_failure_to_exit_3(self, tmp_path, capsys, monkeypatch):
        # Theorem checks cannot fail on real valid models, so fake one
        # failure to prove the exit-code plumbing.
        import effalg.report as rmod
        from effalg.theorems import CheckResult, TheoremReport, CHECK_IDS as IDS

        def fake_run_all(alg):
            results = {cid: CheckResult("pass") for cid in IDS}
            results["thm_3_2"] = CheckResult("fail", "fabricated")
            return TheoremReport("fake", results)

        monkeypatch.setattr(rmod, "run_all", fake_run_all)
        path = tmp_path / "c3.efa"
        ea.save(ea.chain(3), path)
        code, _, err = run(capsys, "props", str(path), "--json")
        assert code == 3 and "thm_3_2" in err

    def test_invariant_violation_maps_to_exit_3(self, tmp_path, capsys, monkeypatch):
        import effalg.cli as cli_mod

        def explode(path):
            raise ea.InvariantViolation("fabricated decider defect")

        monkeypatch.setattr(cli_mod.models, "load", explode)
        code, _, err = run(capsys, "check", "whatever.efa")
        assert code == 3 and "fabricated" in err


class TestSearchOutputIsLoadable:
    def test_found_model_round_trips(self, tmp_path, capsys):
        code, out, _ = run(capsys, "search", "--require", "orthoatomistic",
                           "--forbid", "atomistic", "--max-size", "4")
        payload = "\n".join(ln for ln in out.splitlines() if not ln.startswith("#"))
        path = tmp_path / "found.efa"
        path.write_text(payload + "\n", encoding="utf-8")
        alg = ea.load(path)
        assert ea.validate(alg).valid
        assert dumps(alg).count("sum:") == 1
