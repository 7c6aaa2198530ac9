import json

import pytest

from heightzeta.algebra import L, LatticePoly
from heightzeta.cli import (
    EXIT_OK,
    EXIT_USAGE,
    main,
    parse_prefactor,
)


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestParsePrefactor:
    def test_default_style(self):
        assert parse_prefactor("u^2*L") == LatticePoly.monomial(2, L)

    def test_bare_u_and_integer(self):
        assert parse_prefactor("3*u") == LatticePoly.monomial(1, 3)

    def test_laurent_exponent_value(self):
        p = parse_prefactor("u^2*L^-2")
        assert p.terms[2].terms == {-2: 1}

    def test_polynomial_factor(self):
        p = parse_prefactor("u^2*(L^12-L^11)")
        assert p == LatticePoly.monomial(2, L ** 12 - L ** 11)

    def test_rejects_garbage(self):
        from heightzeta.cli import UsageError
        with pytest.raises(UsageError):
            parse_prefactor("u^2*q")


class TestCompute:
    def test_json_order_12(self, capsys):
        code, out, _ = run(capsys, "compute", "--catalog", "full",
                           "--order", "12", "--format", "json")
        assert code == EXIT_OK
        payload = json.loads(out)
        assert len(payload["series"]) == 13
        assert payload["t_series"][0] == {
            "n": 0, "terms": [{"u": 2, "L": 1, "c": "1"}]}

    def test_order_zero_is_prefactor_only(self, capsys):
        code, out, _ = run(capsys, "compute", "--catalog", "gamma1_4",
                           "--order", "0", "--format", "json")
        assert code == EXIT_OK
        payload = json.loads(out)
        assert payload["series"] == [
            {"s": 0, "terms": [{"u": 2, "L": 0, "c": "1"}]}]

    def test_check_oracle_passes(self, capsys):
        code, _, _ = run(capsys, "compute", "--catalog", "gamma1_3",
                         "--order", "10", "--format", "json", "--check-oracle")
        assert code == EXIT_OK

    def test_custom_prefactor(self, capsys):
        code, out, _ = run(capsys, "compute", "--catalog", "gamma1_2",
                           "--order", "0", "--format", "json",
                           "--prefactor", "u^2*(L^12-L^11)")
        assert code == EXIT_OK
        payload = json.loads(out)
        assert payload["series"][0]["terms"] == [
            {"u": 2, "L": 11, "c": "-1"}, {"u": 2, "L": 12, "c": "1"}]

    def test_csv_format(self, capsys):
        code, out, _ = run(capsys, "compute", "--catalog", "full",
                           "--order", "1", "--format", "csv")
        assert code == EXIT_OK
        lines = out.strip().splitlines()
        assert lines[0] == "s_degree,u_exp,L_exp,coefficient"
        assert "0,2,1,1" in lines

    def test_json_roundtrip(self, capsys):
        _, out, _ = run(capsys, "compute", "--catalog", "full",
                        "--order", "6", "--format", "json")
        payload = json.loads(out)
        assert json.loads(json.dumps(payload, sort_keys=True)) == payload

    def test_deterministic_output(self, capsys):
        _, first, _ = run(capsys, "compute", "--catalog", "full",
                          "--order", "8", "--format", "json")
        _, second, _ = run(capsys, "compute", "--catalog", "full",
                           "--order", "8", "--format", "json")
        assert first == second


class TestSpecialize:
    def test_point_count_values(self, capsys):
        code, out, _ = run(capsys, "specialize", "--catalog", "full",
                           "--order", "1", "--u", "1", "--L", "2",
                           "--format", "json")
        assert code == EXIT_OK
        payload = json.loads(out)
        assert payload["series"][0]["value"] == "2"
        assert payload["series"][1]["value"] == str(2 ** 17 + 2 ** 18)

    def test_partial_substitution_keeps_L(self, capsys):
        code, out, _ = run(capsys, "specialize", "--catalog", "full",
                           "--order", "1", "--u", "1", "--format", "json")
        assert code == EXIT_OK
        payload = json.loads(out)
        assert payload["series"][1]["terms"] == [
            {"u": 0, "L": 17, "c": "1"}, {"u": 0, "L": 18, "c": "1"}]

    def test_gamma1_4_s6_positive(self, capsys):
        code, out, _ = run(capsys, "specialize", "--catalog", "gamma1_4",
                           "--order", "6", "--u", "1", "--L", "3",
                           "--format", "json")
        assert code == EXIT_OK
        payload = json.loads(out)
        assert int(payload["series"][6]["value"]) > 0

    def test_L_zero_rejected(self, capsys):
        code, _, err = run(capsys, "specialize", "--catalog", "full",
                           "--order", "1", "--L", "0")
        assert code == EXIT_USAGE
        assert "L=0" in err


class TestCensusCommand:
    def test_counts(self, capsys):
        code, out, _ = run(capsys, "census", "--catalog", "full",
                           "--max-degree", "2", "--format", "json")
        assert code == EXIT_OK
        payload = json.loads(out)
        assert [row["count"] for row in payload["degrees"]] == [1, 1, 3]

    def test_flagged_at_twelve(self, capsys):
        code, out, _ = run(capsys, "census", "--catalog", "full",
                           "--max-degree", "12", "--format", "json")
        assert code == EXIT_OK
        payload = json.loads(out)
        flagged = payload["degrees"][12]["flagged"]
        assert any(f["configuration"] == "I_12" for f in flagged)


class TestExportCatalog:
    def test_full_catalog(self, capsys):
        code, out, _ = run(capsys, "export-catalog", "--catalog", "full")
        assert code == EXIT_OK
        payload = json.loads(out)
        assert len(payload["types"]) == 10


class TestUsageErrors:
    def test_unknown_catalog_exits_one(self, capsys):
        with pytest.raises(SystemExit) as exc:
            main(["compute", "--catalog", "bogus", "--order", "4"])
        assert exc.value.code == EXIT_USAGE

    def test_missing_subcommand_exits_one(self, capsys):
        with pytest.raises(SystemExit) as exc:
            main([])
        assert exc.value.code == EXIT_USAGE

    def test_negative_order(self, capsys):
        code, _, err = run(capsys, "compute", "--catalog", "full",
                           "--order", "-3")
        assert code == EXIT_USAGE

    def test_env_var_default_order(self, capsys, monkeypatch):
        monkeypatch.setenv("HEIGHTZETA_ORDER", "2")
        code, out, _ = run(capsys, "compute", "--catalog", "gamma1_4",
                           "--format", "json")
        assert code == EXIT_OK
        assert json.loads(out)["order"] == 2

    def test_env_var_garbage(self, capsys, monkeypatch):
        monkeypatch.setenv("HEIGHTZETA_ORDER", "many")
        code, _, err = run(capsys, "compute", "--catalog", "gamma1_4")
        assert code == EXIT_USAGE
